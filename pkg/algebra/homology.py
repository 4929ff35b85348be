# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import itertools
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra.module import (
    Module,
    ModuleMap,
    identity,
    linear_combination,
    map_from_vector,
    zero_map,
    zero_module,
)
from algebra.quiver_algebra import BoundQuiverAlgebra
from config import settings
from linalg import Matrix
from models.errors import AlgebraMismatchError, VerificationError


def _same_algebra(m: Module, n: Module) -> None:
    if m.algebra is not n.algebra:
        raise AlgebraMismatchError(f"{m.algebra.name} vs {n.algebra.name}")


def unknown_layout(m: Module, n: Module) -> Dict[str, int]:
    """Offset of each vertex block of an unknown map m -> n in its flattened vector."""
    offsets, start = {}, 0
    for v in m.algebra.vertices:
        offsets[v] = start
        start += n.dims[v] * m.dims[v]
    offsets["__total__"] = start
    return offsets


def intertwining_rows(m: Module, n: Module, layout: Dict[str, int], width: int) -> Matrix:
    """
    Linear equations n_a h_v - h_w m_a = 0 on the flattened unknowns of a map m -> n.

    Args:
        m (Module): Source.
        n (Module): Target.
        layout (Dict[str, int]): Offsets of the unknown blocks within the full vector.
        width (int): Total number of unknowns (may exceed this map's own block).

    Returns:
        Matrix: One row per scalar equation.
    """
    f = m.field
    blocks = []
    for a in m.algebra.quiver.arrows:
        v, w = a.source, a.target
        mv, nv, mw, nw = m.dims[v], n.dims[v], m.dims[w], n.dims[w]
        rows = nw * mv
        if rows == 0:
            continue
        eq = np.zeros((rows, width), dtype=np.int64)
        if nv * mv:
            eq[:, layout[v] : layout[v] + nv * mv] += np.kron(n.matrices[a.name], np.eye(mv, dtype=np.int64))
        if nw * mw:
            eq[:, layout[w] : layout[w] + nw * mw] -= np.kron(np.eye(nw, dtype=np.int64), m.matrices[a.name].T)
        blocks.append(eq % f.p)
    if not blocks:
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(blocks)


def hom_basis(m: Module, n: Module) -> List[ModuleMap]:
    """
    Basis of Hom(M, N) as the solution space of the intertwining equations.

    Args:
        m (Module): Source module.
        n (Module): Target module.

    Returns:
        List[ModuleMap]: A basis; its length is dim Hom(M, N).

    Raises:
        AlgebraMismatchError: If the modules live over different algebras.
    """
    _same_algebra(m, n)
    layout = unknown_layout(m, n)
    width = layout["__total__"]
    if width == 0:
        return []
    system = intertwining_rows(m, n, layout, width)
    kernel = m.field.kernel(system)
    return [map_from_vector(m, n, kernel[:, j], check=False) for j in range(kernel.shape[1])]


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_basis(m, n))


def coordinates(basis: Sequence[ModuleMap], h: ModuleMap) -> Optional[np.ndarray]:
    """Coefficients of h in the given basis of maps, or None when h is outside its span."""
    f = h.field
    if not basis:
        return np.zeros(0, dtype=np.int64) if h.is_zero() else None
    matrix = np.stack([b.to_vector() for b in basis], axis=1)
    return f.solve(matrix, h.to_vector())


def span_rank(maps: Sequence[ModuleMap], field) -> int:
    if not maps:
        return 0
    return field.rank(np.stack([h.to_vector() for h in maps], axis=1))


# ---- kernels, images, cokernels ------------------------------------------


def submodule(m: Module, bases: Dict[str, Matrix]) -> Tuple[Module, ModuleMap]:
    """
    Submodule spanned per vertex by the given columns (assumed independent).

    Raises:
        VerificationError: If the spaces are not closed under the arrows.
    """
    f = m.field
    dims = {v: bases[v].shape[1] for v in m.algebra.vertices}
    matrices = {}
    for a in m.algebra.quiver.arrows:
        u_v, u_w = bases[a.source], bases[a.target]
        image = f.mul(m.matrices[a.name], u_v)
        x = f.solve_matrix(u_w, image) if u_w.shape[1] else (None if image.any() else f.zeros(0, u_v.shape[1]))
        if x is None:
            raise VerificationError(f"subspace is not closed under arrow {a.name}")
        matrices[a.name] = x
    sub = Module(m.algebra, dims, matrices, check=False)
    return sub, ModuleMap(sub, m, {v: bases[v] for v in m.algebra.vertices}, check=False)


def quotient(m: Module, bases: Dict[str, Matrix]) -> Tuple[Module, ModuleMap]:
    """Quotient by the submodule spanned per vertex by the given columns."""
    f = m.field
    comps, projs = {}, {}
    for v in m.algebra.vertices:
        comps[v], projs[v] = f.quotient_projection(bases[v], m.dims[v])
    dims = {v: comps[v].shape[1] for v in m.algebra.vertices}
    matrices = {
        a.name: f.mul(projs[a.target], f.mul(m.matrices[a.name], comps[a.source]))
        for a in m.algebra.quiver.arrows
    }
    q = Module(m.algebra, dims, matrices, check=False)
    return q, ModuleMap(m, q, projs, check=False)


def kernel(h: ModuleMap) -> Tuple[Module, ModuleMap]:
    f = h.field
    bases = {v: f.kernel(h.blocks[v]) for v in h.algebra.vertices}
    return submodule(h.source, bases)


def image(h: ModuleMap) -> Tuple[Module, ModuleMap, ModuleMap]:
    """Image factorisation h = mono ∘ epi; returns (Im, epi, mono)."""
    f = h.field
    bases = {v: f.column_basis(h.blocks[v]) for v in h.algebra.vertices}
    im, mono = submodule(h.target, bases)
    epi = factor_through_mono(mono, h)
    return im, epi, mono


def cokernel(h: ModuleMap) -> Tuple[Module, ModuleMap]:
    return quotient(h.target, {v: h.blocks[v] for v in h.algebra.vertices})


def factor_through_mono(mono: ModuleMap, t: ModuleMap) -> ModuleMap:
    """The unique u with mono ∘ u = t (t must land in the image of mono)."""
    f = t.field
    blocks = {}
    for v in t.algebra.vertices:
        if mono.blocks[v].shape[1] == 0:
            if t.blocks[v].any():
                raise VerificationError("map does not factor through the monomorphism")
            blocks[v] = f.zeros(0, t.source.dims[v])
            continue
        x = f.solve_matrix(mono.blocks[v], t.blocks[v])
        if x is None:
            raise VerificationError("map does not factor through the monomorphism")
        blocks[v] = x
    return ModuleMap(t.source, mono.source, blocks)


def factor_through_epi(epi: ModuleMap, t: ModuleMap) -> ModuleMap:
    """The unique u with u ∘ epi = t (t must vanish on the kernel of epi)."""
    f = t.field
    blocks = {}
    for v in t.algebra.vertices:
        e, tv = epi.blocks[v], t.blocks[v]
        if e.shape[0] == 0:
            if tv.any():
                raise VerificationError("map does not factor through the epimorphism")
            blocks[v] = f.zeros(tv.shape[0], 0)
            continue
        x = f.solve_matrix(e.T, tv.T)
        if x is None:
            raise VerificationError("map does not factor through the epimorphism")
        blocks[v] = x.T
    return ModuleMap(epi.target, t.target, blocks)


def solve_in_hom(
    basis: Sequence[ModuleMap],
    apply: Callable[[ModuleMap], ModuleMap],
    target: ModuleMap,
) -> Optional[np.ndarray]:
    """
    Finds coefficients c with apply(sum c_i basis_i) = target, apply being linear.

    Returns:
        Optional[np.ndarray]: Coefficients, or None when no solution exists.
    """
    f = target.field
    if not basis:
        return np.zeros(0, dtype=np.int64) if target.is_zero() else None
    matrix = np.stack([apply(b).to_vector() for b in basis], axis=1)
    if matrix.shape[0] == 0:
        return np.zeros(len(basis), dtype=np.int64)
    return f.solve(matrix, target.to_vector())


def lift_through_epi(epi: ModuleMap, t: ModuleMap) -> Optional[ModuleMap]:
    """Some u: X -> Y with epi ∘ u = t, for t: X -> Z and epi: Y -> Z (None if none exists)."""
    basis = hom_basis(t.source, epi.source)
    c = solve_in_hom(basis, lambda b: epi.compose(b), t)
    if c is None:
        return None
    return linear_combination(basis, c, t.source, epi.source)


def extend_through_mono(mono: ModuleMap, t: ModuleMap) -> Optional[ModuleMap]:
    """Some u: Y -> Z with u ∘ mono = t, for t: X -> Z and mono: X -> Y."""
    basis = hom_basis(mono.target, t.target)
    c = solve_in_hom(basis, lambda b: b.compose(mono), t)
    if c is None:
        return None
    return linear_combination(basis, c, mono.target, t.target)


# ---- direct sums ---------------------------------------------------------


def direct_sum(
    modules: Sequence[Module], algebra: Optional[BoundQuiverAlgebra] = None
) -> Tuple[Module, List[ModuleMap], List[ModuleMap]]:
    """
    Biproduct of modules with its injections and projections.

    Args:
        modules (Sequence[Module]): Summands, all over one algebra.
        algebra (Optional[BoundQuiverAlgebra]): Needed only for an empty list.

    Returns:
        Tuple[Module, List[ModuleMap], List[ModuleMap]]: (sum, injections, projections).
    """
    if not modules:
        if algebra is None:
            raise ValueError("direct_sum of no modules needs the algebra")
        return zero_module(algebra), [], []
    alg = modules[0].algebra
    for m in modules:
        _same_algebra(modules[0], m)
    f = alg.field
    dims = {v: sum(m.dims[v] for m in modules) for v in alg.vertices}
    matrices = {}
    for a in alg.quiver.arrows:
        big = f.zeros(dims[a.target], dims[a.source])
        r = c = 0
        for m in modules:
            block = m.matrices[a.name]
            big[r : r + block.shape[0], c : c + block.shape[1]] = block
            r += block.shape[0]
            c += block.shape[1]
        matrices[a.name] = big
    total = Module(alg, dims, matrices, check=False)
    injections, projections = [], []
    starts = {v: 0 for v in alg.vertices}
    for m in modules:
        inj, proj = {}, {}
        for v in alg.vertices:
            e = f.zeros(dims[v], m.dims[v])
            e[starts[v] : starts[v] + m.dims[v], :] = f.eye(m.dims[v])
            inj[v], proj[v] = e, e.T.copy()
            starts[v] += m.dims[v]
        injections.append(ModuleMap(m, total, inj, check=False))
        projections.append(ModuleMap(total, m, proj, check=False))
    return total, injections, projections


def direct_sum_map(maps: Sequence[ModuleMap], source: Module, target: Module) -> ModuleMap:
    """Block-diagonal map between direct sums built by direct_sum (same summand order)."""
    f = source.field
    blocks = {}
    for v in source.algebra.vertices:
        big = f.zeros(target.dims[v], source.dims[v])
        r = c = 0
        for h in maps:
            b = h.blocks[v]
            big[r : r + b.shape[0], c : c + b.shape[1]] = b
            r += b.shape[0]
            c += b.shape[1]
        blocks[v] = big
    return ModuleMap(source, target, blocks)


def matrix_of_maps(
    rows: Sequence[Sequence[ModuleMap]], source: Module, target: Module
) -> ModuleMap:
    """Map between direct sums given by a matrix of component maps rows[j][i]: X_i -> Y_j."""
    f = source.field
    blocks = {}
    for v in source.algebra.vertices:
        stripes = [np.hstack([h.blocks[v] for h in row]) for row in rows if row]
        blocks[v] = np.vstack(stripes) if stripes else f.zeros(target.dims[v], source.dims[v])
    return ModuleMap(source, target, blocks)


# ---- radical, socle, top -------------------------------------------------


def radical(m: Module) -> Tuple[Module, ModuleMap]:
    """rad M: at each vertex, the span of the images of the incoming arrows."""
    f = m.field
    bases = {}
    for w in m.algebra.vertices:
        images = [m.matrices[a.name] for a in m.algebra.quiver.arrows_in[w]]
        stacked = np.hstack(images) if images else f.zeros(m.dims[w], 0)
        bases[w] = f.column_basis(stacked) if stacked.size else f.zeros(m.dims[w], 0)
    return submodule(m, bases)


def socle(m: Module) -> Tuple[Module, ModuleMap]:
    """soc M: at each vertex, the joint kernel of the outgoing arrows."""
    f = m.field
    bases = {}
    for v in m.algebra.vertices:
        outs = [m.matrices[a.name] for a in m.algebra.quiver.arrows_out[v]]
        stacked = np.vstack(outs) if outs else f.zeros(0, m.dims[v])
        bases[v] = f.kernel(stacked)
    return submodule(m, bases)


def top(m: Module) -> Tuple[Module, ModuleMap]:
    rad, incl = radical(m)
    return quotient(m, incl.blocks)


# ---- isomorphism search --------------------------------------------------


def _is_unit(h: ModuleMap) -> bool:
    return all(h.field.is_invertible(b) for b in h.blocks.values())


def find_isomorphism(m: Module, n: Module) -> Optional[ModuleMap]:
    """
    Searches Hom(M, N) for an invertible element.

    Process:
        1. Reject unequal dimension vectors.
        2. Sweep the basis (complete when M and N are indecomposable).
        3. Sweep all elements when the field-element count is at most EXHAUSTIVE_LIMIT.
        4. Otherwise try pairwise sums and RANDOM_TRIALS seeded random combinations.

    Returns:
        Optional[ModuleMap]: An isomorphism, or None when none was found.
    """
    _same_algebra(m, n)
    if m.dim_vector != n.dim_vector:
        return None
    if m.is_zero():
        return zero_map(m, n)
    if m == n:
        return identity(m)
    basis = hom_basis(m, n)
    for h in basis:
        if _is_unit(h):
            return h
    p, d = m.algebra.p, len(basis)
    if d == 0:
        return None
    if p**d <= settings.EXHAUSTIVE_LIMIT:
        for coeffs in itertools.product(range(p), repeat=d):
            if sum(1 for c in coeffs if c) < 2:
                continue
            h = linear_combination(basis, coeffs, m, n)
            if _is_unit(h):
                return h
        return None
    for i, j in itertools.combinations(range(d), 2):
        h = basis[i] + basis[j]
        if _is_unit(h):
            return h
    rng = np.random.default_rng(settings.SEED)
    for _ in range(settings.RANDOM_TRIALS):
        h = linear_combination(basis, rng.integers(0, p, size=d), m, n)
        if _is_unit(h):
            return h
    return None


def is_isomorphic(m: Module, n: Module) -> bool:
    """
    Isomorphism test: direct search first, then comparison of Krull–Schmidt
    decompositions (each pair of indecomposables is settled by a basis sweep).
    """
    if m.algebra is not n.algebra or m.dim_vector != n.dim_vector:
        return False
    if find_isomorphism(m, n) is not None:
        return True
    p, d = m.algebra.p, hom_dim(m, n)
    if d and p**d <= settings.EXHAUSTIVE_LIMIT:
        return False
    from ar.decompose import decompose

    logging.info(f"[is_isomorphic] falling back to decomposition matching for {m.dim_vector}")
    left, right = decompose(m), decompose(n)
    return left.same_multiset(right)
