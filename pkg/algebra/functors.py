# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from algebra.homology import direct_sum, radical
from algebra.module import Module, ModuleMap, zero_module
from algebra.quiver_algebra import BoundQuiverAlgebra, Path
from models.errors import HypothesisError

Tops = Tuple[str, ...]
"""Top vertices of a standard projective P(v_1) + ... + P(v_k), with repetition."""


def simple(algebra: BoundQuiverAlgebra, vertex: str) -> Module:
    return Module(algebra, {vertex: 1}, check=False)


def _indecomposable_projective(algebra: BoundQuiverAlgebra, vertex: str) -> Module:
    """P(v): at w the basis paths v -> w; an arrow appends itself to each path."""
    dims = {w: len(algebra.paths_between(vertex, w)) for w in algebra.vertices}
    matrices = {}
    for a in algebra.quiver.arrows:
        cols = algebra.paths_between(vertex, a.source)
        rows = algebra.paths_between(vertex, a.target)
        m = np.zeros((len(rows), len(cols)), dtype=np.int64)
        step = Path(a.source, a.target, (a.name,))
        for j, idx in enumerate(cols):
            image = algebra.compose(algebra.basis[idx], step)
            m[:, j] = image[rows]
        matrices[a.name] = m
    return Module(algebra, dims, matrices, check=False)


@lru_cache(maxsize=None)
def projective_sum(algebra: BoundQuiverAlgebra, tops: Tops) -> Module:
    """The standard projective with the given tops, summands in the given order."""
    if not tops:
        return zero_module(algebra)
    parts = [_indecomposable_projective(algebra, v) for v in tops]
    return parts[0] if len(parts) == 1 else direct_sum(parts)[0]


def projective(algebra: BoundQuiverAlgebra, vertex: str) -> Module:
    return projective_sum(algebra, (vertex,))


def injective_sum(algebra: BoundQuiverAlgebra, socles: Tops) -> Module:
    """I(v_1) + ... + I(v_k) as D of the opposite standard projective."""
    return dual(projective_sum(algebra.opposite(), tuple(socles)))


def injective(algebra: BoundQuiverAlgebra, vertex: str) -> Module:
    return injective_sum(algebra, (vertex,))


def standard_modules(algebra: BoundQuiverAlgebra) -> Dict[str, List[Module]]:
    return {
        "simple": [simple(algebra, v) for v in algebra.vertices],
        "projective": [projective(algebra, v) for v in algebra.vertices],
        "injective": [injective(algebra, v) for v in algebra.vertices],
    }


# ---- duality -------------------------------------------------------------


def dual(m: Module) -> Module:
    """D M = Hom_k(M, k) over the opposite algebra: every matrix is transposed."""
    op = m.algebra.opposite()
    return Module(op, dict(m.dims), {name: mat.T for name, mat in m.matrices.items()}, check=False)


def dual_map(h: ModuleMap) -> ModuleMap:
    """D h: D N -> D M for h: M -> N."""
    return ModuleMap(
        dual(h.target),
        dual(h.source),
        {v: b.T for v, b in h.blocks.items()},
        check=False,
    )


# ---- elements of standard projectives --------------------------------------


def layout(algebra: BoundQuiverAlgebra, tops: Tops, vertex: str) -> List[Tuple[int, int]]:
    """(summand, basis index) of each coordinate of P(tops) at `vertex`."""
    return [(i, idx) for i, v in enumerate(tops) for idx in algebra.paths_between(v, vertex)]


def map_from_elements(
    algebra: BoundQuiverAlgebra, tops: Tops, target: Module, elements: Sequence[np.ndarray]
) -> ModuleMap:
    """
    The map P(tops) -> M sending the top idempotent of summand i to elements[i] in M_{v_i}.

    Args:
        algebra (BoundQuiverAlgebra): Algebra of both modules.
        tops (Tops): Summand tops v_i.
        target (Module): The module M.
        elements (Sequence[np.ndarray]): One vector of M_{v_i} per summand.

    Returns:
        ModuleMap: The induced homomorphism.
    """
    f = algebra.field
    source = projective_sum(algebra, tops)
    blocks = {}
    for w in algebra.vertices:
        cols = []
        for i, v in enumerate(tops):
            x = np.asarray(elements[i], dtype=np.int64).reshape(-1, 1)
            for idx in algebra.paths_between(v, w):
                cols.append(f.mul(target.path_matrix(algebra.basis[idx]), x))
        blocks[w] = np.hstack(cols) if cols else f.zeros(target.dims[w], 0)
    return ModuleMap(source, target, blocks)


def extract_elements(tops: Tops, h: ModuleMap) -> List[np.ndarray]:
    """Images of the top idempotents under h: P(tops) -> M."""
    algebra = h.algebra
    result = []
    for i, v in enumerate(tops):
        column = layout(algebra, tops, v).index((i, algebra.idempotent[v]))
        result.append(h.blocks[v][:, column].copy())
    return result


def coefficients(algebra: BoundQuiverAlgebra, source_tops: Tops, target_tops: Tops, h: ModuleMap) -> np.ndarray:
    """
    Path coefficients of a map between standard projectives.

    Returns:
        np.ndarray: lam of shape (len(target_tops), len(source_tops), dim), lam[j, i]
            being the component in P(u_j) of the image of e_{v_i}, as algebra coordinates.
    """
    lam = np.zeros((len(target_tops), len(source_tops), algebra.dim), dtype=np.int64)
    for i, (v, x) in enumerate(zip(source_tops, extract_elements(source_tops, h))):
        for coord, (j, idx) in zip(x, layout(algebra, target_tops, v)):
            lam[j, i, idx] = coord
    return lam


def map_from_coefficients(
    algebra: BoundQuiverAlgebra, source_tops: Tops, target_tops: Tops, lam: np.ndarray
) -> ModuleMap:
    target = projective_sum(algebra, target_tops)
    elements = []
    for i, v in enumerate(source_tops):
        elements.append(
            np.array([lam[j, i, idx] for j, idx in layout(algebra, target_tops, v)], dtype=np.int64)
        )
    return map_from_elements(algebra, source_tops, target, elements)


# ---- projective covers of arbitrary modules ----------------------------------


def top_generators(m: Module) -> Tuple[Tops, List[np.ndarray]]:
    """
    Elements of M lifting a basis of top M, grouped in vertex order.

    Returns:
        Tuple[Tops, List[np.ndarray]]: Vertex of each generator and the generator vectors.
    """
    f = m.field
    _, incl = radical(m)
    tops, gens = [], []
    for v in m.algebra.vertices:
        complement, _ = f.quotient_projection(incl.blocks[v], m.dims[v])
        for j in range(complement.shape[1]):
            tops.append(v)
            gens.append(complement[:, j].copy())
    return tuple(tops), gens


def generators_cover(m: Module) -> Tuple[Tops, ModuleMap]:
    """The projective cover P(tops) -> M induced by the top generators."""
    tops, gens = top_generators(m)
    return tops, map_from_elements(m.algebra, tops, m, gens)


def standard_iso(p: Module) -> Tuple[Tops, ModuleMap]:
    """
    Isomorphism P(tops) -> P for a projective module P.

    Raises:
        HypothesisError: If the module is not projective.
    """
    tops, alpha = generators_cover(p)
    if not alpha.is_iso():
        raise HypothesisError("projective module", f"{p!r} is not projective")
    return tops, alpha


# ---- the functor (-)* = Hom(-, A) on projectives ---------------------------


def star_standard(
    algebra: BoundQuiverAlgebra, source_tops: Tops, target_tops: Tops, h: ModuleMap
) -> ModuleMap:
    """h*: P^op(target_tops) -> P^op(source_tops) for h: P(source_tops) -> P(target_tops)."""
    op = algebra.opposite()
    lam = coefficients(algebra, source_tops, target_tops, h)
    rev = algebra.reversal_matrix
    lam_op = np.zeros((len(source_tops), len(target_tops), op.dim), dtype=np.int64)
    for j in range(len(target_tops)):
        for i in range(len(source_tops)):
            if lam[j, i].any():
                lam_op[i, j] = (rev @ lam[j, i]) % algebra.p
    return map_from_coefficients(op, target_tops, source_tops, lam_op)


def star_module(p: Module) -> Module:
    """P* as the standard opposite projective with the tops of P."""
    tops, _ = standard_iso(p)
    return projective_sum(p.algebra.opposite(), tops)


def star_map(h: ModuleMap) -> ModuleMap:
    """
    h*: Q* -> P* for a map h: P -> Q of projective modules.

    Both sides are identified with standard projectives through the cover
    isomorphisms of standard_iso, which makes (-)* strictly functorial.
    """
    source_tops, alpha = standard_iso(h.source)
    target_tops, beta = standard_iso(h.target)
    g = beta.inverse().compose(h.compose(alpha))
    return star_standard(h.algebra, source_tops, target_tops, g)


def nakayama(p: Module) -> Module:
    """ν P = D(P*), an injective module."""
    return dual(star_module(p))


def nakayama_map(h: ModuleMap) -> ModuleMap:
    """ν h = D(h*)."""
    return dual_map(star_map(h))


def nakayama_inverse_injective(i: Module) -> Module:
    """ν^{-1} I = (D I)*, computed over the opposite algebra."""
    return star_module(dual(i))


def nakayama_inverse_map(h: ModuleMap) -> ModuleMap:
    """ν^{-1} h = (D h)* for a map between injective modules."""
    return star_map(dual_map(h))


# ---- local uniserial algebras k[x]/(x^n) -----------------------------------


def _single_loop(algebra: BoundQuiverAlgebra):
    arrows = algebra.quiver.arrows
    if len(algebra.vertices) != 1 or len(arrows) != 1:
        raise HypothesisError("local uniserial algebra", f"{algebra.name} is not k[x]/(x^n)")
    return algebra.vertices[0], arrows[0]


def uniserial_module(algebra: BoundQuiverAlgebra, length: int) -> Module:
    """k[x]/(x^length) over k[x]/(x^n), with x acting as the lower shift."""
    vertex, loop = _single_loop(algebra)
    if not 0 <= length <= algebra.dim:
        raise HypothesisError("uniserial length", f"{length} is outside 0..{algebra.dim}")
    shift = np.zeros((length, length), dtype=np.int64)
    for i in range(length - 1):
        shift[i + 1, i] = 1
    return Module(algebra, {vertex: length}, {loop.name: shift})


def loop_power_map(algebra: BoundQuiverAlgebra, power: int) -> ModuleMap:
    """Multiplication by x^power on the regular module of k[x]/(x^n)."""
    vertex, loop = _single_loop(algebra)
    element = algebra.reduce_path(Path(vertex, vertex, (loop.name,) * power))
    tops = (vertex,)
    coords = np.array([element[idx] for _, idx in layout(algebra, tops, vertex)], dtype=np.int64)
    regular = projective_sum(algebra, tops)
    return map_from_elements(algebra, tops, regular, [coords])
