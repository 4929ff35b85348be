# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from algebra.homology import direct_sum, hom_basis, image, kernel
from algebra.module import Module, ModuleMap, identity, linear_combination
from config import settings
from linalg import Matrix, PrimeField


class Decomposition:
    """
    Krull–Schmidt decomposition: indecomposable summands with multiplicities.

    Summands are ordered by total dimension, then dimension vector, then first
    appearance.
    """

    def __init__(self, summands: Sequence[Tuple[Module, int]], certified: bool = True):
        self.summands: List[Tuple[Module, int]] = list(summands)
        self.certified = certified

    def modules(self) -> List[Module]:
        """Summands expanded by multiplicity."""
        return [m for m, k in self.summands for _ in range(k)]

    @property
    def count(self) -> int:
        return sum(k for _, k in self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self) -> Iterator[Tuple[Module, int]]:
        return iter(self.summands)

    def same_multiset(self, other: "Decomposition") -> bool:
        """True when both decompositions list the same iso-classes with equal multiplicities."""
        if self.count != other.count:
            return False
        remaining = list(other.summands)
        for m, k in self.summands:
            for idx, (n, j) in enumerate(remaining):
                if j == k and is_isomorphic_indecomposable(m, n):
                    del remaining[idx]
                    break
            else:
                return False
        return not remaining

    def reconstruct(self) -> Module:
        modules = self.modules()
        if not modules:
            raise ValueError("empty decomposition has no algebra to rebuild over")
        return direct_sum(modules)[0]

    def __repr__(self) -> str:
        parts = [f"{m.dim_vector}^{k}" if k > 1 else f"{m.dim_vector}" for m, k in self.summands]
        return f"Decomposition([{', '.join(parts)}])"


def is_isomorphic_indecomposable(m: Module, n: Module) -> bool:
    """Iso test for indecomposables: some basis element of Hom(M, N) is a unit."""
    if m.algebra is not n.algebra or m.dim_vector != n.dim_vector:
        return False
    if m == n:
        return True
    return any(h.is_iso() for h in hom_basis(m, n))


# ---- local endomorphism rings --------------------------------------------


def _flat(h: ModuleMap) -> Matrix:
    return h.matrix()


def _scalar_candidates(f: PrimeField, a: Matrix) -> List[int]:
    n = a.shape[0]
    if f.p <= 31:
        return list(range(f.p))
    candidates = [0, 1]
    if n % f.p:
        trace_guess = int(np.trace(a) % f.p) * f.inv_scalar(n % f.p) % f.p
        candidates.insert(0, trace_guess)
    return candidates


def _nilpotent_shift(f: PrimeField, a: Matrix) -> Optional[int]:
    """The scalar c with a - c·1 nilpotent, if one exists among the candidates."""
    n = a.shape[0]
    for c in _scalar_candidates(f, a):
        if f.is_nilpotent(f.sub(a, f.scale(f.eye(n), c))):
            return c
    return None


def local_radical(m: Module, basis: Optional[List[ModuleMap]] = None) -> Optional[List[ModuleMap]]:
    """
    Spanning set of rad End(M) when End(M) is local, otherwise None.

    Each basis endomorphism is shifted by the scalar making it nilpotent; the
    span J of the shifts is then checked to be a nilpotent ideal by computing
    J, J^2, ... until it vanishes.

    Args:
        m (Module): A nonzero module.
        basis (Optional[List[ModuleMap]]): A basis of End(M), when already known.

    Returns:
        Optional[List[ModuleMap]]: Nilpotent endomorphisms spanning rad End(M).
    """
    f = m.field
    basis = basis if basis is not None else hom_basis(m, m)
    n = m.total_dim
    if n == 0:
        return None
    ident = identity(m)
    shifts = []
    for phi in basis:
        c = _nilpotent_shift(f, _flat(phi))
        if c is None:
            return None
        shifted = phi - ident.scale(c)
        if not shifted.is_zero():
            shifts.append(shifted)
    if not shifts:
        return []
    flats = [_flat(h) for h in shifts]
    layer = flats
    for _ in range(n + 1):
        products = [f.mul(a, b) for a in layer for b in flats]
        products = [x for x in products if x.any()]
        if not products:
            return shifts
        span = np.stack([x.reshape(-1) for x in flats], axis=1)
        if not f.contains(span, np.stack([x.reshape(-1) for x in products], axis=1)):
            return None
        cols = f.column_basis(np.stack([x.reshape(-1) for x in products], axis=1))
        layer = [cols[:, j].reshape(n, n) for j in range(cols.shape[1])]
    return None


def is_local(m: Module) -> bool:
    return not m.is_zero() and local_radical(m) is not None


# ---- Fitting splitting ---------------------------------------------------


def _candidates(basis: List[ModuleMap], m: Module) -> Iterator[ModuleMap]:
    p, d = m.algebra.p, len(basis)
    yield from basis
    for i, j in itertools.combinations(range(d), 2):
        yield basis[i] + basis[j]
    if p**d <= settings.EXHAUSTIVE_LIMIT:
        for coeffs in itertools.product(range(p), repeat=d):
            if sum(1 for c in coeffs if c) >= 2:
                yield linear_combination(basis, coeffs, m, m)
        return
    rng = np.random.default_rng(settings.SEED)
    for _ in range(settings.RANDOM_TRIALS):
        yield linear_combination(basis, rng.integers(0, p, size=d), m, m)


def find_splitting_endomorphism(m: Module, basis: List[ModuleMap]) -> Optional[ModuleMap]:
    """An endomorphism that is neither nilpotent nor invertible, if the search finds one."""
    f = m.field
    ident = identity(m)
    shifts = list(range(f.p)) if f.p <= 31 else [0, 1]
    for phi in _candidates(basis, m):
        for c in shifts:
            psi = phi - ident.scale(c) if c else phi
            a = _flat(psi)
            if not f.is_invertible(a) and not f.is_nilpotent(a):
                return psi
    return None


def fitting_split(psi: ModuleMap) -> Tuple[Module, Module]:
    """M = Ker ψ^n ⊕ Im ψ^n for n = dim M."""
    power = identity(psi.source)
    for _ in range(psi.source.total_dim):
        power = psi.compose(power)
    k, _ = kernel(power)
    im, _, _ = image(power)
    return k, im


def _split(m: Module) -> Tuple[List[Module], bool]:
    if m.is_zero():
        return [], True
    basis = hom_basis(m, m)
    if len(basis) == 1 or local_radical(m, basis) is not None:
        return [m], True
    psi = find_splitting_endomorphism(m, basis)
    if psi is None:
        logging.warning(f"[decompose] no splitting found for {m.dim_vector}; indecomposability uncertified")
        return [m], False
    left, right = fitting_split(psi)
    parts_left, ok_left = _split(left)
    parts_right, ok_right = _split(right)
    return parts_left + parts_right, ok_left and ok_right


def decompose(m: Module) -> Decomposition:
    """
    Decomposes M into indecomposables, grouping isomorphic summands.

    Returns:
        Decomposition: Summands with multiplicities; ``certified`` is False when some
            summand could be neither split nor proven local.
    """
    parts, certified = _split(m)
    groups: List[List] = []
    for part in parts:
        for group in groups:
            if is_isomorphic_indecomposable(group[0], part):
                group[1] += 1
                break
        else:
            groups.append([part, 1])
    groups.sort(key=lambda g: (g[0].total_dim, g[0].dim_vector))
    return Decomposition([(g[0], g[1]) for g in groups], certified=certified)


def is_indecomposable(m: Module) -> bool:
    if m.is_zero():
        return False
    parts, _ = _split(m)
    return len(parts) == 1
