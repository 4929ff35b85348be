# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from algebra.homology import (
    cokernel,
    factor_through_epi,
    factor_through_mono,
    intertwining_rows,
    kernel,
    unknown_layout,
)
from algebra.module import linear_combination, map_from_vector
from morphism.objects import MorphMap, MorphObject
from models.errors import AlgebraMismatchError


def hom_basis_H(x: MorphObject, y: MorphObject) -> List[MorphMap]:
    """
    Basis of Hom_H((A -f-> B), (C -g-> D)).

    Unknowns are h1 then h2, each flattened row-major per vertex; the equations
    are the intertwining conditions of both and g h1 = h2 f at every vertex.
    """
    if x.algebra is not y.algebra:
        raise AlgebraMismatchError(f"{x.algebra.name} vs {y.algebra.name}")
    f = x.algebra.field
    lay1 = unknown_layout(x.A, y.A)
    lay2 = unknown_layout(x.B, y.B)
    n1, n2 = lay1["__total__"], lay2["__total__"]
    width = n1 + n2
    if width == 0:
        return []
    shifted = {k: v + n1 for k, v in lay2.items()}
    rows = [intertwining_rows(x.A, y.A, lay1, width), intertwining_rows(x.B, y.B, shifted, width)]
    for v in x.algebra.vertices:
        a_v, b_v, c_v, d_v = x.A.dims[v], x.B.dims[v], y.A.dims[v], y.B.dims[v]
        if d_v * a_v == 0:
            continue
        eq = np.zeros((d_v * a_v, width), dtype=np.int64)
        if c_v:
            eq[:, lay1[v] : lay1[v] + c_v * a_v] += np.kron(y.f.blocks[v], np.eye(a_v, dtype=np.int64))
        if b_v:
            eq[:, shifted[v] : shifted[v] + d_v * b_v] -= np.kron(np.eye(d_v, dtype=np.int64), x.f.blocks[v].T)
        rows.append(eq % f.p)
    system = np.vstack(rows)
    solutions = f.kernel(system)
    result = []
    for j in range(solutions.shape[1]):
        vec = solutions[:, j]
        h1 = map_from_vector(x.A, y.A, vec[:n1], check=False)
        h2 = map_from_vector(x.B, y.B, vec[n1:], check=False)
        result.append(MorphMap(x, y, h1, h2, check=False))
    return result


def hom_dim_H(x: MorphObject, y: MorphObject) -> int:
    return len(hom_basis_H(x, y))


def kernel_H(h: MorphMap) -> Tuple[MorphObject, MorphMap]:
    """Componentwise kernel with the restricted structure map."""
    k1, i1 = kernel(h.h1)
    k2, i2 = kernel(h.h2)
    restricted = factor_through_mono(i2, h.source.f.compose(i1))
    k = MorphObject(restricted)
    return k, MorphMap(k, h.source, i1, i2)


def cokernel_H(h: MorphMap) -> Tuple[MorphObject, MorphMap]:
    """Componentwise cokernel with the induced structure map."""
    q1, p1 = cokernel(h.h1)
    q2, p2 = cokernel(h.h2)
    induced = factor_through_epi(p1, p2.compose(h.target.f))
    q = MorphObject(induced)
    return q, MorphMap(h.target, q, p1, p2)


def solve_in_hom_H(
    basis: Sequence[MorphMap], apply: Callable[[MorphMap], MorphMap], target: MorphMap
) -> Optional[np.ndarray]:
    """Coefficients c with apply(sum c_i basis_i) = target, or None."""
    f = target.algebra.field
    if not basis:
        return np.zeros(0, dtype=np.int64) if target.is_zero() else None
    matrix = np.stack([apply(b).to_vector() for b in basis], axis=1)
    if matrix.shape[0] == 0:
        return np.zeros(len(basis), dtype=np.int64)
    return f.solve(matrix, target.to_vector())


def combine_H(basis: Sequence[MorphMap], coeffs, x: MorphObject, y: MorphObject) -> MorphMap:
    h1 = linear_combination([b.h1 for b in basis], coeffs, x.A, y.A)
    h2 = linear_combination([b.h2 for b in basis], coeffs, x.B, y.B)
    return MorphMap(x, y, h1, h2, check=False)


def lift_H(epi: MorphMap, t: MorphMap) -> Optional[MorphMap]:
    """Some u with epi ∘ u = t, or None."""
    basis = hom_basis_H(t.source, epi.source)
    c = solve_in_hom_H(basis, lambda b: epi.compose(b), t)
    return None if c is None else combine_H(basis, c, t.source, epi.source)


def extend_H(mono: MorphMap, t: MorphMap) -> Optional[MorphMap]:
    """Some u with u ∘ mono = t, or None."""
    basis = hom_basis_H(mono.target, t.target)
    c = solve_in_hom_H(basis, lambda b: b.compose(mono), t)
    return None if c is None else combine_H(basis, c, mono.target, t.target)


def span_rank_H(maps: Sequence[MorphMap]) -> int:
    if not maps:
        return 0
    f = maps[0].algebra.field
    return f.rank(np.stack([h.to_vector() for h in maps], axis=1))
