# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import List, Optional, Tuple

from algebra.homology import find_isomorphism, is_isomorphic
from ar.decompose import decompose, is_indecomposable
from morphism.objects import MorphMap, MorphObject, direct_sum_H
from morphism.t2 import upsilon, upsilon_inverse, upsilon_inverse_map


def decompose_H(x: MorphObject) -> List[Tuple[MorphObject, int]]:
    """Indecomposable summands of an object with multiplicities, through Υ."""
    return [(upsilon_inverse(m, x.algebra), k) for m, k in decompose(upsilon(x))]


def summands_H(x: MorphObject) -> List[MorphObject]:
    return [s for s, k in decompose_H(x) for _ in range(k)]


def is_indecomposable_H(x: MorphObject) -> bool:
    return is_indecomposable(upsilon(x))


def is_isomorphic_H(x: MorphObject, y: MorphObject) -> bool:
    if x.algebra is not y.algebra or x.dims != y.dims:
        return False
    return is_isomorphic(upsilon(x), upsilon(y))


def find_isomorphism_H(x: MorphObject, y: MorphObject) -> Optional[MorphMap]:
    if x.algebra is not y.algebra or x.dims != y.dims:
        return None
    iso = find_isomorphism(upsilon(x), upsilon(y))
    if iso is None:
        return None
    h = upsilon_inverse_map(iso, x.algebra)
    return MorphMap(x, y, h.h1, h.h2)


def reassemble_H(parts: List[MorphObject], algebra) -> MorphObject:
    return direct_sum_H(parts, algebra)[0]
