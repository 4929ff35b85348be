# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging

from ar.sequences import is_right_almost_split
from models.errors import HypothesisError
from morphism.catalog import HCatalog
from morphism.decompose import is_indecomposable_H, is_isomorphic_H
from morphism.functors import tau_H_general
from morphism.t2 import upsilon_map
from sequences.hsequence import HSequence


def is_almost_split_H(seq: HSequence, catalog: HCatalog) -> bool:
    """
    Decides whether seq is an almost split sequence of H(Λ).

    Args:
        seq (HSequence): The candidate sequence.
        catalog (HCatalog): Complete list of indecomposable objects of H(Λ).

    Returns:
        bool: True when seq is exact, non-split, has indecomposable end terms and its
        right map is right almost split against every catalogued object.

    Raises:
        HypothesisError: If an end term is missing from the catalog.
    """
    if not seq.is_exact():
        logging.info(f"[is_almost_split_H] {seq.name}: not exact")
        return False
    if not is_indecomposable_H(seq.source) or not is_indecomposable_H(seq.target):
        logging.info(f"[is_almost_split_H] {seq.name}: decomposable end term")
        return False
    for end in (seq.source, seq.target):
        if catalog.index_of(end) is None:
            raise HypothesisError("complete H-catalog", f"{end!r} is not catalogued")
    if seq.is_split():
        logging.info(f"[is_almost_split_H] {seq.name}: splits")
        return False
    return is_right_almost_split(upsilon_map(seq.right), catalog.t2.modules)


def is_translate_consistent(seq: HSequence) -> bool:
    """τ_H of the end term is isomorphic to the start term."""
    return is_isomorphic_H(tau_H_general(seq.target), seq.source)
