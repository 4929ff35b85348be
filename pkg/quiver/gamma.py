# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from algebra.quiver_algebra import BoundQuiverAlgebra
from ar.catalog import ar_quiver
from config import settings
from models.errors import VerificationError
from morphism.catalog import HCatalog, h_catalog
from morphism.decompose import is_isomorphic_H
from morphism.functors import tau_H_general
from quiver.translation_quiver import TranslationQuiver


def _tau_disagreements(catalog: HCatalog) -> List[str]:
    """Vertices where the native τ_H differs from the translate read off the T2 catalog."""

    def check(idx: int) -> Optional[str]:
        expected = catalog.objects[catalog.tau(idx)]
        if is_isomorphic_H(tau_H_general(catalog.objects[idx]), expected):
            return None
        return catalog.names[idx]

    pending = [i for i in range(len(catalog)) if not catalog.is_projective(i)]
    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        return [name for name in executor.map(check, pending) if name is not None]


def gamma_H(
    algebra: BoundQuiverAlgebra, dim_cap: Optional[int] = None, cross_check: bool = True
) -> TranslationQuiver:
    """
    The AR quiver of H(Λ), knitted over T2(Λ) and labelled by object shapes.

    Raises:
        CapExceededError: If H(Λ) has an indecomposable beyond the cap.
        VerificationError: If the native τ_H disagrees with the T2 translate somewhere.
    """
    catalog = h_catalog(algebra, dim_cap)
    quiver = ar_quiver(catalog.t2)
    quiver.name = f"H({algebra.name})"
    if cross_check and settings.VERIFY_SEQUENCES:
        bad = _tau_disagreements(catalog)
        if bad:
            logging.error(f"[gamma_H] τ_H disagrees on {', '.join(bad)}")
            raise VerificationError(f"native τ_H differs from the T2 translate on {len(bad)} vertices")
    logging.info(f"[gamma_H] {quiver.name}: {len(quiver.vertices)} vertices, {len(quiver.arrows)} arrows")
    return quiver


def stable_quiver(g: TranslationQuiver) -> TranslationQuiver:
    """Removes every projective and every injective vertex with its arrows."""
    return g.stable()


def stability_check(g: TranslationQuiver) -> bool:
    return g.is_stable()


def connectedness_check(g: TranslationQuiver) -> bool:
    return g.is_connected()
