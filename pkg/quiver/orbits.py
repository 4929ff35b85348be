# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.functors import nakayama_map
from algebra.homology import cokernel
from algebra.module import Module
from ar.catalog import ARCatalog
from ar.decompose import is_indecomposable
from ar.presentations import is_projective, is_self_injective, minimal_projective_presentation, syzygy
from ar.translate import nakayama_inverse, tau
from config import settings
from config.types import OrbitFamily, StableFunctor
from models.errors import HypothesisError
from models.types import CheckRow, OrbitRow
from morphism.classify import is_injective_H, is_projective_H
from morphism.decompose import is_indecomposable_H, is_isomorphic_H
from morphism.functors import cover_object, envelope_object, presentation_object, tau_H_general
from morphism.labels import object_label
from morphism.objects import MorphObject, identity_object, to_zero, zero_object, zero_to
from quiver.stable import stable_functor


@dataclass
class OrbitRecord:
    """Signed iterates τ_H^i x for |i| up to a bound, with the least period when one was found."""

    base: MorphObject
    iterates: Dict[int, MorphObject] = field(default_factory=dict)
    period: Optional[int] = None

    def consistent(self) -> bool:
        """A period m must carry every computed iterate i to an isomorphic iterate i + m."""
        if self.period is None:
            return True
        return all(
            is_isomorphic_H(x, self.iterates[i + self.period])
            for i, x in self.iterates.items()
            if i + self.period in self.iterates
        )


def _require_non_projective(c: Module, what: str) -> None:
    if c.is_zero() or not is_indecomposable(c) or is_projective(c):
        raise HypothesisError(f"{what} indecomposable non-projective", repr(c))


def _validate(x: MorphObject, family: OrbitFamily) -> None:
    if not is_self_injective(x.algebra):
        raise HypothesisError("self-injective algebra", x.algebra.name)
    if family == OrbitFamily.TYPE1_0C:
        if not x.A.is_zero():
            raise HypothesisError("object of shape (0 -> C)", repr(x))
        _require_non_projective(x.B, "C")
    elif family == OrbitFamily.TYPE1_C1C:
        if not x.f.is_iso():
            raise HypothesisError("object of shape (C = C)_1", repr(x))
        _require_non_projective(x.A, "C")
    elif family == OrbitFamily.TYPE1_C0:
        if not x.B.is_zero():
            raise HypothesisError("object of shape (C -> 0)", repr(x))
        _require_non_projective(x.A, "C")
    elif family == OrbitFamily.TYPE2_PQ:
        if not is_projective(x.A) or not is_projective(x.B):
            raise HypothesisError("projective components", repr(x))
        if not is_indecomposable_H(x) or is_projective_H(x) or is_injective_H(x):
            raise HypothesisError("indecomposable object neither projective nor injective", repr(x))
    elif family == OrbitFamily.TYPE3_COVER:
        _require_non_projective(x.B, "C")
        if not is_isomorphic_H(x, cover_object(x.B)):
            raise HypothesisError("projective cover (P -> C)", repr(x))
    elif family == OrbitFamily.TYPE4_ENVELOPE:
        _require_non_projective(x.A, "C")
        if not is_isomorphic_H(x, envelope_object(x.A)):
            raise HypothesisError("injective envelope (C -> I)", repr(x))


def _zero_c_table(c: Module, i: int) -> MorphObject:
    if i >= 0:
        m, k = divmod(i, 4)
        d = stable_functor(c, StableFunctor.A, m)
        if k == 0:
            return zero_to(d)
        if k == 1:
            return identity_object(tau(d))
        if k == 2:
            return to_zero(tau(d, 2))
        return MorphObject(nakayama_map(minimal_projective_presentation(tau(d, 2)).g))
    m, k = divmod(-i, 4)
    d = stable_functor(c, StableFunctor.A, -m)
    if k == 0:
        return zero_to(d)
    if k == 1:
        return presentation_object(tau(d, -1))
    if k == 2:
        return to_zero(nakayama_inverse(tau(d, -1)))
    return identity_object(tau(nakayama_inverse(tau(d, -1)), -1))


def _cover_table(c: Module, i: int) -> MorphObject:
    m, k = divmod(abs(i), 2)
    d = stable_functor(c, StableFunctor.B, m if i >= 0 else -m)
    if k == 0:
        return cover_object(d)
    if i > 0:
        return envelope_object(tau(d))
    return envelope_object(syzygy(tau(d, -1), 1))


def orbit_closed_form(x: MorphObject, family: OrbitFamily, i: int) -> MorphObject:
    """
    The i-th τ_H-iterate of x read off the closed-form case tables, without iterating τ_H.

    Args:
        x (MorphObject): An object of the family's shape over a self-injective algebra.
        family (OrbitFamily): Which table to use.
        i (int): Signed iterate index.

    Returns:
        MorphObject: τ_H^i x up to isomorphism.

    Raises:
        HypothesisError: If Λ is not self-injective or x does not have the family's shape.

    Process:
        1. The (0 -> C) family walks four steps per application of A = τντ².
        2. The cover family alternates cover and envelope per application of B = τΩ^{-1}τ.
        3. The remaining families are index shifts of those two tables.
    """
    _validate(x, family)
    if i == 0:
        return x
    if family == OrbitFamily.TYPE1_0C:
        return _zero_c_table(x.B, i)
    if family == OrbitFamily.TYPE1_C1C:
        return _zero_c_table(tau(x.A, -1), i + 1)
    if family == OrbitFamily.TYPE1_C0:
        return _zero_c_table(tau(x.A, -2), i + 2)
    if family == OrbitFamily.TYPE2_PQ:
        return _zero_c_table(tau(cokernel(x.f)[0]), i - 1)
    if family == OrbitFamily.TYPE3_COVER:
        return _cover_table(x.B, i)
    return _cover_table(tau(x.A, -1), i + 1)


def periodicity(x: MorphObject, bound: Optional[int] = None) -> Optional[int]:
    """Least m <= bound with τ_H^m x ≅ x; None for projective x or when no period is found."""
    bound = bound or settings.PERIOD_BOUND
    if x.is_zero() or is_projective_H(x):
        logging.warning(f"[periodicity] τ_H is undefined on {x!r}")
        return None
    current = x
    for m in range(1, bound + 1):
        current = tau_H_general(current)
        if current.is_zero():
            return None
        if is_isomorphic_H(current, x):
            return m
    logging.info(f"[periodicity] no period up to {bound} for {object_label(x)}")
    return None


def orbit_record(x: MorphObject, bound: int = 8, period_bound: Optional[int] = None) -> OrbitRecord:
    """Iterates τ_H^i x for |i| <= bound, each side computed incrementally, plus the period."""
    record = OrbitRecord(base=x, iterates={0: x})
    for sign in (1, -1):
        current = x
        for i in range(1, bound + 1):
            current = tau_H_general(current, sign)
            if current.is_zero():
                break
            record.iterates[sign * i] = current
    record.period = periodicity(x, period_bound)
    return record


def orbit_rows(x: MorphObject, family: OrbitFamily, bound: int = 8) -> List[OrbitRow]:
    """Direct iterates next to the case-table values for -bound <= i <= bound."""
    record = orbit_record(x, bound)
    rows: List[OrbitRow] = []
    for i in range(-bound, bound + 1):
        general = record.iterates.get(i, zero_object(x.algebra))
        closed = orbit_closed_form(x, family, i)
        rows.append(
            {
                "index": i,
                "general": object_label(general),
                "closed_form": object_label(closed),
                "agree": is_isomorphic_H(general, closed),
            }
        )
    return rows


def family_objects(module_catalog: ARCatalog) -> List[Tuple[OrbitFamily, MorphObject]]:
    """One representative per family and indecomposable non-projective module C."""
    if not is_self_injective(module_catalog.algebra):
        raise HypothesisError("self-injective algebra", module_catalog.algebra.name)
    found = []
    for i, c in enumerate(module_catalog.modules):
        if module_catalog.projective[i]:
            continue
        found.extend(
            [
                (OrbitFamily.TYPE1_0C, zero_to(c)),
                (OrbitFamily.TYPE1_C1C, identity_object(c)),
                (OrbitFamily.TYPE1_C0, to_zero(c)),
                (OrbitFamily.TYPE2_PQ, presentation_object(c)),
                (OrbitFamily.TYPE3_COVER, cover_object(c)),
                (OrbitFamily.TYPE4_ENVELOPE, envelope_object(c)),
            ]
        )
    return found


def orbit_agreement_rows(module_catalog: ARCatalog, bound: int = 8) -> List[CheckRow]:
    """Case tables against direct iteration on every family representative."""
    algebra = module_catalog.algebra.name

    def check(item: Tuple[OrbitFamily, MorphObject]) -> CheckRow:
        family, x = item
        rows = orbit_rows(x, family, bound)
        bad = [str(r["index"]) for r in rows if not r["agree"]]
        return {
            "section": "quiver",
            "check": f"orbit_closed_form[{family.value}]",
            "algebra": algebra,
            "passed": not bad,
            "detail": f"{object_label(x)}: {len(rows) - len(bad)}/{len(rows)} indices agree",
            "witness": ", ".join(bad) or None,
        }

    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        return list(executor.map(check, family_objects(module_catalog)))


def period_rows(module_catalog: ARCatalog, bound: Optional[int] = None) -> List[CheckRow]:
    """
    Least periods of the family representatives.

    A row passes when a period within the bound exists; a period other than 4 is
    flagged in the detail and logged.
    """
    algebra = module_catalog.algebra.name

    def check(item: Tuple[OrbitFamily, MorphObject]) -> CheckRow:
        family, x = item
        label = object_label(x)
        period = periodicity(x, bound)
        detail = f"{label}: period {period}"
        if period is not None and period != 4:
            detail += " (flagged: differs from 4)"
            logging.warning(f"[period_rows] {label} over {algebra} has period {period}")
        return {
            "section": "quiver",
            "check": f"period[{family.value}]",
            "algebra": algebra,
            "passed": period is not None,
            "detail": detail,
            "witness": None if period is not None else label,
        }

    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        return list(executor.map(check, family_objects(module_catalog)))
