# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from typing import Dict, List, Optional

from algebra.functors import projective
from algebra.homology import cokernel, is_isomorphic, radical, socle
from ar.catalog import ARCatalog
from ar.presentations import is_injective, is_projective
from ar.translate import tau
from models.types import CheckRow
from morphism.catalog import HCatalog
from morphism.functors import cover_object, envelope_object
from morphism.objects import MorphObject


def _row(algebra: str, check: str, passed: bool, detail: str, witness: Optional[str] = None) -> CheckRow:
    return {
        "section": "middle",
        "check": check,
        "algebra": algebra,
        "passed": passed,
        "detail": detail,
        "witness": witness,
    }


def _bijection_row(
    catalog: HCatalog, check: str, domain: Dict[int, str], codomain: Dict[int, str]
) -> CheckRow:
    """τ_H restricted to the domain class is a bijection onto the codomain class."""
    images = {i: catalog.tau(i) for i in domain}
    missing = [domain[i] for i, j in images.items() if j not in codomain]
    hit = set(images.values())
    passed = not missing and len(hit) == len(domain) and hit == set(codomain)
    detail = f"{len(domain)} -> {len(codomain)} classes"
    witness = ", ".join(missing) or ", ".join(codomain[j] for j in set(codomain) - hit) or None
    return _row(catalog.algebra.name, check, passed, detail, witness if not passed else None)


def _indices(catalog: HCatalog, objects: List[MorphObject]) -> Dict[int, str]:
    found = {}
    for x in objects:
        idx = catalog.index_of(x)
        if idx is not None:
            found[idx] = catalog.names[idx]
    return found


def _neither(module_catalog: ARCatalog, i: int) -> bool:
    return not module_catalog.projective[i] and not module_catalog.injective[i]


def corollary_checks(module_catalog: ARCatalog, catalog: HCatalog) -> List[CheckRow]:
    """
    Class bijections under τ_H and τ(P/soc P) ≅ rad P.

    Args:
        module_catalog (ARCatalog): Complete catalog of ind Λ with AR sequences.
        catalog (HCatalog): Complete catalog of ind H(Λ).

    Returns:
        List[CheckRow]: One row per check.

    Process:
        1. cover -> envelope: τ_H maps {(P -p-> A)} onto {(B -e-> I)}.
        2. left -> right almost split maps: τ_H maps {(A -f-> B)} onto {(C -g-> D)},
           restricted to modules that are neither projective nor injective.
        3. (P -> Q) -> ind non-projective: M ↦ Coker is a bijection and τ_H(P -> Q) is
           (0 -> τ Coker); objects with zero cokernel are left out.
        4. τ(P/soc P) ≅ rad P for every indecomposable projective-injective P.
    """
    algebra = module_catalog.algebra
    name = algebra.name
    modules = module_catalog.modules
    rows: List[CheckRow] = []

    covers = _indices(catalog, [cover_object(m) for i, m in enumerate(modules) if not module_catalog.projective[i]])
    envelopes = _indices(catalog, [envelope_object(m) for i, m in enumerate(modules) if not module_catalog.injective[i]])
    rows.append(_bijection_row(catalog, "cover_to_envelope", covers, envelopes))

    lefts, rights = [], []
    for i, seq in module_catalog.sequences.items():
        if _neither(module_catalog, module_catalog.tau[i]):
            lefts.append(MorphObject(seq.left))
        if _neither(module_catalog, i):
            rights.append(MorphObject(seq.right))
    rows.append(_bijection_row(catalog, "left_to_right_almost_split", _indices(catalog, lefts), _indices(catalog, rights)))

    seen: Dict[int, str] = {}
    failures = []
    for idx, x in enumerate(catalog.objects):
        if catalog.is_projective(idx) or not (is_projective(x.A) and is_projective(x.B)):
            continue
        m = cokernel(x.f)[0]
        if m.is_zero():
            continue
        m_idx = module_catalog.index_of(m)
        image = catalog.objects[catalog.tau(idx)]
        if m_idx is None or module_catalog.projective[m_idx] or not image.A.is_zero():
            failures.append(catalog.names[idx])
            continue
        if not is_isomorphic(image.B, tau(m)) or m_idx in seen:
            failures.append(catalog.names[idx])
            continue
        seen[m_idx] = catalog.names[idx]
    expected = {i for i in range(len(modules)) if not module_catalog.projective[i]}
    passed = not failures and set(seen) == expected
    witness = ", ".join(failures) or ", ".join(module_catalog.names[i] for i in expected - set(seen)) or None
    detail = f"{len(seen)} of {len(expected)} modules"
    rows.append(_row(name, "projmap_to_module", passed, detail, witness if not passed else None))

    for v in algebra.vertices:
        p_mod = projective(algebra, v)
        if not is_injective(p_mod):
            continue
        quotient = cokernel(socle(p_mod)[1])[0]
        if quotient.is_zero():
            continue
        ok = is_isomorphic(tau(quotient), radical(p_mod)[0])
        rows.append(_row(name, f"tau_quotient_is_radical[{v}]", ok, "τ(P/soc P) vs rad P", None if ok else f"P({v})"))
    logging.info(f"[corollary_checks] {name}: {sum(r['passed'] for r in rows)}/{len(rows)} passed")
    return rows
