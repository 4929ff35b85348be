# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

import numpy as np

from algebra.functors import dual
from algebra.homology import direct_sum, hom_dim, is_isomorphic
from ar.catalog import ARCatalog, ar_quiver
from ar.decompose import Decomposition, decompose
from ar.presentations import is_self_injective
from ar.sequences import ShortExactSeq
from config import settings
from config.types import ClosedForm
from models.errors import HcatError, HypothesisError
from models.types import CheckRow
from morphism.catalog import HCatalog
from morphism.decompose import is_isomorphic_H
from morphism.functors import tau_H_closed_form, tau_H_general, tau_H_via_t2
from morphism.hom import hom_dim_H
from morphism.t2 import upsilon
from quiver.delta_beta import delta_beta_maps
from quiver.dynkin import dynkin_recognition
from quiver.gamma import connectedness_check, gamma_H, stability_check, stable_quiver
from quiver.orbits import orbit_agreement_rows, period_rows
from quiver.stable import stable_functor_identities
from sequences.builders import (
    ass_at_0C,
    ass_at_C1C,
    ass_at_proj_cover,
    ass_from_0P,
    ass_proj_source,
    glue_ass,
    outer_terms_monic,
)
from sequences.corollaries import corollary_checks
from sequences.hsequence import HSequence
from sequences.middle import sweep_middle_claims
from sequences.verify import is_almost_split_H


def _row(section: str, algebra: str, check: str, total: int, failures: List[str], note: str = "") -> CheckRow:
    detail = f"{total - len(failures)}/{total} passed"
    if note:
        detail += f"; {note}"
    return {
        "section": section,
        "check": check,
        "algebra": algebra,
        "passed": not failures,
        "detail": detail,
        "witness": ", ".join(failures) or None,
    }


def foundation_rows(module_catalog: ARCatalog, catalog: HCatalog, seed: Optional[int] = None) -> List[CheckRow]:
    """Duality, Υ on hom spaces, Krull-Schmidt on pair sums, mesh completeness."""
    name = module_catalog.algebra.name
    modules, names = module_catalog.modules, module_catalog.names
    rows = [
        _row(
            "foundations",
            name,
            "dual_involutive",
            len(modules),
            [names[i] for i, m in enumerate(modules) if not is_isomorphic(dual(dual(m)), m)],
        )
    ]

    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    pairs = rng.integers(0, len(catalog), size=(settings.RANDOM_TRIALS, 2))
    bad = [
        f"{catalog.names[i]}|{catalog.names[j]}"
        for i, j in pairs
        if hom_dim_H(catalog.objects[i], catalog.objects[j])
        != hom_dim(upsilon(catalog.objects[i]), upsilon(catalog.objects[j]))
    ]
    rows.append(_row("foundations", name, "upsilon_hom_dims", len(pairs), bad))

    bad = []
    total = 0
    for i in range(len(modules)):
        for j in range(i, len(modules)):
            total += 1
            summed = direct_sum([modules[i], modules[j]])[0]
            expected = Decomposition([(modules[i], 1), (modules[j], 1)] if i != j else [(modules[i], 2)])
            if not decompose(summed).same_multiset(expected):
                bad.append(f"{names[i]}+{names[j]}")
    rows.append(_row("foundations", name, "krull_schmidt_pairs", total, bad))

    defects = ar_quiver(module_catalog).mesh_defects()
    rows.append(_row("foundations", name, "mesh_complete", len(modules), [names[v] for v in defects]))
    return rows


def tau_rows(catalog: HCatalog) -> List[CheckRow]:
    """Native τ_H, the T2 translate and every applicable closed form agree."""
    name = catalog.algebra.name
    pending = [i for i in range(len(catalog)) if not catalog.is_projective(i)]

    def check(idx: int) -> List[str]:
        x = catalog.objects[idx]
        general = tau_H_general(x)
        failures = []
        if not is_isomorphic_H(general, tau_H_via_t2(x)):
            failures.append(f"t2:{catalog.names[idx]}")
        for form in ClosedForm:
            try:
                closed = tau_H_closed_form(x, form)
            except HypothesisError:
                continue
            if not is_isomorphic_H(general, closed):
                failures.append(f"{form.value}:{catalog.names[idx]}")
        return failures

    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        failures = [f for found in executor.map(check, pending) for f in found]
    return [_row("tau", name, "tau_H_triple_agreement", len(pending), failures)]


def _verified(build: Callable[[], HSequence], catalog: HCatalog, label: str, failures: List[str]) -> Optional[HSequence]:
    try:
        seq = build()
    except HcatError as e:
        logging.warning(f"[sequence_rows] {label}: {e}")
        failures.append(label)
        return None
    if not is_almost_split_H(seq, catalog):
        failures.append(label)
    return seq


def sequence_rows(module_catalog: ARCatalog, catalog: HCatalog) -> List[CheckRow]:
    """Every sequence builder, applied wherever its hypotheses hold, passes the verifier."""
    name = module_catalog.algebra.name
    modules, names = module_catalog.modules, module_catalog.names
    keys = ("ass_at_0C", "ass_at_C1C", "glue_ass", "ass_proj_source", "ass_at_proj_cover", "ass_from_0P")
    results = {key: ([], 0) for key in keys}
    monic_notes = []

    def run(key: str, build: Callable[[], HSequence], label: str) -> Optional[HSequence]:
        failures, count = results[key]
        results[key] = (failures, count + 1)
        return _verified(build, catalog, label, failures)

    for i, m in enumerate(modules):
        if module_catalog.projective[i]:
            if not module_catalog.injective[i]:
                run("ass_proj_source", lambda m=m: ass_proj_source(m, catalog=module_catalog), names[i])
            else:
                run("ass_from_0P", lambda m=m: ass_from_0P(m), names[i])
            continue
        seq: ShortExactSeq = module_catalog.sequences[i]
        run("ass_at_0C", lambda seq=seq: ass_at_0C(seq, module_catalog), names[i])
        run("ass_at_C1C", lambda seq=seq: ass_at_C1C(seq, module_catalog), names[i])
        cover_seq = run(
            "ass_at_proj_cover", lambda m=m, seq=seq: ass_at_proj_cover(m, seq, module_catalog), names[i]
        )
        if cover_seq is not None and outer_terms_monic(cover_seq):
            monic_notes.append(names[i])
        a_idx = module_catalog.tau[i]
        if not module_catalog.projective[a_idx]:
            prime = module_catalog.sequences[a_idx]
            run("glue_ass", lambda seq=seq, prime=prime: glue_ass(seq, prime, module_catalog), names[i])

    rows = [_row("sequences", name, key, count, failures) for key, (failures, count) in results.items() if count]
    rows.append(
        {
            "section": "sequences",
            "check": "proj_cover_outer_terms_monic",
            "algebra": name,
            "passed": True,
            "detail": f"monic outer terms at {len(monic_notes)} of {sum(not p for p in module_catalog.projective)}",
            "witness": None,
        }
    )
    return rows


def middle_rows(module_catalog: ARCatalog, catalog: HCatalog) -> List[CheckRow]:
    """Middle-term claims on every applicable sequence, then the corollary checks."""
    name = module_catalog.algebra.name
    reports = sweep_middle_claims(module_catalog, catalog)
    rows = []
    for claim in sorted({r.claim for r in reports}, key=lambda c: c.value):
        picked = [r for r in reports if r.claim == claim]
        failures = [r.sequence for r in picked if not r.holds]
        rows.append(_row("middle", name, f"middle_{claim.value}", len(picked), failures))
    rows.extend(corollary_checks(module_catalog, catalog))
    return rows


def quiver_rows(module_catalog: ARCatalog, catalog: HCatalog, symmetric: Optional[bool] = None) -> List[CheckRow]:
    """Stable quiver shape, orbits, stable functor identities and δ/β, on self-injective algebras."""
    algebra = module_catalog.algebra
    name = algebra.name
    if not is_self_injective(algebra):
        return [
            {
                "section": "quiver",
                "check": "self_injective",
                "algebra": name,
                "passed": True,
                "detail": "skipped: not self-injective",
                "witness": None,
            }
        ]
    stable = stable_quiver(gamma_H(algebra))
    stable_ok, connected_ok = stability_check(stable), connectedness_check(stable)
    rows: List[CheckRow] = [
        _row("quiver", name, "stable", 1, [] if stable_ok else [stable.name]),
        _row("quiver", name, "connected", 1, [] if connected_ok else [stable.name]),
    ]
    if stable_ok and connected_ok:
        result = dynkin_recognition(stable)
        rows.append(
            {
                "section": "quiver",
                "check": "dynkin_type",
                "algebra": name,
                "passed": result.dynkin_type is not None,
                "detail": f"{result.dynkin_type}, τ-orbit sizes {result.orbit_sizes}",
                "witness": None if result.dynkin_type else ", ".join(result.section),
            }
        )
    rows.extend(orbit_agreement_rows(module_catalog))
    rows.extend(period_rows(module_catalog))
    rows.extend(stable_functor_identities(module_catalog, symmetric))
    rows.extend(delta_beta_maps(module_catalog, catalog).rows())
    return rows
