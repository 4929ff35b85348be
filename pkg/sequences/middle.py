# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.functors import injective, projective
from algebra.homology import cokernel, is_isomorphic, radical, socle
from algebra.module import Module
from ar.catalog import ARCatalog
from ar.decompose import decompose, is_indecomposable
from ar.presentations import is_injective, is_projective, is_self_injective
from ar.translate import tau
from config import settings
from config.types import MiddleClaim, ShapeTag
from models.errors import HypothesisError
from morphism.catalog import HCatalog
from morphism.classify import classify_proj_inj, is_projective_H
from morphism.decompose import decompose_H, is_indecomposable_H, is_isomorphic_H
from morphism.functors import cover_object, envelope_object
from morphism.labels import object_label
from morphism.objects import MorphObject, to_zero
from sequences.builders import ass_at_proj_cover, ass_H_ending_at
from sequences.hsequence import HSequence


@dataclass
class TaggedSummand:
    label: str
    multiplicity: int
    tag: ShapeTag
    projective: bool
    injective: bool
    obj: MorphObject = field(repr=False)


@dataclass
class MiddleTermReport:
    """Tagged decomposition of a middle term and the verdict on one structure claim."""

    claim: MiddleClaim
    sequence: str
    holds: bool
    summands: List[TaggedSummand]
    flags: Dict[str, bool]
    witnesses: List[str]

    def parts(self) -> List[MorphObject]:
        return [s.obj for s in self.summands for _ in range(s.multiplicity)]


def shape_tag(x: MorphObject) -> ShapeTag:
    """(I -> 0), (0 -> P) and (P = P) for the matching projective or injective shapes."""
    kind = classify_proj_inj(x)
    if x.B.is_zero() and kind.injective:
        return ShapeTag.INJ_ZERO
    if x.A.is_zero() and kind.projective:
        return ShapeTag.ZERO_PROJ
    if x.f.is_iso() and kind.projective:
        return ShapeTag.PROJ_IDENTITY
    return ShapeTag.GENERIC


def _tagged(x: MorphObject, catalog: Optional[HCatalog]) -> List[TaggedSummand]:
    result = []
    for part, mult in decompose_H(x):
        kind = classify_proj_inj(part)
        label = catalog.name_of(part) if catalog is not None else object_label(part)
        result.append(TaggedSummand(label, mult, shape_tag(part), kind.projective, kind.injective, part))
    return result


def _is_cover(x: MorphObject) -> bool:
    return is_projective(x.A) and x.f.is_surjective() and is_isomorphic_H(x, cover_object(x.B))


def _is_envelope(x: MorphObject) -> bool:
    return is_injective(x.B) and x.f.is_injective() and is_isomorphic_H(x, envelope_object(x.A))


def _avoids_injective_quotients(a: Module) -> bool:
    """A is not a summand of J/soc J for any indecomposable injective J."""
    for v in a.algebra.vertices:
        j = injective(a.algebra, v)
        quotient = cokernel(socle(j)[1])[0]
        if any(is_isomorphic(s, a) for s in decompose(quotient).modules()):
            return False
    return True


def _require(condition: bool, hypothesis: str, detail: str) -> None:
    if not condition:
        raise HypothesisError(hypothesis, detail)


def analyze_middle(seq: HSequence, claim: MiddleClaim, catalog: Optional[HCatalog] = None) -> MiddleTermReport:
    """
    Decomposes the middle term, tags its summands and evaluates one structure claim.

    Args:
        seq (HSequence): A verified almost split sequence of H(Λ).
        claim (MiddleClaim): The claim to evaluate.
        catalog (Optional[HCatalog]): Used for display names only.

    Returns:
        MiddleTermReport: Summands, flags and the verdict with witness summands.

    Raises:
        HypothesisError: If the sequence does not satisfy the claim's hypotheses.

    Process:
        P41: ends at (A -> 0), A non-injective; middle is X + (I -> 0) with X
             indecomposable neither projective nor injective, and I = 0 when A is not
             a summand of some J/soc J.
        P42: self-injective, ends at an indecomposable non-projective (P -> Q) between
             projectives; middle is W + (0 -> V) with W neither projective nor injective.
        P43: ends at a projective cover (P -p-> C); no (0 -> Q) summand and some
             non-projective summand.
        P44: starts at (rad P -i-> P), P projective-injective with rad P indecomposable
             non-injective; (P = P)_1 is a summand.
        P45: self-injective, ends at an injective envelope (C -e-> I) that is
             indecomposable non-projective; the middle is not projective and has no
             (0 -> Q) summand.
    """
    algebra = seq.middle.algebra
    source, target = seq.source, seq.target
    summands = _tagged(seq.middle, catalog)
    tags = [s.tag for s in summands for _ in range(s.multiplicity)]
    flags = {
        "has_nonproj_noninj_summand": any(not s.projective and not s.injective for s in summands),
        "has_zero_proj_summand": ShapeTag.ZERO_PROJ in tags,
        "has_inj_zero_summand": ShapeTag.INJ_ZERO in tags,
        "has_proj_identity_summand": ShapeTag.PROJ_IDENTITY in tags,
        "middle_projective": is_projective_H(seq.middle),
    }
    witnesses: List[str] = []

    if claim == MiddleClaim.P41:
        _require(target.B.is_zero() and is_indecomposable(target.A), "end term (A -> 0)", repr(target))
        _require(not is_injective(target.A), "A non-injective", repr(target))
        rest = [s for s in summands if s.tag != ShapeTag.INJ_ZERO]
        holds = len(rest) == 1 and rest[0].multiplicity == 1 and not rest[0].projective and not rest[0].injective
        witnesses = [s.label for s in rest]
        flags["further_clause_applies"] = _avoids_injective_quotients(target.A)
        if flags["further_clause_applies"]:
            holds = holds and not flags["has_inj_zero_summand"]
    elif claim == MiddleClaim.P42:
        _require(is_self_injective(algebra), "self-injective algebra", algebra.name)
        _require(is_projective(target.A) and is_projective(target.B), "projective components", repr(target))
        _require(not is_projective_H(target), "non-projective end term", repr(target))
        rest = [s for s in summands if s.tag != ShapeTag.ZERO_PROJ]
        holds = len(rest) == 1 and rest[0].multiplicity == 1 and not rest[0].projective and not rest[0].injective
        witnesses = [s.label for s in rest]
    elif claim == MiddleClaim.P43:
        _require(_is_cover(target), "end term is a projective cover", repr(target))
        _require(not is_projective(target.B), "non-projective C", repr(target))
        holds = not flags["has_zero_proj_summand"] and any(not s.projective for s in summands)
        witnesses = [s.label for s in summands if s.tag == ShapeTag.ZERO_PROJ]
    elif claim == MiddleClaim.P44:
        p_mod = source.B
        _require(is_projective(p_mod) and is_injective(p_mod), "projective-injective P", repr(source))
        rad, incl = radical(p_mod)
        _require(is_indecomposable(rad) and not is_injective(rad), "rad P indecomposable non-injective", repr(source))
        _require(is_isomorphic_H(source, MorphObject(incl)), "start term (rad P -> P)", repr(source))
        found = [s for s in summands if s.tag == ShapeTag.PROJ_IDENTITY and is_isomorphic(s.obj.A, p_mod)]
        holds = bool(found)
        witnesses = [s.label for s in found]
    elif claim == MiddleClaim.P45:
        _require(is_self_injective(algebra), "self-injective algebra", algebra.name)
        _require(_is_envelope(target), "end term is an injective envelope", repr(target))
        _require(not is_projective_H(target), "non-projective end term", repr(target))
        holds = not flags["middle_projective"] and not flags["has_zero_proj_summand"]
        witnesses = [s.label for s in summands if s.tag == ShapeTag.ZERO_PROJ]
    else:
        raise HypothesisError("known middle claim", str(claim))

    if not holds:
        logging.warning(f"[analyze_middle] {claim.value} fails on {seq!r}")
    return MiddleTermReport(claim, seq.name, holds, summands, flags, witnesses)


def middle_instances(module_catalog: ARCatalog, catalog: HCatalog) -> List[Tuple[MiddleClaim, HSequence]]:
    """
    Every sequence whose hypotheses make one of the claims applicable.

    Process:
        1. P41 on (A -> 0) for indecomposable non-injective A.
        2. P42 on non-projective (P -> Q) objects of the H-catalog, self-injective only.
        3. P43 on the cover sequence of every non-projective C.
        4. P44 on the cover sequence of τ^{-1} rad P for suitable P.
        5. P45 on non-projective envelope objects, self-injective only.
    """
    algebra = module_catalog.algebra
    self_injective = is_self_injective(algebra)
    instances: List[Tuple[MiddleClaim, HSequence]] = []
    modules = module_catalog.modules
    for i, m in enumerate(modules):
        if not module_catalog.injective[i]:
            instances.append((MiddleClaim.P41, ass_H_ending_at(to_zero(m), catalog)))
        if not module_catalog.projective[i]:
            instances.append((MiddleClaim.P43, ass_at_proj_cover(m, module_catalog.sequences[i])))
            envelope = envelope_object(m)
            if self_injective and is_indecomposable_H(envelope) and not is_projective_H(envelope):
                instances.append((MiddleClaim.P45, ass_H_ending_at(envelope, catalog)))
    if self_injective:
        for idx, x in enumerate(catalog.objects):
            if catalog.is_projective(idx) or x.is_zero():
                continue
            if is_projective(x.A) and is_projective(x.B):
                instances.append((MiddleClaim.P42, ass_H_ending_at(x, catalog)))
    for v in algebra.vertices:
        p_mod = projective(algebra, v)
        rad = radical(p_mod)[0]
        if not is_injective(p_mod) or rad.is_zero() or is_injective(rad) or not is_indecomposable(rad):
            continue
        instances.append((MiddleClaim.P44, ass_at_proj_cover(tau(rad, -1))))
    logging.info(f"[middle_instances] {algebra.name}: {len(instances)} applicable instances")
    return instances


def sweep_middle_claims(module_catalog: ARCatalog, catalog: HCatalog) -> List[MiddleTermReport]:
    """Evaluates every applicable claim, one sequence per worker."""
    instances = middle_instances(module_catalog, catalog)
    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        return list(executor.map(lambda item: analyze_middle(item[1], item[0], catalog), instances))
