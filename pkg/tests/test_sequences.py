# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import pytest

from algebra.functors import projective, simple
from algebra.homology import direct_sum
from algebra.module import identity, zero_map
from ar.catalog import module_catalog
from config.types import MiddleClaim, ShapeTag
from models.errors import HypothesisError
from morphism.catalog import h_catalog
from morphism.decompose import is_isomorphic_H
from morphism.functors import cover_object
from morphism.objects import MorphMap, MorphObject, direct_sum_H, identity_object, to_zero, zero_to
from sequences.builders import (
    ass_at_0C,
    ass_at_C1C,
    ass_at_proj_cover,
    ass_from_0P,
    ass_H_ending_at,
    ass_proj_source,
    glue_ass,
    outer_terms_monic,
)
from sequences.corollaries import corollary_checks
from sequences.hsequence import HSequence
from sequences.middle import analyze_middle, shape_tag, sweep_middle_claims
from sequences.verify import is_almost_split_H, is_translate_consistent


def _simple_sequence(k_x2_modules):
    idx = next(i for i, p in enumerate(k_x2_modules.projective) if not p)
    return k_x2_modules.modules[idx], k_x2_modules.sequences[idx]


def test_builders_give_almost_split_sequences(k_x2, k_x2_modules, k_x2_h) -> None:
    s, seq = _simple_sequence(k_x2_modules)
    built = [
        ass_at_0C(seq, k_x2_modules),
        ass_at_C1C(seq, k_x2_modules),
        glue_ass(seq, seq, k_x2_modules),
        ass_at_proj_cover(s, seq, k_x2_modules),
        ass_from_0P(projective(k_x2.algebra, "1")),
    ]
    for h_seq in built:
        assert is_almost_split_H(h_seq, k_x2_h), h_seq.name
        assert is_translate_consistent(h_seq), h_seq.name


def test_ass_at_0C_shape(k_x2_modules) -> None:
    s, seq = _simple_sequence(k_x2_modules)
    h_seq = ass_at_0C(seq)
    assert is_isomorphic_H(h_seq.source, identity_object(s))
    assert is_isomorphic_H(h_seq.target, zero_to(s))


def test_cover_sequence_outer_terms(k_x2_modules) -> None:
    s, seq = _simple_sequence(k_x2_modules)
    h_seq = ass_at_proj_cover(s, seq)
    assert is_isomorphic_H(h_seq.target, cover_object(s))
    assert h_seq.source.f.is_injective()
    assert not outer_terms_monic(h_seq)


def test_split_sequence_is_not_almost_split(k_x2, k_x2_h) -> None:
    s = simple(k_x2.algebra, "1")
    _, inj, proj = direct_sum_H([zero_to(s), identity_object(s)])
    split = HSequence(inj[0], proj[1], "split")
    assert split.is_exact()
    assert split.is_split()
    assert not is_almost_split_H(split, k_x2_h)


def test_ending_at_generic_object(k_x2, k_x2_h) -> None:
    x = to_zero(simple(k_x2.algebra, "1"))
    h_seq = ass_H_ending_at(x, k_x2_h)
    assert is_almost_split_H(h_seq, k_x2_h)


def test_builders_reject_projective_input(k_x2) -> None:
    p = projective(k_x2.algebra, "1")
    with pytest.raises(HypothesisError):
        ass_at_proj_cover(p)
    with pytest.raises(HypothesisError):
        ass_proj_source(p)
    with pytest.raises(HypothesisError):
        ass_from_0P(simple(k_x2.algebra, "1"))


def test_projective_source_sequence(ka2) -> None:
    alg = ka2.algebra
    catalog = module_catalog(alg)
    h_seq = ass_proj_source(projective(alg, "2"), catalog=catalog)
    assert is_almost_split_H(h_seq, h_catalog(alg))


def test_cover_sequence_middle_claim(k_x2_modules, k_x2_h) -> None:
    s, seq = _simple_sequence(k_x2_modules)
    report = analyze_middle(ass_at_proj_cover(s, seq), MiddleClaim.P43, k_x2_h)
    assert report.holds
    assert not report.flags["has_zero_proj_summand"]


def test_middle_claim_hypotheses_are_enforced(k_x2_modules, k_x2_h) -> None:
    _, seq = _simple_sequence(k_x2_modules)
    with pytest.raises(HypothesisError):
        analyze_middle(ass_at_0C(seq), MiddleClaim.P41, k_x2_h)


def test_shape_tags(k_x2) -> None:
    alg = k_x2.algebra
    p = projective(alg, "1")
    assert shape_tag(zero_to(p)) == ShapeTag.ZERO_PROJ
    assert shape_tag(to_zero(p)) == ShapeTag.INJ_ZERO
    assert shape_tag(identity_object(p)) == ShapeTag.PROJ_IDENTITY
    assert shape_tag(cover_object(simple(alg, "1"))) == ShapeTag.GENERIC


def test_every_middle_claim_holds(k_x2_modules, k_x2_h) -> None:
    reports = sweep_middle_claims(k_x2_modules, k_x2_h)
    assert {r.claim for r in reports} >= set(MiddleClaim)
    assert all(r.holds for r in reports)


def test_corollary_checks_pass(k_x2_modules, k_x2_h) -> None:
    rows = corollary_checks(k_x2_modules, k_x2_h)
    assert rows
    assert all(row["passed"] for row in rows), [row for row in rows if not row["passed"]]


def test_sequence_with_zeroed_structure_map_is_rejected(k_x2_modules, k_x2_h) -> None:
    _, seq = _simple_sequence(k_x2_modules)
    a, b, c = seq.source, seq.middle, seq.target
    source, middle, target = identity_object(a), MorphObject(zero_map(a, b)), zero_to(c)
    left = MorphMap(source, middle, identity(a), seq.left, check=False)
    right = MorphMap(middle, target, zero_map(a, target.A), seq.right)
    perturbed = HSequence(left, right, "zeroed")
    assert not perturbed.is_exact()
    assert not is_almost_split_H(perturbed, k_x2_h)


def test_sequence_with_split_middle_is_rejected(k_x2_modules, k_x2_h) -> None:
    _, seq = _simple_sequence(k_x2_modules)
    a, c = seq.source, seq.target
    _, inj, proj = direct_sum([a, c])
    source, middle, target = identity_object(a), MorphObject(inj[0]), zero_to(c)
    left = MorphMap(source, middle, identity(a), inj[0])
    right = MorphMap(middle, target, zero_map(a, target.A), proj[1])
    perturbed = HSequence(left, right, "split middle")
    assert perturbed.is_exact()
    assert not is_almost_split_H(perturbed, k_x2_h)


def _every_builder(loaded, modules):
    built = []
    for i, seq in modules.sequences.items():
        built.append(ass_at_0C(seq, modules))
        built.append(ass_at_C1C(seq, modules))
        built.append(ass_at_proj_cover(modules.modules[i], seq, modules))
        if modules.tau[i] in modules.sequences:
            built.append(glue_ass(seq, modules.sequences[modules.tau[i]], modules))
    built.extend(ass_from_0P(projective(loaded.algebra, v)) for v in loaded.algebra.vertices)
    return built


def test_builders_on_cyclic_nakayama(nakayama, nakayama_modules, nakayama_h) -> None:
    built = _every_builder(nakayama, nakayama_modules)
    assert len(built) == 10
    for h_seq in built:
        assert is_almost_split_H(h_seq, nakayama_h), h_seq.name
        assert is_translate_consistent(h_seq), h_seq.name


def test_corollaries_on_cyclic_nakayama(nakayama_modules, nakayama_h) -> None:
    rows = corollary_checks(nakayama_modules, nakayama_h)
    assert [row["check"] for row in rows][:3] == [
        "cover_to_envelope",
        "left_to_right_almost_split",
        "projmap_to_module",
    ]
    assert all(row["passed"] for row in rows), [row for row in rows if not row["passed"]]


@pytest.mark.slow
def test_builders_on_cubic_truncation(k_x3, k_x3_modules, k_x3_h) -> None:
    built = _every_builder(k_x3, k_x3_modules)
    assert len(built) == 9
    for h_seq in built:
        assert is_almost_split_H(h_seq, k_x3_h), h_seq.name
        assert is_translate_consistent(h_seq), h_seq.name


@pytest.mark.slow
def test_corollaries_on_cubic_truncation(k_x3_modules, k_x3_h) -> None:
    rows = corollary_checks(k_x3_modules, k_x3_h)
    assert all(row["passed"] for row in rows), [row for row in rows if not row["passed"]]
    assert all(r.holds for r in sweep_middle_claims(k_x3_modules, k_x3_h))
