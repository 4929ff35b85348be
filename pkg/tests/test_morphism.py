# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import pytest

from algebra.functors import loop_power_map, projective, simple
from ar.presentations import projective_cover
from config.types import ClosedForm
from models.errors import HypothesisError, ParseError
from morphism.classify import is_injective_H, is_projective_H
from morphism.decompose import decompose_H, is_indecomposable_H, is_isomorphic_H
from morphism.functors import cover_object, star_H, tau_H_closed_form, tau_H_general, tau_H_via_t2
from morphism.hom import hom_dim_H
from morphism.labels import object_label
from morphism.objects import MorphObject, direct_sum_H, identity_object, to_zero, zero_to
from morphism.records import parse_object
from morphism.t2 import upsilon, upsilon_inverse


def test_hom_from_identity_object(k_x2) -> None:
    alg = k_x2.algebra
    p = projective(alg, "1")
    assert hom_dim_H(identity_object(p), cover_object(simple(alg, "1"))) == 2
    assert hom_dim_H(zero_to(simple(alg, "1")), to_zero(p)) == 0


def test_translate_of_zero_to_simple(k_x2) -> None:
    alg = k_x2.algebra
    s = simple(alg, "1")
    x = zero_to(s)
    assert is_isomorphic_H(tau_H_general(x), identity_object(s))
    assert is_isomorphic_H(tau_H_via_t2(x), identity_object(s))
    assert object_label(tau_H_general(x)) == "(S = S)_1"


def test_translate_of_projective_is_zero(k_x2) -> None:
    p = projective(k_x2.algebra, "1")
    assert tau_H_general(identity_object(p)).is_zero()
    assert tau_H_general(zero_to(p)).is_zero()


def test_c0_closed_form(k_x2) -> None:
    alg = k_x2.algebra
    x = to_zero(simple(alg, "1"))
    expected = MorphObject(loop_power_map(alg, 1))
    assert is_isomorphic_H(tau_H_closed_form(x, ClosedForm.C0), expected)
    assert is_isomorphic_H(tau_H_general(x), expected)


def test_closed_form_rejects_wrong_shape(k_x2) -> None:
    x = zero_to(simple(k_x2.algebra, "1"))
    with pytest.raises(HypothesisError):
        tau_H_closed_form(x, ClosedForm.C0)
    with pytest.raises(HypothesisError):
        tau_H_closed_form(x, ClosedForm.PROJMAP)


def test_projmap_closed_form(k_x2) -> None:
    alg = k_x2.algebra
    x = MorphObject(loop_power_map(alg, 1))
    assert is_isomorphic_H(tau_H_closed_form(x, ClosedForm.PROJMAP), zero_to(simple(alg, "1")))


def test_star_needs_projective_components(k_x2) -> None:
    with pytest.raises(HypothesisError):
        star_H(zero_to(simple(k_x2.algebra, "1")))


def test_classification(k_x2) -> None:
    alg = k_x2.algebra
    p, s = projective(alg, "1"), simple(alg, "1")
    assert is_projective_H(identity_object(p)) and is_injective_H(identity_object(p))
    assert is_projective_H(zero_to(p)) and not is_injective_H(zero_to(p))
    assert is_injective_H(to_zero(p)) and not is_projective_H(to_zero(p))
    assert not is_projective_H(cover_object(s))


def test_decomposition_of_sum(k_x2) -> None:
    alg = k_x2.algebra
    s = simple(alg, "1")
    total = direct_sum_H([zero_to(s), zero_to(s), identity_object(s)])[0]
    parts = decompose_H(total)
    assert sorted(k for _, k in parts) == [1, 2]
    assert not is_indecomposable_H(total)


def test_upsilon_round_trip(k_x2) -> None:
    alg = k_x2.algebra
    x = MorphObject(projective_cover(simple(alg, "1")).epi)
    module = upsilon(x)
    assert module.total_dim == 3
    assert is_isomorphic_H(upsilon_inverse(module, alg), x)


def test_h_catalog_size(k_x2_h) -> None:
    assert len(k_x2_h) == 9
    assert sum(k_x2_h.is_projective(i) for i in range(len(k_x2_h))) == 2
    assert "(S = S)_1" in k_x2_h.names


def test_parse_object_forms(k_x2) -> None:
    alg = k_x2.algebra
    s = simple(alg, "1")
    assert is_isomorphic_H(parse_object(k_x2, "0->S"), zero_to(s))
    assert is_isomorphic_H(parse_object(k_x2, "(S → 0)"), to_zero(s))
    assert is_isomorphic_H(parse_object(k_x2, "P->S"), cover_object(s))
    assert is_isomorphic_H(parse_object(k_x2, "L-h1->L"), MorphObject(loop_power_map(alg, 1)))


@pytest.mark.parametrize("text", ["L-h2->L", "S->P(9)", "S=P", "Q->0"])
def test_parse_object_errors(k_x2, text) -> None:
    with pytest.raises(ParseError):
        parse_object(k_x2, text)


def test_projmap_rejects_zero_target(k_x2, nakayama) -> None:
    for loaded in (k_x2, nakayama):
        for v in loaded.algebra.vertices:
            with pytest.raises(HypothesisError):
                tau_H_closed_form(to_zero(projective(loaded.algebra, v)), ClosedForm.PROJMAP)


def test_translate_of_projective_to_zero(k_x2, nakayama) -> None:
    p = projective(k_x2.algebra, "1")
    assert is_isomorphic_H(tau_H_general(to_zero(p)), zero_to(p))
    for loaded in (k_x2, nakayama):
        for v in loaded.algebra.vertices:
            x = to_zero(projective(loaded.algebra, v))
            expected = tau_H_closed_form(x, ClosedForm.C0)
            assert expected.A.is_zero() and not expected.B.is_zero()
            assert is_isomorphic_H(tau_H_general(x), expected)
            assert is_isomorphic_H(tau_H_via_t2(x), expected)
