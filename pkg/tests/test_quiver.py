# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from dataclasses import replace

import networkx as nx
import pytest

from algebra.functors import simple, uniserial_module
from ar.catalog import module_catalog
from config.types import OrbitFamily, StableFunctor
from models.errors import HypothesisError
from morphism.decompose import is_isomorphic_H
from morphism.functors import cover_object, envelope_object, tau_H_general
from morphism.labels import object_label
from morphism.objects import identity_object, to_zero, zero_to
from morphism.records import parse_object
from quiver.delta_beta import delta_beta_maps
from quiver.dynkin import dynkin_recognition, tree_class
from quiver.gamma import connectedness_check, gamma_H, stability_check, stable_quiver
from quiver.orbits import (
    family_objects,
    orbit_closed_form,
    orbit_record,
    orbit_rows,
    period_rows,
    periodicity,
)
from quiver.stable import stable_functor, stable_functor_identities, stable_iso
from quiver.translation_quiver import TranslationQuiver


def _star(arms) -> nx.Graph:
    tree = nx.Graph()
    tree.add_node("c")
    for k, length in enumerate(arms):
        previous = "c"
        for step in range(length):
            node = f"{k}.{step}"
            tree.add_edge(previous, node)
            previous = node
    return tree


@pytest.mark.parametrize(
    ("tree", "expected"),
    [
        (nx.path_graph(5), "A5"),
        (_star((1, 1, 1)), "D4"),
        (_star((1, 1, 3)), "D6"),
        (_star((1, 2, 2)), "E6"),
        (_star((1, 2, 4)), "E8"),
        (_star((2, 2, 2)), None),
        (_star((1, 1, 1, 1)), None),
        (nx.cycle_graph(4), None),
    ],
)
def test_tree_class(tree, expected) -> None:
    assert tree_class(tree) == expected


def test_single_loop_vertex_is_a1() -> None:
    g = TranslationQuiver("point")
    g.add_vertex("v", "v")
    g.set_translation("v", "v")
    result = dynkin_recognition(g)
    assert result.dynkin_type == "A1"
    assert result.orbit_sizes == [1]


def test_recognition_needs_stable_quiver() -> None:
    g = TranslationQuiver("open")
    g.add_vertex("u", "u")
    g.add_vertex("v", "v")
    g.add_arrow("u", "v")
    with pytest.raises(HypothesisError):
        dynkin_recognition(g)


def test_stable_quiver_of_dual_numbers(k_x2) -> None:
    g = gamma_H(k_x2.algebra)
    assert len(g.vertices) == 9
    assert g.is_mesh_complete()
    stable = stable_quiver(g)
    assert len(stable.vertices) == 6
    assert stability_check(stable)
    assert connectedness_check(stable)
    result = dynkin_recognition(stable)
    assert result.dynkin_type == "A3"
    assert result.orbit_sizes == [4, 2]
    assert "digraph" in stable.to_dot()


def test_zero_to_simple_case_table(k_x2) -> None:
    s = simple(k_x2.algebra, "1")
    x = zero_to(s)
    assert object_label(orbit_closed_form(x, OrbitFamily.TYPE1_0C, 1)) == "(S = S)_1"
    assert is_isomorphic_H(orbit_closed_form(x, OrbitFamily.TYPE1_0C, 1), identity_object(s))
    assert is_isomorphic_H(orbit_closed_form(x, OrbitFamily.TYPE1_0C, 2), to_zero(s))
    assert is_isomorphic_H(orbit_closed_form(x, OrbitFamily.TYPE1_0C, 4), x)
    assert is_isomorphic_H(orbit_closed_form(x, OrbitFamily.TYPE1_0C, -4), x)


def test_cover_case_table(k_x2) -> None:
    s = simple(k_x2.algebra, "1")
    x = cover_object(s)
    assert is_isomorphic_H(orbit_closed_form(x, OrbitFamily.TYPE3_COVER, 1), envelope_object(s))
    assert object_label(orbit_closed_form(x, OrbitFamily.TYPE3_COVER, 1)) == "(S -> P)_i"
    assert is_isomorphic_H(orbit_closed_form(x, OrbitFamily.TYPE3_COVER, 2), x)


def test_case_tables_agree_with_iteration(k_x2) -> None:
    s = simple(k_x2.algebra, "1")
    for family, x in [
        (OrbitFamily.TYPE1_0C, zero_to(s)),
        (OrbitFamily.TYPE1_C0, to_zero(s)),
        (OrbitFamily.TYPE4_ENVELOPE, envelope_object(s)),
    ]:
        rows = orbit_rows(x, family, bound=5)
        assert len(rows) == 11
        assert all(row["agree"] for row in rows), family


def test_periods(k_x2) -> None:
    s = simple(k_x2.algebra, "1")
    assert periodicity(zero_to(s)) == 4
    assert periodicity(cover_object(s)) == 2
    record = orbit_record(zero_to(s), bound=6)
    assert record.period == 4
    assert record.consistent()


def test_period_rows_flag_short_periods(k_x2_modules) -> None:
    rows = period_rows(k_x2_modules)
    assert len(rows) == 6
    assert all(row["passed"] for row in rows)
    assert any("flagged" in row["detail"] for row in rows)


def test_projective_has_no_period(k_x2) -> None:
    p = uniserial_module(k_x2.algebra, 2)
    assert periodicity(identity_object(p)) is None


def test_case_tables_need_self_injective_algebra(ka2) -> None:
    s = simple(ka2.algebra, "1")
    with pytest.raises(HypothesisError):
        orbit_closed_form(zero_to(s), OrbitFamily.TYPE1_0C, 1)


def test_stable_functors_on_dual_numbers(k_x2, k_x2_modules) -> None:
    s = simple(k_x2.algebra, "1")
    assert stable_iso(stable_functor(s, StableFunctor.A), s)
    assert stable_iso(stable_functor(s, StableFunctor.B, -1), s)
    rows = stable_functor_identities(k_x2_modules, symmetric=True)
    assert [row["check"] for row in rows] == ["A_is_nu4_omega6", "B_is_nu2_omega3", "A_is_omega6", "B_is_omega3"]
    assert all(row["passed"] for row in rows)


def test_stable_functors_on_cyclic_nakayama(nakayama) -> None:
    rows = stable_functor_identities(module_catalog(nakayama.algebra), symmetric=False)
    assert [row["check"] for row in rows] == ["A_is_nu4_omega6", "B_is_nu2_omega3"]
    assert all(row["passed"] for row in rows)


def test_delta_beta_maps(k_x2_modules, k_x2_h) -> None:
    report = delta_beta_maps(k_x2_modules, k_x2_h)
    rows = report.rows()
    assert {row["check"] for row in rows} == {
        "delta_well_defined",
        "delta_surjective",
        "beta_well_defined",
        "beta_surjective",
    }
    assert all(row["passed"] for row in rows)
    for item in (report.delta, report.beta):
        assert item.targets and item.image == item.targets


def test_delta_beta_flags_unreached_component(k_x2_modules, k_x2_h) -> None:
    report = delta_beta_maps(k_x2_modules, k_x2_h)
    extra = report.components
    short = replace(report, delta=replace(report.delta, targets=report.delta.targets + [extra]))
    row = next(r for r in short.rows() if r["check"] == "delta_surjective")
    assert not row["passed"]
    assert row["witness"] == str(extra)


@pytest.mark.slow
def test_truncated_polynomial_ring(k_x3, k_x3_modules, k_x3_h) -> None:
    stable = stable_quiver(gamma_H(k_x3.algebra))
    assert stability_check(stable)
    assert dynkin_recognition(stable).dynkin_type is not None
    assert all(row["passed"] for row in stable_functor_identities(k_x3_modules, symmetric=True))
    assert all(row["passed"] for row in delta_beta_maps(k_x3_modules, k_x3_h).rows())


def _composite_objects(loaded):
    return [parse_object(loaded, f"L-h{k}->L") for k in range(1, loaded.algebra.dim)]


@pytest.mark.slow
def test_cubic_truncation_periods(k_x3, k_x3_modules) -> None:
    objects = family_objects(k_x3_modules)
    assert len(objects) == 12
    assert [periodicity(x) for _, x in objects] == [4] * 12
    for x in _composite_objects(k_x3):
        assert periodicity(x) == 4


@pytest.mark.slow
def test_quartic_truncation_periods(k_x4, k_x4_modules) -> None:
    objects = family_objects(k_x4_modules)
    assert len(objects) == 18
    for family, x in objects:
        period = periodicity(x)
        assert period is not None and 4 % period == 0, (family, object_label(x))
        assert is_isomorphic_H(tau_H_general(x, 4), x)
    middle = uniserial_module(k_x4.algebra, 2)
    assert periodicity(cover_object(middle)) == 2
    assert periodicity(envelope_object(middle)) == 2
    assert periodicity(zero_to(middle)) == 4
    for x in _composite_objects(k_x4):
        assert is_isomorphic_H(tau_H_general(x, 4), x)
