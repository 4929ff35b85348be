# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import pytest

from algebra.functors import dual, injective, projective, simple, uniserial_module
from algebra.homology import hom_dim, is_isomorphic
from algebra.module import Module
from algebra.records import load_algebra_text
from models.errors import HypothesisError, ParseError


def test_bundled_algebra_dimensions(k_x2, k_x3, ka2, ka3, nakayama) -> None:
    assert k_x2.algebra.dim == 2
    assert k_x3.algebra.dim == 3
    assert ka2.algebra.dim == 3
    assert ka3.algebra.dim == 6
    assert nakayama.algebra.dim == 4
    assert k_x2.symmetric is True


def test_malformed_json_reports_line() -> None:
    with pytest.raises(ParseError) as info:
        load_algebra_text('{\n  "p": 2,\n  "vertices": ["1"\n}')
    assert info.value.line == 4


def test_unknown_arrow_in_relation() -> None:
    text = (
        '{"p": 2, "vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1"}], '
        '"relations": ["y^2"], "bound": 2}'
    )
    with pytest.raises(ParseError) as info:
        load_algebra_text(text)
    assert info.value.field == "relations"


def test_module_must_satisfy_relations(k_x2) -> None:
    with pytest.raises(HypothesisError):
        Module(k_x2.algebra, {"1": 2}, {"x": [[1, 0], [0, 1]]})


def test_projective_of_local_algebra_is_self_dual(k_x3) -> None:
    alg = k_x3.algebra
    p = projective(alg, "1")
    assert p.total_dim == 3
    assert is_isomorphic(p, injective(alg, "1"))
    assert is_isomorphic(p, uniserial_module(alg, 3))


def test_hom_dimensions(k_x3) -> None:
    alg = k_x3.algebra
    s, u2, p = simple(alg, "1"), uniserial_module(alg, 2), projective(alg, "1")
    assert hom_dim(p, s) == 1
    assert hom_dim(u2, u2) == 2
    assert hom_dim(p, p) == 3


def test_dual_is_involutive(ka3) -> None:
    alg = ka3.algebra
    for v in alg.vertices:
        p = projective(alg, v)
        assert is_isomorphic(dual(dual(p)), p)
