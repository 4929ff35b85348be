# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.functors import projective, simple
from algebra.homology import is_isomorphic
from ar.catalog import ar_quiver, module_catalog
from ar.presentations import is_projective, is_self_injective, projective_cover, syzygy
from ar.sequences import almost_split_sequence_ending_at, is_right_almost_split
from ar.translate import nakayama_module, tau


def test_catalog_sizes(k_x2_modules, k_x3_modules) -> None:
    assert len(k_x2_modules) == 2
    assert len(k_x3_modules) == 3
    assert sum(k_x3_modules.projective) == 1


def test_catalog_entries_record_translate(k_x2_modules) -> None:
    entries = k_x2_modules.entries()
    by_name = {e["name"]: e for e in entries}
    assert len(by_name) == 2
    simple_entry = next(e for e in entries if e["dims"] == [1])
    assert simple_entry["tau"] == simple_entry["id"]
    assert next(e for e in entries if e["dims"] == [2])["tau"] is None


def test_translate_and_syzygy_of_simple(k_x2) -> None:
    alg = k_x2.algebra
    s = simple(alg, "1")
    assert is_isomorphic(tau(s), s)
    assert is_isomorphic(tau(s, -1), s)
    assert is_isomorphic(syzygy(s), s)
    assert is_isomorphic(nakayama_module(s), s)


def test_projective_cover_is_right_almost_split(k_x2, k_x2_modules) -> None:
    s = simple(k_x2.algebra, "1")
    cover = projective_cover(s)
    assert is_projective(cover.module)
    assert is_right_almost_split(cover.epi, k_x2_modules.modules)


def test_almost_split_sequence_at_simple(k_x2, k_x2_modules) -> None:
    alg = k_x2.algebra
    seq = almost_split_sequence_ending_at(simple(alg, "1"), k_x2_modules.modules)
    assert seq.is_exact()
    assert not seq.is_split()
    assert is_isomorphic(seq.middle, projective(alg, "1"))


def test_self_injectivity(k_x2, nakayama, ka2) -> None:
    assert is_self_injective(k_x2.algebra)
    assert is_self_injective(nakayama.algebra)
    assert not is_self_injective(ka2.algebra)


def test_module_ar_quiver_is_mesh_complete(k_x3_modules) -> None:
    assert ar_quiver(k_x3_modules).is_mesh_complete()


def test_path_algebra_catalog(ka3) -> None:
    catalog = module_catalog(ka3.algebra)
    assert len(catalog) == 6
    assert sum(catalog.projective) == 3
    assert sum(catalog.injective) == 3
    assert ar_quiver(catalog).is_mesh_complete()
