# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Optional

from algebra.module import Module
from ar.catalog import ARCatalog, standard_name
from ar.decompose import decompose
from morphism.objects import MorphObject


def module_label(m: Module, catalog: Optional[ARCatalog] = None) -> str:
    """Summand names joined by '+'; catalog names are preferred when a catalog is given."""
    if m.is_zero():
        return "0"
    names = []
    for summand, k in decompose(m):
        idx = catalog.index_of(summand) if catalog is not None else None
        name = catalog.names[idx] if idx is not None else standard_name(summand)
        names.extend([name] * k)
    return "+".join(names)


def map_tag(x: MorphObject) -> str:
    """1 for an iso, i for a mono, p for an epi, 0 for the zero map, f otherwise."""
    if x.f.is_iso():
        return "1"
    if x.f.is_zero():
        return "0"
    if x.f.is_injective():
        return "i"
    if x.f.is_surjective():
        return "p"
    return "f"


def object_label(x: MorphObject, catalog: Optional[ARCatalog] = None) -> str:
    """Renders (A -> B)_tag, e.g. "(S = S)_1", "(P -> S)_p" or "(0 -> S)"."""
    a, b = module_label(x.A, catalog), module_label(x.B, catalog)
    if x.A.is_zero() or x.B.is_zero():
        return f"({a} -> {b})"
    tag = map_tag(x)
    if tag == "1":
        return f"({a} = {b})_1"
    return f"({a} -> {b})_{tag}"
