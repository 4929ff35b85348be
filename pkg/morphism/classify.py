# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import NamedTuple

from algebra.homology import cokernel, kernel
from ar.presentations import is_injective, is_projective
from morphism.objects import MorphObject


class ProjInjClass(NamedTuple):
    projective: bool
    injective: bool
    form: str  # canonical shape, e.g. "(0->P)+(P=P)"


def is_projective_H(x: MorphObject) -> bool:
    """(A -f-> B) is projective iff A is projective, f is mono and Coker f is projective."""
    return is_projective(x.A) and x.f.is_injective() and is_projective(cokernel(x.f)[0])


def is_injective_H(x: MorphObject) -> bool:
    """(A -f-> B) is injective iff B is injective, f is epi and Ker f is injective."""
    return is_injective(x.B) and x.f.is_surjective() and is_injective(kernel(x.f)[0])


def classify_proj_inj(x: MorphObject) -> ProjInjClass:
    """
    Decides membership in add{(0->P), (P=P)} and add{(I->0), (I=I)}.

    The canonical form names the parts: a projective (A -> B) is (0 -> Coker f)
    plus (A = A); an injective one is (Ker f -> 0) plus (B = B).
    """
    proj, inj = is_projective_H(x), is_injective_H(x)
    parts = []
    if proj:
        if cokernel(x.f)[0].total_dim:
            parts.append("(0->P)")
        if x.A.total_dim:
            parts.append("(P=P)")
    if inj:
        if kernel(x.f)[0].total_dim:
            parts.append("(I->0)")
        if x.B.total_dim:
            parts.append("(I=I)")
    form = "+".join(dict.fromkeys(parts)) if parts else "none"
    return ProjInjClass(proj, inj, form)
