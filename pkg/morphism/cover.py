# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from typing import NamedTuple

from algebra.homology import cokernel, direct_sum, kernel, lift_through_epi, radical
from ar.presentations import projective_cover
from morphism.hom import kernel_H
from morphism.objects import MorphMap, MorphObject
from morphism.t2 import upsilon, upsilon_map
from models.errors import VerificationError


class CoverH(NamedTuple):
    """Projective cover (P -[1,0]-> P+Q) -> (A -f-> B) in H."""

    object: MorphObject
    epi: MorphMap


class PresentationH(NamedTuple):
    """Minimal projective presentation P1 -g-> P0 -epi-> X -> 0 in H."""

    p1: MorphObject
    p0: MorphObject
    g: MorphMap
    epi: MorphMap


def projective_cover_H(x: MorphObject) -> CoverH:
    """
    Projective cover of (A -f-> B).

    With α: P -> A and δ0: Q -> Coker f projective covers and δ: Q -> B a lift of δ0,
    the cover is (P -> P+Q) mapped to x by (α, [fα δ]).

    Raises:
        VerificationError: If the map is not onto or its kernel is not superfluous.
    """
    alpha = projective_cover(x.A).epi
    coker, pi = cokernel(x.f)
    delta0 = projective_cover(coker).epi
    delta = lift_through_epi(pi, delta0)
    if delta is None:
        raise VerificationError("cover of the cokernel does not lift")
    total, inj, proj = direct_sum([alpha.source, delta.source])
    cover_object = MorphObject(inj[0])
    second = x.f.compose(alpha).compose(proj[0]) + delta.compose(proj[1])
    epi = MorphMap(cover_object, x, alpha, second)
    if not epi.is_surjective():
        logging.error(f"[projective_cover_H] cover of {x!r} is not onto")
        raise VerificationError("H-cover is not surjective")
    _check_superfluous(epi)
    return CoverH(cover_object, epi)


def _check_superfluous(epi: MorphMap) -> None:
    """Kernel of the cover inside rad of the T2-module of its source."""
    t = upsilon_map(epi)
    f = t.field
    _, k_incl = kernel(t)
    _, r_incl = radical(upsilon(epi.source))
    for v in t.algebra.vertices:
        if not f.contains(r_incl.blocks[v], k_incl.blocks[v]):
            logging.error(f"[projective_cover_H] kernel not superfluous at {v}")
            raise VerificationError("H-cover kernel is not superfluous")


def presentation_H(x: MorphObject) -> PresentationH:
    cover0 = projective_cover_H(x)
    k, incl = kernel_H(cover0.epi)
    cover1 = projective_cover_H(k)
    g = incl.compose(cover1.epi)
    return PresentationH(cover1.object, cover0.object, g, cover0.epi)
