# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging

from algebra.functors import dual_map, nakayama_map, star_map
from algebra.homology import cokernel, factor_through_mono, kernel, socle
from algebra.module import Module
from algebra.quiver_algebra import BoundQuiverAlgebra
from ar.decompose import decompose
from ar.presentations import (
    injective_envelope,
    is_injective,
    is_projective,
    is_self_injective,
    minimal_projective_presentation,
    projective_cover,
    syzygy,
)
from ar.translate import tau
from config.types import ClosedForm
from morphism.classify import is_injective_H, is_projective_H
from morphism.cover import presentation_H
from morphism.decompose import decompose_H, is_indecomposable_H
from morphism.hom import cokernel_H
from morphism.objects import MorphMap, MorphObject, direct_sum_H, zero_object, zero_to
from morphism.t2 import upsilon, upsilon_inverse
from models.errors import HypothesisError


def star_H(x: MorphObject) -> MorphObject:
    """(X -f-> Y)* = (Ker f* -incl-> Y*) over the opposite algebra; X, Y projective."""
    if not is_projective(x.A) or not is_projective(x.B):
        raise HypothesisError("projective components", f"{x!r} has a non-projective component")
    _, incl = kernel(star_map(x.f))
    return MorphObject(incl)


def star_H_map(h: MorphMap) -> MorphMap:
    """h*: star_H(target) -> star_H(source), second component h2*, first its restriction."""
    source, target = star_H(h.target), star_H(h.source)
    second = star_map(h.h2)
    first = factor_through_mono(target.f, second.compose(source.f))
    return MorphMap(source, target, first, second)


def dual_H(x: MorphObject) -> MorphObject:
    """D_H(A -f-> B) = (DB -Df-> DA)."""
    return MorphObject(dual_map(x.f))


def dual_H_map(h: MorphMap) -> MorphMap:
    return MorphMap(dual_H(h.target), dual_H(h.source), dual_map(h.h2), dual_map(h.h1))


def transpose_H(x: MorphObject) -> MorphObject:
    """Tr_H x = Coker(g*) for the minimal H-presentation P1 -g-> P0 of x."""
    pres = presentation_H(x)
    return cokernel_H(star_H_map(pres.g))[0]


def _strip_H(x: MorphObject, drop, label: str) -> MorphObject:
    if x.is_zero():
        return x
    parts = decompose_H(x)
    kept = [s for s, k in parts for _ in range(k) if not drop(s)]
    dropped = sum(k for _, k in parts) - len(kept)
    if not dropped:
        return x
    logging.warning(f"[{label}] stripping {dropped} summand(s) from {x!r}")
    if not kept:
        return zero_object(x.algebra)
    return kept[0] if len(kept) == 1 else direct_sum_H(kept)[0]


def strip_projective_H(x: MorphObject) -> MorphObject:
    return _strip_H(x, is_projective_H, "tau_H")


def strip_injective_H(x: MorphObject) -> MorphObject:
    return _strip_H(x, is_injective_H, "tau_H")


def tau_H_general(x: MorphObject, i: int = 1) -> MorphObject:
    """
    τ_H^i x through the native pipeline: τ_H = D_H Tr_H and τ_H^{-1} = Tr_H D_H.

    Projective summands (injective ones for negative i) are stripped with a warning;
    a projective object therefore yields the zero object.
    """
    current = x
    for _ in range(abs(i)):
        current = strip_projective_H(current) if i > 0 else strip_injective_H(current)
        if current.is_zero():
            logging.warning(f"[tau_H_general] translate of {x!r} is zero")
            return zero_object(x.algebra)
        current = dual_H(transpose_H(current)) if i > 0 else transpose_H(dual_H(current))
    return current


def tau_H_via_t2(x: MorphObject, i: int = 1) -> MorphObject:
    """Υ^{-1} τ^i_{T2(Λ)} Υ x."""
    return upsilon_inverse(tau(upsilon(x), i), x.algebra)


def _require_self_injective(algebra: BoundQuiverAlgebra) -> None:
    if not is_self_injective(algebra):
        raise HypothesisError("self-injective algebra", f"{algebra.name} is not self-injective")


def tau_H_closed_form(x: MorphObject, which: ClosedForm) -> MorphObject:
    """
    Closed forms of τ_H on three object shapes.

    Args:
        x (MorphObject): The object.
        which (ClosedForm): C0 for (C -> 0), ENVELOPE for (C -e-> I) with e an injective
            envelope over a self-injective algebra, PROJMAP for an indecomposable
            non-projective (P -> Q) between projectives with Q nonzero.

    Returns:
        MorphObject: (νP1 -> νP0), (P -p-> τΩ^{-1}C) or (0 -> τ Coker f) respectively.

    Raises:
        HypothesisError: Naming the violated precondition.
    """
    if which == ClosedForm.C0:
        if not x.B.is_zero():
            raise HypothesisError("object of shape (C -> 0)", repr(x))
        pres = minimal_projective_presentation(x.A)
        return MorphObject(nakayama_map(pres.g))
    if which == ClosedForm.ENVELOPE:
        _require_self_injective(x.algebra)
        c = x.A
        if not x.f.is_injective() or not is_injective(x.B):
            raise HypothesisError("injective envelope", "structure map is not a mono into an injective")
        _, s_incl = socle(x.B)
        f = x.algebra.field
        if not all(f.contains(x.f.blocks[v], s_incl.blocks[v]) for v in x.algebra.vertices):
            raise HypothesisError("injective envelope", "structure map is not essential")
        if any(is_projective(s) for s, _ in decompose(c)):
            raise HypothesisError("no projective summands", f"{c.dim_vector} has a projective summand")
        target = tau(syzygy(c, -1))
        return MorphObject(projective_cover(target).epi)
    if which == ClosedForm.PROJMAP:
        if not is_projective(x.A) or not is_projective(x.B):
            raise HypothesisError("projective components", repr(x))
        if x.B.is_zero():
            raise HypothesisError("nonzero target", f"{x!r} is covered by the C0 form")
        if is_projective_H(x) or not is_indecomposable_H(x):
            raise HypothesisError("indecomposable non-projective object", repr(x))
        return zero_to(tau(cokernel(x.f)[0]))
    raise HypothesisError("known closed form", str(which))


def envelope_object(c: Module) -> MorphObject:
    """(C -e-> I) for the injective envelope e of C."""
    return MorphObject(injective_envelope(c).mono)


def cover_object(c: Module) -> MorphObject:
    """(P -p-> C) for the projective cover p of C."""
    return MorphObject(projective_cover(c).epi)


def presentation_object(c: Module) -> MorphObject:
    """(P1 -g-> P0) for the minimal projective presentation of C."""
    return MorphObject(minimal_projective_presentation(c).g)
