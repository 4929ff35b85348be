# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from typing import Optional

from algebra.homology import (
    cokernel,
    direct_sum,
    factor_through_epi,
    factor_through_mono,
    find_isomorphism,
    kernel,
    radical,
    socle,
)
from algebra.module import Module, ModuleMap, identity, zero_map
from ar.catalog import ARCatalog
from ar.decompose import is_indecomposable
from ar.presentations import injective_envelope, is_injective, is_projective, projective_cover
from ar.sequences import (
    ShortExactSeq,
    almost_split_sequence_ending_at,
    almost_split_sequence_starting_at,
    is_right_almost_split,
)
from config import settings
from models.errors import HypothesisError, VerificationError
from morphism.catalog import HCatalog
from morphism.decompose import is_indecomposable_H, is_isomorphic_H
from morphism.functors import tau_H_general
from morphism.objects import MorphMap, MorphObject, direct_sum_H, identity_object, to_zero, zero_to
from morphism.t2 import upsilon, upsilon_inverse_map
from sequences.hsequence import HSequence


def _require_almost_split(seq: ShortExactSeq, catalog: Optional[ARCatalog], label: str) -> None:
    if not seq.is_exact() or seq.is_split():
        raise HypothesisError("almost split input", f"{label}: not a non-split short exact sequence")
    if not is_indecomposable(seq.source) or not is_indecomposable(seq.target):
        raise HypothesisError("almost split input", f"{label}: end terms are not indecomposable")
    if catalog is not None and settings.VERIFY_SEQUENCES:
        if not is_right_almost_split(seq.right, catalog.modules):
            raise HypothesisError("almost split input", f"{label}: right map is not right almost split")


def _catalog_modules(catalog: Optional[ARCatalog]):
    return catalog.modules if catalog is not None else None


def _finish(left: MorphMap, right: MorphMap, name: str) -> HSequence:
    seq = HSequence(left, right, name)
    if not seq.is_exact():
        logging.error(f"[{name}] constructed sequence is not exact: {seq!r}")
        raise VerificationError(f"{name}: constructed sequence is not exact")
    logging.info(f"[{name}] built {seq!r}")
    return seq


def _check_translate(seq: HSequence) -> None:
    if settings.VERIFY_SEQUENCES and not is_isomorphic_H(tau_H_general(seq.target), seq.source):
        logging.error(f"[{seq.name}] τ_H of the end term differs from the start term")
        raise VerificationError(f"{seq.name}: τ_H(target) is not the source")


def ass_at_0C(seq: ShortExactSeq, catalog: Optional[ARCatalog] = None) -> HSequence:
    """0 -> (A = A)_1 -> (A -f-> B) -> (0 -> C) -> 0 for an AR sequence 0 -> A -f-> B -g-> C -> 0."""
    _require_almost_split(seq, catalog, "ass_at_0C")
    a, c = seq.source, seq.target
    source, middle, target = identity_object(a), MorphObject(seq.left), zero_to(c)
    left = MorphMap(source, middle, identity(a), seq.left)
    right = MorphMap(middle, target, zero_map(a, target.A), seq.right)
    return _finish(left, right, "ass_at_0C")


def ass_at_C1C(seq: ShortExactSeq, catalog: Optional[ARCatalog] = None) -> HSequence:
    """0 -> (A -> 0) -> (B -g-> C) -> (C = C)_1 -> 0 for an AR sequence 0 -> A -f-> B -g-> C -> 0."""
    _require_almost_split(seq, catalog, "ass_at_C1C")
    a, c = seq.source, seq.target
    source, middle, target = to_zero(a), MorphObject(seq.right), identity_object(c)
    left = MorphMap(source, middle, seq.left, zero_map(source.B, c))
    right = MorphMap(middle, target, seq.right, identity(c))
    return _finish(left, right, "ass_at_C1C")


def _glue(g_prime: ModuleMap, f: ModuleMap, name: str) -> HSequence:
    """
    0 -> (B' -g'-> A) -> (A = A)_1 + (B' -fg'-> B) -> (A -f-> B) -> 0.

    The left map has components (g', 1_A) and (1_B', f); the right map has
    components (1_A, f) and (-g', -1_B).
    """
    a, b_prime = f.source, g_prime.source
    source = MorphObject(g_prime)
    glued = MorphObject(f.compose(g_prime))
    iden = identity_object(a)
    middle, inj, proj = direct_sum_H([iden, glued])
    target = MorphObject(f)

    to_iden = MorphMap(source, iden, g_prime, identity(a))
    to_glued = MorphMap(source, glued, identity(b_prime), f)
    from_iden = MorphMap(iden, target, identity(a), f)
    from_glued = MorphMap(glued, target, -g_prime, -identity(f.target))

    left = inj[0].compose(to_iden) + inj[1].compose(to_glued)
    right = from_iden.compose(proj[0]) + from_glued.compose(proj[1])
    left = MorphMap(source, middle, left.h1, left.h2)
    right = MorphMap(middle, target, right.h1, right.h2)
    return _finish(left, right, name)


def glue_ass(delta: ShortExactSeq, delta_prime: ShortExactSeq, catalog: Optional[ARCatalog] = None) -> HSequence:
    """
    Glues two AR sequences 0 -> A -f-> B -> C -> 0 and 0 -> A' -> B' -g'-> A -> 0 of mod Λ.

    Returns:
        HSequence: 0 -> (B' -g'-> A) -> (A = A)_1 + (B' -fg'-> B) -> (A -f-> B) -> 0.

    Raises:
        HypothesisError: If an input is not almost split or the end terms do not match.
        VerificationError: If (B' -fg'-> B) is decomposable or exactness fails.
    """
    _require_almost_split(delta, catalog, "glue_ass")
    _require_almost_split(delta_prime, catalog, "glue_ass")
    a = delta.source
    g_prime = delta_prime.right
    if delta_prime.target != a:
        iso = find_isomorphism(delta_prime.target, a)
        if iso is None:
            raise HypothesisError("matching end terms", f"{delta_prime.target.dim_vector} is not {a.dim_vector}")
        g_prime = iso.compose(g_prime)
    seq = _glue(g_prime, delta.left, "glue_ass")
    if not is_indecomposable_H(MorphObject(delta.left.compose(g_prime))):
        logging.error("[glue_ass] the glued middle summand is decomposable")
        raise VerificationError("glue_ass: (B' -> B) summand is decomposable")
    return seq


def ass_proj_source(
    a: Module, seq: Optional[ShortExactSeq] = None, catalog: Optional[ARCatalog] = None
) -> HSequence:
    """
    0 -> (rad A -i-> A) -> (A = A)_1 + (rad A -fi-> B) -> (A -f-> B) -> 0.

    A is an indecomposable projective non-injective module and seq the AR sequence
    starting at A (computed when omitted).
    """
    if not is_projective(a) or is_injective(a) or not is_indecomposable(a):
        raise HypothesisError("projective non-injective indecomposable", f"{a.dim_vector}")
    seq = seq or almost_split_sequence_starting_at(a, _catalog_modules(catalog))
    _require_almost_split(seq, catalog, "ass_proj_source")
    f = seq.left
    if seq.source != a:
        iso = find_isomorphism(a, seq.source)
        if iso is None:
            raise HypothesisError("sequence starting at A", f"{seq.source.dim_vector} is not {a.dim_vector}")
        f = f.compose(iso)
    _, incl = radical(a)
    result = _glue(incl, f, "ass_proj_source")
    _check_translate(result)
    return result


def ass_at_proj_cover(
    c: Module, seq: Optional[ShortExactSeq] = None, catalog: Optional[ARCatalog] = None
) -> HSequence:
    """
    The almost split sequence ending at (P -p-> C), p a projective cover.

    Process:
        1. Take the AR sequence 0 -> τC -f-> E -g-> C -> 0.
        2. Pull it back along p: Z = Ker(E + P -> C), with s: τC -> Z, h: Z -> E, l: Z -> P.
        3. Push it out along the envelope e: τC -> I: X = Coker(τC -> E + I),
           with d: E -> X, u: I -> X, v: X -> C.
        4. Return 0 -> (τC -e-> I) -(s, u)-> (Z -dh-> X) -(l, v)-> (P -p-> C) -> 0.

    Raises:
        HypothesisError: If C is projective or decomposable.
        VerificationError: If a row of the diagram fails to be exact.
    """
    if is_projective(c) or not is_indecomposable(c):
        raise HypothesisError("indecomposable non-projective", f"{c.dim_vector}")
    eta = seq or almost_split_sequence_ending_at(c, _catalog_modules(catalog))
    _require_almost_split(eta, catalog, "ass_at_proj_cover")
    tau_c, e_mod, c = eta.source, eta.middle, eta.target
    f, g = eta.left, eta.right
    cover = projective_cover(c)
    p_mod, p = cover.module, cover.epi
    envelope = injective_envelope(tau_c)
    i_mod, e = envelope.module, envelope.mono

    _, inj, proj = direct_sum([e_mod, p_mod])
    fibre = g.compose(proj[0]) - p.compose(proj[1])
    _, z_incl = kernel(ModuleMap(fibre.source, fibre.target, fibre.blocks))
    h = proj[0].compose(z_incl)
    l = proj[1].compose(z_incl)
    s = factor_through_mono(z_incl, inj[0].compose(f))

    _, inj2, proj2 = direct_sum([e_mod, i_mod])
    spread = inj2[0].compose(f) - inj2[1].compose(e)
    _, x_proj = cokernel(ModuleMap(spread.source, spread.target, spread.blocks))
    d = x_proj.compose(inj2[0])
    u = x_proj.compose(inj2[1])
    v = factor_through_epi(x_proj, g.compose(proj2[0]))

    source, middle, target = MorphObject(e), MorphObject(d.compose(h)), MorphObject(p)
    left = MorphMap(source, middle, s, u)
    right = MorphMap(middle, target, l, v)
    result = _finish(left, right, "ass_at_proj_cover")
    _check_translate(result)
    return result


def ass_from_0P(p_mod: Module) -> HSequence:
    """
    0 -> (0 -> P) -> (Q -ip-> P) -> (Q -> 0) -> 0 for P projective-injective indecomposable,
    where p: Q -> soc P is a projective cover and i: soc P -> P the inclusion.
    """
    if not (is_projective(p_mod) and is_injective(p_mod) and is_indecomposable(p_mod)):
        raise HypothesisError("projective-injective indecomposable", f"{p_mod.dim_vector}")
    _, incl = socle(p_mod)
    cover = projective_cover(incl.source)
    q = cover.module
    source, middle, target = zero_to(p_mod), MorphObject(incl.compose(cover.epi)), to_zero(q)
    left = MorphMap(source, middle, zero_map(source.A, q), identity(p_mod))
    right = MorphMap(middle, target, identity(q), zero_map(p_mod, target.B))
    result = _finish(left, right, "ass_from_0P")
    if settings.VERIFY_SEQUENCES and not is_isomorphic_H(tau_H_general(source, -1), target):
        logging.error("[ass_from_0P] τ_H^{-1}(0 -> P) differs from (Q -> 0)")
        raise VerificationError("ass_from_0P: τ_H^{-1}(0 -> P) is not (Q -> 0)")
    return result


def ass_H_ending_at(x: MorphObject, catalog: Optional[HCatalog] = None) -> HSequence:
    """The almost split sequence of H ending at an indecomposable non-projective x, through T2(Λ)."""
    t2_seq = almost_split_sequence_ending_at(upsilon(x), catalog.t2.modules if catalog is not None else None)
    left = upsilon_inverse_map(t2_seq.left, x.algebra)
    right = upsilon_inverse_map(t2_seq.right, x.algebra)
    left = MorphMap(left.source, left.target, left.h1, left.h2)
    right = MorphMap(right.source, right.target, right.h1, right.h2)
    return _finish(left, right, "ass_H_ending_at")


def outer_terms_monic(seq: HSequence) -> bool:
    """Both end terms have monic structure maps, so the sequence lives in the submodule category."""
    return seq.source.f.is_injective() and seq.target.f.is_injective()
