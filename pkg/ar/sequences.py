# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from algebra.functors import dual, dual_map
from algebra.homology import (
    cokernel,
    direct_sum,
    factor_through_epi,
    factor_through_mono,
    hom_basis,
    lift_through_epi,
    extend_through_mono,
    span_rank,
)
from algebra.module import Module, ModuleMap, identity, linear_combination
from ar.decompose import is_isomorphic_indecomposable, local_radical
from ar.presentations import is_injective, is_projective, minimal_projective_presentation
from ar.translate import tau
from config import settings
from models.errors import HypothesisError, VerificationError


@dataclass(frozen=True)
class ShortExactSeq:
    """0 -> A -left-> B -right-> C -> 0."""

    left: ModuleMap
    right: ModuleMap

    @property
    def source(self) -> Module:
        return self.left.source

    @property
    def middle(self) -> Module:
        return self.left.target

    @property
    def target(self) -> Module:
        return self.right.target

    def is_exact(self) -> bool:
        return (
            self.left.is_injective()
            and self.right.is_surjective()
            and self.right.compose(self.left).is_zero()
            and self.middle.total_dim == self.source.total_dim + self.target.total_dim
        )

    def is_split(self) -> bool:
        return lift_through_epi(self.right, identity(self.target)) is not None

    def dual(self) -> "ShortExactSeq":
        return ShortExactSeq(dual_map(self.right), dual_map(self.left))


def _radical_of_end(c: Module) -> List[ModuleMap]:
    rad = local_radical(c)
    if rad is None:
        raise HypothesisError("indecomposable end term", f"End of {c.dim_vector} is not local")
    return rad


def is_right_almost_split(g: ModuleMap, catalog: Sequence[Module]) -> bool:
    """
    Factorization test for g: B -> C with C indecomposable.

    Process:
        1. g must not be a retraction.
        2. For every catalog Y not isomorphic to C, Hom(Y, B) -> Hom(Y, C) is onto.
        3. rad End(C) lies in the image of Hom(C, B) -> End(C).
    """
    c = g.target
    if lift_through_epi(g, identity(c)) is not None:
        return False
    rad = _radical_of_end(c)
    for y in catalog:
        if is_isomorphic_indecomposable(y, c):
            continue
        target_dim = len(hom_basis(y, c))
        if target_dim == 0:
            continue
        images = [g.compose(b) for b in hom_basis(y, g.source)]
        if span_rank(images, c.field) < target_dim:
            logging.info(f"[is_right_almost_split] {y.dim_vector} -> {c.dim_vector} does not factor")
            return False
    images = [g.compose(b) for b in hom_basis(c, g.source)]
    full = span_rank(images, c.field)
    return span_rank(images + rad, c.field) == full


def is_left_almost_split(f: ModuleMap, catalog: Sequence[Module]) -> bool:
    """Dual test: D f is right almost split over the opposite algebra."""
    return is_right_almost_split(dual_map(f), [dual(y) for y in catalog])


def _ext_socle_element(c: Module, tau_c: Module, pres) -> ModuleMap:
    """
    A nonzero element of the End(C)-socle of Ext^1(C, τC) = Hom(ΩC, τC) / {u∘ι}.

    The socle is the set of classes killed by rad End(C) acting through lifts to ΩC;
    the first kernel vector outside the coboundaries is chosen.
    """
    f = c.field
    omega, iota = pres.syzygy, pres.inclusion
    cocycles = hom_basis(omega, tau_c)
    if not cocycles:
        raise VerificationError(f"Ext^1 vanishes for {c.dim_vector}")
    width = len(cocycles[0].to_vector())
    coboundaries = [u.compose(iota) for u in hom_basis(pres.p0, tau_c)]
    b_mat = (
        np.stack([b.to_vector() for b in coboundaries], axis=1)
        if coboundaries
        else f.zeros(width, 0)
    )
    _, q = f.quotient_projection(b_mat, width)
    h_mat = np.stack([h.to_vector() for h in cocycles], axis=1)
    equations = []
    for gamma in _radical_of_end(c):
        gamma0 = lift_through_epi(pres.epi, gamma.compose(pres.epi))
        if gamma0 is None:
            raise VerificationError("endomorphism does not lift to the projective cover")
        gamma1 = factor_through_mono(iota, gamma0.compose(iota))
        acted = np.stack([h.compose(gamma1).to_vector() for h in cocycles], axis=1)
        equations.append(f.mul(q, acted))
    system = np.vstack(equations) if equations else f.zeros(0, len(cocycles))
    socle = f.kernel(system)
    classes = f.mul(f.mul(q, h_mat), socle)
    for j in range(socle.shape[1]):
        if classes[:, j].any():
            return linear_combination(cocycles, socle[:, j], omega, tau_c)
    raise VerificationError(f"no non-split extension found for {c.dim_vector}")


def almost_split_sequence_ending_at(
    c: Module, catalog: Optional[Sequence[Module]] = None, tau_c: Optional[Module] = None
) -> ShortExactSeq:
    """
    Builds 0 -> τC -> E -> C -> 0 as the pushout of the presentation along a socle class.

    Args:
        c (Module): Indecomposable non-projective end term.
        catalog (Optional[Sequence[Module]]): When given (and verification enabled),
            the result is checked to be left and right almost split against it.
        tau_c (Optional[Module]): A representative of τC to use for the left term.

    Returns:
        ShortExactSeq: The almost split sequence.

    Raises:
        HypothesisError: If C is projective.
        VerificationError: If exactness, non-splitness or the catalog check fails.
    """
    if is_projective(c):
        raise HypothesisError("non-projective end term", f"{c.dim_vector} is projective")
    tau_c = tau_c if tau_c is not None else tau(c)
    pres = minimal_projective_presentation(c)
    phi = _ext_socle_element(c, tau_c, pres)

    total, inj, proj = direct_sum([tau_c, pres.p0])
    s = inj[0].compose(phi) - inj[1].compose(pres.inclusion)
    s = ModuleMap(s.source, s.target, s.blocks)
    middle, pi = cokernel(s)
    left = pi.compose(inj[0])
    right = factor_through_epi(pi, pres.epi.compose(proj[1]))
    seq = ShortExactSeq(left, right)
    if not seq.is_exact():
        logging.error(f"[almost_split_sequence_ending_at] sequence for {c.dim_vector} is not exact")
        raise VerificationError("constructed sequence is not exact")
    if seq.is_split():
        logging.error(f"[almost_split_sequence_ending_at] sequence for {c.dim_vector} splits")
        raise VerificationError("constructed sequence splits")
    if catalog is not None and settings.VERIFY_SEQUENCES:
        if not is_right_almost_split(right, catalog) or not is_left_almost_split(left, catalog):
            logging.error(f"[almost_split_sequence_ending_at] catalog check failed for {c.dim_vector}")
            raise VerificationError("constructed sequence is not almost split")
    logging.info(f"[almost_split_sequence_ending_at] {tau_c.dim_vector} -> {middle.dim_vector} -> {c.dim_vector}")
    return seq


def almost_split_sequence_starting_at(a: Module, catalog: Optional[Sequence[Module]] = None) -> ShortExactSeq:
    """0 -> A -> E -> τ^{-1}A -> 0 with A itself as the left term; A indecomposable non-injective."""
    if is_injective(a):
        raise HypothesisError("non-injective start term", f"{a.dim_vector} is injective")
    return almost_split_sequence_ending_at(tau(a, -1), catalog=catalog, tau_c=a)


def section_of(seq: ShortExactSeq) -> Optional[ModuleMap]:
    return lift_through_epi(seq.right, identity(seq.target))


def retraction_of(seq: ShortExactSeq) -> Optional[ModuleMap]:
    return extend_through_mono(seq.left, identity(seq.source))
