# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from typing import NamedTuple

from algebra.functors import (
    Tops,
    dual,
    dual_map,
    generators_cover,
    injective,
    injective_sum,
    projective,
    projective_sum,
)
from algebra.homology import cokernel, is_isomorphic, kernel, radical, socle
from algebra.module import Module, ModuleMap
from algebra.quiver_algebra import BoundQuiverAlgebra
from models.errors import VerificationError


class Cover(NamedTuple):
    """Projective cover P(tops) -> M."""

    module: Module
    epi: ModuleMap
    tops: Tops


class Envelope(NamedTuple):
    """Injective envelope M -> I(socles)."""

    module: Module
    mono: ModuleMap
    socles: Tops


class Presentation(NamedTuple):
    """Minimal projective presentation P1 -g-> P0 -epi-> M -> 0, with Ω M = Ker epi."""

    p1: Module
    p0: Module
    g: ModuleMap
    epi: ModuleMap
    tops1: Tops
    tops0: Tops
    syzygy: Module
    inclusion: ModuleMap
    syzygy_cover: ModuleMap


def is_projective(m: Module) -> bool:
    """M is projective iff its top cover is bijective."""
    tops, _ = generators_cover(m)
    return projective_sum(m.algebra, tops).total_dim == m.total_dim


def is_injective(m: Module) -> bool:
    return is_projective(dual(m))


def projective_cover(m: Module) -> Cover:
    """
    Minimal projective cover of M.

    Raises:
        VerificationError: If the kernel of the cover is not contained in rad P.
    """
    tops, epi = generators_cover(m)
    if not epi.is_surjective():
        logging.error(f"[projective_cover] cover of {m.dim_vector} is not surjective")
        raise VerificationError("projective cover is not surjective")
    _, k_incl = kernel(epi)
    _, r_incl = radical(epi.source)
    f = m.field
    for v in m.algebra.vertices:
        if not f.contains(r_incl.blocks[v], k_incl.blocks[v]):
            logging.error(f"[projective_cover] kernel not superfluous at vertex {v}")
            raise VerificationError("projective cover kernel is not superfluous")
    return Cover(epi.source, epi, tops)


def injective_envelope(m: Module) -> Envelope:
    """
    Injective envelope, computed as D of the projective cover of D M.

    Raises:
        VerificationError: If soc I is not contained in the image.
    """
    cover = projective_cover(dual(m))
    target = injective_sum(m.algebra, cover.tops)
    flipped = dual_map(cover.epi)
    mono = ModuleMap(m, target, flipped.blocks, check=False)
    _, s_incl = socle(target)
    f = m.field
    for v in m.algebra.vertices:
        if not f.contains(mono.blocks[v], s_incl.blocks[v]):
            logging.error(f"[injective_envelope] socle not in the image at vertex {v}")
            raise VerificationError("injective envelope is not essential")
    return Envelope(target, mono, cover.tops)


def minimal_projective_presentation(m: Module) -> Presentation:
    cover0 = projective_cover(m)
    omega, inclusion = kernel(cover0.epi)
    cover1 = projective_cover(omega)
    g = inclusion.compose(cover1.epi)
    return Presentation(
        cover1.module, cover0.module, g, cover0.epi, cover1.tops, cover0.tops, omega, inclusion, cover1.epi
    )


def syzygy_once(m: Module) -> Module:
    return kernel(projective_cover(m).epi)[0]


def cosyzygy_once(m: Module) -> Module:
    return cokernel(injective_envelope(m).mono)[0]


def syzygy(m: Module, i: int = 1) -> Module:
    """
    Ω^i M; negative i gives cosyzygies Ω^{-|i|} M.

    Ω^0 M is M with its projective (for i < 0: injective) summands removed.
    """
    from ar.translate import strip_injective, strip_projective

    if i >= 0:
        current = strip_projective(m)
        for _ in range(i):
            current = syzygy_once(current)
        return current
    current = strip_injective(m)
    for _ in range(-i):
        current = cosyzygy_once(current)
    return current


def is_self_injective(algebra: BoundQuiverAlgebra) -> bool:
    return all(is_injective(projective(algebra, v)) for v in algebra.vertices)


def is_weakly_symmetric(algebra: BoundQuiverAlgebra) -> bool:
    """P(v) and I(v) are isomorphic at every vertex."""
    return all(
        is_isomorphic(projective(algebra, v), injective(algebra, v)) for v in algebra.vertices
    )
