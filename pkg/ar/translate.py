# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging

from algebra.functors import dual, nakayama_inverse_map, nakayama_map, star_map
from algebra.homology import cokernel, direct_sum, kernel
from algebra.module import Module, zero_module
from ar.decompose import decompose
from ar.presentations import (
    injective_envelope,
    is_injective,
    is_projective,
    minimal_projective_presentation,
)


def _strip(m: Module, keep, label: str) -> Module:
    if m.is_zero():
        return m
    parts = decompose(m)
    kept = [s for s in parts.modules() if keep(s)]
    dropped = parts.count - len(kept)
    if not dropped:
        return m
    logging.warning(f"[{label}] stripping {dropped} summand(s) from {m.dim_vector}")
    if not kept:
        return zero_module(m.algebra)
    return kept[0] if len(kept) == 1 else direct_sum(kept)[0]


def strip_projective(m: Module) -> Module:
    """M without its projective summands (up to isomorphism)."""
    return _strip(m, lambda s: not is_projective(s), "strip_projective")


def strip_injective(m: Module) -> Module:
    return _strip(m, lambda s: not is_injective(s), "strip_injective")


def transpose(m: Module) -> Module:
    """Tr M = Coker(g*) over the opposite algebra, g the minimal presentation map."""
    pres = minimal_projective_presentation(m)
    return cokernel(star_map(pres.g))[0]


def tau_once(m: Module) -> Module:
    return dual(transpose(m))


def tau_inverse_once(m: Module) -> Module:
    return transpose(dual(m))


def tau(m: Module, i: int = 1) -> Module:
    """
    τ^i M; negative i applies τ^{-1} = Tr D.

    Projective summands (injective ones for i < 0) are stripped with a warning.
    """
    current = m
    if i > 0:
        current = strip_projective(current)
        for _ in range(i):
            current = tau_once(current)
    elif i < 0:
        current = strip_injective(current)
        for _ in range(-i):
            current = tau_inverse_once(current)
    return current


def nakayama_module(m: Module) -> Module:
    """ν M = Coker(ν g) for the minimal presentation P1 -g-> P0 of M."""
    pres = minimal_projective_presentation(m)
    return cokernel(nakayama_map(pres.g))[0]


def nakayama_inverse(m: Module) -> Module:
    """ν^{-1} M = Ker(ν^{-1} h) for the minimal injective copresentation M -> I0 -h-> I1."""
    env0 = injective_envelope(m)
    quotient, proj = cokernel(env0.mono)
    env1 = injective_envelope(quotient)
    h = env1.mono.compose(proj)
    return kernel(nakayama_inverse_map(h))[0]
