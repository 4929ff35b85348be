# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from typing import List, Optional

from algebra.homology import is_isomorphic
from algebra.module import Module
from ar.catalog import ARCatalog
from ar.presentations import is_self_injective, is_weakly_symmetric, syzygy
from ar.translate import nakayama_inverse, nakayama_module, strip_projective, tau
from config.types import StableFunctor
from models.errors import HypothesisError
from models.types import CheckRow


def _nu(m: Module, power: int = 1) -> Module:
    for _ in range(power):
        m = strip_projective(nakayama_module(m))
    return m


def _step(m: Module, which: StableFunctor, forward: bool) -> Module:
    if which == StableFunctor.A:
        if forward:
            return tau(nakayama_module(tau(m, 2)))
        return tau(nakayama_inverse(tau(m, -1)), -2)
    if forward:
        return tau(syzygy(tau(m), -1))
    return tau(syzygy(tau(m, -1), 1), -1)


def stable_functor(m: Module, which: StableFunctor, i: int = 1) -> Module:
    """
    A^i M or B^i M on the stable category, with A = τ ν τ² and B = τ Ω^{-1} τ.

    Negative i applies A^{-1} = τ^{-2} ν^{-1} τ^{-1} or B^{-1} = τ^{-1} Ω τ^{-1}.
    Projective summands are stripped first and after every step.
    """
    current = strip_projective(m)
    for _ in range(abs(i)):
        if current.is_zero():
            break
        current = strip_projective(_step(current, which, i > 0))
    return current


def stable_iso(m: Module, n: Module) -> bool:
    """Isomorphism after removing projective summands."""
    return is_isomorphic(strip_projective(m), strip_projective(n))


def _identity_row(algebra: str, check: str, names: List[str], lefts: List[Module], rights: List[Module]) -> CheckRow:
    failures = [names[i] for i, (m, n) in enumerate(zip(lefts, rights)) if not stable_iso(m, n)]
    return {
        "section": "quiver",
        "check": check,
        "algebra": algebra,
        "passed": not failures,
        "detail": f"{len(names) - len(failures)}/{len(names)} modules",
        "witness": ", ".join(failures) or None,
    }


def stable_functor_identities(module_catalog: ARCatalog, symmetric: Optional[bool] = None) -> List[CheckRow]:
    """
    Compares A and B with powers of Ω and ν on every indecomposable non-projective.

    Args:
        module_catalog (ARCatalog): Complete catalog of ind Λ.
        symmetric (Optional[bool]): Declared symmetry; weak symmetry is tested when None.

    Returns:
        List[CheckRow]: A ≅ ν⁴Ω⁶ and B ≅ ν²Ω³ always; A ≅ Ω⁶ and B ≅ Ω³ for symmetric Λ.
        The detail of the B row also counts the modules where Ω³ν differs from B.

    Raises:
        HypothesisError: If Λ is not self-injective.
    """
    algebra = module_catalog.algebra
    if not is_self_injective(algebra):
        raise HypothesisError("self-injective algebra", algebra.name)
    if symmetric is None:
        symmetric = is_weakly_symmetric(algebra)
    picked = [i for i in range(len(module_catalog)) if not module_catalog.projective[i]]
    modules = [module_catalog.modules[i] for i in picked]
    names = [module_catalog.names[i] for i in picked]

    a_images = [stable_functor(m, StableFunctor.A) for m in modules]
    b_images = [stable_functor(m, StableFunctor.B) for m in modules]
    omega3 = [syzygy(m, 3) for m in modules]
    omega6 = [syzygy(m, 6) for m in modules]
    rows = [
        _identity_row(algebra.name, "A_is_nu4_omega6", names, a_images, [_nu(m, 4) for m in omega6]),
        _identity_row(algebra.name, "B_is_nu2_omega3", names, b_images, [_nu(m, 2) for m in omega3]),
    ]
    differing = sum(not stable_iso(b, syzygy(_nu(m), 3)) for b, m in zip(b_images, modules))
    rows[1]["detail"] += f"; Ω³ν differs on {differing}"
    if differing:
        logging.warning(f"[stable_functor_identities] Ω³ν differs from B on {differing} module(s) of {algebra.name}")
    if symmetric:
        rows.append(_identity_row(algebra.name, "A_is_omega6", names, a_images, omega6))
        rows.append(_identity_row(algebra.name, "B_is_omega3", names, b_images, omega3))
    return rows
