# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from enum import Enum


class ClosedForm(Enum):
    """Closed-form shortcuts for τ_H on special object shapes."""

    C0 = "C0"  # (C -> 0)
    ENVELOPE = "envelope"  # (C -e-> I), e an injective envelope
    PROJMAP = "projmap"  # (P -> Q), both projective


class OrbitFamily(Enum):
    """Object families whose τ_H-orbits have closed-form case tables."""

    TYPE1_0C = "type1-0C"
    TYPE1_C1C = "type1-C1C"
    TYPE1_C0 = "type1-C0"
    TYPE2_PQ = "type2-PQ"
    TYPE3_COVER = "type3-cover"
    TYPE4_ENVELOPE = "type4-envelope"


class MiddleClaim(Enum):
    """Middle-term structure claims evaluated by the analyzers."""

    P41 = "P41"  # ending at (A->0): B = X + (I->0)
    P42 = "P42"  # ending at (P->Q), self-injective: B = W + (0->V)
    P43 = "P43"  # pullback/pushout sequence: no (0->Q), has non-projective
    P44 = "P44"  # (P=P)_1 appears when rad P indecomposable non-injective
    P45 = "P45"  # ending at (C-e->I), self-injective: B not projective, no (0->Q)


class StableFunctor(Enum):
    A = "A"  # τ ν τ²
    B = "B"  # τ Ω^{-1} τ


class ShapeTag(Enum):
    """Shape tags attached to H-summands in middle-term reports."""

    INJ_ZERO = "(I->0)"
    ZERO_PROJ = "(0->P)"
    PROJ_IDENTITY = "(P=P)"
    GENERIC = "generic"


class ReportFormat(Enum):
    TEXT = "text"
    STRUCTURED = "structured"


DYNKIN_FAMILIES = ["A", "D", "E"]
"""list: Dynkin families recognised for stable components of finite type."""

E_ARM_LENGTHS = {
    (1, 2, 2): "E6",
    (1, 2, 3): "E7",
    (1, 2, 4): "E8",
}
"""dict: Sorted arm lengths (edges) of a single-branch tree to exceptional type."""

EXIT_CODES = {
    "ok": 0,
    "check_failed": 1,
    "parse_error": 2,
    "hypothesis": 3,
    "verification": 4,
}
"""dict: Process exit status per outcome category."""

REPORT_SCHEMA = "hcat-report/1"
"""str: Schema tag written into every structured report."""

CHECK_SECTIONS = ["foundations", "tau", "sequences", "middle", "quiver"]
"""list: Ordered check-paper sections."""

BUNDLED_ALGEBRAS = ["k_x2", "k_x3", "k_x4", "nakayama_cyclic2", "kA2", "kA3"]
"""list: Algebra spec names shipped under data/algebras."""
