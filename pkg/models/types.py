# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Any, Optional, TypedDict


class ArrowRecord(TypedDict):
    name: str  # Unique arrow name
    source: str  # "from" in JSON
    target: str  # "to" in JSON


class ModuleRecord(TypedDict):
    """A quiver representation in structured-text form."""

    dims: dict[str, int]  # Dimension per vertex
    matrices: dict[str, list[list[int]]]  # Row-major matrix per arrow (target x source)


class AlgebraRecord(TypedDict, total=False):
    """Presentation of a bound quiver algebra."""

    name: str  # Display name (e.g. "k[x]/(x^2)")
    p: int  # Characteristic of the prime field
    vertices: list[str]  # Vertex identifiers
    arrows: list[dict[str, str]]  # [{"name", "from", "to"}]
    relations: list[str]  # Signed path words, arrows in traversal order
    bound: int  # Nilpotency bound N
    symmetric: bool  # Declared symmetric (otherwise only weak symmetry is tested)
    modules: dict[str, ModuleRecord]  # Optional named modules for inline objects


class ObjectRecord(TypedDict):
    """An object (A -f-> B) of the morphism category."""

    A: Any  # ModuleRecord or a module name
    B: Any  # ModuleRecord or a module name
    f: dict[str, list[list[int]]]  # Matrix per vertex (dim B_v x dim A_v)


class CatalogEntry(TypedDict):
    id: int  # Stable catalog index
    name: str  # Display name
    dims: list[int]  # Dimension vector in quiver vertex order
    projective: bool
    injective: bool
    tau: Optional[int]  # Catalog index of the AR translate (None when projective)


class CheckRow(TypedDict, total=False):
    """One pass/fail line of a check report."""

    section: str  # check-paper section
    check: str  # Check identifier (e.g. "ass_at_0C")
    algebra: str  # Algebra name
    passed: bool
    detail: str  # Human readable result
    witness: Optional[str]  # Offending object for failures


class OrbitRow(TypedDict):
    index: int  # Signed iterate index i
    general: str  # τ_H^i x computed by iteration
    closed_form: Optional[str]  # The case-table value, when available
    agree: Optional[bool]


class ReportRecord(TypedDict, total=False):
    schema: str  # Always REPORT_SCHEMA
    command: str  # Subcommand name
    status: str  # "success" | "failed" | "error"
    algebra: str
    seed: int
    rows: list[dict[str, Any]]
    notes: list[str]
    extra: dict[str, Any]


class RunConfig(TypedDict, total=False):
    """Resolved command line configuration."""

    subcommand: str
    algebra: Optional[str]  # Bundled name or path
    object: Optional[str]  # Path or inline object expression
    module: Optional[str]  # Module expression for `tau`
    max_dim: int
    period_bound: int
    dot: Optional[str]  # DOT output path
    format: str  # "text" | "structured"
    seed: int
    output: Optional[str]  # Report output path
    sections: Optional[list[str]]
    power: int  # Signed power for tau / tau-h
    verbose: bool
