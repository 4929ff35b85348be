# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import json
import re
from typing import Dict, List, NamedTuple, Optional

from algebra.module import Module
from algebra.quiver_algebra import Arrow, BoundQuiverAlgebra, Path, Quiver, Relation
from linalg import PrimeField
from models.errors import ParseError
from models.types import AlgebraRecord, ModuleRecord

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_POWER = re.compile(r"^([A-Za-z_][\w']*)\^(\d+)$")


class LoadedAlgebra(NamedTuple):
    """A parsed algebra record with its optional extras."""

    algebra: BoundQuiverAlgebra
    modules: Dict[str, Module]
    symmetric: Optional[bool]


def parse_path(quiver: Quiver, word: str, field: str = "relations") -> Path:
    """
    Parses ``a*b*c`` (traversal order) or ``x^k`` into a path.

    Raises:
        ParseError: On unknown arrows or non-composable words.
    """
    names: List[str] = []
    for token in word.split("*"):
        token = token.strip()
        if not token:
            raise ParseError(f"empty factor in '{word}'", field=field)
        power = _POWER.match(token)
        if power:
            names.extend([power.group(1)] * int(power.group(2)))
        else:
            names.append(token)
    for name in names:
        if name not in quiver.arrow_by_name:
            raise ParseError(f"unknown arrow '{name}' in '{word}'", field=field)
    arrows = [quiver.arrow_by_name[n] for n in names]
    for before, after in zip(arrows, arrows[1:]):
        if before.target != after.source:
            raise ParseError(f"arrows {before.name}, {after.name} do not compose", field=field)
    return Path(arrows[0].source, arrows[-1].target, tuple(names))


def parse_relation(quiver: Quiver, text: str, p: int) -> Relation:
    """
    Parses a signed sum of path words such as ``"a*b - 2 c*d"``.

    Args:
        quiver (Quiver): The quiver the arrows belong to.
        text (str): Relation text.
        p (int): Field characteristic (coefficients are reduced mod p).

    Returns:
        Relation: The (coefficient, path) terms with zero terms dropped.
    """
    pieces = _TERM_SPLIT.split(text.strip())
    sign, terms = 1, []
    if pieces and pieces[0] == "":
        pieces = pieces[1:]
    for piece in pieces:
        if piece in ("+", "-"):
            sign = -1 if piece == "-" else 1
            continue
        match = re.match(r"^(\d+)\s*\*?\s*(.+)$", piece)
        coef, word = (int(match.group(1)), match.group(2)) if match else (1, piece)
        value = (sign * coef) % p
        if value:
            terms.append((value, parse_path(quiver, word)))
        sign = 1
    if not terms:
        raise ParseError(f"relation '{text}' is empty or vanishes mod {p}", field="relations")
    return tuple(terms)


def parse_module(algebra: BoundQuiverAlgebra, record: ModuleRecord, field: str = "module") -> Module:
    """
    Builds a module from a ``{dims, matrices}`` record.

    Raises:
        ParseError: On unknown vertices/arrows or badly shaped matrices.
        HypothesisError: If the matrices violate a relation.
    """
    if not isinstance(record, dict) or "dims" not in record:
        raise ParseError("module record needs 'dims'", field=field)
    dims = {}
    for v, n in record["dims"].items():
        if v not in algebra.quiver.vertex_index:
            raise ParseError(f"unknown vertex '{v}'", field=f"{field}.dims")
        if not isinstance(n, int) or n < 0:
            raise ParseError(f"dimension at '{v}' must be a non-negative integer", field=f"{field}.dims")
        dims[v] = n
    matrices = {}
    for name, rows in (record.get("matrices") or {}).items():
        arrow = algebra.quiver.arrow_by_name.get(name)
        if arrow is None:
            raise ParseError(f"unknown arrow '{name}'", field=f"{field}.matrices")
        shape = (dims.get(arrow.target, 0), dims.get(arrow.source, 0))
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise ParseError(
                f"matrix of '{name}' must be {shape[0]}x{shape[1]}", field=f"{field}.matrices.{name}"
            )
        matrices[name] = algebra.field.matrix(rows, *shape)
    return Module(algebra, dims, matrices)


def parse_algebra(record: AlgebraRecord) -> LoadedAlgebra:
    """
    Builds the algebra (and any named modules) from a parsed record.

    Raises:
        ParseError: On missing or malformed fields.
        HypothesisError: On non-admissible relations.
    """
    for key in ("p", "vertices", "bound"):
        if key not in record:
            raise ParseError(f"missing '{key}'", field=key)
    try:
        field = PrimeField(int(record["p"]))
    except ValueError as e:
        raise ParseError(str(e), field="p")
    arrows = []
    for idx, a in enumerate(record.get("arrows", [])):
        try:
            arrows.append(Arrow(str(a["name"]), str(a["from"]), str(a["to"])))
        except (KeyError, TypeError):
            raise ParseError("arrow needs 'name', 'from' and 'to'", field=f"arrows[{idx}]")
    quiver = Quiver(record["vertices"], arrows)
    relations = [parse_relation(quiver, text, field.p) for text in record.get("relations", [])]
    algebra = BoundQuiverAlgebra(field, quiver, relations, int(record["bound"]), name=record.get("name", ""))
    modules = {
        name: parse_module(algebra, m, field=f"modules.{name}")
        for name, m in (record.get("modules") or {}).items()
    }
    symmetric = record.get("symmetric")
    return LoadedAlgebra(algebra, modules, None if symmetric is None else bool(symmetric))


def load_algebra_text(text: str) -> LoadedAlgebra:
    """Parses JSON algebra text; syntax errors carry the offending line."""
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", field="json", line=e.lineno)
    if not isinstance(record, dict):
        raise ParseError("algebra record must be a JSON object", field="json")
    return parse_algebra(record)


def module_to_record(m: Module) -> ModuleRecord:
    return {
        "dims": {v: m.dims[v] for v in m.algebra.vertices},
        "matrices": {name: mat.tolist() for name, mat in m.matrices.items() if mat.size},
    }
