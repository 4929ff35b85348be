# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import re
from typing import Any, Dict

from algebra.functors import injective, loop_power_map, projective, simple, uniserial_module
from algebra.module import Module, ModuleMap
from algebra.records import LoadedAlgebra, parse_module
from morphism.functors import cover_object, envelope_object
from morphism.objects import MorphObject, identity_object, to_zero, zero_to
from models.errors import HypothesisError, ParseError, VerificationError
from models.types import ObjectRecord

_VERTEX_REF = re.compile(r"^([SPI])\((.+)\)$")
_UNISERIAL = re.compile(r"^U(\d+)$")
_COMPOSITE = re.compile(r"^L-h(\d+)->L$")


def parse_module_ref(loaded: LoadedAlgebra, token: str) -> Module:
    """
    Resolves S, P, I, U<k>, S(v), P(v), I(v) or a name from the modules table.

    Raises:
        ParseError: On unknown names or bare S/P/I over a non-local algebra.
    """
    algebra = loaded.algebra
    token = token.strip()
    if token in loaded.modules:
        return loaded.modules[token]
    builders = {"S": simple, "P": projective, "I": injective}
    match = _VERTEX_REF.match(token)
    if match:
        vertex = match.group(2)
        if vertex not in algebra.quiver.vertex_index:
            raise ParseError(f"unknown vertex '{vertex}'", field="object")
        return builders[match.group(1)](algebra, vertex)
    if token in builders:
        if len(algebra.vertices) != 1:
            raise ParseError(f"'{token}' needs a vertex over {algebra.name}", field="object")
        return builders[token](algebra, algebra.vertices[0])
    match = _UNISERIAL.match(token)
    if match:
        try:
            return uniserial_module(algebra, int(match.group(1)))
        except HypothesisError as e:
            raise ParseError(str(e), field="object")
    raise ParseError(f"unknown module '{token}'", field="object")


def parse_object(loaded: LoadedAlgebra, text: str) -> MorphObject:
    """
    Parses an inline object expression.

    Forms: ``0->X``, ``X->0``, ``X=X``, ``L-hK->L``, ``P->X`` (projective cover of X)
    and ``X->I`` (injective envelope of X). Unicode arrows are accepted.
    """
    expr = re.sub(r"\s+", "", text.replace("→", "->").replace("⟶", "->")).strip("()")
    match = _COMPOSITE.match(expr)
    if match:
        n, k = loaded.algebra.dim, int(match.group(1))
        if not 1 <= k < n:
            raise ParseError(f"h{k} needs 1 <= {k} < {n}", field="object")
        return MorphObject(loop_power_map(loaded.algebra, n - k))
    if "->" in expr:
        left, _, right = expr.partition("->")
        if left == "0":
            return zero_to(parse_module_ref(loaded, right))
        if right == "0":
            return to_zero(parse_module_ref(loaded, left))
        if left == "P":
            return cover_object(parse_module_ref(loaded, right))
        if right == "I":
            return envelope_object(parse_module_ref(loaded, left))
        raise ParseError(f"unsupported map in '{text}'", field="object")
    if "=" in expr:
        left, _, right = expr.partition("=")
        if left != right:
            raise ParseError(f"identity object needs equal sides in '{text}'", field="object")
        return identity_object(parse_module_ref(loaded, left))
    raise ParseError(f"cannot parse object '{text}'", field="object")


def _resolve(loaded: LoadedAlgebra, ref: Any, field: str) -> Module:
    if isinstance(ref, str):
        return parse_module_ref(loaded, ref)
    return parse_module(loaded.algebra, ref, field=field)


def parse_object_record(loaded: LoadedAlgebra, record: ObjectRecord) -> MorphObject:
    """Builds (A -f-> B) from ``{A, B, f}``; A and B are module records or names."""
    for key in ("A", "B"):
        if key not in record:
            raise ParseError(f"missing '{key}'", field=key)
    a = _resolve(loaded, record["A"], "A")
    b = _resolve(loaded, record["B"], "B")
    blocks: Dict[str, Any] = {}
    for v, rows in (record.get("f") or {}).items():
        if v not in loaded.algebra.quiver.vertex_index:
            raise ParseError(f"unknown vertex '{v}'", field="f")
        try:
            blocks[v] = loaded.algebra.field.matrix(rows, b.dims[v], a.dims[v])
        except ValueError as e:
            raise ParseError(str(e), field=f"f.{v}")
    try:
        return MorphObject(ModuleMap(a, b, blocks))
    except VerificationError as e:
        raise HypothesisError("structure map is a module homomorphism", str(e))
