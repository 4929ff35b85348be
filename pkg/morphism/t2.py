# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from functools import lru_cache

from algebra.module import Module, ModuleMap
from algebra.quiver_algebra import Arrow, BoundQuiverAlgebra, Path, Quiver
from morphism.objects import MorphMap, MorphObject
from models.errors import AlgebraMismatchError


def lower(vertex: str) -> str:
    """Vertex of T2 carrying the domain A of (A -> B)."""
    return f"{vertex}.0"


def upper(vertex: str) -> str:
    """Vertex of T2 carrying the codomain B of (A -> B)."""
    return f"{vertex}.1"


def connecting(vertex: str) -> str:
    return f"c.{vertex}"


@lru_cache(maxsize=None)
def t2_algebra(algebra: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """
    The triangular matrix algebra T2(Λ) as a bound quiver algebra.

    The quiver is two copies of Q joined by a connecting arrow v.0 -> v.1 at every
    vertex; relations are both copies of Λ's relations plus commutativity of every
    square (a.0 then c.w) = (c.v then a.1).
    """
    q = algebra.quiver
    vertices = [lower(v) for v in q.vertices] + [upper(v) for v in q.vertices]
    arrows = (
        [Arrow(f"{a.name}.0", lower(a.source), lower(a.target)) for a in q.arrows]
        + [Arrow(f"{a.name}.1", upper(a.source), upper(a.target)) for a in q.arrows]
        + [Arrow(connecting(v), lower(v), upper(v)) for v in q.vertices]
    )
    relations = []
    for layer, place in ((".0", lower), (".1", upper)):
        for relation in algebra.relations:
            relations.append(
                tuple(
                    (coef, Path(place(p.source), place(p.target), tuple(f"{n}{layer}" for n in p.arrows)))
                    for coef, p in relation
                )
            )
    for a in q.arrows:
        relations.append(
            (
                (1, Path(lower(a.source), upper(a.target), (f"{a.name}.0", connecting(a.target)))),
                (-1, Path(lower(a.source), upper(a.target), (connecting(a.source), f"{a.name}.1"))),
            )
        )
    t2 = BoundQuiverAlgebra(
        algebra.field, Quiver(vertices, arrows), relations, algebra.bound + 1, name=f"T2({algebra.name})"
    )
    logging.info(f"[t2_algebra] {t2.name}: dim {t2.dim} (3 x {algebra.dim})")
    return t2


def upsilon(x: MorphObject) -> Module:
    """The T2(Λ)-module of an object (A -f-> B)."""
    algebra = x.algebra
    dims = {lower(v): x.A.dims[v] for v in algebra.vertices}
    dims.update({upper(v): x.B.dims[v] for v in algebra.vertices})
    matrices = {f"{a.name}.0": x.A.matrices[a.name] for a in algebra.quiver.arrows}
    matrices.update({f"{a.name}.1": x.B.matrices[a.name] for a in algebra.quiver.arrows})
    matrices.update({connecting(v): x.f.blocks[v] for v in algebra.vertices})
    return Module(t2_algebra(algebra), dims, matrices, check=False)


def upsilon_map(h: MorphMap) -> ModuleMap:
    algebra = h.algebra
    blocks = {lower(v): h.h1.blocks[v] for v in algebra.vertices}
    blocks.update({upper(v): h.h2.blocks[v] for v in algebra.vertices})
    return ModuleMap(upsilon(h.source), upsilon(h.target), blocks, check=False)


def _check_t2(m: Module, algebra: BoundQuiverAlgebra) -> None:
    if m.algebra is not t2_algebra(algebra):
        raise AlgebraMismatchError(f"{m.algebra.name} is not T2({algebra.name})")


def upsilon_inverse(m: Module, algebra: BoundQuiverAlgebra) -> MorphObject:
    """The object (A -f-> B) of a T2(Λ)-module."""
    _check_t2(m, algebra)
    arrows = algebra.quiver.arrows
    a = Module(
        algebra,
        {v: m.dims[lower(v)] for v in algebra.vertices},
        {x.name: m.matrices[f"{x.name}.0"] for x in arrows},
        check=False,
    )
    b = Module(
        algebra,
        {v: m.dims[upper(v)] for v in algebra.vertices},
        {x.name: m.matrices[f"{x.name}.1"] for x in arrows},
        check=False,
    )
    f = ModuleMap(a, b, {v: m.matrices[connecting(v)] for v in algebra.vertices}, check=False)
    return MorphObject(f)


def upsilon_inverse_map(h: ModuleMap, algebra: BoundQuiverAlgebra) -> MorphMap:
    source = upsilon_inverse(h.source, algebra)
    target = upsilon_inverse(h.target, algebra)
    h1 = ModuleMap(source.A, target.A, {v: h.blocks[lower(v)] for v in algebra.vertices}, check=False)
    h2 = ModuleMap(source.B, target.B, {v: h.blocks[upper(v)] for v in algebra.vertices}, check=False)
    return MorphMap(source, target, h1, h2, check=False)
