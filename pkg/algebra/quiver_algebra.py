# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from linalg import PrimeField
from models.errors import HypothesisError, ParseError
from models.types import AlgebraRecord


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


class Path(NamedTuple):
    """A path in traversal order: first arrow first."""

    source: str
    target: str
    arrows: Tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def word(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e{self.source}"


Relation = Tuple[Tuple[int, Path], ...]
"""A linear combination of parallel paths, as (coefficient, path) terms."""


class Quiver:
    def __init__(self, vertices: Sequence[str], arrows: Sequence[Arrow]):
        self.vertices: Tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex identifier", field="vertices")
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ParseError("duplicate arrow name", field="arrows")
        vertex_set = set(self.vertices)
        for a in self.arrows:
            if a.source not in vertex_set or a.target not in vertex_set:
                raise ParseError(f"arrow {a.name} has an unknown endpoint", field="arrows")
        self.arrow_by_name: Dict[str, Arrow] = {a.name: a for a in self.arrows}
        self.vertex_index: Dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        self.arrows_out: Dict[str, List[Arrow]] = {v: [] for v in self.vertices}
        self.arrows_in: Dict[str, List[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            self.arrows_out[a.source].append(a)
            self.arrows_in[a.target].append(a)

    def paths(self, max_length: int) -> List[Path]:
        """All paths of length at most max_length, grouped by increasing length."""
        layer = [Path(v, v, ()) for v in self.vertices]
        result = list(layer)
        for _ in range(max_length):
            layer = [
                Path(p.source, a.target, p.arrows + (a.name,))
                for p in layer
                for a in self.arrows_out[p.target]
            ]
            result.extend(layer)
        return result

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])


def reverse_path(path: Path) -> Path:
    return Path(path.target, path.source, tuple(reversed(path.arrows)))


class BoundQuiverAlgebra:
    """
    A finite-dimensional algebra kQ/I presented by a quiver and admissible relations.

    The path basis is found degreewise: the relation ideal is spanned inside the
    space of paths of length at most N by all two-sided shifts of the relations,
    and the residue classes of the remaining (shortest) paths form the basis.
    Paths are ordered longest first so that every relation is solved for its
    longest terms.
    """

    def __init__(
        self,
        field: PrimeField,
        quiver: Quiver,
        relations: Sequence[Relation],
        bound: int,
        name: str = "",
    ):
        """
        Args:
            field (PrimeField): The ground field F_p.
            quiver (Quiver): The underlying quiver.
            relations (Sequence[Relation]): Generators of the admissible ideal.
            bound (int): Nilpotency bound N; every path of length >= N lies in the ideal.
            name (str): Display name.

        Raises:
            HypothesisError: If the relations are not admissible within the bound.
        """
        self.field = field
        self.quiver = quiver
        self.relations: Tuple[Relation, ...] = tuple(tuple(r) for r in relations)
        self.bound = int(bound)
        self.name = name or "algebra"
        self._opposite: Optional["BoundQuiverAlgebra"] = None
        self._check_relations()
        self._build_basis()
        logging.info(f"[BoundQuiverAlgebra] {self.name}: dim {self.dim} over {self.field}")

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra({self.name}, dim={self.dim})"

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    # ---- construction -------------------------------------------------

    def _check_relations(self) -> None:
        if self.quiver.arrows and self.bound < 2:
            raise HypothesisError("admissible bound", "N must be at least 2 when arrows exist")
        if self.bound < 1:
            raise HypothesisError("admissible bound", "N must be positive")
        for relation in self.relations:
            if not relation:
                raise HypothesisError("admissible relations", "empty relation")
            first = relation[0][1]
            for _, path in relation:
                if (path.source, path.target) != (first.source, first.target):
                    raise HypothesisError(
                        "admissible relations", f"terms of {relation} are not parallel"
                    )
                if path.length < 2:
                    raise HypothesisError(
                        "admissible relations",
                        f"term {path.word()} is not in the square of the arrow ideal",
                    )

    def _build_basis(self) -> None:
        n = self.bound
        paths = self.quiver.paths(n)
        vindex = self.quiver.vertex_index
        # 長いパスを先に並べて、関係式を最長項について解く
        columns = sorted(
            paths,
            key=lambda q: (-q.length, vindex[q.source], vindex[q.target], q.arrows),
        )
        self._column_of: Dict[Path, int] = {q: i for i, q in enumerate(columns)}
        self._columns = columns
        ending: Dict[str, List[Path]] = {v: [] for v in self.vertices}
        starting: Dict[str, List[Path]] = {v: [] for v in self.vertices}
        for q in paths:
            ending[q.target].append(q)
            starting[q.source].append(q)

        rows = []
        for relation in self.relations:
            shortest = min(path.length for _, path in relation)
            source, target = relation[0][1].source, relation[0][1].target
            for before in ending[source]:
                for after in starting[target]:
                    if before.length + after.length + shortest > n:
                        continue
                    row = np.zeros(len(columns), dtype=np.int64)
                    for coef, path in relation:
                        word = before.arrows + path.arrows + after.arrows
                        # N を超える項は捨てる (非斉次な関係式では N が根基の冪零指数であること)
                        if len(word) <= n:
                            col = self._column_of[Path(before.source, after.target, word)]
                            row[col] = (row[col] + coef) % self.p
                    if row.any():
                        rows.append(row)

        if rows:
            reduced, pivots = self.field.rref(np.array(rows, dtype=np.int64))
            self._reducer = reduced[: len(pivots)]
        else:
            pivots = []
            self._reducer = np.zeros((0, len(columns)), dtype=np.int64)
        self._pivots = np.array(pivots, dtype=np.int64)
        pivot_set = set(pivots)
        free = [c for c in range(len(columns)) if c not in pivot_set]
        basis = sorted(
            (columns[c] for c in free),
            key=lambda q: (q.length, vindex[q.source], vindex[q.target], q.arrows),
        )
        self.basis: List[Path] = basis
        self.dim = len(basis)
        self._basis_index: Dict[Path, int] = {q: i for i, q in enumerate(basis)}
        self._free_columns = np.array([self._column_of[q] for q in basis], dtype=np.int64)
        self.idempotent: Dict[str, int] = {
            v: self._basis_index[Path(v, v, ())] for v in self.vertices
        }

        for q in paths:
            if q.length == n and self.reduce_path(q).any():
                raise HypothesisError(
                    "admissible relations",
                    f"path {q.word()} of length {n} is not in the relation ideal "
                    "(bound too small or quotient infinite dimensional)",
                )

    # ---- normal forms -------------------------------------------------

    def reduce_path(self, path: Path) -> np.ndarray:
        """Coordinates of the residue class of a path over the basis."""
        coords = np.zeros(self.dim, dtype=np.int64)
        if path.length > self.bound:
            return coords
        if path in self._basis_index:
            coords[self._basis_index[path]] = 1
            return coords
        v = np.zeros(len(self._columns), dtype=np.int64)
        v[self._column_of[path]] = 1
        if self._pivots.size:
            v = (v - v[self._pivots] @ self._reducer) % self.p
        return v[self._free_columns] % self.p

    def compose(self, before: Path, after: Path) -> np.ndarray:
        """Coordinates of `before` followed by `after` (zero when not composable)."""
        if before.target != after.source:
            return np.zeros(self.dim, dtype=np.int64)
        return self.reduce_path(Path(before.source, after.target, before.arrows + after.arrows))

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """mult[i, j] = coordinates of basis[j] followed by basis[i]."""
        d = self.dim
        mult = np.zeros((d, d, d), dtype=np.int64)
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                if bj.target == bi.source:
                    mult[i, j] = self.compose(bj, bi)
        return mult

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product x·y in composition order (y first, then x)."""
        return np.einsum("i,j,ijk->k", x, y, self.structure_constants) % self.p

    def paths_between(self, source: str, target: str) -> List[int]:
        """Basis indices of the paths source -> target."""
        return [
            i for i, q in enumerate(self.basis) if q.source == source and q.target == target
        ]

    # ---- opposite -----------------------------------------------------

    def opposite(self) -> "BoundQuiverAlgebra":
        if self._opposite is None:
            relations = [
                tuple((coef, reverse_path(path)) for coef, path in relation)
                for relation in self.relations
            ]
            op = BoundQuiverAlgebra(
                self.field,
                self.quiver.opposite(),
                relations,
                self.bound,
                name=_opposite_name(self.name),
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    @cached_property
    def reversal_matrix(self) -> np.ndarray:
        """Columns: coordinates in the opposite basis of each reversed basis path."""
        op = self.opposite()
        r = np.zeros((op.dim, self.dim), dtype=np.int64)
        for j, path in enumerate(self.basis):
            r[:, j] = op.reduce_path(reverse_path(path))
        return r

    # ---- records ------------------------------------------------------

    def to_record(self) -> AlgebraRecord:
        return {
            "name": self.name,
            "p": self.p,
            "vertices": list(self.vertices),
            "arrows": [
                {"name": a.name, "from": a.source, "to": a.target} for a in self.quiver.arrows
            ],
            "relations": [relation_to_text(r) for r in self.relations],
            "bound": self.bound,
        }


def _opposite_name(name: str) -> str:
    return name[: -len("^op")] if name.endswith("^op") else f"{name}^op"


def relation_to_text(relation: Relation) -> str:
    parts = []
    for idx, (coef, path) in enumerate(relation):
        magnitude = abs(coef)
        term = path.word() if magnitude == 1 else f"{magnitude}*{path.word()}"
        if idx == 0:
            parts.append(("-" if coef < 0 else "") + term)
        else:
            parts.append(f"{'-' if coef < 0 else '+'} {term}")
    return " ".join(parts)
