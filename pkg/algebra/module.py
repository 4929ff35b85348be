# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from typing import Dict, List, Optional, Tuple

import numpy as np

from algebra.quiver_algebra import BoundQuiverAlgebra, Path
from linalg import Matrix, PrimeField
from models.errors import AlgebraMismatchError, HypothesisError, VerificationError


class Module:
    """
    A finite-dimensional left module, given as a representation of the bound quiver.

    Arrow a: v -> w acts by a (dim_w x dim_v) matrix. Matrices are frozen after
    construction; modules compare by value.
    """

    def __init__(
        self,
        algebra: BoundQuiverAlgebra,
        dims: Dict[str, int],
        matrices: Optional[Dict[str, Matrix]] = None,
        check: bool = True,
    ):
        self.algebra = algebra
        self.dims: Dict[str, int] = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        unknown = set(dims) - set(self.dims)
        if unknown:
            raise HypothesisError("known vertices", f"unknown vertices {sorted(unknown)}")
        matrices = matrices or {}
        self.matrices: Dict[str, Matrix] = {}
        for arrow in algebra.quiver.arrows:
            shape = (self.dims[arrow.target], self.dims[arrow.source])
            given = matrices.get(arrow.name)
            m = np.zeros(shape, dtype=np.int64) if given is None else np.array(given, dtype=np.int64)
            if m.size == 0:
                m = np.zeros(shape, dtype=np.int64)
            if m.shape != shape:
                raise HypothesisError(
                    "matrix shapes", f"arrow {arrow.name} expects {shape}, got {m.shape}"
                )
            m = m % algebra.p
            m.setflags(write=False)
            self.matrices[arrow.name] = m
        self._key = None
        if check:
            self._check_relations()

    # ---- basic data ---------------------------------------------------

    @property
    def field(self) -> PrimeField:
        return self.algebra.field

    def dim(self, vertex: str) -> int:
        return self.dims[vertex]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def offsets(self) -> Dict[str, int]:
        """Start index of each vertex block in the flattened total space."""
        result, start = {}, 0
        for v in self.algebra.vertices:
            result[v] = start
            start += self.dims[v]
        return result

    def path_matrix(self, path: Path) -> Matrix:
        m = self.field.eye(self.dims[path.source])
        for name in path.arrows:
            m = self.field.mul(self.matrices[name], m)
        return m

    def element_matrix(self, coords: np.ndarray, source: str, target: str) -> Matrix:
        """Action of a combination of basis paths source -> target."""
        result = self.field.zeros(self.dims[target], self.dims[source])
        for idx in self.algebra.paths_between(source, target):
            if coords[idx] % self.algebra.p:
                term = self.path_matrix(self.algebra.basis[idx])
                result = self.field.add(result, self.field.scale(term, coords[idx]))
        return result

    def _check_relations(self) -> None:
        for relation in self.algebra.relations:
            path0 = relation[0][1]
            total = self.field.zeros(self.dims[path0.target], self.dims[path0.source])
            for coef, path in relation:
                total = self.field.add(total, self.field.scale(self.path_matrix(path), coef))
            if total.any():
                raise HypothesisError(
                    "module satisfies the relations",
                    f"relation on {path0.source}->{path0.target} does not vanish",
                )

    # ---- identity -----------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = (
                id(self.algebra),
                self.dim_vector,
                tuple(self.matrices[a.name].tobytes() for a in self.algebra.quiver.arrows),
            )
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Module) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Module({self.algebra.name}, dims={self.dim_vector})"


class ModuleMap:
    """A homomorphism of representations, given by one matrix per vertex."""

    def __init__(
        self,
        source: Module,
        target: Module,
        blocks: Optional[Dict[str, Matrix]] = None,
        check: bool = True,
    ):
        if source.algebra is not target.algebra:
            raise AlgebraMismatchError(f"{source.algebra.name} vs {target.algebra.name}")
        self.source = source
        self.target = target
        blocks = blocks or {}
        self.blocks: Dict[str, Matrix] = {}
        for v in source.algebra.vertices:
            shape = (target.dims[v], source.dims[v])
            given = blocks.get(v)
            b = np.zeros(shape, dtype=np.int64) if given is None else np.array(given, dtype=np.int64)
            if b.size == 0:
                b = np.zeros(shape, dtype=np.int64)
            if b.shape != shape:
                raise VerificationError(f"block at {v} expects {shape}, got {b.shape}")
            b = b % source.algebra.p
            b.setflags(write=False)
            self.blocks[v] = b
        if check:
            self._check_intertwining()

    @property
    def field(self) -> PrimeField:
        return self.source.field

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.source.algebra

    def _check_intertwining(self) -> None:
        f = self.field
        for a in self.algebra.quiver.arrows:
            left = f.mul(self.target.matrices[a.name], self.blocks[a.source])
            right = f.mul(self.blocks[a.target], self.source.matrices[a.name])
            if not np.array_equal(left, right):
                raise VerificationError(f"map does not intertwine arrow {a.name}")

    # ---- algebra of maps ----------------------------------------------

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self ∘ other (apply `other` first)."""
        if other.target.dim_vector != self.source.dim_vector:
            raise VerificationError("composition of maps with mismatched modules")
        f = self.field
        return ModuleMap(
            other.source,
            self.target,
            {v: f.mul(self.blocks[v], other.blocks[v]) for v in self.algebra.vertices},
        )

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return self.compose(other)

    def _same_shape(self, other: "ModuleMap") -> None:
        if (
            self.source.dim_vector != other.source.dim_vector
            or self.target.dim_vector != other.target.dim_vector
        ):
            raise VerificationError("sum of maps with different source or target")

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        self._same_shape(other)
        return ModuleMap(
            self.source,
            self.target,
            {v: self.blocks[v] + other.blocks[v] for v in self.algebra.vertices},
            check=False,
        )

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        self._same_shape(other)
        return ModuleMap(
            self.source,
            self.target,
            {v: self.blocks[v] - other.blocks[v] for v in self.algebra.vertices},
            check=False,
        )

    def __neg__(self) -> "ModuleMap":
        return self.scale(-1)

    def scale(self, c: int) -> "ModuleMap":
        return ModuleMap(
            self.source,
            self.target,
            {v: self.blocks[v] * int(c) for v in self.algebra.vertices},
            check=False,
        )

    # ---- properties ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(b.any() for b in self.blocks.values())

    def rank(self) -> int:
        return sum(self.field.rank(b) for b in self.blocks.values())

    def is_injective(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_iso(self) -> bool:
        return self.source.dim_vector == self.target.dim_vector and self.is_injective()

    def inverse(self) -> "ModuleMap":
        if not self.is_iso():
            raise VerificationError("inverse of a non-isomorphism")
        return ModuleMap(
            self.target,
            self.source,
            {v: self.field.inverse(b) for v, b in self.blocks.items()},
        )

    def to_vector(self) -> np.ndarray:
        parts = [self.blocks[v].reshape(-1) for v in self.algebra.vertices]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def matrix(self) -> Matrix:
        """Block-diagonal matrix on the total spaces (vertex order)."""
        m = self.field.zeros(self.target.total_dim, self.source.total_dim)
        so, to = self.source.offsets(), self.target.offsets()
        for v, b in self.blocks.items():
            m[to[v] : to[v] + b.shape[0], so[v] : so[v] + b.shape[1]] = b
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleMap)
            and self.source == other.source
            and self.target == other.target
            and all(np.array_equal(self.blocks[v], other.blocks[v]) for v in self.blocks)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.dim_vector} -> {self.target.dim_vector}, rank={self.rank()})"


def identity(m: Module) -> ModuleMap:
    return ModuleMap(m, m, {v: m.field.eye(m.dims[v]) for v in m.algebra.vertices}, check=False)


def zero_map(source: Module, target: Module) -> ModuleMap:
    return ModuleMap(source, target, {}, check=False)


def zero_module(algebra: BoundQuiverAlgebra) -> Module:
    return Module(algebra, {}, check=False)


def map_from_vector(source: Module, target: Module, vector: np.ndarray, check: bool = True) -> ModuleMap:
    """Inverse of ModuleMap.to_vector (row-major blocks in vertex order)."""
    blocks, start = {}, 0
    for v in source.algebra.vertices:
        rows, cols = target.dims[v], source.dims[v]
        blocks[v] = np.array(vector[start : start + rows * cols], dtype=np.int64).reshape(rows, cols)
        start += rows * cols
    return ModuleMap(source, target, blocks, check=check)


def linear_combination(maps: List[ModuleMap], coeffs, source: Module, target: Module) -> ModuleMap:
    total = np.zeros(sum(target.dims[v] * source.dims[v] for v in source.algebra.vertices), dtype=np.int64)
    for c, h in zip(coeffs, maps):
        if int(c) % source.algebra.p:
            total = total + int(c) * h.to_vector()
    return map_from_vector(source, target, total % source.algebra.p, check=False)
