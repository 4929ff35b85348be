# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from algebra.homology import direct_sum, direct_sum_map
from algebra.module import Module, ModuleMap, identity, zero_map, zero_module
from algebra.quiver_algebra import BoundQuiverAlgebra
from models.errors import AlgebraMismatchError, VerificationError


@dataclass(frozen=True, eq=False)
class MorphObject:
    """An object (A -f-> B) of H(Λ)."""

    f: ModuleMap

    @property
    def A(self) -> Module:
        return self.f.source

    @property
    def B(self) -> Module:
        return self.f.target

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.f.algebra

    @property
    def total_dim(self) -> int:
        return self.A.total_dim + self.B.total_dim

    @property
    def dims(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.A.dim_vector, self.B.dim_vector

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, MorphObject) and self.f == other.f

    __hash__ = None

    def __repr__(self) -> str:
        return f"({self.A.dim_vector} --{self.f.rank()}--> {self.B.dim_vector})"


@dataclass(frozen=True, eq=False)
class MorphMap:
    """A commuting square (h1, h2): (A -f-> B) -> (C -g-> D) with g h1 = h2 f."""

    source: MorphObject
    target: MorphObject
    h1: ModuleMap
    h2: ModuleMap
    check: bool = True

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatchError(f"{self.source.algebra.name} vs {self.target.algebra.name}")
        if self.check and not self.commutes():
            raise VerificationError("square does not commute")

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.source.algebra

    def commutes(self) -> bool:
        return (self.target.f.compose(self.h1) - self.h2.compose(self.source.f)).is_zero()

    def compose(self, other: "MorphMap") -> "MorphMap":
        """self ∘ other."""
        return MorphMap(other.source, self.target, self.h1.compose(other.h1), self.h2.compose(other.h2))

    def __add__(self, other: "MorphMap") -> "MorphMap":
        return MorphMap(self.source, self.target, self.h1 + other.h1, self.h2 + other.h2, check=False)

    def __sub__(self, other: "MorphMap") -> "MorphMap":
        return MorphMap(self.source, self.target, self.h1 - other.h1, self.h2 - other.h2, check=False)

    def scale(self, c: int) -> "MorphMap":
        return MorphMap(self.source, self.target, self.h1.scale(c), self.h2.scale(c), check=False)

    def is_zero(self) -> bool:
        return self.h1.is_zero() and self.h2.is_zero()

    def is_iso(self) -> bool:
        return self.h1.is_iso() and self.h2.is_iso()

    def is_injective(self) -> bool:
        return self.h1.is_injective() and self.h2.is_injective()

    def is_surjective(self) -> bool:
        return self.h1.is_surjective() and self.h2.is_surjective()

    def inverse(self) -> "MorphMap":
        return MorphMap(self.target, self.source, self.h1.inverse(), self.h2.inverse())

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.h1.to_vector(), self.h2.to_vector()])

    def __repr__(self) -> str:
        return f"MorphMap({self.source!r} -> {self.target!r})"


# ---- canonical objects ---------------------------------------------------


def zero_object(algebra: BoundQuiverAlgebra) -> MorphObject:
    z = zero_module(algebra)
    return MorphObject(zero_map(z, z))


def zero_to(x: Module) -> MorphObject:
    """(0 -> X)."""
    return MorphObject(zero_map(zero_module(x.algebra), x))


def to_zero(x: Module) -> MorphObject:
    """(X -> 0)."""
    return MorphObject(zero_map(x, zero_module(x.algebra)))


def identity_object(x: Module) -> MorphObject:
    """(X =1 X)."""
    return MorphObject(identity(x))


def identity_H(x: MorphObject) -> MorphMap:
    return MorphMap(x, x, identity(x.A), identity(x.B), check=False)


def zero_map_H(x: MorphObject, y: MorphObject) -> MorphMap:
    return MorphMap(x, y, zero_map(x.A, y.A), zero_map(x.B, y.B), check=False)


def direct_sum_H(
    objects: Sequence[MorphObject], algebra: BoundQuiverAlgebra = None
) -> Tuple[MorphObject, List[MorphMap], List[MorphMap]]:
    """Biproduct in H with injections and projections."""
    if not objects:
        return zero_object(algebra), [], []
    a_sum, a_inj, a_proj = direct_sum([x.A for x in objects])
    b_sum, b_inj, b_proj = direct_sum([x.B for x in objects])
    total = MorphObject(direct_sum_map([x.f for x in objects], a_sum, b_sum))
    injections = [MorphMap(x, total, a_inj[i], b_inj[i]) for i, x in enumerate(objects)]
    projections = [MorphMap(total, x, a_proj[i], b_proj[i]) for i, x in enumerate(objects)]
    return total, injections, projections
