# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from dataclasses import dataclass
from typing import Optional, Tuple

from ar.sequences import ShortExactSeq
from morphism.hom import lift_H
from morphism.objects import MorphMap, MorphObject, identity_H
from morphism.t2 import upsilon_map


@dataclass(frozen=True)
class HSequence:
    """0 -> X -left-> Y -right-> Z -> 0 in H(Λ)."""

    left: MorphMap
    right: MorphMap
    name: str = ""

    @property
    def source(self) -> MorphObject:
        return self.left.source

    @property
    def middle(self) -> MorphObject:
        return self.left.target

    @property
    def target(self) -> MorphObject:
        return self.right.target

    def components(self) -> Tuple[ShortExactSeq, ShortExactSeq]:
        """The sequences of first and of second components."""
        return (
            ShortExactSeq(self.left.h1, self.right.h1),
            ShortExactSeq(self.left.h2, self.right.h2),
        )

    def is_exact(self) -> bool:
        if not (self.left.commutes() and self.right.commutes()):
            return False
        return all(seq.is_exact() for seq in self.components())

    def section(self) -> Optional[MorphMap]:
        return lift_H(self.right, identity_H(self.target))

    def is_split(self) -> bool:
        return self.section() is not None

    def to_t2(self) -> ShortExactSeq:
        return ShortExactSeq(upsilon_map(self.left), upsilon_map(self.right))

    def __repr__(self) -> str:
        return f"HSequence({self.name or 'unnamed'}: {self.source!r} -> {self.middle!r} -> {self.target!r})"
