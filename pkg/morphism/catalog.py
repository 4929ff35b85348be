# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

from algebra.quiver_algebra import BoundQuiverAlgebra
from ar.catalog import ARCatalog, enumerate_indecomposables
from config import settings
from morphism.labels import object_label
from morphism.objects import MorphObject
from morphism.t2 import t2_algebra, upsilon, upsilon_inverse


@dataclass
class HCatalog:
    """The indecomposables of H(Λ), pulled back from a complete T2(Λ)-catalog."""

    algebra: BoundQuiverAlgebra
    t2: ARCatalog
    objects: List[MorphObject]

    def __len__(self) -> int:
        return len(self.objects)

    @property
    def names(self) -> List[str]:
        return self.t2.names

    def index_of(self, x: MorphObject) -> Optional[int]:
        return self.t2.index_of(upsilon(x))

    def is_projective(self, idx: int) -> bool:
        return self.t2.projective[idx]

    def is_injective(self, idx: int) -> bool:
        return self.t2.injective[idx]

    def tau(self, idx: int) -> Optional[int]:
        return self.t2.tau.get(idx)

    def name_of(self, x: MorphObject) -> str:
        idx = self.index_of(x)
        return self.names[idx] if idx is not None else object_label(x)


@lru_cache(maxsize=None)
def _build(algebra: BoundQuiverAlgebra, cap: int) -> HCatalog:
    t2 = enumerate_indecomposables(
        t2_algebra(algebra),
        dim_cap=cap,
        namer=lambda m, i: object_label(upsilon_inverse(m, algebra)),
    )
    objects = [upsilon_inverse(m, algebra) for m in t2.modules]
    logging.info(f"[h_catalog] {algebra.name}: {len(objects)} indecomposable objects")
    return HCatalog(algebra, t2, objects)


def h_catalog(algebra: BoundQuiverAlgebra, dim_cap: Optional[int] = None) -> HCatalog:
    """
    Enumerates ind H(Λ) through T2(Λ); results are cached per algebra and cap.

    Raises:
        CapExceededError: If H(Λ) has an indecomposable beyond the cap.
    """
    return _build(algebra, dim_cap or settings.MAX_DIM)
