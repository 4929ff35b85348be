# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import threading
from typing import Dict, List, Optional, Tuple

from algebra.homology import hom_dim, radical, socle
from algebra.module import Module
from ar.decompose import is_isomorphic_indecomposable

InvariantKey = Tuple[Tuple[int, ...], int, int, int]


class CatalogManager:
    """
    Registry of iso-classes of indecomposable modules over one algebra.
    - Assigns stable integer ids in registration order.
    - Prefilters by (dimension vector, dim End, dim rad, dim soc) before iso search.
    - Ensures thread-safe operations using `threading.Lock`.
    """

    def __init__(self, algebra_name: str):
        """
        Initializes an empty registry.

        Args:
            algebra_name (str): Display name of the algebra, used in log messages.
        """
        self.algebra_name = algebra_name
        self.entries: List[Module] = []
        self.buckets: Dict[InvariantKey, List[int]] = {}
        self.lock: threading.Lock = threading.Lock()

    @staticmethod
    def invariant_key(m: Module) -> InvariantKey:
        return (
            m.dim_vector,
            hom_dim(m, m),
            radical(m)[0].total_dim,
            socle(m)[0].total_dim,
        )

    def __find_locked(self, m: Module, key: InvariantKey) -> Optional[int]:
        for idx in self.buckets.get(key, []):
            if is_isomorphic_indecomposable(self.entries[idx], m):
                return idx
        return None

    def find(self, m: Module) -> Optional[int]:
        """
        Looks up the id of the iso-class of an indecomposable module.

        Args:
            m (Module): An indecomposable module.

        Returns:
            Optional[int]: The id, or None when the class is not registered.
        """
        key = self.invariant_key(m)
        with self.lock:
            return self.__find_locked(m, key)

    def register(self, m: Module) -> Tuple[int, bool]:
        """
        Registers an indecomposable module unless its class is already present.

        Args:
            m (Module): An indecomposable module.

        Returns:
            Tuple[int, bool]: The class id, and whether the class is new.

        Process:
            1. Compute the invariant key outside the lock.
            2. Acquire the lock and search the key's bucket for an isomorphic entry.
            3. Append the module as a new entry when none is found.
        """
        key = self.invariant_key(m)
        with self.lock:
            found = self.__find_locked(m, key)
            if found is not None:
                return found, False
            self.entries.append(m)
            idx = len(self.entries) - 1
            self.buckets.setdefault(key, []).append(idx)
            return idx, True

    def get(self, idx: int) -> Module:
        with self.lock:
            return self.entries[idx]

    def __len__(self) -> int:
        with self.lock:
            return len(self.entries)

    def modules(self) -> List[Module]:
        with self.lock:
            return list(self.entries)
