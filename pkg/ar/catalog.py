# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from algebra.functors import injective, projective
from algebra.homology import cokernel, radical, socle
from algebra.module import Module
from algebra.quiver_algebra import BoundQuiverAlgebra
from ar.decompose import decompose
from ar.presentations import is_injective, is_projective
from ar.sequences import ShortExactSeq, almost_split_sequence_ending_at
from ar.translate import tau
from config import settings
from manager.catalog_manager import CatalogManager
from models.errors import CapExceededError
from models.types import CatalogEntry
from quiver.translation_quiver import TranslationQuiver
from utils.misc import dim_vector_str


@dataclass
class ARCatalog:
    """
    Complete list of indecomposables of a representation-finite algebra with AR data.

    Entries are ordered by total dimension, then dimension vector, then discovery.
    """

    algebra: BoundQuiverAlgebra
    modules: List[Module]
    projective: List[bool]
    injective: List[bool]
    tau: Dict[int, int] = field(default_factory=dict)
    sequences: Dict[int, ShortExactSeq] = field(default_factory=dict)
    arrows: List[Tuple[int, int, int]] = field(default_factory=list)
    names: List[str] = field(default_factory=list)
    manager: Optional[CatalogManager] = None
    order: Dict[int, int] = field(default_factory=dict)  # registry id -> catalog id

    def __len__(self) -> int:
        return len(self.modules)

    def index_of(self, m: Module) -> Optional[int]:
        """Catalog id of an indecomposable module, or None."""
        found = self.manager.find(m)
        return None if found is None else self.order[found]

    def tau_inverse(self, idx: int) -> Optional[int]:
        for k, v in self.tau.items():
            if v == idx:
                return k
        return None

    def middle_multiplicities(self, idx: int) -> Dict[int, int]:
        return {s: mult for s, t, mult in self.arrows if t == idx}

    def entries(self) -> List[CatalogEntry]:
        return [
            {
                "id": i,
                "name": self.names[i],
                "dims": list(m.dim_vector),
                "projective": self.projective[i],
                "injective": self.injective[i],
                "tau": self.tau.get(i),
            }
            for i, m in enumerate(self.modules)
        ]


def _neighbours(m: Module) -> List[Module]:
    """Modules whose summands must also be catalogued once M is."""
    found = []
    proj, inj = is_projective(m), is_injective(m)
    if proj:
        found.append(radical(m)[0])
    else:
        tau_m = tau(m)
        found.append(tau_m)
        found.append(almost_split_sequence_ending_at(m, tau_c=tau_m).middle)
    if inj:
        found.append(cokernel(socle(m)[1])[0])
    else:
        found.append(tau(m, -1))
    return found


def standard_name(m: Module, fallback: Optional[str] = None) -> str:
    """
    Short display name of an indecomposable: S, P, I or U<k> over a local algebra,
    S(v), P(v), I(v) otherwise; the fallback (or the dimension vector) for the rest.
    """
    algebra = m.algebra
    local = len(algebra.vertices) == 1

    def at(tag: str, vertex: str) -> str:
        return tag if local else f"{tag}({vertex})"

    if m.total_dim == 1:
        return at("S", algebra.vertices[m.dim_vector.index(1)])
    rad = radical(m)[0]
    if is_projective(m):
        return at("P", [v for v in algebra.vertices if rad.dims[v] < m.dims[v]][0])
    if is_injective(m):
        return at("I", [v for v in algebra.vertices if socle(m)[0].dims[v]][0])
    if local and len(algebra.quiver.arrows) == 1 and m.total_dim - rad.total_dim == 1:
        return f"U{m.total_dim}"
    return fallback or dim_vector_str((v, m.dims[v]) for v in algebra.vertices)


def enumerate_indecomposables(
    algebra: BoundQuiverAlgebra,
    dim_cap: Optional[int] = None,
    namer: Optional[Callable[[Module, int], str]] = None,
) -> ARCatalog:
    """
    Closes {projectives, injectives} under τ^{±1}, AR middle terms, rad P and I/soc I.

    Args:
        algebra (BoundQuiverAlgebra): A representation-finite algebra.
        dim_cap (Optional[int]): Largest allowed total dimension (default MAX_DIM).
        namer (Optional[Callable]): Display-name function of (module, id).

    Returns:
        ARCatalog: The catalog with τ, AR sequences and AR-quiver arrows.

    Raises:
        CapExceededError: If an indecomposable beyond the cap is produced.

    Process:
        1. Seed the registry with the summands of every P(v) and I(v).
        2. Expand the frontier concurrently, registering new classes in frontier order.
        3. Reorder the classes and compute AR sequences, τ and arrows.
    """
    cap = dim_cap or settings.MAX_DIM
    manager = CatalogManager(algebra.name)
    frontier: List[int] = []

    def add(m: Module) -> None:
        for summand in decompose(m).modules():
            if summand.total_dim > cap:
                logging.error(f"[enumerate_indecomposables] {summand.dim_vector} exceeds cap {cap}")
                raise CapExceededError(
                    f"indecomposable of dimension {summand.total_dim} exceeds cap {cap} "
                    f"over {algebra.name} (possibly infinite type)"
                )
            idx, new = manager.register(summand)
            if new:
                frontier.append(idx)

    for v in algebra.vertices:
        add(projective(algebra, v))
        add(injective(algebra, v))

    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        while frontier:
            batch = list(frontier)
            frontier.clear()
            results = list(executor.map(_neighbours, [manager.get(i) for i in batch]))
            for found in results:
                for m in found:
                    add(m)
            logging.info(f"[enumerate_indecomposables] {algebra.name}: {len(manager)} classes")

    discovered = manager.modules()
    order = sorted(range(len(discovered)), key=lambda i: (discovered[i].total_dim, discovered[i].dim_vector, i))
    modules = [discovered[i] for i in order]
    catalog = ARCatalog(
        algebra=algebra,
        modules=modules,
        projective=[is_projective(m) for m in modules],
        injective=[is_injective(m) for m in modules],
        manager=manager,
        order={old: new for new, old in enumerate(order)},
    )
    _fill_ar_data(catalog)
    namer = namer or (lambda m, i: standard_name(m, fallback=f"M{i}"))
    catalog.names = [namer(m, i) for i, m in enumerate(modules)]
    logging.info(f"[enumerate_indecomposables] {algebra.name}: complete with {len(modules)} classes")
    return catalog


def _fill_ar_data(catalog: ARCatalog) -> None:
    modules = catalog.modules

    def build(i: int):
        m = modules[i]
        if catalog.projective[i]:
            return i, None, decompose(radical(m)[0])
        tau_idx = catalog.index_of(tau(m))
        seq = almost_split_sequence_ending_at(m, catalog=modules, tau_c=modules[tau_idx])
        return i, (tau_idx, seq), decompose(seq.middle)

    with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
        results = list(executor.map(build, range(len(modules))))
    for i, translate, middle in results:
        if translate is not None:
            catalog.tau[i], catalog.sequences[i] = translate
        for summand, mult in middle:
            catalog.arrows.append((catalog.index_of(summand), i, mult))
    catalog.arrows.sort()


def ar_quiver(catalog: ARCatalog) -> TranslationQuiver:
    """The AR quiver: valuation (k, k) for a summand of multiplicity k in the middle term."""
    quiver = TranslationQuiver(catalog.algebra.name)
    for i, m in enumerate(catalog.modules):
        quiver.add_vertex(i, catalog.names[i], catalog.projective[i], catalog.injective[i], m.dim_vector)
    for source, target, mult in catalog.arrows:
        quiver.add_arrow(source, target, (mult, mult))
    for i, j in catalog.tau.items():
        quiver.set_translation(i, j)
    return quiver


@lru_cache(maxsize=None)
def _cached_catalog(algebra: BoundQuiverAlgebra, cap: int) -> ARCatalog:
    return enumerate_indecomposables(algebra, cap)


def module_catalog(algebra: BoundQuiverAlgebra, dim_cap: Optional[int] = None) -> ARCatalog:
    """enumerate_indecomposables with standard names, cached per algebra and cap."""
    return _cached_catalog(algebra, dim_cap or settings.MAX_DIM)
