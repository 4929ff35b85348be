# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import networkx as nx

from ar.catalog import ARCatalog
from ar.presentations import is_projective, is_self_injective
from config.types import StableFunctor
from models.errors import HypothesisError, VerificationError
from models.types import CheckRow
from morphism.catalog import HCatalog
from morphism.decompose import is_isomorphic_H
from morphism.functors import cover_object
from morphism.objects import MorphObject, zero_to
from quiver.stable import stable_functor


@dataclass
class OrbitMap:
    """One of δ (A-orbits) or β (B-orbits) with its orbit members and check outcome."""

    functor: StableFunctor
    orbits: List[List[int]]
    component_of: Dict[int, int]  # module catalog id -> component id
    well_defined: bool = True
    translate_consistent: bool = True
    witnesses: List[str] = field(default_factory=list)
    targets: List[int] = field(default_factory=list)  # components holding a vertex of the mapped shape

    @property
    def image(self) -> List[int]:
        return sorted({self.component_of[orbit[0]] for orbit in self.orbits})


@dataclass
class DeltaBetaReport:
    algebra: str
    components: int
    delta: OrbitMap
    beta: OrbitMap

    def rows(self) -> List[CheckRow]:
        rows = []
        for name, item in (("delta", self.delta), ("beta", self.beta)):
            rows.append(
                {
                    "section": "quiver",
                    "check": f"{name}_well_defined",
                    "algebra": self.algebra,
                    "passed": item.well_defined and item.translate_consistent,
                    "detail": f"{len(item.orbits)} {item.functor.value}-orbits",
                    "witness": ", ".join(item.witnesses) or None,
                }
            )
            rows.append(
                {
                    "section": "quiver",
                    "check": f"{name}_surjective",
                    "algebra": self.algebra,
                    "passed": bool(item.orbits) and item.image == item.targets,
                    "detail": f"image {item.image} of targets {item.targets} ({self.components} component(s) in all)",
                    "witness": ", ".join(str(k) for k in sorted(set(item.targets) - set(item.image))) or None,
                }
            )
        return rows


def _orbits(permutation: Dict[int, int]) -> List[List[int]]:
    seen, orbits = set(), []
    for start in sorted(permutation):
        if start in seen:
            continue
        orbit, current = [], start
        while current not in seen:
            seen.add(current)
            orbit.append(current)
            current = permutation[current]
        orbits.append(orbit)
    return orbits


def _functor_permutation(module_catalog: ARCatalog, which: StableFunctor, picked: List[int]) -> Dict[int, int]:
    permutation = {}
    for i in picked:
        image = module_catalog.index_of(stable_functor(module_catalog.modules[i], which))
        if image is None or image not in picked:
            logging.error(f"[delta_beta_maps] {which.value}({module_catalog.names[i]}) is not in the catalog")
            raise VerificationError(f"{which.value} does not permute ind non-projective modules")
        permutation[i] = image
    return permutation


def _tau_power(catalog: HCatalog, idx: int, power: int) -> Optional[int]:
    for _ in range(power):
        idx = catalog.tau(idx)
        if idx is None:
            return None
    return idx


def _has_shape(x: MorphObject, which: StableFunctor) -> bool:
    if x.B.is_zero() or is_projective(x.B):
        return False
    if which == StableFunctor.A:
        return x.A.is_zero()
    return is_projective(x.A) and x.f.is_surjective() and is_isomorphic_H(x, cover_object(x.B))


def _target_components(catalog: HCatalog, which: StableFunctor, component: Dict[int, int]) -> List[int]:
    """Components of Γ_H holding some (0 -> M) (for A) or (P -p-> M) (for B), M non-projective."""
    return sorted({component[idx] for idx, x in enumerate(catalog.objects) if _has_shape(x, which)})


def _orbit_map(
    module_catalog: ARCatalog,
    catalog: HCatalog,
    which: StableFunctor,
    picked: List[int],
    component: Dict[int, int],
) -> OrbitMap:
    vertex = zero_to if which == StableFunctor.A else cover_object
    steps = 4 if which == StableFunctor.A else 2
    permutation = _functor_permutation(module_catalog, which, picked)
    h_index: Dict[int, int] = {}
    for i in picked:
        x: MorphObject = vertex(module_catalog.modules[i])
        h_index[i] = catalog.index_of(x)
        if h_index[i] is None:
            raise VerificationError(f"{catalog.name_of(x)} is missing from the H catalog")
    result = OrbitMap(which, _orbits(permutation), {i: component[h_index[i]] for i in picked})
    result.targets = _target_components(catalog, which, component)
    for orbit in result.orbits:
        if len({result.component_of[i] for i in orbit}) > 1:
            result.well_defined = False
            result.witnesses.append(module_catalog.names[orbit[0]])
    for i in picked:
        if _tau_power(catalog, h_index[i], steps) != h_index[permutation[i]]:
            result.translate_consistent = False
            result.witnesses.append(f"τ_H^{steps} at {module_catalog.names[i]}")
    return result


def delta_beta_maps(module_catalog: ARCatalog, catalog: HCatalog) -> DeltaBetaReport:
    """
    The maps δ: [M]_A -> component of (0 -> M) and β: [M]_B -> component of (P -p-> M).

    Args:
        module_catalog (ARCatalog): Complete catalog of ind Λ.
        catalog (HCatalog): Complete catalog of ind H(Λ) over the same algebra.

    Returns:
        DeltaBetaReport: Orbits, component assignments and the well-definedness and
        surjectivity outcome of both maps.

    Raises:
        HypothesisError: If Λ is not self-injective or has no non-projective module.

    Process:
        1. Read the A- and B-permutations of ind non-projective modules off the catalog.
        2. Take the weakly connected components of Γ_H.
        3. Check that orbit-mates share a component and that τ_H^4 (resp. τ_H^2) moves
           (0 -> M) to (0 -> AM) (resp. (P -> M) to (P' -> BM)).
        4. Compare the image with the components that hold a vertex of the mapped shape,
           found by scanning the H catalog.
    """
    algebra = module_catalog.algebra
    if not is_self_injective(algebra):
        raise HypothesisError("self-injective algebra", algebra.name)
    picked = [i for i in range(len(module_catalog)) if not module_catalog.projective[i]]
    if not picked:
        raise HypothesisError("non-semisimple algebra", algebra.name)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(catalog)))
    graph.add_edges_from((s, t) for s, t, _ in catalog.t2.arrows)
    component = {}
    for k, members in enumerate(sorted(nx.weakly_connected_components(graph), key=min)):
        for v in members:
            component[v] = k
    report = DeltaBetaReport(
        algebra=algebra.name,
        components=len(set(component.values())),
        delta=_orbit_map(module_catalog, catalog, StableFunctor.A, picked, component),
        beta=_orbit_map(module_catalog, catalog, StableFunctor.B, picked, component),
    )
    logging.info(
        f"[delta_beta_maps] {algebra.name}: {len(report.delta.orbits)} A-orbits, "
        f"{len(report.beta.orbits)} B-orbits, {report.components} component(s)"
    )
    return report
