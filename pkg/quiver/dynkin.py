# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

import networkx as nx

from config.types import E_ARM_LENGTHS
from models.errors import HypothesisError
from quiver.translation_quiver import TranslationQuiver

Node = Tuple[Hashable, int]


@dataclass
class DynkinResult:
    """Recognised tree class of a finite stable component, with its τ-orbit data."""

    dynkin_type: Optional[str]
    section: List[str]
    orbit_sizes: List[int]
    orbit_edges: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def to_record(self) -> Dict:
        return {
            "type": self.dynkin_type,
            "section": self.section,
            "orbit_sizes": self.orbit_sizes,
            "orbit_edges": [[a, b, n] for (a, b), n in sorted(self.orbit_edges.items())],
        }


def _graded_cone(g: TranslationQuiver, start: Hashable, depth: int) -> set:
    """Vertices (v, ℓ) of the graded cover reachable from (start, 0) along arrows, ℓ <= depth."""
    seen = {(start, 0)}
    queue = deque(seen)
    while queue:
        u, level = queue.popleft()
        if level == depth:
            continue
        for w in g.graph.successors(u):
            node = (w, level + 1)
            if node not in seen:
                seen.add(node)
                queue.append(node)
    return seen


def section_graph(g: TranslationQuiver) -> nx.Graph:
    """
    A section of the graded universal cover, as an undirected graph on vertex labels.

    The section keeps every reachable (v, ℓ) whose τ-predecessor (τv, ℓ - 2) is not
    reachable; these are the lowest cone vertices, one per orbit of the cover.
    """
    start = g.vertices[0]
    cone = _graded_cone(g, start, len(g.vertices) + 1)
    section = sorted(
        ((v, level) for v, level in cone if (g.tau(v), level - 2) not in cone),
        key=lambda node: (node[1], g.vertices.index(node[0])),
    )
    members = set(section)
    graph = nx.Graph()
    for v, level in section:
        graph.add_node((v, level), label=g.label(v))
    for v, level in section:
        for w in g.graph.successors(v):
            if (w, level + 1) in members:
                graph.add_edge((v, level), (w, level + 1))
    return graph


def tree_class(tree: nx.Graph) -> Optional[str]:
    """A_n, D_n, E_6, E_7 or E_8 for a Dynkin tree; None otherwise."""
    n = tree.number_of_nodes()
    if n == 0 or not nx.is_tree(tree):
        return None
    branches = [v for v, d in tree.degree() if d > 2]
    if not branches:
        return f"A{n}"
    if len(branches) > 1 or tree.degree(branches[0]) != 3:
        return None
    centre = branches[0]
    lengths = nx.single_source_shortest_path_length(tree, centre)
    arms = []
    for neighbour in tree.neighbors(centre):
        arm = nx.node_connected_component(tree.subgraph(set(tree) - {centre}), neighbour)
        arms.append(max(lengths[v] for v in arm))
    arms = tuple(sorted(arms))
    if arms[:2] == (1, 1):
        return f"D{n}"
    return E_ARM_LENGTHS.get(arms)


def orbit_graph(g: TranslationQuiver) -> Tuple[List[List[Hashable]], Dict[Tuple[int, int], int]]:
    """τ-orbits and the arrow count between each (unordered) pair of orbits."""
    orbits = g.tau_orbits()
    where = {v: k for k, orbit in enumerate(orbits) for v in orbit}
    edges: Counter = Counter()
    for u, v, _ in g.arrows:
        a, b = sorted((where[u], where[v]))
        edges[(a, b)] += 1
    return orbits, dict(edges)


def dynkin_recognition(g: TranslationQuiver) -> DynkinResult:
    """
    Recognises the tree class Δ of a finite stable translation quiver ℤΔ/G.

    Args:
        g (TranslationQuiver): A finite, stable and connected translation quiver.

    Returns:
        DynkinResult: The Dynkin type (None when the section is not a Dynkin tree),
        the section labels and the τ-orbit data.

    Raises:
        HypothesisError: If g is empty, not stable or not connected.
    """
    if not g.vertices or not g.is_stable():
        raise HypothesisError("stable translation quiver", g.name)
    if not g.is_connected():
        raise HypothesisError("connected translation quiver", g.name)
    section = section_graph(g)
    orbits, edges = orbit_graph(g)
    result = DynkinResult(
        dynkin_type=tree_class(section),
        section=[section.nodes[node]["label"] for node in section.nodes],
        orbit_sizes=sorted((len(orbit) for orbit in orbits), reverse=True),
        orbit_edges=edges,
    )
    logging.info(f"[dynkin_recognition] {g.name}: type {result.dynkin_type}, orbits {result.orbit_sizes}")
    return result
