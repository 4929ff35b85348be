# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from collections import Counter
from typing import Dict, Hashable, List, Optional, Tuple

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

Valuation = Tuple[int, int]


class TranslationQuiver:
    """
    A valued translation quiver: vertices with proj/inj flags, valued arrows and
    a partial translation τ.

    Vertices keep their insertion order; all derived lists follow it.
    """

    def __init__(self, name: str = ""):
        self.name = name
        self.graph = nx.DiGraph()
        self.translation: Dict[Hashable, Hashable] = {}

    # ---- construction -------------------------------------------------

    def add_vertex(
        self,
        key: Hashable,
        label: str,
        projective: bool = False,
        injective: bool = False,
        dims: Tuple[int, ...] = (),
    ) -> None:
        self.graph.add_node(key, label=label, projective=projective, injective=injective, dims=dims)

    def add_arrow(self, source: Hashable, target: Hashable, valuation: Valuation = (1, 1)) -> None:
        if self.graph.has_edge(source, target):
            a, b = self.graph.edges[source, target]["valuation"]
            valuation = (a + valuation[0], b + valuation[1])
        self.graph.add_edge(source, target, valuation=valuation)

    def set_translation(self, vertex: Hashable, image: Hashable) -> None:
        self.translation[vertex] = image

    # ---- queries ------------------------------------------------------

    @property
    def vertices(self) -> List[Hashable]:
        return list(self.graph.nodes)

    @property
    def arrows(self) -> List[Tuple[Hashable, Hashable, Valuation]]:
        return [(u, v, d["valuation"]) for u, v, d in self.graph.edges(data=True)]

    def label(self, vertex: Hashable) -> str:
        return self.graph.nodes[vertex]["label"]

    def is_projective(self, vertex: Hashable) -> bool:
        return self.graph.nodes[vertex]["projective"]

    def is_injective(self, vertex: Hashable) -> bool:
        return self.graph.nodes[vertex]["injective"]

    def tau(self, vertex: Hashable) -> Optional[Hashable]:
        return self.translation.get(vertex)

    def tau_inverse(self, vertex: Hashable) -> Optional[Hashable]:
        for v, w in self.translation.items():
            if w == vertex:
                return v
        return None

    def incoming(self, vertex: Hashable) -> Counter:
        return Counter({u: self.graph.edges[u, vertex]["valuation"][0] for u in self.graph.predecessors(vertex)})

    def outgoing(self, vertex: Hashable) -> Counter:
        return Counter({w: self.graph.edges[vertex, w]["valuation"][0] for w in self.graph.successors(vertex)})

    def mesh_defects(self) -> List[Hashable]:
        """Vertices v with τv defined whose incoming arrows differ from the arrows out of τv."""
        return [
            v
            for v, tv in self.translation.items()
            if self.incoming(v) != self.outgoing(tv)
        ]

    def is_mesh_complete(self) -> bool:
        return not self.mesh_defects()

    # ---- derived quivers ----------------------------------------------

    def stable(self) -> "TranslationQuiver":
        """Induced subquiver on the vertices that are neither projective nor injective."""
        keep = [v for v in self.vertices if not self.is_projective(v) and not self.is_injective(v)]
        keep_set = set(keep)
        result = TranslationQuiver(f"{self.name} (stable)")
        for v in keep:
            data = self.graph.nodes[v]
            result.add_vertex(v, data["label"], False, False, data["dims"])
        for u, v, val in self.arrows:
            if u in keep_set and v in keep_set:
                result.graph.add_edge(u, v, valuation=val)
        for v, w in self.translation.items():
            if v in keep_set and w in keep_set:
                result.set_translation(v, w)
        return result

    def is_stable(self) -> bool:
        """τ is a bijection on the vertex set (τ^i defined everywhere for all i)."""
        images = set(self.translation.values())
        everything = set(self.vertices)
        return set(self.translation) == everything and images == everything

    def is_connected(self) -> bool:
        return self.graph.number_of_nodes() > 0 and nx.is_weakly_connected(self.graph)

    def tau_orbits(self) -> List[List[Hashable]]:
        """τ-orbits of a stable quiver, each started at its first vertex in insertion order."""
        seen, orbits = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            orbit, current = [], v
            while current is not None and current not in seen:
                seen.add(current)
                orbit.append(current)
                current = self.translation.get(current)
            orbits.append(orbit)
        return orbits

    # ---- export -------------------------------------------------------

    def to_dot(self) -> str:
        """DOT text; projectives are boxes, injectives diamonds, both double octagons."""
        g = nx.MultiDiGraph(name=self.name or "quiver")
        for v in self.vertices:
            data = self.graph.nodes[v]
            if data["projective"] and data["injective"]:
                shape = "doubleoctagon"
            elif data["projective"]:
                shape = "box"
            elif data["injective"]:
                shape = "diamond"
            else:
                shape = "ellipse"
            g.add_node(str(v), label=f'"{data["label"]}"', shape=shape)
        for u, v, (a, b) in self.arrows:
            attrs = {} if (a, b) == (1, 1) else {"label": f'"({a},{b})"'}
            g.add_edge(str(u), str(v), **attrs)
        for v, w in self.translation.items():
            g.add_edge(str(v), str(w), style="dashed", constraint="false")
        return to_pydot(g).to_string()

    def to_record(self) -> Dict:
        return {
            "name": self.name,
            "vertices": [
                {
                    "id": str(v),
                    "label": self.label(v),
                    "projective": self.is_projective(v),
                    "injective": self.is_injective(v),
                    "dims": list(self.graph.nodes[v]["dims"]),
                }
                for v in self.vertices
            ],
            "arrows": [[str(u), str(v), list(val)] for u, v, val in self.arrows],
            "translation": {str(v): str(w) for v, w in self.translation.items()},
        }
