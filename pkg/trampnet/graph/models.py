from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from ..config import WEIGHT_KINDS

Port = Hashable
Edge = Tuple[Port, Port]

# weight kind -> edge attribute
WEIGHT_ATTRS: Dict[str, str] = {
    "frequency": "frequency",
    "dwt": "dwt_total",
    "volume": "volume_total",
}


def weight_attr(kind: str) -> str:
    try:
        return WEIGHT_ATTRS[kind]
    except KeyError:
        raise ValueError(
            f"Unknown weight {kind!r}. Use one of: {', '.join(WEIGHT_KINDS)}"
        ) from None


@dataclass(frozen=True)
class EdgeWeights:
    frequency: int
    dwt_total: float
    volume_total: float

    def __post_init__(self) -> None:
        if self.frequency < 1:
            raise ValueError(f"EdgeWeights: frequency must be >= 1, got {self.frequency}")
        if self.dwt_total <= 0:
            raise ValueError(f"EdgeWeights: dwt_total must be > 0, got {self.dwt_total}")
        if self.volume_total < 0:
            raise ValueError(f"EdgeWeights: volume_total must be >= 0, got {self.volume_total}")


UNIT_WEIGHTS = EdgeWeights(frequency=1, dwt_total=1.0, volume_total=1.0)


@dataclass(frozen=True)
class PortInfo:
    name: str = ""
    region: str = ""
    country: str = ""


class TradeGraph:
    """
    Simple directed port graph with aggregated edge weights.

    Wraps a frozen networkx DiGraph: nodes carry name/region/country,
    edges carry frequency, dwt_total and volume_total. `directed=False`
    marks reference graphs (ring lattices) that are stored with both
    orientations of every link.
    """

    def __init__(
        self,
        graph: nx.DiGraph,
        *,
        layer: str = "all",
        window: str = "ALL",
        directed: bool = True,
    ) -> None:
        if graph.is_multigraph() or not graph.is_directed():
            raise ValueError("TradeGraph needs a simple nx.DiGraph")
        loops = list(nx.selfloop_edges(graph))
        if loops:
            raise ValueError(f"TradeGraph: self-loops are not allowed: {loops[:3]}")
        self._g = nx.freeze(graph)
        self.layer = layer
        self.window = window
        self.directed = directed

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Edge],
        *,
        nodes: Iterable[Port] = (),
        weights: Optional[Dict[Edge, EdgeWeights]] = None,
        ports: Optional[Dict[Port, PortInfo]] = None,
        layer: str = "all",
        window: str = "ALL",
        directed: bool = True,
    ) -> "TradeGraph":
        """Build from an edge list; edges without explicit weights get unit weights."""
        edges = list(edges)
        weights = weights or {}
        ports = ports or {}
        g = nx.DiGraph()
        for node in _node_order(nodes, edges):
            info = ports.get(node, PortInfo())
            g.add_node(node, name=info.name, region=info.region, country=info.country)
        for u, v in sorted(set(edges)):
            w = weights.get((u, v), UNIT_WEIGHTS)
            g.add_edge(
                u, v,
                frequency=w.frequency,
                dwt_total=w.dwt_total,
                volume_total=w.volume_total,
            )
        return cls(g, layer=layer, window=window, directed=directed)

    @property
    def nx(self) -> nx.DiGraph:
        """The underlying (frozen) networkx graph."""
        return self._g

    @property
    def n(self) -> int:
        return self._g.number_of_nodes()

    @property
    def e(self) -> int:
        """Directed edges; links of an undirected reference graph count once."""
        m = self._g.number_of_edges()
        return m if self.directed else m // 2

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    def nodes(self) -> List[Port]:
        return sorted(self._g.nodes)

    def edges(self) -> List[Edge]:
        return sorted(self._g.edges)

    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self._g.edges)

    def weights(self, u: Port, v: Port) -> EdgeWeights:
        d = self._g.edges[u, v]
        return EdgeWeights(d["frequency"], d["dwt_total"], d["volume_total"])

    def port(self, node: Port) -> PortInfo:
        d = self._g.nodes[node]
        return PortInfo(d.get("name", ""), d.get("region", ""), d.get("country", ""))

    def in_degree(self) -> Dict[Port, int]:
        return {v: d for v, d in self._g.in_degree()}

    def out_degree(self) -> Dict[Port, int]:
        return {v: d for v, d in self._g.out_degree()}

    def subgraph(self, nodes: Iterable[Port]) -> "TradeGraph":
        """Induced subgraph, weights and attributes kept."""
        sub = nx.DiGraph(self._g.subgraph(nodes))
        return TradeGraph(sub, layer=self.layer, window=self.window, directed=self.directed)

    def with_unit_weights(self, edges: Iterable[Edge]) -> "TradeGraph":
        """Same nodes and attributes, the given edge set with unit weights."""
        g = nx.DiGraph()
        g.add_nodes_from(self._g.nodes(data=True))
        for u, v in sorted(edges):
            g.add_edge(u, v, frequency=1, dwt_total=1.0, volume_total=1.0)
        return TradeGraph(g, layer=self.layer, window=self.window, directed=self.directed)

    def __repr__(self) -> str:
        return f"TradeGraph(layer={self.layer!r}, window={self.window!r}, n={self.n}, e={self.e})"


@dataclass(frozen=True)
class ComponentSet:
    kind: str  # "weak" | "strong"
    # largest first, ties by smallest sorted member list
    members: Tuple[FrozenSet[Port], ...]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sizes(self) -> List[int]:
        return [len(m) for m in self.members]

    @property
    def giant(self) -> FrozenSet[Port]:
        return self.members[0] if self.members else frozenset()


@dataclass(frozen=True)
class GlobalCentralityReport:
    """One row of the global network statistics table."""
    layer: str
    window: str
    n: int
    e: int
    k: float
    phi: float
    n_w: int
    p_w: float
    d_w: int
    n_s: int
    p_s: float
    d_s: int
    l: float
    c: float
    # None when the degree assortativity is undefined (regular graphs)
    a: Optional[float]


def _node_order(nodes: Iterable[Port], edges: Iterable[Edge]) -> List[Port]:
    seen = dict.fromkeys(nodes)
    for u, v in edges:
        seen.setdefault(u)
        seen.setdefault(v)
    return sorted(seen)
