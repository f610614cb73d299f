from __future__ import annotations

import logging
from typing import FrozenSet, Iterable, Optional, Union

import networkx as nx

from ..errors import ComputeError
from .models import ComponentSet, GlobalCentralityReport, Port, TradeGraph, weight_attr

logger = logging.getLogger(__name__)

COMPONENT_KINDS = ("weak", "strong")
DIAMETER_MODES = ("undirected", "directed")


def mean_degree(n: int, e: int) -> float:
    """Average in- (or out-) degree e/n; 0 for an empty graph."""
    return e / n if n else 0.0


def density(n: int, e: int) -> float:
    """e / (n(n-1)); 0 when n < 2."""
    if n < 2:
        return 0.0
    return e / (n * (n - 1))


def undirected_projection(
    g: Union[TradeGraph, nx.Graph],
    weight: Optional[str] = None,
) -> nx.Graph:
    """
    Undirected simple graph over the same nodes.

    With a weight kind ('frequency', 'dwt', 'volume') each link gets a
    'weight' attribute equal to the sum over both directions. Projecting an
    undirected graph returns a copy of it.
    """
    if isinstance(g, nx.Graph) and not g.is_directed():
        return nx.Graph(g)

    src = g.nx if isinstance(g, TradeGraph) else g
    reference = isinstance(g, TradeGraph) and not g.directed
    attr = weight_attr(weight) if weight else None

    out = nx.Graph()
    out.add_nodes_from(sorted(src.nodes(data=True), key=lambda item: item[0]))
    for u, v in sorted(src.edges):
        if attr is None:
            out.add_edge(u, v)
            continue
        w = src.edges[u, v][attr]
        if out.has_edge(u, v):
            # a reference graph stores each link twice; count it once
            if not reference:
                out.edges[u, v]["weight"] += w
        else:
            out.add_edge(u, v, weight=w)
    return out


def components(g: TradeGraph, kind: str = "weak") -> ComponentSet:
    """Weak or strong components, largest first; ties by smallest member ids."""
    if kind == "weak":
        found: Iterable[set] = nx.weakly_connected_components(g.nx)
    elif kind == "strong":
        found = nx.strongly_connected_components(g.nx)
    else:
        raise ValueError(f"Unknown component kind {kind!r}. Use weak or strong")

    members = sorted((frozenset(c) for c in found), key=_component_order)
    return ComponentSet(kind=kind, members=tuple(members))


def gscc(g: TradeGraph) -> TradeGraph:
    """Induced subgraph on the giant strongly connected component."""
    if g.is_empty:
        raise ComputeError("GSCC of an empty graph is undefined")
    return g.subgraph(components(g, "strong").giant)


def gwcc(g: TradeGraph) -> TradeGraph:
    """Induced subgraph on the giant weakly connected component."""
    if g.is_empty:
        raise ComputeError("GWCC of an empty graph is undefined")
    return g.subgraph(components(g, "weak").giant)


def diameter(g: TradeGraph, mode: str = "directed") -> int:
    """
    Longest unweighted shortest path.

    mode='undirected' measures the undirected projection, which must be
    connected (pass the GWCC); mode='directed' needs a strongly connected
    graph (pass the GSCC).
    """
    if mode not in DIAMETER_MODES:
        raise ValueError(f"Unknown diameter mode {mode!r}. Use undirected or directed")
    if g.is_empty:
        raise ComputeError("diameter of an empty graph is undefined")

    if mode == "undirected":
        proj = undirected_projection(g)
        if not nx.is_connected(proj):
            raise ComputeError("undirected diameter needs a weakly connected graph")
        return int(nx.diameter(proj))

    if not nx.is_strongly_connected(g.nx):
        raise ComputeError("directed diameter needs a strongly connected graph")
    return int(nx.diameter(g.nx))


def avg_path_length(g: TradeGraph) -> float:
    """Mean directed hop distance over all ordered pairs i != j."""
    if g.is_empty:
        raise ComputeError("average path length of an empty graph is undefined")
    if not nx.is_strongly_connected(g.nx):
        raise ComputeError("average path length needs a strongly connected graph")
    if g.n == 1:
        return 0.0
    return float(nx.average_shortest_path_length(g.nx))


def global_report(g: TradeGraph) -> GlobalCentralityReport:
    """
    Global statistics of a trade graph.

    l and d_s are measured on the GSCC, d_w on the undirected projection
    of the GWCC, c and a on the undirected projection of the whole graph.
    """
    from ..metrics.centrality import assortativity, transitivity

    if g.is_empty:
        raise ComputeError("global report of an empty graph is undefined")

    weak = components(g, "weak")
    strong = components(g, "strong")
    giant_w = gwcc(g)
    giant_s = gscc(g)

    try:
        a: Optional[float] = assortativity(g)
    except ComputeError as exc:
        logger.warning("%s/%s: %s", g.layer, g.window, exc)
        a = None

    return GlobalCentralityReport(
        layer=g.layer,
        window=g.window,
        n=g.n,
        e=g.e,
        k=mean_degree(g.n, g.e),
        phi=density(g.n, g.e),
        n_w=len(weak),
        p_w=len(weak.giant) / g.n,
        d_w=diameter(giant_w, "undirected"),
        n_s=len(strong),
        p_s=len(strong.giant) / g.n,
        d_s=diameter(giant_s, "directed"),
        l=avg_path_length(giant_s),
        c=transitivity(g),
        a=a,
    )


def _component_order(c: FrozenSet[Port]):
    return (-len(c), sorted(c))
