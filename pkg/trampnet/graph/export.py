from __future__ import annotations

from typing import Any, Dict, List, Tuple

from .models import TradeGraph

EDGE_HEADER: Tuple[str, ...] = ("src", "dst", "frequency", "dwt_total", "volume_total")


def graph_to_json(g: TradeGraph) -> Dict[str, Any]:
    """Nodes with their attributes and edges with the three weights."""
    nodes = []
    for node in g.nodes():
        info = g.port(node)
        nodes.append(
            {"id": node, "name": info.name, "region": info.region, "country": info.country}
        )
    edges = []
    for u, v in g.edges():
        w = g.weights(u, v)
        edges.append(
            {
                "src": u,
                "dst": v,
                "frequency": w.frequency,
                "dwt_total": w.dwt_total,
                "volume_total": w.volume_total,
            }
        )
    return {
        "layer": g.layer,
        "window": g.window,
        "directed": g.directed,
        "nodes": nodes,
        "edges": edges,
    }


def edge_rows(g: TradeGraph) -> List[Tuple[Any, ...]]:
    """Edge list rows matching EDGE_HEADER."""
    rows = []
    for u, v in g.edges():
        w = g.weights(u, v)
        rows.append((u, v, w.frequency, w.dwt_total, w.volume_total))
    return rows
