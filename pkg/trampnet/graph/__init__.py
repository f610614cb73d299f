from __future__ import annotations

from typing import Any, Dict

from ..ingest.models import FlowTable
from .build import build_graph
from .export import EDGE_HEADER, edge_rows, graph_to_json
from .models import (
    UNIT_WEIGHTS,
    WEIGHT_ATTRS,
    ComponentSet,
    EdgeWeights,
    GlobalCentralityReport,
    PortInfo,
    TradeGraph,
    weight_attr,
)
from .structure import (
    avg_path_length,
    components,
    density,
    diameter,
    global_report,
    gscc,
    gwcc,
    mean_degree,
    undirected_projection,
)

__all__ = [
    "EDGE_HEADER",
    "UNIT_WEIGHTS",
    "WEIGHT_ATTRS",
    "ComponentSet",
    "EdgeWeights",
    "GlobalCentralityReport",
    "GraphNamespace",
    "PortInfo",
    "TradeGraph",
    "avg_path_length",
    "build_graph",
    "components",
    "density",
    "diameter",
    "edge_rows",
    "global_report",
    "graph_to_json",
    "gscc",
    "gwcc",
    "mean_degree",
    "undirected_projection",
    "weight_attr",
]


class GraphNamespace:
    """
    Grouping for graph construction and structure:

        tn.graph.build(table)
        tn.graph.report(g)
    """

    def build(self, table: FlowTable, *, layer: str = "all", window: str = "ALL") -> TradeGraph:
        return build_graph(table, layer=layer, window=window)

    def components(self, g: TradeGraph, kind: str = "weak") -> ComponentSet:
        return components(g, kind)

    def gscc(self, g: TradeGraph) -> TradeGraph:
        return gscc(g)

    def report(self, g: TradeGraph) -> GlobalCentralityReport:
        return global_report(g)

    def export(self, g: TradeGraph) -> Dict[str, Any]:
        return graph_to_json(g)
