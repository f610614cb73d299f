from __future__ import annotations

import logging
from typing import Dict, Tuple

import networkx as nx

from ..errors import DataError
from ..ingest.models import FlowTable
from .models import Port, TradeGraph

logger = logging.getLogger(__name__)


def build_graph(table: FlowTable, *, layer: str = "all", window: str = "ALL") -> TradeGraph:
    """
    Aggregate flow records into a trade graph.

    Each record contributes exactly its own (load, discharge) edge: frequency
    counts records, dwt_total and volume_total sum them. Port attributes come
    from the first record naming the port.
    """
    ports: Dict[Port, Tuple[str, str, str]] = {}
    agg: Dict[Tuple[Port, Port], list] = {}

    for r in table.records:
        src, dst = r.load_port_id, r.discharge_port_id
        if src is None or dst is None:
            raise DataError(f"flow {r.flow_id}: port id missing, clean the table first")
        if src == dst:
            raise DataError(f"flow {r.flow_id}: self-loop at port {src} survived cleaning")
        ports.setdefault(src, (r.load_port_name, r.load_region, r.load_country))
        ports.setdefault(dst, (r.discharge_port_name, r.discharge_region, r.discharge_country))

        acc = agg.setdefault((src, dst), [0, 0.0, 0.0])
        acc[0] += 1
        acc[1] += r.dwt
        acc[2] += r.volume

    g = nx.DiGraph()
    for port in sorted(ports):
        name, region, country = ports[port]
        g.add_node(port, name=name, region=region, country=country)
    for (src, dst) in sorted(agg):
        frequency, dwt_total, volume_total = agg[(src, dst)]
        g.add_edge(
            src, dst,
            frequency=frequency,
            dwt_total=dwt_total,
            volume_total=volume_total,
        )

    logger.debug(
        "built graph %s/%s: %d ports, %d edges from %d flows",
        layer, window, g.number_of_nodes(), g.number_of_edges(), len(table.records),
    )
    return TradeGraph(g, layer=layer, window=window)
