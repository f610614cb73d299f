from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, List, Optional

from ..graph.build import build_graph
from ..ingest.clean import binning_quarter, slice_flows
from ..ingest.config import canonical_layer
from ..ingest.models import FlowTable, QuarterId, TradeFlowRecord, quarter_range
from ..graph.models import TradeGraph
from .models import QuarterMetrics

logger = logging.getLogger(__name__)


def quarterly_graphs(table: FlowTable, layer: Optional[str] = None) -> List[TradeGraph]:
    """
    One graph per quarter, from the first to the last quarter with flows.

    Quarters without flows give empty graphs (is_empty) so the sequence
    stays consecutive. Each graph's window is its quarter label.
    """
    by_quarter = _records_by_quarter(slice_flows(table, layer).records)
    if not by_quarter:
        return []

    label = canonical_layer(layer) or "all"
    graphs: List[TradeGraph] = []
    for q in quarter_range(min(by_quarter), max(by_quarter)):
        records = by_quarter.get(q, [])
        if not records:
            logger.warning("quarter %s of layer %s has no flows", q, label)
        sub = FlowTable(records=tuple(records), provenance=table.provenance)
        graphs.append(build_graph(sub, layer=label, window=str(q)))
    return graphs


def quarterly_metrics(table: FlowTable, layer: Optional[str] = None) -> List[QuarterMetrics]:
    """Ships, flows, voyages, edges, ports and cargo volume per quarter."""
    by_quarter = _records_by_quarter(slice_flows(table, layer).records)
    if not by_quarter:
        return []

    out: List[QuarterMetrics] = []
    for q in quarter_range(min(by_quarter), max(by_quarter)):
        records = by_quarter.get(q, [])
        ports = {r.load_port_id for r in records} | {r.discharge_port_id for r in records}
        out.append(
            QuarterMetrics(
                quarter=str(q),
                ships=len({r.imo for r in records if r.imo}),
                flows=len(records),
                voyages=len({r.voyage_id for r in records}),
                edges=len({(r.load_port_id, r.discharge_port_id) for r in records}),
                nodes=len(ports),
                volume=sum(r.volume for r in records),
            )
        )
    return out


def _records_by_quarter(records) -> Dict[QuarterId, List[TradeFlowRecord]]:
    grouped: Dict[QuarterId, List[TradeFlowRecord]] = defaultdict(list)
    for r in records:
        grouped[binning_quarter(r)].append(r)
    return grouped
