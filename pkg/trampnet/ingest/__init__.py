from __future__ import annotations

from pathlib import Path
from typing import IO, Dict, List, Optional, Union

from .clean import CLEANING_RULES, assign_quarter, binning_quarter, clean_flows, slice_flows
from .config import CleaningConfig, FlowSchema, canonical_layer
from .models import (
    ALL_QUARTERS,
    CommoditySummaryRow,
    DescriptiveStats,
    FlowTable,
    Provenance,
    QuarterId,
    QuarterWindow,
    Rejection,
    TradeFlowRecord,
    YoYReport,
    quarter_range,
)
from .parse import (
    REJECTION_HEADER,
    parse_flows,
    parse_timestamp,
    read_flows,
    rejection_rows,
    write_rejections,
)
from .services import FlowRegistry
from .stats import commodity_summary, duration_stats, vessel_segments, yoy_volume_change

__all__ = [
    "ALL_QUARTERS",
    "CLEANING_RULES",
    "CleaningConfig",
    "CommoditySummaryRow",
    "DescriptiveStats",
    "FlowRegistry",
    "FlowSchema",
    "FlowTable",
    "IngestNamespace",
    "Provenance",
    "REJECTION_HEADER",
    "QuarterId",
    "QuarterWindow",
    "Rejection",
    "TradeFlowRecord",
    "YoYReport",
    "assign_quarter",
    "binning_quarter",
    "canonical_layer",
    "clean_flows",
    "commodity_summary",
    "duration_stats",
    "parse_flows",
    "parse_timestamp",
    "quarter_range",
    "read_flows",
    "rejection_rows",
    "slice_flows",
    "vessel_segments",
    "write_rejections",
    "yoy_volume_change",
]


class IngestNamespace:
    """
    Grouping for loading and slicing trade-flow data:

        tn.ingest.load("flows.csv")
        tn.ingest.slice(table, "coal", QuarterWindow(...))
        tn.ingest.durations(table)
    """

    def __init__(self, registry: FlowRegistry) -> None:
        self._registry = registry

    def parse(self, source: IO[bytes], *, source_name: str = "<stream>") -> FlowTable:
        return parse_flows(source, self._registry.schema, source_name=source_name)

    def clean(self, table: FlowTable) -> FlowTable:
        return clean_flows(table, self._registry.rules)

    def load(self, path: Union[str, Path]) -> FlowTable:
        """Parsed and cleaned table for a file (cached)."""
        return self._registry.cleaned(path)

    def slice(
        self,
        table: FlowTable,
        layer: Optional[str] = None,
        window: QuarterWindow = ALL_QUARTERS,
        *,
        product: Optional[str] = None,
    ) -> FlowTable:
        return slice_flows(table, layer, window, product=product)

    def durations(self, table: FlowTable) -> DescriptiveStats:
        return duration_stats(table)

    def yoy(self, table: FlowTable, load_country: str, layer: Optional[str] = None) -> YoYReport:
        return yoy_volume_change(table, load_country, layer)

    def commodities(self, table: FlowTable) -> List[CommoditySummaryRow]:
        return commodity_summary(table)

    def segments(self, table: FlowTable) -> Dict[str, int]:
        return vessel_segments(table)
