from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Dict, List, Optional

from ..errors import DataError
from .config import CANONICAL_LAYERS, CleaningConfig, canonical_layer
from .models import ALL_QUARTERS, FlowTable, QuarterId, QuarterWindow, TradeFlowRecord

logger = logging.getLogger(__name__)

# Evaluated in this order; a record is counted under the first rule it breaks.
CLEANING_RULES = ("unknown_port", "non_trade_flow", "self_loop", "inverted_timestamps")


def assign_quarter(ts: datetime) -> QuarterId:
    """Calendar quarter of a timestamp, taken in UTC."""
    if ts.tzinfo is not None:
        ts = ts.astimezone(timezone.utc)
    return QuarterId(ts.year, (ts.month - 1) // 3 + 1)


def binning_quarter(record: TradeFlowRecord) -> QuarterId:
    """Flows are binned by load departure: the trade starts at loading."""
    return assign_quarter(record.load_departed_at)


def clean_flows(table: FlowTable, rules: Optional[CleaningConfig] = None) -> FlowTable:
    """
    Drop records that are not usable trade flows.

    Total: never raises. Per-rule drop counts are added to the provenance.
    Idempotent: cleaning a cleaned table drops nothing.
    """
    rules = rules or CleaningConfig()
    kept: List[TradeFlowRecord] = []
    drops: Dict[str, int] = {}

    for record in table.records:
        rule = _broken_rule(record, rules)
        if rule is None:
            kept.append(record)
        else:
            drops[rule] = drops.get(rule, 0) + 1

    if drops:
        logger.info(
            "cleaning %s dropped %s",
            table.provenance.source,
            ", ".join(f"{k}={v}" for k, v in sorted(drops.items())),
        )
    return FlowTable(
        records=tuple(kept),
        provenance=table.provenance.with_drops(len(kept), drops),
    )


def slice_flows(
    table: FlowTable,
    layer: Optional[str] = None,
    window: QuarterWindow = ALL_QUARTERS,
    *,
    product: Optional[str] = None,
) -> FlowTable:
    """
    Records of one commodity layer inside a quarter window, original order kept.

    layer: commodity_group label or CLI alias ('grains', 'iron-ore'); None or
           'all' keeps every layer.
    product: optional commodity (product) filter, e.g. 'Wheat'.
    """
    group = canonical_layer(layer)
    if group is not None:
        known = {g.casefold(): g for g in (*CANONICAL_LAYERS, *table.commodity_groups())}
        if group.casefold() not in known:
            raise DataError(
                f"Unknown layer {layer!r}. Known layers: all, {', '.join(sorted(known.values()))}"
            )
        group = known[group.casefold()]

    selected = tuple(
        r
        for r in table.records
        if (group is None or r.commodity_group == group)
        and (product is None or (r.commodity or "").casefold() == product.casefold())
        and (window.is_all or window.contains(binning_quarter(r)))
    )
    out_of_slice = len(table.records) - len(selected)
    return FlowTable(
        records=selected,
        provenance=table.provenance.with_drops(len(selected), {"out_of_slice": out_of_slice}),
    )


# ----------------- internal helpers -----------------


def _broken_rule(record: TradeFlowRecord, rules: CleaningConfig) -> Optional[str]:
    if (
        record.load_port_id is None
        or record.discharge_port_id is None
        or rules.is_unknown_name(record.load_port_name)
        or rules.is_unknown_name(record.discharge_port_name)
    ):
        return "unknown_port"
    if rules.is_excluded_category(_category(record, rules.category_column)):
        return "non_trade_flow"
    if record.load_port_id == record.discharge_port_id:
        return "self_loop"
    if (
        record.discharge_arrived_at is not None
        and record.discharge_arrived_at < record.load_departed_at
    ):
        return "inverted_timestamps"
    return None


def _category(record: TradeFlowRecord, column: str) -> Optional[str]:
    if column in record.__dataclass_fields__ and column != "extra":
        value = getattr(record, column)
        return value if isinstance(value, str) else None
    return record.extra.get(column)
