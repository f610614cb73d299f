from __future__ import annotations

import codecs
import csv
import io
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import IO, Dict, List, Optional, Set, Tuple, Union

from dateutil import parser as date_parser

from ..errors import DataError
from .config import REQUIRED_FIELDS, FlowSchema
from .models import FlowTable, Provenance, Rejection, TradeFlowRecord

logger = logging.getLogger(__name__)


class _RowRejected(Exception):
    def __init__(self, rule: str, detail: str) -> None:
        super().__init__(detail)
        self.rule = rule
        self.detail = detail


def parse_timestamp(value: str) -> datetime:
    """
    Parse an ISO 8601 timestamp as found in the export ('2015-06-11T12:47:07Z',
    '2015-06-11 00:53:28+00:00'). Naive values are taken as UTC.
    """
    dt = date_parser.isoparse(value.strip())
    if dt.tzinfo is None:
        return dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def parse_flows(
    source: Union[IO[bytes], IO[str]],
    schema: Optional[FlowSchema] = None,
    *,
    source_name: str = "<stream>",
) -> FlowTable:
    """
    Parse a trade-flow CSV into a FlowTable.

    Rows that cannot be turned into a complete record are rejected and
    recorded in the provenance with their 1-based data-row number (the header
    is not counted) and the rule that rejected them. A missing required
    column is fatal.
    """
    schema = schema or FlowSchema()
    text = _decode(source, source_name) if _is_binary(source) else source
    return _parse_text(text, schema, source_name)


def _parse_text(text: IO[str], schema: FlowSchema, source_name: str) -> FlowTable:
    reader = csv.DictReader(text)

    header = reader.fieldnames
    if header is None:
        raise DataError(f"{source_name}: no header row")
    header_set = {h.strip() for h in header}

    missing = [
        f"{f} (column '{schema.column(f)}')"
        for f in REQUIRED_FIELDS
        if schema.column(f) not in header_set
    ]
    if missing:
        raise DataError(f"{source_name}: missing required columns: {', '.join(missing)}")

    mapped = schema.mapped_columns()
    records: List[TradeFlowRecord] = []
    rejected: List[Rejection] = []
    drops: Dict[str, int] = {}
    seen_ids: Set[str] = set()
    raw = 0

    for row_no, row in enumerate(reader, start=1):
        raw += 1
        row = {(k or "").strip(): (v if v is not None else "") for k, v in row.items()}
        try:
            record = _build_record(row, schema, mapped)
            if record.flow_id in seen_ids:
                raise _RowRejected("duplicate_flow_id", f"flow_id {record.flow_id} already seen")
        except _RowRejected as exc:
            rejected.append(Rejection(row=row_no, rule=exc.rule, detail=exc.detail))
            drops[exc.rule] = drops.get(exc.rule, 0) + 1
            logger.debug("row %d rejected (%s): %s", row_no, exc.rule, exc.detail)
            continue
        seen_ids.add(record.flow_id)
        records.append(record)

    logger.info(
        "parsed %s: %d rows, %d kept, %d rejected", source_name, raw, len(records), len(rejected)
    )
    provenance = Provenance(
        source=source_name,
        raw=raw,
        kept=len(records),
        dropped=dict(sorted(drops.items())),
        rejected=tuple(rejected),
    )
    return FlowTable(records=tuple(records), provenance=provenance)


def read_flows(path: Union[str, Path], schema: Optional[FlowSchema] = None) -> FlowTable:
    """Convenience wrapper: parse_flows over a file on disk."""
    p = Path(path)
    try:
        with p.open("rb") as fh:
            return parse_flows(fh, schema, source_name=str(p))
    except OSError as exc:
        raise DataError(f"Cannot read {p}: {exc}") from exc


REJECTION_HEADER = ("row", "rule")


def rejection_rows(table: FlowTable) -> List[Tuple[int, str]]:
    return [(rej.row, rej.rule) for rej in table.provenance.rejected]


def write_rejections(table: FlowTable, path: Union[str, Path]) -> None:
    """Write the rejected-row report as CSV with a 'row,rule' header."""
    from ..output import atomic_write_text, csv_text

    atomic_write_text(path, csv_text(REJECTION_HEADER, rejection_rows(table)))


# ----------------- internal helpers -----------------


def _is_binary(stream) -> bool:
    return not isinstance(stream, io.TextIOBase) and "b" in getattr(stream, "mode", "b")


def _decode(source: IO[bytes], source_name: str) -> IO[str]:
    """UTF-8 text of a byte stream (BOM skipped); the stream itself is left open."""
    data = source.read()
    bom = len(codecs.BOM_UTF8) if data.startswith(codecs.BOM_UTF8) else 0
    try:
        return io.StringIO(data[bom:].decode("utf-8"), newline="")
    except UnicodeDecodeError as exc:
        raise DataError(
            f"{source_name}: invalid UTF-8 at byte {bom + exc.start} ({exc.reason})"
        ) from exc


def _build_record(row: Dict[str, str], schema: FlowSchema, mapped) -> TradeFlowRecord:
    def get(field_name: str) -> str:
        return row.get(schema.column(field_name), "").strip()

    def required(field_name: str) -> str:
        v = get(field_name)
        if not v:
            raise _RowRejected("missing_value", f"{field_name} is empty")
        return v

    volume = _number(required("volume"), "volume")
    dwt = _number(required("dwt"), "dwt")
    if volume < 0:
        raise _RowRejected("out_of_range", f"volume {volume} < 0")
    if dwt <= 0:
        raise _RowRejected("out_of_range", f"dwt {dwt} <= 0")

    duration_raw = get("days_total_duration")
    duration = _number(duration_raw, "days_total_duration") if duration_raw else None
    if duration is not None and duration < 0:
        raise _RowRejected("out_of_range", f"days_total_duration {duration} < 0")

    arrived_raw = get("discharge_arrived_at")

    return TradeFlowRecord(
        flow_id=required("flow_id"),
        voyage_id=required("voyage_id"),
        commodity_group=required("commodity_group"),
        volume=volume,
        dwt=dwt,
        load_port_id=_port_id(get("load_port_id"), "load_port_id"),
        load_port_name=get("load_port_name"),
        load_region=get("load_region"),
        load_country=get("load_country"),
        discharge_port_id=_port_id(get("discharge_port_id"), "discharge_port_id"),
        discharge_port_name=get("discharge_port_name"),
        discharge_region=get("discharge_region"),
        discharge_country=get("discharge_country"),
        load_departed_at=_timestamp(required("load_departed_at"), "load_departed_at"),
        discharge_arrived_at=(
            _timestamp(arrived_raw, "discharge_arrived_at") if arrived_raw else None
        ),
        days_total_duration=duration,
        status=get("status"),
        commodity=get("commodity") or None,
        imo=get("imo") or None,
        segment=get("segment") or None,
        extra={k: v for k, v in row.items() if k not in mapped},
    )


def _number(value: str, field_name: str) -> float:
    try:
        out = float(value)
    except ValueError:
        raise _RowRejected("unparseable_number", f"{field_name}={value!r}") from None
    if out != out or out in (float("inf"), float("-inf")):
        raise _RowRejected("unparseable_number", f"{field_name}={value!r}")
    return out


def _port_id(value: str, field_name: str) -> Optional[int]:
    if not value:
        return None
    try:
        return int(value)
    except ValueError:
        pass
    as_float = _number(value, field_name)
    if not as_float.is_integer():
        raise _RowRejected("unparseable_number", f"{field_name}={value!r}")
    return int(as_float)


def _timestamp(value: str, field_name: str) -> datetime:
    try:
        return parse_timestamp(value)
    except (ValueError, OverflowError):
        raise _RowRejected("unparseable_timestamp", f"{field_name}={value!r}") from None
