from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

_QUARTER_RE = re.compile(r"^\s*(\d{4})\s*-?\s*[Qq]([1-4])\s*$")


@dataclass(frozen=True, order=True)
class QuarterId:
    year: int
    quarter: int

    def __post_init__(self) -> None:
        if not 1 <= self.quarter <= 4:
            raise ValueError(f"QuarterId: quarter must be in 1..4, got {self.quarter}")

    @classmethod
    def parse(cls, value: str) -> "QuarterId":
        """Parse labels like '2015Q1', '2015-Q1' or '2015q1'."""
        m = _QUARTER_RE.match(value or "")
        if not m:
            raise ValueError(f"Invalid quarter: {value!r}. Use e.g. 2015Q1")
        return cls(int(m.group(1)), int(m.group(2)))

    def succ(self) -> "QuarterId":
        if self.quarter == 4:
            return QuarterId(self.year + 1, 1)
        return QuarterId(self.year, self.quarter + 1)

    def pred(self) -> "QuarterId":
        if self.quarter == 1:
            return QuarterId(self.year - 1, 4)
        return QuarterId(self.year, self.quarter - 1)

    def __str__(self) -> str:
        return f"{self.year}Q{self.quarter}"


def quarter_range(start: QuarterId, end: QuarterId) -> List[QuarterId]:
    """Every quarter from start to end inclusive (empty when start > end)."""
    out: List[QuarterId] = []
    q = start
    while q <= end:
        out.append(q)
        q = q.succ()
    return out


@dataclass(frozen=True)
class QuarterWindow:
    """Inclusive quarter range; an open bound means unbounded on that side."""
    start: Optional[QuarterId] = None
    end: Optional[QuarterId] = None

    @property
    def is_all(self) -> bool:
        return self.start is None and self.end is None

    def contains(self, q: QuarterId) -> bool:
        if self.start is not None and q < self.start:
            return False
        if self.end is not None and q > self.end:
            return False
        return True

    def __str__(self) -> str:
        if self.is_all:
            return "ALL"
        return f"{self.start or ''}..{self.end or ''}"


ALL_QUARTERS = QuarterWindow()


@dataclass(frozen=True)
class TradeFlowRecord:
    """One laden voyage leg, load port -> discharge port."""
    flow_id: str
    voyage_id: str
    commodity_group: str
    volume: float
    dwt: float
    load_port_id: Optional[int]
    load_port_name: str
    load_region: str
    load_country: str
    discharge_port_id: Optional[int]
    discharge_port_name: str
    discharge_region: str
    discharge_country: str
    load_departed_at: datetime
    discharge_arrived_at: Optional[datetime] = None
    days_total_duration: Optional[float] = None
    status: str = ""
    commodity: Optional[str] = None
    imo: Optional[str] = None
    segment: Optional[str] = None
    # raw values of columns the schema does not map
    extra: Mapping[str, str] = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class Rejection:
    row: int
    rule: str
    detail: str = ""


@dataclass(frozen=True)
class Provenance:
    """
    Where a table came from and what was dropped on the way.

    `raw` always counts the rows of the original source, so
    raw == kept + sum(dropped.values()) holds for parsed, cleaned
    and sliced tables alike.
    """
    source: str
    raw: int
    kept: int
    dropped: Mapping[str, int] = field(default_factory=dict)
    rejected: Tuple[Rejection, ...] = ()

    def is_conserved(self) -> bool:
        return self.raw == self.kept + sum(self.dropped.values())

    def with_drops(self, kept: int, drops: Mapping[str, int]) -> "Provenance":
        merged: Dict[str, int] = dict(self.dropped)
        for rule, count in drops.items():
            if count:
                merged[rule] = merged.get(rule, 0) + count
        return Provenance(
            source=self.source,
            raw=self.raw,
            kept=kept,
            dropped=dict(sorted(merged.items())),
            rejected=self.rejected,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "raw": self.raw,
            "kept": self.kept,
            "dropped": dict(self.dropped),
            "rejected_rows": len(self.rejected),
        }


@dataclass(frozen=True)
class FlowTable:
    records: Tuple[TradeFlowRecord, ...]
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TradeFlowRecord]:
        return iter(self.records)

    def commodity_groups(self) -> List[str]:
        return sorted({r.commodity_group for r in self.records})


@dataclass(frozen=True)
class DescriptiveStats:
    """Travel-duration summary, all values in days."""
    count: int
    mean: float
    std: float
    min: float
    p25: float
    p50: float
    p75: float
    max: float


@dataclass(frozen=True)
class YoYRow:
    year: int
    region: str
    volume: float
    prior_volume: float
    change: float
    # percent, None when the prior year had no volume for the region
    pct_change: Optional[float]
    # fraction of the total change over the whole period
    contribution_share: float
    significant: bool


@dataclass(frozen=True)
class YoYTotal:
    year: int
    volume: float
    change: float
    pct_change: Optional[float]


@dataclass(frozen=True)
class YoYReport:
    load_country: str
    layer: str
    years: Tuple[int, ...]
    regions: Tuple[str, ...]
    volumes: Mapping[int, Mapping[str, float]]
    rows: Tuple[YoYRow, ...]
    totals: Tuple[YoYTotal, ...]
    total_change: float


@dataclass(frozen=True)
class CommoditySummaryRow:
    commodity_group: str
    voyages: int
    flows: int
    volume: float
