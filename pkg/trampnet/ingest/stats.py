from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Optional, Set

import numpy as np

from ..errors import DataError
from .clean import slice_flows
from .models import (
    CommoditySummaryRow,
    DescriptiveStats,
    FlowTable,
    YoYReport,
    YoYRow,
    YoYTotal,
)

# Regions whose share of the period's total change exceeds this are flagged.
SIGNIFICANT_SHARE = 0.10


def duration_stats(table: FlowTable) -> DescriptiveStats:
    """
    count/mean/std/min/quartiles/max of days_total_duration.

    std is the sample standard deviation (0 for a single value); quartiles
    interpolate linearly between closest ranks.
    """
    values = np.array(
        [r.days_total_duration for r in table.records if r.days_total_duration is not None],
        dtype=float,
    )
    if values.size == 0:
        raise DataError("no durations")

    p25, p50, p75 = np.percentile(values, [25, 50, 75], method="linear")
    std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return DescriptiveStats(
        count=int(values.size),
        mean=float(values.mean()),
        std=std,
        min=float(values.min()),
        p25=float(p25),
        p50=float(p50),
        p75=float(p75),
        max=float(values.max()),
    )


def yoy_volume_change(
    table: FlowTable,
    load_country: str,
    layer: Optional[str] = None,
) -> YoYReport:
    """
    Year-on-year export volume change of one loading country, split by
    discharge region.

    A region's contribution share is its change in a year divided by the
    total change over the whole period (last year's total minus the first);
    shares are 0 when the period's total change is 0.
    """
    selected = slice_flows(table, layer)
    country = load_country.strip().casefold()

    volumes: Dict[int, Dict[str, float]] = defaultdict(lambda: defaultdict(float))
    for r in selected.records:
        if r.load_country.strip().casefold() != country:
            continue
        volumes[r.load_departed_at.year][r.discharge_region] += r.volume

    if len(volumes) < 2:
        raise DataError("insufficient history")
    # a year without exports inside the range counts as zero volume
    years = list(range(min(volumes), max(volumes) + 1))
    by_year = {y: dict(volumes.get(y, {})) for y in years}
    regions = sorted({region for by_region in by_year.values() for region in by_region})

    totals_by_year = {y: sum(by_year[y].values(), 0.0) for y in years}
    total_change = totals_by_year[years[-1]] - totals_by_year[years[0]]

    rows: List[YoYRow] = []
    totals: List[YoYTotal] = [
        YoYTotal(year=years[0], volume=totals_by_year[years[0]], change=0.0, pct_change=None)
    ]
    for prev, year in zip(years, years[1:]):
        for region in regions:
            now = by_year[year].get(region, 0.0)
            before = by_year[prev].get(region, 0.0)
            change = now - before
            share = change / total_change if total_change else 0.0
            rows.append(
                YoYRow(
                    year=year,
                    region=region,
                    volume=now,
                    prior_volume=before,
                    change=change,
                    pct_change=_pct(change, before),
                    contribution_share=share,
                    significant=abs(share) > SIGNIFICANT_SHARE,
                )
            )
        change = totals_by_year[year] - totals_by_year[prev]
        totals.append(
            YoYTotal(
                year=year,
                volume=totals_by_year[year],
                change=change,
                pct_change=_pct(change, totals_by_year[prev]),
            )
        )

    return YoYReport(
        load_country=load_country,
        layer=layer or "all",
        years=tuple(years),
        regions=tuple(regions),
        volumes={y: dict(sorted(by_year[y].items())) for y in years},
        rows=tuple(rows),
        totals=tuple(totals),
        total_change=total_change,
    )


def commodity_summary(table: FlowTable) -> List[CommoditySummaryRow]:
    """Voyages, flows and volume per commodity group, largest volume first."""
    voyages: Dict[str, Set[str]] = defaultdict(set)
    flows: Dict[str, int] = defaultdict(int)
    volume: Dict[str, float] = defaultdict(float)
    for r in table.records:
        voyages[r.commodity_group].add(r.voyage_id)
        flows[r.commodity_group] += 1
        volume[r.commodity_group] += r.volume

    rows = [
        CommoditySummaryRow(
            commodity_group=g,
            voyages=len(voyages[g]),
            flows=flows[g],
            volume=volume[g],
        )
        for g in flows
    ]
    rows.sort(key=lambda row: (-row.volume, row.commodity_group))
    return rows


def vessel_segments(table: FlowTable) -> Dict[str, int]:
    """Distinct vessels (imo) per vessel segment; records without imo are skipped."""
    ships: Dict[str, Set[str]] = defaultdict(set)
    for r in table.records:
        if r.imo:
            ships[r.segment or "Unknown"].add(r.imo)
    return {segment: len(imos) for segment, imos in sorted(ships.items())}


def _pct(change: float, base: float) -> Optional[float]:
    if base == 0:
        return None
    return 100.0 * change / base
