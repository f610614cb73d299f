from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..ingest.config import DEFAULT_COLUMNS
from ..ingest.models import QuarterId
from ..output import csv_text
from .config import SynthSpec

Edge = Tuple[int, int]

# column order of generated files
FIELD_ORDER: Tuple[str, ...] = (
    "flow_id",
    "voyage_id",
    "imo",
    "segment",
    "commodity_group",
    "commodity",
    "volume",
    "dwt",
    "load_port_id",
    "load_port_name",
    "load_region",
    "load_country",
    "discharge_port_id",
    "discharge_port_name",
    "discharge_region",
    "discharge_country",
    "load_departed_at",
    "discharge_arrived_at",
    "days_total_duration",
    "status",
)
CATEGORY_COLUMN = "flow_type"

# region, country per port block
_PLACES = {
    "FAREAST": "China",
    "SEASIA": "Indonesia",
    "CONT": "Netherlands",
    "ECSA": "Brazil",
    "USG": "United States",
    "AUS": "Australia",
}
_SEGMENTS = ("Handysize", "Supramax", "Panamax", "Capesize")


@dataclass
class Fixture:
    spec: SynthSpec
    rows: List[Dict[str, Any]] = field(default_factory=list)
    ground_truth: Dict[str, Any] = field(default_factory=dict)

    def header(self) -> List[str]:
        return [DEFAULT_COLUMNS[f] for f in FIELD_ORDER] + [CATEGORY_COLUMN]

    def to_csv(self) -> str:
        return csv_text(
            self.header(),
            ([row[f] for f in FIELD_ORDER] + [row[CATEGORY_COLUMN]] for row in self.rows),
        )


def generate(spec: SynthSpec) -> Fixture:
    """Flow rows and planted ground truth for a spec; deterministic in the spec."""
    builder = _Builder(spec)
    build = {
        "two-clique": _two_clique,
        "seasonal": _seasonal,
        "regime": _regime,
        "split": _split,
        "powerlaw": _powerlaw,
    }[spec.scenario]
    truth = build(spec, builder)
    if spec.noise:
        builder.add_noise()
    truth = {"scenario": spec.scenario, "seed": spec.seed, "layer": spec.layer, **truth}
    return Fixture(spec=spec, rows=builder.rows, ground_truth=truth)


# ----------------- scenarios -----------------


def _two_clique(spec: SynthSpec, b: "_Builder") -> Dict[str, Any]:
    left, right = [1, 2, 3], [4, 5, 6]
    b.ports(left, "FAREAST")
    b.ports(right, "CONT")
    edges = _cycle(left) + _cycle(right) + [(3, 4)]
    for q in b.quarters:
        b.flows(q, edges)
    return {"communities": [left, right], "bridge": [3, 4]}


def _seasonal(spec: SynthSpec, b: "_Builder") -> Dict[str, Any]:
    core_ports = list(range(1, 7))
    b.ports(core_ports, "USG")
    core = _cycle(core_ports)

    season_edges: List[List[Edge]] = []
    for s in range(spec.period):
        dests = [10 + 4 * s + j for j in range(4)]
        b.ports(dests, "FAREAST" if s % 2 else "CONT")
        season_edges.append([(1 + j, d) for j, d in enumerate(dests)])

    seasons = {}
    for i, q in enumerate(b.quarters):
        b.flows(q, core + season_edges[i % spec.period])
        seasons[str(q)] = i % spec.period
    return {"period": spec.period, "season_of_quarter": seasons}


def _regime(spec: SynthSpec, b: "_Builder") -> Dict[str, Any]:
    ports = list(range(1, 9))
    b.ports(ports[:4], "ECSA")
    b.ports(ports[4:], "FAREAST")
    ring = _cycle(ports)
    chords = [(u, ports[(i + 2) % len(ports)]) for i, u in enumerate(ports)]
    regimes = (
        (ring, chords),
        ([(v, u) for u, v in ring], [(v, u) for u, v in chords]),
    )

    for i, q in enumerate(b.quarters):
        core, extra = regimes[0] if i < spec.break_after else regimes[1]
        picked = [e for e in extra if b.rng.random() < 0.5]
        b.flows(q, core + picked)
    return {
        "break": str(b.quarters[spec.break_after]),
        "regimes": [[str(q) for q in b.quarters[: spec.break_after]],
                    [str(q) for q in b.quarters[spec.break_after:]]],
    }


def _split(spec: SynthSpec, b: "_Builder") -> Dict[str, Any]:
    a1, a2, other = [101, 102, 103, 104], [105, 106, 107, 108], [201, 202, 203, 204]
    b.ports(a1, "FAREAST")
    b.ports(a2, "SEASIA")
    b.ports(other, "CONT")

    before = _clique(a1 + a2) + _clique(other) + [(101, 201)]
    after = _clique(a1) + _clique(a2) + _clique(other) + [(101, 201), (105, 202)]
    for i, q in enumerate(b.quarters):
        b.flows(q, before if i < spec.break_after else after)
    return {
        "break": str(b.quarters[spec.break_after]),
        "communities_before": [a1 + a2, other],
        "communities_after": [a1, a2, other],
        "split_group": a1 + a2,
    }


def _powerlaw(spec: SynthSpec, b: "_Builder") -> Dict[str, Any]:
    targets = spec.target_degrees()
    ports = list(range(1, len(targets) + 1))
    regions = list(_PLACES)
    for i, p in enumerate(ports):
        b.ports([p], regions[i % len(regions)])

    edges: List[Edge] = []
    for p, d in zip(ports, targets):
        others = [x for x in ports if x != p]
        for dst in sorted(b.rng.choice(others, size=d, replace=False).tolist()):
            edges.append((p, int(dst)))
    for q in b.quarters:
        b.flows(q, edges)
    return {"out_degrees": {str(p): d for p, d in zip(ports, targets)}}


# ----------------- internal helpers -----------------


def _cycle(ports: Sequence[int]) -> List[Edge]:
    return [(u, ports[(i + 1) % len(ports)]) for i, u in enumerate(ports)]


def _clique(ports: Sequence[int]) -> List[Edge]:
    return [(u, v) for i, u in enumerate(ports) for v in ports[i + 1:]]


class _Builder:
    def __init__(self, spec: SynthSpec) -> None:
        self.spec = spec
        self.rng = np.random.default_rng(spec.seed)
        self.rows: List[Dict[str, Any]] = []
        self._ports: Dict[int, Tuple[str, str, str]] = {}
        q = spec.first_quarter
        self.quarters: List[QuarterId] = []
        for _ in range(spec.n_quarters):
            self.quarters.append(q)
            q = q.succ()

    def ports(self, ids: Sequence[int], region: str) -> None:
        for p in ids:
            self._ports[p] = (f"Port {p}", region, _PLACES[region])

    def flows(self, quarter: QuarterId, edges: Sequence[Edge]) -> None:
        for src, dst in edges:
            self.rows.append(self._row(quarter, src, dst))

    def add_noise(self) -> None:
        q = self.quarters[0]
        src, dst = sorted(self._ports)[:2]
        transit = self._row(q, src, dst)
        transit[CATEGORY_COLUMN] = "Transit"
        self.rows.append(transit)
        unknown = self._row(q, src, dst)
        unknown["discharge_port_name"] = "unknown"
        self.rows.append(unknown)

    def _row(self, quarter: QuarterId, src: int, dst: int) -> Dict[str, Any]:
        idx = len(self.rows) + 1
        dwt = 30000 + 1000 * int(self.rng.integers(0, 150))
        volume = round(dwt * float(self.rng.uniform(0.6, 0.95)), 1)
        duration = 5 + int(self.rng.integers(0, 40))
        departed = datetime(
            quarter.year, 3 * (quarter.quarter - 1) + 1 + (idx % 3), 1 + (idx % 28), 12,
            tzinfo=timezone.utc,
        )
        arrived = departed + timedelta(days=duration)
        s_name, s_region, s_country = self._ports[src]
        d_name, d_region, d_country = self._ports[dst]
        return {
            "flow_id": f"F{idx:06d}",
            "voyage_id": f"V{idx:06d}",
            "imo": str(9000000 + idx % 97),
            "segment": _SEGMENTS[min(dwt // 50000, len(_SEGMENTS) - 1)],
            "commodity_group": self.spec.layer,
            "commodity": self.spec.layer,
            "volume": volume,
            "dwt": dwt,
            "load_port_id": src,
            "load_port_name": s_name,
            "load_region": s_region,
            "load_country": s_country,
            "discharge_port_id": dst,
            "discharge_port_name": d_name,
            "discharge_region": d_region,
            "discharge_country": d_country,
            "load_departed_at": departed.strftime("%Y-%m-%dT%H:%M:%SZ"),
            "discharge_arrived_at": arrived.strftime("%Y-%m-%dT%H:%M:%SZ"),
            "days_total_duration": duration,
            "status": "Completed",
            CATEGORY_COLUMN: "Trade",
        }
