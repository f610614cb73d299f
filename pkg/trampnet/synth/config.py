from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Mapping, Optional, Tuple, Union

from ..ingest.models import QuarterId

SCENARIOS = ("two-clique", "seasonal", "regime", "split", "powerlaw")

# quarters generated when the spec does not say
DEFAULT_QUARTERS = {
    "two-clique": 1,
    "seasonal": 12,
    "regime": 8,
    "split": 8,
    "powerlaw": 1,
}


@dataclass(frozen=True)
class SynthSpec:
    """
    Synthetic fixture description.

    scenario:    one of SCENARIOS.
    seed:        drives volumes and optional edges; same spec, same bytes.
    layer:       commodity_group written to every flow.
    start:       first quarter, e.g. '2019Q1'.
    quarters:    number of consecutive quarters (scenario default if None).
    period:      season length of the 'seasonal' scenario.
    break_after: quarters before the planted change ('regime', 'split').
    n_ports, gamma, max_degree, degrees: out-degree targets of 'powerlaw';
                 explicit `degrees` win over the generated ones.
    noise:       add one Transit flow and one unknown-port flow, both
                 removed by cleaning.
    """
    scenario: str
    seed: int = 0
    layer: str = "Coal"
    start: str = "2019Q1"
    quarters: Optional[int] = None
    period: int = 4
    break_after: int = 4
    n_ports: int = 50
    gamma: float = 1.0
    max_degree: int = 20
    degrees: Optional[Tuple[int, ...]] = None
    noise: bool = False

    def __post_init__(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ValueError(f"Unknown scenario {self.scenario!r}. Use one of: {', '.join(SCENARIOS)}")
        if self.seed < 0:
            raise ValueError("SynthSpec: seed must be >= 0")
        QuarterId.parse(self.start)
        if self.n_quarters < 1:
            raise ValueError("SynthSpec: quarters must be >= 1")
        if self.scenario == "seasonal" and not 2 <= self.period < self.n_quarters:
            raise ValueError("SynthSpec: seasonal needs 2 <= period < quarters")
        if self.scenario in ("regime", "split") and not 1 <= self.break_after < self.n_quarters:
            raise ValueError("SynthSpec: break_after must leave quarters on both sides")
        if self.scenario == "powerlaw":
            self._check_degrees()

    @property
    def n_quarters(self) -> int:
        return self.quarters if self.quarters is not None else DEFAULT_QUARTERS[self.scenario]

    @property
    def first_quarter(self) -> QuarterId:
        return QuarterId.parse(self.start)

    def target_degrees(self) -> Tuple[int, ...]:
        """Out-degree per port for 'powerlaw': max_degree * rank^(-1/gamma), at least 1."""
        if self.degrees is not None:
            return tuple(self.degrees)
        return tuple(
            max(1, int(round(self.max_degree * rank ** (-1.0 / self.gamma))))
            for rank in range(1, self.n_ports + 1)
        )

    def _check_degrees(self) -> None:
        if self.gamma <= 0:
            raise ValueError("SynthSpec: gamma must be > 0")
        n = len(self.degrees) if self.degrees is not None else self.n_ports
        if n < 2:
            raise ValueError("SynthSpec: powerlaw needs at least 2 ports")
        targets = self.target_degrees()
        if any(d < 0 for d in targets):
            raise ValueError("SynthSpec: degrees must be >= 0")
        too_big = [d for d in targets if d > n - 1]
        if too_big:
            raise ValueError(
                f"SynthSpec: infeasible degrees {too_big[:3]}: a port can reach at most {n - 1} others"
            )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SynthSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"SynthSpec: unknown keys {sorted(unknown)}")
        values = dict(data)
        if values.get("degrees") is not None:
            values["degrees"] = tuple(int(d) for d in values["degrees"])
        return cls(**values)

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "SynthSpec":
        with Path(path).open("r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))
