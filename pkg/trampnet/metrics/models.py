from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Optional, Tuple

# Order of the centrality correlation table.
MEASURES: Tuple[str, ...] = (
    "k_i", "s_i_f", "s_i_d", "s_i_t",
    "k_o", "s_o_f", "s_o_d", "s_o_t",
)


@dataclass(frozen=True)
class CentralityVector:
    measure: str
    values: Mapping[Hashable, float]
    normalized: bool = False

    def ranked(self):
        """(node, value) pairs, highest first, ties by node id."""
        return sorted(self.values.items(), key=lambda kv: (-kv[1], kv[0]))


@dataclass(frozen=True)
class PowerLawFit:
    """log f(k) = logC - gamma log k, natural logarithms."""
    gamma: float
    logC: float
    r2: float
    n_bins: int
    which: str = "total"


@dataclass(frozen=True)
class CorrelationMatrix:
    measures: Tuple[str, ...]
    # None marks an undefined coefficient (constant measure)
    values: Tuple[Tuple[Optional[float], ...], ...]
    undefined: Tuple[str, ...] = ()

    def get(self, a: str, b: str) -> Optional[float]:
        return self.values[self.measures.index(a)][self.measures.index(b)]


@dataclass(frozen=True)
class CountryScore:
    country: str
    score: float
