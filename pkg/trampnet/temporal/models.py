from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class QuarterMetrics:
    quarter: str
    ships: int
    flows: int
    voyages: int
    edges: int
    nodes: int
    volume: float


@dataclass(frozen=True)
class QuarterlyDistanceMatrix:
    """
    Pairwise network distances over consecutive quarters.

    values[i][j] is None when quarter i or j has no edges; those quarters
    are listed in `missing` and left out of clustering.
    """
    quarters: Tuple[str, ...]
    values: Tuple[Tuple[Optional[float], ...], ...]
    missing: Tuple[str, ...] = ()

    def usable(self) -> Tuple[Tuple[str, ...], np.ndarray]:
        """Quarters with edges and their complete distance submatrix."""
        keep = [i for i, q in enumerate(self.quarters) if q not in self.missing]
        labels = tuple(self.quarters[i] for i in keep)
        sub = np.array([[self.values[i][j] for j in keep] for i in keep], dtype=float)
        return labels, sub.reshape(len(keep), len(keep))

    def lag_profile(self) -> Dict[int, float]:
        """Mean distance between quarters `lag` apart, over valid pairs."""
        sums: Dict[int, List[float]] = {}
        n = len(self.quarters)
        for i in range(n):
            for j in range(i + 1, n):
                v = self.values[i][j]
                if v is not None:
                    sums.setdefault(j - i, []).append(v)
        return {lag: float(np.mean(vs)) for lag, vs in sorted(sums.items())}

    def rows(self) -> List[Tuple]:
        return [(q, *row) for q, row in zip(self.quarters, self.values)]


@dataclass(frozen=True)
class Merge:
    a: int
    b: int
    height: float
    size: int


@dataclass(frozen=True)
class Dendrogram:
    """
    Ward merge sequence over quarter leaves.

    Leaves are 0..n-1 in quarter order; the cluster made by merge i has
    id n+i.
    """
    leaves: Tuple[str, ...]
    merges: Tuple[Merge, ...]

    def linkage_matrix(self) -> np.ndarray:
        return np.array([[m.a, m.b, m.height, m.size] for m in self.merges], dtype=float)


@dataclass(frozen=True)
class BreakReport:
    quarters: Tuple[str, ...]
    labels: Tuple[int, ...]
    n_clusters: int
    # first quarter of each new cluster run
    breaks: Tuple[str, ...]
    non_contiguous: bool
    excluded: Tuple[str, ...] = ()
