from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.cluster import hierarchy
from scipy.spatial.distance import squareform

from ..errors import DataError
from .models import BreakReport, Dendrogram, Merge, QuarterlyDistanceMatrix


def ward_cluster(m: QuarterlyDistanceMatrix) -> Dendrogram:
    """
    Ward-linkage agglomerative clustering of the usable quarters.

    Runs scipy's Ward linkage on the precomputed distances (Lance-Williams
    update on the given values), so heights only rank merges. Ties follow
    scipy's deterministic merge order.
    """
    labels, D = m.usable()
    if len(labels) < 2:
        raise DataError("clustering needs at least 2 quarters with edges")
    if not np.allclose(D, D.T, rtol=0.0, atol=1e-12):
        raise DataError("distance matrix is not symmetric")
    if np.any(np.diag(D) != 0):
        raise DataError("distance matrix has a non-zero diagonal")

    Z = hierarchy.linkage(squareform(D, checks=False), method="ward")
    merges = tuple(
        Merge(a=int(a), b=int(b), height=float(h), size=int(size)) for a, b, h, size in Z
    )
    return Dendrogram(leaves=labels, merges=merges)


def cut_clusters(d: Dendrogram, k: int) -> Tuple[int, ...]:
    """
    Labels after undoing the last k-1 merges.

    Clusters are numbered 1..k in order of first appearance along the
    quarter sequence.
    """
    n = len(d.leaves)
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    if n == 1:
        return (1,)
    raw = hierarchy.cut_tree(d.linkage_matrix(), n_clusters=k).ravel()
    return _relabel(raw)


def detect_breaks(quarters: Sequence[str], labels: Sequence[int]) -> BreakReport:
    """
    Quarters whose cluster differs from the preceding quarter's.

    A cluster that comes back after another one sets `non_contiguous`.
    """
    if len(quarters) != len(labels):
        raise ValueError("quarters and labels differ in length")

    breaks: List[str] = []
    seen = set()
    non_contiguous = False
    for i, (q, label) in enumerate(zip(quarters, labels)):
        if i and label != labels[i - 1]:
            breaks.append(q)
            if label in seen:
                non_contiguous = True
        seen.add(label)

    return BreakReport(
        quarters=tuple(quarters),
        labels=tuple(labels),
        n_clusters=len(set(labels)),
        breaks=tuple(breaks),
        non_contiguous=non_contiguous,
    )


def _relabel(raw: Sequence[int]) -> Tuple[int, ...]:
    mapping: Dict[int, int] = {}
    for r in raw:
        mapping.setdefault(int(r), len(mapping) + 1)
    return tuple(mapping[int(r)] for r in raw)
