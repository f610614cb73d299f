from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence

from ..errors import DataError
from ..graph.models import TradeGraph
from .models import QuarterlyDistanceMatrix

logger = logging.getLogger(__name__)


def network_distance(gi: TradeGraph, gj: TradeGraph) -> float:
    """
    1 - |Ei & Ej| / sqrt(|Ei| |Ej|) over directed, unweighted edge sets.

    0 for identical edge sets, 1 for disjoint ones.
    """
    ei, ej = gi.edge_set(), gj.edge_set()
    if not ei or not ej:
        raise DataError("distance undefined: graph without edges")
    shared = len(ei & ej)
    if ei == ej:
        return 0.0
    return 1.0 - shared / math.sqrt(len(ei) * len(ej))


def distance_matrix(graphs: Sequence[TradeGraph]) -> QuarterlyDistanceMatrix:
    """
    All pairwise distances of a quarterly graph sequence.

    Quarters without edges are marked missing (None entries).
    """
    labels = tuple(g.window for g in graphs)
    missing = tuple(g.window for g in graphs if not g.edge_set())
    if len(graphs) - len(missing) < 2:
        raise DataError(
            f"need at least 2 quarters with edges, got {len(graphs) - len(missing)}"
        )
    if missing:
        logger.warning("quarters without edges excluded: %s", ", ".join(missing))

    n = len(graphs)
    values: List[List[Optional[float]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        if labels[i] in missing:
            continue
        values[i][i] = 0.0
        for j in range(i + 1, n):
            if labels[j] in missing:
                continue
            d = network_distance(graphs[i], graphs[j])
            values[i][j] = values[j][i] = d

    return QuarterlyDistanceMatrix(
        quarters=labels,
        values=tuple(tuple(row) for row in values),
        missing=missing,
    )
