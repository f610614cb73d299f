from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from ..errors import ComputeError
from ..graph.models import TradeGraph
from ..output import csv_text, dumps
from .centrality import DIRECTIONS, betweenness, degree_centrality, strength_centrality
from .models import CentralityVector, PowerLawFit

CENTRALITY_HEADER: Tuple[str, ...] = ("port_id", "value")
POWER_LAW_HEADER: Tuple[str, ...] = ("which", "gamma", "logC", "r2", "n_bins")


def node_centralities(g: TradeGraph) -> Dict[str, CentralityVector]:
    """
    Every per-port measure of a graph: in/out degree, the six strengths and,
    from three ports up, normalized betweenness.
    """
    vectors: Dict[str, CentralityVector] = {}
    for direction in DIRECTIONS:
        vec = degree_centrality(g, direction)
        vectors[vec.measure] = vec
        for weight in ("frequency", "dwt", "volume"):
            vec = strength_centrality(g, direction, weight)
            vectors[vec.measure] = vec
    try:
        vectors["betweenness"] = betweenness(g, normalized=True)
    except ComputeError:
        pass
    return vectors


def centrality_rows(vec: CentralityVector) -> List[Tuple[Any, float]]:
    """(port_id, value) pairs in port id order."""
    return sorted(vec.values.items(), key=lambda kv: kv[0])


def centrality_to_csv(vec: CentralityVector) -> str:
    return csv_text(CENTRALITY_HEADER, centrality_rows(vec))


def centrality_to_json(vec: CentralityVector) -> str:
    return dumps(centrality_record(vec))


def centrality_record(vec: CentralityVector) -> Dict[str, Any]:
    # a list of pairs keeps integer port ids intact in JSON
    return {
        "measure": vec.measure,
        "normalized": vec.normalized,
        "values": [{"port_id": p, "value": v} for p, v in centrality_rows(vec)],
    }


def power_law_rows(fits: Dict[str, Optional[PowerLawFit]]) -> List[Tuple[Any, ...]]:
    """One row per fitted degree kind; undefined fits are left out."""
    return [
        (which, fit.gamma, fit.logC, fit.r2, fit.n_bins)
        for which, fit in fits.items()
        if fit is not None
    ]
