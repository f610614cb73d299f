from __future__ import annotations

import logging
import math
import warnings
from typing import List, Optional

import networkx as nx
import numpy as np

from ..errors import ComputeError
from ..graph.models import TradeGraph, weight_attr
from ..graph.structure import undirected_projection
from .models import MEASURES, CentralityVector, CorrelationMatrix

logger = logging.getLogger(__name__)

DIRECTIONS = ("in", "out")
_WEIGHT_SUFFIX = {"frequency": "f", "dwt": "d", "volume": "t"}


def degree_centrality(
    g: TradeGraph,
    direction: str = "out",
    normalized: bool = False,
) -> CentralityVector:
    """In- or out-degree per port; normalized divides by n-1."""
    _check_direction(direction)
    degrees = g.in_degree() if direction == "in" else g.out_degree()
    if normalized:
        if g.n < 2:
            raise ComputeError("normalized degree needs at least 2 ports")
        scale = 1.0 / (g.n - 1)
        values = {v: d * scale for v, d in degrees.items()}
    else:
        values = {v: float(d) for v, d in degrees.items()}
    return CentralityVector(measure=f"k_{direction[0]}", values=values, normalized=normalized)


def strength_centrality(
    g: TradeGraph,
    direction: str = "out",
    weight: str = "frequency",
) -> CentralityVector:
    """Sum of the chosen edge weight over in- or out-edges."""
    _check_direction(direction)
    attr = weight_attr(weight)
    if direction == "in":
        values = dict(g.nx.in_degree(weight=attr))
    else:
        values = dict(g.nx.out_degree(weight=attr))
    return CentralityVector(
        measure=f"s_{direction[0]}_{_WEIGHT_SUFFIX[weight]}",
        values={v: float(s) for v, s in values.items()},
    )


def betweenness(g: TradeGraph, normalized: bool = True) -> CentralityVector:
    """
    Directed shortest-path betweenness with unit edge lengths.

    Raw values sum pair dependencies over ordered pairs; normalized values
    divide by (n-1)(n-2).
    """
    if normalized and g.n < 3:
        raise ComputeError("normalized betweenness needs at least 3 ports")
    raw = nx.betweenness_centrality(g.nx, normalized=False)
    if normalized:
        scale = 1.0 / ((g.n - 1) * (g.n - 2))
        values = {v: b * scale for v, b in raw.items()}
    else:
        values = {v: float(b) for v, b in raw.items()}
    return CentralityVector(measure="betweenness", values=values, normalized=normalized)


def transitivity(g: TradeGraph) -> float:
    """3 x triangles / connected triples on the undirected projection; 0 without triples."""
    return float(nx.transitivity(undirected_projection(g)))


def assortativity(g: TradeGraph) -> float:
    """Degree assortativity of the undirected projection."""
    proj = undirected_projection(g)
    if proj.number_of_edges() < 2:
        raise ComputeError("undefined assortativity: fewer than 2 links")
    return _checked_assortativity(lambda: nx.degree_assortativity_coefficient(proj))


def directed_assortativity(g: TradeGraph, x: str = "out", y: str = "in") -> float:
    """Directed flavours: correlation of the source's x-degree with the target's y-degree."""
    _check_direction(x)
    _check_direction(y)
    if g.e < 2:
        raise ComputeError("undefined assortativity: fewer than 2 edges")
    return _checked_assortativity(lambda: nx.degree_assortativity_coefficient(g.nx, x=x, y=y))


def centrality_correlations(g: TradeGraph) -> CorrelationMatrix:
    """Pearson correlations across ports among the eight degree/strength measures."""
    if g.n < 3:
        raise ComputeError("centrality correlations need at least 3 ports")

    nodes = g.nodes()
    vectors: List[CentralityVector] = []
    for direction in DIRECTIONS:
        vectors.append(degree_centrality(g, direction))
        for weight in ("frequency", "dwt", "volume"):
            vectors.append(strength_centrality(g, direction, weight))
    by_measure = {v.measure: np.array([v.values[n] for n in nodes], dtype=float) for v in vectors}

    constant = {m for m in MEASURES if np.ptp(by_measure[m]) == 0}
    if constant:
        logger.warning("constant centrality measures, correlations undefined: %s", sorted(constant))

    rows = []
    for a in MEASURES:
        row: List[Optional[float]] = []
        for b in MEASURES:
            if a in constant or b in constant:
                row.append(None)
            elif a == b:
                row.append(1.0)
            else:
                r = float(np.corrcoef(by_measure[a], by_measure[b])[0, 1])
                row.append(min(1.0, max(-1.0, r)))
        rows.append(tuple(row))

    # corrcoef is symmetric up to rounding; mirror the upper triangle
    values = [list(r) for r in rows]
    for i in range(len(MEASURES)):
        for j in range(i):
            values[i][j] = values[j][i]
    return CorrelationMatrix(
        measures=MEASURES,
        values=tuple(tuple(r) for r in values),
        undefined=tuple(m for m in MEASURES if m in constant),
    )


def _check_direction(direction: str) -> None:
    if direction not in DIRECTIONS:
        raise ValueError(f"Unknown direction {direction!r}. Use in or out")


def _checked_assortativity(compute) -> float:
    with warnings.catch_warnings(), np.errstate(all="ignore"):
        warnings.simplefilter("ignore", RuntimeWarning)
        try:
            value = float(compute())
        except (ZeroDivisionError, ValueError) as exc:
            raise ComputeError(f"undefined assortativity: {exc}") from exc
    if not math.isfinite(value):
        raise ComputeError("undefined assortativity: zero degree variance")
    return value
