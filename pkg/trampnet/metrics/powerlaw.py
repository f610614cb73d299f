from __future__ import annotations

from collections import Counter
from typing import Dict, Mapping

import numpy as np
from scipy import stats

from ..errors import ComputeError
from ..graph.models import TradeGraph
from .models import PowerLawFit

DEGREE_KINDS = ("in", "out", "total")


def degree_histogram(g: TradeGraph, which: str = "total") -> Dict[int, int]:
    """{degree: number of ports} for degrees >= 1."""
    if which not in DEGREE_KINDS:
        raise ValueError(f"Unknown degree kind {which!r}. Use in, out or total")

    if not g.directed or which == "out":
        degrees = g.out_degree()
    elif which == "in":
        degrees = g.in_degree()
    else:
        ins = g.in_degree()
        degrees = {v: d + ins[v] for v, d in g.out_degree().items()}

    hist = Counter(d for d in degrees.values() if d >= 1)
    return dict(sorted(hist.items()))


def fit_degree_histogram(hist: Mapping[int, float], which: str = "total") -> PowerLawFit:
    """
    Least-squares line through (log k, log f(k)).

    Bins with k < 1 or f(k) < 1 are ignored; gamma is the negated slope.
    """
    usable = sorted((k, f) for k, f in hist.items() if k >= 1 and f >= 1)
    if len(usable) < 2:
        raise ComputeError(f"power-law fit needs at least 2 usable degree bins, got {len(usable)}")

    log_k = np.log(np.array([k for k, _ in usable], dtype=float))
    log_f = np.log(np.array([f for _, f in usable], dtype=float))
    fit = stats.linregress(log_k, log_f)
    return PowerLawFit(
        gamma=float(-fit.slope),
        logC=float(fit.intercept),
        r2=float(fit.rvalue ** 2),
        n_bins=len(usable),
        which=which,
    )


def fit_power_law(g: TradeGraph, which: str = "total") -> PowerLawFit:
    return fit_degree_histogram(degree_histogram(g, which), which)
