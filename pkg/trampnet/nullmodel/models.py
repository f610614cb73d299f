from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class ReplicateResult:
    index: int
    seed: int
    C: float
    L: float
    gscc_nodes: int
    swaps_accepted: int


@dataclass(frozen=True)
class SmallWorldReport:
    """
    Observed graph against its rewired and lattice references.

    sigma = (C/C_rand)/(L/L_rand) and omega = L_rand/L - C/C_latt, computed
    from the stored fields; either is None when its formula is undefined.
    """
    layer: str
    window: str
    scope: str
    n: int
    e: int
    L: float
    L_rand: float
    C: float
    C_rand: float
    C_latt: Optional[float]
    lattice_k: int
    sigma: Optional[float]
    omega: Optional[float]
    n_replicates: int
    dropped_replicates: int
    seed: int
    attempts: int
    replicates: Tuple[ReplicateResult, ...] = ()
    warnings: Tuple[str, ...] = ()


@dataclass(frozen=True)
class GsccSummary:
    n: int
    e: int
    phi: float
    n_s: int
    l: float
    c: float
    a: Optional[float]


@dataclass(frozen=True)
class GsccComparison:
    """Observed GSCC against one rewired replicate of it."""
    layer: str
    window: str
    seed: int
    attempts: int
    observed: GsccSummary
    simulated: GsccSummary
