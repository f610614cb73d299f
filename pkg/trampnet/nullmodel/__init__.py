from __future__ import annotations

from typing import Optional

from ..graph.models import TradeGraph
from .config import SCOPES, RewireConfig, replicate_seed
from .models import GsccComparison, GsccSummary, ReplicateResult, SmallWorldReport
from .rewire import check_degree_sequences, lattice_degree, rewire, ring_lattice, swap_pair
from .smallworld import gscc_comparison, omega, sigma, small_world_test

__all__ = [
    "SCOPES",
    "GsccComparison",
    "GsccSummary",
    "NullModelNamespace",
    "ReplicateResult",
    "RewireConfig",
    "SmallWorldReport",
    "check_degree_sequences",
    "gscc_comparison",
    "lattice_degree",
    "omega",
    "replicate_seed",
    "rewire",
    "ring_lattice",
    "sigma",
    "small_world_test",
    "swap_pair",
]


class NullModelNamespace:
    """
    Grouping for null models and the small-world test:

        tn.nullmodel.small_world(g)
        tn.nullmodel.rewire(g)
    """

    def __init__(self, seed: int = 0, n_replicates: int = 10, swap_factor: int = 10) -> None:
        self._seed = seed
        self._n_replicates = n_replicates
        self._swap_factor = swap_factor

    def rewire(self, g: TradeGraph, attempts: Optional[int] = None) -> TradeGraph:
        cfg = RewireConfig(n_swap_attempts=attempts, seed=self._seed, swap_factor=self._swap_factor)
        return rewire(g, cfg)

    def small_world(
        self,
        g: TradeGraph,
        *,
        attempts: Optional[int] = None,
        scope: str = "full",
    ) -> SmallWorldReport:
        return small_world_test(
            g,
            self._n_replicates,
            self._seed,
            attempts=attempts,
            scope=scope,
            swap_factor=self._swap_factor,
        )

    def gscc_comparison(self, g: TradeGraph, attempts: Optional[int] = None) -> GsccComparison:
        return gscc_comparison(g, self._seed, attempts=attempts, swap_factor=self._swap_factor)
