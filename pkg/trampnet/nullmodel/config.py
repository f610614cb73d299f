from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

SCOPES = ("full", "gscc")
DEFAULT_SWAP_FACTOR = 10


@dataclass(frozen=True)
class RewireConfig:
    """
    Double-edge-swap settings.

    n_swap_attempts: rounds to run, skipped rounds included; None means
                     swap_factor x |E|.
    seed:            64-bit unsigned seed of the swap sequence.
    scope:           'full' rewires the whole graph, 'gscc' only its GSCC.
    """
    n_swap_attempts: Optional[int] = None
    seed: int = 0
    scope: str = "full"
    swap_factor: int = DEFAULT_SWAP_FACTOR

    def __post_init__(self) -> None:
        if self.n_swap_attempts is not None and self.n_swap_attempts < 0:
            raise ValueError("RewireConfig: n_swap_attempts must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("RewireConfig: seed must be a 64-bit unsigned integer")
        if self.scope not in SCOPES:
            raise ValueError(f"RewireConfig: scope must be one of {', '.join(SCOPES)}")
        if self.swap_factor < 0:
            raise ValueError("RewireConfig: swap_factor must be >= 0")

    def attempts_for(self, n_edges: int) -> int:
        if self.n_swap_attempts is not None:
            return self.n_swap_attempts
        return self.swap_factor * n_edges


def replicate_seed(seed: int, index: int) -> int:
    """Independent sub-seed for replicate `index` of a run seeded with `seed`."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])
