from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from .ingest.models import QuarterId, QuarterWindow

WEIGHT_KINDS = ("frequency", "dwt", "volume")


@dataclass
class TrampNetConfig:
    seed: int = 0
    n_replicates: int = 10
    # swap attempts per rewiring = swap_factor * |E|
    swap_factor: int = 10
    community_weight: str = "frequency"
    small_community_size: int = 5
    top_k: int = 8

    def __post_init__(self) -> None:
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("TrampNetConfig: seed must be a 64-bit unsigned integer")
        if self.n_replicates < 1:
            raise ValueError("TrampNetConfig: n_replicates must be >= 1")
        if self.swap_factor < 0:
            raise ValueError("TrampNetConfig: swap_factor must be >= 0")
        if self.community_weight not in WEIGHT_KINDS:
            raise ValueError(
                f"TrampNetConfig: community_weight must be one of {', '.join(WEIGHT_KINDS)}"
            )
        if self.small_community_size < 1:
            raise ValueError("TrampNetConfig: small_community_size must be >= 1")
        if self.top_k < 1:
            raise ValueError("TrampNetConfig: top_k must be >= 1")


ENV_PREFIX = "TRAMPNET_"
OUTPUT_FORMATS = ("json", "csv")

# RunConfig field -> (environment variable suffix, parser)
_ENV_FIELDS: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "input": ("INPUT", str),
    "layer": ("LAYER", str),
    "window_from": ("FROM", str),
    "window_to": ("TO", str),
    "seed": ("SEED", int),
    "replicates": ("REPLICATES", int),
    "attempts": ("ATTEMPTS", int),
    "k": ("K", int),
    "out": ("OUT", str),
    "format": ("FORMAT", str),
    "weight": ("WEIGHT", str),
}


@dataclass
class RunConfig:
    """
    Fully resolved settings of one CLI run.

    Priority for every field:
      1) explicit command-line flag
      2) environment variable TRAMPNET_<NAME> (TRAMPNET_SEED, TRAMPNET_OUT, ...)
      3) the default below

    attempts=None means swap_factor x |E| swap attempts per replicate.
    """
    command: str = ""
    input: Optional[str] = None
    layer: str = "all"
    window_from: Optional[str] = None
    window_to: Optional[str] = None
    seed: int = 0
    replicates: int = 10
    attempts: Optional[int] = None
    k: int = 2
    out: str = "./trampnet-out"
    format: str = "json"
    weight: str = "frequency"
    scope: str = "full"
    top: int = 8
    break_quarter: Optional[str] = None
    country: Optional[str] = None
    product: Optional[str] = None

    def __post_init__(self) -> None:
        if self.format not in OUTPUT_FORMATS:
            raise ValueError(f"RunConfig: format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.weight not in WEIGHT_KINDS:
            raise ValueError(f"RunConfig: weight must be one of {', '.join(WEIGHT_KINDS)}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("RunConfig: seed must be a 64-bit unsigned integer")
        if self.replicates < 1:
            raise ValueError("RunConfig: replicates must be >= 1")
        if self.attempts is not None and self.attempts < 0:
            raise ValueError("RunConfig: attempts must be >= 0")
        if self.k < 1:
            raise ValueError("RunConfig: k must be >= 1")
        if self.top < 1:
            raise ValueError("RunConfig: top must be >= 1")
        for quarter in (self.window_from, self.window_to, self.break_quarter):
            if quarter:
                QuarterId.parse(quarter)

    @classmethod
    def resolve(
        cls,
        flags: Mapping[str, Any],
        environ: Optional[Mapping[str, str]] = None,
    ) -> "RunConfig":
        """Build from parsed flags (None = not given), falling back to the environment."""
        env = os.environ if environ is None else environ
        known = {f.name for f in fields(cls)}
        values: Dict[str, Any] = {
            k: v for k, v in flags.items() if k in known and v is not None
        }
        for name, (suffix, parse) in _ENV_FIELDS.items():
            if name in values:
                continue
            raw = env.get(ENV_PREFIX + suffix)
            if raw is None or raw == "":
                continue
            try:
                values[name] = parse(raw)
            except ValueError:
                raise ValueError(f"{ENV_PREFIX}{suffix}: invalid value {raw!r}") from None
        return cls(**values)

    @property
    def window(self) -> QuarterWindow:
        return QuarterWindow(
            start=QuarterId.parse(self.window_from) if self.window_from else None,
            end=QuarterId.parse(self.window_to) if self.window_to else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
