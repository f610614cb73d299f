from __future__ import annotations

from .config import DEFAULT_QUARTERS, SCENARIOS, SynthSpec
from .scenarios import CATEGORY_COLUMN, FIELD_ORDER, Fixture, generate

__all__ = [
    "CATEGORY_COLUMN",
    "DEFAULT_QUARTERS",
    "FIELD_ORDER",
    "Fixture",
    "SCENARIOS",
    "SynthSpec",
    "generate",
]
