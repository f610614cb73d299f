from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

# Record field -> source column, named as in the Oceanbolt trade-flow export.
DEFAULT_COLUMNS: Dict[str, str] = {
    "flow_id": "flow_id",
    "voyage_id": "voyage_id",
    "commodity_group": "commodity_group",
    "commodity": "commodity",
    "volume": "volume",
    "dwt": "dwt",
    "load_port_id": "load_port_id",
    "load_port_name": "load_port_name",
    "load_region": "load_region",
    "load_country": "load_country",
    "discharge_port_id": "discharge_port_id",
    "discharge_port_name": "discharge_port_name",
    "discharge_region": "discharge_region",
    "discharge_country": "discharge_country",
    "load_departed_at": "load_port_departed_at",
    "discharge_arrived_at": "discharge_port_arrived_at",
    "days_total_duration": "days_total_duration",
    "status": "status",
    "imo": "imo",
    "segment": "segment",
}

REQUIRED_FIELDS: Tuple[str, ...] = (
    "flow_id",
    "voyage_id",
    "commodity_group",
    "volume",
    "dwt",
    "load_port_id",
    "load_port_name",
    "load_region",
    "load_country",
    "discharge_port_id",
    "discharge_port_name",
    "discharge_region",
    "discharge_country",
    "load_departed_at",
    "discharge_arrived_at",
    "days_total_duration",
    "status",
)

# Canonical layer labels and the CLI spellings that map onto them.
LAYER_ALIASES: Dict[str, str] = {
    "grains": "Grains",
    "grain": "Grains",
    "coal": "Coal",
    "iron-ore": "Iron Ore",
    "iron ore": "Iron Ore",
    "ironore": "Iron Ore",
}
CANONICAL_LAYERS: Tuple[str, ...] = ("Grains", "Coal", "Iron Ore")


@dataclass
class FlowSchema:
    """
    Column mapping for the trade-flow CSV.

    Only the fields you override need to be given; everything else falls back
    to the export's own column names.
    """
    columns: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        unknown = set(self.columns) - set(DEFAULT_COLUMNS)
        if unknown:
            raise ValueError(f"FlowSchema: unknown record fields {sorted(unknown)}")
        self.columns = {**DEFAULT_COLUMNS, **dict(self.columns)}

    def column(self, field_name: str) -> str:
        return self.columns[field_name]

    def mapped_columns(self) -> FrozenSet[str]:
        return frozenset(self.columns.values())


@dataclass
class CleaningConfig:
    """
    Rules applied by clean_flows.

    category_column: record field or raw column holding the flow category.
    excluded_categories: category labels dropped as non-trade flows
                         (matched case-insensitively).
    unknown_port_names: port-name sentinels meaning "unknown port".
    """
    category_column: str = "flow_type"
    excluded_categories: Tuple[str, ...] = ("Transit", "Yard")
    unknown_port_names: Tuple[str, ...] = ("unknown",)

    def is_excluded_category(self, value: Optional[str]) -> bool:
        if not value:
            return False
        v = value.strip().casefold()
        return any(v == c.casefold() for c in self.excluded_categories)

    def is_unknown_name(self, value: Optional[str]) -> bool:
        if value is None:
            return False
        v = value.strip().casefold()
        return any(v == s.casefold() for s in self.unknown_port_names)


def canonical_layer(label: Optional[str]) -> Optional[str]:
    """Map a CLI/user layer label onto a commodity_group label; None means ALL."""
    if label is None:
        return None
    key = label.strip()
    if not key or key.casefold() == "all":
        return None
    return LAYER_ALIASES.get(key.casefold(), key)
