from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional, Union

from .clean import clean_flows
from .config import CleaningConfig, FlowSchema
from .models import FlowTable
from .parse import read_flows

logger = logging.getLogger(__name__)


class FlowRegistry:
    """
    Central place to load and share flow tables.

    Each input file is parsed and cleaned once, on first access; later
    lookups return the cached tables.
    """

    def __init__(
        self,
        schema: Optional[FlowSchema] = None,
        rules: Optional[CleaningConfig] = None,
    ) -> None:
        self._schema = schema or FlowSchema()
        self._rules = rules or CleaningConfig()

        # Lazily filled, keyed by resolved path
        self._parsed: Dict[Path, FlowTable] = {}
        self._cleaned: Dict[Path, FlowTable] = {}

    @property
    def schema(self) -> FlowSchema:
        return self._schema

    @property
    def rules(self) -> CleaningConfig:
        return self._rules

    def parsed(self, path: Union[str, Path]) -> FlowTable:
        key = Path(path).resolve()
        if key not in self._parsed:
            self._parsed[key] = read_flows(path, self._schema)
        return self._parsed[key]

    def cleaned(self, path: Union[str, Path]) -> FlowTable:
        key = Path(path).resolve()
        if key not in self._cleaned:
            self._cleaned[key] = clean_flows(self.parsed(path), self._rules)
        else:
            logger.debug("flow table cache hit for %s", key)
        return self._cleaned[key]

    def clear(self) -> None:
        self._parsed.clear()
        self._cleaned.clear()
