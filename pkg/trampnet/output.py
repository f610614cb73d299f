from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
import logging
import math
import os
import sys
import tempfile
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


def to_jsonable(value: Any) -> Any:
    """
    Turn results into plain JSON values.

    Dataclasses become dicts, tuples/sets become lists, mapping keys become
    strings, datetimes become ISO strings and non-finite floats become null.
    Anything else with a meaningful str() (QuarterId) is stringified.
    """
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {
            f.name: to_jsonable(getattr(value, f.name))
            for f in dataclasses.fields(value)
        }
    if isinstance(value, Mapping):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, datetime):
        return value.isoformat()
    # numpy scalars and arrays
    if hasattr(value, "tolist"):
        return to_jsonable(value.tolist())
    return str(value)


def dumps(data: Any) -> str:
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, allow_nan=False) + "\n"


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _cell(v) for v in row])
    return buf.getvalue()


def atomic_write_text(path: Union[str, Path], text: str) -> None:
    """Write to a temporary sibling, then move it into place."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=str(target.parent))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def atomic_write_json(path: Union[str, Path], data: Any) -> None:
    atomic_write_text(path, dumps(data))


class ArtifactSet:
    """
    Output files of one command, staged in memory.

    Nothing touches the disk until commit(), which runs after every
    computation of the command has succeeded. commit() writes the
    artifacts and then a manifest with their SHA-256 digests.
    """

    def __init__(self) -> None:
        self._files: Dict[str, str] = {}

    def add_json(self, name: str, data: Any) -> None:
        self._files[name] = dumps(data)

    def add_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        self._files[name] = csv_text(header, rows)

    def add_text(self, name: str, text: str) -> None:
        self._files[name] = text

    @property
    def names(self) -> List[str]:
        return sorted(self._files)

    def text(self, name: str) -> str:
        return self._files[name]

    def commit(
        self,
        out_dir: Union[str, Path],
        manifest: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, str]:
        out = Path(out_dir)
        digests: Dict[str, str] = {}
        for name in self.names:
            text = self._files[name]
            atomic_write_text(out / name, text)
            digests[name] = hashlib.sha256(text.encode("utf-8")).hexdigest()
            logger.info("wrote %s", out / name)

        if manifest is not None:
            atomic_write_json(out / MANIFEST_NAME, {**manifest, "artifacts": digests})
        return digests


def print_result(result, output: str = "json", stream=None) -> None:
    """
    Print an OperationResult in the desired format.

    output: "json" (default) or "csv"; csv tabulates details["rows"] when
    present and falls back to JSON otherwise.
    """
    stream = stream or sys.stdout
    data = to_jsonable(result)

    if output == "csv":
        details = data.get("details", {}) if isinstance(data, dict) else {}
        rows = details.get("rows")
        if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
            fieldnames = sorted({k for r in rows for k in r})
            writer = csv.DictWriter(stream, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            for r in rows:
                writer.writerow({k: _cell(r.get(k)) for k in fieldnames})
            return

    stream.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


# ----------------- internal helpers -----------------


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return "->".join(str(x) for x in k)
    return str(k)


def _cell(v: Any) -> Any:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v) if math.isfinite(v) else ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return v
