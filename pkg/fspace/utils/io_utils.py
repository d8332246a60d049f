import csv
import json
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

SCHEMA = "fspace/1"


def dumps_json(data: Any) -> str:
    """Byte-stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def with_schema(payload: dict[str, Any]) -> dict[str, Any]:
    return {"schema": SCHEMA, **payload}


def write_json(file_path: str | Path, data: dict | list[dict]) -> None:
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(dumps_json(data))


def write_csv(
    file_path: str | Path, header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> None:
    with open(file_path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
