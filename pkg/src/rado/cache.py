"""Append-only JSON-lines result cache, keyed by the sorted coefficient tuple; last record wins."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from .formula import rado_from_canonical

RANK = {"inconclusive": 0, "witness-only": 1, "confirmed": 2}


@dataclass
class CacheRecord:
    coeffs: tuple[int, ...]
    canonical: tuple[int, int, int]
    R: int
    status: str
    confirmed_at: int | None = None
    created: str = ""
    updated: str = ""
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = tuple(sorted(self.coeffs))
        self.canonical = tuple(self.canonical)
        if self.status not in RANK:
            raise ValueError(f"unknown status {self.status!r}")
        a, b, _ = self.canonical
        if self.R != rado_from_canonical(a, b):
            raise ValueError(f"cached R={self.R} does not match canonical form {self.canonical}")

    def to_json(self) -> str:
        d = asdict(self)
        d["coeffs"] = list(self.coeffs)
        d["canonical"] = list(self.canonical)
        return json.dumps(d, sort_keys=True)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class ResultCache:
    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)

    def load(self) -> dict[tuple[int, ...], CacheRecord]:
        records: dict[tuple[int, ...], CacheRecord] = {}
        if not os.path.exists(self.path):
            return records
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = CacheRecord(**json.loads(line))
                except (ValueError, TypeError):
                    # a torn final line from an interrupted append
                    continue
                records[rec.coeffs] = rec
        return records

    def get(self, coeffs) -> CacheRecord | None:
        return self.load().get(tuple(sorted(coeffs)))

    def put(self, record: CacheRecord) -> CacheRecord:
        """Append ``record`` unless it would downgrade the stored status; returns the effective record."""
        old = self.get(record.coeffs)
        now = _now()
        record.created = old.created if old else now
        record.updated = now
        if old is not None and RANK[old.status] > RANK[record.status]:
            return old
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(record.to_json() + "\n")
        return record
