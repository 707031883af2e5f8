"""Batch (m, s) sweeps with an ordered worker pool and an append-only JSONL cache."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import TheoremViolation
from .rfun import r_defined, r_of
from .zcl import GapEngine, gap_limit

log = logging.getLogger(__name__)

__all__ = ["SweepConfig", "CODE_VERSION", "CACHE_ENV", "sweep_rows", "run_sweep", "format_rows", "RowCache", "COLUMNS"]

CODE_VERSION = "rptc-zcl-1"
CACHE_ENV = "RPTC_CACHE_DIR"
COLUMNS = ("m", "s", "zcl", "gap", "witness")


@dataclass(frozen=True)
class SweepConfig:
    m_from: int
    m_to: int
    s_max: Union[int, str] = "r"  # a fixed integer, or "r" for s = 2..r(m)
    fmt: str = "csv"
    output: Optional[str] = None
    jobs: int = 1
    cache: Optional[str] = None

    def __post_init__(self):
        if self.m_from < 1 or self.m_from > self.m_to:
            raise ValueError(f"need 1 <= m_from <= m_to, got {self.m_from}..{self.m_to}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.fmt not in ("csv", "jsonl"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.s_max != "r" and (not isinstance(self.s_max, int) or self.s_max < 2):
            raise ValueError(f"s_max must be an integer >= 2 or 'r', got {self.s_max!r}")

    def s_range(self, m: int) -> range:
        if self.s_max == "r":
            # r(m) is undefined when m + 1 is a power of two; the gap is already stable at s = 2
            top = r_of(m) if r_defined(m) else 2
        else:
            top = self.s_max
        return range(2, top + 1)

    def cache_path(self) -> Optional[Path]:
        if self.cache:
            return Path(self.cache)
        env = os.environ.get(CACHE_ENV)
        return Path(env) / "sweep-cache.jsonl" if env else None


def rows_for_m(m: int, s_values: Iterable[int], witness: bool = True) -> list[dict]:
    eng = GapEngine(m)
    lim = gap_limit(m)
    out = []
    for s in s_values:
        row = eng.row(s, witness)
        if row.gap < lim or (out and row.gap > out[-1]["gap"]):
            raise TheoremViolation(f"inconsistent gap G_{s}({m}) = {row.gap}")
        out.append({
            "m": m,
            "s": s,
            "zcl": row.zcl,
            "gap": row.gap,
            "witness": list(row.witness.exponents) if row.witness else [],
        })
    return out


def _work(args: tuple[int, tuple[int, ...]]) -> list[dict]:
    m, s_values = args
    return rows_for_m(m, s_values)


class RowCache:
    """Append-only JSONL of computed rows keyed by (m, s, code version)."""

    def __init__(self, path: Optional[Path]):
        self.path = path
        self.rows: dict[tuple[int, int], dict] = {}
        if path is not None and path.exists():
            with open(path) as fh:
                for n, line in enumerate(fh, 1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                        if rec.get("version") != CODE_VERSION:
                            continue
                        row = {k: rec[k] for k in COLUMNS}
                        self.rows[(int(row["m"]), int(row["s"]))] = row
                    except (ValueError, KeyError, TypeError):
                        log.warning("skipping corrupt cache line %d in %s", n, path)

    def get_all(self, m: int, s_values: Iterable[int]) -> Optional[list[dict]]:
        out = []
        for s in s_values:
            row = self.rows.get((m, s))
            if row is None:
                return None
            out.append(row)
        return out

    def add(self, rows: list[dict]) -> None:
        if self.path is None or not rows:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as fh:
            for row in rows:
                fh.write(json.dumps({**row, "version": CODE_VERSION}) + "\n")
                self.rows[(row["m"], row["s"])] = row


def sweep_rows(cfg: SweepConfig) -> list[dict]:
    cache = RowCache(cfg.cache_path())
    todo, results = [], {}
    for m in range(cfg.m_from, cfg.m_to + 1):
        s_values = tuple(cfg.s_range(m))
        hit = cache.get_all(m, s_values)
        if hit is not None:
            results[m] = hit
        else:
            todo.append((m, s_values))
    if cfg.jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            computed = list(pool.map(_work, todo, chunksize=max(1, len(todo) // (4 * cfg.jobs))))
    else:
        computed = [_work(t) for t in todo]
    for (m, _), rows in zip(todo, computed):
        results[m] = rows
        cache.add(rows)
    return [row for m in sorted(results) for row in results[m]]


def format_rows(rows: list[dict], fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "jsonl":
        for row in rows:
            buf.write(json.dumps({k: row[k] for k in COLUMNS}) + "\n")
    elif fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for row in rows:
            w.writerow([row["m"], row["s"], row["zcl"], row["gap"], " ".join(map(str, row["witness"]))])
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return buf.getvalue()


def run_sweep(cfg: SweepConfig) -> str:
    text = format_rows(sweep_rows(cfg), cfg.fmt)
    if cfg.output:
        Path(cfg.output).write_text(text)
    return text
