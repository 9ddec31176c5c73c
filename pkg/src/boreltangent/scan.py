"""Colength-scale scans: T_max per m1 class, table reproduction, and the
monotonicity / necessary-condition / tetrahedral-maximum checks.

A scan of colength l enumerates every strongly stable ideal of that
colength in canonical order, computes T(I) for each, and keeps the maximum
and *all* attaining ideals per m1 class (ties carry the scientific
content, so they are never discarded).  Work is range-partitioned over the
canonical order when ``workers`` > 1; the max/argmax merge is associative
and commutative, so results are identical for any worker count.

Completed colengths are cached as JSONL files (``scan-N{N}-l{l}.jsonl``,
one record per m1 class, schema-versioned); reruns skip cached colengths,
which is also how budget-interrupted scans resume.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from pathlib import Path

from .enumeration import iter_staircase_levels, sorted_level
from .monomials import (
    MonomialIdeal,
    _axis_heights,
    format_ideal,
    k_of_l,
    parse_ideal,
    tetrahedral,
)
from .published_table import TABLE_LMAX, TABLE_LMIN, expected_cells
from .tangent import _total_from_staircase

SCHEMA_VERSION = 1

#: environment variable holding the default cache directory
CACHE_ENV_VAR = "BORELTANGENT_CACHE"


class BudgetExceededError(RuntimeError):
    """A per-colength wall-clock or ideal-count budget was exceeded.

    ``completed`` holds the records of every colength finished before the
    breach (already flushed to the cache when caching is enabled).
    """

    def __init__(self, message: str, completed=None):
        super().__init__(message)
        self.completed = completed or {}


@dataclass(frozen=True)
class ScanKey:
    nvars: int
    l: int
    m1: int

    def __post_init__(self) -> None:
        if self.nvars < 1 or self.l < 1 or self.m1 < 1:
            raise ValueError("ScanKey fields must be >= 1")


@dataclass(frozen=True)
class ScanRecord:
    """Result of maximizing T over one (nvars, l, m1) class.

    ``argmax`` lists every attaining ideal in canonical order.  ``elapsed``
    is wall time for the enclosing colength scan and is excluded from
    equality so cached records compare equal to fresh ones.
    """

    key: ScanKey
    ideal_count: int
    t_max: int | None
    argmax: tuple[MonomialIdeal, ...]
    elapsed: float = field(compare=False, default=0.0)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "nvars": self.key.nvars,
            "l": self.key.l,
            "m1": self.key.m1,
            "ideal_count": self.ideal_count,
            "t_max": self.t_max,
            "argmax": [format_ideal(i) for i in self.argmax],
            "elapsed": self.elapsed,
        }

    def to_csv_row(self) -> str:
        k, delta = k_of_l(self.key.nvars, self.key.l)
        first = format_ideal(self.argmax[0]) if self.argmax else ""
        t = "" if self.t_max is None else self.t_max
        return (f"{self.key.nvars},{self.key.l},{k},{delta},{self.key.m1},"
                f"{self.ideal_count},{t},{len(self.argmax)},\"{first}\"")


CSV_HEADER = "N,l,k,delta,m1,ideal_count,t_max,n_argmax,first_argmax"


def _record_from_json(obj: dict) -> ScanRecord | None:
    if obj.get("schema_version") != SCHEMA_VERSION:
        return None
    key = ScanKey(obj["nvars"], obj["l"], obj["m1"])
    argmax = tuple(parse_ideal(text, nvars=key.nvars) for text in obj["argmax"])
    return ScanRecord(key=key, ideal_count=obj["ideal_count"], t_max=obj["t_max"],
                      argmax=argmax, elapsed=float(obj.get("elapsed", 0.0)))


def _cache_file(cache_dir, nvars: int, l: int) -> Path:
    return Path(cache_dir) / f"scan-N{nvars}-l{l}.jsonl"


def _load_cached(cache_dir, nvars: int, l: int) -> dict[int, ScanRecord] | None:
    path = _cache_file(cache_dir, nvars, l)
    if not path.is_file():
        return None
    records: dict[int, ScanRecord] = {}
    try:
        for line in path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            record = _record_from_json(json.loads(line))
            if record is None:
                return None
            records[record.key.m1] = record
    except (OSError, ValueError, KeyError):
        return None
    return records or None


def _store_cached(cache_dir, nvars: int, l: int, records: dict[int, ScanRecord]) -> None:
    path = _cache_file(cache_dir, nvars, l)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".jsonl.tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        for m1 in sorted(records):
            fh.write(json.dumps(records[m1].to_json()) + "\n")
    os.replace(tmp, path)


def _tangent_total_task(item):
    gens, cells = item
    return _total_from_staircase(gens, cells)


def _scan_level(nvars: int, l: int, items, pool, workers: int,
                budget_seconds, started: float) -> dict[int, ScanRecord]:
    """Max/argmax per m1 class over one colength's canonical item list."""
    tasks = [(gens, cells) for _text, gens, cells in items]
    if pool is not None and len(tasks) > workers:
        chunk = max(1, min(128, len(tasks) // (workers * 4) or 1))
        totals_iter = pool.imap(_tangent_total_task, tasks, chunksize=chunk)
    else:
        totals_iter = map(_tangent_total_task, tasks)

    best: dict[int, int] = {}
    argmax: dict[int, list[int]] = {}
    counts: dict[int, int] = {}
    for idx, total in enumerate(totals_iter):
        if budget_seconds is not None and (idx & 0x3F) == 0:
            if time.monotonic() - started > budget_seconds:
                raise BudgetExceededError(
                    f"budget of {budget_seconds}s exceeded scanning N={nvars} l={l} "
                    f"after {idx} of {len(tasks)} ideals")
        m1 = _axis_heights(nvars, items[idx][2])[0]
        counts[m1] = counts.get(m1, 0) + 1
        prev = best.get(m1)
        if prev is None or total > prev:
            best[m1] = total
            argmax[m1] = [idx]
        elif total == prev:
            argmax[m1].append(idx)

    elapsed = time.monotonic() - started
    records: dict[int, ScanRecord] = {}
    for m1 in sorted(best):
        ideals = tuple(MonomialIdeal(nvars, items[idx][1]) for idx in argmax[m1])
        records[m1] = ScanRecord(key=ScanKey(nvars, l, m1), ideal_count=counts[m1],
                                 t_max=best[m1], argmax=ideals, elapsed=elapsed)
    return records


def scan_colength_range(nvars: int, lmin: int, lmax: int, *, workers: int = 1,
                        cache_dir=None, budget_seconds=None,
                        max_ideals=None) -> dict[int, dict[int, ScanRecord]]:
    """Scan every colength in lmin..lmax; returns {l: {m1: ScanRecord}}.

    One staircase growth pass serves the whole range.  Colengths already in
    the cache are not recomputed; freshly scanned ones are written to the
    cache as they complete, so an interrupted run resumes where it stopped.
    """
    if not 1 <= lmin <= lmax:
        raise ValueError("need 1 <= lmin <= lmax")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    results: dict[int, dict[int, ScanRecord]] = {}
    pending = []
    for l in range(lmin, lmax + 1):
        cached = _load_cached(cache_dir, nvars, l) if cache_dir else None
        if cached is not None:
            results[l] = cached
        else:
            pending.append(l)
    if not pending:
        return results

    pool = None
    try:
        if workers > 1:
            pool = multiprocessing.Pool(workers)
        for l, staircases in iter_staircase_levels(nvars, max(pending)):
            if l not in pending:
                continue
            started = time.monotonic()
            if max_ideals is not None and len(staircases) > max_ideals:
                raise BudgetExceededError(
                    f"N={nvars} l={l} has {len(staircases)} ideals, over the "
                    f"cap of {max_ideals}", completed=results)
            items = sorted_level(nvars, staircases)
            try:
                records = _scan_level(nvars, l, items, pool, workers,
                                      budget_seconds, started)
            except BudgetExceededError as exc:
                raise BudgetExceededError(str(exc), completed=results) from None
            results[l] = records
            if cache_dir:
                _store_cached(cache_dir, nvars, l, records)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return results


def scan_colength(nvars: int, l: int, **kwargs) -> dict[int, ScanRecord]:
    """All m1-class records at one colength."""
    return scan_colength_range(nvars, l, l, **kwargs)[l]


def t_max(key: ScanKey, **kwargs) -> ScanRecord:
    """The record for one (nvars, l, m1) class; an empty record (count 0,
    no t_max) when the class is not realized."""
    records = scan_colength(key.nvars, key.l, **kwargs)
    found = records.get(key.m1)
    if found is not None:
        return found
    return ScanRecord(key=key, ideal_count=0, t_max=None, argmax=())


@dataclass(frozen=True)
class TableCell:
    l: int
    k: int
    m1: int
    expected: int
    computed: int | None
    ok: bool

    def to_json(self) -> dict:
        return {"l": self.l, "k": self.k, "m1": self.m1,
                "expected": self.expected, "computed": self.computed, "ok": self.ok}


def reproduce_published_table(lmin: int = TABLE_LMIN, lmax: int = TABLE_LMAX, *,
                          workers: int = 1, cache_dir=None,
                          budget_seconds=None) -> list[TableCell]:
    """Recompute the published T_max table cells and compare exactly.

    A mismatching cell is reported with ok=False, never raised: mismatch is
    data.
    """
    lmin = max(lmin, TABLE_LMIN)
    lmax = min(lmax, TABLE_LMAX)
    records = scan_colength_range(3, lmin, lmax, workers=workers,
                                  cache_dir=cache_dir, budget_seconds=budget_seconds)
    cells = []
    for l in range(lmin, lmax + 1):
        k = k_of_l(3, l)[0]
        per_m1 = records[l]
        for m1, expected in expected_cells(l):
            record = per_m1.get(m1)
            computed = record.t_max if record is not None else None
            cells.append(TableCell(l=l, k=k, m1=m1, expected=expected,
                                   computed=computed, ok=computed == expected))
    return cells


@dataclass(frozen=True)
class MonotonicityVerdict:
    """T_max per realized m1 class at one colength, with both readings of
    "increasing" (the table is strict everywhere, but the conjecture's word
    is checked in both senses)."""

    nvars: int
    l: int
    sequence: tuple[tuple[int, int], ...]
    strictly_increasing: bool
    weakly_increasing: bool

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "l": self.l,
                "sequence": [{"m1": m1, "t_max": t} for m1, t in self.sequence],
                "strictly_increasing": self.strictly_increasing,
                "weakly_increasing": self.weakly_increasing}


def check_monotonicity(nvars: int, l: int, **kwargs) -> MonotonicityVerdict:
    records = scan_colength(nvars, l, **kwargs)
    sequence = tuple((m1, records[m1].t_max) for m1 in sorted(records))
    values = [t for _m1, t in sequence]
    return MonotonicityVerdict(
        nvars=nvars, l=l, sequence=sequence,
        strictly_increasing=all(a < b for a, b in zip(values, values[1:])),
        weakly_increasing=all(a <= b for a, b in zip(values, values[1:])),
    )


@dataclass(frozen=True)
class NecessaryVerdict:
    """Whether every global-maximum ideal at colength l has m1 = k."""

    nvars: int
    l: int
    k: int
    t_max: int
    argmax_m1: tuple[int, ...]
    argmax: tuple[MonomialIdeal, ...]
    holds: bool
    unique: bool

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "l": self.l, "k": self.k, "t_max": self.t_max,
                "argmax_m1": list(self.argmax_m1),
                "argmax": [format_ideal(i) for i in self.argmax],
                "holds": self.holds, "unique": self.unique}


def check_necessary_condition(nvars: int, l: int, **kwargs) -> NecessaryVerdict:
    records = scan_colength(nvars, l, **kwargs)
    k = k_of_l(nvars, l)[0]
    top = max(record.t_max for record in records.values())
    argmax_m1 = tuple(m1 for m1 in sorted(records) if records[m1].t_max == top)
    ideals = []
    for m1 in argmax_m1:
        ideals.extend(records[m1].argmax)
    ideals.sort(key=format_ideal)
    return NecessaryVerdict(nvars=nvars, l=l, k=k, t_max=top,
                            argmax_m1=argmax_m1, argmax=tuple(ideals),
                            holds=all(m1 == k for m1 in argmax_m1),
                            unique=len(ideals) == 1)


@dataclass(frozen=True)
class TetrahedralVerdict:
    """Whether m^k attains the maximum at the tetrahedral colength, and
    whether it is the unique attaining ideal."""

    nvars: int
    k: int
    l: int
    t_max: int
    power_attains: bool
    unique: bool
    n_argmax: int

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "k": self.k, "l": self.l, "t_max": self.t_max,
                "power_attains": self.power_attains, "unique": self.unique,
                "n_argmax": self.n_argmax}


def power_ideal(nvars: int, k: int) -> MonomialIdeal:
    """m^k: generated by every monomial of total degree k."""
    if nvars < 1 or k < 1:
        raise ValueError("need nvars >= 1 and k >= 1")

    def degree_vectors(n, total):
        if n == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in degree_vectors(n - 1, total - first):
                yield (first,) + rest

    return MonomialIdeal(nvars, tuple(degree_vectors(nvars, k)))


def check_tetrahedral_max(nvars: int, k: int, **kwargs) -> TetrahedralVerdict:
    l = tetrahedral(nvars, k)
    verdict = check_necessary_condition(nvars, l, **kwargs)
    power = power_ideal(nvars, k)
    attains = power in verdict.argmax
    return TetrahedralVerdict(nvars=nvars, k=k, l=l, t_max=verdict.t_max,
                              power_attains=attains,
                              unique=attains and len(verdict.argmax) == 1,
                              n_argmax=len(verdict.argmax))
