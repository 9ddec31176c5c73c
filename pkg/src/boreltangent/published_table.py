"""Published T_max values for three variables, colengths 10 through 35.

The values ship as ``data/tmax_n3.csv`` (columns l, k, m1, t_max; one row
per table cell, m1 >= 2 only — the m1 = 1 column follows the 3l law and is
checked separately).  The file was transcribed once and is pinned by a
SHA-256 digest so accidental edits fail loudly; `table` comparisons are
exact, offline, and self-contained.
"""

from __future__ import annotations

import csv
import hashlib
from functools import lru_cache
from importlib import resources

from .monomials import k_of_l

_SHA256 = "00211215b037d385f9cbff04c7e3927313353e7143e62a3465d52c2d7e84d125"

TABLE_LMIN = 10
TABLE_LMAX = 35


class TableDataError(RuntimeError):
    """The bundled expected-value table is missing or corrupted."""


@lru_cache(maxsize=1)
def expected_table() -> dict[tuple[int, int], int]:
    """Map (l, m1) -> published T_max for N = 3, 10 <= l <= 35, m1 >= 2."""
    data = resources.files("boreltangent").joinpath("data/tmax_n3.csv").read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != _SHA256:
        raise TableDataError(
            f"tmax_n3.csv digest {digest} does not match the pinned transcription")
    table: dict[tuple[int, int], int] = {}
    reader = csv.DictReader(data.decode("utf-8").splitlines())
    for row in reader:
        l = int(row["l"])
        k = int(row["k"])
        m1 = int(row["m1"])
        if k != k_of_l(3, l)[0]:
            raise TableDataError(f"row l={l} carries k={k}, expected {k_of_l(3, l)[0]}")
        if not 2 <= m1 <= k:
            raise TableDataError(f"row l={l} has m1={m1} outside 2..k")
        table[(l, m1)] = int(row["t_max"])
    if len(table) != 69:
        raise TableDataError(f"expected 69 table cells, found {len(table)}")
    return table


def expected_cells(l: int) -> list[tuple[int, int]]:
    """The (m1, t_max) cells published for colength l, m1 ascending."""
    table = expected_table()
    return sorted((m1, t) for (ll, m1), t in table.items() if ll == l)
