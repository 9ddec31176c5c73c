"""Independent brute-force oracles used by the tests.

Everything here is deliberately written from the definitions, sharing no
code path with the package: order ideals are grown without any Borel
condition, stability is checked move-by-move on whole cell sets, and the
distinct-part partition numbers come from their own recurrence.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def iter_order_ideal_levels(nvars: int, max_size: int):
    """Yield (size, list of frozensets) over ALL divisor-closed sets.

    No stability condition: this enumerates every finite order ideal in
    N^nvars, i.e. every Artinian monomial-ideal staircase.
    """
    frontier = [frozenset([(0,) * nvars])]
    yield 1, frontier
    for _size in range(2, max_size + 1):
        seen = set()
        out = []
        for cells in frontier:
            candidates = set()
            for v in cells:
                for t in range(nvars):
                    w = v[:t] + (v[t] + 1,) + v[t + 1:]
                    if w not in cells:
                        candidates.add(w)
            for c in candidates:
                ok = True
                for t in range(nvars):
                    if c[t] > 0 and c[:t] + (c[t] - 1,) + c[t + 1:] not in cells:
                        ok = False
                        break
                if ok:
                    grown = cells | {c}
                    if grown not in seen:
                        seen.add(grown)
                        out.append(grown)
        frontier = out
        yield _size, frontier


def is_borel_staircase(cells, nvars: int) -> bool:
    """Complement-side stability: every rightward unit move of a cell with
    positive exponent at a smaller index stays inside the cell set."""
    for v in cells:
        for s in range(nvars):
            if v[s] == 0:
                continue
            for t in range(s + 1, nvars):
                moved = list(v)
                moved[s] -= 1
                moved[t] += 1
                if tuple(moved) not in cells:
                    return False
    return True


def brute_force_strongly_stable(gens, nvars: int, pure_powers) -> bool:
    """Definition-level check: apply every Borel move to every monomial of
    the ideal inside the pure-power bounding box."""

    def member(u):
        return any(all(g[t] <= u[t] for t in range(nvars)) for g in gens)

    for u in product(*(range(m + 1) for m in pure_powers)):
        if not member(u):
            continue
        for t in range(nvars):
            if u[t] == 0:
                continue
            for s in range(t):
                moved = list(u)
                moved[t] -= 1
                moved[s] += 1
                # past the box a pure power divides the image anyway
                if moved[s] > pure_powers[s]:
                    continue
                if not member(tuple(moved)):
                    return False
    return True


@lru_cache(maxsize=None)
def _distinct_partitions_bounded(n: int, largest: int) -> int:
    """Partitions of n into distinct parts, every part <= largest."""
    if n == 0:
        return 1
    if largest <= 0 or n < 0:
        return 0
    return (_distinct_partitions_bounded(n, largest - 1)
            + _distinct_partitions_bounded(n - largest, min(largest - 1, n - largest)))


def distinct_partition_count(n: int) -> int:
    """Number of partitions of n into distinct parts."""
    return _distinct_partitions_bounded(n, n)


def iter_partitions(n: int):
    """All partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def partition_staircase(partition) -> frozenset:
    """Cells of the 2-variable staircase whose column heights are the parts."""
    return frozenset((i, j) for i, part in enumerate(partition) for j in range(part))


def fraction_rank(rows) -> int:
    """Exact rank by plain Gaussian elimination over Fractions."""
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
