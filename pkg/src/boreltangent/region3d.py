"""Grid reading of graded tangent dimensions in three variables.

The procedure, for a degree alpha: shift the ideal region by alpha over
the staircase and keep the standard cells p for which p - alpha either
leaves the nonnegative octant or lands in the ideal; then count
6-connected components of the surviving region, skipping any component
larger than (x_max + y_max + z_max + 3)^2 where the maxima run over the
generator exponents.

This module is deliberately experimental, quirky size filter included,
and is validated empirically
against :func:`boreltangent.tangent.graded_dimension`, which is
authoritative.  The two do not agree everywhere; a known counterexample is
I = (x, y, z) at alpha = (-1, -1, 0), whose region has one component while
the graded dimension is 0 (no generator is active).  Disagreements are
collected into a machine-readable report by :func:`iter_discrepancies`;
nothing in the production pipeline consumes region counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .monomials import (
    DimensionMismatchError,
    Exponent,
    MonomialIdeal,
    StandardSet,
    format_ideal,
    standard_set,
)
from .tangent import alpha_support_box, graded_dimension

#: 6-connectivity: unit step in exactly one coordinate
SIX_CONNECTED = ndimage.generate_binary_structure(3, 1)


class UnsupportedDimensionError(ValueError):
    """The region method is defined for exactly three variables."""


@dataclass(frozen=True)
class RegionSlice:
    """The candidate region at one degree: its cells, its 6-connected
    components, and the number of components passing the size filter."""

    alpha: Exponent
    cells: frozenset[Exponent]
    components: tuple[frozenset[Exponent], ...]
    counted: int


def _check_three_vars(ideal: MonomialIdeal, alpha) -> Exponent:
    if ideal.nvars != 3:
        raise UnsupportedDimensionError(
            f"region method needs exactly 3 variables, got {ideal.nvars}")
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != 3:
        raise DimensionMismatchError(f"alpha must have length 3, got {len(alpha)}")
    return alpha


def default_size_filter(ideal: MonomialIdeal) -> int:
    """Default component-size threshold, from the generator maxima."""
    maxima = (max(g[t] for g in ideal.gens) for t in range(3))
    return (sum(maxima) + 3) ** 2


def region_cells(ideal: MonomialIdeal, alpha,
                 standard: StandardSet | None = None) -> frozenset[Exponent]:
    """Standard cells p with p - alpha outside the nonnegative octant or
    inside the ideal region.

    Confined to the finite standard region, so independent of any grid
    window used to realize it.
    """
    alpha = _check_three_vars(ideal, alpha)
    std = standard if standard is not None else standard_set(ideal)
    out = set()
    for p in std.cells:
        q = (p[0] - alpha[0], p[1] - alpha[1], p[2] - alpha[2])
        if q[0] < 0 or q[1] < 0 or q[2] < 0 or ideal.contains(q):
            out.add(p)
    return frozenset(out)


def _components(cells, shape, pad: int = 0) -> tuple[frozenset[Exponent], ...]:
    """6-connected components of a cell set realized on a grid.

    ``pad`` enlarges the window on every side; the result never depends on
    it (cells are finite), which the tests assert.
    """
    if not cells:
        return ()
    grid = np.zeros(tuple(s + 2 * pad for s in shape), dtype=np.uint8)
    for c in cells:
        grid[c[0] + pad, c[1] + pad, c[2] + pad] = 1
    labeled, ncomp = ndimage.label(grid, structure=SIX_CONNECTED)
    comps = []
    for idx in range(1, ncomp + 1):
        coords = np.argwhere(labeled == idx)
        comps.append(frozenset((int(a) - pad, int(b) - pad, int(c) - pad)
                               for a, b, c in coords))
    comps.sort(key=min)
    return tuple(comps)


def region_slice(ideal: MonomialIdeal, alpha, size_filter: int | None = None,
                 standard: StandardSet | None = None, _window_pad: int = 0) -> RegionSlice:
    """Cells, components, and the filtered component count at one degree."""
    alpha = _check_three_vars(ideal, alpha)
    std = standard if standard is not None else standard_set(ideal)
    cells = region_cells(ideal, alpha, standard=std)
    m = ideal.pure_powers()
    components = _components(cells, m, pad=_window_pad)
    threshold = default_size_filter(ideal) if size_filter is None else size_filter
    counted = sum(1 for comp in components if len(comp) <= threshold)
    return RegionSlice(alpha=alpha, cells=cells, components=components, counted=counted)


def region_component_count(ideal: MonomialIdeal, alpha, size_filter: int | None = None,
                           standard: StandardSet | None = None) -> int:
    """Number of 6-connected components of the region passing the filter."""
    return region_slice(ideal, alpha, size_filter=size_filter, standard=standard).counted


def region_slice_to_json(slc: RegionSlice) -> dict:
    return {
        "alpha": list(slc.alpha),
        "cells": [list(c) for c in sorted(slc.cells)],
        "components": [[list(c) for c in sorted(comp)] for comp in slc.components],
        "counted": slc.counted,
    }


def iter_discrepancies(max_colength: int = 8):
    """Compare region counts with graded dimensions over every strongly
    stable 3-variable ideal of colength <= max_colength and every alpha in
    the support box; yield one record per disagreement.

    Deterministic order: colength ascending, ideals in canonical order,
    alpha lexicographic.
    """
    from .enumeration import iter_staircase_levels, sorted_level

    for l, staircases in iter_staircase_levels(3, max_colength):
        for _text, gens, cells in sorted_level(3, staircases):
            ideal = MonomialIdeal(3, gens)
            std = StandardSet(3, frozenset(cells))
            box = alpha_support_box(ideal)
            ranges = [range(lo, hi + 1) for lo, hi in box]
            for a0 in ranges[0]:
                for a1 in ranges[1]:
                    for a2 in ranges[2]:
                        alpha = (a0, a1, a2)
                        counted = region_component_count(ideal, alpha, standard=std)
                        dim = graded_dimension(ideal, alpha, standard=std)
                        if counted != dim:
                            yield {
                                "l": l,
                                "ideal": format_ideal(ideal),
                                "alpha": list(alpha),
                                "region_count": counted,
                                "graded_dim": dim,
                            }


def write_discrepancy_report(path, max_colength: int = 8) -> int:
    """Write the disagreement records as JSONL; returns the record count."""
    import json

    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for record in iter_discrepancies(max_colength):
            fh.write(json.dumps(record, separators=(", ", ": ")) + "\n")
            count += 1
    return count
