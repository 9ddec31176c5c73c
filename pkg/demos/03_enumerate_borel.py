#!/usr/bin/env python3
"""Enumerating strongly stable ideals of a given colength.

Staircases grow one cell at a time; a cell is addable when its divisors
and its rightward Borel moves are already present.  The stream is emitted
in the canonical order of the ideal strings, so runs are reproducible
line-for-line.
"""

from boreltangent import (
    EnumFilter,
    count_strongly_stable,
    enumerate_strongly_stable,
    format_ideal,
)

print("all strongly stable ideals of colength 5 in two variables:")
for ideal in enumerate_strongly_stable(2, 5):
    print("  ", format_ideal(ideal))

# in the plane these are counted by partitions into distinct parts
print("\ncounts in N=2 (distinct-part partition numbers):")
print("  l:     ", list(range(1, 13)))
print("  count: ", [count_strongly_stable(2, l) for l in range(1, 13)])

print("\ncounts in N=3:")
print("  l:     ", list(range(1, 13)))
print("  count: ", [count_strongly_stable(3, l) for l in range(1, 13)])

# filters restrict the same stream; here: colength 8, pure x exponent 2,
# exactly six minimal generators -- the running square example shows up
print("\ncolength 8, m1 = 2, six generators:")
for ideal in enumerate_strongly_stable(3, 8, EnumFilter(m1=2, num_generators=6)):
    print("  ", format_ideal(ideal))
