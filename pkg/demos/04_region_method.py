#!/usr/bin/env python3
"""The experimental 3D grid reading of graded dimensions.

Shift the ideal region by a degree alpha over the staircase and count
6-connected components of what survives.  At many degrees this equals the
graded dimension of Hom(I, R/I); at others it overcounts, which is why the
tangent module never consumes these numbers.  The committed report
reports/region3d_discrepancies_n3_l8.jsonl pins down every disagreement
for colengths up to 8.
"""

from itertools import islice, product

from boreltangent import (
    alpha_support_box,
    graded_dimension,
    parse_ideal,
    region_component_count,
    region_slice,
)
from boreltangent.region3d import iter_discrepancies

session = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z")
slc = region_slice(session, (0, 2, -3))
print("session ideal at degree (0,2,-3):")
print("  region cells:", sorted(slc.cells))
print("  components:  ", len(slc.components), " counted:", slc.counted)
print("  graded dim:  ", graded_dimension(session, (0, 2, -3)), "(agrees here)")

# the canonical disagreement: a nonempty region at a degree where no
# generator is active, so the graded dimension is 0
maximal = parse_ideal("x,y,z")
alpha = (-1, -1, 0)
print("\nmaximal ideal at degree (-1,-1,0):")
print("  region count:", region_component_count(maximal, alpha))
print("  graded dim:  ", graded_dimension(maximal, alpha))

# tally agreement over the whole support box of the square example
square = parse_ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4")
box = alpha_support_box(square)
agree = differ = 0
for a in product(*(range(lo, hi + 1) for lo, hi in box)):
    if region_component_count(square, a) == graded_dimension(square, a):
        agree += 1
    else:
        differ += 1
print(f"\n(x,y,z^2)^2 over its support box: {agree} degrees agree, {differ} differ")
print("T(I) from graded dims:",
      sum(graded_dimension(square, a)
          for a in product(*(range(lo, hi + 1) for lo, hi in box))))

print("\nfirst recorded discrepancies (colength <= 8):")
for record in islice(iter_discrepancies(max_colength=8), 3):
    print("  ", record)
