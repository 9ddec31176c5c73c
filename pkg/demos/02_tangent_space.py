#!/usr/bin/env python3
"""Tangent-space dimensions by two independent algorithms.

T(I) = dim Hom(I, R/I) is the tangent-space dimension of the Hilbert
scheme of points at the monomial ideal I.  A candidate homomorphism has
G*l coordinates (images of the G generators against the l standard
monomials); the pairwise syzygies strike out some of them ("zero
vectors"), and what survives is the tangent space.

For I = (x, y, z^2)^2 that reads 6*8 - 12 = 36.
"""

from boreltangent import (
    alpha_support_box,
    constraint_rank,
    graded_dimension,
    parse_ideal,
    tangent_dimension,
    tangent_dimension_oracle,
    verify_tangent,
)

ideal = parse_ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4")
report = tangent_dimension(ideal)
print(f"G = {report.g} generators, l = {report.l} standard monomials")
print(f"zero vectors: {report.zero_rank}")
print(f"T(I) = {report.g}*{report.l} - {report.zero_rank} = {report.total}")

# the trusted slow path: exact integer rank of the constraint matrix
print("matrix oracle:", tangent_dimension_oracle(ideal))
print("both at once: ", verify_tangent(ideal).total)

# Hom(I, R/I) is Z^3-graded; only degrees in a finite box can contribute
print("support box:  ", alpha_support_box(ideal))
print("graded pieces (first five):")
for alpha, dim in report.graded[:5]:
    print(f"  alpha={alpha}  dim={dim}")
print(f"  ... {len(report.graded)} nonzero degrees, total {report.total}")

# a single graded piece, on its own, for the second worked session example
session = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z")
print("session ideal T(I):", tangent_dimension(session).total,
      " zero vectors:", constraint_rank(session))
print("degree (0,2,-3) piece:", graded_dimension(session, (0, 2, -3)))
