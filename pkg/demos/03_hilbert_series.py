"""
Hilbert series, dimension, degree
=================================

The combinatorial engine: lead-term ideals feed a recursion on monomial
ideals, and the series numerator encodes dimension and degree.
"""

from reesdeg.groebner import ideal
from reesdeg.hilbert import (
    count_standard_monomials,
    dim_degree,
    hilbert_function,
    hilbert_numerator,
)
from reesdeg.ring import FieldSpec, RingCtx, parse_poly

# start purely combinatorial: I = (x^2, x*y) in k[x, y]
numer = hilbert_numerator([(2, 0), (1, 1)], 2)
print("numerator coefficients of (x^2, x*y):", numer)

# cross-check the series against brute-force monomial counting
for k in range(6):
    from_series = sum(
        c * max(0, k - j + 1) for j, c in enumerate(numer) if k - j >= 0
    )
    counted = count_standard_monomials([(2, 0), (1, 1)], 2, k)
    print("  HF(%d) = %d  (count says %d)" % (k, from_series, counted))

# now a genuine variety: the twisted cubic curve in P^3
ctx = RingCtx(("y0", "y1", "y2", "y3"), FieldSpec(0))
cubic = ideal(
    ctx,
    [
        parse_poly(t, ctx)
        for t in ("y2^2 - y1*y3", "y1*y2 - y0*y3", "y1^2 - y0*y2")
    ],
)
summary = dim_degree(cubic)
print("twisted cubic: dim %d, curve in P^%d of degree %d" % (
    summary.dim,
    3,
    summary.degree,
))
print("Hilbert function 3k+1:", [hilbert_function(cubic, k) for k in range(5)])
