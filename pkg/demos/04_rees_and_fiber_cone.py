"""
Rees algebras, fiber cones, saturated fiber functions
=====================================================

The blowup of an ideal is presented by its Rees ideal: all relations
among the generators, bigraded in (x, y).  Setting x to zero leaves the
fiber cone, whose dimension is the analytic spread.
"""

from reesdeg.blowup import (
    analytic_spread,
    blowup_presentation,
    fiber_cone_ideal,
    rees_ideal,
    sfib_hilbert_function,
)
from reesdeg.groebner import groebner_basis
from reesdeg.ring import FieldSpec, RingCtx, parse_poly

ctx = RingCtx(("x0", "x1"), FieldSpec(0))
conic = [parse_poly(t, ctx) for t in ("x0^2", "x0*x1", "x1^2")]

R = rees_ideal(conic)
print("Rees ideal of (x0^2, x0*x1, x1^2):")
for g in groebner_basis(R):
    print("   ", g, "  bidegree", g.bidegree())

# the pure-y generator survives into the fiber cone; the image of the
# induced map P^1 -> P^2 is the conic it cuts out
F = fiber_cone_ideal(conic)
print("fiber cone:", [str(g) for g in groebner_basis(F)])
print("analytic spread:", analytic_spread(conic))

# one call bundles ambient ring, Rees, fiber, gr, and spread
pres = blowup_presentation(conic)
print("presentation: degree %d forms, spread %d" % (pres.degree, pres.spread))

# saturated fiber Hilbert function: for (x0^2, x1^2) it grows with
# slope 2, the product of map degree and image degree
squares = [parse_poly(t, ctx) for t in ("x0^2", "x1^2")]
values = [sfib_hilbert_function(squares, n) for n in range(6)]
print("saturated fiber HF of (x0^2, x1^2):", values)
