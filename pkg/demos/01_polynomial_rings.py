"""
Exact polynomial arithmetic in graded rings
===========================================

Everything downstream (bases, blowups, degree counts) runs on the Poly
type shown here: sparse dicts mapping exponent tuples to exact field
elements, either rationals or integers mod a prime.
"""

from reesdeg.ring import FieldSpec, Poly, RingCtx, format_poly, parse_poly

# a ring is a context object: variable names, coefficient field, order
ctx = RingCtx(("x0", "x1", "x2"), FieldSpec(0))
f = parse_poly("x0^2 - 2*x0*x1 + x1^2", ctx)
g = parse_poly("x0 - x1", ctx)

print("f       =", f)
print("g^2     =", g * g)
print("f == g^2:", f == g * g)

# division is exact or it is an error; no floating point anywhere
from reesdeg.ring import poly_exact_div

print("f / g   =", poly_exact_div(f, g))

# the same expressions over F_32003; coefficients normalize into [0, p)
ctxp = RingCtx(("x0", "x1", "x2"), FieldSpec(32003))
h = parse_poly("-x0 - 16001*x1", ctxp)
print("mod p   =", format_poly(h))

# monomial orders are part of the ring context.  grevlex ranks the six
# degree-2 monomials in three variables like so:
from reesdeg.ring import monomials_of_degree

ranked = sorted(monomials_of_degree(3, 2), key=ctx.key, reverse=True)
print("grevlex degree-2 ranking:")
for mon in ranked:
    print("   ", format_poly(Poly.from_mon(ctx, mon)))

# lex instead compares variables left to right, ignoring total degree
lex = RingCtx(("x0", "x1", "x2"), FieldSpec(0), order="lex")
print("lex: x0 beats x1^5:", lex.key((1, 0, 0)) > lex.key((0, 5, 0)))

# evaluation plugs in field elements
print("f at (3, 1):", f.evaluate([3, 1, 0]))
