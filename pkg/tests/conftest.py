import random

from reesdeg.ring import FieldSpec, Poly, RingCtx, monomials_of_degree

# filled by tests/test_acceptance.py; one line per acceptance criterion
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)


def rand_coeff(ctx, rng, nonzero=False):
    p = ctx.field.characteristic
    if p:
        return rng.randrange(1, p) if nonzero else rng.randrange(p)
    lo = 1 if nonzero else -9
    return rng.randint(lo, 9)


def random_poly(ctx, rng, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mon = tuple(rng.randint(0, max_deg) for _ in range(ctx.nvars))
        terms[mon] = rand_coeff(ctx, rng)
    return Poly(ctx, terms)


def random_form(ctx, rng, deg, density=0.7):
    """Random homogeneous polynomial of exact degree deg (possibly zero)."""
    terms = {}
    for mon in monomials_of_degree(ctx.nvars, deg):
        if rng.random() < density:
            terms[mon] = rand_coeff(ctx, rng)
    return Poly(ctx, terms)


def nonzero_random_form(ctx, rng, deg, density=0.7):
    while True:
        f = random_form(ctx, rng, deg, density)
        if f:
            return f


def small_ctx(rng, chars=(0, 32003, 7), nmin=2, nmax=3):
    n = rng.randint(nmin, nmax)
    names = tuple("x%d" % i for i in range(n))
    return RingCtx(names, FieldSpec(rng.choice(chars)))
