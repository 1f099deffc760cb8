"""Fitting ideals of a presentation matrix and the height conditions
G_m and F_m built on them.

For a module presented by an (r+1) x c matrix M, Fitt_i is generated by
the minors of size (rows - i): the unit ideal once the size drops to
zero or below, the zero ideal once it exceeds the column count.  G_m
asks ht Fitt_i > i for every i < m (m may be infinity, meaning every
i below the number of variables); F_m asks ht Fitt_i >= m + i for every
i >= 1.  Certificates record one row per index so a failure names the
offending minor size.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .groebner import IdealHandle
from .hilbert import dim_degree
from .ring import Poly, RingError, poly_exact_div

BAREISS_THRESHOLD = 5


@dataclass(frozen=True)
class PresentationMatrix:
    """Matrix of forms over a fixed ring, stored row major."""

    ctx: object
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or not rows[0]:
            raise RingError("presentation matrix must be nonempty")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise RingError("ragged presentation matrix")
            for e in row:
                if not isinstance(e, Poly) or e.ctx != self.ctx:
                    raise RingError("matrix entry from a different ring")
        object.__setattr__(self, "entries", rows)

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0])

    def submatrix(self, rows, cols):
        return [[self.entries[i][j] for j in cols] for i in rows]


def det_cofactor(rows):
    """Cofactor expansion along the first column, for small matrices."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    ctx = rows[0][0].ctx
    total = Poly.zero(ctx)
    for i in range(n):
        head = rows[i][0]
        if not head:
            continue
        minor = [r[1:] for k, r in enumerate(rows) if k != i]
        term = head * det_cofactor(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


def det_bareiss(rows):
    """Fraction-free elimination; every division is exact."""
    n = len(rows)
    ctx = rows[0][0].ctx
    a = [list(r) for r in rows]
    sign = 1
    prev = Poly.constant(ctx, 1)
    for k in range(n - 1):
        if not a[k][k]:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot_row is None:
                return Poly.zero(ctx)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = poly_exact_div(num, prev)
            a[i][k] = Poly.zero(ctx)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant(rows):
    rows = [list(r) for r in rows]
    if not rows or len(rows) != len(rows[0]):
        raise RingError("determinant of a non-square matrix")
    if len(rows) < BAREISS_THRESHOLD:
        return det_cofactor(rows)
    return det_bareiss(rows)


def minors(M, size):
    """All size x size minors as polynomials (possibly with repeats)."""
    out = []
    for rows in combinations(range(M.nrows), size):
        for cols in combinations(range(M.ncols), size):
            out.append(determinant(M.submatrix(rows, cols)))
    return out


def fitting_ideal(M, i):
    """Fitt_i of the cokernel: ideal of minors of size (nrows - i)."""
    size = M.nrows - i
    if size <= 0:
        return IdealHandle(M.ctx, [Poly.constant(M.ctx, 1)])
    if size > M.ncols or size > M.nrows:
        return IdealHandle(M.ctx, [])
    return IdealHandle(M.ctx, minors(M, size))


def height(I, budget=None):
    """Codimension of a homogeneous ideal: nvars - dim, inf for the unit
    ideal, 0 for the zero ideal."""
    summ = dim_degree(I, budget=budget)
    if summ.dim is None:
        return math.inf
    return I.ctx.nvars - summ.dim


@dataclass(frozen=True)
class ConditionCertificate:
    """Verdict plus one (index, minor size, height, threshold, ok) row
    per tested Fitting ideal."""

    condition: str
    verdict: bool
    table: tuple


def check_Gm(M, m, budget=None):
    """G_m: ht Fitt_i > i for all 1 <= i < m (m = inf tests every index
    below the variable count)."""
    if m != math.inf and (not isinstance(m, int) or m < 1):
        raise RingError("G_m level must be a positive integer or inf")
    top = M.ctx.nvars if m == math.inf else m
    rows = []
    ok_all = True
    for i in range(1, top):
        ht = height(fitting_ideal(M, i), budget=budget)
        ok = ht > i
        ok_all = ok_all and ok
        rows.append((i, M.nrows - i, ht, i, ok))
    return ConditionCertificate("G_%s" % ("inf" if m == math.inf else m), ok_all, tuple(rows))


def check_Fm(M, m, budget=None):
    """F_m: ht Fitt_i >= m + i for all i >= 1 with Fitt_i proper."""
    if not isinstance(m, int) or m < 0:
        raise RingError("F_m level must be a nonnegative integer")
    rows = []
    ok_all = True
    for i in range(1, M.nrows):
        ht = height(fitting_ideal(M, i), budget=budget)
        ok = ht >= m + i
        ok_all = ok_all and ok
        rows.append((i, M.nrows - i, ht, m + i, ok))
    return ConditionCertificate("F_%d" % m, ok_all, tuple(rows))


def serialize_matrix(M):
    from .ring import format_poly, format_ring_header

    lines = [format_ring_header(M.ctx), "matrix %d x %d" % (M.nrows, M.ncols)]
    for row in M.entries:
        lines.append(", ".join(format_poly(e) for e in row))
    return "\n".join(lines) + "\n"


def parse_matrix_file(text):
    """Ring header, `matrix r x c`, then one comma-separated row per line."""
    from .ring import parse_poly, parse_ring_header

    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise RingError("matrix file needs a header and a shape line")
    ctx = parse_ring_header(lines[0])
    shape = lines[1].split()
    if len(shape) != 4 or shape[0] != "matrix" or shape[2] != "x":
        raise RingError("bad shape line %r" % lines[1])
    r, c = int(shape[1]), int(shape[3])
    if len(lines) != 2 + r:
        raise RingError("expected %d matrix rows, found %d" % (r, len(lines) - 2))
    rows = []
    for ln in lines[2:]:
        row = [parse_poly(part, ctx) for part in ln.split(",")]
        if len(row) != c:
            raise RingError("row %r does not have %d entries" % (ln, c))
        rows.append(row)
    return PresentationMatrix(ctx, rows)
