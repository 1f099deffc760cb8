"""Exact multivariate polynomial arithmetic over QQ and prime fields.

Polynomials are sparse dicts mapping exponent tuples to coefficients.
Coefficients are `fractions.Fraction` in characteristic 0 and Python ints
in the range [0, p) in characteristic p.  A `RingCtx` fixes the variable
names, the coefficient field, the monomial order and a bigrading, and is
shared by every polynomial of the ring.

Supported orders: graded reverse lexicographic, lexicographic, and block
orders (grevlex inside each block, blocks compared left to right), which
is what every elimination step in the package runs on.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

MAX_PRIME = 2**31 - 1
DEFAULT_PRIME = 32003


class RingError(ValueError):
    """Malformed ring data: bad order, bad coefficient, parse failure."""


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means QQ, p means GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p > MAX_PRIME:
            raise RingError("prime %d exceeds the machine word bound %d" % (p, MAX_PRIME))
        if not _is_prime(p):
            raise RingError("characteristic %d is not prime" % p)

    def norm(self, c):
        """Coerce ints, Fractions and field elements to canonical form."""
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise RingError("denominator of %s vanishes mod %d" % (c, p))
                return (c.numerator * pow(c.denominator, -1, p)) % p
            return int(c) % p
        if isinstance(c, Fraction):
            return c
        return Fraction(c)

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a, b):
        p = self.characteristic
        return (a * b) % p if p else a * b

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        p = self.characteristic
        return pow(a, e, p) if p else a**e

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)


def _grevlex_key(exps):
    # later variables weigh against a monomial: ties broken by the last
    # coordinate in which the exponents differ, smaller exponent wins
    return (sum(exps),) + tuple(-e for e in reversed(exps))


def _normalize_order(order, n):
    if order in ("grevlex", "lex"):
        return order
    if isinstance(order, tuple) and len(order) == 2 and order[0] == "block":
        k = order[1]
        if not 0 < k < n:
            raise RingError("block size %r out of range for %d variables" % (k, n))
        return ("blocks", (k, n - k))
    if isinstance(order, tuple) and len(order) == 2 and order[0] == "blocks":
        sizes = tuple(order[1])
        if any(s <= 0 for s in sizes) or sum(sizes) != n:
            raise RingError("block sizes %r do not partition %d variables" % (sizes, n))
        return ("blocks", sizes)
    raise RingError("unknown monomial order %r" % (order,))


@dataclass(frozen=True)
class RingCtx:
    """A polynomial ring: names, field, monomial order, bigrading.

    `weights` assigns each variable a bidegree pair; the default (1, 0)
    gives the standard grading.  Auxiliary variables added for blowup
    computations carry their own pairs so that homogeneity can be checked
    in every intermediate ring.  The trailing `n_params` variables are
    deformation parameters (weight (0, 0)) rather than coordinates.
    """

    var_names: tuple
    field: FieldSpec = field(default_factory=FieldSpec)
    order: object = "grevlex"
    weights: tuple = None
    n_params: int = 0

    def __post_init__(self):
        names = tuple(self.var_names)
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names in %r" % (names,))
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                raise RingError("bad variable name %r" % nm)
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "order", _normalize_order(self.order, len(names)))
        if self.weights is None:
            w = tuple((1, 0) for _ in names[: len(names) - self.n_params])
            w += tuple((0, 0) for _ in range(self.n_params))
            object.__setattr__(self, "weights", w)
        else:
            w = tuple(tuple(p) for p in self.weights)
            if len(w) != len(names):
                raise RingError("weight count does not match variable count")
            object.__setattr__(self, "weights", w)
        object.__setattr__(self, "_key_cache", {})
        object.__setattr__(self, "_negkey_cache", {})

    @property
    def nvars(self):
        return len(self.var_names)

    @property
    def zero_mon(self):
        return (0,) * self.nvars

    def index(self, name):
        try:
            return self.var_names.index(name)
        except ValueError:
            raise RingError("unknown variable %r" % name) from None

    def key(self, mon):
        """Sort key of a monomial; larger key means larger monomial."""
        k = self._key_cache.get(mon)
        if k is None:
            order = self.order
            if order == "grevlex":
                k = _grevlex_key(mon)
            elif order == "lex":
                k = mon
            else:
                k = ()
                i = 0
                for size in order[1]:
                    k += _grevlex_key(mon[i : i + size])
                    i += size
            self._key_cache[mon] = k
        return k

    def negkey(self, mon):
        """Componentwise negation of key(mon); min-heap becomes max-heap."""
        k = self._negkey_cache.get(mon)
        if k is None:
            k = tuple(-v for v in self.key(mon))
            self._negkey_cache[mon] = k
        return k

    def bidegree_of_mon(self, mon):
        a = b = 0
        for e, (wa, wb) in zip(mon, self.weights):
            a += e * wa
            b += e * wb
        return (a, b)


def monomial_compare(a, b, ctx):
    """Compare exponent tuples under the active order: -1, 0 or 1."""
    ka, kb = ctx.key(a), ctx.key(b)
    return (ka > kb) - (ka < kb)


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def monomial_div(a, b):
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)

def monomial_divides(b, a):
    return all(x <= y for x, y in zip(b, a))

def monomial_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomials_of_degree(nvars, d):
    """All exponent tuples in `nvars` variables of total degree d."""
    if d < 0:
        return
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


class Poly:
    """Immutable sparse polynomial attached to a RingCtx."""

    __slots__ = ("ctx", "terms", "_sorted")

    def __init__(self, ctx, terms, _clean=False):
        self.ctx = ctx
        if _clean:
            self.terms = terms
        else:
            f = ctx.field
            clean = {}
            for m, c in terms.items():
                c = f.norm(c)
                if c:
                    clean[tuple(m)] = c
            self.terms = clean
        self._sorted = None

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {}, _clean=True)

    @classmethod
    def constant(cls, ctx, c):
        c = ctx.field.norm(c)
        if not c:
            return cls.zero(ctx)
        return cls(ctx, {ctx.zero_mon: c}, _clean=True)

    @classmethod
    def var(cls, ctx, i, e=1):
        mon = tuple(e if j == i else 0 for j in range(ctx.nvars))
        return cls(ctx, {mon: ctx.field.one}, _clean=True)

    @classmethod
    def from_mon(cls, ctx, mon, c=None):
        c = ctx.field.one if c is None else ctx.field.norm(c)
        if not c:
            return cls.zero(ctx)
        return cls(ctx, {tuple(mon): c}, _clean=True)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx.var_names, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms as (monomial, coeff) pairs, largest monomial first."""
        if self._sorted is None:
            key = self.ctx.key
            self._sorted = sorted(
                self.terms.items(), key=lambda t: key(t[0]), reverse=True
            )
        return self._sorted

    def lt(self):
        if not self.terms:
            raise ValueError("leading term of zero polynomial")
        return self.sorted_terms()[0]

    def lm(self):
        return self.lt()[0]

    def lc(self):
        return self.lt()[1]

    def __add__(self, other):
        self._check(other)
        f = self.ctx.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ctx, out, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.ctx.field
        return Poly(self.ctx, {m: f.neg(c) for m, c in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        f = self.ctx.field
        p = f.characteristic
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                c = c1 * c2
                prev = out.get(m)
                c = c if prev is None else prev + c
                if p:
                    c %= p
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        return Poly(self.ctx, out, _clean=True)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        f = self.ctx.field
        c = f.norm(c)
        if not c:
            return Poly.zero(self.ctx)
        return Poly(self.ctx, {m: f.mul(v, c) for m, v in self.terms.items()}, _clean=True)

    def mul_term(self, mon, c):
        f = self.ctx.field
        c = f.norm(c)
        if not c:
            return Poly.zero(self.ctx)
        return Poly(
            self.ctx,
            {
                tuple(x + y for x, y in zip(m, mon)): f.mul(v, c)
                for m, v in self.terms.items()
            },
            _clean=True,
        )

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ctx.field.inv(self.lc()))

    def pow(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.constant(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def raw_degree(self):
        """Maximum exponent sum over the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def bidegree(self):
        """Common bidegree of all terms, or None if not bihomogeneous."""
        deg = None
        for m in self.terms:
            d = self.ctx.bidegree_of_mon(m)
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def is_homogeneous(self):
        return not self.terms or self.bidegree() is not None

    def evaluate(self, values):
        """Evaluate at a point given as one field element per variable."""
        if len(values) != self.ctx.nvars:
            raise ValueError("point arity does not match ring")
        f = self.ctx.field
        vals = [f.norm(v) for v in values]
        total = f.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = f.mul(t, f.pow(v, e))
            total = f.add(total, t)
        return total

    def map_vars(self, new_ctx, index_map):
        """Renumber variables: old index i becomes index_map[i] in new_ctx.

        Entries equal to None assert the variable is absent from self.
        """
        out = {}
        f = new_ctx.field
        for m, c in self.terms.items():
            new = [0] * new_ctx.nvars
            for i, e in enumerate(m):
                if not e:
                    continue
                j = index_map[i]
                if j is None:
                    raise RingError(
                        "variable %s present but not mapped" % self.ctx.var_names[i]
                    )
                new[j] = e
            out[tuple(new)] = f.norm(c)
        return Poly(new_ctx, out)

    def substitute_tail(self, new_ctx, values):
        """Assign field values to the trailing variables, keep the rest.

        `new_ctx` must consist of the leading variables of self.ctx and
        `values` must cover the remaining trailing ones.
        """
        k = new_ctx.nvars
        if k + len(values) != self.ctx.nvars:
            raise RingError("substitution arity mismatch")
        f = new_ctx.field
        vals = [f.norm(v) for v in values]
        out = {}
        for m, c in self.terms.items():
            head, tail = m[:k], m[k:]
            t = f.norm(c)
            for v, e in zip(vals, tail):
                if e:
                    t = f.mul(t, f.pow(v, e))
            if not t:
                continue
            prev = out.get(head, f.zero)
            s = f.add(prev, t)
            if s:
                out[head] = s
            else:
                out.pop(head, None)
        return Poly(new_ctx, out, _clean=True)

    def _check(self, other):
        if self.ctx != other.ctx:
            raise RingError("polynomials from different rings")

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "Poly(%s)" % format_poly(self)


def poly_exact_div(f, g):
    """Exact quotient f / g; raises RingError when g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ctx = f.ctx
    fld = ctx.field
    gm, gc = g.lt()
    ginv = fld.inv(gc)
    rest = g.sorted_terms()[1:]
    work = dict(f.terms)
    quot = {}
    keyf = ctx.key
    while work:
        m = max(work, key=keyf)
        q = monomial_div(m, gm)
        if q is None:
            raise RingError("inexact polynomial division")
        c = fld.mul(work.pop(m), ginv)
        quot[q] = c
        for m2, c2 in rest:
            mm = monomial_mul(m2, q)
            s = fld.sub(work.get(mm, fld.zero), fld.mul(c2, c))
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return Poly(ctx, quot, _clean=True)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(/)|(\+)|(-))")


def parse_poly(text, ctx):
    """Parse a sum of terms `c*x^a*y^b` into a Poly.

    Accepted coefficients are integers and integer fractions; in finite
    characteristic fractions are resolved by modular inversion.
    """
    pos = 0
    n = len(text)
    tokens = []
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise RingError("parse error at %r" % text[pos : pos + 20])
        pos = m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        elif m.group(3):
            tokens.append(("pow", None))
        elif m.group(4):
            tokens.append(("mul", None))
        elif m.group(5):
            tokens.append(("slash", None))
        elif m.group(6):
            tokens.append(("plus", None))
        else:
            tokens.append(("minus", None))

    fld = ctx.field
    out = Poly.zero(ctx)
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    while i < len(tokens):
        sign = 1
        while peek() in ("plus", "minus"):
            if peek() == "minus":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise RingError("dangling sign in %r" % text)
        coeff = Fraction(sign)
        exps = [0] * ctx.nvars
        expect_factor = True
        while expect_factor:
            kind, val = tokens[i] if i < len(tokens) else (None, None)
            if kind == "int":
                i += 1
                num = val
                if peek() == "slash":
                    i += 1
                    if peek() != "int":
                        raise RingError("bad fraction in %r" % text)
                    den = tokens[i][1]
                    i += 1
                    if den == 0:
                        raise RingError("zero denominator in %r" % text)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif kind == "name":
                idx = ctx.index(val)
                i += 1
                e = 1
                if peek() == "pow":
                    i += 1
                    if peek() != "int":
                        raise RingError("bad exponent in %r" % text)
                    e = tokens[i][1]
                    i += 1
                exps[idx] += e
            else:
                raise RingError("expected a factor in %r" % text)
            if peek() == "mul":
                i += 1
                expect_factor = True
            else:
                expect_factor = False
        c = fld.norm(coeff)
        if c:
            out = out + Poly(ctx, {tuple(exps): c}, _clean=True)
    return out


def _format_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def format_poly(p):
    """Render terms in decreasing order; parse_poly round-trips the output."""
    if not p:
        return "0"
    fld = p.ctx.field
    parts = []
    for mon, c in p.sorted_terms():
        vars_part = []
        for name, e in zip(p.ctx.var_names, mon):
            if e == 1:
                vars_part.append(name)
            elif e > 1:
                vars_part.append("%s^%d" % (name, e))
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        body = "*".join(vars_part)
        if not vars_part or mag != fld.one:
            body = _format_coeff(mag) + ("*" + body if body else "")
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _order_token(order):
    if order == "grevlex":
        return "grevlex"
    if order == "lex":
        return "lex"
    return "elim:%d" % order[1][0]


def format_ring_header(ctx):
    coords = ctx.var_names[: ctx.nvars - ctx.n_params]
    head = "ring " + " ".join(coords)
    if ctx.n_params:
        head += " params " + " ".join(ctx.var_names[ctx.nvars - ctx.n_params :])
    head += " over %d" % ctx.field.characteristic
    head += " order " + _order_token(ctx.order)
    return head


def parse_ring_header(line):
    """Parse `ring x y z [params a b] over p [order grevlex|lex|elim:k]`."""
    toks = line.split()
    if not toks or toks[0] != "ring":
        raise RingError("ring header must start with 'ring': %r" % line)
    i = 1
    names = []
    while i < len(toks) and toks[i] not in ("over", "params"):
        names.append(toks[i])
        i += 1
    params = []
    if i < len(toks) and toks[i] == "params":
        i += 1
        while i < len(toks) and toks[i] != "over":
            params.append(toks[i])
            i += 1
    if i >= len(toks) or toks[i] != "over":
        raise RingError("missing 'over <char>' in ring header: %r" % line)
    i += 1
    if i >= len(toks):
        raise RingError("missing characteristic in ring header: %r" % line)
    try:
        char = int(toks[i])
    except ValueError:
        raise RingError("bad characteristic %r" % toks[i]) from None
    i += 1
    order = "grevlex"
    if i < len(toks):
        if toks[i] != "order" or i + 1 >= len(toks):
            raise RingError("trailing tokens in ring header: %r" % line)
        tok = toks[i + 1]
        if tok in ("grevlex", "lex"):
            order = tok
        elif tok.startswith("elim:"):
            order = ("block", int(tok.split(":", 1)[1]))
        else:
            raise RingError("unknown order token %r" % tok)
        i += 2
    if i != len(toks):
        raise RingError("trailing tokens in ring header: %r" % line)
    if not names:
        raise RingError("ring header declares no variables: %r" % line)
    return RingCtx(
        tuple(names) + tuple(params),
        FieldSpec(char),
        order,
        n_params=len(params),
    )


def fresh_names(base, count, taken):
    """`count` names starting from base0 that avoid the taken set."""
    prefix = base
    while any(("%s%d" % (prefix, i)) in taken for i in range(count)):
        prefix = "_" + prefix
    return tuple("%s%d" % (prefix, i) for i in range(count))
