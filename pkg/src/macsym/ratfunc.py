"""Exact arithmetic in Q(q, t).

PolyQT is a sparse polynomial in Z[q, t] stored as ``{(i, j): c}`` for the
monomial ``c q^i t^j``.  RatQT is a reduced fraction of two of them.  The
canonical form (coprime over Z[q, t], denominator with positive leading
coefficient in graded-lex order with q > t) makes equality representational.

GCDs use a heuristic evaluation method (big-integer gcd followed by
xi-adic reconstruction, every candidate verified by exact division) and fall
back to a primitive pseudo-remainder sequence in q over Z[t].
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as igcd, isqrt

# --------------------------------------------------------------------------
# dense univariate helpers over Z; index = degree


def _u_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _u_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _u_content(f):
    g = 0
    for c in f:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def _u_divexact(f, g):
    """Exact quotient f/g over Z or None."""
    if not g:
        raise ZeroDivisionError
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return [] if not f else None
    r = list(f)
    lc = g[-1]
    qt = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = r[k + dg]
        if c:
            qc, rem = divmod(c, lc)
            if rem:
                return None
            qt[k] = qc
            for i, gi in enumerate(g):
                r[k + i] -= qc * gi
    if any(r[:dg]):
        return None
    return qt


def _u_interpolate(h, x):
    """Symmetric x-adic digits of the integer h, lowest first."""
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return out


def _u_prem(f, g):
    """Pseudo-remainder of f by g over Z."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        c = r[-1]
        k = len(r) - 1 - dg
        r = [lc * a for a in r]
        for i, gi in enumerate(g):
            r[k + i] -= c * gi
        r.pop()
        _u_trim(r)
    return r


def _u_primitive(f):
    c = _u_content(f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def _u_gcd_prs(f, g):
    """Primitive-PRS gcd of primitive polynomials with positive LC."""
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _u_prem(f, g)
        f, g = g, (_u_primitive(r) if r else [])
    return _u_primitive(f)


def _u_gcd(f, g):
    """gcd over Z[x] of dense integer polynomials (both nonzero)."""
    cf, cg = _u_content(f), _u_content(g)
    c = igcd(cf, cg)
    f = [a // cf for a in f]
    g = [a // cg for a in g]
    if f[-1] < 0:
        f = [-a for a in f]
    if g[-1] < 0:
        g = [-a for a in g]
    if len(f) == 1 or len(g) == 1:
        return [c]
    h = _u_heu_gcd(f, g)
    if h is None:
        h = _u_gcd_prs(f, g)
    return [c * a for a in h]


def _u_heu_gcd(f, g):
    # x >= 2 min(|f|, |g|) + 2 makes the divisibility checks below a proof;
    # smaller starting points can accept a constant candidate wrongly
    fn = max(abs(a) for a in f)
    gn = max(abs(a) for a in g)
    x = 2 * min(fn, gn) + 29
    for _ in range(6):
        ff, gg = _u_eval(f, x), _u_eval(g, x)
        if ff and gg:
            hv = igcd(ff, gg)
            h = _u_interpolate(hv, x)
            if h:
                h = _u_primitive(h)
                if _u_divexact(f, h) is not None and _u_divexact(g, h) is not None:
                    return h
            cff = _u_interpolate(ff // hv, x)
            if cff:
                h = _u_divexact(f, cff)
                if h and _u_divexact(g, h) is not None:
                    return _u_primitive(h)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


# --------------------------------------------------------------------------
# polynomials


def _glex(m):
    return (m[0] + m[1], m[0], m[1])


class PolyQT:
    """Sparse polynomial in Z[q, t]; treat instances as immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self.terms = {k: c for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> PolyQT:
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> PolyQT:
        return cls._raw({(i, j): c} if c else {})

    # -- queries
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyQT.const(other)
        return isinstance(other, PolyQT) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def const_value(self) -> int:
        return self.terms.get((0, 0), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def deg_q(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_t(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def leading(self):
        m = max(self.terms, key=_glex)
        return m, self.terms[m]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = igcd(g, c)
            if g == 1:
                break
        return g

    def min_exponents(self):
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    # -- arithmetic
    def __neg__(self):
        return PolyQT._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = PolyQT.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return PolyQT._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = PolyQT.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return PolyQT()
            return PolyQT._raw({k: c * other for k, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((bi, bj), bc), = b.items()
            return PolyQT._raw({(i + bi, j + bj): c * bc for (i, j), c in a.items()})
        out = {}
        get = out.get
        for (i1, j1), c1 in b.items():
            for (i2, j2), c2 in a.items():
                k = (i1 + i2, j1 + j2)
                out[k] = get(k, 0) + c1 * c2
        return PolyQT._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyQT.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_down(self, c: int) -> PolyQT:
        return PolyQT._raw({k: v // c for k, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> PolyQT:
        return PolyQT._raw({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def divexact(self, other: PolyQT):
        """Exact quotient self/other in Z[q, t], or None if it does not divide."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return PolyQT()
        b = other.terms
        if len(b) == 1:
            ((bi, bj), bc), = b.items()
            out = {}
            for (i, j), c in self.terms.items():
                if i < bi or j < bj or c % bc:
                    return None
                out[(i - bi, j - bj)] = c // bc
            return PolyQT._raw(out)
        (li, lj), lc = other.leading()
        rem = dict(self.terms)
        heap = [(-(i + j), -i, -j) for (i, j) in rem]
        heapq.heapify(heap)
        quot = {}
        while rem:
            while True:
                d, ni, nj = heapq.heappop(heap)
                k = (-ni, -nj)
                if k in rem:
                    break
            c = rem[k]
            i, j = k
            if i < li or j < lj or c % lc:
                return None
            qi, qj, qc = i - li, j - lj, c // lc
            quot[(qi, qj)] = qc
            for (bi, bj), bc in b.items():
                kk = (bi + qi, bj + qj)
                v = rem.get(kk, 0) - qc * bc
                if v:
                    if kk not in rem:
                        heapq.heappush(heap, (-(kk[0] + kk[1]), -kk[0], -kk[1]))
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return PolyQT._raw(quot)

    # -- substitution and evaluation
    def subst_monomial(self, qmap, tmap) -> PolyQT:
        """Substitute q -> q^qmap[0] t^qmap[1], t -> q^tmap[0] t^tmap[1]."""
        a, b = qmap
        c, d = tmap
        out = {}
        for (i, j), v in self.terms.items():
            k = (a * i + c * j, b * i + d * j)
            out[k] = out.get(k, 0) + v
        return PolyQT._raw({k: v for k, v in out.items() if v})

    def eval_q(self, x):
        """Evaluate at q = x for a t-free polynomial."""
        return sum(c * x**i for (i, _), c in self.terms.items())

    def as_dense_q(self):
        """Dense coefficient list in q (t-free polynomials only)."""
        f = [0] * (self.deg_q() + 1)
        for (i, _), c in self.terms.items():
            f[i] = c
        return f

    def as_dense_t(self):
        f = [0] * (self.deg_t() + 1)
        for (_, j), c in self.terms.items():
            f[j] = c
        return f

    # -- display
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _glex(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(s for s in (_var("q", i), _var("t", j)) if s)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(pieces)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"PolyQT({self})"


def _var(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


# --------------------------------------------------------------------------
# gcd in Z[q, t]


def _swap(p: PolyQT) -> PolyQT:
    return PolyQT._raw({(j, i): c for (i, j), c in p.terms.items()})


def _uses(p: PolyQT):
    uq = any(i for i, _ in p.terms)
    ut = any(j for _, j in p.terms)
    return uq, ut


def _from_dense_q(f) -> PolyQT:
    return PolyQT._raw({(i, 0): c for i, c in enumerate(f) if c})


def poly_gcd(a: PolyQT, b: PolyQT) -> PolyQT:
    """Greatest common divisor in Z[q, t], normalized with positive leading coefficient."""
    if not a:
        return _normalize_sign(b) if b else PolyQT()
    if not b:
        return _normalize_sign(a)
    c = igcd(a.content(), b.content())
    ai, aj = a.min_exponents()
    bi, bj = b.min_exponents()
    mono = (min(ai, bi), min(aj, bj))
    if a.is_monomial() or b.is_monomial():
        return PolyQT.monomial(mono[0], mono[1], c)
    ca, cb = a.content(), b.content()
    a = PolyQT._raw({(i - ai, j - aj): v // ca for (i, j), v in a.terms.items()})
    b = PolyQT._raw({(i - bi, j - bj): v // cb for (i, j), v in b.terms.items()})
    g = _primitive_gcd(a, b)
    return g.shift(*mono) * c


def _primitive_gcd(a: PolyQT, b: PolyQT) -> PolyQT:
    """gcd of polynomials with unit integer content and no monomial factor."""
    if a.is_const() or b.is_const():
        return PolyQT.const(1)
    aq, at = _uses(a)
    bq, bt = _uses(b)
    if not at and not bt:
        return _from_dense_q(_u_gcd(a.as_dense_q(), b.as_dense_q()))
    if not aq and not bq:
        return _swap(_from_dense_q(_u_gcd(a.as_dense_t(), b.as_dense_t())))
    if (aq and not at and bt and not bq) or (at and not aq and bq and not bt):
        return PolyQT.const(1)
    if a == b:
        return _normalize_sign(a)
    g = _bi_heu_gcd(a, b)
    if g is None:
        g = _bi_gcd_prs(a, b)
    return _normalize_sign(g)


def _normalize_sign(p: PolyQT) -> PolyQT:
    return -p if p.leading()[1] < 0 else p


def _bi_as_q_of_t(p: PolyQT):
    """Dense list over q-degree of dense t-coefficient lists."""
    out = [[] for _ in range(p.deg_q() + 1)]
    for (i, j), c in p.terms.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = c
    return out


def _bi_from_q_of_t(rows) -> PolyQT:
    out = {}
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            if c:
                out[(i, j)] = c
    return PolyQT._raw(out)


def _bi_heu_gcd(a: PolyQT, b: PolyQT):
    an = max(abs(c) for c in a.terms.values())
    bn = max(abs(c) for c in b.terms.values())
    x = 2 * min(an, bn) + 29
    ar, br = _bi_as_q_of_t(a), _bi_as_q_of_t(b)
    for _ in range(6):
        fa = _u_trim([_u_eval(row, x) for row in ar])
        fb = _u_trim([_u_eval(row, x) for row in br])
        if len(fa) == len(ar) and len(fb) == len(br):
            h = _u_gcd(fa, fb)
            cand = _bi_interpolate(h, x)
            if cand is not None and cand:
                c = cand.content()
                cand = cand.scale_down(c)
                if a.divexact(cand) is not None and b.divexact(cand) is not None:
                    return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _bi_interpolate(h, x):
    rows = [_u_interpolate(c, x) for c in h]
    return _bi_from_q_of_t(rows)


def _t_gcd(f, g):
    if not f:
        return g
    if not g:
        return f
    return _u_gcd(f, g)


def _bi_gcd_prs(a: PolyQT, b: PolyQT) -> PolyQT:
    """Primitive pseudo-remainder sequence in q over Z[t]."""
    ar, br = _bi_as_q_of_t(a), _bi_as_q_of_t(b)
    ca, cb = _rows_content(ar), _rows_content(br)
    cont = _t_gcd(ca, cb)
    f = _rows_primitive(ar, ca)
    g = _rows_primitive(br, cb)
    if len(f) < len(g):
        f, g = g, f
    while True:
        if len(g) == 1:
            res = [[1]]
            break
        r = _rows_prem(f, g)
        if not r:
            res = g
            break
        f, g = g, _rows_primitive(r, _rows_content(r))
    return _bi_from_q_of_t(res) * _swap(_from_dense_q(cont))


def _rows_content(rows):
    g = []
    for row in rows:
        if any(row):
            g = _t_gcd(g, _u_trim(list(row)))
            if len(g) == 1:
                return [1] if g[0] else g
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


def _rows_primitive(rows, cont):
    out = []
    for row in rows:
        row = _u_trim(list(row))
        out.append(_u_divexact(row, cont) if row else [])
    return out


def _t_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _u_trim(out)


def _t_sub(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]
    return _u_trim(out)


def _rows_prem(f, g):
    r = [list(row) for row in f]
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        c = r[-1]
        k = len(r) - 1 - dg
        r = [_t_mul(lc, row) for row in r]
        for i, gi in enumerate(g):
            r[k + i] = _t_sub(r[k + i], _t_mul(c, gi))
        r.pop()
        while r and not r[-1]:
            r.pop()
    return r


# --------------------------------------------------------------------------
# rational functions

_ONE = PolyQT.const(1)


class RatQT:
    """Reduced fraction num/den of PolyQT; treat instances as immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)):
            x = Fraction(num) / Fraction(den)
            num, den = x.numerator, x.denominator
        if isinstance(num, int):
            num = PolyQT.const(num)
        if isinstance(den, int):
            den = PolyQT.const(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den = num, den
        r._hash = None
        return r

    @classmethod
    def from_fraction(cls, x) -> RatQT:
        x = Fraction(x)
        return cls._raw(PolyQT.const(x.numerator), PolyQT.const(x.denominator))

    @classmethod
    def monomial(cls, i: int, j: int = 0, c=1) -> RatQT:
        """c q^i t^j, negative exponents allowed."""
        c = Fraction(c)
        num = PolyQT.monomial(max(i, 0), max(j, 0), c.numerator)
        den = PolyQT.monomial(max(-i, 0), max(-j, 0), c.denominator)
        return cls._raw(num, den) if c else cls._raw(PolyQT(), _ONE)

    # -- queries
    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_const() and self.den.const_value() == 1

    def is_t_free(self) -> bool:
        return all(j == 0 for _, j in self.num.terms) and all(j == 0 for _, j in self.den.terms)

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return Fraction(self.num.const_value(), self.den.const_value())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatQT.from_fraction(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatQT):
            return x
        if isinstance(x, (int, Fraction)):
            return RatQT.from_fraction(x)
        if isinstance(x, PolyQT):
            return RatQT._raw(x, _ONE)
        return NotImplemented

    def __neg__(self):
        return RatQT._raw(-self.num, self.den)

    def __add__(self, other):
        other = RatQT._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatQT._from_unreduced(a + c, b)
        if b.is_const() and d.is_const():
            bb, dd = b.const_value(), d.const_value()
            g = igcd(bb, dd)
            num = a * (dd // g) + c * (bb // g)
            return RatQT._from_unreduced(num, PolyQT.const(bb // g * dd))
        g = poly_gcd(b, d)
        if g.is_const() and g.const_value() == 1:
            return RatQT._canon(a * d + c * b, b * d)
        b1 = b.divexact(g)
        d1 = d.divexact(g)
        num = a * d1 + c * b1
        if not num:
            return RatQT._raw(PolyQT(), _ONE)
        # gcd(num, b*d1) divides g
        h = poly_gcd(num, g)
        if not (h.is_const() and h.const_value() == 1):
            num = num.divexact(h)
            g = g.divexact(h)
        return RatQT._canon(num, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other):
        other = RatQT._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return RatQT._raw(PolyQT(), _ONE)
            return self * RatQT._raw(PolyQT.const(other), _ONE)
        other = RatQT._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatQT._raw(PolyQT(), _ONE)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not _is_one(g1):
            a, d = a.divexact(g1), d.divexact(g1)
        if not _is_one(g2):
            c, b = c.divexact(g2), b.divexact(g2)
        return RatQT._canon(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RatQT:
        if not self.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatQT._canon(self.den, self.num)

    def __truediv__(self, other):
        other = RatQT._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatQT._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatQT._raw(self.num**n, self.den**n)

    @classmethod
    def _from_unreduced(cls, num, den):
        if not num:
            return cls._raw(PolyQT(), _ONE)
        g = poly_gcd(num, den)
        if not _is_one(g):
            num, den = num.divexact(g), den.divexact(g)
        return cls._canon(num, den)

    @classmethod
    def _canon(cls, num, den):
        """Fix the sign of an already coprime pair."""
        if den.leading()[1] < 0:
            num, den = -num, -den
        return cls._raw(num, den)

    # -- substitution
    def subst_monomial(self, qmap, tmap) -> RatQT:
        """q -> q^a t^b, t -> q^c t^d with integer (possibly negative) exponents."""
        num = _subst_laurent(self.num, qmap, tmap)
        den = _subst_laurent(self.den, qmap, tmap)
        (na, ni, nj), (da, di, dj) = num, den
        i, j = ni - di, nj - dj
        # the net monomial shift goes to whichever side keeps exponents >= 0
        num_p = na.shift(max(i, 0), max(j, 0))
        den_p = da.shift(max(-i, 0), max(-j, 0))
        return RatQT._from_unreduced(num_p, den_p)

    def subst(self, qval, tval) -> RatQT:
        """General substitution q -> qval, t -> tval (RatQT values)."""
        return _poly_subst(self.num, qval, tval) / _poly_subst(self.den, qval, tval)

    def swap_qt(self) -> RatQT:
        return RatQT._canon(_swap(self.num), _swap(self.den))

    # -- display and serialization
    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatQT({self})"

    def to_json(self) -> dict:
        return {"num": _poly_json(self.num), "den": _poly_json(self.den)}

    @classmethod
    def from_json(cls, obj) -> RatQT:
        num = PolyQT({(i, j): c for c, i, j in obj["num"]})
        den = PolyQT({(i, j): c for c, i, j in obj["den"]})
        return cls(num, den)


def _is_one(p: PolyQT) -> bool:
    return len(p.terms) == 1 and p.terms.get((0, 0)) == 1


def _reduce(num: PolyQT, den: PolyQT):
    if not num:
        return PolyQT(), _ONE
    g = poly_gcd(num, den)
    if not _is_one(g):
        num, den = num.divexact(g), den.divexact(g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def _subst_laurent(p: PolyQT, qmap, tmap):
    a, b = qmap
    c, d = tmap
    out = {}
    for (i, j), v in p.terms.items():
        k = (a * i + c * j, b * i + d * j)
        out[k] = out.get(k, 0) + v
    out = {k: v for k, v in out.items() if v}
    if not out:
        return PolyQT(), 0, 0
    mi = min(i for i, _ in out)
    mj = min(j for _, j in out)
    return PolyQT._raw({(i - mi, j - mj): v for (i, j), v in out.items()}), mi, mj


def _poly_subst(p: PolyQT, qval: RatQT, tval: RatQT) -> RatQT:
    qpows, tpows = {}, {}
    acc = RatQT(0)
    for (i, j), c in p.terms.items():
        if i not in qpows:
            qpows[i] = qval**i
        if j not in tpows:
            tpows[j] = tval**j
        acc = acc + qpows[i] * tpows[j] * c
    return acc


def _poly_json(p: PolyQT):
    return [[c, i, j] for (i, j), c in sorted(p.terms.items())]


# --------------------------------------------------------------------------
# module-level operations

q = RatQT.monomial(1, 0)
t = RatQT.monomial(0, 1)
ONE = RatQT(1)
ZERO = RatQT(0)


def subst_t_q2(a: RatQT) -> RatQT:
    """t -> q^2."""
    return a.subst_monomial((1, 0), (2, 0))


def subst_q_q2(a: RatQT) -> RatQT:
    """q -> q^2 (t untouched)."""
    return a.subst_monomial((2, 0), (0, 1))


def subst_q_power(a: RatQT, k: int) -> RatQT:
    """q -> q^k, t -> t^k; the per-family rescaling q -> q_f."""
    return a.subst_monomial((k, 0), (0, k))


def eval_q(a: RatQT, q0) -> Fraction:
    """Exact value at q = q0 of a t-free rational function."""
    if not a.is_t_free():
        raise ValueError("bivariate: cannot evaluate a function of t at a numeric q")
    q0 = Fraction(q0)
    den = a.den.eval_q(q0)
    if den == 0:
        raise ZeroDivisionError(f"pole at q = {q0}")
    return Fraction(a.num.eval_q(q0)) / den


def divide_exact_by_power(a: RatQT, b: PolyQT, k: int) -> RatQT:
    """a / b^k, normalized."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    return a / RatQT._raw(b**k, _ONE)


def is_polynomial_with_nonneg_int_coeffs(a: RatQT) -> bool:
    """Membership of a t-free function in N[q]."""
    return a.is_polynomial() and a.is_t_free() and all(c >= 0 for c in a.num.terms.values())


def q_coefficients(a: RatQT) -> list:
    """Dense q-coefficients of a t-free polynomial, lowest degree first."""
    if not (a.is_polynomial() and a.is_t_free()):
        raise ValueError(f"not a polynomial in q: {a}")
    return a.num.as_dense_q() if a.num else [0]


def qpow(n: int) -> RatQT:
    return RatQT.monomial(n, 0)


def tpow(n: int) -> RatQT:
    return RatQT.monomial(0, n)


def as_ratqt(x) -> RatQT:
    if isinstance(x, RatQT):
        return x
    if isinstance(x, PolyQT):
        return RatQT(x)
    return RatQT.from_fraction(x)
