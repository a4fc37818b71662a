"""Exact arithmetic: rational polynomials, quadratic surds and isolated real roots.

Nothing here touches floating point except the ``__float__`` conveniences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

Rational = Union[int, Fraction]


def _frac(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# quadratic surds a + b*sqrt(d)


def _squarefree_split(d: int) -> tuple[int, int]:
    """d = s^2 * r with r squarefree; returns (s, r)."""
    s, r, p = 1, d, 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, r


class QuadSurd:
    """The real number a + b*sqrt(d) with a, b rational and d a squarefree integer >= 2.

    d == 1 encodes a plain rational (b is then always 0).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rational = 0, b: Rational = 0, d: int = 1):
        a, b = _frac(a), _frac(b)
        if d < 0:
            raise ValueError("negative radicand")
        if d == 0:
            b, d = Fraction(0), 1
        s, r = _squarefree_split(d)
        b *= s
        if r == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            r = 1
        self.a, self.b, self.d = a, b, r

    @classmethod
    def sqrt(cls, q: Rational, coeff: Rational = 1) -> QuadSurd:
        """coeff * sqrt(q) for rational q >= 0."""
        q = _frac(q)
        if q < 0:
            raise ValueError("square root of a negative number")
        # sqrt(p/r) = sqrt(p*r)/r
        return cls(0, _frac(coeff) / q.denominator, q.numerator * q.denominator)

    @classmethod
    def coerce(cls, x) -> QuadSurd:
        if isinstance(x, QuadSurd):
            return x
        return cls(_frac(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _join(self, other: QuadSurd) -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise ValueError(f"surds in different fields: sqrt({self.d}) vs sqrt({other.d})")

    def __add__(self, other) -> QuadSurd:
        o = QuadSurd.coerce(other)
        return QuadSurd(self.a + o.a, self.b + o.b, self._join(o))

    __radd__ = __add__

    def __neg__(self) -> QuadSurd:
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other) -> QuadSurd:
        return self + (-QuadSurd.coerce(other))

    def __rsub__(self, other) -> QuadSurd:
        return QuadSurd.coerce(other) - self

    def __mul__(self, other) -> QuadSurd:
        o = QuadSurd.coerce(other)
        d = self._join(o)
        return QuadSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        return sa * _sign(self.a * self.a - self.b * self.b * self.d)

    def _cmp(self, other) -> int:
        return (self - QuadSurd.coerce(other)).sign()

    def __eq__(self, other) -> bool:
        try:
            o = QuadSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d**0.5

    def floor_bounds(self) -> tuple[Fraction, Fraction]:
        """Rational lo <= self <= hi with hi - lo small (for interval tests)."""
        if self.b == 0:
            return self.a, self.a
        scale = 10**30
        r = isqrt(self.d * scale * scale)
        lo_r, hi_r = Fraction(r, scale), Fraction(r + 1, scale)
        if self.b > 0:
            return self.a + self.b * lo_r, self.a + self.b * hi_r
        return self.a + self.b * hi_r, self.a + self.b * lo_r

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadSurd({self.a})"
        return f"QuadSurd({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        head = f"{self.a} + " if self.a else ""
        coef = "" if self.b == 1 else f"{self.b}*"
        return f"{head}{coef}sqrt({self.d})"


# ---------------------------------------------------------------------------
# polynomials


class RationalPoly:
    """Univariate polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational]):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> RationalPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c: Rational) -> RationalPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPoly([other])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> RationalPoly:
        o = _as_poly(other)
        k = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (k - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (k - len(o.coeffs))
        return RationalPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> RationalPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> RationalPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> RationalPoly:
        o = _as_poly(other)
        if self.is_zero() or o.is_zero():
            return RationalPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RationalPoly:
        out = RationalPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        while len(rem) - 1 >= dq and rem:
            shift = len(rem) - 1 - dq
            f = rem[-1] / lead
            quot[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return RationalPoly(quot), RationalPoly(rem)

    def __floordiv__(self, other: RationalPoly) -> RationalPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: RationalPoly) -> RationalPoly:
        return self.divmod(other)[1]

    def monic(self) -> RationalPoly:
        if self.is_zero():
            return self
        lead = self.leading
        return RationalPoly(c / lead for c in self.coeffs)

    def derivative(self) -> RationalPoly:
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        if isinstance(x, QuadSurd):
            acc = QuadSurd(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        v = self(x)
        return v.sign() if isinstance(v, QuadSurd) else _sign(v)

    def strip_x(self) -> tuple[int, RationalPoly]:
        """(k, q) with self = x^k * q and q(0) != 0."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k, RationalPoly(self.coeffs[k:])

    def squarefree(self) -> RationalPoly:
        if self.degree <= 0:
            return self.monic()
        return (self // poly_gcd(self, self.derivative())).monic()

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sgn = "-" if c < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if i == 1 else f"x^{i}")
            terms.append((sgn, body))
        first_sgn, first_body = terms[0]
        out = ("-" if first_sgn == "-" else "") + first_body
        for sgn, body in terms[1:]:
            out += f" {sgn} {body}"
        return out


def _as_poly(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    return RationalPoly([x])


def poly_gcd(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def sturm_sequence(p: RationalPoly) -> list[RationalPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _sign_changes_at(seq: list[RationalPoly], x) -> int:
    return _variations([q.sign_at(x) for q in seq])


def _sign_changes_at_inf(seq: list[RationalPoly], positive: bool) -> int:
    signs = []
    for q in seq:
        s = _sign(q.leading)
        if not positive and q.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_roots(p: RationalPoly, lo=None, hi=None) -> int:
    """Distinct real roots of p in (lo, hi]; None means -inf / +inf.

    ``lo`` and ``hi`` may be rationals or QuadSurds.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(p.squarefree())
    v_lo = _sign_changes_at_inf(seq, False) if lo is None else _sign_changes_at(seq, lo)
    v_hi = _sign_changes_at_inf(seq, True) if hi is None else _sign_changes_at(seq, hi)
    return v_lo - v_hi


def cauchy_bound(p: RationalPoly) -> Fraction:
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


# ---------------------------------------------------------------------------
# isolated real algebraic numbers


class AlgebraicReal:
    """A real root of a squarefree rational polynomial, isolated in [lo, hi].

    Either lo == hi (the root is that rational) or lo < root < hi with exactly
    one root of ``poly`` in the open interval and poly(lo), poly(hi) nonzero.
    """

    __slots__ = ("poly", "lo", "hi")

    def __init__(self, poly: RationalPoly, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = lo
        self.hi = hi

    @classmethod
    def largest_root(cls, p: RationalPoly, hint: tuple[Fraction, Fraction] | None = None) -> AlgebraicReal:
        sq = p.squarefree()
        if sq.degree < 1 or count_roots(sq) == 0:
            raise ValueError("polynomial has no real root")
        bound = cauchy_bound(sq)
        lo, hi = -bound - 1, bound + 1
        if hint is not None:
            a, b = hint
            if sq(b) != 0 and sq(a) != 0 and count_roots(sq, b, None) == 0 and count_roots(sq, a, b) == 1:
                lo, hi = a, b
        while count_roots(sq, lo, hi) > 1 or sq(lo) == 0 or sq(hi) == 0:
            mid = (lo + hi) / 2
            if sq(mid) == 0 and count_roots(sq, mid, None) == 0:
                return cls(sq, mid, mid)
            if count_roots(sq, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        if sq(hi) == 0:
            return cls(sq, hi, hi)
        return cls(sq, lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def refine(self) -> None:
        if self.is_exact:
            return
        mid = (self.lo + self.hi) / 2
        s_mid = self.poly.sign_at(mid)
        if s_mid == 0:
            self.lo = self.hi = mid
        elif s_mid == self.poly.sign_at(self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width: Fraction) -> None:
        while not self.is_exact and self.hi - self.lo > width:
            self.refine()

    def compare(self, t) -> int:
        """Sign of (self - t) for a rational or QuadSurd t."""
        t = QuadSurd.coerce(t)
        if self.is_exact:
            return (QuadSurd(self.lo) - t).sign()
        if t <= self.lo:
            return 1
        if t >= self.hi:
            return -1
        if self.poly.sign_at(t) == 0:
            return 0
        while True:
            self.refine()
            if self.is_exact:
                return (QuadSurd(self.lo) - t).sign()
            if t <= self.lo:
                return 1
            if t >= self.hi:
                return -1

    def compare_algebraic(self, other: AlgebraicReal) -> int:
        """Sign of (self - other)."""
        if other.is_exact:
            return self.compare(other.lo)
        if self.is_exact:
            return -other.compare(self.lo)
        common = poly_gcd(self.poly, other.poly)
        while True:
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
            if common.degree >= 1 and count_roots(common, lo, hi) >= 1 and common.sign_at(hi) != 0:
                # both isolating intervals contain the same common root
                return 0
            self.refine()
            other.refine()
            if self.is_exact:
                return -other.compare(self.lo)
            if other.is_exact:
                return self.compare(other.lo)

    def sign_of(self, q: RationalPoly) -> int:
        """Sign of q evaluated at this algebraic number."""
        if self.is_exact:
            return q.sign_at(self.lo)
        if q.is_zero():
            return 0
        g = poly_gcd(self.poly, q)
        if g.degree >= 1 and count_roots(g, self.lo, self.hi) >= 1:
            return 0
        while q.degree >= 1 and (count_roots(q, self.lo, self.hi) > 0 or q(self.lo) == 0):
            self.refine()
            if self.is_exact:
                return q.sign_at(self.lo)
        return q.sign_at(self.hi)

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicReal(root of {self.poly} in [{float(self.lo):.12g}, {float(self.hi):.12g}])"
