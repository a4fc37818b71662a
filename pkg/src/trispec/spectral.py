"""Certified spectral radius, quotient matrices and exact characteristic polynomials.

The numeric path is shifted power iteration; every estimate is turned into a
rigorous rational interval: the exact Rayleigh quotient of the returned float
vector is a lower bound and the Collatz-Wielandt ratio max (Ax)_i / x_i is an
upper bound.  When an interval cannot decide a comparison, small graphs fall
back to the largest root of the exact characteristic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

import numpy as np

from .algebra import AlgebraicReal, QuadSurd, RationalPoly, count_roots, _frac
from .graph import Graph, GraphError, _bits

DEFAULT_TOL = 1e-11
ITERATION_CAP = 1_000_000
EXACT_MAX_VERTICES = 16
CHAR_POLY_MAX_BLOCKS = 8

Threshold = Union[int, Fraction, QuadSurd, AlgebraicReal]


class Comparison(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    UNRESOLVED = "unresolved"

    @property
    def resolved(self) -> bool:
        return self is not Comparison.UNRESOLVED

    def flip(self) -> Comparison:
        if self is Comparison.LESS:
            return Comparison.GREATER
        if self is Comparison.GREATER:
            return Comparison.LESS
        return self


def _from_sign(s: int) -> Comparison:
    return Comparison.GREATER if s > 0 else Comparison.LESS if s < 0 else Comparison.EQUAL


# ---------------------------------------------------------------------------
# certified scalars


@dataclass(frozen=True)
class CertifiedScalar:
    """A real number known to lie in [lo, hi] (exact rationals).

    ``value`` and ``radius`` are floats chosen so that
    [value - radius, value + radius] contains [lo, hi] exactly.
    """

    lo: Fraction
    hi: Fraction
    value: float
    radius: float

    @classmethod
    def from_interval(cls, lo: Fraction, hi: Fraction) -> CertifiedScalar:
        lo, hi = _frac(lo), _frac(hi)
        if lo > hi:
            raise ValueError("empty interval")
        value = float((lo + hi) / 2)
        need = max(hi - Fraction(value), Fraction(value) - lo)
        radius = float(need)
        if Fraction(radius) < need:
            radius = math.nextafter(radius, math.inf)
        return cls(lo, hi, value, radius)

    @classmethod
    def exact(cls, q: Fraction | int) -> CertifiedScalar:
        return cls.from_interval(_frac(q), _frac(q))

    @classmethod
    def from_value(cls, value: float, radius: float) -> CertifiedScalar:
        if radius < 0 or not math.isfinite(radius):
            raise ValueError("radius must be finite and non-negative")
        v, r = Fraction(value), Fraction(radius)
        return cls(v - r, v + r, value, radius)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: float | Fraction) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def compare(self, other) -> Comparison:
        """Three-way comparison of the certified quantity against ``other``."""
        if isinstance(other, CertifiedScalar):
            if self.lo > other.hi:
                return Comparison.GREATER
            if self.hi < other.lo:
                return Comparison.LESS
            if self.lo == self.hi == other.lo == other.hi:
                return Comparison.EQUAL
            return Comparison.UNRESOLVED
        if isinstance(other, AlgebraicReal):
            return self._compare_algebraic(other)
        t = QuadSurd.coerce(other)
        if (QuadSurd(self.lo) - t).sign() > 0:
            return Comparison.GREATER
        if (QuadSurd(self.hi) - t).sign() < 0:
            return Comparison.LESS
        if self.lo == self.hi and t == self.lo:
            return Comparison.EQUAL
        return Comparison.UNRESOLVED

    def _compare_algebraic(self, a: AlgebraicReal, max_refinements: int = 400) -> Comparison:
        for _ in range(max_refinements):
            if a.is_exact:
                return self.compare(a.lo)
            if a.hi <= self.lo:
                return Comparison.GREATER
            if a.lo >= self.hi:
                return Comparison.LESS
            if self.lo == self.hi:
                return _from_sign(-a.compare(self.lo))
            if a.lo >= self.lo and a.hi <= self.hi:
                return Comparison.UNRESOLVED
            a.refine()
        return Comparison.UNRESOLVED

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return f"CertifiedScalar({self.value!r} +/- {self.radius:.3g})"


# ---------------------------------------------------------------------------
# power iteration with Collatz-Wielandt certification


@dataclass(frozen=True)
class SpectralEstimate:
    lam: CertifiedScalar
    vector: tuple[float, ...]
    residual: float
    iterations: int
    converged: bool

    @property
    def value(self) -> float:
        return self.lam.value

    @property
    def radius(self) -> float:
        return self.lam.radius

    def as_array(self) -> np.ndarray:
        return np.array(self.vector, dtype=float)


def _power_iterate(mat: np.ndarray, shift: float, tol: float, cap: int) -> tuple[np.ndarray, int, bool]:
    k = mat.shape[0]
    x = np.full(k, 1.0 / math.sqrt(k))
    for it in range(1, cap + 1):
        ax = mat @ x
        rho = float(x @ ax) / float(x @ x)
        if float(np.max(np.abs(ax - rho * x))) <= tol:
            return x, it, True
        y = ax + shift * x
        x = y / np.linalg.norm(y)
    return x, cap, False


def _exact_ints(x: np.ndarray) -> list[int]:
    """Integers proportional to the float entries of x (exact, common power-of-two scale)."""
    ratios = [float(v).as_integer_ratio() for v in x]
    den = max(d for _, d in ratios)
    return [p * (den // d) for p, d in ratios]


def _collatz_wielandt(rows: Sequence[Sequence[int]], x: np.ndarray, symmetric: bool) -> tuple[Fraction, Fraction]:
    """Rigorous [lo, hi] for the Perron root of an irreducible non-negative integer matrix.

    ``rows[i]`` lists (j, weight) pairs; x must be strictly positive.
    """
    X = _exact_ints(x)
    AX = [sum(w * X[j] for j, w in row) for row in rows]
    ratios = [Fraction(a, b) for a, b in zip(AX, X)]
    hi = max(ratios)
    lo = min(ratios)
    if symmetric:
        lo = max(lo, Fraction(sum(a * b for a, b in zip(X, AX)), sum(b * b for b in X)))
    return lo, hi


def _positive(x: np.ndarray) -> np.ndarray:
    if np.all(x > 0):
        return x
    x = np.where(x > 0, x, 2.0**-600)
    return x / np.linalg.norm(x)


@lru_cache(maxsize=1 << 16)
def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, cap: int = ITERATION_CAP) -> SpectralEstimate:
    """Certified spectral radius of the adjacency matrix.

    Each connected component with an edge is iterated separately; the global
    interval is the max over components of their certified intervals.
    """
    if g.n < 1:
        raise GraphError("spectral radius needs n >= 1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    best_lo, best_hi = Fraction(0), Fraction(0)
    best_vec = np.full(g.n, 1.0 / math.sqrt(g.n))
    total_it, all_conv = 0, True
    for comp in g.components():
        if len(comp) == 1:
            continue
        pos = {v: i for i, v in enumerate(comp)}
        sub_rows = [[(pos[w], 1) for w in _bits(g.rows[v])] for v in comp]
        mat = np.zeros((len(comp), len(comp)))
        for i, row in enumerate(sub_rows):
            for j, _ in row:
                mat[i, j] = 1.0
        shift = float(max(len(r) for r in sub_rows))
        x, it, conv = _power_iterate(mat, shift, tol, cap)
        x = _positive(x)
        total_it += it
        all_conv &= conv
        lo, hi = _collatz_wielandt(sub_rows, x, symmetric=True)
        best_hi = max(best_hi, hi)
        if lo > best_lo:
            best_lo = lo
            best_vec = np.zeros(g.n)
            best_vec[comp] = x
    lam = CertifiedScalar.from_interval(best_lo, best_hi)
    a = g.adjacency_matrix()
    residual = float(np.max(np.abs(a @ best_vec - lam.value * best_vec)))
    return SpectralEstimate(lam, tuple(float(v) for v in best_vec), residual, total_it, all_conv)


def rayleigh_exact(g: Graph, vector: Sequence[float]) -> Fraction:
    """Exact Rayleigh quotient of a float vector (as the dyadic rationals it represents)."""
    x = [Fraction(v) for v in vector]
    num = sum(x[u] * x[v] for u, v in g.edges()) * 2
    den = sum(v * v for v in x)
    return num / den


# ---------------------------------------------------------------------------
# exact characteristic polynomials


def _faddeev_leverrier(mat: Sequence[Sequence[Fraction | int]]) -> RationalPoly:
    k = len(mat)
    M = [[Fraction(v) for v in row] for row in mat]
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    cur = [[Fraction(0)] * k for _ in range(k)]  # M_0
    for i in range(1, k + 1):
        # M_i = M * M_{i-1} + c_{k-i+1} I
        nxt = [[sum(M[r][t] * cur[t][c] for t in range(k) if M[r][t]) for c in range(k)] for r in range(k)]
        for d in range(k):
            nxt[d][d] += coeffs[k - i + 1]
        cur = nxt
        tr = sum(sum(M[d][t] * cur[t][d] for t in range(k) if M[d][t]) for d in range(k))
        coeffs[k - i] = -tr / i
    return RationalPoly(coeffs)


def _int_char_poly(rows: Sequence[int], n: int) -> RationalPoly:
    """Faddeev-LeVerrier over the integers for a 0/1 symmetric matrix given as bit rows."""
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    cur = [[0] * n for _ in range(n)]
    nbrs = [list(_bits(r)) for r in rows]
    for i in range(1, n + 1):
        nxt = [[sum(cur[t][c] for t in nbrs[r]) for c in range(n)] for r in range(n)]
        c_prev = coeffs[n - i + 1]
        for d in range(n):
            nxt[d][d] += c_prev
        cur = nxt
        tr = sum(sum(cur[t][d] for t in nbrs[d]) for d in range(n))
        q, rem = divmod(-tr, i)
        assert rem == 0, "integer characteristic polynomial expected"
        coeffs[n - i] = q
    return RationalPoly(coeffs)


@lru_cache(maxsize=1 << 14)
def adjacency_char_poly(g: Graph) -> RationalPoly:
    """det(xI - A(G)), exact."""
    return _int_char_poly(g.rows, g.n)


@lru_cache(maxsize=1 << 14)
def exact_spectral_radius(g: Graph) -> AlgebraicReal:
    """lambda(G) as an isolated root of the characteristic polynomial."""
    if g.n > EXACT_MAX_VERTICES:
        raise GraphError(f"exact spectral radius limited to n <= {EXACT_MAX_VERTICES}")
    if g.m == 0:
        return AlgebraicReal(RationalPoly([0, 1]), Fraction(0), Fraction(0))
    est = spectral_radius(g)
    pad = Fraction(1, 10**6)
    return AlgebraicReal.largest_root(adjacency_char_poly(g), hint=(est.lam.lo - pad, est.lam.hi + pad))


def compare_lambda(g: Graph, threshold: Threshold, tol: float = DEFAULT_TOL) -> Comparison:
    """Certified three-way comparison of lambda(G) against an exact threshold.

    Falls back to exact root isolation when the numeric interval is inconclusive
    and n <= EXACT_MAX_VERTICES; otherwise may return UNRESOLVED.
    """
    if g.n == 0:
        lam0 = CertifiedScalar.exact(0)
        return lam0.compare(threshold)
    res = spectral_radius(g, tol).lam.compare(threshold)
    if res.resolved or g.n > EXACT_MAX_VERTICES:
        return res
    alg = exact_spectral_radius(g)
    if isinstance(threshold, AlgebraicReal):
        return _from_sign(alg.compare_algebraic(threshold))
    return _from_sign(alg.compare(threshold))


def lambda_turan_2(n: int) -> QuadSurd:
    """lambda(T_{n,2}) = sqrt(floor(n^2/4)), exact."""
    if n < 2:
        raise ValueError("lambda_turan_2 needs n >= 2")
    return QuadSurd.sqrt(n * n // 4)


# ---------------------------------------------------------------------------
# equitable partitions


class NotEquitable(ValueError):
    def __init__(self, vertex: int, block: int, message: str = ""):
        self.vertex = vertex
        self.block = block
        super().__init__(message or f"vertex {vertex} breaks equitability against block {block}")


@dataclass(frozen=True)
class QuotientMatrix:
    partition: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def _quotient_from_rows(rows: Sequence[int], n: int, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    blocks = tuple(tuple(b) for b in partition)
    seen = [v for b in blocks for v in b]
    if sorted(seen) != list(range(n)):
        raise ValueError("partition must cover the vertex set disjointly")
    if any(not b for b in blocks):
        raise ValueError("partition blocks must be non-empty")
    masks = [sum(1 << v for v in b) for b in blocks]
    entries = []
    for i, b in enumerate(blocks):
        ref = [(rows[b[0]] & mk).bit_count() for mk in masks]
        for u in b[1:]:
            for j, mk in enumerate(masks):
                if (rows[u] & mk).bit_count() != ref[j]:
                    raise NotEquitable(u, j)
        entries.append(tuple(ref))
    return QuotientMatrix(blocks, tuple(entries))


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    return _quotient_from_rows(g.rows, g.n, partition)


def char_poly(q: QuotientMatrix) -> RationalPoly:
    """det(xI - B) for the quotient matrix, exact."""
    if q.size > CHAR_POLY_MAX_BLOCKS:
        raise ValueError(f"char_poly limited to {CHAR_POLY_MAX_BLOCKS} blocks")
    return _faddeev_leverrier(q.entries)


def quotient_spectral_radius(q: QuotientMatrix, tol: float = DEFAULT_TOL, cap: int = ITERATION_CAP) -> CertifiedScalar:
    """Certified Perron root of an irreducible quotient matrix (numeric path, no polynomial)."""
    k = q.size
    mat = np.array(q.entries, dtype=float)
    shift = float(mat.sum(axis=1).max())
    x, _, _ = _power_iterate(mat, shift, tol, cap)
    x = _positive(x)
    rows = [[(j, w) for j, w in enumerate(row) if w] for row in q.entries]
    lo, hi = _collatz_wielandt(rows, x, symmetric=False)
    if k == 1:
        lo = hi = Fraction(q.entries[0][0])
    return CertifiedScalar.from_interval(lo, hi)


# ---------------------------------------------------------------------------
# exact signs and root location


def poly_sign_at(p: RationalPoly, point) -> int:
    """Exact sign of p at a rational or quadratic-surd point."""
    if isinstance(point, float):
        raise TypeError("floats are not exact points; pass a Fraction or QuadSurd")
    if not isinstance(point, (int, Fraction, QuadSurd)):
        raise TypeError(f"unsupported point type {type(point).__name__}")
    return p.sign_at(point)


def certify_root_above(p: RationalPoly, threshold) -> bool:
    """True iff the largest real root of p exceeds ``threshold``, decided exactly.

    Fast path: p(threshold) has the sign opposite to p(+inf), so a root lies
    above.  Otherwise the Sturm count on (threshold, +inf) decides.
    """
    if p.degree < 1 or count_roots(p) == 0:
        raise ValueError("polynomial has no real root")
    lead = 1 if p.leading > 0 else -1
    s = poly_sign_at(p, threshold)
    if s == -lead:
        return True
    return count_roots(p, threshold, None) > 0


# ---------------------------------------------------------------------------
# named polynomials and their constructions


def _half(n: int) -> Fraction:
    return Fraction(n, 2)


def _q(n: int) -> Fraction:
    return Fraction(n * n, 4)


_NAMED: dict[str, tuple[int, Callable[[int], list]]] = {
    # name: (parity, ascending coefficients)
    "f1": (0, lambda n: [_q(n) - n + 1, 1 - _q(n), -1, 1]),
    "f2": (0, lambda n: [1 + 2 * _q(n) - 2 * n, -(n - 2), -_q(n), 0, 1]),
    "f3": (1, lambda n: [2 * _q(n) - 2 * n + Fraction(3, 2), -(n - 3), Fraction(1, 4) - _q(n), 0, 1]),
    "f": (0, lambda n: [_q(n) - n, -_q(n), -1, 1]),
    "g": (1, lambda n: [_q(n) - n + Fraction(3, 4), Fraction(1, 4) - _q(n), -1, 1]),
    "g1": (0, lambda n: [_q(n) - n - 8, 4 - _q(n), -1, 1]),
    "g2": (0, lambda n: [_q(n) - n, 4 - _q(n), -1, 1]),
    "g3": (1, lambda n: [_q(n) - n + Fraction(3, 4), Fraction(9, 4) - _q(n), -1, 1]),
    "h1": (0, lambda n: [-3 - n + _q(n), 1 - _q(n), -1, 1]),
    "h2": (0, lambda n: [1 - n + _q(n), 1 - _q(n), -1, 1]),
    "h3": (1, lambda n: [Fraction(-21, 4) - n + _q(n), Fraction(9, 4) - _q(n), -1, 1]),
    "h4": (1, lambda n: [Fraction(3, 4) - n + _q(n), Fraction(9, 4) - _q(n), -1, 1]),
    "h5": (1, lambda n: [0, Fraction(-1, 2) - 2 * n + 2 * _q(n), 1 - n, Fraction(1, 4) - _q(n), 0, 1]),
}

# name -> (kind, (a, b) as a function of n); "kplus" adds edge {0,1} inside
# the a-side, "kplusbar" additionally deletes the cross edge {0, a}.
_CONSTRUCTIONS: dict[str, tuple[str, Callable[[int], tuple[int, int]]]] = {
    "f1": ("kplus", lambda n: (n // 2 + 1, n // 2 - 1)),
    "f2": ("kplusbar", lambda n: (n // 2, n // 2)),
    "f3": ("kplusbar", lambda n: ((n + 1) // 2, (n - 1) // 2)),
    "f": ("kplus", lambda n: (n // 2, n // 2)),
    "g": ("kplus", lambda n: ((n + 1) // 2, (n - 1) // 2)),
    "g1": ("kplus", lambda n: (n // 2 - 2, n // 2 + 2)),
    "g2": ("kplus", lambda n: (n // 2 + 2, n // 2 - 2)),
    "g3": ("kplus", lambda n: ((n + 3) // 2, (n - 3) // 2)),
    "h1": ("kplus", lambda n: (n // 2 - 1, n // 2 + 1)),
    "h2": ("kplus", lambda n: (n // 2 + 1, n // 2 - 1)),
    "h3": ("kplus", lambda n: ((n - 3) // 2, (n + 3) // 2)),
    "h4": ("kplus", lambda n: ((n + 3) // 2, (n - 3) // 2)),
    "h5": ("kplusbar", lambda n: ((n - 1) // 2, (n + 1) // 2)),
}

NAMED_POLYS = tuple(_NAMED)


def named_parity(name: str) -> int:
    """0 for names defined at even n, 1 for odd n."""
    if name not in _NAMED:
        raise ValueError(f"unknown polynomial {name!r}; known: {list(_NAMED)}")
    return _NAMED[name][0]


def named_poly(name: str, n: int) -> RationalPoly:
    parity = named_parity(name)
    if n % 2 != parity:
        raise ValueError(f"{name} is defined for {'odd' if parity else 'even'} n, got n={n}")
    return RationalPoly(_NAMED[name][1](n))


def construction_params(name: str, n: int) -> tuple[str, int, int]:
    named_parity(name)
    kind, ab = _CONSTRUCTIONS[name]
    a, b = ab(n)
    return kind, a, b


def _construction_rows(kind: str, a: int, b: int) -> tuple[list[int], list[list[int]]]:
    """Adjacency rows and the natural equitable partition, for any size."""
    if a < 2 or b < 0 or (kind == "kplusbar" and b < 1):
        raise GraphError(f"{kind}({a},{b}) does not exist")
    n = a + b
    A = (1 << a) - 1
    B = ((1 << n) - 1) ^ A
    rows = [B] * a + [A] * b
    rows[0] |= 1 << 1
    rows[1] |= 1 << 0
    if kind == "kplus":
        blocks = [[0, 1], list(range(2, a)), list(range(a, n))]
    else:
        rows[0] &= ~(1 << a)
        rows[a] &= ~1
        blocks = [[0], [1], list(range(2, a)), [a], list(range(a + 1, n))]
    return rows, [blk for blk in blocks if blk]


def construction_quotient(name: str, n: int) -> QuotientMatrix:
    """Quotient matrix of the graph behind ``name`` at order n (no Graph object needed)."""
    kind, a, b = construction_params(name, n)
    rows, blocks = _construction_rows(kind, a, b)
    return _quotient_from_rows(rows, n, blocks)


def named_construction(name: str, n: int) -> tuple[Graph, list[list[int]]]:
    """The explicit graph whose spectral radius ``name`` describes, with its partition."""
    kind, a, b = construction_params(name, n)
    rows, blocks = _construction_rows(kind, a, b)
    return Graph(n, tuple(rows)), blocks


def poly_match(name: str, n: int) -> str:
    """'exact' if char_poly(quotient) == named_poly, 'up_to_x' if they differ by a power of x."""
    cp = char_poly(construction_quotient(name, n))
    named = named_poly(name, n)
    if cp == named:
        return "exact"
    if cp.strip_x()[1] == named.strip_x()[1]:
        return "up_to_x"
    return "mismatch"


# ---------------------------------------------------------------------------
# lemma certificates


@dataclass(frozen=True)
class LemmaCertificate:
    lemma: str
    n: int
    poly: str
    threshold: str
    exact: bool
    numeric: Comparison
    graph_numeric: Comparison | None
    poly_match: str

    @property
    def certified(self) -> bool:
        agree = self.numeric is Comparison.GREATER and self.graph_numeric in (None, Comparison.GREATER)
        return self.exact and agree and self.poly_match in ("exact", "up_to_x")


LEMMAS = ("kplus_shifted", "kplusbar_even", "kplusbar_odd", "kplus_balanced_square")


def lemma_instance(lemma: str, n: int) -> tuple[str, QuadSurd] | None:
    """(named polynomial, exact threshold) for a lemma at order n, or None if not applicable."""
    if lemma == "kplus_shifted" and n >= 4 and n % 2 == 0:
        return "f1", QuadSurd(_half(n))
    if lemma == "kplusbar_even" and n >= 4 and n % 2 == 0:
        return "f2", QuadSurd(_half(n))
    if lemma == "kplusbar_odd" and n >= 5 and n % 2 == 1:
        return "f3", QuadSurd.sqrt(n * n - 1, Fraction(1, 2))
    if lemma == "kplus_balanced_square" and n >= 4:
        return ("f" if n % 2 == 0 else "g"), QuadSurd.sqrt(n * n // 4 + 2)
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}")
    return None


def verify_lemma(lemma: str, n: int, tol: float = DEFAULT_TOL) -> LemmaCertificate | None:
    """Certify a lemma's strict inequality at one n by two independent paths.

    Exact: sign/Sturm argument on the named polynomial.  Numeric: certified
    power iteration on the quotient matrix (and on the explicit graph when
    it fits in a Graph).
    """
    inst = lemma_instance(lemma, n)
    if inst is None:
        return None
    name, threshold = inst
    exact = certify_root_above(named_poly(name, n), threshold)
    q = construction_quotient(name, n)
    numeric = quotient_spectral_radius(q, tol).compare(threshold)
    graph_numeric = None
    if n <= 64:
        g, _ = named_construction(name, n)
        graph_numeric = compare_lambda(g, threshold, tol)
    return LemmaCertificate(lemma, n, name, str(threshold), exact, numeric, graph_numeric, poly_match(name, n))
