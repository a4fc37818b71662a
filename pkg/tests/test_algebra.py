from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from trispec.algebra import AlgebraicReal, QuadSurd, RationalPoly, cauchy_bound, count_roots, poly_gcd, sturm_sequence

X = RationalPoly.x()
fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
small_ints = st.integers(-20, 20)


def _sympy(p):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])), x)


def test_quadsurd_simplifies_and_compares():
    assert QuadSurd.sqrt(12) == QuadSurd(0, 2, 3)
    assert QuadSurd.sqrt(16) == 4
    assert QuadSurd.sqrt(6) < Fraction(5, 2) < QuadSurd.sqrt(7)
    assert (QuadSurd.sqrt(2) * QuadSurd.sqrt(2)) == 2
    assert QuadSurd(1, 1, 2) - QuadSurd(0, 1, 2) == 1
    assert (QuadSurd(3, -2, 2)).sign() == 1  # 3 > 2 sqrt 2
    assert (QuadSurd(2, -1, 5)).sign() == -1
    with pytest.raises(ValueError):
        QuadSurd.sqrt(2) + QuadSurd.sqrt(3)


@given(small_ints, small_ints, st.integers(2, 50))
def test_quadsurd_sign_matches_float(a, b, d):
    q = QuadSurd(a, b, d)
    exact = float(a) + float(b) * d**0.5
    if abs(exact) > 1e-9:
        assert q.sign() == (1 if exact > 0 else -1)
    lo, hi = q.floor_bounds()
    assert lo <= exact + 1e-9 and exact - 1e-9 <= hi


def test_poly_arithmetic():
    p = X**2 - 2
    q = X - 1
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem == RationalPoly.const(-1)
    assert p.derivative() == X * 2
    assert p(QuadSurd.sqrt(2)) == 0
    assert p(Fraction(3, 2)) == Fraction(1, 4)
    assert (X**3 - X).strip_x() == (1, X**2 - 1)
    assert ((X - 1) ** 2 * (X + 2)).squarefree().monic() == ((X - 1) * (X + 2)).monic()


def test_poly_str():
    assert str(X**3 - X**2 - 8 * X + 4) in ("x^3 - x^2 - 8x + 4", "x^3 - x^2 - 8*x + 4")


@settings(max_examples=80, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=6), st.lists(fractions, min_size=1, max_size=4))
def test_divmod_and_gcd_against_sympy(a, b):
    p, q = RationalPoly(a), RationalPoly(b)
    if q.is_zero():
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree
    g = poly_gcd(p, q)
    if not p.is_zero():
        ref = sympy.gcd(_sympy(p), _sympy(q))
        assert g.degree == ref.degree()


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), fractions, fractions)
def test_count_roots_matches_factored(roots, lo, hi):
    p = RationalPoly([1])
    for r in roots:
        p = p * (X - r)
    if lo > hi:
        lo, hi = hi, lo
    expect = len({r for r in roots if lo < r <= hi})
    assert count_roots(p, lo, hi) == expect
    assert count_roots(p) == len(set(roots))


def test_count_roots_irrational():
    p = X**3 - X**2 - 8 * X + 4  # three real roots
    assert count_roots(p) == 3
    assert count_roots(p, Fraction(3), None) == 1
    bound = cauchy_bound(p)
    assert all(abs(r) < bound for r in np.roots([1, -1, -8, 4]))
    assert len(sturm_sequence(p)) >= 2


def test_largest_root_isolates_and_refines():
    p = X**3 - X**2 - 8 * X + 4
    r = AlgebraicReal.largest_root(p)
    r.refine_to(Fraction(1, 10**12))
    ref = max(np.roots([1, -1, -8, 4]).real)
    assert abs(float(r) - ref) < 1e-9
    assert r.compare(3) == 1
    assert r.compare(Fraction(31, 10)) == 1 if ref > 3.1 else r.compare(Fraction(31, 10)) == -1


def test_algebraic_equality_detection():
    a = AlgebraicReal.largest_root(X**2 - 6)
    b = AlgebraicReal.largest_root((X**2 - 6) * (X - 1))
    assert a.compare_algebraic(b) == 0
    assert a.compare(QuadSurd.sqrt(6)) == 0
    assert a.compare(QuadSurd.sqrt(7)) == -1
    c = AlgebraicReal.largest_root(X**2 - 7)
    assert a.compare_algebraic(c) == -1 and c.compare_algebraic(a) == 1


def test_sign_of_polynomial_at_algebraic():
    a = AlgebraicReal.largest_root(X**2 - 2)
    assert a.sign_of(X**2 - 2) == 0
    assert a.sign_of(X - Fraction(7, 5)) == 1
    assert a.sign_of(X - Fraction(3, 2)) == -1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
def test_largest_root_matches_numpy(coeffs):
    p = RationalPoly(coeffs)
    if p.degree < 1 or count_roots(p) == 0:
        return
    r = AlgebraicReal.largest_root(p)
    r.refine_to(Fraction(1, 10**9))
    ref = max(z.real for z in np.roots(list(reversed(p.coeffs))) if abs(z.imag) < 1e-6)
    assert abs(float(r) - ref) < 1e-5 * max(1, abs(ref))
