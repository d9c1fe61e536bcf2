from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from bianchi_acb.scalar import (
    H,
    ONE,
    REAL_LINE,
    ZERO,
    Domain,
    ExactRoot,
    IdenticallyZero,
    NotDivisible,
    Scalar,
    Sign,
    UnsupportedDegree,
    common_roots,
    exact_roots,
    roots_in,
    sign_on,
    vanishes_at,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
scalars = st.lists(rationals, max_size=5).map(Scalar)


def test_monomial_product():
    assert H * H == Scalar([0, 0, 1])


def test_scaling_matches_expanded_form():
    assert (2 - H**2) * 4 == Scalar([8, 0, -4])
    assert (1 - 3 * H**2) * 2 == Scalar([2, 0, -6])


def test_canonical_form_strips_trailing_zeros():
    s = Scalar([1, 2, 0, 0])
    assert s.coefficients == (1, 2)
    assert Scalar(s.coefficients) == s
    assert Scalar([0, 0]).is_zero() and Scalar([0, 0]).degree == -1


def test_big_integers_do_not_wrap():
    big = Scalar.const(2**80)
    assert (big * big).constant_value() == 2**160


def test_evaluation_examples():
    tau = -6 * H**2
    assert tau.evaluate(-1) == -6
    assert tau.evaluate(0) == 0
    s = 2 - 6 * H**2
    assert s.evaluate(Fraction(1, 2)) == Fraction(1, 2)
    assert s.evaluate_naive(Fraction(1, 2)) == Fraction(1, 2)


@given(scalars, scalars, rationals)
def test_evaluation_is_a_ring_homomorphism(a, b, q):
    assert (a + b).evaluate(q) == a.evaluate(q) + b.evaluate(q)
    assert (a - b).evaluate(q) == a.evaluate(q) - b.evaluate(q)
    assert (a * b).evaluate(q) == a.evaluate(q) * b.evaluate(q)


@given(scalars, rationals)
def test_horner_matches_naive_powers(a, q):
    assert a.evaluate(q) == a.evaluate_naive(q)


@given(scalars, scalars, scalars)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(scalars, scalars)
@settings(max_examples=60)
def test_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b) / b == a
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_inexact_division_is_an_error():
    with pytest.raises(NotDivisible):
        (H + 1) / H


@given(scalars)
def test_json_round_trip(a):
    assert Scalar.from_json(a.to_json()) == a


def test_json_format():
    assert (2 - H**2).to_json() == ["2", "0", "-1"]
    assert Scalar([Fraction(1, 2)]).to_json() == ["1/2"]


def test_text_rendering():
    assert str(4 * (2 - H**2)) == "-4h^2+8"
    assert (4 * (2 - H**2)).factored() == "4(2-h^2)"
    assert str(Fraction(1, 2) * H) == "(1/2)h"
    assert (H**2).factored() is None


def test_roots_of_published_norms():
    assert exact_roots(4 * (2 - H**2)) == [ExactRoot.surd(2, -1), ExactRoot.surd(2, 1)]
    roots = exact_roots(2 * (1 - 5 * H**2))
    assert roots == [ExactRoot.surd(Fraction(1, 5), -1), ExactRoot.surd(Fraction(1, 5), 1)]
    assert [str(r) for r in roots] == ["-√5/5", "√5/5"]
    assert exact_roots(H**2) == [ExactRoot.rational(0)]


def test_root_errors():
    with pytest.raises(IdenticallyZero):
        exact_roots(ZERO)
    with pytest.raises(UnsupportedDegree):
        exact_roots(H**3)
    assert exact_roots(H**2 + 1) == []
    assert exact_roots(Scalar.const(3)) == []


quadratics = st.tuples(rationals, rationals, rationals).filter(lambda t: any(t))


@given(quadratics)
@settings(max_examples=200)
def test_roots_vanish_and_match_sympy(coeffs):
    s = Scalar(coeffs)
    roots = exact_roots(s)
    for r in roots:
        assert vanishes_at(s, r)
        if r.is_rational:
            assert s.evaluate(r.value) == 0
    x = sp.Symbol("x")
    expr = sum(sp.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(s.coefficients))
    want = sorted(set(sp.real_roots(sp.Poly(expr, x)))) if s.degree > 0 else []
    assert len(roots) == len(want)
    for r, w in zip(roots, want):
        exact = sp.Rational(r.offset.numerator, r.offset.denominator) + r.sign * sp.sqrt(
            sp.Rational(r.radicand.numerator, r.radicand.denominator)
        )
        assert sp.simplify(exact - w) == 0


def test_surd_serialization():
    r = ExactRoot.surd(2, -1)
    assert r.to_json() == {"kind": "surd", "radicand": "2", "sign": -1}
    assert ExactRoot.from_json(r.to_json()) == r
    assert ExactRoot.surd(4, -1) == ExactRoot.rational(-2)


def test_domain_filtering():
    nonpos = Domain(upper=Fraction(0))
    assert roots_in(4 * (2 - H**2), nonpos) == [ExactRoot.surd(2, -1)]
    assert roots_in(4 * (2 - H**2), REAL_LINE) == exact_roots(4 * (2 - H**2))
    assert common_roots([H**2, H], REAL_LINE) == [ExactRoot.rational(0)]
    assert common_roots([H, H - 1]) == []
    assert common_roots([ZERO, ZERO]) is None


def test_sign_classification():
    nonpos = Domain(upper=Fraction(0))
    nonneg = Domain(lower=Fraction(0))
    assert sign_on(-(H**2), nonpos) == Sign.NONPOSITIVE
    assert sign_on(H**2 + 1) == Sign.POSITIVE
    assert sign_on(-(H**2) - 1, nonneg) == Sign.NEGATIVE
    assert sign_on(1 - H**2, nonneg) == Sign.INDEFINITE
    assert sign_on(ZERO) == Sign.ZERO
    assert sign_on(H, nonneg) == Sign.NONNEGATIVE
    assert sign_on(H - 1, nonpos) == Sign.NEGATIVE
