from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
import hypothesis.strategies as st

from morsezeta.polyalg import (
    ONE_MINUS_T,
    InexactDivision,
    IntPolynomial,
    PoleAtOrigin,
    RationalFunction,
    TruncatedSeries,
    UndefinedGCD,
    adjugate,
    det_bareiss,
    poly_add,
    poly_divexact,
    poly_gcd,
    poly_matmul,
    poly_mul,
    ratfun_arith,
    ratfun_normalize,
    series_exp,
    series_log,
    series_of_ratfun,
)

from conftest import T, from_sympy, polys, to_sympy


def P(*c):
    return IntPolynomial(c)


TREFOIL_MINUS = [[P(1), P(0, -1)], [P(0, 1), P(1, -1)]]  # I - t G for the trefoil
K3 = [[1, 1, -2, -1], [0, 1, -1, 0], [0, 0, 1, 0], [0, -1, 0, 1]]


def i_minus_tg(G):
    n = len(G)
    return [[P(int(i == j), -G[i][j]) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------- IntPolynomial


def test_representation_strips_trailing_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert P().degree is None
    assert P(3).degree == 0


def test_add_examples():
    assert poly_add(P(1, -1), P(0, 1)) == P(1)
    assert poly_add(P(), P(4, 5)) == P(4, 5)
    assert poly_add(P(1, -1), P(1, -1)) == P(2, -2)


def test_mul_examples():
    assert poly_mul(P(1, -1), P(1, -1)) == P(1, -2, 1)
    assert poly_mul(P(1, -1, 1), P(1, 1)) == P(1, 0, 0, 1)
    assert poly_mul(P(3, 1), P()) == P()


def test_gcd_examples():
    assert poly_gcd(P(1, 0, -1), P(1, -2, 1)) == P(1, -1)
    assert poly_gcd(P(4, -6, 2), P()) == P(2, -3, 1)
    assert poly_gcd(P(1, -1, 1), P(1, -1)) == P(1)
    with pytest.raises(UndefinedGCD):
        poly_gcd(P(), P())


def test_divexact_examples():
    assert poly_divexact(P(1, -2, 1), P(1, -1)) == P(1, -1)
    assert poly_divexact(ONE_MINUS_T**4, ONE_MINUS_T**3) == P(1, -1)
    # 1 - t + t^2 = (1 - t)(-t) + 1: nonzero remainder
    with pytest.raises(InexactDivision, match="inexact division"):
        poly_divexact(P(1, -1, 1), P(1, -1))
    with pytest.raises(InexactDivision):
        poly_divexact(P(1, 1), P(2))


def test_string_form():
    assert str(P(1, -1, 1)) == "1 - t + t^2"
    assert str(P(-2, 3, -2)) == "-2 + 3t - 2t^2"
    assert str(P()) == "0"
    assert str(P(0, 0, -1)) == "-t^2"


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == P()


@given(polys(nonzero=True), polys(nonzero=True))
def test_degree_of_product(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(polys(max_degree=5), polys(max_degree=5))
def test_gcd_matches_sympy(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    expected = from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)))
    expected = expected.primitive_part()
    if expected.lowest() < 0:
        expected = -expected
    assert g == expected
    assert g.content() == 1 and g.lowest() > 0
    for p in (a, b):
        if not p.is_zero():
            poly_divexact(p, g)


@given(polys(), polys(nonzero=True))
def test_divexact_roundtrip(q, b):
    assert poly_divexact(q * b, b) == q


# ---------------------------------------------------------------- RationalFunction


def test_normalize_examples():
    r = ratfun_normalize(P(2, -2), P(2))
    assert (r.numerator, r.denominator) == (P(1, -1), P(1))
    r = ratfun_normalize(P(1, 0, -1), P(1, -1))
    assert (r.numerator, r.denominator) == (P(1, 1), P(1))
    # (t - 1)/(t - 1)^2 = 1/(t - 1) = -1/(1 - t)
    r = ratfun_normalize(P(-1, 1), P(-1, 1) ** 2)
    assert (r.numerator, r.denominator) == (P(-1), P(1, -1))
    with pytest.raises(ZeroDivisionError):
        ratfun_normalize(P(1), P())


def test_normalize_keeps_scalars():
    half = RationalFunction(1, 2)
    assert half + half == RationalFunction(1)
    assert RationalFunction(P(2)) != RationalFunction(1)


def test_arith_examples():
    a = RationalFunction(ONE_MINUS_T**3)
    tau = RationalFunction(P(-2, 3, -2), ONE_MINUS_T**4)
    assert ratfun_arith(a, tau, "mul") == RationalFunction(P(-2, 3, -2), P(1, -1))
    assert ratfun_arith(tau, RationalFunction(1), "mul") == tau
    assert ratfun_arith(tau, tau, "div") == RationalFunction(1)
    with pytest.raises(ZeroDivisionError):
        ratfun_arith(tau, RationalFunction(0), "div")


def test_ratfun_printing():
    assert str(RationalFunction(P(19, -37, 19), ONE_MINUS_T**6)) == "(19 - 37t + 19t^2)/(1 - t)^6"
    assert str(RationalFunction(-5, ONE_MINUS_T**2)) == "-5/(1 - t)^2"
    assert str(RationalFunction(ONE_MINUS_T**5)) == "(1 - t)^5"
    assert str(RationalFunction(P(1, -1, 1), ONE_MINUS_T)) == "(1 - t + t^2)/(1 - t)"
    assert str(RationalFunction(1)) == "1"


@st.composite
def ratfuns(draw):
    num = draw(polys(max_degree=3))
    den = draw(polys(max_degree=3, nonzero=True))
    return RationalFunction(num, den)


@given(ratfuns())
def test_canonical_form_invariants(r):
    num, den = r.numerator, r.denominator
    assert not den.is_zero()
    assert den.lowest() > 0
    if num.is_zero():
        assert den == P(1)
    else:
        assert poly_gcd(num, den).degree == 0
        assert sympy.gcd(num.content(), den.content()) == 1
    assert sympy.simplify(to_sympy(num) / to_sympy(den) - sympy.cancel(to_sympy(num) / to_sympy(den))) == 0


@given(ratfuns(), ratfuns())
def test_field_arith_matches_sympy(a, b):
    def sym(r):
        return to_sympy(r.numerator) / to_sympy(r.denominator)

    assert sympy.simplify(sym(a + b) - (sym(a) + sym(b))) == 0
    assert sympy.simplify(sym(a * b) - sym(a) * sym(b)) == 0
    if not b.is_zero():
        assert sympy.simplify(sym(a / b) - sym(a) / sym(b)) == 0


@given(ratfuns(), ratfuns())
def test_series_stable_under_roundtrip(r, q):
    if r.denominator[0] == 0 or q.is_zero():
        return
    assert series_of_ratfun(r * q / q, 8) == series_of_ratfun(r, 8)


# ---------------------------------------------------------------- series


def test_series_of_ratfun_examples():
    assert series_of_ratfun(RationalFunction(1, ONE_MINUS_T), 4).coeffs == (1, 1, 1, 1)
    r = RationalFunction(P(-2, 3, -2), ONE_MINUS_T**4)
    assert list(series_of_ratfun(r, 2)) == [-2, -5]
    assert list(series_of_ratfun(RationalFunction(P(1, -1, 1), ONE_MINUS_T), 3)) == [1, 0, 1]
    with pytest.raises(PoleAtOrigin, match="pole at origin"):
        series_of_ratfun(RationalFunction(1, P(0, 1)), 3)


@given(ratfuns())
@settings(max_examples=50)
def test_series_matches_sympy_taylor(r):
    if r.denominator[0] == 0:
        return
    expr = to_sympy(r.numerator) / to_sympy(r.denominator)
    taylor = sympy.series(expr, T, 0, 6).removeO()
    expected = [sympy.Rational(taylor.coeff(T, i)) for i in range(6)]
    got = series_of_ratfun(r, 6)
    assert [Fraction(int(e.p), int(e.q)) for e in expected] == list(got)


def test_exp_log_examples():
    zero = TruncatedSeries([0] * 5)
    assert series_exp(zero) == TruncatedSeries([1, 0, 0, 0, 0])
    mercator = TruncatedSeries([0] + [Fraction(-1, n) for n in range(1, 8)])
    assert series_exp(mercator) == TruncatedSeries([1, -1], 8)
    geom = series_of_ratfun(RationalFunction(1, ONE_MINUS_T), 8)
    assert series_log(geom) == TruncatedSeries([0] + [Fraction(1, n) for n in range(1, 8)])
    assert series_log(TruncatedSeries([1], 6)) == TruncatedSeries([0], 6)


def test_exp_of_trefoil_traces():
    # L(g^n) = 1 - trace(G^n) for G = [[0, 1], [-1, 1]]; traces cycle with period 6
    traces = [1, -1, -2, -1, 1, 2]
    s = TruncatedSeries([0] + [Fraction(1 - traces[(n - 1) % 6], n) for n in range(1, 4)])
    assert series_exp(s) == series_of_ratfun(RationalFunction(P(1, -1, 1), ONE_MINUS_T), 4)
    assert list(series_exp(s)) == [1, 0, 1, 1]


def test_exp_log_domain_errors():
    with pytest.raises(ValueError, match="zero constant term"):
        series_exp(TruncatedSeries([1, 1]))
    with pytest.raises(ValueError, match="constant term 1"):
        series_log(TruncatedSeries([2, 1]))


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.lists(fractions, min_size=15, max_size=15))
@settings(max_examples=40)
def test_exp_log_inverse(tail):
    s = TruncatedSeries([0] + tail)
    assert series_log(series_exp(s)) == s
    f = TruncatedSeries([1] + tail)
    assert series_exp(series_log(f)) == f


def test_series_min_order():
    a = TruncatedSeries([1, 2, 3])
    b = TruncatedSeries([1, 1])
    assert (a + b).order == 2
    assert (a * b).order == 2


# ---------------------------------------------------------------- matrices


def cofactor(M):
    n = len(M)
    if n == 0:
        return P(1)
    if n == 1:
        return M[0][0]
    total = P()
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        total = total + cofactor(sub) * M[0][j] * (-1) ** j
    return total


def test_det_examples():
    assert det_bareiss(TREFOIL_MINUS) == P(1, -1, 1)
    assert det_bareiss(i_minus_tg(K3)) == ONE_MINUS_T**4 == P(1, -4, 6, -4, 1)
    assert det_bareiss([[P(3, 1)]]) == P(3, 1)
    assert det_bareiss([]) == P(1)


def test_det_needs_pivoting():
    M = [[P(0), P(1)], [P(1), P(0)]]
    assert det_bareiss(M) == P(-1)
    singular = [[P(1, 1), P(2, 2)], [P(1), P(2)]]
    assert det_bareiss(singular) == P()


@st.composite
def poly_matrices(draw, max_size=4, max_degree=2):
    n = draw(st.integers(min_value=1, max_value=max_size))
    return [[draw(polys(max_degree=max_degree)) for _ in range(n)] for _ in range(n)]


@given(poly_matrices())
@settings(max_examples=60)
def test_det_matches_cofactor_oracle(M):
    assert det_bareiss(M) == cofactor(M)


@given(poly_matrices(max_size=3))
@settings(max_examples=25)
def test_det_matches_sympy(M):
    sm = sympy.Matrix([[to_sympy(x) for x in row] for row in M])
    assert det_bareiss(M) == from_sympy(sm.det(method="berkowitz"))


def test_adjugate_examples():
    I2 = [[P(1), P()], [P(), P(1)]]
    assert adjugate(I2) == I2
    assert adjugate(TREFOIL_MINUS) == [[P(1, -1), P(0, 1)], [P(0, -1), P(1)]]


@given(poly_matrices(max_size=6, max_degree=1))
@settings(max_examples=30, deadline=None)
def test_adjugate_laplace_identity(M):
    n = len(M)
    d = det_bareiss(M)
    assert poly_matmul(M, adjugate(M)) == [[d if i == j else P() for j in range(n)] for i in range(n)]
    assert poly_matmul(adjugate(M), M) == [[d if i == j else P() for j in range(n)] for i in range(n)]


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_characteristic_constant_term(G):
    assert det_bareiss(i_minus_tg(G))(0) == 1
