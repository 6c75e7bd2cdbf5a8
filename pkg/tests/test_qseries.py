from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quasitrace.arith import GaussianRational, divisor_sum
from quasitrace.modular import eisenstein_G
from quasitrace.qseries import PiScalar, QSeries, q_monomial


def series(coeffs, prec=None, offset=0):
    return QSeries(dict(enumerate(coeffs)), offset, prec)


def coeff_list(f, n):
    return [f.coeff(k) for k in range(n)]


def newton_log(f, prec):
    # log(f) for f = 1 + O(q): solve exp(g) = f by Newton steps g <- g + f*exp(-g) - 1
    g = QSeries.zero(prec)
    for _ in range(8):
        e = g.exp_series(prec)
        g = (g + f * e.invert() - 1).truncate(prec)
    return g


def test_difference_of_squares():
    assert series([1, 1]) * series([1, -1]) == series([1, 0, -1])


def test_offsets_add_under_multiplication():
    a = QSeries({0: 1}, Fraction(1, 24), 10)
    b = QSeries({0: 1}, Fraction(1, 8), 10)
    assert (a * b).offset == Fraction(1, 6)


def test_offsets_must_be_congruent_for_addition():
    a = QSeries({0: 1}, Fraction(1, 24), 10)
    b = QSeries({0: 1}, 0, 10)
    with pytest.raises(ValueError):
        a + b
    c = QSeries({0: 1}, Fraction(25, 24), 10)
    assert (a + c).offset == Fraction(1, 24)


def test_offset_denominator_limited_to_24():
    with pytest.raises(ValueError):
        QSeries({0: 1}, Fraction(1, 5), 3)


def test_g2_from_divisor_sums():
    N = 30
    s = QSeries({n: divisor_sum(1, n) for n in range(1, N)}, 0, N)
    assert s * 2 + Fraction(-1, 12) == eisenstein_G(2, N)


def test_invert_geometric():
    inv = series([1, -1], prec=20).invert()
    assert coeff_list(inv, 20) == [1] * 20


def test_invert_long_division():
    f = QSeries({0: 1, 1: -3, 3: 5, 6: -7}, 0, 12)
    g = f.invert()
    assert g.coeff(1) == 3
    assert (f * g) == QSeries.constant(1, 12)
    # long division oracle
    b = [Fraction(1)]
    a = {1: -3, 3: 5, 6: -7}
    for n in range(1, 12):
        b.append(-sum(c * b[n - i] for i, c in a.items() if i <= n))
    assert coeff_list(g, 12) == b


def test_invert_involution():
    f = series([1, 2], prec=15)
    assert f.invert().invert() == f


def test_invert_rejects_non_units():
    with pytest.raises(ZeroDivisionError):
        QSeries.zero(5).invert()
    mixed = QSeries({0: PiScalar({0: 1, 1: 1})}, 0, 5)
    with pytest.raises(ZeroDivisionError):
        mixed.invert()


def test_exp_small_cases():
    assert QSeries.zero(10).exp_series() == QSeries.constant(1, 10)
    e = q_monomial(1, 1, 4).exp_series()
    assert coeff_list(e, 4) == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series([1, 1], prec=5).exp_series()


def test_exp_of_log():
    N = 25
    f = series([1, 1], prec=N)
    g = newton_log(f, N)
    # log(1+q) = sum (-1)^(n+1) q^n / n
    assert coeff_list(g, 8) == [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, 8)]
    assert g.exp_series() == f


def test_pi_grading():
    a = PiScalar.pi_power(2, 3)
    b = PiScalar.pi_power(-1, Fraction(1, 2))
    assert a * b == PiScalar.pi_power(1, Fraction(3, 2))
    assert (a + b).degrees() == [-1, 2]
    assert (a - a).is_zero()
    assert abs(PiScalar.pi_power(1).evaluate() - 3.141592653589793) < 1e-15


def test_json_round_trip():
    f = QSeries({0: PiScalar({1: GaussianRational(0, 2)}), 3: Fraction(-5, 7)}, Fraction(1, 8), 9)
    g = QSeries.from_json(f.dumps())
    assert g == f
    assert g.prec == 9 and g.offset == Fraction(1, 8)
    assert f.to_json()["offset"] == "1/8"


def test_equality_respects_offset():
    a = QSeries({0: 1}, Fraction(1, 8), 5)
    b = QSeries({0: 1}, Fraction(9, 8), 5)
    assert a != b


# -- randomized properties ----------------------------------------------------

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
gauss = st.builds(GaussianRational, small, small)


@st.composite
def qseries(draw, prec=40, min_val=0):
    n = draw(st.integers(1, 8))
    coeffs = {}
    for _ in range(n):
        k = draw(st.integers(min_val, prec - 1))
        coeffs[k] = PiScalar({draw(st.integers(-2, 2)): draw(gauss)})
    return QSeries(coeffs, 0, prec)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(qseries(), qseries(), qseries())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QSeries.zero(40)
    assert a * 1 == a


@settings(max_examples=60, derandomize=True, deadline=None)
@given(qseries(prec=30), qseries(prec=20))
def test_precision_tracking(a, b):
    prod = a * b
    va, vb = a.valuation, b.valuation
    bound = min(a.prec + vb, b.prec + va)
    assert prod.prec <= bound
    # every coefficient below the reported precision matches the exact product
    exact = QSeries(dict(a.items()), 0) * QSeries(dict(b.items()), 0)
    for n in range(prod.prec):
        assert prod.coeff(n) == exact.coeff(n)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(qseries(prec=15, min_val=1), qseries(prec=15, min_val=1))
def test_exp_is_a_homomorphism(a, b):
    assert (a + b).exp_series() == a.exp_series() * b.exp_series()
