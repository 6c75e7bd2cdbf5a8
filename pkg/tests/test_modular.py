import math
from fractions import Fraction

import pytest

from quasitrace.ahform import AHForm, lowering, tau_bar_limit
from quasitrace.arith import GaussianRational, divisor_sum
from quasitrace.modular import (
    dedekind_eta,
    dedekind_eta_cubed,
    eisenstein_E,
    eisenstein_G,
    ek_lambda,
    g2_hat,
    u_hat,
    v_hat,
)
from quasitrace.qseries import PiScalar, QSeries
from quasitrace.traces import ramanujan_U, ramanujan_V

N = 40


def pi(p, c=1):
    return PiScalar.pi_power(p, c)


def test_G_examples():
    assert eisenstein_G(2, 3) == QSeries({0: Fraction(-1, 12), 1: 2, 2: 6}, 0, 3)
    assert eisenstein_G(4, 2) == QSeries({0: Fraction(1, 120), 1: 2}, 0, 2)


def test_E_examples():
    assert eisenstein_E(2, 4) == QSeries([1, -24, -72, -96], 0, 4)
    assert eisenstein_E(4, 3) == QSeries([1, 240, 2160], 0, 3)


@pytest.mark.parametrize("k,c", [(4, 240), (6, -504), (8, 480), (10, -264)])
def test_E_against_divisor_sums(k, c):
    ref = QSeries({0: 1, **{n: c * divisor_sum(k - 1, n) for n in range(1, N)}}, 0, N)
    assert eisenstein_E(k, N) == ref


def test_E4_squared_is_E8():
    assert eisenstein_E(4, N) ** 2 == eisenstein_E(8, N)
    assert eisenstein_E(4, N) * eisenstein_E(6, N) == eisenstein_E(10, N)


def test_odd_weight_rejected():
    with pytest.raises(ValueError):
        eisenstein_G(3, 5)
    with pytest.raises(ValueError):
        eisenstein_E(0, 5)


def test_eta_pentagonal_theorem():
    eta = dedekind_eta(N)
    assert eta.offset == Fraction(1, 24)
    ref = {}
    for k in range(-10, 11):
        e = k * (3 * k - 1) // 2
        if e < N:
            ref[e] = (-1) ** abs(k)
    assert eta == QSeries(ref, Fraction(1, 24), N)


def test_eta_cubed_jacobi_identity():
    f = dedekind_eta_cubed(N)
    assert f.offset == Fraction(1, 8)
    ref = {k * (k + 1) // 2: (-1) ** k * (2 * k + 1) for k in range(12) if k * (k + 1) // 2 < N}
    assert f == QSeries(ref, Fraction(1, 8), N)
    assert f == dedekind_eta(N) ** 3


def test_g2_hat():
    g = g2_hat(N)
    assert g.depth == 1
    assert g.x_coeff(1) == QSeries.constant(pi(-1, Fraction(1, 4)))
    assert g.x_coeff(0).coeff(0) == PiScalar.coerce(Fraction(-1, 12))
    assert lowering(g) == AHForm([QSeries.constant(pi(-1, Fraction(-1, 4)))])
    assert tau_bar_limit(g) == eisenstein_G(2, N)


def test_lowering_examples():
    f = eisenstein_E(4, N)
    assert lowering(AHForm([f])).is_zero()
    assert lowering(AHForm([QSeries.zero(N), f])) == AHForm([-f])
    x3 = AHForm([QSeries.zero(N)] * 3 + [f])
    assert lowering(x3) == AHForm([QSeries.zero(N)] * 2 + [f * (-3)])


def test_e0_e1():
    assert ek_lambda(0, N) == AHForm([QSeries.constant(1)])
    e1 = ek_lambda(1, N)
    # e_1 = -2 pi^2 G2^
    assert e1.x_coeff(0) == eisenstein_G(2, N).scale(pi(2, -2))
    assert e1.x_coeff(1) == QSeries.constant(pi(1, Fraction(-1, 2)))


def test_e2_by_newton_identity():
    # e_2 = (p_1^2 - p_2)/2 with p_1 = (2 pi i)^2 G2^ / 2, p_2 = (2 pi i)^4 G4 / (2 * 3!)
    two_pi_i_sq = pi(2, -4)
    p1 = g2_hat(N) * (two_pi_i_sq * Fraction(1, 2))
    p2 = AHForm([eisenstein_G(4, N).scale(two_pi_i_sq * two_pi_i_sq * Fraction(1, 12))])
    assert ek_lambda(2, N) == (p1 * p1 - p2) * Fraction(1, 2)


@pytest.mark.parametrize("k", range(1, 5))
def test_ek_lowering_and_depth(k):
    e = ek_lambda(k, N)
    assert e.depth == k
    assert lowering(e) == ek_lambda(k - 1, N) * pi(1, Fraction(1, 2))


def test_hat_base_values():
    assert u_hat(0, N) == AHForm([QSeries.constant(pi(1, GaussianRational(0, 2)))])
    assert v_hat(0, N) == AHForm([QSeries.constant(1)])
    with pytest.raises(ValueError):
        u_hat(3, N)
    with pytest.raises(ValueError):
        v_hat(-2, N)


@pytest.mark.parametrize("n", range(1, 5))
def test_hat_recursions(n):
    assert lowering(u_hat(2 * n, N)) == u_hat(2 * n - 2, N) * pi(1, Fraction(-1, 2))
    assert lowering(v_hat(2 * n, N)) == v_hat(2 * n - 2, N) * pi(1, Fraction(-3, 2))


@pytest.mark.parametrize("n", range(0, 5))
def test_hat_leading_coefficients(n):
    u, v = u_hat(2 * n, N), v_hat(2 * n, N)
    assert u.depth == n and v.depth == n
    lead_v = pi(n, Fraction(3 ** n, 2 ** n * math.factorial(n)))
    assert v.x_coeff(n) == QSeries.constant(lead_v)
    # Pi-degree n+1, from the defining sum
    lead_u = pi(n + 1, GaussianRational(0, Fraction(2, 2 ** n * math.factorial(n))))
    assert u.x_coeff(n) == QSeries.constant(lead_u)


@pytest.mark.parametrize("n", range(0, 5))
def test_tau_bar_limits(n):
    ipi = pi(1, GaussianRational(0, 1))
    lim_u = ramanujan_U(2 * n, N).scale(ipi ** (2 * n + 1) * Fraction(2, math.factorial(2 * n + 1)))
    lim_v = ramanujan_V(2 * n, N).scale(ipi ** (2 * n) * Fraction(1, math.factorial(2 * n)))
    assert tau_bar_limit(u_hat(2 * n, N)) == lim_u
    assert tau_bar_limit(v_hat(2 * n, N)) == lim_v


def test_nilpotency():
    for f in [g2_hat(N), ek_lambda(3, N), u_hat(6, N), v_hat(6, N)]:
        g = f
        for _ in range(f.depth):
            g = lowering(g)
        assert not g.is_zero()
        assert lowering(g).is_zero()


def test_ahform_json_round_trip():
    f = u_hat(4, 10)
    assert AHForm.from_json(f.to_json()) == f
