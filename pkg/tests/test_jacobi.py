from fractions import Fraction

import pytest

from quasitrace.ahform import AHForm
from quasitrace.arith import GaussianRational
from quasitrace.jacobi import (
    completed_phi,
    phi_star_generating,
    theta_expansion,
    theta_quotient,
    verify_phi_completion,
    verify_theta_identity,
    verify_u_completion,
    verify_u_identity,
    verify_v_completion,
    verify_v_identity,
)
from quasitrace.qseries import QSeries
from quasitrace.wseries import WSeries


def test_wseries_examples():
    w = WSeries.w_power(1, 8)
    assert w / w == WSeries.constant(1, 7)
    assert WSeries({}, 6).exp() == WSeries.constant(1, 6)
    f = WSeries({1: 1, 3: 1}, 9)
    assert (f * w.invert()).truncate(6) == WSeries({0: 1, 2: 1}, 6)


def test_wseries_exp_log_pair():
    x = WSeries({1: 1}, 10)
    e = x.exp()
    for d in range(11):
        expected = Fraction(1, 1)
        for k in range(2, d + 1):
            expected /= k
        assert e.coeff(d) == AHForm([QSeries.constant(expected)])


def test_wseries_invert_needs_unit():
    with pytest.raises(ZeroDivisionError):
        WSeries({}, 5).invert()


def test_theta_leading_term_and_parity():
    th = theta_expansion(20, 9)
    assert th.coeff(0).is_zero()
    assert th.is_odd()
    lead = th.coeff(1).x_coeff(0)
    assert lead.offset == Fraction(1, 8)
    i = GaussianRational(0, 1)
    assert lead == QSeries({0: i, 1: -3 * i, 3: 5 * i, 6: -7 * i, 10: 9 * i, 15: -11 * i}, Fraction(1, 8), 20)


def test_phi_star_is_odd_with_growing_depth():
    phi = phi_star_generating(20, 9)
    assert phi.is_odd()
    assert [phi.coeff(d).depth for d in (1, 3, 5, 7, 9)] == [0, 1, 2, 3, 4]
    assert phi_star_generating(20, 9, completed=False).coeff(3).depth == 0


@pytest.mark.parametrize("verifier,args", [
    (verify_theta_identity, (30, 15)),
    (verify_u_identity, (30, 14)),
    (verify_v_identity, (30, 14)),
    (verify_v_completion, (30, 10)),
    (verify_u_completion, (30, 11)),
    (verify_phi_completion, (30, 9)),
])
def test_identities_small(verifier, args):
    rep = verifier(*args)
    assert rep.passed, rep.first_failure
    assert rep.checked_orders["q"] == args[0] - 1


def test_theta_quotient_removable():
    q = theta_quotient(20, 8)
    assert q.order == 0
    assert q.is_even()
    assert q.coeff(0) == AHForm([QSeries.constant(1, 20)])


def test_completed_phi_inverse_pair():
    phi = phi_star_generating(15, 9)
    assert completed_phi(completed_phi(phi, Fraction(3, 2)), Fraction(-3, 2)) == phi
    assert completed_phi(phi, 0) == phi


def test_report_names_first_mismatch():
    from quasitrace.report import VerificationReport

    a = WSeries({1: QSeries({0: 1, 3: 2}, 0, 10)}, 3)
    b = WSeries({1: QSeries({0: 1, 3: 5}, 0, 10)}, 3)
    rep = VerificationReport("demo").compare_wseries(a, b, 3).finish()
    assert rep.status == "fail"
    ff = rep.first_failure
    assert (ff["w"], ff["q"], ff["piDeg"], ff["x"]) == (1, 3, 0, 0)
