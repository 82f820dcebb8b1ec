"""Wedging vertex operator and two-point functions."""
from fractions import Fraction

import pytest

from qfock.coeff import ONE, ZERO, LaurentPoly, PowerSeries, RationalFn, qpow, series_exp
from qfock.fock import FockVec
from qfock.heisenberg import gamma
from qfock.vertex import (CERTIFIED_DEGREE, UnstableTruncation, certified_degree, certify_phi,
                          exact_phi_log, extract_gamma_from_series, minimal_kmax, omega_mode,
                          omega_two_point, phi_two_point, verify_factorization, xi_sign,
                          xi_two_point)

q = qpow(1)


def rf(p):
    return RationalFn(LaurentPoly.coerce(p))


class TestOmegaModes:
    def test_next_vacuum(self):
        for m in range(-2, 3):
            assert omega_mode(m, 0, FockVec.vacuum(2, m - 1)) == FockVec.vacuum(2, m)

    def test_already_normal(self):
        assert omega_mode(1, -1, FockVec.vacuum(2, 0)) == FockVec(2, 1, {(3,): ONE})

    def test_straightened_prepend(self):
        v = omega_mode(-1, 0, FockVec(2, 0, {(2,): ONE}))
        assert v == FockVec.vacuum(2, 1).scale(qpow(2) - ONE)


class TestOmegaTwoPoint:
    @pytest.mark.parametrize("n", [2, 3])
    def test_closed_form(self, n):
        s = omega_two_point(0, 5, n).series
        assert s[0] == rf(ONE)
        assert s[1] == rf(qpow(2) - ONE)
        assert s[3] == rf(qpow(4) * (qpow(2) - ONE))
        assert all(s[b] == rf(qpow(2 * (b - 1)) * (qpow(2) - ONE)) for b in range(1, 6))

    def test_json(self):
        tp = omega_two_point(0, 2, 2)
        assert tp.to_json() == [[0, "1 / 1"], [1, "(-1 + q^2) / 1"], [2, "(-1*q^2 + q^4) / 1"]]


class TestPhi:
    def test_order_zero(self):
        assert phi_two_point(0, 2, 3).series == PowerSeries.one(0)

    @pytest.mark.parametrize("n,kmax", [(2, 3), (3, 2)])
    def test_first_coefficient(self, n, kmax):
        expected = sum((qpow(2 * n + 2 * n * k) - qpow(2 * n + 2 + 2 * n * k) for k in range(kmax + 1)), ZERO)
        assert phi_two_point(2, n, kmax).series[1] == rf(expected)

    def test_log_oracle(self):
        # the full product and its cut agree through the certified degree
        for n in (2, 3):
            kmax = minimal_kmax(4, n)
            cut = phi_two_point(4, n, kmax).series.log()
            full = exact_phi_log(4, n)
            for a in range(1, 5):
                assert cut[a].q_expansion(CERTIFIED_DEGREE) == full[a].q_expansion(CERTIFIED_DEGREE)

    def test_certificate_is_sharp(self):
        for n in (2, 3):
            k = minimal_kmax(6, n)
            assert certify_phi(6, n, k)
            assert not certify_phi(6, n, k - 1)
            assert certified_degree(n, k) >= CERTIFIED_DEGREE > certified_degree(n, k - 1)


class TestXi:
    @pytest.mark.parametrize("n", [2, 3])
    def test_low_orders(self, n):
        s = xi_two_point(3, n).series
        sigma = xi_sign(3, n)
        g1, g2 = rf(gamma(1, n)), rf(gamma(2, n))
        assert s[0] == rf(ONE)
        assert s[1] == g1.inverse() * sigma
        assert s[2] == g1.inverse() * g1.inverse() * Fraction(1, 2) + g2.inverse() * sigma

    @pytest.mark.parametrize("n", [2, 3])
    def test_matches_exponential_with_negative_sign(self, n):
        # <exp(-sum B_b x^b/g_b) exp(sum B_-b y^b/g_b)> = exp(-sum [B_b, B_-b] (xy)^b / g_b^2)
        order = 4
        ref = series_exp(PowerSeries([RationalFn(ZERO)] + [rf(gamma(a, n)).inverse() * -1 for a in range(1, order + 1)]))
        assert xi_two_point(order, n).series == ref
        assert xi_sign(order, n) == -1


class TestFactorization:
    def test_first_order(self):
        om, xi, ph = omega_two_point(0, 1, 2), xi_two_point(1, 2), phi_two_point(1, 2, minimal_kmax(1, 2))
        resid = om[1] - xi[1] - ph[1]
        assert not resid.q_expansion(CERTIFIED_DEGREE)
        assert verify_factorization(0, 1, 2).ok

    def test_orders(self):
        assert verify_factorization(0, 4, 2).ok
        assert verify_factorization(1, 3, 3).ok

    def test_unstable_cut(self):
        with pytest.raises(UnstableTruncation):
            verify_factorization(0, 2, 2, kmax=3)

    @pytest.mark.parametrize("n", [2, 3])
    def test_extract_gamma(self, n):
        gammas, sign = extract_gamma_from_series(3, n)
        assert gammas == [gamma(a, n) for a in range(1, 4)]
        assert sign == -1
        if n == 2:
            assert gammas[1] == (ONE + qpow(4)) * 2
            assert gammas[2] == (ONE + qpow(6)) * 3
