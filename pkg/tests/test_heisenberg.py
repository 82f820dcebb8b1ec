"""Heisenberg operators on the Fock spaces and on C[H_-]."""
import random

import pytest

from qfock.coeff import ONE, geometric, qpow
from qfock.fock import FockVec, wedge_prepend
from qfock.heisenberg import (B, HPoly, commutator, gamma, hB, random_vectors, verify_centralizer,
                              verify_commutes, verify_gamma, verify_hB_relations)

q = qpow(1)


def vac(m, n=2):
    return FockVec.vacuum(n, m)


def expected_b_minus_one(n):
    terms = {}
    for k in range(n):
        head = (n - k,) + tuple(range(0, -k, -1))
        terms[head] = (-q) ** k
    return FockVec(n, 0, terms)


class TestOnFock:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_creation_on_vacuum(self, n):
        assert B(-1, vac(0, n)) == expected_b_minus_one(n)

    def test_creation_n2_explicit(self):
        assert B(-1, vac(0)) == FockVec(2, 0, {(2,): ONE, (1, 0): -q})

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_gamma_one_computation(self, n):
        assert B(1, B(-1, vac(0, n))) == vac(0, n).scale(geometric(2, n))

    def test_annihilation_kills_vacuum(self):
        for n in (2, 3):
            for m in range(-2, 3):
                for a in (1, 2, 3):
                    assert not B(a, vac(m, n))

    def test_gamma_values(self):
        assert gamma(1, 2) == ONE + qpow(2)
        assert gamma(2, 2) == (ONE + qpow(4)) * 2
        assert gamma(2, 3) == (ONE + qpow(4) + qpow(8)) * 2
        for n in (2, 3, 4):
            assert gamma(1, n) == (ONE - qpow(2 * n)).exact_div(ONE - qpow(2))
        with pytest.raises(ValueError):
            gamma(1, 1)

    def test_zero_mode_rejected(self):
        with pytest.raises(ValueError):
            B(0, vac(0))

    def test_gamma_on_non_vacuum(self):
        v = FockVec(2, 0, {(2,): ONE})
        assert commutator(1, -1, v) == v.scale(gamma(1, 2))

    @pytest.mark.parametrize("a,m,n", [(1, 0, 2), (2, -1, 3), (3, 1, 2)])
    def test_verify_gamma(self, a, m, n):
        assert verify_gamma(a, m, n, samples=2).ok

    def test_cutoff_stability(self):
        for n in (2, 3):
            for v in random_vectors(n, 4, seed=5, max_size=4):
                for a in (1, -1, 2, -2):
                    K = max(len(h) for h in v.terms) + n * abs(a)
                    assert B(a, v, cutoff=K) == B(a, v, cutoff=K + n) == B(a, v)

    def test_prepend_commutator(self):
        rng = random.Random(8)
        for n in (2, 3):
            for v in random_vectors(n, 4, seed=9, max_size=3):
                u = rng.randint(-3, 4)
                for a in (1, -1, 2):
                    lhs = B(a, wedge_prepend(u, v)) - wedge_prepend(u, B(a, v))
                    assert lhs == wedge_prepend(u - n * a, v)

    def test_commuting_modes(self):
        assert verify_commutes(1, 2, samples=10, n=2).ok
        assert verify_commutes(-1, -2, samples=10, n=3).ok
        assert verify_commutes(2, -1, samples=10, n=2).ok

    @pytest.mark.parametrize("a", [1, -1, 2, -2])
    def test_centralizer(self, a):
        assert verify_centralizer(a, 2, samples=5).ok


class TestAbstractFock:
    def test_examples(self):
        assert hB(-2, HPoly.one(), 2) == HPoly.mode(2)
        for n in (2, 3):
            assert hB(1, HPoly.mode(1), n) == HPoly.one().scale(gamma(1, n))
            assert hB(1, HPoly.mode(1, 1), n) == HPoly.mode(1).scale(gamma(1, n) * 2)

    def test_relations(self):
        for n in (2, 3):
            assert verify_hB_relations(n, samples=8).ok
