"""Chevalley generators on the Fock spaces and singular vectors."""
import random

import pytest

from qfock.coeff import ONE, qpow
from qfock.fock import FockVec, enumerate_basis, partition_count, weight_of
from qfock.heisenberg import B
from qfock.uq_fock import (E, F, K, Kinv, act, act_word, cartan_entry, random_fock_vector,
                           singular_vectors, verify_defining_relations, weight_component)

q = qpow(1)


def vac(m, n=2):
    return FockVec.vacuum(n, m)


class TestVacuumActions:
    def test_e_kills_vacuum(self):
        for n in (2, 3):
            for m in range(-2, 3):
                assert all(not act(E(i), vac(m, n)) for i in range(n))

    def test_f_on_vacuum(self):
        assert act(F(0), vac(0)) == FockVec(2, 0, {(1,): ONE})
        assert not act(F(1), vac(0))

    def test_k_on_vacuum(self):
        assert act(K(0), vac(0)) == vac(0).scale(q)
        assert act(K(1), vac(0)) == vac(0)
        assert act(Kinv(0), vac(0)) == vac(0).scale(qpow(-1))

    def test_empty_word(self):
        v = FockVec(2, 0, {(2,): q})
        assert act_word([], v) == v

    def test_index_guard(self):
        with pytest.raises(ValueError):
            act(E(2), vac(0))


class TestStructure:
    @pytest.mark.parametrize("n", [2, 3])
    def test_truncation_independence(self, n):
        rng = random.Random(11)
        for _ in range(6):
            v = random_fock_vector(rng, n, max_size=4)
            N = max((len(h) for h in v.terms), default=0) + 1
            for g in [E(i) for i in range(n)] + [F(i) for i in range(n)] + [K(i) for i in range(n)]:
                r = act(g, v, N)
                assert r == act(g, v, N + 1) == act(g, v, N + 2)

    @pytest.mark.parametrize("n", [2, 3])
    def test_weight_covariance(self, n):
        for m in (-1, 0, 1):
            for size in range(4):
                for b in enumerate_basis(m, size):
                    w0 = weight_of(b.head, m, n)
                    v = FockVec(n, m, {b.head: ONE})
                    for i in range(n):
                        alpha = [cartan_entry(j, i, n) for j in range(n)]
                        for X, sgn in ((E, 1), (F, -1)):
                            for h in act(X(i), v).terms:
                                w = weight_of(h, m, n)
                                assert list(w.kexp) == [a + sgn * c for a, c in zip(w0.kexp, alpha)]
                                assert w.ddeg == w0.ddeg + sgn * (i == 0)

    @pytest.mark.parametrize("n", [2, 3])
    def test_defining_relations(self, n):
        assert verify_defining_relations(n, samples=10, seed=3).ok

    def test_commutes_with_heisenberg(self):
        rng = random.Random(4)
        for _ in range(4):
            v = random_fock_vector(rng, 2, max_size=3)
            for g in (E(0), E(1), F(0), F(1), K(0)):
                for a in (1, -1):
                    assert act(g, B(a, v)) == B(a, act(g, v))


class TestHighestWeight:
    def test_lowering_combination(self):
        v = act_word([F(0), F(1)], vac(0)) - act_word([F(1), F(0)], vac(0)).scale(q)
        assert v
        assert v.charge == 0
        # F_1 |0> = 0, so only -q F_1 F_0 |0> survives
        assert v == act_word([F(1), F(0)], vac(0)).scale(-q)

    def test_e0_annihilates_lowering_combination(self):
        v = act_word([F(0), F(1)], vac(0)) - act_word([F(1), F(0)], vac(0)).scale(q)
        assert not act(E(0), v)

    def test_e1_does_not_annihilate_lowering_combination(self):
        # E_1 F_1 F_0 |0> = [2] F_0 |0>: the vector lies in the irreducible
        # module generated by |0>, whose only singular vector is |0>
        v = act_word([F(0), F(1)], vac(0)) - act_word([F(1), F(0)], vac(0)).scale(q)
        assert act(E(1), v) == act(F(0), vac(0)).scale(-q - qpow(-1)).scale(q)

    def test_degree_one_singular_vector_is_heisenberg(self):
        dim, (s,) = singular_vectors(0, 1, 2)
        assert dim == 1
        assert s == B(-1, vac(0))


class TestSingular:
    @pytest.mark.parametrize("n,depth", [(2, 4), (3, 3)])
    def test_dimensions_are_partition_numbers(self, n, depth):
        for a in range(depth + 1):
            dim, basis = singular_vectors(0, a, n)
            assert dim == partition_count(a)
            for v in basis:
                assert all(not act(E(i), v) for i in range(n))

    def test_component_uses_boxes_of_every_residue(self):
        for a in range(3):
            for h in weight_component(0, a, 2):
                w = weight_of(h, 0, 2)
                assert w.ddeg == -a

    def test_ground_state(self):
        dim, (v,) = singular_vectors(0, 0, 2)
        assert dim == 1 and set(v.terms) == {()}

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            singular_vectors(0, -1, 2)
