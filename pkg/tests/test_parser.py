"""Expression grammar for scalars, vectors and operator words."""
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qfock.coeff import ONE, LaurentPoly, qpow
from qfock.fock import FockVec, partition_head, partitions
from qfock.heisenberg import B
from qfock.parser import (Atom, OpIndexError, ParseError, Prod, Sum, apply_op, parse, parse_op,
                          parse_scalar, parse_vec)
from qfock.uq_fock import F, act_word

q = qpow(1)


class TestScalars:
    def test_canonical_text_round_trip(self):
        p = LaurentPoly({-2: -1, 0: 3, 4: Fraction(1, 2)})
        assert str(p) == "-1*q^-2 + 3 + 1/2*q^4"
        assert parse_scalar(str(p)) == p

    def test_arithmetic(self):
        assert parse_scalar("(q - q^-1)*(q + q^-1)") == qpow(2) - qpow(-2)
        assert parse_scalar("-3/4") == LaurentPoly({0: Fraction(-3, 4)})
        assert parse_scalar("2*q*q^-1 - 1") == ONE

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_scalar("1/0")

    @given(st.dictionaries(st.integers(-5, 5), st.fractions(-9, 9, max_denominator=5).filter(bool), max_size=4))
    def test_round_trip_property(self, terms):
        p = LaurentPoly(terms)
        assert parse_scalar(str(p)) == p


class TestVectors:
    def test_vacuum(self):
        assert parse_vec("vac(0)", 2) == FockVec.vacuum(2, 0)

    def test_trimming(self):
        assert parse_vec("u(1)^u(0)^vac(-1)", 2) == FockVec.vacuum(2, 1)
        # the tail below u(1) starts at u(-1), so u(0) is missing
        assert parse_vec("u(2)^u(1)^vac(-1)", 2) == FockVec(2, 1, {(2, 1): ONE})

    def test_straightened(self):
        v = parse_vec("u(0)^u(3)^vac(-2)", 2)
        assert v == FockVec(2, 0, {(3, 0): -q, (2, 1): qpow(2) - ONE})
        assert v.render() == "(-1*q)*u(3)^u(0)^vac(-2) + (-1 + q^2)*u(2)^u(1)^vac(-2)"

    def test_sum_and_scalars(self):
        v = parse_vec("(q^2 - 1)*vac(0) - 2*q*u(1)^vac(-1) + u(1)^vac(-1)", 2)
        assert v == FockVec(2, 0, {(): qpow(2) - ONE, (1,): ONE - q * 2})

    def test_charge_mismatch(self):
        with pytest.raises(ParseError):
            parse_vec("vac(0) + vac(1)", 2)

    @pytest.mark.parametrize("src", ["", "u(1)", "u(1)^", "vac(0)^u(1)", "vac(0", "2*", "E(0)*vac(0)",
                                     "vac(0)*vac(0)", "q", "u(1)^vac(0) +", "vac(x)", "vac(0) $"])
    def test_rejected(self, src):
        with pytest.raises(ParseError) as info:
            parse_vec(src, 2)
        assert 0 <= info.value.pos <= len(src)

    @given(st.integers(2, 3), st.integers(-3, 3), st.lists(
        st.tuples(st.integers(0, 6), st.integers(0, 10), st.dictionaries(
            st.integers(-3, 3), st.integers(-4, 4).filter(bool), min_size=1, max_size=3)),
        min_size=1, max_size=4))
    def test_render_round_trip(self, n, charge, raw):
        terms = {}
        for size, pick, coeff in raw:
            lams = list(partitions(size))
            terms[partition_head(lams[pick % len(lams)], charge)] = LaurentPoly(coeff)
        v = FockVec(n, charge, terms)
        if v:
            assert parse_vec(v.render(), n) == v


class TestOperators:
    def test_two_chains(self):
        node = parse_op("F(0)*F(1) - q*F(1)*F(0)", 2)
        assert isinstance(node, Sum) and len(node.terms) == 2
        assert all(isinstance(t, Prod) for _, t in node.terms)

    def test_heisenberg_atom(self):
        assert parse_op("B(-1)", 2) == Atom("B", (-1,), 0)

    def test_index_error(self):
        with pytest.raises(OpIndexError):
            parse_op("E(5)", 2)
        with pytest.raises(OpIndexError):
            parse_op("B(0)", 2)
        with pytest.raises(ParseError):
            parse_op("E(0)*vac(0)", 2)

    def test_right_factor_acts_first(self):
        v = FockVec.vacuum(2, 0)
        assert apply_op(parse_op("F(1)*F(0)", 2), v) == act_word([F(1), F(0)], v)
        assert apply_op(parse_op("F(1)*F(0)", 2), v)

    def test_evaluation(self):
        v = FockVec.vacuum(2, 0)
        assert apply_op(parse_op("F(0)*F(1) - q*F(1)*F(0)", 2), v) == act_word([F(1), F(0)], v).scale(-q)
        assert apply_op(parse_op("B(1)*B(-1)", 2), v) == v.scale(ONE + qpow(2))
        assert apply_op(parse_op("2*D + K(0)", 2), v) == v.scale(q)
        assert apply_op(parse_op("Omega(1, 0)", 2), v) == FockVec.vacuum(2, 1)
        assert apply_op(parse_op("(B(-1) - q^2*B(-1))", 2), v) == B(-1, v).scale(ONE - qpow(2))


VALID = ["u(0)^u(3)^vac(-2)", "(q^2 - 1)*vac(1) - q*u(4)^vac(0)", "F(0)*F(1) - q*F(1)*F(0)",
         "1/2*q^-3*Omega(2, -1)*B(-2)", "(E(0) + Kinv(1))*D"]


def _mutate(rng, s):
    alphabet = "uvacq()^*+-/,0123456789 EFKBDOmegainv$x"
    s = list(s)
    for _ in range(rng.randint(1, 4)):
        k = rng.randint(0, len(s))
        op = rng.random()
        if op < 0.4 and s:
            del s[min(k, len(s) - 1)]
        elif op < 0.8:
            s.insert(k, rng.choice(alphabet))
        elif s:
            s[min(k, len(s) - 1)] = rng.choice(alphabet)
    return "".join(s)


def test_fuzz_mutations_never_crash():
    rng = random.Random(2024)
    for _ in range(3000):
        src = _mutate(rng, rng.choice(VALID))
        for f in (lambda s: parse_vec(s, 2), lambda s: parse_op(s, 2), parse_scalar):
            try:
                f(src)
            except ParseError as e:
                assert e.message and 0 <= e.pos <= len(src)


def test_deep_nesting_is_diagnosed():
    with pytest.raises(ParseError):
        parse("(" * 5000 + "1" + ")" * 5000)


def test_valid_strings_accepted():
    assert parse_vec(VALID[0], 2) and parse_vec(VALID[1], 2)
    for src in VALID[2:]:
        parse_op(src, 2)
