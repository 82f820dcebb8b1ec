"""Heisenberg operators ``B_a`` on the Fock spaces and on ``C[H_-]``.

``B_a`` is the limit of ``sum_k y_k^{-a}``.  Since ``y`` is multiplication by
``z^-1`` and ``u_{j-an} = z^a v_j``, ``y_k^{-a}`` moves slot ``k`` from ``u_m``
to ``u_{m-n*a}``.  Slots further than ``n*|a|`` past the head always produce a
repeated index inside a contiguous vacuum run, so the sum is finite.
"""
from __future__ import annotations

import random
from typing import Mapping

from .coeff import ONE, ZERO, LaurentPoly, geometric
from .evalmod import check_rank
from .fock import FockVec, extend, straighten
from .report import Report


def B(a: int, v: FockVec, cutoff: int | None = None) -> FockVec:
    if a == 0:
        raise ValueError("B_0 is not defined")
    n = v.n
    out = FockVec(n, v.charge)
    for h, c in v.terms.items():
        K = len(h) + n * abs(a) if cutoff is None else max(cutoff, len(h))
        word = extend(h, v.charge, K)
        for k in range(K):
            shifted = word[:k] + (word[k] - n * a,) + word[k + 1:]
            out = out + straighten(shifted, v.charge, n).scale(c)
    return out


def gamma(a: int, n: int) -> LaurentPoly:
    """``[B_a, B_-a] = a (1 - q^{2na}) / (1 - q^{2a})`` as a polynomial."""
    check_rank(n)
    if a < 1:
        raise ValueError("gamma needs a >= 1")
    return geometric(2 * a, n, a)


def commutator(a1: int, a2: int, v: FockVec) -> FockVec:
    return B(a1, B(a2, v)) - B(a2, B(a1, v))


def random_vectors(n: int, samples: int, seed: int, charge: int | None = None,
                   max_size: int = 5) -> list[FockVec]:
    from .uq_fock import random_fock_vector
    rng = random.Random(seed)
    return [random_fock_vector(rng, n, charge, max_size=max_size) for _ in range(samples)]


def verify_gamma(a: int, m: int, n: int, samples: int = 3, seed: int = 0) -> Report:
    if a < 1:
        raise ValueError("verify_gamma needs a >= 1")
    g = gamma(a, n)
    rep = Report(f"gamma a={a} m={m} n={n}")
    vac = FockVec.vacuum(n, m)
    rep.add("[B_a, B_-a]|m> = gamma_a |m>", commutator(a, -a, vac) == vac.scale(g), f"gamma={g}")
    vs = random_vectors(n, samples, seed, charge=m, max_size=4)
    rep.add("[B_a, B_-a] v = gamma_a v on random v", all(commutator(a, -a, v) == v.scale(g) for v in vs))
    return rep


def verify_commutes(a1: int, a2: int, samples: int = 10, n: int = 2, seed: int = 0) -> Report:
    if a1 + a2 == 0:
        raise ValueError("verify_commutes needs a1 + a2 != 0")
    rep = Report(f"[B_{a1}, B_{a2}] = 0 n={n}")
    vs = random_vectors(n, samples, seed)
    rep.add("commutator vanishes", all(not commutator(a1, a2, v) for v in vs))
    return rep


def verify_centralizer(a: int, n: int, samples: int = 10, seed: int = 0) -> Report:
    from .uq_fock import D, E, F, K, act
    rep = Report(f"centralizer a={a} n={n}")
    vs = random_vectors(n, samples, seed)
    for g in [E(i) for i in range(n)] + [F(i) for i in range(n)] + [K(i) for i in range(n)]:
        rep.add(f"[B_{a}, {g}] = 0", all(B(a, act(g, v)) == act(g, B(a, v)) for v in vs))
    rep.add(f"[d, B_{a}] = {a} B_{a}",
            all(act(D, B(a, v)) - B(a, act(D, v)) == B(a, v).scale(a) for v in vs))
    return rep


# -- the abstract Heisenberg Fock space C[H_-] ----------------------------------


class HPoly:
    """Polynomial in the creation modes ``b_-1, b_-2, ...``.

    Keys are partitions (weakly decreasing tuples of positive mode numbers);
    ``()`` is the vacuum ``1``.  Coefficients may be LaurentPoly or RationalFn.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        self.terms = {}
        for k, c in (terms or {}).items():
            if c:
                self.terms[tuple(sorted(k, reverse=True))] = c

    @classmethod
    def one(cls) -> "HPoly":
        return cls({(): ONE})

    @classmethod
    def mode(cls, *modes: int) -> "HPoly":
        return cls({tuple(modes): ONE})

    def __add__(self, other: "HPoly") -> "HPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return HPoly(out)

    def __neg__(self) -> "HPoly":
        return HPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def scale(self, c) -> "HPoly":
        return HPoly({k: c * x for k, x in self.terms.items()})

    def vacuum_coeff(self):
        return self.terms.get((), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "HPoly(0)"
        parts = []
        for k, c in sorted(self.terms.items()):
            mono = "*".join(f"b({-p})" for p in k) or "1"
            parts.append(f"({c})*{mono}")
        return "HPoly(" + " + ".join(parts) + ")"


def hB(a: int, p: HPoly, n: int) -> HPoly:
    """``B_a`` on ``C[H_-]``: multiplication for ``a < 0``, ``gamma_a d/db_-a`` for ``a > 0``."""
    if a == 0:
        raise ValueError("B_0 is not defined")
    out: dict[tuple, object] = {}
    if a < 0:
        for k, c in p.terms.items():
            key = tuple(sorted(k + (-a,), reverse=True))
            out[key] = out[key] + c if key in out else c
        return HPoly(out)
    g = gamma(a, n)
    for k, c in p.terms.items():
        mult = k.count(a)
        if not mult:
            continue
        lst = list(k)
        lst.remove(a)
        key = tuple(lst)
        val = c * g * mult
        out[key] = out[key] + val if key in out else val
    return HPoly(out)


def verify_hB_relations(n: int, samples: int = 10, seed: int = 0, max_mode: int = 3) -> Report:
    """``[B_a, B_b] = delta_{a+b,0} gamma_a`` on random HPoly."""
    rng = random.Random(seed)
    polys = []
    for _ in range(samples):
        terms = {}
        for _ in range(3):
            k = tuple(rng.randint(1, max_mode) for _ in range(rng.randint(0, 4)))
            terms[tuple(sorted(k, reverse=True))] = LaurentPoly({rng.randint(-1, 2): rng.choice([-1, 1, 2])})
        polys.append(HPoly(terms))
    rep = Report(f"Heisenberg relations on C[H_-] n={n}")
    modes = [a for a in range(-max_mode, max_mode + 1) if a]
    ok = True
    for a in modes:
        for b in modes:
            for p in polys:
                lhs = hB(a, hB(b, p, n), n) - hB(b, hB(a, p, n), n)
                rhs = p.scale(gamma(a, n)) if a + b == 0 and a > 0 else (
                    p.scale(-gamma(b, n)) if a + b == 0 else HPoly())
                ok &= lhs == rhs
    rep.add("[B_a, B_b] = delta_{a+b,0} gamma_a", ok)
    rep.add("B_a 1 = 0 for a >= 1", all(not hB(a, HPoly.one(), n) for a in range(1, max_mode + 1)))
    return rep
