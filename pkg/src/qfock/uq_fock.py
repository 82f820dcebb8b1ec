"""Chevalley generators and ``d`` acting on the Fock spaces.

A basis wedge with head of length ``L`` is written as ``v^(N) ^ |m-N>`` for
some ``N >= L`` (explicit vacuum entries pad the head).  ``E_i`` and ``F_i``
then act through the iterated coproduct on the ``N`` explicit slots, and on
the tail through the vacuum rules: ``E_i |c> = 0``, ``F_i |c> = u_{c+1} ^ |c-1>``
when ``i = c mod n``, and ``K_i |c> = q^{[i = c mod n]} |c>``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .coeff import ONE, ZERO, LaurentPoly, RationalFn, clear_denominators, matrix_kernel, qint, qpow
from .evalmod import check_rank, gen_on_u, kexp
from .fock import (FockVec, enumerate_basis, extend, kexp_of_vacuum, partitions, partition_head,
                   straighten, vacuum_degree, vacuum_kexp, weight_of)
from .report import Report


@dataclass(frozen=True)
class Gen:
    """Generator tag: ``name`` in E, F, K, Kinv, d and an index (None for d)."""
    name: str
    index: int | None = None

    def __str__(self) -> str:
        return "d" if self.name == "d" else f"{self.name}({self.index})"


def _check_gen(g: Gen, n: int) -> None:
    if g.name == "d":
        return
    if g.name not in ("E", "F", "K", "Kinv"):
        raise ValueError(f"unknown generator {g.name!r}")
    if g.index is None or not 0 <= g.index < n:
        raise ValueError(f"generator index {g.index} out of range 0..{n - 1}")


def _act_basis(g: Gen, head: tuple, charge: int, n: int, N: int) -> FockVec:
    i = g.index
    word = extend(head, charge, N)
    tail = charge - N
    if g.name == "d":
        dd = weight_of(head, charge, n).ddeg
        return FockVec(n, charge, {head: LaurentPoly.const(dd)} if dd else {})
    if g.name in ("K", "Kinv"):
        e = sum(kexp(i, x, n) for x in word) + kexp_of_vacuum(i, tail, n)
        return FockVec(n, charge, {head: qpow(e if g.name == "K" else -e)})
    out = FockVec(n, charge)
    if g.name == "E":
        right = kexp_of_vacuum(i, tail, n)
        for k in range(N - 1, -1, -1):
            for x, c in gen_on_u("E", i, word[k], n).items():
                out = out + straighten(word[:k] + (x,) + word[k + 1:], charge, n).scale(c * qpow(right))
            right += kexp(i, word[k], n)
        return out
    # F: K_i^{-1} on everything to the left, including the whole head for the tail term
    left = 0
    for k in range(N):
        for x, c in gen_on_u("F", i, word[k], n).items():
            out = out + straighten(word[:k] + (x,) + word[k + 1:], charge, n).scale(c * qpow(-left))
        left += kexp(i, word[k], n)
    if (tail - i) % n == 0:
        out = out + straighten(word + (tail + 1,), charge, n).scale(qpow(-left))
    return out


def act(g: Gen, v: FockVec, N: int | None = None) -> FockVec:
    """Apply one generator; ``N`` defaults to the longest head plus one."""
    _check_gen(g, v.n)
    longest = max((len(h) for h in v.terms), default=0)
    if N is None:
        N = longest + 1
    elif N < longest:
        raise ValueError(f"truncation N={N} shorter than a head of length {longest}")
    out = FockVec(v.n, v.charge)
    for h, c in v.terms.items():
        out = out + _act_basis(g, h, v.charge, v.n, N).scale(c)
    return out


def act_word(word: Sequence[Gen], v: FockVec) -> FockVec:
    """Apply ``word[0] word[1] ... word[-1]`` to ``v``; the rightmost factor acts first."""
    for g in reversed(word):
        v = act(g, v)
    return v


def E(i): return Gen("E", i)
def F(i): return Gen("F", i)
def K(i): return Gen("K", i)
def Kinv(i): return Gen("Kinv", i)
D = Gen("d")


# -- relations -----------------------------------------------------------------


def cartan_entry(i: int, j: int, n: int) -> int:
    if i == j:
        return 2
    if n == 2:
        return -2
    if (i - j) % n in (1, n - 1):
        return -1
    return 0


def random_fock_vector(rng: random.Random, n: int, charge: int | None = None,
                       max_size: int = 6, terms: int = 3) -> FockVec:
    if charge is None:
        charge = rng.randint(-2, 2)
    out = FockVec(n, charge)
    for _ in range(terms):
        s = rng.randint(0, max_size)
        lams = list(partitions(s))
        lam = rng.choice(lams)
        c = LaurentPoly({rng.randint(-2, 2): rng.choice([-2, -1, 1, 2, 3])})
        out = out + FockVec(n, charge, {partition_head(lam, charge): c})
    return out


def _word(*gens: Gen):
    return lambda v: act_word(gens, v)


def verify_defining_relations(n: int, samples: int = 10, seed: int = 0) -> Report:
    check_rank(n)
    rng = random.Random(seed)
    vs = [random_fock_vector(rng, n) for _ in range(samples)]
    rep = Report(f"defining relations n={n}")

    def holds(f) -> bool:
        return all(not f(v) for v in vs)

    idx = range(n)
    rep.add("K_i K_j = K_j K_i",
            all(holds(lambda v: act_word([K(i), K(j)], v) - act_word([K(j), K(i)], v)) for i in idx for j in idx))
    rep.add("K_i Kinv_i = 1", all(holds(lambda v: act_word([K(i), Kinv(i)], v) - v) for i in idx))
    rep.add("K_i E_j = q^a_ij E_j K_i",
            all(holds(lambda v: act_word([K(i), E(j)], v) - act_word([E(j), K(i)], v).scale(qpow(cartan_entry(i, j, n))))
                for i in idx for j in idx))
    rep.add("K_i F_j = q^-a_ij F_j K_i",
            all(holds(lambda v: act_word([K(i), F(j)], v) - act_word([F(j), K(i)], v).scale(qpow(-cartan_entry(i, j, n))))
                for i in idx for j in idx))

    def cartan_term(i, v):
        # (K_i - K_i^-1)/(q - q^-1) on a weight vector is the quantum integer of its K-exponent
        out = FockVec(v.n, v.charge)
        for h, c in v.terms.items():
            k = weight_of(h, v.charge, n).kexp[i]
            out = out + FockVec(v.n, v.charge, {h: c * qint(k)})
        return out

    rep.add("E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(q - q^-1)",
            all(holds(lambda v: act_word([E(i), F(j)], v) - act_word([F(j), E(i)], v)
                      - (cartan_term(i, v) if i == j else FockVec(n, v.charge)))
                for i in idx for j in idx))

    far = [(i, j) for i in idx for j in idx if i != j and (i - j) % n not in (1, n - 1)]
    rep.add("E_i E_j = E_j E_i (non-adjacent)",
            all(holds(lambda v: act_word([E(i), E(j)], v) - act_word([E(j), E(i)], v)) for i, j in far) if far else None)
    rep.add("F_i F_j = F_j F_i (non-adjacent)",
            all(holds(lambda v: act_word([F(i), F(j)], v) - act_word([F(j), F(i)], v)) for i, j in far) if far else None)

    adj = [(i, j) for i in idx for j in idx if i != j and (i - j) % n in (1, n - 1)]
    for X, name in ((E, "E"), (F, "F")):
        if n == 2:
            t3 = qint(3)
            ok = all(holds(lambda v: act_word([X(i)] * 3 + [X(j)], v)
                           - act_word([X(i)] * 2 + [X(j), X(i)], v).scale(t3)
                           + act_word([X(i), X(j)] + [X(i)] * 2, v).scale(t3)
                           - act_word([X(j)] + [X(i)] * 3, v))
                     for i, j in adj)
            rep.add(f"quartic q-Serre in {name}", ok)
        else:
            t2 = qint(2)
            ok = all(holds(lambda v: act_word([X(i), X(i), X(j)], v)
                           - act_word([X(i), X(j), X(i)], v).scale(t2)
                           + act_word([X(j), X(i), X(i)], v))
                     for i, j in adj)
            rep.add(f"cubic q-Serre in {name}", ok)

    rep.add("[d, K_i] = 0", all(holds(lambda v: act_word([D, K(i)], v) - act_word([K(i), D], v)) for i in idx))
    rep.add("[d, E_i] = delta_i0 E_i",
            all(holds(lambda v: act_word([D, E(i)], v) - act_word([E(i), D], v)
                      - (act(E(i), v) if i == 0 else FockVec(n, v.charge))) for i in idx))
    rep.add("[d, F_i] = -delta_i0 F_i",
            all(holds(lambda v: act_word([D, F(i)], v) - act_word([F(i), D], v)
                      + (act(F(i), v) if i == 0 else FockVec(n, v.charge))) for i in idx))
    return rep


# -- singular vectors ------------------------------------------------------------


def weight_component(m: int, a: int, n: int) -> list[tuple]:
    """Heads of charge ``m`` with weight ``Lambda_m - a*delta``.

    Such a weight needs ``a`` boxes of every residue, so only partitions of
    ``n*a`` can contribute.
    """
    target_k = vacuum_kexp(m, n)
    target_d = vacuum_degree(m, n) - a
    out = []
    for wh in enumerate_basis(m, n * a):
        w = weight_of(wh.head, m, n)
        if w.kexp == target_k and w.ddeg == target_d:
            out.append(wh.head)
    return out


def singular_vectors(m: int, a: int, n: int) -> tuple[int, list[FockVec]]:
    """Exact basis of ``{v : E_i v = 0 for all i}`` in the weight ``Lambda_m - a*delta`` component."""
    if a < 0:
        raise ValueError("a must be non-negative")
    check_rank(n)
    cols = weight_component(m, a, n)
    rows: dict[tuple, list] = {}
    for c, h in enumerate(cols):
        b = FockVec(n, m, {h: ONE})
        for i in range(n):
            for h2, x in act(E(i), b).terms.items():
                rows.setdefault((i, h2), [ZERO] * len(cols))[c] = x
    if not rows:
        kernel = [[RationalFn(ONE) if r == c else RationalFn(ZERO) for r in range(len(cols))]
                  for c in range(len(cols))]
    else:
        kernel = matrix_kernel([rows[k] for k in sorted(rows)])
    basis = []
    for vec in kernel:
        coeffs = clear_denominators(vec)
        v = FockVec(n, m, {h: c for h, c in zip(cols, coeffs)})
        # scale by a signed monomial so the leading coefficient starts with +q^0
        lead = v.sorted_terms()[0][1]
        e = lead.valuation()
        basis.append(v.scale(qpow(-e) * (1 if lead.coeff(e) > 0 else -1)))
    return len(basis), basis
