"""Brute-force finite-N oracle on V(z)^{(x)N}.

Tensors are dicts from N-tuples of ``u``-indices to LaurentPoly.  The quantum
algebra acts on the left through the iterated coproduct, the affine Hecke
algebra on the right: ``y_j`` multiplies slot ``j`` by ``z^-1`` (index shift
``+n``) and ``T_i`` follows the three-case divided-difference formula.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .coeff import ONE, ZERO, LaurentPoly, qpow
from .evalmod import check_rank, decompose, gen_on_u, kexp
from .fock import normal_order
from .report import Report

MAX_ANTISYM_N = 6

_Q2_MINUS_1 = LaurentPoly({2: 1, 0: -1})


class TensorVec:
    __slots__ = ("n", "N", "terms")

    def __init__(self, n: int, N: int, terms: Mapping[tuple, LaurentPoly] | None = None):
        self.n = n
        self.N = N
        self.terms = {}
        for t, c in (terms or {}).items():
            if len(t) != N:
                raise ValueError(f"tuple {t} does not have length {N}")
            c = LaurentPoly.coerce(c)
            if c:
                self.terms[tuple(t)] = c

    @classmethod
    def pure(cls, n: int, *indices: int) -> "TensorVec":
        return cls(n, len(indices), {tuple(indices): ONE})

    def _new(self, terms) -> "TensorVec":
        v = TensorVec.__new__(TensorVec)
        v.n, v.N, v.terms = self.n, self.N, terms
        return v

    def __add__(self, other: "TensorVec") -> "TensorVec":
        out = dict(self.terms)
        for t, c in other.terms.items():
            _acc(out, t, c)
        return self._new(out)

    def __neg__(self) -> "TensorVec":
        return self._new({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "TensorVec") -> "TensorVec":
        return self + (-other)

    def scale(self, c) -> "TensorVec":
        c = LaurentPoly.coerce(c)
        return self._new({t: c * x for t, x in self.terms.items()} if c else {})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVec):
            return NotImplemented
        return (self.n, self.N, self.terms) == (other.n, other.N, other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "TensorVec(0)"
        body = " + ".join(
            f"({c})*" + "(x)".join(f"u({m})" for m in t)
            for t, c in sorted(self.terms.items(), reverse=True))
        return f"TensorVec({body})"


def _acc(out: dict, key, c: LaurentPoly) -> None:
    v = out.get(key, ZERO) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


# -- left action: iterated coproduct -----------------------------------------


def coproduct_action(g: str, i: int | None, v: TensorVec) -> TensorVec:
    """Apply ``Delta^{(N)}(g)`` for ``g`` in E, F, K, Kinv, d."""
    n, N = v.n, v.N
    out: dict[tuple, LaurentPoly] = {}
    for t, c in v.terms.items():
        if g in ("K", "Kinv"):
            e = sum(kexp(i, m, n) for m in t)
            _acc(out, t, c * qpow(e if g == "K" else -e))
            continue
        if g == "d":
            a = sum(decompose(m, n)[1] for m in t)
            if a:
                _acc(out, t, c * a)
            continue
        for k in range(N):
            for m2, c2 in gen_on_u(g, i, t[k], n).items():
                if g == "E":
                    e = sum(kexp(i, m, n) for m in t[k + 1:])
                elif g == "F":
                    e = -sum(kexp(i, m, n) for m in t[:k])
                else:
                    raise ValueError(f"unknown generator {g!r}")
                _acc(out, t[:k] + (m2,) + t[k + 1:], c * c2 * qpow(e))
    return v._new(out)


def naive_coproduct_action(g: str, i: int | None, v: TensorVec) -> TensorVec:
    """Undeformed ``sum_k 1 (x) .. g .. (x) 1``; a negative control only."""
    out: dict[tuple, LaurentPoly] = {}
    for t, c in v.terms.items():
        for k in range(v.N):
            for m2, c2 in gen_on_u(g, i, t[k], v.n).items():
                _acc(out, t[:k] + (m2,) + t[k + 1:], c * c2)
    return v._new(out)


# -- right action of the affine Hecke algebra ---------------------------------


def divided_difference(A: int, B: int, C: int, D: int) -> list[tuple[int, int, int]]:
    """``(x^A y^B - x^C y^D) / (x - y)`` for ``A + B == C + D``.

    Returns monomials ``(sign, ex, ey)``; the quotient is always a finite
    Laurent polynomial in ``x, y``.
    """
    if A + B != C + D:
        raise ValueError("divided difference needs equal total degrees")
    if A == C:
        return []
    sign = 1
    if A < C:
        A, B, C, D = C, D, A, B
        sign = -1
    k = A - C
    return [(sign, C + k - 1 - s, B + s) for s in range(k)]


def hecke_T(i: int, v: TensorVec) -> TensorVec:
    """Right action of ``T_i`` (1-based, acting on slots ``i, i+1``)."""
    n, N = v.n, v.N
    if not 1 <= i <= N - 1:
        raise ValueError(f"T_{i} undefined for N={N}")
    p = i - 1
    out: dict[tuple, LaurentPoly] = {}
    for t, c in v.terms.items():
        m1, m2 = t[p], t[p + 1]
        j1, a1 = decompose(m1, n)
        j2, a2 = decompose(m2, n)
        swapped = t[:p] + (m2, m1) + t[p + 2:]
        if j1 < j2:
            _acc(out, swapped, c * LaurentPoly({1: -1}))
            dd = divided_difference(a2, a1 + 1, a1 + 1, a2)
        else:
            _acc(out, swapped, c * (LaurentPoly({0: -1}) if j1 == j2 else LaurentPoly({1: -1})))
            dd = divided_difference(a2 + 1, a1, a1 + 1, a2)
        for sign, ex, ey in dd:
            key = t[:p] + (j1 - ex * n, j2 - ey * n) + t[p + 2:]
            _acc(out, key, c * _Q2_MINUS_1 * (-sign))
    return v._new(out)


def hecke_T_inv(i: int, v: TensorVec) -> TensorVec:
    """``T_i^{-1} = q^-2 T_i + (q^-2 - 1)``."""
    return hecke_T(i, v).scale(qpow(-2)) + v.scale(LaurentPoly({-2: 1, 0: -1}))


def hecke_y(j: int, c: int, v: TensorVec) -> TensorVec:
    """Right action of ``y_j^c``: slot ``j`` index ``m -> m + c*n``."""
    if not 1 <= j <= v.N:
        raise ValueError(f"y_{j} undefined for N={v.N}")
    p = j - 1
    return v._new({t[:p] + (t[p] + c * v.n,) + t[p + 1:]: x for t, x in v.terms.items()})


@dataclass(frozen=True)
class HeckeWord:
    """Word in ``T_i``, ``Tinv_i`` and ``y_j^c``; applied left to right (right action)."""
    generators: tuple = field(default_factory=tuple)

    def apply(self, v: TensorVec) -> TensorVec:
        for g in self.generators:
            tag = g[0]
            if tag == "T":
                v = hecke_T(g[1], v)
            elif tag == "Tinv":
                v = hecke_T_inv(g[1], v)
            elif tag == "y":
                v = hecke_y(g[1], g[2], v)
            else:
                raise ValueError(f"unknown Hecke generator {g!r}")
        return v


def reduced_word(perm: tuple) -> list[int]:
    """Reduced word of ``perm`` (one-line notation, 0-based) via insertion sort.

    The returned ``[i_1, ..., i_l]`` (1-based generators) satisfies
    ``perm = s_{i_1} ... s_{i_l}`` acting on positions.
    """
    arr = list(perm)
    swaps = []
    for k in range(1, len(arr)):
        j = k
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            swaps.append(j)
            j -= 1
    return swaps[::-1]


def reduced_word_alt(perm: tuple) -> list[int]:
    """A second reduced word for the same permutation (bubbles the maximum rightwards)."""
    arr = list(perm)
    swaps = []
    N = len(arr)
    for end in range(N - 1, 0, -1):
        for j in range(end):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                swaps.append(j + 1)
    return swaps[::-1]


def apply_T_word(word: Iterable[int], v: TensorVec) -> TensorVec:
    for i in word:
        v = hecke_T(i, v)
    return v


def antisymmetrize(v: TensorVec) -> TensorVec:
    """``v . A^(N)`` with ``A^(N) = sum over S_N of T_sigma``."""
    if v.N > MAX_ANTISYM_N:
        raise ValueError(f"antisymmetrizer limited to N <= {MAX_ANTISYM_N}")
    out = TensorVec(v.n, v.N)
    for perm in itertools.permutations(range(v.N)):
        out = out + apply_T_word(reduced_word(perm), v)
    return out


def antisymmetrizer_scalar(N: int) -> LaurentPoly:
    """``prod_{m=1..N} (1 - q^{2m}) / (1 - q^2)`` as a polynomial."""
    out = ONE
    for m in range(1, N + 1):
        out = out * LaurentPoly({2 * k: 1 for k in range(m)})
    return out


def split_membership(v: TensorVec) -> str:
    """Classify ``v`` against ``Im A ⊕ Ker A``.

    ``v . A = c v`` means ``v`` lies in the image, ``v . A = 0`` the kernel;
    anything else has both components.
    """
    if v.N > MAX_ANTISYM_N:
        raise ValueError(f"antisymmetrizer limited to N <= {MAX_ANTISYM_N}")
    va = antisymmetrize(v)
    if not va:
        return "in_kernel"
    if va == v.scale(antisymmetrizer_scalar(v.N)):
        return "in_image"
    return "mixed"


# -- tensor words to wedges ----------------------------------------------------


def tensor_to_wedge(v: TensorVec, orientation: str = "direct") -> dict[tuple, LaurentPoly]:
    """Image in the finite q-wedge space, normally ordered.

    ``direct`` maps ``u_{m1} (x) ... (x) u_{mN}`` to ``u_{m1} ^ ... ^ u_{mN}``;
    ``reversed`` maps it to ``u_{mN} ^ ... ^ u_{m1}``.
    """
    out: dict[tuple, LaurentPoly] = {}
    for t, c in v.terms.items():
        word = t if orientation == "direct" else t[::-1]
        for h, c2 in normal_order(word, v.n).items():
            _acc(out, h, c * c2)
    return out


# -- random samples and relation checks ---------------------------------------


def random_tensor(rng: random.Random, n: int, N: int, terms: int = 3, window: tuple = (-4, 5)) -> TensorVec:
    out: dict[tuple, LaurentPoly] = {}
    for _ in range(terms):
        t = tuple(rng.randint(*window) for _ in range(N))
        c = LaurentPoly({rng.randint(-2, 2): rng.choice([-2, -1, 1, 2, 3])})
        _acc(out, t, c)
    return TensorVec(n, N, out)


def _ops_equal(lhs: Callable, rhs: Callable, samples: list) -> bool:
    return all(lhs(v) == rhs(v) for v in samples)


def verify_hecke_relations(N: int, samples: int = 20, n: int = 2, seed: int = 0) -> Report:
    if N < 2:
        raise ValueError("Hecke relations need N >= 2")
    check_rank(n)
    rng = random.Random(seed)
    vs = [random_tensor(rng, n, N) for _ in range(samples)]
    rep = Report(f"hecke relations n={n} N={N}")
    T, y, Ti = hecke_T, hecke_y, hecke_T_inv
    q2 = qpow(2)

    ok = True
    for i in range(1, N):
        ok &= _ops_equal(lambda v: T(i, T(i, v)) + T(i, v).scale(-_Q2_MINUS_1) - v.scale(q2),
                         lambda v: TensorVec(n, N), vs)
    rep.add("quadratic T_i^2 = (q^2-1)T_i + q^2", ok)

    ok = True
    for i in range(1, N):
        ok &= all(not (T(i, w) + w) for w in (T(i, v) - v.scale(q2) for v in vs))
    rep.add("eigenvalues (T_i+1)(T_i-q^2) = 0", ok)

    ok = True
    for i in range(1, N - 1):
        ok &= _ops_equal(lambda v: T(i, T(i + 1, T(i, v))), lambda v: T(i + 1, T(i, T(i + 1, v))), vs)
    rep.add("braid T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", ok if N > 2 else None)

    ok = True
    for i in range(1, N):
        for j in range(1, N):
            if abs(i - j) > 1:
                ok &= _ops_equal(lambda v: T(j, T(i, v)), lambda v: T(i, T(j, v)), vs)
    rep.add("far commutation T_i T_j = T_j T_i", ok if N > 3 else None)

    ok = True
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            ok &= _ops_equal(lambda v: y(j, 1, y(i, 1, v)), lambda v: y(i, 1, y(j, 1, v)), vs)
    rep.add("y_i y_j = y_j y_i", ok)

    ok = True
    for i in range(1, N):
        for j in range(1, N + 1):
            if j not in (i, i + 1):
                ok &= _ops_equal(lambda v: T(i, y(j, 1, v)), lambda v: y(j, 1, T(i, v)), vs)
    rep.add("y_j T_i = T_i y_j (j != i, i+1)", ok if N > 2 else None)

    ok = True
    for j in range(1, N):
        ok &= _ops_equal(lambda v: T(j, y(j, 1, v)),
                         lambda v: y(j + 1, 1, T(j, v)) - y(j + 1, 1, v).scale(_Q2_MINUS_1), vs)
    rep.add("y_j T_j = T_j y_{j+1} - (q^2-1) y_{j+1}", ok)

    ok = True
    for j in range(1, N):
        ok &= _ops_equal(lambda v: T(j, y(j + 1, 1, v)),
                         lambda v: y(j, 1, T(j, v)) + y(j + 1, 1, v).scale(_Q2_MINUS_1), vs)
    rep.add("y_{j+1} T_j = T_j y_j + (q^2-1) y_{j+1}", ok)

    ok = True
    for i in range(1, N):
        ok &= _ops_equal(lambda v: T(i, y(i, 1, T(i, v))), lambda v: y(i + 1, 1, v).scale(q2), vs)
    rep.add("T_i y_i T_i = q^2 y_{i+1}", ok)

    ok = True
    for i in range(1, N):
        ok &= _ops_equal(lambda v: Ti(i, T(i, v)), lambda v: v, vs)
        ok &= _ops_equal(lambda v: T(i, Ti(i, v)), lambda v: v, vs)
    rep.add("T_i^-1 = q^-2 T_i + (q^-2 - 1)", ok)
    return rep


def _apply_B(a: int, v: TensorVec) -> TensorVec:
    out = TensorVec(v.n, v.N)
    for k in range(1, v.N + 1):
        out = out + hecke_y(k, -a, v)
    return out


def verify_centrality(N: int, a: int, samples: int = 20, n: int = 2, seed: int = 0,
                      element: str = "B") -> Report:
    """Check that ``B_a = sum_k y_k^{-a}`` commutes with every ``T_i`` and ``y_j``.

    ``element="y1"`` replaces ``B_a`` by ``y_1^{-a}`` alone (a negative control).
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    rng = random.Random(seed)
    vs = [random_tensor(rng, n, N) for _ in range(samples)]
    if element == "B":
        op = lambda v: _apply_B(a, v)
    elif element == "y1":
        op = lambda v: hecke_y(1, -a, v)
    else:
        raise ValueError(f"unknown element {element!r}")
    rep = Report(f"centrality a={a} n={n} N={N} ({element})")
    for i in range(1, N):
        rep.add(f"[{element}, T_{i}] = 0", _ops_equal(lambda v: hecke_T(i, op(v)), lambda v: op(hecke_T(i, v)), vs))
    for j in range(1, N + 1):
        rep.add(f"[{element}, y_{j}] = 0",
                _ops_equal(lambda v: hecke_y(j, 1, op(v)), lambda v: op(hecke_y(j, 1, v)), vs))
    return rep


def all_generators(n: int) -> list[tuple[str, int | None]]:
    gens = [(g, i) for g in ("E", "F", "K", "Kinv") for i in range(n)]
    return gens + [("d", None)]


def verify_intertwining(N: int, samples: int = 20, n: int = 2, seed: int = 0,
                        coproduct: Callable = coproduct_action) -> Report:
    rng = random.Random(seed)
    vs = [random_tensor(rng, n, N) for _ in range(samples)]
    rep = Report(f"intertwining n={n} N={N}")
    for g, gi in all_generators(n):
        ok = True
        for i in range(1, N):
            ok &= _ops_equal(lambda v: hecke_T(i, coproduct(g, gi, v)),
                             lambda v: coproduct(g, gi, hecke_T(i, v)), vs)
        rep.add(f"[T_i, Delta({g}{'' if gi is None else gi})] = 0", ok)
    return rep


def kernel_generator(l: int, m: int, n: int) -> TensorVec:
    """The two-slot elements spanning Ker(T+1) obtained from ``u_l (x) u_m``."""
    i = (m - l) % n
    if i == 0:
        return TensorVec(n, 2, {(l, m): ONE}) + TensorVec(n, 2, {(m, l): ONE})
    terms: dict[tuple, LaurentPoly] = {}
    _acc(terms, (l, m), ONE)
    _acc(terms, (m, l), qpow(1))
    _acc(terms, (m - i, l + i), ONE)
    _acc(terms, (l + i, m - i), qpow(1))
    return TensorVec(n, 2, terms)
