"""Semi-infinite q-wedges and the charge-m Fock spaces.

A basis wedge of charge ``m`` is stored as its *head*: the strictly
decreasing leading entries ``m_1 > ... > m_k`` that differ from the vacuum
``u_m ^ u_{m-1} ^ ...``.  The tail after the head is ``|m-k>``, the vacuum of
charge ``m-k``.  Heads are trimmed so the last entry is never the one the
vacuum would have put there.

Straightening rewrites an arbitrary finite word into normally ordered words
using the adjacent-pair rule; a normally ordered head whose last entry is not
above the top of its tail is zero (the tail already contains that index in a
contiguous run, which kills the wedge).
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .coeff import ONE, ZERO, LaurentPoly
from .evalmod import check_rank, decompose, kexp

DEFAULT_REWRITE_CAP = 10**6

_MINUS_Q = LaurentPoly({1: -1})
_MINUS_ONE = LaurentPoly({0: -1})


class StraighteningLimitError(RuntimeError):
    pass


def pair_rule(l: int, m: int, n: int) -> list[tuple[LaurentPoly, int, int]]:
    """Rewrite ``u_l ^ u_m`` (``l < m``) as normally ordered pairs.

    Returns ``(coeff, x, y)`` with ``x > y``.  For ``m - l = 0 mod n`` this is
    a plain sign flip; otherwise the leading ``-q u_m ^ u_l`` is followed by
    the walk ``(m-i, l+i), (m-n, l+n), (m-n-i, l+n+i), ...`` with coefficients
    ``(q^2-1)(-q)^(t-1)`` while the pair stays normally ordered.
    """
    if l >= m:
        raise ValueError("pair_rule expects l < m")
    i = (m - l) % n
    if i == 0:
        return [(_MINUS_ONE, m, l)]
    out = [(_MINUS_Q, m, l)]
    t = 1
    while True:
        s, odd = divmod(t, 2)
        if odd:
            x, y = m - i - s * n, l + i + s * n
        else:
            x, y = m - s * n, l + s * n
        if x <= y:
            break
        # (q^2 - 1) * (-q)^(t-1)
        sign = -1 if (t - 1) % 2 else 1
        out.append((LaurentPoly({t + 1: sign, t - 1: -sign}), x, y))
        t += 1
    return out


class Straightener:
    """Normal ordering of finite q-wedge words for a fixed rank.

    ``insert(x, S)`` wedges ``u_x`` in front of a normally ordered word ``S``
    and is memoized; the memo is shared by every call for this rank.
    """

    def __init__(self, n: int, rewrite_cap: int = DEFAULT_REWRITE_CAP):
        self.n = check_rank(n)
        self.rewrite_cap = rewrite_cap
        self._memo: dict[tuple, dict[tuple, LaurentPoly]] = {}
        self._budget = rewrite_cap
        self.rewrites = 0

    def insert(self, x: int, S: tuple) -> dict[tuple, LaurentPoly]:
        if not S or x > S[0]:
            return {(x,) + S: ONE}
        if x == S[0]:
            return {}
        key = (x, S)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._budget -= 1
        self.rewrites += 1
        if self._budget < 0:
            raise StraighteningLimitError(
                f"straightening exceeded {self.rewrite_cap} pair rewrites")
        out: dict[tuple, LaurentPoly] = {}
        rest = S[1:]
        for c, a, b in pair_rule(x, S[0], self.n):
            for T, c2 in self.insert(b, rest).items():
                c12 = c * c2
                for U, c3 in self.insert(a, T).items():
                    v = out.get(U, ZERO) + c12 * c3
                    if v:
                        out[U] = v
                    else:
                        out.pop(U, None)
        self._memo[key] = out
        return out

    def normal_order(self, word: Iterable[int]) -> dict[tuple, LaurentPoly]:
        """Normal form of a finite wedge word: normally ordered words to coefficients."""
        word = tuple(word)
        self._budget = self.rewrite_cap
        if all(word[k] > word[k + 1] for k in range(len(word) - 1)):
            return {word: ONE}
        acc: dict[tuple, LaurentPoly] = {(): ONE}
        for x in reversed(word):
            nxt: dict[tuple, LaurentPoly] = {}
            for S, c in acc.items():
                for T, c2 in self.insert(x, S).items():
                    v = nxt.get(T, ZERO) + c * c2
                    if v:
                        nxt[T] = v
                    else:
                        nxt.pop(T, None)
            acc = nxt
            if not acc:
                break
        return acc


_STRAIGHTENERS: dict[int, Straightener] = {}


def straightener(n: int) -> Straightener:
    s = _STRAIGHTENERS.get(n)
    if s is None:
        s = _STRAIGHTENERS[n] = Straightener(n)
    return s


def normal_order(word: Iterable[int], n: int) -> dict[tuple, LaurentPoly]:
    return straightener(n).normal_order(word)


sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


# -- heads and vectors --------------------------------------------------------


@dataclass(frozen=True)
class WedgeHead:
    charge: int
    head: tuple

    def __post_init__(self):
        h = self.head
        if any(h[k] <= h[k + 1] for k in range(len(h) - 1)):
            raise ValueError(f"head {h} is not strictly decreasing")
        if trim(h, self.charge) != h:
            raise ValueError(f"head {h} is not trimmed for charge {self.charge}")
        if h and h[-1] <= self.charge - len(h):
            raise ValueError(f"head {h} overlaps the vacuum tail of charge {self.charge}")

    def partition(self) -> tuple:
        return head_partition(self.head, self.charge)

    def __str__(self) -> str:
        return render_wedge(self.head, self.charge)


def trim(head: tuple, charge: int) -> tuple:
    """Absorb trailing head entries that coincide with the vacuum."""
    k = len(head)
    while k and head[k - 1] == charge - k + 1:
        k -= 1
    return head[:k]


def extend(head: tuple, charge: int, length: int) -> tuple:
    """Pad a head with explicit vacuum entries up to ``length`` slots."""
    k = len(head)
    return head + tuple(charge - t for t in range(k, length))


def head_partition(head: tuple, charge: int) -> tuple:
    return tuple(x - (charge - t) for t, x in enumerate(head))


def partition_head(lam: Iterable[int], charge: int) -> tuple:
    return tuple(p + charge - t for t, p in enumerate(lam) if p)


def render_wedge(head: tuple, charge: int) -> str:
    return "".join(f"u({x})^" for x in head) + f"vac({charge - len(head)})"


class FockVec:
    """Finite linear combination of basis wedges of one charge."""

    __slots__ = ("n", "charge", "terms")

    def __init__(self, n: int, charge: int, terms: Mapping[tuple, LaurentPoly] | None = None):
        self.n = n
        self.charge = charge
        self.terms = {h: c for h, c in (terms or {}).items() if c}

    @classmethod
    def vacuum(cls, n: int, charge: int) -> "FockVec":
        return cls(n, charge, {(): ONE})

    @classmethod
    def basis(cls, n: int, charge: int, head: Iterable[int]) -> "FockVec":
        head = tuple(head)
        WedgeHead(charge, head)
        return cls(n, charge, {head: ONE})

    def _check(self, other: "FockVec") -> None:
        if self.n != other.n or self.charge != other.charge:
            raise ValueError(
                f"incompatible Fock vectors (n={self.n}, charge={self.charge}) vs "
                f"(n={other.n}, charge={other.charge})")

    def __add__(self, other: "FockVec") -> "FockVec":
        self._check(other)
        out = dict(self.terms)
        for h, c in other.terms.items():
            v = out.get(h, ZERO) + c
            if v:
                out[h] = v
            else:
                out.pop(h, None)
        return FockVec(self.n, self.charge, out)

    def __neg__(self) -> "FockVec":
        return FockVec(self.n, self.charge, {h: -c for h, c in self.terms.items()})

    def __sub__(self, other: "FockVec") -> "FockVec":
        return self + (-other)

    def scale(self, c) -> "FockVec":
        c = LaurentPoly.coerce(c)
        if not c:
            return FockVec(self.n, self.charge)
        return FockVec(self.n, self.charge, {h: c * x for h, x in self.terms.items()})

    def __rmul__(self, c) -> "FockVec":
        return self.scale(c)

    def __mul__(self, c) -> "FockVec":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVec):
            return NotImplemented
        return (self.n, self.charge, self.terms) == (other.n, other.charge, other.terms)

    def __hash__(self):
        return hash((self.n, self.charge, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[tuple, LaurentPoly]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[tuple, LaurentPoly]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def coeff(self, head: tuple) -> LaurentPoly:
        return self.terms.get(tuple(head), ZERO)

    def map_coeffs(self, f) -> "FockVec":
        return FockVec(self.n, self.charge, {h: f(c) for h, c in self.terms.items()})

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for h, c in self.sorted_terms():
            w = render_wedge(h, self.charge)
            parts.append(w if c == ONE else f"({c})*{w}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"FockVec(n={self.n}, charge={self.charge}, {self.render()})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "charge": self.charge,
            "terms": [
                {"charge": self.charge, "head": list(h), "coeff": c.to_json()}
                for h, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FockVec":
        terms = {}
        for t in data["terms"]:
            terms[tuple(t["head"])] = LaurentPoly.from_json(t["coeff"])
        return cls(data["n"], data["charge"], terms)


def straighten(word: Iterable[int], charge: int, n: int) -> FockVec:
    """Canonical Fock vector for ``u_{w_1} ^ ... ^ u_{w_k} ^ |charge-k>``."""
    word = tuple(word)
    tail_top = charge - len(word)
    out: dict[tuple, LaurentPoly] = {}
    for h, c in normal_order(word, n).items():
        if h and h[-1] <= tail_top:
            continue
        h = trim(h, charge)
        v = out.get(h, ZERO) + c
        if v:
            out[h] = v
        else:
            out.pop(h, None)
    return FockVec(n, charge, out)


def wedge_prepend(a: int, v: FockVec) -> FockVec:
    """``u_a ^ v``; raises the charge by one."""
    charge = v.charge + 1
    out = FockVec(v.n, charge)
    for h, c in v.terms.items():
        # the tail below the head is the same vacuum, only its charge label moves
        out = out + straighten((a,) + h, charge, v.n).scale(c)
    return out


# -- bases, weights, degrees --------------------------------------------------


def partitions(s: int, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``s`` as weakly decreasing tuples, largest first."""
    if max_part is None:
        max_part = s
    if s == 0:
        yield ()
        return
    for p in range(min(s, max_part), 0, -1):
        for rest in partitions(s - p, p):
            yield (p,) + rest


def partition_count(s: int) -> int:
    return sum(1 for _ in partitions(s))


def enumerate_basis(m: int, s: int) -> list[WedgeHead]:
    if s < 0:
        raise ValueError("partition size must be non-negative")
    return [WedgeHead(m, partition_head(lam, m)) for lam in partitions(s)]


@dataclass(frozen=True)
class Weight:
    kexp: tuple
    ddeg: int


def vacuum_kexp(m: int, n: int) -> tuple:
    return tuple(1 if (m - i) % n == 0 else 0 for i in range(n))


def vacuum_degree(m: int, n: int) -> int:
    """``D_m``: degree of ``|m>``, from ``D_0 = 0`` and ``D_m - D_{m-1} = a(m)``."""
    if m >= 0:
        return sum(decompose(k, n)[1] for k in range(1, m + 1))
    return -sum(decompose(k, n)[1] for k in range(m + 1, 1))


def weight_of(head: tuple, charge: int, n: int) -> Weight:
    ke = list(vacuum_kexp(charge, n))
    dd = vacuum_degree(charge, n)
    for t, x in enumerate(head):
        vac = charge - t
        for i in range(n):
            ke[i] += kexp(i, x, n) - kexp(i, vac, n)
        dd += decompose(x, n)[1] - decompose(vac, n)[1]
    return Weight(tuple(ke), dd)


def kexp_of_vacuum(i: int, m: int, n: int) -> int:
    return 1 if (m - i) % n == 0 else 0
