"""Index bookkeeping for the evaluation module V(z).

The basis vector ``z^a v_j`` is relabelled ``u_m`` with ``m = j - a*n``; larger
``m`` means larger in the natural ordering.  Generators act on single basis
vectors here; tensor products and wedges build on top of this.
"""
from __future__ import annotations

from .coeff import LaurentPoly, qpow

GENERATORS = ("E", "F", "K", "Kinv", "d")


def check_rank(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank n must be an integer >= 2, got {n!r}")
    return n


def decompose(m: int, n: int) -> tuple[int, int]:
    """Return ``(j, a)`` with ``1 <= j <= n`` and ``m == j - a*n``."""
    j = (m - 1) % n + 1
    return j, (j - m) // n


def compose(j: int, a: int, n: int) -> int:
    return j - a * n


def zdeg(m: int, n: int) -> int:
    """The power of ``z`` carried by ``u_m``."""
    return decompose(m, n)[1]


def kexp(i: int, m: int, n: int) -> int:
    """Exponent of ``q`` in the eigenvalue of ``K_i`` on ``u_m``."""
    r = m % n
    return (r == i % n) - (r == (i + 1) % n)


def compare(l: int, m: int) -> str:
    if l < m:
        return "less"
    if l > m:
        return "greater"
    return "equal"


def _check_index(i: int, n: int) -> None:
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range 0..{n - 1}")


def gen_on_u(g: str, i: int | None, m: int, n: int) -> dict[int, LaurentPoly]:
    """Action of a single generator on ``u_m``.

    ``g`` is one of ``E``, ``F``, ``K``, ``Kinv`` (with index ``i``) or ``d``.
    The result maps basis indices to coefficients; an empty dict is zero.
    """
    if g == "d":
        a = zdeg(m, n)
        return {m: LaurentPoly.const(a)} if a else {}
    _check_index(i, n)
    if g == "E":
        return {m - 1: qpow(0)} if (m - 1 - i) % n == 0 else {}
    if g == "F":
        return {m + 1: qpow(0)} if (m - i) % n == 0 else {}
    if g == "K":
        return {m: qpow(kexp(i, m, n))}
    if g == "Kinv":
        return {m: qpow(-kexp(i, m, n))}
    raise ValueError(f"unknown generator {g!r}")


def format_u(m: int) -> str:
    return f"u({m})"
