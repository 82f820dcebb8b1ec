"""Wedging vertex operator and its two-point functions.

All two-point functions are truncated power series in ``w = w2/w1``.

* ``omega_two_point`` straightens ``u_{m+1-nb} ^ u_{m+nb} ^ |m-1>`` and reads
  off the coefficient of ``|m+1>``.
* ``xi_two_point`` evaluates ``<1, Xi(w1) Xi(w2) 1>`` on ``C[H_-]`` directly
  from the exponential definition of ``Xi``; no closed form is assumed.
* ``phi_two_point`` is the quoted infinite product, cut at ``kmax``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .coeff import (ONE, RF_ONE, RF_ZERO, LaurentPoly, PowerSeries, RationalFn, qpow,
                    series_from_factors, series_log)
from .evalmod import check_rank
from .fock import FockVec, partitions, straighten, wedge_prepend
from .heisenberg import HPoly, gamma, hB
from .report import Report

CERTIFIED_DEGREE = 40


class UnstableTruncation(RuntimeError):
    """The kmax cut of an infinite product is not stable in the requested q-window."""


@dataclass
class TwoPoint:
    series: PowerSeries
    n: int
    charge: int | None = None
    meta: dict = field(default_factory=dict)

    def __getitem__(self, b: int) -> RationalFn:
        return self.series[b]

    def to_json(self) -> list:
        return [[b, c.text()] for b, c in enumerate(self.series.coeffs)]


def omega_mode(j: int, b: int, v: FockVec) -> FockVec:
    """``Omega_{j,b} v = u_{j-nb} ^ v``."""
    return wedge_prepend(j - v.n * b, v)


def omega_two_point(m: int, order: int, n: int) -> TwoPoint:
    check_rank(n)
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = []
    for b in range(order + 1):
        v = straighten((m + 1 - n * b, m + n * b), m + 1, n)
        coeffs.append(RationalFn(v.coeff(())))
    return TwoPoint(PowerSeries(coeffs), n, m)


def phi_factors(n: int, kmax: int) -> list[tuple[int, LaurentPoly]]:
    out = []
    for k in range(kmax + 1):
        out.append((-1, qpow(2 * n + 2 + 2 * n * k)))
        out.append((1, qpow(2 * n + 2 * n * k)))
    return out


def phi_two_point(order: int, n: int, kmax: int) -> TwoPoint:
    """``prod_{k=0..kmax} (1 - q^{2n+2+2nk} w) / (1 - q^{2n+2nk} w)``."""
    check_rank(n)
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    return TwoPoint(series_from_factors(phi_factors(n, kmax), order), n, meta={"kmax": kmax})


def _exp_modes(order: int, n: int, sign: int) -> list[list[tuple[tuple, RationalFn]]]:
    """Graded pieces of ``exp(sign * sum_b X_b t^b / gamma_b)`` as partition monomials.

    Piece ``s`` lists ``(lambda, coeff)`` over partitions of ``s`` with
    ``coeff = prod_b (sign/gamma_b)^{m_b} / m_b!``.
    """
    inv = {b: RationalFn(ONE, gamma(b, n)) for b in range(1, order + 1)}
    pieces = []
    for s in range(order + 1):
        piece = []
        for lam in partitions(s):
            c = RF_ONE
            for b in set(lam):
                mult = lam.count(b)
                c = c * _rf_pow(inv[b] * sign, mult) * Fraction(1, factorial(mult))
            piece.append((lam, c))
        pieces.append(piece)
    return pieces


def _rf_pow(x: RationalFn, k: int) -> RationalFn:
    out = RF_ONE
    for _ in range(k):
        out = out * x
    return out


def xi_two_point(order: int, n: int) -> TwoPoint:
    """``<1, Xi(w1) Xi(w2) 1>`` computed on ``C[H_-]``.

    ``Xi(w2) 1`` reduces to its creation exponential.  Pairing with the vacuum
    keeps only the part of ``Xi(w1)`` whose annihilation degree matches the
    creation degree, so the ``w^s`` coefficient is
    ``<1, A_s C_s 1>`` with ``C_s`` the degree-``s`` piece of
    ``exp(sum B_-b w2^b/gamma_b)`` and ``A_s`` that of ``exp(-sum B_b w1^-b/gamma_b)``.
    """
    check_rank(n)
    creation = _exp_modes(order, n, +1)
    annihilation = _exp_modes(order, n, -1)
    coeffs = []
    for s in range(order + 1):
        state = HPoly()
        for lam, c in creation[s]:
            p = HPoly.one().scale(c)
            for b in lam:
                p = hB(-b, p, n)
            state = state + p
        total = RF_ZERO
        for mu, c in annihilation[s]:
            p = state
            for b in mu:
                p = hB(b, p, n)
            total = total + RationalFn.coerce(p.vacuum_coeff()) * c
        coeffs.append(total)
    return TwoPoint(PowerSeries(coeffs), n, meta={"source": "first principles"})


def xi_sign(order: int, n: int) -> int:
    """Sign ``s`` with ``<1, Xi Xi 1> = exp(s * sum_a w^a / gamma_a)``; 0 if neither fits."""
    xi = xi_two_point(order, n).series
    for s in (1, -1):
        ref = PowerSeries([RF_ZERO] + [RationalFn(ONE, gamma(a, n)) * s for a in range(1, order + 1)]).exp()
        if ref == xi:
            return s
    return 0


def _window(x: RationalFn, degree: int) -> dict:
    return x.q_expansion(degree)


def certify_phi(order: int, n: int, kmax: int, degree: int = CERTIFIED_DEGREE) -> bool:
    """True if raising ``kmax`` by one leaves every coefficient unchanged through ``q^degree``."""
    a = phi_two_point(order, n, kmax).series
    b = phi_two_point(order, n, kmax + 1).series
    return all(_window(x, degree) == _window(y, degree) for x, y in zip(a.coeffs, b.coeffs))


def certified_degree(n: int, kmax: int) -> int:
    """Largest q-degree through which the ``kmax`` cut of the product is exact."""
    return 2 * n + 2 * n * (kmax + 1) - 1


def minimal_kmax(order: int, n: int, degree: int = CERTIFIED_DEGREE) -> int:
    """Smallest cut whose dropped factors only touch q-degrees above ``degree``."""
    # the first dropped factor has lowest q-degree 2n + 2n(kmax+1)
    return max(0, -(-(degree + 1 - 2 * n) // (2 * n)) - 1)


def verify_factorization(m: int, order: int, n: int, kmax: int | None = None,
                         degree: int = CERTIFIED_DEGREE) -> Report:
    """``omega = xi * phi`` through ``w^order``, exact in the certified q-window."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if kmax is None:
        kmax = minimal_kmax(order, n, degree)
    if not certify_phi(order, n, kmax, degree):
        raise UnstableTruncation(
            f"kmax={kmax} is not stable through q^{degree}; increase kmax")
    om = omega_two_point(m, order, n).series
    xi = xi_two_point(order, n).series
    ph = phi_two_point(order, n, kmax).series
    prod = xi * ph
    rep = Report(f"factorization n={n} m={m} order={order} kmax={kmax} window=q^{degree}")
    for b in range(order + 1):
        resid = om[b] - prod[b]
        rep.add(f"w^{b}", not _window(resid, degree), f"residual through q^{degree}: {_window(resid, degree) or 0}")
    return rep


def exact_phi_log(order: int, n: int) -> PowerSeries:
    """Logarithm of the full infinite product, summed in closed form over k.

    ``log(1 - c w) = -sum_a c^a w^a / a`` and the factor exponents form a
    geometric progression in ``q^{2n}``.
    """
    coeffs = [RF_ZERO]
    for a in range(1, order + 1):
        geo = RationalFn(ONE, ONE - qpow(2 * n * a))
        term = (RationalFn(qpow(2 * n * a)) - RationalFn(qpow((2 * n + 2) * a))) * geo
        coeffs.append(term * Fraction(1, a))
    return PowerSeries(coeffs)


def extract_gamma_from_series(order: int, n: int, m: int = 0) -> tuple[list[LaurentPoly], int]:
    """Solve ``log(omega / phi) = s * sum_a w^a / gamma_a`` for each ``gamma_a``.

    Returns ``(gammas, s)``.  Raises if any solution is not a Laurent
    polynomial or the signs disagree.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    log_omega = series_log(omega_two_point(m, order, n).series)
    diff = log_omega - exact_phi_log(order, n)
    gammas, signs = [], set()
    for a in range(1, order + 1):
        c = diff[a]
        if not c:
            raise ValueError(f"coefficient of w^{a} vanishes; gamma_{a} undefined")
        g = c.inverse()
        if not g.is_polynomial():
            raise ValueError(f"gamma_{a} = {g} is not a Laurent polynomial")
        g = g.num
        if g == gamma(a, n):
            signs.add(1)
        elif -g == gamma(a, n):
            signs.add(-1)
            g = -g
        else:
            raise ValueError(f"gamma_{a} = {g} does not match the closed form up to sign")
        gammas.append(g)
    if len(signs) != 1:
        raise ValueError(f"inconsistent signs {signs}")
    return gammas, signs.pop()
