"""Exact coefficient arithmetic.

``LaurentPoly`` is a sparse Laurent polynomial in ``q`` with rational
coefficients, ``RationalFn`` its reduced fraction, and ``PowerSeries`` a
truncated power series in an auxiliary variable ``w`` whose coefficients are
``RationalFn``.  ``matrix_kernel`` computes exact right kernels.

Nothing in here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    # keep integral coefficients as plain ints; Fraction arithmetic is slow
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_e q^e``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term mappings are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, (int, Fraction)):
                    if isinstance(c, Rational):
                        c = Fraction(c)
                    else:
                        raise TypeError(f"coefficient {c!r} is not rational")
                if c:
                    clean[int(e)] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x}) if x else ZERO
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Scalar]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero")
        return max(self._terms)

    def coeff(self, e: int) -> Scalar:
        return self._terms.get(e, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    # -- ring operations --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.coerce(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.coerce(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: _norm(c * other) for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            if cb == 1:
                return LaurentPoly._raw({e + eb: c for e, c in a.items()})
            return LaurentPoly._raw({e + eb: _norm(c * cb) for e, c in a.items()})
        out: dict[int, Scalar] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            return LaurentPoly({e * k: Fraction(1, 1) / Fraction(c) ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def subs_power(self, k: int) -> "LaurentPoly":
        """Substitute ``q -> q^k``."""
        if k == 0:
            return LaurentPoly.const(self.eval_q1())
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    # -- division ---------------------------------------------------------

    def divmod_poly(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division of the polynomial parts (valuations stripped).

        Both operands are first divided by their lowest power of ``q``;
        the returned quotient and remainder are ordinary polynomials.
        """
        if not other:
            raise ZeroDivisionError("division by zero LaurentPoly")
        if not self:
            return ZERO, ZERO
        a = _dense(self)
        b = _dense(other)
        quo, rem = _poly_divmod(a, b)
        return _from_dense(quo), _from_dense(rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in the Laurent ring; raises if not exact."""
        other = LaurentPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero LaurentPoly")
        if not self:
            return ZERO
        quo, rem = self.divmod_poly(other)
        if rem:
            raise ValueError(f"{self} is not divisible by {other}")
        return quo.shift(self.valuation() - other.valuation())

    # -- evaluation -------------------------------------------------------

    def eval_q1(self) -> Scalar:
        """Specialize at ``q = 1`` (the sum of all coefficients)."""
        return _norm(sum(self._terms.values(), 0))

    def eval(self, x: Scalar) -> Scalar:
        x = Fraction(x)
        if not x and any(e < 0 for e in self._terms):
            raise ZeroDivisionError("negative power of q at q = 0")
        return _norm(sum((c * x ** e for e, c in self._terms.items()), Fraction(0)))

    # -- serialization ----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(sorted(self._terms.items())):
            if k and c < 0:
                parts.append(" - ")
                c = -c
            elif k:
                parts.append(" + ")
            parts.append(_term_str(e, c))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> list:
        return [[e, _frac_str(c)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls({int(e): Fraction(c) for e, c in data})


def _frac_str(c: Scalar) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _coeff_str(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_str(e: int, c: Scalar) -> str:
    if e == 0:
        return _coeff_str(c)
    mono = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return mono
    return f"{_coeff_str(c)}*{mono}"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


def qpow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({e: 1})


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def lp_eval_q1(a: LaurentPoly) -> Scalar:
    return a.eval_q1()


def qint(k: int) -> LaurentPoly:
    """Balanced quantum integer ``[k] = (q^k - q^-k)/(q - q^-1)``."""
    if k == 0:
        return ZERO
    sign = 1 if k > 0 else -1
    k = abs(k)
    return LaurentPoly({e: sign for e in range(-k + 1, k, 2)})


def geometric(step: int, count: int, scale: Scalar = 1) -> LaurentPoly:
    """``scale * (1 + q^step + ... + q^(step*(count-1)))``."""
    return LaurentPoly({step * t: scale for t in range(count)})


# -- dense polynomial helpers (coefficients ascending, valuation stripped) --


def _dense(p: LaurentPoly) -> list[Fraction]:
    lo, hi = p.valuation(), p.degree()
    return [Fraction(p.coeff(e)) for e in range(lo, hi + 1)]


def _from_dense(a: Sequence[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly({i + shift: c for i, c in enumerate(a) if c})


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError
    if len(a) < len(b):
        return [], a
    lead = b[-1]
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    for k in range(len(quo) - 1, -1, -1):
        c = rem[k + len(b) - 1] / lead
        quo[k] = c
        if c:
            for i, bc in enumerate(b):
                rem[k + i] -= c * bc
    return _trim(quo), _trim(rem[: len(b) - 1])


def _poly_gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (lowest powers of ``q`` removed)."""
    if not a:
        return _from_dense(_dense(b)) * Fraction(1, Fraction(b.coeff(b.degree()))) if b else ZERO
    if not b:
        return poly_gcd(b, a)
    return _from_dense(_poly_gcd(_dense(a), _dense(b)))


class RationalFn:
    """Reduced quotient of two LaurentPoly.

    Canonical form: numerator and denominator share no polynomial factor, the
    denominator has lowest exponent 0 and leading coefficient 1.  The zero
    function is ``0/1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("RationalFn with zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        if not num:
            self.num, self.den = ZERO, ONE
            return
        if den.is_monomial():
            ((e, c),) = den.terms.items()
            self.num = num.shift(-e) * (Fraction(1) / Fraction(c))
            self.den = ONE
            return
        shift = num.valuation() - den.valuation()
        a, b = _dense(num), _dense(den)
        g = _poly_gcd(a, b)
        if len(g) > 1:
            a, _ = _poly_divmod(a, g)
            b, _ = _poly_divmod(b, g)
        lead = b[-1]
        self.num = _from_dense([c / lead for c in a], shift)
        self.den = _from_dense([c / lead for c in b])

    @classmethod
    def coerce(cls, x) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        return cls(LaurentPoly.coerce(x), ONE, _reduced=True)

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = RationalFn.coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den, _reduced=True)

    def __add__(self, other) -> "RationalFn":
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFn":
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return RationalFn(ZERO)
        if self.den == ONE and other.den == ONE:
            return RationalFn(self.num * other.num, ONE, _reduced=True)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if not self.num:
            raise ZeroDivisionError("inverse of zero RationalFn")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other) -> "RationalFn":
        return self * RationalFn.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) * self.inverse()

    def eval(self, x: Scalar) -> Scalar:
        return _norm(Fraction(self.num.eval(x)) / Fraction(self.den.eval(x)))

    def q_expansion(self, max_degree: int) -> dict[int, Fraction]:
        """Expand as a Laurent series in ``q`` up to ``q^max_degree`` inclusive.

        Valid because the canonical denominator has a nonzero constant term.
        """
        den = _dense(self.den)
        inv_len = max_degree - (self.num.valuation() if self.num else 0) + 1
        if not self.num or inv_len <= 0:
            return {}
        # power series of 1/den up to q^(inv_len-1)
        inv = [Fraction(0)] * inv_len
        inv[0] = 1 / den[0]
        for k in range(1, inv_len):
            s = sum((den[i] * inv[k - i] for i in range(1, min(k, len(den) - 1) + 1)), Fraction(0))
            inv[k] = -s / den[0]
        out: dict[int, Fraction] = {}
        for e, c in self.num.items():
            for k in range(max_degree - e + 1):
                if inv[k]:
                    out[e + k] = out.get(e + k, 0) + c * inv[k]
        return {e: c for e, c in out.items() if c}

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def text(self) -> str:
        """``num / den`` with both sides present; multi-term sides are parenthesized."""
        def side(p: LaurentPoly) -> str:
            return f"({p})" if len(p.items()) > 1 else str(p)
        return f"{side(self.num)} / {side(self.den)}"

    def __repr__(self) -> str:
        return f"RationalFn({str(self)!r})"


def rf_make(num, den) -> RationalFn:
    return RationalFn(num, den)


RF_ZERO = RationalFn(ZERO)
RF_ONE = RationalFn(ONE)


class PowerSeries:
    """Power series in ``w`` truncated after ``w^order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("PowerSeries needs at least the w^0 coefficient")
        self.coeffs = tuple(RationalFn.coerce(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([RF_ONE] + [RF_ZERO] * order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([RF_ZERO] * (order + 1))

    def __getitem__(self, k: int) -> RationalFn:
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        k = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(k + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def scale(self, c) -> "PowerSeries":
        c = RationalFn.coerce(c)
        return PowerSeries([c * x for x in self.coeffs])

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for d in range(k + 1):
            s = RF_ZERO
            for i in range(d + 1):
                if a[i] and b[d - i]:
                    s = s + a[i] * b[d - i]
            out.append(s)
        return PowerSeries(out)

    __rmul__ = scale

    def inverse(self) -> "PowerSeries":
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = a[0].inverse()
        out = [inv0]
        for d in range(1, self.order + 1):
            s = RF_ZERO
            for i in range(1, d + 1):
                if a[i]:
                    s = s + a[i] * out[d - i]
            out.append(-s * inv0)
        return PowerSeries(out)

    def derivative(self) -> list[RationalFn]:
        return [self.coeffs[k] * k for k in range(1, self.order + 1)]

    def exp(self) -> "PowerSeries":
        return series_exp(self)

    def log(self) -> "PowerSeries":
        return series_log(self)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def series_exp(s: PowerSeries) -> PowerSeries:
    """Truncated exponential of a series with zero constant term.

    Uses ``E' = s' E``: ``k e_k = sum_{j=1..k} j s_j e_{k-j}``.
    """
    if s.coeffs[0]:
        raise ValueError("series_exp needs a zero constant term")
    e = [RF_ONE]
    for k in range(1, s.order + 1):
        acc = RF_ZERO
        for j in range(1, k + 1):
            if s.coeffs[j]:
                acc = acc + s.coeffs[j] * e[k - j] * j
        e.append(acc * Fraction(1, k))
    return PowerSeries(e)


def series_log(s: PowerSeries) -> PowerSeries:
    """Truncated logarithm of a series with constant term 1."""
    if s.coeffs[0] != RF_ONE:
        raise ValueError("series_log needs constant term 1")
    # L' = s'/s, computed coefficientwise: k l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}
    logs = [RF_ZERO]
    for k in range(1, s.order + 1):
        acc = s.coeffs[k] * k
        for j in range(1, k):
            if logs[j] and s.coeffs[k - j]:
                acc = acc - logs[j] * s.coeffs[k - j] * j
        logs.append(acc * Fraction(1, k))
    return PowerSeries(logs)


def series_from_factors(factors: Iterable[tuple[int, object]], order: int) -> PowerSeries:
    """Truncated product of ``(1 - c w)^(-sign)`` over the given factors.

    ``(+1, c)`` contributes the geometric series ``1/(1 - c w)`` and
    ``(-1, c)`` the linear factor ``1 - c w``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    result = PowerSeries.one(order)
    for sign, c in factors:
        c = RationalFn.coerce(c)
        if sign == 1:
            coeffs = [RF_ONE]
            for _ in range(order):
                coeffs.append(coeffs[-1] * c)
        elif sign == -1:
            coeffs = [RF_ONE, -c] + [RF_ZERO] * (order - 1)
            coeffs = coeffs[: order + 1]
        else:
            raise ValueError(f"factor sign must be +1 or -1, got {sign}")
        result = result * PowerSeries(coeffs)
    return result


# -- linear algebra -----------------------------------------------------------


def _lcm_den(row: Sequence[RationalFn]) -> LaurentPoly:
    acc = ONE
    for x in row:
        if x.den != ONE:
            g = poly_gcd(acc, x.den)
            acc = acc * x.den.exact_div(g) if g != ONE else acc * x.den
    return acc


def clear_denominators(vec: Sequence) -> list[LaurentPoly]:
    """Scale a vector of RationalFn to LaurentPoly entries with no common factor."""
    vec = [RationalFn.coerce(x) for x in vec]
    den = _lcm_den(vec)
    out = [(x * den).num for x in vec]
    g = ZERO
    for x in out:
        if x:
            g = x if not g else poly_gcd(g, x)
    if g and g != ONE and not g.is_monomial():
        out = [x.exact_div(g) for x in out]
    return out


def fraction_free_echelon(rows: list[list[LaurentPoly]]) -> tuple[list[list[LaurentPoly]], list[int]]:
    """Bareiss-style fraction-free row echelon form.

    Returns the echelon rows (only the nonzero ones) and their pivot columns.
    Every update divides exactly by the previous pivot.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = ONE
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            for j in range(c + 1, ncols):
                x = piv * m[i][j]
                if f and m[r][j]:
                    x = x - f * m[r][j]
                m[i][j] = x.exact_div(prev) if x and prev != ONE else x
            m[i][c] = ZERO
        # rows below whose pivot column was skipped still carry the factor
        # prev; Bareiss identities keep every division exact
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def matrix_kernel(M: Sequence[Sequence]) -> list[list[RationalFn]]:
    """Exact basis of the right kernel of ``M``.

    Rows are first scaled to LaurentPoly entries, reduced by fraction-free
    elimination, and the kernel is read off by back substitution with one
    free variable set to 1 per basis vector.
    """
    if not M:
        return []
    ncols = len(M[0])
    rows = []
    for row in M:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        rf = [RationalFn.coerce(x) for x in row]
        den = _lcm_den(rf)
        rows.append([(x * den).num for x in rf])
    ech, pivots = fraction_free_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [RF_ZERO] * ncols
        x[f] = RF_ONE
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = RF_ZERO
            for j in range(pc + 1, ncols):
                if ech[r][j] and x[j]:
                    s = s + x[j] * ech[r][j]
            x[pc] = -s / ech[r][pc]
        basis.append(x)
    return basis


def rank_at(M: Sequence[Sequence], point: Scalar = Fraction(5, 7)) -> int:
    """Rank after specializing every entry at ``q = point``, by plain Gaussian elimination."""
    m = [[Fraction(RationalFn.coerce(x).eval(point)) for x in row] for row in M]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[rank][c]
                for j in range(c, ncols):
                    m[i][j] -= f * m[rank][j]
        rank += 1
    return rank
