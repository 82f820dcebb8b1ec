"""Parser for scalar, wedge-vector and operator expressions.

One recursive-descent grammar covers all three::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | 'q' ['^' ['-'] INT] | '(' expr ')' | atom | wedge
    wedge  := ('u(' int ')' '^')* 'vac(' int ')'
    atom   := E(i) | F(i) | K(i) | Kinv(i) | D | B(a) | Omega(j, b)

Which node kinds are legal depends on the entry point: ``parse_scalar``
accepts only numbers and powers of q, ``parse_vec`` requires every summand to
end in exactly one wedge, ``parse_op`` forbids wedges.  In an operator
product the rightmost factor acts first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .coeff import ONE, LaurentPoly, qpow
from .fock import FockVec, straighten
from .heisenberg import B
from .uq_fock import Gen, act
from .vertex import omega_mode

MAX_DEPTH = 200


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        self.message = message
        super().__init__(f"{message} at position {pos}")

    def pretty(self) -> str:
        if not self.src:
            return str(self)
        return f"{self}\n  {self.src}\n  {' ' * self.pos}^"


class OpIndexError(ParseError):
    pass


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class QPow:
    exp: int


@dataclass(frozen=True)
class Wedge:
    head: tuple
    tail: int


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple
    pos: int = 0

    def __str__(self) -> str:
        if self.name == "D":
            return "D"
        return f"{self.name}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node)


Node = Union[Num, QPow, Wedge, Atom, Prod, Sum]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_ATOM_ARITY = {"E": 1, "F": 1, "K": 1, "Kinv": 1, "D": 0, "B": 1, "Omega": 2}


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "()^*+-/,":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), src)
            toks.append(("sym", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.depth = 0

    def peek(self, offset: int = 0):
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.src)

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            self.error(f"expected {want!r}, got {got!r}")
        self.i += 1
        return tok

    def accept(self, kind: str, value: str):
        tok = self.peek()
        if tok[0] == kind and tok[1] == value:
            self.i += 1
            return tok
        return None

    def parse(self) -> Node:
        node = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self) -> Node:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.error("expression nested too deeply")
        terms = []
        sign = -1 if self.accept("sym", "-") else (self.accept("sym", "+") and 1) or 1
        terms.append((sign, self.term()))
        while True:
            if self.accept("sym", "+"):
                terms.append((1, self.term()))
            elif self.accept("sym", "-"):
                terms.append((-1, self.term()))
            else:
                break
        self.depth -= 1
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.accept("sym", "*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def signed_int(self) -> int:
        neg = self.accept("sym", "-")
        tok = self.take("int")
        return -int(tok[1]) if neg else int(tok[1])

    def factor(self) -> Node:
        tok = self.peek()
        kind, val, pos = tok
        if kind == "int":
            self.i += 1
            num = Fraction(int(val))
            if self.accept("sym", "/"):
                den = int(self.take("int")[1])
                if den == 0:
                    self.error("zero denominator", tok)
                num = num / den
            return Num(num)
        if kind == "sym" and val == "(":
            self.i += 1
            node = self.expr()
            self.take("sym", ")")
            return node
        if kind == "name":
            if val == "q":
                self.i += 1
                if self.accept("sym", "^"):
                    return QPow(self.signed_int())
                return QPow(1)
            if val in ("u", "vac"):
                return self.wedge()
            if val in _ATOM_ARITY:
                self.i += 1
                arity = _ATOM_ARITY[val]
                args = []
                if arity:
                    self.take("sym", "(")
                    args.append(self.signed_int())
                    for _ in range(arity - 1):
                        self.take("sym", ",")
                        args.append(self.signed_int())
                    self.take("sym", ")")
                return Atom(val, tuple(args), pos)
            self.error(f"unknown name {val!r}")
        self.error(f"unexpected {val or 'end of input'!r}")

    def wedge(self) -> Wedge:
        head = []
        while True:
            tok = self.peek()
            if tok[0] == "name" and tok[1] == "u":
                self.i += 1
                self.take("sym", "(")
                head.append(self.signed_int())
                self.take("sym", ")")
                self.take("sym", "^")
                continue
            if tok[0] == "name" and tok[1] == "vac":
                self.i += 1
                self.take("sym", "(")
                c = self.signed_int()
                self.take("sym", ")")
                return Wedge(tuple(head), c)
            self.error("wedge must end in exactly one vac(c)")


def parse(src: str) -> Node:
    return _Parser(src).parse()


# -- evaluation -------------------------------------------------------------------


def _scalar(node: Node, src: str) -> LaurentPoly:
    if isinstance(node, Num):
        return LaurentPoly.const(node.value)
    if isinstance(node, QPow):
        return qpow(node.exp)
    if isinstance(node, Sum):
        out = LaurentPoly()
        for s, t in node.terms:
            out = out + _scalar(t, src) * s
        return out
    if isinstance(node, Prod):
        out = ONE
        for f in node.factors:
            out = out * _scalar(f, src)
        return out
    raise ParseError("expected a Laurent polynomial in q", getattr(node, "pos", 0), src)


def _is_scalar(node: Node) -> bool:
    if isinstance(node, (Num, QPow)):
        return True
    if isinstance(node, Sum):
        return all(_is_scalar(t) for _, t in node.terms)
    if isinstance(node, Prod):
        return all(_is_scalar(f) for f in node.factors)
    return False


def parse_scalar(src: str) -> LaurentPoly:
    return _scalar(parse(src), src)


def _vec(node: Node, n: int, src: str) -> FockVec:
    if isinstance(node, Wedge):
        return straighten(node.head, node.tail + len(node.head), n)
    if isinstance(node, Sum):
        parts = [_vec(t, n, src).scale(s) for s, t in node.terms]
        out = parts[0]
        for p in parts[1:]:
            if p.charge != out.charge:
                raise ParseError(f"charge mismatch: {out.charge} vs {p.charge}", 0, src)
            out = out + p
        return out
    if isinstance(node, Prod):
        *scalars, last = node.factors
        if not all(_is_scalar(f) for f in scalars):
            raise ParseError("only scalars may multiply a wedge", 0, src)
        c = ONE
        for f in scalars:
            c = c * _scalar(f, src)
        return _vec(last, n, src).scale(c)
    raise ParseError("expected a wedge u(..)^...^vac(c)", getattr(node, "pos", 0), src)


def parse_vec(src: str, n: int) -> FockVec:
    return _vec(parse(src), n, src)


def _check_op(node: Node, n: int, src: str) -> None:
    if isinstance(node, Wedge):
        raise ParseError("wedge literal inside an operator expression", 0, src)
    if isinstance(node, Atom):
        if node.name in ("E", "F", "K", "Kinv") and not 0 <= node.args[0] < n:
            raise OpIndexError(f"{node.name} index {node.args[0]} out of range 0..{n - 1}", node.pos, src)
        if node.name == "B" and node.args[0] == 0:
            raise OpIndexError("B(0) is not defined", node.pos, src)
    elif isinstance(node, Sum):
        for _, t in node.terms:
            _check_op(t, n, src)
    elif isinstance(node, Prod):
        for f in node.factors:
            _check_op(f, n, src)


def parse_op(src: str, n: int) -> Node:
    node = parse(src)
    _check_op(node, n, src)
    return node


def apply_op(node: Node, v: FockVec) -> FockVec:
    """Evaluate an operator AST on a Fock vector."""
    if isinstance(node, (Num, QPow)):
        return v.scale(_scalar(node, ""))
    if isinstance(node, Atom):
        name, args = node.name, node.args
        if name == "D":
            return act(Gen("d"), v)
        if name in ("E", "F", "K", "Kinv"):
            return act(Gen(name, args[0]), v)
        if name == "B":
            return B(args[0], v)
        if name == "Omega":
            return omega_mode(args[0], args[1], v)
        raise ValueError(f"unknown atom {name}")
    if isinstance(node, Prod):
        for f in reversed(node.factors):
            v = apply_op(f, v)
        return v
    if isinstance(node, Sum):
        parts = [apply_op(t, v).scale(s) for s, t in node.terms]
        out = parts[0]
        for p in parts[1:]:
            if p.charge != out.charge:
                raise ValueError(f"operator sum mixes charges {out.charge} and {p.charge}")
            out = out + p
        return out
    raise ValueError(f"not an operator: {node!r}")
