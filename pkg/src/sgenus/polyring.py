"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are exponent tuples, polynomials are finite term maps with nonzero
rational coefficients, and a ring declaration fixes variables, a monomial
order and optional quotient relations.  All values are immutable, so they can
be shared freely by the Groebner machinery and across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

LT, EQ, GT = -1, 0, 1


class Monomial(tuple):
    """Exponent vector of a monomial; behaves as a tuple of naturals."""

    __slots__ = ()

    def __new__(cls, exponents):
        mono = super().__new__(cls, tuple(int(e) for e in exponents))
        if any(e < 0 for e in mono):
            raise ValueError("exponents must be naturals: %r" % (tuple(mono),))
        return mono

    @property
    def degree(self):
        return sum(self)

    def mul(self, other):
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other):
        return len(self) == len(other) and all(a <= b for a, b in zip(self, other))

    def div(self, other):
        """self / other as exponent difference; other must divide self."""
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other):
        return Monomial(max(a, b) for a, b in zip(self, other))

    def __repr__(self):
        return "Monomial%r" % (tuple(self),)


def _drl_key(exponents):
    # larger key <=> larger monomial under graded reverse lexicographic order
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order: lex, degrevlex, or a block elimination order.

    The elimination order compares the leading block of `block` variables by
    degrevlex before the remaining variables, so any monomial involving a
    block variable exceeds every monomial avoiding the block.
    """

    kind: str
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "elimination"):
            raise ValueError("unknown monomial order %r" % (self.kind,))
        if self.kind == "elimination" and self.block < 1:
            raise ValueError("elimination block size must be >= 1")

    def key(self, mono):
        """Sort key: key(a) < key(b) iff a < b in this order."""
        if self.kind == "degrevlex":
            return _drl_key(mono)
        if self.kind == "lex":
            return tuple(mono)
        return (_drl_key(mono[: self.block]), _drl_key(mono[self.block :]))


def compare_monomials(order, a, b):
    """Compare two same-arity monomials; returns LT, EQ or GT."""
    if len(a) != len(b):
        raise ValueError("arity mismatch: %d vs %d" % (len(a), len(b)))
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


class Polynomial:
    """Finite map monomial -> nonzero rational, with a fixed arity."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms, arity):
        merged = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            if len(mono) != arity:
                raise ValueError("monomial arity %d != %d" % (len(mono), arity))
            c = merged.get(mono, 0) + Fraction(coeff)
            if c:
                merged[mono] = c
            else:
                merged.pop(mono, None)
        self.terms = merged
        self.arity = arity

    @classmethod
    def zero(cls, arity):
        return cls({}, arity)

    @classmethod
    def constant(cls, value, arity):
        return cls({Monomial((0,) * arity): value}, arity)

    @classmethod
    def variable(cls, index, arity):
        exps = [0] * arity
        exps[index] = 1
        return cls({Monomial(exps): 1}, arity)

    @classmethod
    def from_monomial(cls, mono, coeff=1):
        return cls({mono: coeff}, len(mono))

    @property
    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((m.degree for m in self.terms), default=0)

    def leading_term(self, order):
        """(monomial, coefficient) of the largest term under `order`."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order):
        """Terms sorted descending by `order`."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.arity)
        return Polynomial({m: c * factor for m, c in self.terms.items()}, self.arity)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError("expected Polynomial, got %r" % (type(other),))
        if self.arity != other.arity:
            raise ValueError("arity mismatch: %d vs %d" % (self.arity, other.arity))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        res = Polynomial.zero(self.arity)
        res.terms = out
        return res

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) - c
            if v:
                out[m] = v
            else:
                del out[m]
        res = Polynomial.zero(self.arity)
        res.terms = out
        return res

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        res = Polynomial.zero(self.arity)
        res.terms = out
        return res

    def signature(self):
        """Canonical hashable form, used for deduplication and hashing."""
        return (self.arity, tuple(sorted(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        bits = ["%s:%s" % (tuple(m), c) for m, c in sorted(self.terms.items())]
        return "Polynomial{%s}" % ", ".join(bits)


def poly_arith(kind, f, g):
    """Exact ring arithmetic: kind is one of add, sub, mul."""
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError("unknown arithmetic kind %r" % (kind,))


@dataclass(frozen=True)
class RingSpec:
    """Ambient ring declaration.

    mode 'polynomial': a polynomial ring over Q in `vars` under `order`,
    optionally modulo the ideal generated by `quotient_gens`.
    mode 'semigroup': the monomial algebra of an affine semigroup living in
    N^sg_dim and generated by `sg_gens`.
    """

    mode: str
    vars: tuple = ()
    order: MonomialOrder = MonomialOrder("degrevlex")
    quotient_gens: tuple = ()
    sg_dim: int = 0
    sg_gens: tuple = ()

    def __post_init__(self):
        if self.mode == "polynomial":
            if not self.vars:
                raise ValueError("polynomial mode needs at least one variable")
            if len(set(self.vars)) != len(self.vars):
                raise ValueError("duplicate variable names")
            for g in self.quotient_gens:
                if g.arity != len(self.vars):
                    raise ValueError("quotient generator arity mismatch")
                if g.is_zero:
                    raise ValueError("zero quotient generator")
            if self.order.kind == "elimination" and not (
                1 <= self.order.block < len(self.vars)
            ):
                raise ValueError("elimination block out of range")
        elif self.mode == "semigroup":
            if self.sg_dim < 1:
                raise ValueError("semigroup dimension must be >= 1")
            seen = set()
            for v in self.sg_gens:
                if len(v) != self.sg_dim:
                    raise ValueError("semigroup generator has wrong dimension")
                if any(int(x) < 0 for x in v):
                    raise ValueError("semigroup generators live in N^dim")
                if not any(v):
                    raise ValueError("zero semigroup generator")
                if tuple(v) in seen:
                    raise ValueError("duplicate semigroup generator")
                seen.add(tuple(v))
            if not self.sg_gens:
                raise ValueError("semigroup mode needs generators")
        else:
            raise ValueError("unknown ring mode %r" % (self.mode,))

    @property
    def arity(self):
        return len(self.vars)

    def variable(self, name):
        return Polynomial.variable(self.vars.index(name), self.arity)

    def maximal_ideal_gens(self):
        """Generators of the irrelevant maximal ideal (all variables)."""
        return tuple(Polynomial.variable(i, self.arity) for i in range(self.arity))


def polynomial_ring(names, quotient=(), order="degrevlex"):
    """Convenience constructor; quotient entries may be source strings."""
    names = tuple(names)
    ordobj = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
    base = RingSpec(mode="polynomial", vars=names, order=ordobj)
    parsed = tuple(
        g if isinstance(g, Polynomial) else parse_polynomial(g, base) for g in quotient
    )
    return RingSpec(mode="polynomial", vars=names, order=ordobj, quotient_gens=parsed)


def semigroup_ring(dim, gens):
    return RingSpec(
        mode="semigroup",
        sg_dim=int(dim),
        sg_gens=tuple(tuple(int(x) for x in g) for g in gens),
    )


class PolyParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_INT = re.compile(r"\d+")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class _Scanner:
    def __init__(self, src, names):
        self.src = src
        self.pos = 0
        # longest declared name wins, so e.g. "x1" is not read as "x" "1"
        self.names = sorted(names, key=len, reverse=True)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.src):
            return ("end", None, self.pos)
        ch = self.src[self.pos]
        if ch in "+-*^/":
            return ("op", ch, self.pos)
        m = _INT.match(self.src, self.pos)
        if m:
            return ("int", m.group(), self.pos)
        for name in self.names:
            # greedy: the longest declared token wins
            if self.src.startswith(name, self.pos):
                return ("name", name, self.pos)
        if _IDENT.match(self.src, self.pos):
            word = _IDENT.match(self.src, self.pos).group()
            raise PolyParseError("unknown variable %r" % word, self.pos)
        raise PolyParseError("unexpected character %r" % ch, self.pos)

    def take(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.pos = pos + len(value)
        elif kind in ("op", "name"):
            self.pos = pos + len(value)
        return kind, value, pos


def parse_polynomial(src, ring):
    """Parse a polynomial expression against a polynomial-mode ring.

    Grammar: expression := term (('+'|'-') term)*;
    term := [integer ['/' natural]] ('*'? factor)*;
    factor := varname ('^' natural)?.  Whitespace is insignificant and a
    leading '-' negates the first term.  The '/' form only occurs in output
    printed by this library; handwritten input normally uses integers.
    """
    if ring.mode != "polynomial":
        raise ValueError("parse_polynomial needs a polynomial-mode ring")
    sc = _Scanner(src, ring.vars)
    arity = ring.arity
    index = {n: i for i, n in enumerate(ring.vars)}
    result = Polynomial.zero(arity)

    def parse_term(sign):
        kind, value, pos = sc.peek()
        coeff = Fraction(sign)
        saw_any = False
        if kind == "int":
            sc.take()
            coeff *= int(value)
            saw_any = True
            k2, v2, _ = sc.peek()
            if k2 == "op" and v2 == "/":
                sc.take()
                k3, v3, p3 = sc.take()
                if k3 != "int":
                    raise PolyParseError("expected denominator", p3)
                coeff /= int(v3)
        exps = [0] * arity
        while True:
            kind, value, pos = sc.peek()
            if kind == "op" and value == "*":
                sc.take()
                kind, value, pos = sc.peek()
                if kind != "name":
                    raise PolyParseError("expected variable after '*'", pos)
            if kind != "name":
                break
            sc.take()
            power = 1
            k2, v2, _ = sc.peek()
            if k2 == "op" and v2 == "^":
                sc.take()
                k3, v3, p3 = sc.take()
                if k3 != "int":
                    raise PolyParseError("expected exponent", p3)
                power = int(v3)
            exps[index[value]] += power
            saw_any = True
        if not saw_any:
            raise PolyParseError("expected a term", pos)
        return Polynomial({Monomial(exps): coeff}, arity)

    kind, value, pos = sc.peek()
    sign = 1
    if kind == "op" and value == "-":
        sc.take()
        sign = -1
    elif kind == "op" and value == "+":
        sc.take()
    result = result + parse_term(sign)
    while True:
        kind, value, pos = sc.peek()
        if kind == "end":
            return result
        if kind == "op" and value in "+-":
            sc.take()
            result = result + parse_term(1 if value == "+" else -1)
            continue
        raise PolyParseError("expected '+' or '-'", pos)


def format_polynomial(f, ring):
    """Canonical printing; parse(format(f)) == f."""
    if ring.mode != "polynomial":
        raise ValueError("format_polynomial needs a polynomial-mode ring")
    if f.is_zero:
        return "0"
    pieces = []
    for mono, coeff in f.sorted_terms(ring.order):
        factors = []
        for name, e in zip(ring.vars, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        mag = abs(coeff)
        num = str(mag.numerator) if mag.denominator == 1 else "%d/%d" % (
            mag.numerator,
            mag.denominator,
        )
        if not factors:
            body = num
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = num + "*" + "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)
