"""Ideal algebra: sum, product, power, intersection and colon.

Quotient rings R = P/J0 are handled by working with A + J0 in the ambient
polynomial ring P; lengths and memberships downstream are all taken modulo
J0, so images of the ambient results are correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .groebner import _monic_split, _reduce_full, buchberger, quotient_length
from .polyring import Monomial, MonomialOrder, Polynomial, RingSpec
from .semigroup import SemigroupIdeal

INTERREDUCTION_THRESHOLD = 64


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal of a polynomial-mode ring.

    `unit` is set when a colon or intersection produced a unit (the ideal is
    the whole ring); downstream length computations then report 0.
    """

    ring: RingSpec
    gens: tuple
    unit: bool = False


def make_ideal(ring, gens, unit=None):
    if ring.mode != "polynomial":
        raise ValueError("Ideal lives in a polynomial-mode ring")
    cleaned = []
    seen = set()
    for g in gens:
        if isinstance(g, str):
            from .polyring import parse_polynomial

            g = parse_polynomial(g, ring)
        if g.arity != ring.arity:
            raise ValueError("generator arity mismatch")
        if g.is_zero:
            continue
        sig = g.signature()
        if sig in seen:
            continue
        seen.add(sig)
        cleaned.append(g)
    if not cleaned:
        raise ValueError("an ideal needs at least one nonzero generator")
    if unit is None:
        unit = any(g.total_degree() == 0 for g in cleaned)
    return Ideal(ring=ring, gens=tuple(cleaned), unit=unit)


def _dedup(gens):
    out, seen = [], set()
    for g in gens:
        if g.is_zero:
            continue
        sig = g.signature()
        if sig not in seen:
            seen.add(sig)
            out.append(g)
    return out


def _interreduce(gens, order):
    """Drop generators whose normal form modulo the earlier ones is zero."""
    keyf = order.key
    kept, leads, tails = [], [], []
    for g in gens:
        if leads and not _reduce_full(g.terms, leads, tails, keyf):
            continue
        kept.append(g)
        lead, tail = _monic_split(g.terms, keyf)
        leads.append(lead)
        tails.append(tail)
    return kept


def ideal_combine(kind, a, b, threshold=INTERREDUCTION_THRESHOLD):
    """Sum or product of two ideals over the same ring."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    if kind == "sum":
        gens = _dedup(list(a.gens) + list(b.gens))
    elif kind == "product":
        gens = _dedup([f * g for f in a.gens for g in b.gens])
    else:
        raise ValueError("unknown combination kind %r" % (kind,))
    if len(gens) > threshold:
        gens = _interreduce(gens, a.ring.order)
    return make_ideal(a.ring, gens, unit=a.unit and b.unit if kind == "product" else a.unit or b.unit)


def ideal_power(a, k, threshold=INTERREDUCTION_THRESHOLD):
    """k-th power, k >= 1: all degree-k products of generators, deduplicated."""
    if k < 1:
        raise ValueError("ideal power needs k >= 1 (the unit ideal is unrepresented)")
    if isinstance(a, SemigroupIdeal):
        sums = set()
        for combo in combinations_with_replacement(a.gens, k):
            sums.add(tuple(sum(c) for c in zip(*combo)))
        return SemigroupIdeal(a.semigroup, sorted(sums))
    if k == 1:
        return a
    gens = list(a.gens)
    power = list(a.gens)
    for _ in range(k - 1):
        power = _dedup([f * g for f in power for g in gens])
    if len(power) > threshold:
        power = _interreduce(power, a.ring.order)
    return make_ideal(a.ring, power, unit=a.unit)


def _strip_aux(poly, arity):
    return Polynomial({Monomial(m[1:]): c for m, c in poly.terms.items()}, arity)


def _intersect_gens(gens_a, gens_b, arity):
    """Generators of (gens_a) meet (gens_b) via the auxiliary variable trick:
    eliminate t from t*A + (1-t)*B."""
    ext = arity + 1
    order = MonomialOrder("elimination", 1)

    def lift(poly, mul_t, one_minus_t):
        terms = {}
        for m, c in poly.terms.items():
            if mul_t or one_minus_t:
                key = Monomial((1,) + tuple(m))
                terms[key] = terms.get(key, 0) + (c if mul_t else -c)
            if one_minus_t:
                key = Monomial((0,) + tuple(m))
                terms[key] = terms.get(key, 0) + c
        return Polynomial(terms, ext)

    lifted = [lift(g, True, False) for g in gens_a]
    lifted += [lift(g, False, True) for g in gens_b]
    basis = buchberger(lifted, order)
    survivors = [g for g in basis.gens if all(m[0] == 0 for m in g.terms)]
    return [_strip_aux(g, arity) for g in survivors]


def ideal_intersect(a, b):
    """Intersection of two ideals of the same polynomial-mode ring."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    if a.ring.mode != "polynomial":
        raise ValueError("semigroup intersections are not supported here")
    ring = a.ring
    ga = _dedup(list(a.gens) + list(ring.quotient_gens))
    gb = _dedup(list(b.gens) + list(ring.quotient_gens))
    gens = _intersect_gens(ga, gb, ring.arity)
    if not gens:
        raise RuntimeError("intersection of nonzero ideals came out empty")
    unit = quotient_length(ring, gens) == 0
    return make_ideal(ring, gens, unit=unit)


def _divide_exact(g, f, order):
    """Quotient g/f for g in (f); division failure is an internal defect."""
    keyf = order.key
    flead, ftail = _monic_split(f.terms, keyf)
    fc = f.terms[flead]
    rem = dict(g.terms)
    quot = {}
    while rem:
        m = max(rem, key=keyf)
        if not flead.divides(m):
            raise RuntimeError("colon division failed: %r not divisible" % (m,))
        shift = m.div(flead)
        c = rem[m] / fc
        quot[shift] = c
        del rem[m]
        for tm, tc in ftail.items():
            key = tm.mul(shift)
            v = rem.get(key, 0) - c * tc * fc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return Polynomial(quot, g.arity)


def ideal_colon(a, b):
    """Colon ideal A : B = {f : f*B in A}, computed in the ambient ring as
    the intersection over generators f of B of (A meet (f)) / f."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    if a.ring.mode != "polynomial":
        raise ValueError("semigroup colons go through sg_colon_max")
    if not b.gens:
        raise ValueError("colon by the zero ideal")
    ring = a.ring
    ambient = _dedup(list(a.gens) + list(ring.quotient_gens))
    current = None
    for f in b.gens:
        meet = _intersect_gens(ambient, [f], ring.arity)
        part = [_divide_exact(g, f, ring.order) for g in meet]
        part = _dedup(part)
        if current is None:
            current = part
        else:
            current = _intersect_gens(current, part, ring.arity)
    if not current:
        raise RuntimeError("colon computation came out empty")
    keyf = ring.order.key
    current.sort(key=lambda g: (keyf(g.leading_term(ring.order)[0]), g.signature()))
    unit = quotient_length(ring, current) == 0
    return make_ideal(ring, current, unit=unit)


def ideal_membership(ring, f, gens):
    """Normal-form membership of f in (gens + quotient_gens)."""
    pool = [g for g in tuple(ring.quotient_gens) + tuple(gens) if not g.is_zero]
    basis = buchberger(pool, ring.order)
    leads, tails = basis.reducers()
    return not _reduce_full(f.terms, leads, tails, ring.order.key)
