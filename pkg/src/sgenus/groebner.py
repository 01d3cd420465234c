"""Reduced Groebner bases, normal forms, staircase enumeration and lengths.

Buchberger's algorithm with the coprimality and chain criteria, normal pair
selection (smallest lcm first, ties by input index).  The reduced basis is
canonical for a given ideal and order, so outputs are reproducible byte for
byte.  Desk-scale inputs only: no F4/F5, no modular tricks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from heapq import heapify, heappop, heappush

from .errors import InfiniteQuotient
from .polyring import Monomial, Polynomial

INFINITE = math.inf


def _neg(key):
    if isinstance(key, tuple):
        return tuple(_neg(k) for k in key)
    return -key


def _reduce_full(fdict, leads, tails, keyf):
    """Full normal form of a term dict against monic reducers (lead, tail).

    Processes monomials from the top down with a lazy-deletion heap; every
    monomial moved to the output is irreducible, and eliminations only insert
    strictly smaller monomials, so each output monomial is final.
    """
    work = dict(fdict)
    if not work:
        return {}
    out = {}
    heap = [(_neg(keyf(m)), m) for m in work]
    heapify(heap)
    nred = len(leads)
    while heap:
        _, m = heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        hit = -1
        for i in range(nred):
            lead = leads[i]
            ok = True
            for a, b in zip(lead, m):
                if a > b:
                    ok = False
                    break
            if ok:
                hit = i
                break
        if hit < 0:
            out[m] = c
            continue
        shift = leads[hit]
        for tm, tc in tails[hit].items():
            key = Monomial(x + y - z for x, y, z in zip(tm, m, shift))
            prev = work.get(key)
            if prev is None:
                work[key] = -c * tc
                heappush(heap, (_neg(keyf(key)), key))
            else:
                v = prev - c * tc
                if v:
                    work[key] = v
                else:
                    del work[key]
    return out


def _monic_split(d, keyf):
    lead = max(d, key=keyf)
    lc = d[lead]
    tail = {m: c / lc for m, c in d.items() if m != lead}
    return lead, tail


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis; gens sorted by leading monomial."""

    gens: tuple
    order: object
    leading: frozenset
    arity: int

    def reducers(self):
        keyf = self.order.key
        leads, tails = [], []
        for g in self.gens:
            lead, tail = _monic_split(g.terms, keyf)
            leads.append(lead)
            tails.append(tail)
        return leads, tails


def buchberger(gens, order):
    """Reduced Groebner basis of the ideal generated by `gens`."""
    polys = [g for g in gens if not g.is_zero]
    if not polys:
        raise ValueError("need at least one nonzero generator")
    arity = polys[0].arity
    if any(g.arity != arity for g in polys):
        raise ValueError("generators have mixed arities")
    keyf = order.key

    leads, tails = [], []
    pending = set()
    heap = []

    def add_element(d):
        lead, tail = _monic_split(d, keyf)
        t = len(leads)
        leads.append(lead)
        tails.append(tail)
        for i in range(t):
            lcm = leads[i].lcm(lead)
            heappush(heap, (keyf(lcm), i, t, lcm))
            pending.add((i, t))

    seen = set()
    for g in polys:
        lead, tail = _monic_split(dict(g.terms), keyf)
        sig = (lead, tuple(sorted(tail.items())))
        if sig in seen:
            continue
        seen.add(sig)
        add_element(dict(g.terms))

    while heap:
        _, i, j, lcm = heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        # coprime leading monomials: the S-polynomial reduces to zero
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        # chain criterion: an already-treated third element divides the lcm
        skip = False
        for k in range(len(leads)):
            if k == i or k == j:
                continue
            if leads[k].divides(lcm):
                pi = (k, i) if k < i else (i, k)
                pj = (k, j) if k < j else (j, k)
                if pi not in pending and pj not in pending:
                    skip = True
                    break
        if skip:
            continue
        si = lcm.div(li)
        sj = lcm.div(lj)
        s = {}
        for m, c in tails[i].items():
            s[m.mul(si)] = c
        for m, c in tails[j].items():
            key = m.mul(sj)
            v = s.get(key, 0) - c
            if v:
                s[key] = v
            else:
                s.pop(key, None)
        nf = _reduce_full(s, leads, tails, keyf)
        if nf:
            add_element(nf)

    # minimalize: keep only leads not divisible by another kept lead
    order_idx = sorted(range(len(leads)), key=lambda t: keyf(leads[t]))
    kept = []
    for t in order_idx:
        if not any(leads[k].divides(leads[t]) for k in kept):
            kept.append(t)
    klds = [leads[t] for t in kept]
    ktls = [tails[t] for t in kept]
    # tail-reduce each survivor against the whole minimal set
    final = []
    for pos, t in enumerate(kept):
        tail_nf = _reduce_full(tails[t], klds, ktls, keyf)
        d = {leads[t]: Fraction(1)}
        d.update(tail_nf)
        final.append(Polynomial(d, arity))
        ktls[pos] = tail_nf
    return GroebnerBasis(
        gens=tuple(final),
        order=order,
        leading=frozenset(klds),
        arity=arity,
    )


def normal_form(f, basis):
    """Unique representative of f modulo the ideal with an irreducible support."""
    if f.arity != basis.arity:
        raise ValueError("arity mismatch: %d vs %d" % (f.arity, basis.arity))
    leads, tails = basis.reducers()
    nf = _reduce_full(f.terms, leads, tails, basis.order.key)
    return Polynomial(nf, f.arity)


@dataclass(frozen=True)
class StandardMonomialSet:
    """Monomials outside the leading-term staircase; empty set when infinite."""

    finite: bool
    members: frozenset


def standard_monomials(basis):
    """Enumerate the staircase complement; finite iff every variable has a
    pure power among the leading monomials."""
    leads = sorted(basis.leading)
    arity = basis.arity
    if any(m.degree == 0 for m in leads):
        return StandardMonomialSet(True, frozenset())
    bounds = [None] * arity
    for m in leads:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return StandardMonomialSet(False, frozenset())

    members = []

    def walk(j, prefix, active):
        if j == arity:
            if not active:
                members.append(Monomial(prefix))
            return
        # a still-active lead supported on decided variables divides everything
        for lead in active:
            if all(lead[i] == 0 for i in range(j, arity)):
                return
        for e in range(bounds[j]):
            prefix.append(e)
            walk(j + 1, prefix, [l for l in active if l[j] <= e])
            prefix.pop()

    walk(0, [], leads)
    return StandardMonomialSet(True, frozenset(members))


def quotient_length(ring, ideal_gens):
    """k-dimension of ambient/(quotient_gens + ideal_gens), or INFINITE."""
    if ring.mode != "polynomial":
        raise ValueError("quotient_length needs a polynomial-mode ring")
    gens = [g for g in tuple(ring.quotient_gens) + tuple(ideal_gens) if not g.is_zero]
    if not gens:
        return INFINITE
    basis = buchberger(gens, ring.order)
    sm = standard_monomials(basis)
    if not sm.finite:
        return INFINITE
    return len(sm.members)


def is_origin_supported(ring, ideal_gens):
    """True iff every variable is nilpotent modulo quotient + ideal.

    When the quotient has finite length L this holds exactly when the support
    is the origin, which makes the global colength agree with the local one.
    Checks x_i^N -> 0 for some N <= L by iterated normal forms.
    """
    gens = [g for g in tuple(ring.quotient_gens) + tuple(ideal_gens) if not g.is_zero]
    if not gens:
        raise InfiniteQuotient("zero ideal has infinite colength")
    basis = buchberger(gens, ring.order)
    sm = standard_monomials(basis)
    if not sm.finite:
        raise InfiniteQuotient("quotient length is infinite")
    length = len(sm.members)
    for i in range(ring.arity):
        x = Polynomial.variable(i, ring.arity)
        nf = normal_form(x, basis)
        steps = 1
        while not nf.is_zero:
            if steps > length:
                return False
            nf = normal_form(nf * x, basis)
            steps += 1
    return True
