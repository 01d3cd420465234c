"""Affine semigroup rings: membership, monomial-ideal lengths, socles and
the saturation gap of a plane semigroup.

Membership is dynamic programming over a growing bounding box.  Cofinite
complements are enumerated column by column (first coordinate) and the scan
stops once a run of fully covered columns past every generator coordinate is
seen; a hard per-axis cap turns runaway scans into NotCofinite / NotFinite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import ceil, gcd

from .errors import NotCofinite, NotFinite

BOX_CAP = 2**14
STABLE_COLUMNS = 3


class AffineSemigroup:
    """A finitely generated subsemigroup of N^dim with a membership cache."""

    def __init__(self, dim, gens, box_cap=BOX_CAP):
        self.dim = int(dim)
        cleaned = []
        seen = set()
        for g in gens:
            v = tuple(int(x) for x in g)
            if len(v) != self.dim:
                raise ValueError("generator %r has wrong dimension" % (g,))
            if any(x < 0 for x in v):
                raise ValueError("generators live in N^dim")
            if not any(v):
                raise ValueError("zero generator")
            if v in seen:
                raise ValueError("duplicate generator %r" % (v,))
            seen.add(v)
            cleaned.append(v)
        if not cleaned:
            raise ValueError("need at least one generator")
        self.gens = tuple(cleaned)
        self.box_cap = box_cap
        self._box = tuple(max(g[i] for g in self.gens) for i in range(self.dim))
        self._cache = {}
        self._fill()

    def _fill(self):
        cache = {}
        ranges = [range(b + 1) for b in self._box]
        gens = self.gens
        for v in product(*ranges):
            if not any(v):
                cache[v] = True
                continue
            hit = False
            for g in gens:
                w = tuple(a - b for a, b in zip(v, g))
                if min(w) >= 0 and cache[w]:
                    hit = True
                    break
            cache[v] = hit
        self._cache = cache

    def _grow_to(self, v):
        new_box = tuple(max(b, x) for b, x in zip(self._box, v))
        if any(x > self.box_cap for x in new_box):
            raise NotCofinite(
                "membership box exceeded the %d-per-axis cap" % self.box_cap
            )
        # grow in chunks so repeated nearby queries do not refill constantly
        self._box = tuple(
            max(nb, min(2 * ob + 1, self.box_cap)) if nb > ob else ob
            for nb, ob in zip(new_box, self._box)
        )
        self._fill()

    def membership(self, v):
        """True iff v is a sum of generators (the empty sum gives 0)."""
        v = tuple(int(x) for x in v)
        if len(v) != self.dim:
            raise ValueError("vector %r has wrong dimension" % (v,))
        if any(x < 0 for x in v):
            return False
        if any(x > b for x, b in zip(v, self._box)):
            self._grow_to(v)
        return self._cache[v]

    def __repr__(self):
        return "AffineSemigroup(dim=%d, gens=%r)" % (self.dim, self.gens)


class SemigroupIdeal:
    """The monomial ideal of a semigroup generated by lattice points of S;
    its monomial set is the union over generators g of g + S."""

    def __init__(self, semigroup, gens):
        self.semigroup = semigroup
        cleaned = []
        seen = set()
        for g in gens:
            v = tuple(int(x) for x in g)
            if not semigroup.membership(v):
                raise ValueError("ideal generator %r is not in the semigroup" % (v,))
            if v not in seen:
                seen.add(v)
                cleaned.append(v)
        if not cleaned:
            raise ValueError("need at least one ideal generator")
        self.gens = tuple(cleaned)

    def contains(self, v):
        S = self.semigroup
        for g in self.gens:
            w = tuple(a - b for a, b in zip(v, g))
            if min(w) >= 0 and S.membership(w):
                return True
        return False


def _max_coord(items, axis):
    return max((v[axis] for v in items), default=0)


def _complement_planar(ideal):
    """Vectors of S outside the ideal, for dim 1 and 2."""
    S = ideal.semigroup
    dim = S.dim
    gens_all = list(S.gens) + list(ideal.gens)
    xstop = _max_coord(gens_all, 0)
    # a fully covered run this wide propagates: every semigroup element
    # reaches back into the run through one of its generators
    run_needed = max(STABLE_COLUMNS, _max_coord(S.gens, 0))
    missing = []

    if dim == 1:
        x, run = 0, 0
        while True:
            if x > S.box_cap:
                raise NotCofinite("no conductor found below the cap")
            hit = S.membership((x,)) and not ideal.contains((x,))
            if hit:
                missing.append((x,))
                run = 0
            else:
                run += 1
            if x > xstop and run >= run_needed:
                return missing
            x += 1

    verticals = [g for g in S.gens if g[0] == 0]
    slopes = [Fraction(g[1], g[0]) for g in S.gens if g[0] > 0]
    margin = _max_coord(gens_all, 1) + STABLE_COLUMNS + 1

    def column_missing(x):
        if not verticals:
            if not slopes:
                return []
            ytop = int(ceil(max(slopes) * x))
            return [
                (x, y)
                for y in range(ytop + 1)
                if S.membership((x, y)) and not ideal.contains((x, y))
            ]
        # with a vertical generator columns are unbounded; extend until a
        # clear top margin certifies the ideal staircase covers the rest
        ytop = max(margin * 2, int(ceil(max(slopes) * x)) if slopes else 0)
        while True:
            if ytop > S.box_cap:
                raise NotCofinite("column %d has no covered top margin" % x)
            rows = [
                (x, y)
                for y in range(ytop + 1)
                if S.membership((x, y)) and not ideal.contains((x, y))
            ]
            if not rows or rows[-1][1] <= ytop - margin:
                return rows
            ytop *= 2

    x, run = 0, 0
    while True:
        if x > S.box_cap:
            raise NotCofinite("no covered column run found below the cap")
        rows = column_missing(x)
        if rows:
            missing.extend(rows)
            run = 0
        else:
            run += 1
        if x > xstop and run >= run_needed:
            return missing
        x += 1


def _complement_boxed(ideal):
    """Box-doubling enumeration for dim >= 3."""
    S = ideal.semigroup
    dim = S.dim
    gens_all = list(S.gens) + list(ideal.gens)
    margins = tuple(_max_coord(gens_all, i) + 1 for i in range(dim))
    box = tuple(2 * m for m in margins)
    previous = None
    while True:
        if any(b > S.box_cap for b in box):
            raise NotCofinite("complement box exceeded the cap")
        missing = [
            v
            for v in product(*[range(b + 1) for b in box])
            if S.membership(v) and not ideal.contains(v)
        ]
        interior = all(
            all(v[i] <= box[i] - margins[i] for i in range(dim)) for v in missing
        )
        if interior and previous is not None and len(missing) == previous:
            return missing
        previous = len(missing)
        box = tuple(2 * b for b in box)


def sg_complement(ideal):
    """All lattice points of S not in the ideal (finite for cofinite ideals)."""
    if ideal.semigroup.dim <= 2:
        return _complement_planar(ideal)
    return _complement_boxed(ideal)


def sg_membership(semigroup, v):
    return semigroup.membership(v)


def sg_length(ideal):
    """Length of (semigroup ring)/(ideal): the size of S minus the ideal."""
    return len(sg_complement(ideal))


def _minimalize(semigroup, gens):
    """Drop generators lying in the ideal spanned by the others."""
    ordered = sorted(set(tuple(g) for g in gens), key=lambda v: (sum(v), v))
    kept = []
    for g in ordered:
        redundant = False
        for h in kept:
            w = tuple(a - b for a, b in zip(g, h))
            if min(w) >= 0 and semigroup.membership(w):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    return kept


def sg_colon_max(ideal):
    """I : m for m the ideal of all nonzero semigroup elements.

    Returns the colon ideal together with its socle points, the elements of
    S outside I pushed into I by every semigroup generator.
    """
    S = ideal.semigroup
    outside = sg_complement(ideal)
    socle = [
        v
        for v in outside
        if all(ideal.contains(tuple(a + b for a, b in zip(v, g))) for g in S.gens)
    ]
    socle.sort()
    gens = _minimalize(S, list(ideal.gens) + socle)
    return SemigroupIdeal(S, gens), socle


def _lattice_basis(gens):
    """Hermite-style basis rows (a, b), (0, c) of the group generated by the
    plane generators; a or c may be 0 for degenerate lattices."""
    a, b, c = 0, 0, 0
    for x, y in gens:
        if x and a == 0:
            a, b = x, y
        elif x:
            # fold (x, y) into (a, b), pushing the eliminated row into c
            while x:
                q = a // x
                a, b, x, y = x, y, a - q * x, b - q * y
            c = gcd(c, abs(y))
        else:
            c = gcd(c, abs(y))
    return a, b, c


def _in_lattice(v, basis):
    a, b, c = basis
    x, y = v
    if a == 0:
        if x != 0:
            return False
        return y % c == 0 if c else y == 0
    if x % a:
        return False
    rem = y - (x // a) * b
    return rem % c == 0 if c else rem == 0


def sg_closure_gap(semigroup):
    """Lattice points of (group(S) meet cone(S)) missing from S, dim 2 only.

    Raises NotFinite when no conductor is detected below the cap.
    """
    S = semigroup
    if S.dim != 2:
        raise ValueError("closure gap is only computed for plane semigroups")

    def primitive(v):
        g = gcd(v[0], v[1])
        return (v[0] // g, v[1] // g)

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    rays = [primitive(g) for g in S.gens]
    lo = rays[0]
    hi = rays[0]
    for r in rays[1:]:
        if cross(lo, r) < 0:
            lo = r
        if cross(hi, r) > 0:
            hi = r
    if lo == hi:
        raise ValueError("generator cone has a single ray; gap undefined")
    basis = _lattice_basis(S.gens)
    xstop = _max_coord(S.gens, 0)
    run_needed = max(STABLE_COLUMNS, _max_coord(S.gens, 0))
    margin = _max_coord(S.gens, 1) + STABLE_COLUMNS + 1
    gaps = []

    def column_gaps(x):
        # cone slice: cross(lo, v) >= 0 and cross(v, hi) >= 0
        ylo = 0 if lo[0] == 0 else -(-(lo[1] * x) // lo[0])
        if hi[0] == 0:
            ytop = max(margin * 2, ylo + margin)
            while True:
                if ytop > S.box_cap:
                    raise NotFinite("column %d has no gap-free top margin" % x)
                rows = [
                    (x, y)
                    for y in range(ylo, ytop + 1)
                    if _in_lattice((x, y), basis) and not S.membership((x, y))
                ]
                if not rows or rows[-1][1] <= ytop - margin:
                    return rows
                ytop *= 2
        yhi = (hi[1] * x) // hi[0]
        return [
            (x, y)
            for y in range(ylo, yhi + 1)
            if _in_lattice((x, y), basis) and not S.membership((x, y))
        ]

    x, run = 0, 0
    while True:
        if x > S.box_cap:
            raise NotFinite("no conductor detected below the cap")
        rows = column_gaps(x)
        if rows:
            gaps.extend(rows)
            run = 0
        else:
            run += 1
        if x > xstop and run >= run_needed:
            return sorted(gaps)
        x += 1
