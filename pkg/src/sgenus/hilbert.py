"""Hilbert-Samuel length sequences, exact coefficient extraction, and the
assembly of the numerical invariants of a parameter ideal.

Sign convention, fixed once for the whole package:

    len(R / I^(n+1)) = sum_i (-1)^i e_i * C(n + d - i, d - i)

for n past the postulation index n0.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb

from .errors import (
    DegenerateColon,
    DegreeMismatch,
    InfiniteQuotient,
    NotCofinite,
    NotDim2,
    NotPrimary,
    NotStabilized,
)
from .groebner import INFINITE, is_origin_supported, quotient_length
from .idealops import Ideal, ideal_colon, ideal_power, make_ideal
from .semigroup import SemigroupIdeal, sg_colon_max, sg_length

DEFAULT_WINDOW = 2


@dataclass(frozen=True)
class LengthSequence:
    """values[n] = len(R / I^(n+1)) for n = 0..nmax."""

    dim: int
    values: tuple
    backend: str


@dataclass(frozen=True)
class HilbertData:
    """Exact signed coefficients (e_0, ..., e_d) and the postulation index."""

    e: tuple
    n0: int

    @property
    def e0(self):
        return self.e[0]

    @property
    def e1(self):
        return self.e[1] if len(self.e) > 1 else 0

    @property
    def e2(self):
        return self.e[2] if len(self.e) > 2 else 0


def hilbert_value(e, n):
    """Evaluate the fitted polynomial at n under the sign convention."""
    d = len(e) - 1
    return sum((-1) ** i * e[i] * comb(n + d - i, d - i) for i in range(d + 1))


@dataclass(frozen=True)
class InvariantReport:
    """The invariants of one parameter ideal q and its colon J = q : m."""

    dim: int
    len_q: int
    len_colon: int
    e_q: HilbertData
    e_colon: HilbertData
    sg_q: int
    sg_colon: int
    i_q: int
    ir: int
    r: int | None
    origin_supported: bool
    e0_agreement: bool


@dataclass(frozen=True)
class CohomologyEstimate:
    """Dimension-2 inference of local cohomology lengths and socle sizes."""

    h0: int
    h1: int
    r0: int
    r1: int
    r2: int
    valid: bool


def _power_length(ring, ideal, n):
    power = ideal_power(ideal, n + 1)
    if isinstance(power, SemigroupIdeal):
        return sg_length(power)
    if power.unit:
        return 0
    return quotient_length(ring, power.gens)


def hs_sequence(ring, ideal, nmax, dim=None):
    """Lengths of R/I^(n+1) for n = 0..nmax.

    Polynomial mode requires the quotient by I to be finite and supported at
    the origin so that global and local lengths agree; semigroup mode
    requires a cofinite ideal.  Violations raise NotPrimary.
    """
    if isinstance(ideal, SemigroupIdeal):
        if ring.mode != "semigroup":
            raise ValueError("semigroup ideal against a polynomial ring")
        if dim is None:
            dim = ring.sg_dim
        try:
            values = tuple(_power_length(ring, ideal, n) for n in range(nmax + 1))
        except NotCofinite as exc:
            raise NotPrimary("ideal is not cofinite: %s" % exc) from exc
        return LengthSequence(dim=dim, values=values, backend="semigroup")
    if ring.mode != "polynomial":
        raise ValueError("polynomial ideal against a semigroup ring")
    if dim is None:
        dim = len(ideal.gens)
    try:
        if not is_origin_supported(ring, ideal.gens):
            raise NotPrimary("quotient by the ideal is not supported at the origin")
    except InfiniteQuotient as exc:
        raise NotPrimary(str(exc)) from exc
    values = []
    for n in range(nmax + 1):
        length = _power_length(ring, ideal, n)
        if length is INFINITE:
            raise NotPrimary("power %d has infinite colength" % (n + 1))
        values.append(length)
    return LengthSequence(dim=dim, values=tuple(values), backend="polynomial")


def _finite_difference(values, order, at):
    """order-th forward difference of values at index `at` (exact)."""
    return sum((-1) ** (order - k) * comb(order, k) * values[at + k] for k in range(order + 1))


def fit_hilbert(seq, window=DEFAULT_WINDOW):
    """Interpolate the degree-d Hilbert polynomial through the last d+1
    values by finite-difference back-substitution.

    n0 is the least index from which every observed value matches; at least
    `window` matches are required beyond the d+1 interpolation points, else
    NotStabilized.  A non-constant leading difference at the frontier raises
    DegreeMismatch instead.
    """
    d = seq.dim
    values = seq.values
    total = len(values)
    window = max(1, window)
    if total < d + 1 + window:
        raise NotStabilized(
            "need at least %d values for dimension %d, got %d; raise nmax"
            % (d + 1 + window, d, total)
        )
    last = total - 1
    base = last - d
    e = []
    for i in range(d + 1):
        lhs = _finite_difference(values, d - i, base)
        acc = lhs - sum(
            (-1) ** j * e[j] * comb(base + d - j, i - j) for j in range(i)
        )
        e.append(acc if i % 2 == 0 else -acc)
    e = tuple(e)
    n = last
    while n >= 0 and values[n] == hilbert_value(e, n):
        n -= 1
    n0 = n + 1
    if n0 > base - window:
        lead_last = _finite_difference(values, d, base)
        lead_prev = _finite_difference(values, d, base - 1)
        if lead_last != lead_prev:
            raise DegreeMismatch(
                "leading difference is not constant at the frontier (%s vs %s)"
                % (lead_prev, lead_last)
            )
        raise NotStabilized(
            "only %d values match beyond the interpolation window; raise nmax"
            % (base - n0)
        )
    return HilbertData(e=e, n0=n0)


def _colon_of_max(ring, q):
    """q : m together with len(R/q) and len(R/(q:m))."""
    if isinstance(q, SemigroupIdeal):
        len_q = sg_length(q)
        colon, socle = sg_colon_max(q)
        if any(not any(v) for v in colon.gens):
            raise DegenerateColon(
                "q : m contains the identity; q is the maximal ideal"
            )
        return colon, len_q, len_q - len(socle)
    len_q = quotient_length(ring, q.gens)
    colon = ideal_colon(q, make_ideal(ring, ring.maximal_ideal_gens()))
    if colon.unit:
        raise DegenerateColon(
            "q : m contains a unit; q is the maximal ideal (multiplicity-1 case)"
        )
    len_colon = quotient_length(ring, colon.gens)
    return colon, len_q, len_colon


def build_bundle(ring, q, nmax, r=None, window=DEFAULT_WINDOW):
    """Workhorse behind build_report; returns sequences and the report."""
    if ring.mode == "semigroup":
        if not isinstance(q, SemigroupIdeal):
            raise ValueError("semigroup ring needs a SemigroupIdeal")
        d = ring.sg_dim
        if len(q.gens) != d:
            raise NotPrimary(
                "parameter ideal needs exactly %d generators, got %d"
                % (d, len(q.gens))
            )
    else:
        if not isinstance(q, Ideal):
            raise ValueError("polynomial ring needs an Ideal")
        d = len(q.gens)
    colon, len_q, len_colon = _colon_of_max(ring, q)
    seq_q = hs_sequence(ring, q, nmax, dim=d)
    seq_colon = hs_sequence(ring, colon, nmax, dim=d)
    fit_q = fit_hilbert(seq_q, window=window)
    fit_colon = fit_hilbert(seq_colon, window=window)
    if fit_q.e0 < 1:
        raise NotPrimary("fitted multiplicity e0 = %d < 1" % fit_q.e0)
    report = InvariantReport(
        dim=d,
        len_q=len_q,
        len_colon=len_colon,
        e_q=fit_q,
        e_colon=fit_colon,
        sg_q=len_q - fit_q.e0 + fit_q.e1,
        sg_colon=len_colon - fit_colon.e0 + fit_colon.e1,
        i_q=len_q - fit_q.e0,
        ir=len_q - len_colon,
        r=r,
        origin_supported=True,
        e0_agreement=fit_q.e0 == fit_colon.e0,
    )
    return seq_q, seq_colon, colon, report


def build_report(ring, q, nmax, r=None, window=DEFAULT_WINDOW):
    """Compute both Hilbert data sets and assemble the invariant report."""
    return build_bundle(ring, q, nmax, r=r, window=window)[3]


def with_type(report, r):
    return replace(report, r=r)


def infer_cohomology_dim2(report):
    """Invert the dimension-2 coefficient identities of a generalized
    Cohen-Macaulay ring:

        e1(q) = -h1        e2(q) = h0
        e1(q:m) = r1 + r2 - h1        e2(q:m) = h0 - r1
        ir = r0 + 2 r1 + r2

    The estimate is flagged invalid when it cannot come from an actual ring
    (negative entries, r2 < 1, or socle sizes exceeding module lengths).
    """
    if report.dim != 2:
        raise NotDim2("cohomology inference needs a 2-dimensional report")
    h1 = -report.e_q.e1
    h0 = report.e_q.e2
    r1 = h0 - report.e_colon.e2
    r2 = report.e_colon.e1 + h1 - r1
    r0 = report.ir - 2 * r1 - r2
    valid = (
        min(h0, h1, r0, r1) >= 0 and r2 >= 1 and r0 <= h0 and r1 <= h1
    )
    return CohomologyEstimate(h0=h0, h1=h1, r0=r0, r1=r1, r2=r2, valid=valid)
