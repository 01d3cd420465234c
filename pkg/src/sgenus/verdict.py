"""Classification checks evaluated on an invariant report.

Each check evaluates one inequality chain or identity between sectional
genera, Hilbert coefficients, the index of reducibility and the
Cohen-Macaulay type.  A ring-theoretic conclusion (Cohen-Macaulay,
Gorenstein, quasi-Buchsbaum, or their negations) is only emitted when the
caller asserted the hypotheses the statement needs: unmixedness,
non-regularity, that q came from a distinguished (C-) system of parameters,
and for the bound-style checks that q sits deep enough in a power of m.
Without the assertions the raw evaluation is reported with no conclusion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingType, NotDim2

ASSERTION_FLAGS = ("unmixed", "non_regular", "c_parameter", "deep_in_g_power")

_CHAIN_HYPS = frozenset(ASSERTION_FLAGS)
_QB_HYPS = frozenset(("unmixed", "non_regular", "c_parameter"))


@dataclass(frozen=True)
class Link:
    label: str
    left: int
    relation: str
    right: int
    holds: bool
    equality: bool


@dataclass(frozen=True)
class VerdictRecord:
    check_id: str
    lhs: int | None
    mid: int | None
    rhs: int | None
    links: tuple
    holds: bool
    conclusion: str
    assumptions_required: tuple
    assumptions_asserted: tuple
    notes: tuple


def _link(label, left, relation, right):
    if relation == "<=":
        holds = left <= right
    elif relation == ">=":
        holds = left >= right
    elif relation == "==":
        holds = left == right
    else:
        raise ValueError("unknown relation %r" % (relation,))
    return Link(
        label=label,
        left=left,
        relation=relation,
        right=right,
        holds=holds,
        equality=left == right,
    )


def _record(check_id, links, required, asserted, conclusion, notes, lhs=None, mid=None, rhs=None):
    return VerdictRecord(
        check_id=check_id,
        lhs=lhs,
        mid=mid,
        rhs=rhs,
        links=tuple(links),
        holds=all(l.holds for l in links),
        conclusion=conclusion,
        assumptions_required=tuple(sorted(required)),
        assumptions_asserted=tuple(sorted(asserted)),
        notes=tuple(notes),
    )


def _hypotheses_met(required, asserted):
    return required <= frozenset(asserted)


_HYP_NOTE = "hypotheses not satisfied (ring not unmixed or q not a C-parameter ideal)"


def check_sg_chain(report, asserted=frozenset()):
    """Chain r - ir <= sg(q:m) <= sg(q); an equality on either link supports
    the Cohen-Macaulay classification, strictness on both refutes it."""
    if report.r is None:
        raise MissingType("SG_CHAIN needs the Cohen-Macaulay type r")
    lhs = report.r - report.ir
    mid = report.sg_colon
    rhs = report.sg_q
    links = [
        _link("type_defect_le_sg_colon", lhs, "<=", mid),
        _link("sg_colon_le_sg_q", mid, "<=", rhs),
    ]
    notes = []
    conclusion = ""
    if not all(l.holds for l in links):
        notes.append(_HYP_NOTE)
    elif _hypotheses_met(_CHAIN_HYPS, asserted):
        if any(l.equality for l in links):
            conclusion = "Cohen-Macaulay (SG_CHAIN equality)"
        else:
            conclusion = "not Cohen-Macaulay (SG_CHAIN strict)"
    else:
        notes.append("no conclusion: hypotheses not asserted")
    return _record("SG_CHAIN", links, _CHAIN_HYPS, asserted, conclusion, notes,
                   lhs=lhs, mid=mid, rhs=rhs)


def check_e2_chain(report, asserted=frozenset()):
    """Chain e2(q:m) <= e2(q) <= sg(q:m) + ir - r, with the auxiliary link
    e2(q:m) <= sg(q) carrying its own equality flag."""
    if report.dim < 2:
        raise NotDim2("E2_CHAIN needs dimension >= 2")
    if report.r is None:
        raise MissingType("E2_CHAIN needs the Cohen-Macaulay type r")
    lhs = report.e_colon.e2
    mid = report.e_q.e2
    rhs = report.sg_colon + report.ir - report.r
    links = [
        _link("e2_colon_le_e2_q", lhs, "<=", mid),
        _link("e2_q_le_sg_colon_plus_defect", mid, "<=", rhs),
        _link("aux_e2_colon_le_sg_q", lhs, "<=", report.sg_q),
    ]
    notes = []
    conclusion = ""
    if not all(l.holds for l in links):
        notes.append(_HYP_NOTE)
    elif _hypotheses_met(_CHAIN_HYPS, asserted):
        if any(l.equality for l in links):
            conclusion = "Cohen-Macaulay (E2_CHAIN equality)"
        else:
            conclusion = "not Cohen-Macaulay (E2_CHAIN strict)"
    else:
        notes.append("no conclusion: hypotheses not asserted")
    return _record("E2_CHAIN", links, _CHAIN_HYPS, asserted, conclusion, notes,
                   lhs=lhs, mid=mid, rhs=rhs)


def check_gorenstein(report, asserted=frozenset()):
    """Bound sg(q:m) <= 1 - ir characterizes Gorenstein rings."""
    lhs = report.sg_colon
    rhs = 1 - report.ir
    links = [_link("sg_colon_le_one_minus_ir", lhs, "<=", rhs)]
    notes = []
    conclusion = ""
    if _hypotheses_met(_CHAIN_HYPS, asserted):
        conclusion = (
            "Gorenstein (GORENSTEIN bound holds)"
            if links[0].holds
            else "not Gorenstein (GORENSTEIN bound fails)"
        )
    else:
        notes.append("no conclusion: hypotheses not asserted")
    return _record("GORENSTEIN", links, _CHAIN_HYPS, asserted, conclusion, notes,
                   lhs=lhs, rhs=rhs)


def check_quasi_buchsbaum(report, asserted=frozenset()):
    """Equality sg(q:m) = e1(q) characterizes quasi-Buchsbaum rings."""
    lhs = report.sg_colon
    rhs = report.e_q.e1
    links = [_link("sg_colon_eq_e1_q", lhs, "==", rhs)]
    notes = []
    conclusion = ""
    if _hypotheses_met(_QB_HYPS, asserted):
        conclusion = (
            "quasi-Buchsbaum (QUASI_BUCHSBAUM equality)"
            if links[0].holds
            else "not quasi-Buchsbaum (QUASI_BUCHSBAUM inequality)"
        )
    else:
        notes.append("no conclusion: hypotheses not asserted")
    return _record("QUASI_BUCHSBAUM", links, _QB_HYPS, asserted, conclusion, notes,
                   lhs=lhs, rhs=rhs)


def check_lemma31(report, asserted=frozenset()):
    """Identity sg(q:m) = I(q) + e1(q:m) - ir; it must hold whenever the
    multiplicities of q and q:m agree, so failure is a diagnostic."""
    lhs = report.sg_colon
    rhs = report.i_q + report.e_colon.e1 - report.ir
    links = [_link("sg_colon_eq_iq_plus_e1_colon_minus_ir", lhs, "==", rhs)]
    notes = []
    conclusion = "identity holds" if links[0].holds else ""
    if not links[0].holds:
        notes.append("identity violated: input is not a C-parameter ideal or hypotheses fail")
    if not report.e0_agreement:
        notes.append("multiplicities of q and q:m differ; identity not expected")
    return _record("LEMMA31", links, frozenset(), asserted, conclusion, notes,
                   lhs=lhs, rhs=rhs)


def check_goto_nishida(report, asserted=frozenset()):
    """Lower bound sg(q:m) >= e1(q) (generalized Northcott); a violation
    signals a computation bug or invalid input."""
    lhs = report.sg_colon
    rhs = report.e_q.e1
    links = [_link("sg_colon_ge_e1_q", lhs, ">=", rhs)]
    notes = []
    conclusion = "bound holds" if links[0].holds else ""
    if not links[0].holds:
        notes.append("hard diagnostic: bound violated (computation bug or invalid input)")
    if not report.e0_agreement:
        notes.append("multiplicities of q and q:m differ; bound not expected")
    return _record("GOTO_NISHIDA", links, frozenset(), asserted, conclusion, notes,
                   lhs=lhs, rhs=rhs)


def run_checks(report, asserted=frozenset()):
    """All checks applicable to the report, in a fixed order, plus notes on
    the ones that had to be skipped."""
    records = []
    skipped = []
    if report.r is not None:
        records.append(check_sg_chain(report, asserted))
    else:
        skipped.append("SG_CHAIN skipped: Cohen-Macaulay type r not provided")
    if report.r is not None and report.dim >= 2:
        records.append(check_e2_chain(report, asserted))
    elif report.dim < 2:
        skipped.append("E2_CHAIN skipped: dimension < 2")
    else:
        skipped.append("E2_CHAIN skipped: Cohen-Macaulay type r not provided")
    records.append(check_gorenstein(report, asserted))
    records.append(check_quasi_buchsbaum(report, asserted))
    if report.e0_agreement:
        records.append(check_lemma31(report, asserted))
        records.append(check_goto_nishida(report, asserted))
    else:
        skipped.append("LEMMA31/GOTO_NISHIDA skipped: e0(q) != e0(q:m)")
    return records, skipped
