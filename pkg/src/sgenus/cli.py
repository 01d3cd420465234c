"""Job-spec parsing, orchestration and machine-readable reporting.

Spec files are line oriented, UTF-8, with '#' comments:

    mode polynomial|semigroup
    vars X Y Z W                     (polynomial mode)
    order degrevlex|lex              (polynomial mode, default degrevlex)
    quotient: <poly>, <poly>, ...    (polynomial mode, optional)
    ideal q: <poly>, <poly>, ...
    dim 2                            (semigroup mode)
    gens: 1 0; 1 2; 2 3; 3 1         (semigroup mode)
    ideal q: 6 0; 6 12               (semigroup mode)
    nmax 6                           (optional, default dim + 6)
    type r = 2                       (optional)
    assert unmixed non_regular c_parameter deep_in_g_power   (optional)

Commands: run <spec> [--nmax N] [--format json|csv|text]; verdict <spec>;
gap <spec>.  Exit codes: 0 success, 1 parse errors, 2 computation errors.
Serialization is deterministic: stable key order, exact integers as decimal
strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, replace

from .errors import CalcError, SpecFormatError
from .hilbert import build_bundle, infer_cohomology_dim2
from .idealops import make_ideal
from .polyring import (
    MonomialOrder,
    PolyParseError,
    RingSpec,
    format_polynomial,
    parse_polynomial,
)
from .semigroup import AffineSemigroup, SemigroupIdeal, sg_closure_gap
from .verdict import ASSERTION_FLAGS, run_checks

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class JobSpec:
    ring: RingSpec
    ideal_gens: tuple
    nmax: int
    r: int | None
    assertions: frozenset
    fmt: str = "json"


@dataclass(frozen=True)
class Report:
    job: dict
    lengths_q: tuple
    lengths_colon: tuple
    hilbert_q: object
    hilbert_colon: object
    invariants: object
    cohomology: object
    verdicts: tuple
    diagnostics: tuple


def _parse_vector(text, line_no):
    try:
        v = tuple(int(x) for x in text.split())
    except ValueError:
        raise SpecFormatError("bad lattice vector %r" % text, line_no) from None
    if not v:
        raise SpecFormatError("empty lattice vector", line_no)
    if any(x < 0 for x in v):
        raise SpecFormatError("lattice vectors live in N^dim", line_no)
    return v


def parse_spec(src):
    """Parse and fully validate a job spec; unknown keys are rejected."""
    entries = []
    for i, raw in enumerate(src.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append((i, line))
    if not entries:
        raise SpecFormatError("missing 'mode' line", 1)

    first_no, first = entries[0]
    if not first.startswith("mode"):
        raise SpecFormatError("first line must declare the mode", first_no)
    mode = first[len("mode") :].strip()
    if mode not in ("polynomial", "semigroup"):
        raise SpecFormatError("mode must be polynomial or semigroup", first_no)

    fields = {}

    def put(key, value, line_no):
        if key in fields:
            raise SpecFormatError("duplicate key %r" % key, line_no)
        fields[key] = (value, line_no)

    for line_no, line in entries[1:]:
        if line.startswith("vars "):
            put("vars", tuple(line[5:].split()), line_no)
        elif line.startswith("order "):
            put("order", line[6:].strip(), line_no)
        elif line.startswith("quotient:"):
            put("quotient", line[len("quotient:") :].strip(), line_no)
        elif line.startswith("ideal q:"):
            put("ideal", line[len("ideal q:") :].strip(), line_no)
        elif line.startswith("dim "):
            put("dim", line[4:].strip(), line_no)
        elif line.startswith("gens:"):
            put("gens", line[len("gens:") :].strip(), line_no)
        elif line.startswith("nmax "):
            put("nmax", line[5:].strip(), line_no)
        elif line.startswith("type r ="):
            put("r", line[len("type r =") :].strip(), line_no)
        elif line.startswith("assert "):
            put("assert", tuple(line[7:].split()), line_no)
        else:
            raise SpecFormatError("unknown key in %r" % line, line_no)

    def take(key):
        return fields.pop(key, (None, None))

    if mode == "polynomial":
        for bad in ("dim", "gens"):
            if bad in fields:
                raise SpecFormatError(
                    "%r does not apply to polynomial mode" % bad, fields[bad][1]
                )
        names, names_no = take("vars")
        if names is None:
            raise SpecFormatError("polynomial mode needs 'vars'", 1)
        order_text, order_no = take("order")
        if order_text is None:
            order_text = "degrevlex"
        if order_text not in ("degrevlex", "lex"):
            raise SpecFormatError("order must be degrevlex or lex", order_no)
        try:
            base = RingSpec(
                mode="polynomial", vars=names, order=MonomialOrder(order_text)
            )
        except ValueError as exc:
            raise SpecFormatError(str(exc), names_no) from None

        def parse_polys(text, line_no):
            out = []
            for chunk in text.split(","):
                chunk = chunk.strip()
                if not chunk:
                    raise SpecFormatError("empty polynomial entry", line_no)
                try:
                    out.append(parse_polynomial(chunk, base))
                except PolyParseError as exc:
                    raise SpecFormatError(
                        "bad polynomial %r: %s" % (chunk, exc), line_no
                    ) from None
            return tuple(out)

        quotient_text, quotient_no = take("quotient")
        quotient = parse_polys(quotient_text, quotient_no) if quotient_text else ()
        ideal_text, ideal_no = take("ideal")
        if ideal_text is None:
            raise SpecFormatError("missing 'ideal q:' line", 1)
        ideal = parse_polys(ideal_text, ideal_no)
        ring = RingSpec(
            mode="polynomial",
            vars=names,
            order=MonomialOrder(order_text),
            quotient_gens=quotient,
        )
        dim = len(ideal)
    else:
        for bad in ("vars", "order", "quotient"):
            if bad in fields:
                raise SpecFormatError(
                    "%r does not apply to semigroup mode" % bad, fields[bad][1]
                )
        dim_text, dim_no = take("dim")
        if dim_text is None:
            raise SpecFormatError("semigroup mode needs 'dim'", 1)
        try:
            dim = int(dim_text)
        except ValueError:
            raise SpecFormatError("bad dimension %r" % dim_text, dim_no) from None
        gens_text, gens_no = take("gens")
        if gens_text is None:
            raise SpecFormatError("semigroup mode needs 'gens:'", 1)
        gens = tuple(
            _parse_vector(part, gens_no) for part in gens_text.split(";") if part.strip()
        )
        ideal_text, ideal_no = take("ideal")
        if ideal_text is None:
            raise SpecFormatError("missing 'ideal q:' line", 1)
        ideal = tuple(
            _parse_vector(part, ideal_no)
            for part in ideal_text.split(";")
            if part.strip()
        )
        try:
            ring = RingSpec(mode="semigroup", sg_dim=dim, sg_gens=gens)
        except ValueError as exc:
            raise SpecFormatError(str(exc), gens_no) from None
        if any(len(v) != dim for v in ideal):
            raise SpecFormatError("ideal vector dimension != %d" % dim, ideal_no)
        if len(ideal) != dim:
            raise SpecFormatError(
                "parameter ideal needs exactly %d generators, got %d"
                % (dim, len(ideal)),
                ideal_no,
            )

    nmax_text, nmax_no = take("nmax")
    if nmax_text is None:
        nmax = dim + 6
    else:
        try:
            nmax = int(nmax_text)
        except ValueError:
            raise SpecFormatError("bad nmax %r" % nmax_text, nmax_no) from None
    if nmax < dim + 3:
        raise SpecFormatError(
            "nmax must be at least dim + 3 = %d" % (dim + 3), nmax_no or 1
        )

    r_text, r_no = take("r")
    r = None
    if r_text is not None:
        try:
            r = int(r_text)
        except ValueError:
            raise SpecFormatError("bad type %r" % r_text, r_no) from None
        if r < 1:
            raise SpecFormatError("type r must be >= 1", r_no)

    flags, flags_no = take("assert")
    assertions = frozenset(flags or ())
    unknown = assertions - set(ASSERTION_FLAGS)
    if unknown:
        raise SpecFormatError(
            "unknown assertion flags %s" % ", ".join(sorted(unknown)), flags_no
        )

    if fields:
        key, (value, line_no) = next(iter(fields.items()))
        raise SpecFormatError("key %r not allowed here" % key, line_no)

    return JobSpec(ring=ring, ideal_gens=ideal, nmax=nmax, r=r, assertions=assertions)


def _job_echo(job):
    ring = job.ring
    echo = {"mode": ring.mode}
    if ring.mode == "polynomial":
        echo["vars"] = list(ring.vars)
        echo["order"] = ring.order.kind
        echo["quotient"] = [format_polynomial(g, ring) for g in ring.quotient_gens]
        echo["ideal"] = [format_polynomial(g, ring) for g in job.ideal_gens]
    else:
        echo["dim"] = str(ring.sg_dim)
        echo["gens"] = [[str(x) for x in v] for v in ring.sg_gens]
        echo["ideal"] = [[str(x) for x in v] for v in job.ideal_gens]
    echo["nmax"] = str(job.nmax)
    echo["type_r"] = str(job.r) if job.r is not None else None
    echo["assertions"] = sorted(job.assertions)
    return echo


def run(job):
    """Execute a job: sequences, fits, invariants, verdicts."""
    diagnostics = []
    ring = job.ring
    if ring.mode == "polynomial":
        q = make_ideal(ring, job.ideal_gens)
    else:
        q = SemigroupIdeal(
            AffineSemigroup(ring.sg_dim, ring.sg_gens), job.ideal_gens
        )
    seq_q, seq_colon, colon, report = build_bundle(ring, q, job.nmax, r=job.r)
    full_hyps = frozenset(ASSERTION_FLAGS) <= job.assertions
    if report.r is None and full_hyps and report.sg_colon == report.sg_q:
        # equality of the sectional genera certifies Cohen-Macaulayness under
        # the asserted hypotheses, where ir equals the type
        report = replace(report, r=report.ir)
        diagnostics.append("type r auto-filled with ir = %d (sg equality)" % report.ir)
    cohomology = None
    if report.dim == 2:
        cohomology = infer_cohomology_dim2(report)
        if not cohomology.valid:
            diagnostics.append(
                "cohomology inference inconsistent with a 2-dimensional "
                "generalized Cohen-Macaulay ring"
            )
    verdicts, skipped = run_checks(report, job.assertions)
    diagnostics.extend(skipped)
    return Report(
        job=_job_echo(job),
        lengths_q=seq_q.values,
        lengths_colon=seq_colon.values,
        hilbert_q=report.e_q,
        hilbert_colon=report.e_colon,
        invariants=report,
        cohomology=cohomology,
        verdicts=tuple(verdicts),
        diagnostics=tuple(diagnostics),
    )


def _report_payload(report):
    inv = report.invariants
    payload = {
        "job": report.job,
        "lengths_q": [str(v) for v in report.lengths_q],
        "lengths_colon": [str(v) for v in report.lengths_colon],
        "hilbert_q": {
            "e": [str(v) for v in report.hilbert_q.e],
            "n0": str(report.hilbert_q.n0),
        },
        "hilbert_colon": {
            "e": [str(v) for v in report.hilbert_colon.e],
            "n0": str(report.hilbert_colon.n0),
        },
        "invariants": {
            "dim": str(inv.dim),
            "len_q": str(inv.len_q),
            "len_colon": str(inv.len_colon),
            "e0": str(inv.e_q.e0),
            "sg_q": str(inv.sg_q),
            "sg_colon": str(inv.sg_colon),
            "i_q": str(inv.i_q),
            "ir": str(inv.ir),
            "r": str(inv.r) if inv.r is not None else None,
            "origin_supported": inv.origin_supported,
            "e0_agreement": inv.e0_agreement,
        },
        "cohomology": None,
        "verdicts": [],
        "diagnostics": list(report.diagnostics),
    }
    if report.cohomology is not None:
        c = report.cohomology
        payload["cohomology"] = {
            "h0": str(c.h0),
            "h1": str(c.h1),
            "r0": str(c.r0),
            "r1": str(c.r1),
            "r2": str(c.r2),
            "valid": c.valid,
        }
    for v in report.verdicts:
        payload["verdicts"].append(
            {
                "check_id": v.check_id,
                "lhs": str(v.lhs) if v.lhs is not None else None,
                "mid": str(v.mid) if v.mid is not None else None,
                "rhs": str(v.rhs) if v.rhs is not None else None,
                "links": [
                    {
                        "label": l.label,
                        "left": str(l.left),
                        "relation": l.relation,
                        "right": str(l.right),
                        "holds": l.holds,
                        "equality": l.equality,
                    }
                    for l in v.links
                ],
                "holds": v.holds,
                "conclusion": v.conclusion,
                "assumptions_required": list(v.assumptions_required),
                "assumptions_asserted": list(v.assumptions_asserted),
                "notes": list(v.notes),
            }
        )
    return payload


def to_json(report):
    return json.dumps(_report_payload(report), indent=2) + "\n"


def _flatten(value, prefix, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(v, "%s.%s" % (prefix, k) if prefix else k, rows)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _flatten(v, "%s.%d" % (prefix, i), rows)
    elif value is None:
        rows.append((prefix, "null"))
    elif isinstance(value, bool):
        rows.append((prefix, "true" if value else "false"))
    else:
        rows.append((prefix, str(value)))


def to_csv(report):
    rows = []
    _flatten(_report_payload(report), "", rows)
    rows.sort()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def to_text(report):
    inv = report.invariants
    lines = []
    lines.append("ring: %s" % report.job["mode"])
    lines.append("lengths q      : %s" % (list(report.lengths_q),))
    lines.append("lengths q:m    : %s" % (list(report.lengths_colon),))
    lines.append(
        "hilbert q      : e = %s, n0 = %d" % (list(report.hilbert_q.e), report.hilbert_q.n0)
    )
    lines.append(
        "hilbert q:m    : e = %s, n0 = %d"
        % (list(report.hilbert_colon.e), report.hilbert_colon.n0)
    )
    lines.append(
        "invariants     : dim=%d len(R/q)=%d len(R/q:m)=%d e0=%d sg_q=%d "
        "sg_colon=%d I_q=%d ir=%d r=%s"
        % (
            inv.dim,
            inv.len_q,
            inv.len_colon,
            inv.e_q.e0,
            inv.sg_q,
            inv.sg_colon,
            inv.i_q,
            inv.ir,
            inv.r,
        )
    )
    if report.cohomology is not None:
        c = report.cohomology
        lines.append(
            "cohomology     : h0=%d h1=%d r0=%d r1=%d r2=%d valid=%s"
            % (c.h0, c.h1, c.r0, c.r1, c.r2, c.valid)
        )
    for v in report.verdicts:
        chain = " ".join(
            "%d %s %d%s" % (l.left, l.relation, l.right, " (=)" if l.equality else "")
            for l in v.links
        )
        tail = v.conclusion or "; ".join(v.notes) or "evaluated"
        lines.append("%-16s: %s -> %s" % (v.check_id, chain, tail))
    for d in report.diagnostics:
        lines.append("note: %s" % d)
    return "\n".join(lines) + "\n"


def render(report, fmt):
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    return to_text(report)


def _load_spec(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SpecFormatError("cannot read spec file: %s" % exc, 1) from None


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="sgenus",
        description="Hilbert-Samuel invariants and classification checks "
        "for m-primary parameter ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="full report for a job spec")
    p_run.add_argument("spec")
    p_run.add_argument("--nmax", type=int, default=None)
    p_run.add_argument("--format", choices=FORMATS, default="json")
    p_verdict = sub.add_parser("verdict", help="verdict lines only")
    p_verdict.add_argument("spec")
    p_verdict.add_argument("--nmax", type=int, default=None)
    p_gap = sub.add_parser("gap", help="closure gap of a plane semigroup")
    p_gap.add_argument("spec")
    p_gap.add_argument("--format", choices=FORMATS, default="json")
    args = parser.parse_args(argv)

    try:
        job = parse_spec(_load_spec(args.spec))
        if getattr(args, "nmax", None) is not None:
            if args.nmax < (job.ring.sg_dim if job.ring.mode == "semigroup" else len(job.ideal_gens)) + 3:
                raise SpecFormatError("nmax override below dim + 3", 1)
            job = replace(job, nmax=args.nmax)
        if args.command == "gap":
            if job.ring.mode != "semigroup":
                raise SpecFormatError("gap needs a semigroup-mode spec", 1)
        else:
            fmt = getattr(args, "format", "text")
            job = replace(job, fmt=fmt)
    except SpecFormatError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 1

    try:
        if args.command == "gap":
            S = AffineSemigroup(job.ring.sg_dim, job.ring.sg_gens)
            gap = sg_closure_gap(S)
            payload = {
                "gap": [[str(x) for x in v] for v in gap],
                "size": str(len(gap)),
            }
            if args.format == "json":
                sys.stdout.write(json.dumps(payload, indent=2) + "\n")
            elif args.format == "csv":
                rows = []
                _flatten(payload, "", rows)
                rows.sort()
                buf = io.StringIO()
                writer = csv.writer(buf, lineterminator="\n")
                writer.writerow(["key", "value"])
                writer.writerows(rows)
                sys.stdout.write(buf.getvalue())
            else:
                sys.stdout.write(
                    "gap points: %s\nsize: %d\n" % (gap, len(gap))
                )
            return 0
        report = run(job)
        if args.command == "verdict":
            for v in report.verdicts:
                chain = " ".join(
                    "%d %s %d%s"
                    % (l.left, l.relation, l.right, " (=)" if l.equality else "")
                    for l in v.links
                )
                tail = v.conclusion or "; ".join(v.notes) or "evaluated"
                sys.stdout.write("%-16s: %s -> %s\n" % (v.check_id, chain, tail))
        else:
            sys.stdout.write(render(report, job.fmt))
        return 0
    except CalcError as exc:
        hint = ""
        name = type(exc).__name__
        if name == "NotStabilized":
            hint = " (hint: raise nmax)"
        elif name == "NotPrimary":
            hint = " (hint: the ideal must be m-primary with support at the origin)"
        elif name == "DegenerateColon":
            hint = " (hint: q equals the maximal ideal; pick a proper parameter ideal)"
        print("computation error [%s]: %s%s" % (name, exc, hint), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
