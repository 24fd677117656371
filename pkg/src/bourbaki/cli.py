"""Command-line interface: analyze, batch, paper-table, verify.

Reports are printed as text by default and as canonical JSON with
--format json.  JSON output is deterministic for a fixed (curve, field,
seed): keys are sorted, polynomials use the canonical term order, and
per-stage timings are reported as null so that reruns are byte-identical.
"""

import argparse
import json
import os
import sys
import tempfile

from . import __version__
from .curve import affine_local_generators, analyze, validate_curve
from .errors import EngineError, ParseError
from .fields import QQ, field_from_name
from .groebner import buchberger, graded_dimension, standard_monomials
from .oracle import graded_dim_bruteforce, local_dim_bruteforce, syzygy_verify
from .parsing import format_polynomial, integer_normalized, parse_polynomial

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2

# Curves with every Bourbaki degree from 0 through 7, used by paper-table.
TABLE_CORPUS = (
    ("free a=2", "x^5 + x^2*y^3 + y^4*z", 0),
    ("free a=3", "x^7 + x^3*y^4 + y^6*z", 0),
    ("cusp (2,3)", "y^2*z - x^3", 1),
    ("cusp (2,5)", "y^2*z^3 - x^5", 1),
    ("cusp (3,4)", "y^3*z - x^4", 1),
    ("quartic B2", "y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2", 2),
    ("nodal cubic", "x^3 + x^2*z - y^2*z", 3),
    ("quartic B4", "x^3*y + x^2*y^2 + y^4 - x^4 + y^2*z^2", 4),
    ("quintic B5", "x^5 + x^4*y + x^3*z^2 + y^2*z^3", 5),
    ("symmetric b=2", "x^5*z + x^3*y^3 + y^5*z", 6),
    ("symmetric b=3", "x^7*z + x^4*y^4 + y^7*z", 7),
)


def _json_int(n):
    """Unbounded integers: decimal strings outside the 64-bit range."""
    if -(2 ** 63) <= n < 2 ** 63:
        return n
    return str(n)


def _poly_str(p):
    return format_polynomial(integer_normalized(p))


def _point_doc(point):
    to_str = point.field.to_str
    return [to_str(c) for c in point.coords]


def report_document(report, field, seed, with_timings=False):
    doc = {
        "version": __version__,
        "seed": _json_int(seed),
        "field": field.name,
        "curve": _poly_str(report.curve.F),
        "d": report.d,
        "e": report.e,
        "syzygy_degrees": list(report.syzygy_degrees),
        "bourbaki_ideal": [_poly_str(g) for g in report.bourbaki_generators],
        "tau": {
            "global": _json_int(report.tau_global),
            "table": [[_point_doc(p), _json_int(t)] for p, t in report.tau_table],
            "complete": report.tau_complete,
        },
        "bour": {
            "hilbert": _json_int(report.bour_hilbert),
            "formula": _json_int(report.bour_formula),
            "local_sum": _json_int(report.bour_local_sum),
            "residual": _json_int(report.residual),
        },
        "points": [_point_doc(p) for p in report.points],
        "local_table": [[_point_doc(p), _json_int(t)]
                        for p, t in report.local_table],
        "ell": report.ell,
        "classification": report.classification,
        "flags": dict(report.flags),
        "timings_ms": ({k: round(v, 3) for k, v in report.timings_ms.items()}
                       if with_timings else None),
    }
    return doc


def render_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(report):
    lines = []
    lines.append("curve: %s" % _poly_str(report.curve.F))
    lines.append("d = %d, e = %d, syzygy degrees %s"
                 % (report.d, report.e, list(report.syzygy_degrees)))
    lines.append("Bourbaki ideal: %s"
                 % ", ".join(_poly_str(g) for g in report.bourbaki_generators))
    tau_rows = ", ".join("%r -> %d" % (p, t) for p, t in report.tau_table)
    lines.append("tau = %d%s  [%s]" % (
        report.tau_global,
        "" if report.tau_complete else " (incomplete over this field)",
        tau_rows or "no singular points"))
    lines.append("Bour = %d (Hilbert) = %d (formula) = %d + %d (local sum + residual)"
                 % (report.bour_hilbert, report.bour_formula,
                    report.bour_local_sum, report.residual))
    loc_rows = ", ".join("%r -> %d" % (p, t) for p, t in report.local_table)
    lines.append("V(I): %d point(s)  [%s]" % (report.ell, loc_rows or "empty"))
    lines.append("classification: %s" % report.classification)
    bad = [k for k, v in report.flags.items() if not v]
    lines.append("flags: %s" % ("all consistent" if not bad
                                else "FAILED " + ", ".join(sorted(bad))))
    return "\n".join(lines) + "\n"


def _load_curve(expr, field):
    F = parse_polynomial(expr, field)
    return validate_curve(F)


def cmd_analyze(args):
    field = field_from_name(args.field)
    try:
        curve = _load_curve(args.curve, field)
        report = analyze(curve, seed=args.seed)
    except (ParseError, EngineError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        sys.stdout.write(render_json(report_document(report, field, args.seed)))
    else:
        sys.stdout.write(render_text(report))
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def _safe_label(label, index):
    keep = "".join(c if c.isalnum() or c in "-_" else "_" for c in label)
    return keep or "line%d" % index


def cmd_batch(args):
    field_default = args.field
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    any_failed = False
    for i, line in enumerate(lines, 1):
        if not line.strip():
            continue
        label = "line%d" % i
        try:
            entry = json.loads(line)
            label = str(entry.get("label", label))
            field = field_from_name(entry.get("field", field_default))
            curve = _load_curve(entry["curve"], field)
            report = analyze(curve, seed=args.seed)
            status = "OK" if report.consistent else "INCONSISTENT"
            expect = entry.get("expect")
            if expect is not None:
                if ("bour" in expect
                        and report.bour_hilbert != expect["bour"]):
                    status = "MISMATCH"
                if ("tau" in expect and report.tau_global != expect["tau"]):
                    status = "MISMATCH"
                if ("classification" in expect
                        and report.classification != expect["classification"]):
                    status = "MISMATCH"
            print("%-20s d=%d e=%d tau=%d bour=%d %-11s %s"
                  % (label, report.d, report.e, report.tau_global,
                     report.bour_hilbert, report.classification, status))
            if args.out:
                doc = report_document(report, field, args.seed)
                path = os.path.join(args.out, _safe_label(label, i) + ".json")
                fd, tmp = tempfile.mkstemp(dir=args.out)
                with os.fdopen(fd, "w", encoding="utf-8") as out:
                    out.write(render_json(doc))
                os.replace(tmp, path)
            if status != "OK":
                any_failed = True
        except (KeyError, ValueError, EngineError) as exc:
            print("%-20s FAILED: %s" % (label, exc))
            any_failed = True
    return EXIT_INCONSISTENT if any_failed else EXIT_OK


def cmd_paper_table(args):
    field = field_from_name(args.field)
    mismatch = False
    rows = []
    for label, expr, expected in TABLE_CORPUS:
        curve = _load_curve(expr, field)
        report = analyze(curve, seed=args.seed)
        ok = report.bour_hilbert == expected and report.consistent
        mismatch = mismatch or not ok
        rows.append((label, expr, expected, report))
    if args.format == "json":
        doc = [{"label": label,
                "curve": _poly_str(r.curve.F),
                "expected": expected,
                "report": report_document(r, field, args.seed)}
               for label, expr, expected, r in rows]
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        print("%-16s %-42s %8s %8s %s" % ("label", "curve", "expected",
                                          "computed", "status"))
        for label, expr, expected, r in rows:
            ok = r.bour_hilbert == expected and r.consistent
            print("%-16s %-42s %8d %8d %s"
                  % (label, expr, expected, r.bour_hilbert,
                     "ok" if ok else "MISMATCH"))
    return EXIT_INCONSISTENT if mismatch else EXIT_OK


def _verify_checks(curve, report, max_degree):
    """Yield (name, passed) engine-vs-oracle comparisons."""
    ideals = [("jacobian", list(curve.partials()))]
    if not any(g.is_constant() for g in report.bourbaki_generators):
        ideals.append(("bourbaki", list(report.bourbaki_generators)))
    for name, gens in ideals:
        gb = buchberger(gens)
        for n in range(max_degree + 1):
            got = graded_dimension(gb, n)
            want = graded_dim_bruteforce(gens, n)
            yield ("%s dim degree %d: %d" % (name, n, got), got == want)
    for p, t in report.local_table:
        affine = affine_local_generators(list(report.bourbaki_generators), p)
        want = local_dim_bruteforce(affine)
        yield ("local degree at %r: %d" % (p, t), t == want)
    yield ("hilbert = formula", report.bour_hilbert == report.bour_formula)
    yield ("hilbert = local sum + residual",
           report.bour_hilbert == report.bour_local_sum + report.residual)
    yield ("consistency flags", report.consistent)


def cmd_verify(args):
    field = field_from_name(args.field)
    try:
        curve = _load_curve(args.curve, field)
        report = analyze(curve, seed=args.seed)
    except (ParseError, EngineError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    failed = False
    for name, ok in _verify_checks(curve, report, args.max_check_degree):
        print("%-40s %s" % (name, "ok" if ok else "FAIL"))
        failed = failed or not ok
    print("tau = %d, Bour = %d, classification %s"
          % (report.tau_global, report.bour_hilbert, report.classification))
    return EXIT_INCONSISTENT if failed else EXIT_OK


def _add_common(sub):
    sub.add_argument("--field", default="qq",
                     help="coefficient field: qq or fp=<prime> (default qq)")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for randomized coordinate changes (default 0)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bourbaki",
        description="Bourbaki degrees of reduced plane projective curves")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="full report for one curve")
    p.add_argument("--curve", required=True, help="homogeneous polynomial in x,y,z")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("batch", help="analyze curves from a JSON-lines file")
    p.add_argument("input", help="input file, one {label, curve, ...} per line")
    p.add_argument("--out", help="directory for per-curve JSON reports")
    _add_common(p)
    p.set_defaults(func=cmd_batch)

    p = subs.add_parser("paper-table",
                        help="built-in corpus with Bourbaki degrees 0..7")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(p)
    p.set_defaults(func=cmd_paper_table)

    p = subs.add_parser("verify", help="cross-check a curve against the oracle")
    p.add_argument("--curve", required=True)
    p.add_argument("--max-check-degree", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
