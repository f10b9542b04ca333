"""Command-line front end: construction, indicator computation, and
verification runs with table, CSV, and JSON output.

Exit codes: 0 when every requested check passes, 1 on any verification
failure, 2 on usage errors.  Nothing is randomized, so identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .hopf_core import HopfData, validate
from .catalog import (build_family, build_graded, build_group_algebra,
                      build_prim_algebra, FAMILIES, GRADED)
from .analysis import (indicator_sequence, verify_main_theorem,
                       verify_lemma_part1, verify_lemma_part2, corollary_sum,
                       verify_xi_independence, admissible_deltas,
                       _algebra_meta)
from .hopf_core import dual, tensor, indicator_trace
from .catalog import graded_partner

DEFAULT_SWEEP = [(2, 3), (3, 2), (2, 5), (5, 2), (3, 5), (5, 3)]

CSV_HEADER = "n,value,residue,predicted,methods_agree,match"

ALL_FAMILIES = FAMILIES + GRADED + ("groupalg", "primalg")


class UsageError(Exception):
    pass


def _build_algebra(args) -> HopfData:
    family = args.family
    if family is None:
        raise UsageError("--family is required")
    if family not in ALL_FAMILIES:
        raise UsageError(f"--family: unknown identifier {family!r}")
    delta = args.delta
    if family == "groupalg":
        if args.q is None or args.p is None:
            raise UsageError("--p and --q are required for groupalg")
        if delta is not None:
            raise UsageError("--delta: not admissible for groupalg")
        return build_group_algebra(args.q, args.p)
    if family == "primalg":
        if args.p is None:
            raise UsageError("--p is required for primalg")
        return build_prim_algebra(args.p, delta if delta is not None else 0)
    if args.p is None or args.q is None:
        raise UsageError("--p and --q are required")
    if family in GRADED:
        if delta is not None:
            raise UsageError(f"--delta: not admissible for {family}")
        return build_graded(family, args.p, args.q)
    if family == "f4" and delta not in (None, 0):
        raise UsageError("--delta: family f4 only admits delta 0")
    return build_family(family, args.p, args.q,
                        delta if delta is not None else 0)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _render_indicators(report, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_dict())
    rows = []
    for e in report.entries:
        rows.append([str(e.n), str(e.value.val), _csv_cell(e.value_as_residue),
                     _csv_cell(e.predicted_residue), _csv_cell(e.methods_agree),
                     _csv_cell(e.matches_prediction)])
    if fmt == "csv":
        lines = [CSV_HEADER] + [",".join(r) for r in rows]
        return "\n".join(lines) + "\n"
    header = CSV_HEADER.split(",")
    widths = [max(len(header[c]), max((len(r[c]) for r in rows), default=0))
              for c in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    if report.detected_period is not None:
        lines.append(f"detected period: {report.detected_period}")
    return "\n".join(lines) + "\n"


def cmd_build(args) -> int:
    H = _build_algebra(args)
    if args.format == "json":
        _emit(_json(H.to_dict()), args.out)
    else:
        meta = _algebra_meta(H)
        lines = [f"{k}: {json.dumps(meta[k], sort_keys=True)}"
                 for k in sorted(meta)]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_axioms(args) -> int:
    H = _build_algebra(args)
    failures = validate(H)
    report = {"algebra": _algebra_meta(H), "valid": not failures,
              "failures": failures}
    if args.format == "json":
        _emit(_json(report), args.out)
    else:
        text = "valid\n" if not failures else \
            "invalid\n" + "\n".join(failures) + "\n"
        _emit(text, args.out)
    return 0 if not failures else 1


def cmd_indicators(args) -> int:
    H = _build_algebra(args)
    n_max = args.n_max if args.n_max is not None else 2 * H.dim
    report = indicator_sequence(H, n_max, method=args.method)
    _emit(_render_indicators(report, args.format), args.out)
    ok = report.all_match() and report.all_agree()
    return 0 if ok else 1


def _sweep(args):
    if (args.p is None) != (args.q is None):
        raise UsageError("--p and --q must be given together")
    return [(args.p, args.q)] if args.p is not None else DEFAULT_SWEEP


def _finish_verify(report: dict, ok: bool, args) -> int:
    if args.format == "json":
        _emit(_json(report), args.out)
    else:
        lines = []
        for item in report["results"]:
            tag = ", ".join(f"{k}={item[k]}" for k in sorted(item)
                            if k not in ("failures", "ok"))
            lines.append(("PASS " if item["ok"] else "FAIL ") + tag)
            lines.extend("  " + f for f in item.get("failures", []))
        lines.append("all ok" if ok else "FAILURES PRESENT")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_verify_theorem(args) -> int:
    results = []
    for (p, q) in _sweep(args):
        rep = verify_main_theorem(p, q, n_max=args.n_max)
        for item in rep["results"]:
            results.append({"p": p, "q": q, **item})
    ok = all(r["ok"] for r in results)
    return _finish_verify({"check": "theorem", "all_ok": ok,
                           "results": results}, ok, args)


def cmd_verify_lemma(args) -> int:
    n_top = args.n_max if args.n_max is not None else 6
    results = []
    for (p, q) in _sweep(args):
        failures = []
        for i in range(q):
            for n in range(1, n_top + 1):
                if not verify_lemma_part1(p, q, i, n):
                    failures.append(f"part1 fails at i={i}, n={n}")
                if not verify_lemma_part2(p, q, i, n):
                    failures.append(f"part2 fails at i={i}, n={n}")
        results.append({"p": p, "q": q, "n_max": n_top,
                        "ok": not failures, "failures": failures})
    ok = all(r["ok"] for r in results)
    return _finish_verify({"check": "lemma", "all_ok": ok,
                           "results": results}, ok, args)


def cmd_verify_corollary(args) -> int:
    n_top = args.n_max if args.n_max is not None else 30
    results = []
    for (p, q) in _sweep(args):
        failures = []
        for n in range(q, n_top + 1, q):
            got = corollary_sum(p, q, n)
            want = pow(n, p - 1, p)
            if got != want:
                failures.append(f"n={n}: sum {got} != n^(p-1) = {want}")
        results.append({"p": p, "q": q, "n_max": n_top,
                        "ok": not failures, "failures": failures})
    ok = all(r["ok"] for r in results)
    return _finish_verify({"check": "corollary", "all_ok": ok,
                           "results": results}, ok, args)


def _properties_for_pair(p, q, n_max):
    failures = []
    algebras = []
    for family in FAMILIES:
        for delta in admissible_deltas(family, p, q):
            try:
                algebras.append(build_family(family, p, q, delta))
            except ValueError as exc:
                failures.append(f"{family} delta={delta}: "
                                f"construction failed: {exc}")
    for g in GRADED:
        algebras.append(build_graded(g, p, q))
    partner_seq = {g: [indicator_trace(build_graded(g, p, q), n)
                       for n in range(1, n_max + 1)] for g in GRADED}
    for H in algebras:
        pres = H.presentation
        tag = f"{pres.family} delta={pres.delta}"
        Hd = dual(H)
        seq = [indicator_trace(H, n) for n in range(1, n_max + 1)]
        dseq = [indicator_trace(Hd, n) for n in range(1, n_max + 1)]
        if seq != dseq:
            failures.append(f"{tag}: dual indicator sequence differs")
        if pres.family in FAMILIES:
            if seq != partner_seq[graded_partner(pres.family)]:
                failures.append(f"{tag}: differs from graded partner")
        if n_max >= 2 * p * q:
            rep = indicator_sequence(H, n_max, method="trace")
            if rep.detected_period is None or rep.detected_period > p * q:
                failures.append(f"{tag}: no period <= pq detected")
    G = build_group_algebra(q, p)
    P = build_prim_algebra(p, 0)
    T = tensor(G, P)
    A = build_graded("grA", p, q)
    for n in range(1, n_max + 1):
        lhs = indicator_trace(T, n)
        rhs = indicator_trace(G, n) * indicator_trace(P, n)
        if lhs != rhs:
            failures.append(f"tensor: nu_{n}(G (x) P) not multiplicative")
        if lhs != indicator_trace(A, n):
            failures.append(f"tensor: nu_{n}(G (x) P) != nu_{n}(grA)")
    for family in ("f2", "grC"):
        if family == "f2" and (p - 1) % q != 0:
            continue
        if not verify_xi_independence(family, p, q):
            failures.append(f"{family}: indicator sequence depends on xi")
    return failures


def cmd_verify_properties(args) -> int:
    results = []
    for (p, q) in _sweep(args):
        n_max = args.n_max if args.n_max is not None else 2 * p * q
        failures = _properties_for_pair(p, q, n_max)
        results.append({"p": p, "q": q, "n_max": n_max,
                        "ok": not failures, "failures": failures})
    ok = all(r["ok"] for r in results)
    return _finish_verify({"check": "properties", "all_ok": ok,
                           "results": results}, ok, args)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqhopf",
        description="pq-dimensional pointed Hopf algebras in characteristic "
                    "p: construction, indicators, verification")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp, family=False, method=False):
        sp.add_argument("--p", type=int, default=None)
        sp.add_argument("--q", type=int, default=None)
        if family:
            sp.add_argument("--family", default=None,
                            help="one of " + ", ".join(ALL_FAMILIES))
            sp.add_argument("--delta", type=int, choices=(0, 1), default=None)
        sp.add_argument("--n-max", dest="n_max", type=int, default=None)
        if method:
            sp.add_argument("--method", default="both",
                            choices=("trace", "integral", "both"))
        sp.add_argument("--format", default="table",
                        choices=("table", "csv", "json"))
        sp.add_argument("--out", default=None)

    common(sub.add_parser("build", help="construct and print an algebra"),
           family=True)
    common(sub.add_parser("axioms", help="run the seven-axiom validation"),
           family=True)
    common(sub.add_parser("indicators", help="indicator sequence nu_1..nu_N"),
           family=True, method=True)
    common(sub.add_parser("verify-theorem",
                          help="congruence theorem over a (p,q) sweep"))
    common(sub.add_parser("verify-lemma",
                          help="closed-form Sweedler power lemma"))
    common(sub.add_parser("verify-corollary",
                          help="constrained multinomial identity"))
    common(sub.add_parser("verify-properties",
                          help="dual/tensor/partner/period/root invariance"))
    return parser


DISPATCH = {
    "build": cmd_build,
    "axioms": cmd_axioms,
    "indicators": cmd_indicators,
    "verify-theorem": cmd_verify_theorem,
    "verify-lemma": cmd_verify_lemma,
    "verify-corollary": cmd_verify_corollary,
    "verify-properties": cmd_verify_properties,
}


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return DISPATCH[args.subcommand](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
