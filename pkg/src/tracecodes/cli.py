"""Command-line front end.

Subcommands: ``build`` (exhaustive enumeration of one code),
``predict`` (closed forms only, no enumeration), ``verify``
(brute-force versus closed-form comparisons) and ``sweep`` (a grid of
builds with verification, streamed as JSON lines).

Exit codes: 0 success / everything verified, 1 verification mismatch,
2 invalid input, 3 resource budget exceeded.  Results go to stdout,
diagnostics and timings to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import closedform, codes, report, verification
from .errors import BudgetExceededError, TraceCodesError
from .fields import DEFAULT_SIZE_CAP, make_field

SCOPES = ("cwe", "sums", "counts", "griesmer", "equivalence", "all")
CODE_SCOPES = {"cwe", "counts", "griesmer", "equivalence"}


def _parse_modulus(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad modulus {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracecodes",
        description="Trace-defined linear codes: exhaustive complete weight "
                    "enumerators, closed-form predictions and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, need_pm=True):
        if need_pm:
            sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
            sp.add_argument("--m", type=int, required=True, help="extension degree")
        sp.add_argument("--b", type=int, default=1,
                        help="defining trace value (default 1)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP,
                        help="maximum field size p^m")
        sp.add_argument("--budget", type=int, default=codes.DEFAULT_BUDGET,
                        help="maximum symbol evaluations for enumeration")
        sp.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: all cores for large "
                             "jobs, serial for small ones)")
        sp.add_argument("--modulus", type=str, default=None,
                        help="comma-separated modulus coefficients, low degree first")

    sp = sub.add_parser("build", help="enumerate one code exhaustively")
    add_common(sp)
    sp.add_argument("--defining-set", choices=("main", "d1", "d2"), default="main",
                    help="main: Tr(x)=b and Tr(x^2)=0; d1: Tr(x)=b; "
                         "d2: x nonzero with Tr(x^2)=0")

    sp = sub.add_parser("predict", help="closed-form prediction, no enumeration")
    add_common(sp)

    sp = sub.add_parser("verify", help="brute force versus closed forms")
    add_common(sp)
    sp.add_argument("--scope", choices=SCOPES, default="all")
    sp.add_argument("--samples", type=int, default=100,
                    help="random quadratics for the exponential-sum identity")

    sp = sub.add_parser("sweep", help="grid of builds with verification (JSON lines)")
    add_common(sp, need_pm=False)
    sp.add_argument("--p-list", type=str, required=True,
                    help="comma-separated characteristics")
    sp.add_argument("--m-list", type=str, required=True,
                    help="comma-separated extension degrees")
    sp.add_argument("--compare-defining-set", choices=("d1", "d2"), default=None,
                    help="also build a single-constraint comparison code")
    return parser


_PARALLEL_THRESHOLD = 10**6  # symbol evaluations; below this a pool only adds overhead


def _resolve_workers(args, cost: int) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    if cost < _PARALLEL_THRESHOLD:
        return 1
    return os.cpu_count() or 1


def _make_ctx(args):
    return make_field(args.p, args.m, modulus=_parse_modulus(args.modulus),
                      size_cap=args.size_cap)


def _build_dset(ctx, kind: str, b: int):
    if kind == "main":
        return codes.build_defining_set(ctx, b)
    if kind == "d1":
        return codes.build_defining_set_general(ctx, trace_value=b)
    return codes.build_defining_set_general(ctx, trace_square_value=0, exclude_zero=True)


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(report.render_json(doc), file=out)
    else:
        print(report.render_text(doc), file=out)


def cmd_build(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    t0 = time.perf_counter()
    ctx = _make_ctx(args)
    dset = _build_dset(ctx, args.defining_set, args.b)
    workers = _resolve_workers(args, ctx.r * len(dset))
    cwe = codes.exhaustive_cwe(ctx, dset, budget=args.budget, workers=workers)
    summary = codes.summarize(cwe, ctx.p)
    doc = report.code_document(
        params=report.params_dict(args.p, args.m, ctx.modulus, b=args.b,
                                  defining_set=dset),
        summary=summary, cwe=cwe, wd=cwe.weight_distribution())
    _emit(doc, args.format, out)
    print(f"build p={args.p} m={args.m}: {time.perf_counter() - t0:.3f}s", file=err)
    return 0


def cmd_predict(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    pred = closedform.prediction(args.p, args.m)
    summary = codes.CodeSummary(n=pred.summary.n, k=pred.summary.k, d=pred.summary.d,
                                griesmer_sum=pred.summary.griesmer_sum,
                                griesmer_optimal=pred.summary.griesmer_optimal,
                                mds=pred.summary.mds)
    modulus = _parse_modulus(args.modulus)
    params = report.params_dict(args.p, args.m, modulus or (), b=args.b)
    params["regime"] = pred.regime.index
    params["pair_reading"] = pred.pair_reading
    doc = report.code_document(params=params, summary=summary, cwe=pred.cwe, wd=pred.wd)
    _emit(doc, args.format, out)
    return 0


def cmd_verify(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    scope = args.scope
    if scope in CODE_SCOPES and args.m <= 2:
        print(f"scope {scope!r} needs extension degree m > 2", file=err)
        return 2
    verdicts: list[verification.Verdict] = []
    t0 = time.perf_counter()
    ctx = _make_ctx(args)
    workers = _resolve_workers(args, ctx.r * ctx.r)
    if scope in ("sums", "all"):
        verdicts += verification.verify_gauss_sums(args.p, args.m, size_cap=args.size_cap)
        verdicts += verification.verify_quadratic_sums(ctx, samples=args.samples)
        verdicts += verification.verify_cyclotomic_numbers(ctx)
    if args.m > 2:
        if scope in ("counts", "all"):
            verdicts += verification.verify_counts(ctx)
        if scope in ("cwe", "all"):
            verdicts += verification.verify_cwe(ctx, budget=args.budget,
                                                workers=workers)
        if scope in ("griesmer", "all"):
            verdicts += verification.verify_griesmer(ctx, budget=args.budget,
                                                     workers=workers)
        if scope in ("equivalence", "all"):
            verdicts += verification.verify_equivalence(ctx)
    doc = {
        "schema_version": report.SCHEMA_VERSION,
        "params": {"p": args.p, "m": args.m, "scope": scope},
        "verification": [v.as_dict() for v in verdicts],
        "all_passed": all(v.passed for v in verdicts),
    }
    _emit(doc, args.format, out)
    print(f"verify p={args.p} m={args.m} scope={scope}: "
          f"{time.perf_counter() - t0:.3f}s", file=err)
    return verification.exit_code_for(verdicts)


def _sweep_pair(args, p: int, m: int) -> tuple[dict, bool]:
    ctx = make_field(p, m, size_cap=args.size_cap)
    dset = codes.build_defining_set(ctx, args.b)
    cwe = codes.exhaustive_cwe(ctx, dset, budget=args.budget)
    summary = codes.summarize(cwe, p)
    verdicts = []
    if args.b % p != 0:
        pred = closedform.prediction(p, m)
        verdicts.append(verification.Verdict(
            name="cwe", passed=pred.cwe.terms == cwe.terms,
            details="closed-form enumerator matches" if pred.cwe.terms == cwe.terms
            else "closed-form enumerator differs"))
        brute_wd = cwe.weight_distribution()
        verdicts.append(verification.Verdict(
            name="weight-distribution", passed=pred.wd.counts == brute_wd.counts,
            details="closed-form weight table matches" if pred.wd.counts == brute_wd.counts
            else "closed-form weight table differs"))
    doc = report.code_document(
        params=report.params_dict(p, m, ctx.modulus, b=args.b, defining_set=dset),
        summary=summary, cwe=cwe, wd=cwe.weight_distribution(),
        extra={"verification": [v.as_dict() for v in verdicts]})
    if args.compare_defining_set:
        comp_set = _build_dset(ctx, args.compare_defining_set, args.b)
        comp_cwe = codes.exhaustive_cwe(ctx, comp_set, budget=args.budget)
        comp_summary = codes.summarize(comp_cwe, p)
        doc["comparison"] = {
            "defining_set": comp_set.label,
            "summary": report.summary_dict(comp_summary),
        }
    return doc, all(v.passed for v in verdicts)


def _sweep_pair_safe(args, p: int, m: int):
    """Pool-friendly wrapper: per-pair failures are recorded, not raised,
    so a sweep continues past bad pairs."""
    try:
        doc, ok = _sweep_pair(args, p, m)
        return doc, ok, None
    except TraceCodesError as exc:
        return None, False, str(exc)


def cmd_sweep(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        p_list = [int(x) for x in args.p_list.split(",")]
        m_list = [int(x) for x in args.m_list.split(",")]
    except ValueError as exc:
        print(f"bad sweep lists: {exc}", file=err)
        return 2
    pairs = [(p, m) for p in p_list for m in m_list]
    workers = _resolve_workers(args, sum(p**m for p, m in pairs))
    results = []
    if workers > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(pairs))) as pool:
            futures = [pool.submit(_sweep_pair_safe, args, p, m) for p, m in pairs]
            results = [f.result() for f in futures]  # input order preserved
    else:
        results = [_sweep_pair_safe(args, p, m) for p, m in pairs]
    any_failed = False
    rows = []
    for (p, m), (doc, ok, error) in zip(pairs, results):
        if error is not None:
            print(f"sweep pair ({p},{m}): {error}", file=err)
            any_failed = True
            continue
        any_failed = any_failed or not ok
        print(report.render_json(doc, compact=True), file=out)
        s = doc["summary"]
        tags = []
        if s["griesmer_optimal"]:
            tags.append("griesmer-optimal")
        if s["mds"]:
            tags.append("MDS")
        rows.append(f"  p={p} m={m}: [{s['n']},{s['k']},{s['d']}] "
                    f"{' '.join(tags) if tags else '-'}")
    print("sweep summary:", file=err)
    for row in rows:
        print(row, file=err)
    return 1 if any_failed else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "build":
            return cmd_build(args)
        if args.command == "predict":
            return cmd_predict(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_sweep(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (TraceCodesError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
