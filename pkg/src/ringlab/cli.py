"""Command-line front end: ``ringlab props|radical|verify|export``."""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .errors import RingError
from .expr import evaluate
from .properties import check_all
from .radicals import METHODS, nilpotents, prime_radical, radical_profile, square_zero, jacobson_radical
from .ring import write_ring


def _fmt_set(R, s) -> str:
    return "{" + ", ".join(R.label(i) for i in s.indices()) + "}"


def cmd_props(args) -> int:
    R = evaluate(args.expr)
    reports = check_all(R)
    if args.json:
        print(json.dumps({"ring": R.name, "order": R.order, "properties": reports}, indent=2))
        return 0
    print(f"{R.name} (order {R.order})")
    for rep in reports:
        if rep.get("verdict") is None:
            print(f"  {rep['property']:<30} skipped: {rep['skipped']}")
            continue
        line = f"  {rep['property']:<30} {str(rep['verdict']).lower()}"
        if rep["witness"] is not None:
            line += f"  witness={rep['witness']} {rep['decodedWitness']}"
        print(line)
    return 0


def cmd_radical(args) -> int:
    R = evaluate(args.expr)
    if args.method == "all":
        prof = radical_profile(R)
        out = prof.to_json()
        P, N, N2, J = prof.P, prof.N, prof.N2, prof.J
    else:
        P = prime_radical(R, args.method)
        N, N2, J = nilpotents(R), square_zero(R), jacobson_radical(R)
        out = {"ring": R.name, "P": P.indices(), "N": N.indices(), "N2": N2.indices(),
               "J": J.indices(), "perMethod": {args.method: P.indices()}}
    if args.json:
        print(json.dumps(out, indent=2))
        return 0
    print(f"{R.name} (order {R.order})")
    print(f"  P  = {_fmt_set(R, P)}  (size {len(P)})")
    print(f"  N  = {_fmt_set(R, N)}  (size {len(N)})")
    print(f"  N2 = {_fmt_set(R, N2)}  (size {len(N2)})")
    print(f"  J  = {_fmt_set(R, J)}  (size {len(J)})")
    if args.method == "all":
        print(f"  methods: {', '.join(sorted(out['perMethod']))}; agreed: {str(out['methodsAgreed']).lower()}")
        for m, why in sorted(out["skipped"].items()):
            print(f"  {m} skipped: {why}")
    return 0


def cmd_verify(args) -> int:
    if args.corpus:
        with open(args.corpus, encoding="utf-8") as fh:
            corpus = harness.load_corpus(fh)
    else:
        corpus = list(harness.DEFAULT_CORPUS)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    report = harness.run_suite(corpus, checks, workers=args.workers)
    sys.stdout.write(harness.report_json(report) if args.json else harness.report_text(report))
    if args.strict and report["summary"]["fail"]:
        return 1
    return 0


def cmd_export(args) -> int:
    R = evaluate(args.expr)
    write_ring(R, args.out)
    print(f"wrote {R.name} (order {R.order}) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringlab", description="Finite rings, prime radicals and P-symmetry checks.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("props", help="run every property checker on a ring expression")
    sp.add_argument("expr")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_props)

    sp = sub.add_parser("radical", help="compute P(R), N(R), N2(R), J(R)")
    sp.add_argument("expr")
    sp.add_argument("--method", choices=METHODS + ("all",), default="all")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_radical)

    sp = sub.add_parser("verify", help="replay the theorem checks over a corpus")
    sp.add_argument("--corpus", help="file with one ring expression per line")
    sp.add_argument("--checks", help=f"comma-separated subset of: {', '.join(harness.CHECK_IDS)}")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--strict", action="store_true", help="exit nonzero when any check fails")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write a ring to the .ring table format")
    sp.add_argument("expr")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
