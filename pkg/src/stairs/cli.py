"""Command-line interface.

Exit status: 0 on success or match, 1 when ``verify``/``xcheck`` find a
mismatch, 2 on usage, parse, or guard errors.

With ``--machine`` the primary output is payload only: ``count`` and
``compose`` print one integer, ``series`` prints one coefficient per
line, ``list`` prints one partition per line, and ``verify``, ``xcheck``
and ``azarian`` print a single JSON object.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import oracle
from .dsl import ParseError, parse
from .engine import (EnumerationLimitError, count_compositions, enumerate_partitions,
                     series)
from .oeis import (BFILE_DIR_ENV, BFileError, find_bfile, pinned_bfile, read_bfile,
                   verify)
from .questions import questions
from .steps import Cap

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text):
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true",
                        help="payload-only output for scripts")

    stepped = argparse.ArgumentParser(add_help=False, parents=[common])
    stepped.add_argument("--steps", required=True, metavar="DSL",
                         help='step set, e.g. "odd", "{1,2}", "2..", "primes|{1}"')
    caps = stepped.add_mutually_exclusive_group()
    caps.add_argument("--max-mult", type=_positive, metavar="M",
                      help="use each step size at most M times")
    caps.add_argument("--unbounded", action="store_true",
                      help="no multiplicity cap (default)")

    p = _Parser(prog="stairs",
                description="Count ways to climb n stairs with restricted step sizes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", parents=[stepped], help="number of partitions of n")
    c.add_argument("-n", type=_nonneg, required=True)

    s = sub.add_parser("series", parents=[stepped], help="coefficients 0..N")
    s.add_argument("--order", type=_nonneg, required=True)

    ls = sub.add_parser("list", parents=[stepped], help="list the partitions of n")
    ls.add_argument("-n", type=_nonneg, required=True)

    cp = sub.add_parser("compose", parents=[stepped],
                        help="number of ordered climbs (compositions) of n")
    cp.add_argument("-n", type=_nonneg, required=True)

    v = sub.add_parser("verify", parents=[stepped], help="compare with an OEIS b-file")
    v.add_argument("--bfile", required=True,
                   help=f"path, or an A-number looked up in ${BFILE_DIR_ENV} "
                        "and then among the bundled prefixes")
    v.add_argument("--upto", type=_nonneg, required=True)
    v.add_argument("--shift", type=int, default=0,
                   help="compare b-file index i with coefficient i+SHIFT")

    a = sub.add_parser("azarian", parents=[common], help="answer the ten staircase questions")
    a.add_argument("--upto", type=_nonneg, required=True)
    a.add_argument("--k", type=_positive, default=3, help="k for Q2 and Q7")
    a.add_argument("--a", type=_positive, default=2, help="lower end for Q10")
    a.add_argument("--b", type=_positive, default=5, help="upper end for Q10")

    x = sub.add_parser("xcheck", parents=[stepped], help="engine vs brute-force oracle")
    x.add_argument("--upto", type=_nonneg, required=True)
    x.add_argument("--compose-upto", type=_nonneg, default=None,
                   help="also check compositions up to this n (default min(upto, 14))")
    return p


def _spec_and_cap(args):
    try:
        spec = parse(args.steps)
    except ParseError as e:
        raise UsageError(f"stairs: error: invalid --steps: {e}\n"
                         f"  {args.steps}\n  {' ' * e.position}^") from None
    return spec, Cap(args.max_mult)


def _load_bfile(ref):
    path = Path(ref)
    if path.is_file():
        return read_bfile(path)
    if re.fullmatch(r"A\d{6}", ref):
        found = find_bfile(ref)
        if found is not None:
            return read_bfile(found)
        try:
            return pinned_bfile(ref)
        except FileNotFoundError:
            pass
    raise UsageError(f"b-file not found: {ref}")


def _emit(out, text=""):
    out.write(f"{text}\n")


def _cmd_count(args, out):
    spec, cap = _spec_and_cap(args)
    value = series(spec, cap, args.n)[args.n]
    _emit(out, value)
    return EXIT_OK


def _cmd_series(args, out):
    spec, cap = _spec_and_cap(args)
    coeffs = series(spec, cap, args.order).coeffs
    if args.machine:
        for c in coeffs:
            _emit(out, c)
    else:
        width = len(str(args.order))
        for i, c in enumerate(coeffs):
            _emit(out, f"{i:>{width}}  {c}")
    return EXIT_OK


def _cmd_list(args, out):
    spec, cap = _spec_and_cap(args)
    parts = enumerate_partitions(spec, cap, args.n)
    for p in parts:
        _emit(out, p)
    if not args.machine:
        print(f"{len(parts)} partition(s) of {args.n}", file=sys.stderr)
    return EXIT_OK


def _cmd_compose(args, out):
    spec, cap = _spec_and_cap(args)
    _emit(out, count_compositions(spec, cap, args.n))
    return EXIT_OK


def _cmd_verify(args, out):
    spec, cap = _spec_and_cap(args)
    try:
        bfile = _load_bfile(args.bfile)
    except (OSError, BFileError) as e:
        raise UsageError(str(e)) from None
    report = verify(spec, cap, bfile, args.upto, shift=args.shift)
    if args.machine:
        _emit(out, json.dumps(dict(report.to_dict(), source=bfile.source_name)))
    else:
        _emit(out, f"{bfile.source_name}: checked {report.checked} indices "
                   f"({report.first_index}..{report.last_index}), "
                   f"{len(report.mismatches)} mismatch(es)")
        for idx, want, got in report.mismatches:
            _emit(out, f"  index {idx}: expected {want}, computed {got}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_azarian(args, out):
    if args.a > args.b:
        raise UsageError(f"stairs: error: empty range --a {args.a} --b {args.b}")
    rows = []
    for q in questions(args.k, args.a, args.b):
        rows.append({
            "question": q.label,
            "prompt": q.prompt,
            "steps": q.steps,
            "cap": "unbounded" if q.cap is None else q.cap,
            "oeis": q.oeis_tag,
            "series": q.series(args.upto).coeffs,
        })
    if args.machine:
        _emit(out, json.dumps({"upto": args.upto, "questions": rows}))
        return EXIT_OK
    for r in rows:
        _emit(out, f"{r['question']}: {r['prompt']}")
        _emit(out, f"    steps={r['steps']}  cap={r['cap']}  oeis={r['oeis']}")
        _emit(out, "    " + " ".join(str(c) for c in r["series"]))
    return EXIT_OK


def _cmd_xcheck(args, out):
    spec, cap = _spec_and_cap(args)
    if args.upto > oracle.PARTITION_GUARD:
        raise UsageError(f"--upto {args.upto} exceeds the oracle guard {oracle.PARTITION_GUARD}")
    cupto = min(args.upto, 14) if args.compose_upto is None else args.compose_upto
    if cupto > oracle.COMPOSITION_GUARD:
        raise UsageError(f"--compose-upto {cupto} exceeds the oracle guard "
                         f"{oracle.COMPOSITION_GUARD}")
    coeffs = series(spec, cap, args.upto).coeffs
    bad = []
    for n in range(args.upto + 1):
        want = oracle.oracle_count_partitions(spec, cap, n)
        if coeffs[n] != want:
            bad.append(("partitions", n, want, coeffs[n]))
    for n in range(cupto + 1):
        want = oracle.oracle_count_compositions(spec, cap, n)
        got = count_compositions(spec, cap, n)
        if got != want:
            bad.append(("compositions", n, want, got))
    if args.machine:
        _emit(out, json.dumps({"partitions_upto": args.upto, "compositions_upto": cupto,
                               "mismatches": [list(b) for b in bad], "ok": not bad}))
    else:
        _emit(out, f"partitions 0..{args.upto}, compositions 0..{cupto}: "
                   + ("all equal" if not bad else f"{len(bad)} mismatch(es)"))
        for kind, n, want, got in bad:
            _emit(out, f"  {kind} n={n}: oracle {want}, engine {got}")
    return EXIT_OK if not bad else EXIT_MISMATCH


COMMANDS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "list": _cmd_list,
    "compose": _cmd_compose,
    "verify": _cmd_verify,
    "azarian": _cmd_azarian,
    "xcheck": _cmd_xcheck,
}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationLimitError, oracle.OracleGuardError) as e:
        print(f"stairs: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
