"""``anyon-bell`` command line.

Exit status: 0 when every case passes, 1 on a failing case or I/O error,
2 on a usage error.
"""

import argparse
import os
import sys

from . import report
from .braiding import FIB_WORD_25, braid_generators, ds3_permutation_scan, orbit_states
from .gates import best_violation_search
from .models import get_model
from .observables import build_I3, build_W
from .sector import phi0_state

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _seed(args):
    env = os.environ.get("ANYON_BELL_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"ANYON_BELL_SEED must be an integer, got {env!r}")
    return args.seed


class _UsageError(Exception):
    pass


def _emit(text, out):
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def _finish(rep, args):
    _emit(report.to_json(rep, timing=not args.no_timing), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_reproduce(args):
    if args.list:
        for cid in report.CASE_IDS:
            print(f"{cid:24s} {report.REFERENCES[cid][1]}")
        return EXIT_OK
    if not args.case:
        raise _UsageError("a case id (or 'all') is required")
    ids = report.CASE_IDS if args.case == ["all"] else args.case
    unknown = [c for c in ids if c not in report.REFERENCES]
    if unknown:
        raise _UsageError(f"unknown case id(s): {', '.join(unknown)}; see --list")
    return _finish(report.run_cases(ids, seed=_seed(args)), args)


def cmd_verify(args):
    return _finish(report.run_verify(args.suite, seed=_seed(args)), args)


def cmd_fig4(args):
    if args.samples < 3:
        raise _UsageError("--samples must be at least 3")
    _emit(report.fig4_csv(args.samples), args.out)
    return EXIT_OK


def _witness(model, name):
    name = name.lower()
    if name == "w":
        return build_W(model), 2.0
    if name == "i3":
        return build_I3(model), 2.0
    raise _UsageError(f"unknown witness {name!r}; expected w or i3")


def cmd_search(args):
    try:
        model = get_model(args.model)
    except ValueError as exc:
        raise _UsageError(str(exc))
    try:
        witness, bound = _witness(model, args.witness)
        rep = braid_generators(model)
    except ValueError as exc:
        raise _UsageError(str(exc))
    seed = _seed(args)
    start = phi0_state(model)
    if args.mode == "permutations":
        if model.name != "ds3":
            raise _UsageError("--mode permutations is available for ds3 only")
        scan = ds3_permutation_scan(rep, witness)
        i = int(abs(scan.values).argmax())
        word, value, evals = scan.words[i], float(scan.values[i]), len(scan.values)
    elif args.mode == "orbit":
        orbit = orbit_states(rep, start, max_states=args.max_states)
        vals = [witness.expectation(s) for s in orbit.states]
        i = max(range(len(vals)), key=lambda k: abs(vals[k]))
        word, value, evals = orbit.words[i], vals[i], len(vals)
    else:
        extra = [FIB_WORD_25] if args.include_paper_word and model.name == "fib" else []
        res = best_violation_search(rep, witness, start, args.length, args.budget,
                                    seed=seed, extra_words=extra)
        word, value, evals = res.word, res.value, res.evaluations
    run = report.RunReport(seed=seed, cases=[], notes=[], extra={"search": {
        "model": model.name, "witness": args.witness.lower(), "mode": args.mode,
        "word": str(word), "value": report._sig(value), "abs_value": report._sig(abs(value)),
        "lhv_bound": bound, "exceeds_lhv": bool(abs(value) > bound + 1e-9),
        "evaluations": evals}})
    return _finish(run, args)


def build_parser():
    p = _Parser(prog="anyon-bell", description="Bell-violation reproductions for anyon models.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, out_help="write JSON here instead of stdout"):
        sp.add_argument("--seed", type=int, default=0, help="random seed (ANYON_BELL_SEED wins)")
        sp.add_argument("--out", default=None, help=out_help)
        sp.add_argument("--no-timing", action="store_true",
                        help="report runtime_ms as 0 so output is byte-reproducible")

    r = sub.add_parser("reproduce", help="run named reproduction cases")
    r.add_argument("case", nargs="*", help="case ids, or 'all'")
    r.add_argument("--list", action="store_true", help="list case ids and exit")
    common(r)
    r.set_defaults(func=cmd_reproduce)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--suite", choices=("algebra", "braids", "lhv", "all"), default="all")
    common(v)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fig4", help="export the r(a) witness curves as CSV")
    f.add_argument("--samples", type=int, default=2001)
    f.add_argument("--out", default=None, help="CSV path (default stdout)")
    f.set_defaults(func=cmd_fig4)

    s = sub.add_parser("search", help="search braid words for large witness values")
    s.add_argument("model", help='"su2k:2", "fib" or "ds3"')
    s.add_argument("witness", help="w or i3")
    s.add_argument("--mode", choices=("random", "permutations", "orbit"), default="random")
    s.add_argument("--length", type=int, default=12)
    s.add_argument("--budget", type=int, default=2000)
    s.add_argument("--max-states", type=int, default=10**6)
    s.add_argument("--include-paper-word", action="store_true")
    common(s)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "length", 0) < 0 or getattr(args, "budget", 0) < 0:
        parser.error("--length and --budget must be non-negative")
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"anyon-bell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"anyon-bell: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
