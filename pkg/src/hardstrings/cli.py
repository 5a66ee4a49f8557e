"""``hardstrings`` command-line interface.

Exit codes: 0 success, 1 a verified property failed, 2 bad parameters,
3 I/O or file-format failure, 4 a construction search found nothing.
``HARDSTRINGS_SEED`` supplies the default ``--seed``.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from hardstrings import fileformat, verify
from hardstrings.bench import SOLVERS, records_to_csv, run_bench
from hardstrings.errors import FormatError, NotFound, ParamError, ReductionError
from hardstrings.gapstrings import GapMode, Strategy, auto_gap, edit_gap, mismatch_gap
from hardstrings.hardgen import (
    BlockParams,
    DictionaryConfig,
    compute_select_prob,
    default_prune_radius,
    enumerate_base_strings,
    enumerate_queries,
    generate_dictionary,
)
from hardstrings.instance import Instance, Mode
from hardstrings.reduction import build_text, dict_lookup_via_text, transform_instance
from hardstrings.strings import as_symbols

EXIT_OK, EXIT_PROPERTY, EXIT_PARAM, EXIT_IO, EXIT_NOT_FOUND = range(5)


class _Fail(Exception):
    """Raised inside a command to leave with a specific exit code."""

    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def default_seed() -> int:
    raw = os.environ.get("HARDSTRINGS_SEED")
    if raw is None or raw == "":
        return 0
    try:
        seed = int(raw, 0)
    except ValueError:
        raise _Fail(EXIT_PARAM, f"HARDSTRINGS_SEED={raw!r} is not an integer") from None
    if seed < 0:
        raise _Fail(EXIT_PARAM, "HARDSTRINGS_SEED must be non-negative")
    return seed


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _fraction(raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {raw!r}") from None


# -- commands -----------------------------------------------------------------

def cmd_gen(args) -> int:
    params = BlockParams(args.k, args.d)
    if args.kind == "queries":
        strings = enumerate_queries(params)
    elif args.kind == "base":
        strings = enumerate_base_strings(params)
    else:
        radius = args.prune_radius
        if radius is None:
            radius = default_prune_radius(args.n, args.k, args.d) if args.n else 0
        prob = args.select_prob
        if prob is None:
            prob = compute_select_prob(args.k, args.d, radius) if args.n else Fraction(1)
        strings = generate_dictionary(DictionaryConfig(params, prob, radius, args.seed))
    if args.count is not None and args.count < len(strings):
        rng = np.random.default_rng(args.seed)
        keep = np.sort(rng.choice(len(strings), size=args.count, replace=False))
        strings = [strings[i] for i in keep]
    inst = Instance([s.to_symbols() for s in strings], args.k, Mode.HAMMING)
    _emit(fileformat.dumps_instance(inst, "compact", d=args.d), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    inst = fileformat.read_instance(args.input)
    out = transform_instance(inst)
    d = out.d if len(out) else 0
    _emit(fileformat.dumps_instance(out, "tokens", d=d), args.out)
    return EXIT_OK


def cmd_gen_gap(args) -> int:
    if args.mode == "edit":
        g = edit_gap(args.d)
    elif args.strategy == "auto":
        g = auto_gap(args.d, seed=args.seed) if args.budget is None else \
            auto_gap(args.d, seed=args.seed, budget=args.budget)
    else:
        g = mismatch_gap(args.d, args.strategy, seed=args.seed, budget=args.budget)
    _emit(fileformat.dumps_gap(g), args.out)
    return EXIT_OK


def cmd_build_text(args) -> int:
    inst = fileformat.read_instance(args.dict)
    if args.mode is not None:
        inst = Instance(inst.strings, inst.k, args.mode)
    if args.k is not None:
        inst = Instance(inst.strings, args.k, inst.mode)
    gap = None if args.gap == "auto" else fileformat.read_gap(args.gap)
    art = build_text(inst, gap, epsilon=args.epsilon)
    _emit(fileformat.dumps_text(art), args.out)
    return EXIT_OK


def cmd_query(args) -> int:
    art = fileformat.read_text(args.text)
    answers = dict_lookup_via_text(art, as_symbols(args.pattern), args.k, args.mode)
    _emit("".join(f"{a.dict_index} {a.distance}\n" for a in answers), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    checks: list[verify.Check] = []
    for suite in suites:
        if suite == "stoppers":
            checks += verify.stoppers_suite(args.max_d, pairs=args.trials or 200, seed=args.seed)
        elif suite == "gap":
            ds = (args.d,) if args.d else tuple(x for x in (2, 4, 8) if x <= args.max_d)
            checks += verify.gap_suite(ds, forced=args.gap, seed=args.seed)
        elif suite == "counts":
            checks += verify.counts_suite(args.k or 4, args.d or 16, args.trials or 100, args.seed)
        elif suite == "reduction":
            checks += verify.reduction_suite(args.trials or 500, max_d=args.max_d, seed=args.seed)
        else:
            checks += verify.solvers_suite(args.trials or 1000, seed=args.seed)
    for c in checks:
        print(c.line())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_PROPERTY


def cmd_bench(args) -> int:
    records = run_bench(args.solver, args.kmin, args.kmax, args.d, args.n, args.queries, args.seed)
    _emit(records_to_csv(records), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser(seed: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hardstrings", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_seed(p):
        p.add_argument("--seed", type=int, default=seed, help="default: $HARDSTRINGS_SEED or 0")
        return p

    def with_out(p):
        p.add_argument("--out", "-o", default=None, help="output file (default: stdout)")
        return p

    g = with_out(with_seed(sub.add_parser("gen", help="generate query, base or dictionary strings")))
    g.add_argument("kind", choices=("queries", "dict", "base"))
    g.add_argument("--k", type=int, required=True, help="number of blocks (even)")
    g.add_argument("--d", type=int, required=True, help="string length (multiple of k)")
    g.add_argument("--count", type=int, default=None, help="keep a seeded random sample of this size")
    g.add_argument("--n", type=int, default=None,
                   help="dictionary size used to derive the default select-prob and prune-radius")
    g.add_argument("--select-prob", type=_fraction, default=None)
    g.add_argument("--prune-radius", type=int, default=None)
    g.set_defaults(func=cmd_gen)

    t = with_out(sub.add_parser("transform", help="stoppers-transform a binary instance file"))
    t.add_argument("input", help="Hamming-mode instance file")
    t.set_defaults(func=cmd_transform)

    gg = with_out(with_seed(sub.add_parser("gen-gap", help="construct a gap string")))
    gg.add_argument("--d", type=int, required=True)
    gg.add_argument("--mode", choices=[m.value for m in (GapMode.MISMATCH, GapMode.EDIT)],
                    default="mismatch")
    gg.add_argument("--strategy", choices=["auto"] + [s.value for s in Strategy], default="auto")
    gg.add_argument("--budget", type=int, default=None)
    gg.set_defaults(func=cmd_gen_gap)

    b = with_out(sub.add_parser("build-text", help="interleave a dictionary with a gap string"))
    b.add_argument("dict", help="instance file")
    b.add_argument("--gap", default="auto", help="'auto' or a gap file")
    b.add_argument("--mode", choices=[m.value for m in Mode], default=None,
                   help="override the instance file's mode")
    b.add_argument("--k", type=int, default=None, help="override the instance file's k")
    b.add_argument("--epsilon", type=float, default=0.0)
    b.set_defaults(func=cmd_build_text)

    q = with_out(sub.add_parser("query", help="dictionary look-up through the text"))
    q.add_argument("text", help="text file from build-text")
    q.add_argument("--pattern", required=True, help="query string of length d")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    q.set_defaults(func=cmd_query)

    v = with_seed(sub.add_parser("verify", help="run a property suite"))
    v.add_argument("suite", choices=verify.SUITES + ("all",))
    v.add_argument("--max-d", type=int, default=8)
    v.add_argument("--d", type=int, default=None)
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--gap", default=None, help="check this gap string instead of searching")
    v.add_argument("--trials", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    be = with_out(with_seed(sub.add_parser("bench", help="query latency per k, as CSV")))
    be.add_argument("--solver", choices=SOLVERS, default="trie")
    be.add_argument("--kmin", type=int, default=0)
    be.add_argument("--kmax", type=int, default=4)
    be.add_argument("--d", type=int, default=16)
    be.add_argument("--n", type=int, default=1000, help="dictionary strings")
    be.add_argument("--queries", type=int, default=100)
    be.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(default_seed())
        args = parser.parse_args(argv)
        return args.func(args)
    except _Fail as exc:
        _error(str(exc))
        return exc.code
    except SystemExit as exc:  # argparse usage errors exit with 2
        return int(exc.code or 0)
    except NotFound as exc:
        _error(str(exc))
        return EXIT_NOT_FOUND
    except ReductionError as exc:
        _error(str(exc))
        return EXIT_PROPERTY
    except (FormatError, OSError) as exc:
        _error(str(exc))
        return EXIT_IO
    except (ParamError, ValueError) as exc:
        _error(str(exc))
        return EXIT_PARAM


def _error(message: str) -> None:
    print(f"hardstrings: error: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
