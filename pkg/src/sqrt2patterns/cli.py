"""Command-line entry point.

Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
3 resource limit.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .constructions import as_rate, construction_word, target_rates
from .errors import DomainError, ResourceLimitError
from .logistic import METHODS, iterate_states
from .series import AUDIT_HEADER, SOURCES, audit, decimal_str, emit_rate_series
from .sqrt2 import sqrt2_fraction_bits
from .transforms import classify_normal_form, reduce_to_normal_form
from .verify import SUITES, run_suite
from .words import BinaryWord, prefix_rates, prefix_series

EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(text)


def _read_word(args) -> BinaryWord:
    if args.word is not None:
        return BinaryWord(args.word)
    return BinaryWord(Path(args.file).read_text(encoding="ascii").strip())


def _cmd_sqrt2(args) -> int:
    _emit(sqrt2_fraction_bits(args.bits).bits + "\n", args.out)
    return 0


def _cmd_undesirable(args) -> int:
    methods = [m.strip() for m in args.method.split(",") if m.strip()]
    rows = audit(args.max, methods)
    text = AUDIT_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
    _emit(text, args.csv)
    return 0


def _cmd_prng(args) -> int:
    trace = iterate_states(args.n, args.seed, args.steps)
    sys.stdout.write("".join(f"{s}\n" for s in trace.states))
    return 0


def _cmd_word_stats(args) -> int:
    w = _read_word(args)
    n = len(w) if args.prefix is None else args.prefix
    e = prefix_rates(w, n)
    sys.stdout.write("n,z_count,p_count,z_rate,p_rate\n")
    sys.stdout.write(f"{e.n},{e.z_count},{e.p_count},{e.z_rate},{e.p_rate}\n")
    return 0


def _cmd_reduce(args) -> int:
    normal, trace = reduce_to_normal_form(BinaryWord(args.word))
    if args.trace:
        for step in trace:
            sys.stdout.write(f"{step.k}: {step.before} -> {step.after}\n")
    sys.stdout.write(f"{normal}\n")
    return 0


def _cmd_classify(args) -> int:
    c = classify_normal_form(BinaryWord(args.word))
    cell = lambda v: "" if v is None else str(v)
    sys.stdout.write("type,p,q,s,N,Z,P\n")
    sys.stdout.write(",".join([str(c.type_tag), str(c.p), cell(c.q), cell(c.s),
                               str(c.length()), str(c.zeros()), str(c.patterns())]) + "\n")
    return 0


def _cmd_construct(args) -> int:
    w = construction_word(args.bound, as_rate(args.rate), args.len)
    _emit(f"{w}\n", args.out)
    return 0


def _cmd_construct_stats(args) -> int:
    r = as_rate(args.rate)
    w = construction_word(args.bound, r, args.len)
    tz, tp = target_rates(args.bound, r)
    stride = args.stride or args.len
    points = list(range(stride, args.len + 1, stride)) or [args.len]
    lines = ["n,z_rate,p_rate,target_z,target_p"]
    for e in prefix_series(w, points):
        lines.append(",".join([str(e.n)] + [decimal_str(x) for x in (e.z_rate, e.p_rate, tz, tp)]))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_verify(args) -> int:
    res = run_suite(args.suite, args.max_len)
    sys.stdout.write(res.summary() + "\n")
    for word, msg in res.violations:
        sys.stdout.write(f"  {word or '(empty)'}: {msg}\n")
    return 0 if res.ok else EXIT_VERIFY


def _cmd_rates(args) -> int:
    rows = emit_rate_series(args.max, args.stride, args.source, args.bound, as_rate(args.rate))
    text = "n,count,rate\n" + "".join(f"{n},{c},{decimal_str(r)}\n" for n, c, r in rows)
    _emit(text, args.csv)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sqrt2patterns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sqrt2", help="fractional bits of sqrt(2)")
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sqrt2)

    p = sub.add_parser("undesirable", help="audit accuracy parameters 2..N")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--method", default="exact",
                   help=f"one of {'|'.join(METHODS)}, or a comma list; the first drives d_n")
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_undesirable)

    p = sub.add_parser("prng", help="print generator states")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=_cmd_prng)

    p = sub.add_parser("word-stats", help="zero and pattern counts of a word")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--file")
    p.add_argument("--prefix", type=int)
    p.set_defaults(func=_cmd_word_stats)

    p = sub.add_parser("reduce", help="reduce a word to a fixed point")
    p.add_argument("--word", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("classify", help="shape and parameters of a fixed point")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_classify)

    for name, func in (("construct", _cmd_construct), ("construct-stats", _cmd_construct_stats)):
        p = sub.add_parser(name, help="extremal word for a zero rate")
        p.add_argument("--bound", choices=("lower", "upper"), required=True)
        p.add_argument("--rate", required=True, help="NUM/DEN")
        p.add_argument("--len", type=int, required=True)
        if name == "construct":
            p.add_argument("--out")
        else:
            p.add_argument("--stride", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="exhaustive checks over all short words")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("rates", help="running count/rate series as CSV")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--stride", type=int, required=True)
    p.add_argument("--source", choices=SOURCES, required=True)
    p.add_argument("--bound", choices=("lower", "upper"), default="lower")
    p.add_argument("--rate", default="1/2")
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_rates)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (DomainError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
