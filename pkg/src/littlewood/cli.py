"""Command-line front end.

Exit codes: 0 success (for ``verify``: no violations), 1 a verification
found a violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from sympy.functions.combinatorial.numbers import partition as npartitions

from . import emit as emitter
from .bott import bott
from .complexes import complex_terms, mult_dim, stable_specht, euler_identity_sweep, theorem61_check
from .expr import parse_expr
from .modification import mod_rule_closed_d1, mod_rule_recursive, closed_form_check
from .partitions import parse_partition
from .symfunc import eval_at_cycle_type, mn_character

DEFAULT_MAX_CASES = 1_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _format(sub, default="json"):
    sub.add_argument("--format", default=default, help="json, csv or latex (tables only for csv/latex)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="littlewood", description="Bott rule, modification rule, Littlewood complexes.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub = subs.add_parser("bott", help="lambda[n] and delta_n(lambda)")
    sub.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    sub.add_argument("--n", type=int, required=True)
    _format(sub)

    sub = subs.add_parser("modrule", help="modification rule i_d, tau_d")
    sub.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    sub.add_argument("--mu", type=_partition_arg, required=True)
    sub.add_argument("--d", type=int, default=1)
    sub.add_argument("--method", choices=("closed", "recursive"), default="recursive")
    _format(sub)

    sub = subs.add_parser("mult", help="dim M(lambda, mu)")
    sub.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    sub.add_argument("--mu", type=_partition_arg, required=True)
    _format(sub)

    sub = subs.add_parser("stable-specht", help="stable Specht function in the Schur basis")
    sub.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    _format(sub)

    sub = subs.add_parser("complex", help="terms of the Littlewood complex over S_n")
    sub.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    sub.add_argument("--n", type=int, required=True)
    _format(sub)

    sub = subs.add_parser("character", help="Specht character chi^shape(cycle type)")
    sub.add_argument("--shape", type=_partition_arg, required=True)
    sub.add_argument("--cycle-type", type=_partition_arg, required=True)
    _format(sub)

    sub = subs.add_parser("eval", help="evaluate an expression at a permutation matrix")
    sub.add_argument("--expr", required=True, help="e.g. 's[2,1] - 2*p[2]' or a SymFunc JSON document")
    sub.add_argument("--cycle-type", type=_partition_arg, required=True)
    _format(sub)

    sub = subs.add_parser("verify", help="run a verification sweep")
    sub.add_argument("suite", choices=("thm61", "thm41", "thm34"))
    sub.add_argument("--max-lambda", type=int, default=None)
    sub.add_argument("--max-n", type=int, default=8)
    sub.add_argument("--max-mu", type=int, default=6)
    sub.add_argument("--n", type=int, default=6, help="thm41: check every n up to this value")
    sub.add_argument("--max-degree", type=int, default=6)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--max-cases", type=int, default=DEFAULT_MAX_CASES)
    return parser


def _cumulative_partitions(k: int) -> int:
    return sum(int(npartitions(i)) for i in range(k + 1))


def estimate_cases(args) -> int:
    if args.suite == "thm61":
        return _cumulative_partitions(args.max_lambda) * _cumulative_partitions(args.max_n)
    if args.suite == "thm34":
        return _cumulative_partitions(args.max_lambda) * _cumulative_partitions(args.max_mu)
    return (args.n + 1) * _cumulative_partitions(args.n) * _cumulative_partitions(args.max_degree)


def _verify(args):
    if args.max_lambda is None:
        args.max_lambda = 5 if args.suite == "thm61" else 8
    bounds = [args.max_lambda, args.max_n, args.max_mu, args.n, args.max_degree]
    if min(bounds) < 0 or args.jobs < 1:
        raise UsageError("bounds must be nonnegative and --jobs at least 1")
    estimate = estimate_cases(args)
    if estimate > args.max_cases:
        raise UsageError(f"about {estimate} cases exceeds --max-cases {args.max_cases}")
    if args.suite == "thm61":
        return theorem61_check(args.max_lambda, args.max_n, jobs=args.jobs)
    if args.suite == "thm34":
        return closed_form_check(args.max_lambda, args.max_mu)
    return euler_identity_sweep(args.n, args.max_degree)


def dispatch(args):
    cmd = args.command
    if cmd == "bott":
        return bott(args.lam, args.n)
    if cmd == "modrule":
        if args.d < 1:
            raise UsageError("--d must be at least 1")
        if args.method == "closed":
            if args.d != 1:
                raise UsageError("the closed form exists only for --d 1")
            return mod_rule_closed_d1(args.lam, args.mu)
        return mod_rule_recursive(args.lam, args.mu, args.d)
    if cmd == "mult":
        return mult_dim(args.lam, args.mu)
    if cmd == "stable-specht":
        return stable_specht(args.lam)
    if cmd == "complex":
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        return complex_terms(args.lam, args.n)
    if cmd == "character":
        if args.shape.size != args.cycle_type.size:
            raise UsageError("shape and cycle type must have the same size")
        return mn_character(args.shape, args.cycle_type)
    if cmd == "eval":
        try:
            f = parse_expr(args.expr)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return eval_at_cycle_type(f, args.cycle_type)
    return _verify(args)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = dispatch(args)
        text = emitter.emit(result, args.format if hasattr(args, "format") else "json")
    except (UsageError, emitter.UnsupportedFormat) as exc:
        print(str(exc).rstrip(), file=stderr)
        return 2
    print(text.rstrip("\n"), file=stdout)
    if getattr(args, "command", None) == "verify":
        print(
            f"{result.suite}: {result.cases} cases, {len(result.violations)} violations, {result.wall_time:.2f}s",
            file=stderr,
        )
        return 0 if result.ok else 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
