"""Command-line front end: evaluate integrals, emit convergence tables, run checks.

Exit codes: 0 success, 1 property failure, 2 input error.
"""

from __future__ import annotations

import argparse
import random
import sys

from .errors import LebesgueError
from .integral import convergence_rows
from .integral import integral as integral_of
from .specfile import dump_spec, load_spec
from .suite import random_specfile, run_battery


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lebesgue",
        description="Exact Lebesgue integration on finite measure spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    integrate = sub.add_parser("integrate", help="integrate a named function")
    integrate.add_argument("--spec", required=True, help="measure-space spec file")
    integrate.add_argument("--fn", required=True, help="function name")

    table = sub.add_parser(
        "adapted-table",
        help="CSV table of the dyadic approximation integrals and their gaps",
    )
    table.add_argument("--spec", required=True)
    table.add_argument("--fn", required=True)
    table.add_argument("--nmax", type=int, required=True, help="last dyadic level")

    check = sub.add_parser("check", help="run the theorem property suite")
    check.add_argument("--spec", help="run the suite on one spec file")
    check.add_argument(
        "--random",
        nargs=3,
        type=int,
        metavar=("SEED", "COUNT", "SIZE"),
        help="run COUNT random cases with universes up to SIZE (default 0 500 6)",
    )
    check.add_argument("--csv", action="store_true", help="machine-readable report")
    check.add_argument(
        "--corrupt",
        action="store_true",
        help="debug: break one measure value to confirm the suite catches it",
    )
    return parser


def _cmd_integrate(args) -> int:
    spec = load_spec(args.spec)
    sa = spec.sigma()
    value = integral_of(spec.measure_on(sa), spec.function(args.fn))
    print(value)
    return 0


def _cmd_adapted_table(args) -> int:
    if args.nmax < 1:
        print("error: --nmax must be at least 1", file=sys.stderr)
        return 2
    spec = load_spec(args.spec)
    sa = spec.sigma()
    rows = convergence_rows(spec.measure_on(sa), spec.function(args.fn), args.nmax)
    print("n,integral,gap")
    for n, value, gap in rows:
        print(f"{n},{value},{gap}")
    return 0


def _cmd_check(args) -> int:
    if args.spec:
        cases = [load_spec(args.spec)]
    else:
        seed, count, size = args.random if args.random else (0, 500, 6)
        rng = random.Random(seed)
        cases = [random_specfile(rng, size) for _ in range(count)]

    passed: dict[str, int] = {}
    failed: dict[str, int] = {}
    failing_cases = []
    for case in cases:
        outcomes = run_battery(case, corrupt=args.corrupt)
        bad = False
        for prop, ok in outcomes:
            bucket = passed if ok else failed
            bucket[prop] = bucket.get(prop, 0) + 1
            bad = bad or not ok
        if bad:
            failing_cases.append(case)

    names = sorted(set(passed) | set(failed))
    if args.csv:
        print("property,passed,failed")
        for name in names:
            print(f"{name},{passed.get(name, 0)},{failed.get(name, 0)}")
    else:
        for name in names:
            status = "FAIL" if failed.get(name) else "PASS"
            print(
                f"{status} {name}: {passed.get(name, 0)} passed,"
                f" {failed.get(name, 0)} failed"
            )
    for case in failing_cases:
        print("# counterexample (loadable spec)")
        sys.stdout.write(dump_spec(case))
    return 1 if failed else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "integrate": _cmd_integrate,
        "adapted-table": _cmd_adapted_table,
        "check": _cmd_check,
    }
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LebesgueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
