"""Command-line front end: polynomial construction, nullity tables, verification.

Exit status discipline: 0 on success, 1 for honest negative outcomes
(verification failures, unsolvable boards, I/O trouble), 2 for usage and
parse errors.  All output is deterministic for fixed arguments; random
sweeps take an explicit seed with a fixed default.
"""

from __future__ import annotations

import argparse
import math
import random
import sys

from .conjectures import (
    DEFAULT_DEGREE_CAP,
    check_all2,
    check_equivalence,
    check_powers,
    to_table,
)
from .fibpoly import fib_binomial, fib_hmp, fib_recursive
from .grid import GridSystem, LightState, StateFormatError
from .nullity import d_of_n, delta_closed_form, delta_via_gcd, format_csv, table, verify_recurrence
from .polygf2 import PolyGF2, gcd, ore_product_gcd
from .sierpinski import render, to_ascii, to_pbm

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_METHODS = {"recursive": fib_recursive, "binomial": fib_binomial, "hmp": fib_hmp}


def _decimal(minimum: int):
    """argparse type for a plain decimal integer with a lower bound."""

    def convert(text: str) -> int:
        if not text.isdigit():
            raise argparse.ArgumentTypeError(f"{text!r} is not a decimal integer")
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value

    return convert


def _format_poly(p: PolyGF2, form: str) -> str:
    return p.to_hex() if form == "hex" else p.to_text()


# -- subcommand implementations ----------------------------------------------


def cmd_fib(args: argparse.Namespace) -> int:
    if args.n < 1 and (args.method == "hmp" and not args.all_methods):
        print("fib: method hmp requires n >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.all_methods:
        names = ["recursive", "binomial"]
        if args.n >= 1:
            names.append("hmp")
    else:
        names = [args.method]
    results = {name: _METHODS[name](args.n) for name in names}
    values = set(p.bits for p in results.values())
    if len(values) > 1:
        detail = ", ".join(f"{name}: {p.to_text()}" for name, p in results.items())
        print(f"fib: methods disagree for n={args.n}: {detail}", file=sys.stderr)
        return EXIT_FAIL
    print(_format_poly(results[names[0]], args.format))
    return EXIT_OK


def cmd_d(args: argparse.Namespace) -> int:
    print(f"n={args.n} d={d_of_n(args.n)} delta={delta_closed_form(args.n)}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    text = format_csv(table(args.n_max))
    if args.output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"table: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    if args.all_ones:
        state = LightState.all_on(args.n)
    else:
        try:
            with open(args.state, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"solve: cannot read {args.state}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        try:
            state = LightState.from_text(text)
        except StateFormatError as exc:
            print(f"solve: {args.state}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if state.n != args.n:
            print(
                f"solve: {args.state} is a side-{state.n} board, expected side {args.n}",
                file=sys.stderr,
            )
            return EXIT_USAGE
    pattern = GridSystem(args.n).solve(state)
    if pattern is None:
        print("unsolvable")
        return EXIT_FAIL
    sys.stdout.write(pattern.to_text())
    return EXIT_OK


def cmd_sierpinski(args: argparse.Namespace) -> int:
    raster = render(args.rows)
    if args.ascii:
        sys.stdout.write(to_ascii(raster))
        return EXIT_OK
    text = to_pbm(raster)
    if args.pbm is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.pbm, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"sierpinski: cannot write {args.pbm}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    system = GridSystem(args.n)
    print(f"n={args.n} nullity={system.nullity()}")
    return EXIT_OK


# -- verification sweeps -------------------------------------------------------

_VERIFY_NMAX = {"recurrence": 5000, "delta": 2000, "hmp-gcd": 2000, "oracle": 64}
_VERIFY_TRIALS = {"hmp-gcd": 1000, "ore": 10000}
_VERIFY_KMAX = {"all2": 8, "powers": 17, "equivalence": 8}


def _run_recurrence(args: argparse.Namespace) -> tuple[bool, list[str]]:
    nmax = args.nmax or _VERIFY_NMAX["recurrence"]
    report = verify_recurrence(nmax)
    lines = []
    for chk in report.checks:
        if chk.ok:
            lines.append(f"recurrence {chk.name}: ok ({chk.checked} checked)")
        else:
            n, want, got = chk.first_failure
            lines.append(f"recurrence {chk.name}: FAIL at n={n}, expected {want}, got {got}")
    return report.ok, lines


def _run_delta(args: argparse.Namespace) -> tuple[bool, list[str]]:
    nmax = args.nmax or _VERIFY_NMAX["delta"]
    for n in range(1, nmax + 1):
        want = delta_closed_form(n)
        got = delta_via_gcd(n)
        if want != got:
            return False, [f"delta: FAIL at n={n}, closed form {want}, gcd form {got}"]
    return True, [f"delta: ok (two routes agree for n=1..{nmax})"]


def _run_hmp_gcd(args: argparse.Namespace) -> tuple[bool, list[str]]:
    bound = args.nmax or _VERIFY_NMAX["hmp-gcd"]
    trials = args.trials or _VERIFY_TRIALS["hmp-gcd"]
    rng = random.Random(args.seed)
    for _ in range(trials):
        m = rng.randint(1, bound)
        n = rng.randint(1, bound)
        got = gcd(fib_hmp(m), fib_hmp(n))
        want = fib_hmp(math.gcd(m, n))
        if got != want:
            return False, [f"hmp-gcd: FAIL at m={m}, n={n}"]
    return True, [f"hmp-gcd: ok ({trials} random pairs <= {bound}, seed {args.seed})"]


def _random_poly(rng: random.Random, max_degree: int) -> PolyGF2:
    d = rng.randint(0, max_degree)
    return PolyGF2(rng.getrandbits(d) | (1 << d))


def _run_ore(args: argparse.Namespace) -> tuple[bool, list[str]]:
    trials = args.trials or _VERIFY_TRIALS["ore"]
    rng = random.Random(args.seed)
    for _ in range(trials):
        a, b, c, d = (_random_poly(rng, 256) for _ in range(4))
        if ore_product_gcd(a, b, c, d) != gcd(a * b, c * d):
            return False, [
                "ore: FAIL for "
                f"a={a.to_hex()} b={b.to_hex()} c={c.to_hex()} d={d.to_hex()}"
            ]
    return True, [f"ore: ok ({trials} random quartets, degrees <= 256, seed {args.seed})"]


def _run_oracle(args: argparse.Namespace) -> tuple[bool, list[str]]:
    nmax = args.nmax or _VERIFY_NMAX["oracle"]
    for n in range(1, nmax + 1):
        want = GridSystem(n).nullity()
        got = d_of_n(n)
        if want != got:
            return False, [f"oracle: FAIL at n={n}, elimination {want}, gcd route {got}"]
    return True, [f"oracle: ok (gcd route matches elimination for n=1..{nmax})"]


def _run_all2(args: argparse.Namespace) -> tuple[bool, list[str]]:
    report = check_all2(args.kmax or _VERIFY_KMAX["all2"])
    return report.overall == "pass", to_table(report).splitlines()


def _run_powers(args: argparse.Namespace) -> tuple[bool, list[str]]:
    report = check_powers(
        args.amax or 51, args.kmax or _VERIFY_KMAX["powers"], args.degree_cap
    )
    return report.overall == "pass", to_table(report).splitlines()


def _run_equivalence(args: argparse.Namespace) -> tuple[bool, list[str]]:
    report = check_equivalence(args.kmax or _VERIFY_KMAX["equivalence"])
    return report.overall == "pass", to_table(report).splitlines()


_VERIFY_RUNNERS = {
    "recurrence": _run_recurrence,
    "delta": _run_delta,
    "hmp-gcd": _run_hmp_gcd,
    "ore": _run_ore,
    "oracle": _run_oracle,
    "all2": _run_all2,
    "powers": _run_powers,
    "equivalence": _run_equivalence,
}


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(_VERIFY_RUNNERS) if args.name == "all" else [args.name]
    all_ok = True
    for name in names:
        ok, lines = _VERIFY_RUNNERS[name](args)
        all_ok &= ok
        for line in lines:
            print(line)
    if len(names) > 1:
        print(f"verify: {'all checks passed' if all_ok else 'FAILURES above'}")
    return EXIT_OK if all_ok else EXIT_FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibgrid",
        description="GF(2) Fibonacci polynomials and grid toggle-game nullities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="print one Fibonacci polynomial over GF(2)")
    p.add_argument("n", type=_decimal(0), help="index, n >= 0")
    p.add_argument("--method", choices=sorted(_METHODS), default="recursive")
    p.add_argument(
        "--all-methods",
        action="store_true",
        help="compute by every method and fail on any disagreement",
    )
    p.add_argument("--format", choices=["text", "hex"], default="text")
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("d", help="kernel dimension and delta for one side length")
    p.add_argument("n", type=_decimal(1), help="grid side length, n >= 1")
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("table", help="CSV table of n,d,delta for n=1..NMAX")
    p.add_argument("n_max", type=_decimal(1), metavar="NMAX")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run one named verification sweep, or all")
    p.add_argument("name", choices=sorted(_VERIFY_RUNNERS) + ["all"])
    p.add_argument("--nmax", type=_decimal(1), help="sweep bound where applicable")
    p.add_argument("--trials", type=_decimal(1), help="random trial count where applicable")
    p.add_argument("--kmax", type=_decimal(1), help="exponent bound where applicable")
    p.add_argument("--amax", type=_decimal(3), help="base bound for the powers check")
    p.add_argument(
        "--degree-cap",
        type=_decimal(3),
        default=DEFAULT_DEGREE_CAP,
        help="skip power cases with a^k beyond this degree",
    )
    p.add_argument("--seed", type=int, default=1, help="seed for the random sweeps")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="press pattern turning a board all-off")
    p.add_argument("n", type=_decimal(1), help="grid side length, n >= 1")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--all-ones", action="store_true", help="solve the all-on board")
    src.add_argument("--state", help="board file: side length line, then 0/1 rows")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sierpinski", help="coefficient raster of the polynomial family")
    p.add_argument("rows", type=_decimal(1), metavar="ROWS")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--pbm", metavar="FILE", help="write plain PBM to a file")
    fmt.add_argument("--ascii", action="store_true", help="print '#'/'.' art instead of PBM")
    p.set_defaults(func=cmd_sierpinski)

    p = sub.add_parser("oracle", help="grid nullity by brute-force elimination")
    p.add_argument("n", type=_decimal(1), help="grid side length, n >= 1")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
