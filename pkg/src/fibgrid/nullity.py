"""Kernel dimension of the n x n grid toggle system, via polynomial GCDs.

The all-press matrix of the n x n grid has nullity
d_n = deg gcd(f_{n+1}(x), f_{n+1}(x+1)) over GF(2), so the whole table
reduces to one GCD per side length.  The correction term
delta_n = d_{2n+1} - 2 d_n is always 0 or 2 and has both a closed form
(2 exactly when 3 | n+1) and a direct GCD form; both are provided, and
verify_recurrence sweeps the identities that tie everything together.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .fibpoly import fib_hmp
from .polygf2 import _divmod_bits, _gcd_bits, _subst_bits

__all__ = [
    "NullityRecord",
    "d_of_n",
    "delta_closed_form",
    "delta_via_gcd",
    "nullity_record",
    "table",
    "format_csv",
    "CheckResult",
    "RecurrenceReport",
    "verify_recurrence",
]


def _require_side(n: int) -> None:
    if n < 1:
        raise ValueError("grid side length must be >= 1")


def d_of_n(n: int) -> int:
    """Nullity of the n x n toggle system: deg gcd(f_{n+1}(x), f_{n+1}(x+1))."""
    _require_side(n)
    f = fib_hmp(n + 1).bits
    return _gcd_bits(f, _subst_bits(f)).bit_length() - 1


def delta_closed_form(n: int) -> int:
    """delta_n by the divisibility criterion: 2 when 3 divides n + 1, else 0."""
    _require_side(n)
    return 2 if (n + 1) % 3 == 0 else 0


def _d_and_delta(n: int) -> tuple[int, int]:
    """One GCD serves both: d = deg g, delta = 2 * deg gcd(x, f_{n+1}(x+1)/g)."""
    f = fib_hmp(n + 1).bits
    fs = _subst_bits(f)
    g = _gcd_bits(f, fs)
    quot = _divmod_bits(fs, g)[0]  # exact: g divides fs
    # gcd(x, quot) is x precisely when quot has no constant term
    return g.bit_length() - 1, 0 if quot & 1 else 2


def delta_via_gcd(n: int) -> int:
    """delta_n from its division form, 2 * deg gcd(x, f_{n+1}(x+1) / g).

    Here g = gcd(f_{n+1}(x), f_{n+1}(x+1)); the quotient is exact.
    """
    _require_side(n)
    return _d_and_delta(n)[1]


@dataclass(frozen=True)
class NullityRecord:
    """One table row: side length n, kernel dimension d, correction delta."""

    n: int
    d: int
    delta: int


def nullity_record(n: int) -> NullityRecord:
    """Record for one side length; d by the GCD route, delta by the closed form."""
    _require_side(n)
    return NullityRecord(n, d_of_n(n), delta_closed_form(n))


def table(n_max: int) -> list[NullityRecord]:
    """Records for every n in 1..n_max, in order."""
    _require_side(n_max)
    return [nullity_record(n) for n in range(1, n_max + 1)]


def format_csv(records: Iterable[NullityRecord]) -> str:
    """Exact CSV text: header "n,d,delta", one decimal row per record, LF endings."""
    lines = ["n,d,delta"]
    lines.extend(f"{r.n},{r.d},{r.delta}" for r in records)
    return "\n".join(lines) + "\n"


# -- recurrence verification ---------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity sweep.

    first_failure is None when every index passed, else the smallest failing
    (n, expected, got) triple.
    """

    name: str
    checked: int
    first_failure: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        return self.first_failure is None


@dataclass(frozen=True)
class RecurrenceReport:
    """All sweep outcomes for one verify_recurrence run."""

    n_max: int
    quad_max: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_recurrence(n_max: int, quad_max: int | None = None) -> RecurrenceReport:
    """Sweep the doubling identities, with d and delta both from the GCD route.

    Checks:
      double-d      d(2n+1) == 2 d(n) + delta(n)   for n = 1..n_max
      double-delta  delta(2n+1) == delta(n)        for n = 1..n_max
      quad-d        d(4n+3) == 4 d(n) + 3 delta(n) for n = 1..quad_max
      delta-range   delta(n) in {0, 2}             for every index visited

    quad_max defaults to n_max // 2.  Results are fully deterministic and
    keep the first counterexample per check.
    """
    _require_side(n_max)
    if quad_max is None:
        quad_max = n_max // 2
    if quad_max < 0 or quad_max > n_max:
        raise ValueError("quad_max must be between 0 and n_max")

    cache: dict[int, tuple[int, int]] = {}

    def vals(n: int) -> tuple[int, int]:
        got = cache.get(n)
        if got is None:
            got = cache[n] = _d_and_delta(n)
        return got

    fail_dd: tuple[int, int, int] | None = None
    fail_de: tuple[int, int, int] | None = None
    fail_q: tuple[int, int, int] | None = None
    fail_r: tuple[int, int, int] | None = None

    for n in range(1, n_max + 1):
        d1, e1 = vals(n)
        d2, e2 = vals(2 * n + 1)
        if fail_dd is None and d2 != 2 * d1 + e1:
            fail_dd = (n, 2 * d1 + e1, d2)
        if fail_de is None and e2 != e1:
            fail_de = (n, e1, e2)
    for n in range(1, quad_max + 1):
        d1, e1 = vals(n)
        d4 = vals(4 * n + 3)[0]
        if fail_q is None and d4 != 4 * d1 + 3 * e1:
            fail_q = (n, 4 * d1 + 3 * e1, d4)
    for n in sorted(cache):
        e = cache[n][1]
        if fail_r is None and e not in (0, 2):
            fail_r = (n, 0, e)

    checks = (
        CheckResult("double-d", n_max, fail_dd),
        CheckResult("double-delta", n_max, fail_de),
        CheckResult("quad-d", quad_max, fail_q),
        CheckResult("delta-range", len(cache), fail_r),
    )
    return RecurrenceReport(n_max, quad_max, checks)
