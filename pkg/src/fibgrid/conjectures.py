"""Range checks for the open nullity conjectures.

Everything here is empirical: a report claims "verified for the tested
range" and never more, with ranges bounded by an explicit polynomial
degree cap so runtimes stay desk-scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .nullity import d_of_n, delta_via_gcd

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "ConjectureCase",
    "ConjectureReport",
    "check_all2",
    "check_powers",
    "check_equivalence",
    "to_csv",
    "to_table",
]

DEFAULT_DEGREE_CAP = 200_000


@dataclass(frozen=True)
class ConjectureCase:
    """One tested instance; params is a semicolon-joined key=value string."""

    params: str
    expected: int
    computed: int

    @property
    def verdict(self) -> str:
        return "pass" if self.expected == self.computed else "fail"


@dataclass(frozen=True)
class ConjectureReport:
    """All cases for one named conjecture check."""

    name: str
    cases: tuple[ConjectureCase, ...]

    @property
    def overall(self) -> str:
        """pass when every case passes, fail when every case fails, else partial."""
        if all(c.verdict == "pass" for c in self.cases):
            return "pass"
        if all(c.verdict == "fail" for c in self.cases):
            return "fail"
        return "partial"


def check_all2(k_max: int) -> ConjectureReport:
    """d at n = 2*3^k - 1 should always be 2; tested for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    cases = []
    power = 1
    for k in range(1, k_max + 1):
        power *= 3
        n = 2 * power - 1
        cases.append(ConjectureCase(f"k={k};n={n}", 2, d_of_n(n)))
    return ConjectureReport("all2", tuple(cases))


def check_powers(a_max: int, k_max: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> ConjectureReport:
    """d(a^k - 1) should equal d(a - 1) for odd a with 21 not dividing a.

    Tests every odd a in 3..a_max outside the excluded residues and every
    k in 1..k_max with a^k <= degree_cap; excluded a contribute no cases.
    """
    if a_max < 3:
        raise ValueError("a_max must be >= 3")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if degree_cap < 3:
        raise ValueError("degree_cap must be >= 3")
    cases = []
    for a in range(3, a_max + 1, 2):
        if a % 21 == 0:
            continue  # outside the conjecture's hypothesis
        base = d_of_n(a - 1)
        power = 1
        for k in range(1, k_max + 1):
            power *= a
            if power > degree_cap:
                break
            cases.append(ConjectureCase(f"a={a};k={k};n={power - 1}", base, d_of_n(power - 1)))
    return ConjectureReport("powers", tuple(cases))


def check_equivalence(k_max: int) -> ConjectureReport:
    """Linkage at a = 3: d(2*3^k - 1) = 2 d(3^k - 1) + delta(3^k - 1), delta being 2.

    Each k contributes a "link" case comparing the measured d(2*3^k - 1)
    against the combination, and a "delta" case pinning delta(3^k - 1) = 2.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    cases = []
    power = 1
    for k in range(1, k_max + 1):
        power *= 3
        m = power - 1
        dm = d_of_n(m)
        em = delta_via_gcd(m)
        lhs = d_of_n(2 * power - 1)
        cases.append(ConjectureCase(f"k={k};part=link", 2 * dm + em, lhs))
        cases.append(ConjectureCase(f"k={k};part=delta", 2, em))
    return ConjectureReport("equivalence", tuple(cases))


def to_csv(reports: Iterable[ConjectureReport]) -> str:
    """Exact CSV: header "name,params,expected,computed,verdict", LF endings."""
    lines = ["name,params,expected,computed,verdict"]
    for report in reports:
        for case in report.cases:
            lines.append(
                f"{report.name},{case.params},{case.expected},{case.computed},{case.verdict}"
            )
    return "\n".join(lines) + "\n"


def to_table(report: ConjectureReport) -> str:
    """Human-readable rendering with the per-case verdicts and a range disclaimer."""
    width = max(len(c.params) for c in report.cases)
    lines = [f"== {report.name} =="]
    for case in report.cases:
        lines.append(
            f"  {case.params:<{width}}  expected={case.expected:<4} "
            f"computed={case.computed:<4} {case.verdict}"
        )
    if report.overall == "pass":
        lines.append(f"result: pass, verified for the tested range ({len(report.cases)} cases)")
    else:
        failed = sum(1 for c in report.cases if c.verdict == "fail")
        lines.append(f"result: {report.overall} ({failed} of {len(report.cases)} cases failed)")
    return "\n".join(lines) + "\n"
