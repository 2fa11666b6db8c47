"""The Fibonacci polynomial family over GF(2), built by three independent routes.

f_0 = 0, f_1 = 1, f_n = x*f_{n-1} + f_{n-2}.  Over GF(2) the family is
strictly divisibility-ordered (f_m | f_n whenever m | n), which the
divisibility scanner below exploits.
"""

from __future__ import annotations

from typing import Iterator

from .polygf2 import PolyGF2, _mod_bits

__all__ = [
    "fib_recursive",
    "fib_binomial",
    "fib_hmp",
    "fib_sequence",
    "divisibility_index",
]


def fib_recursive(n: int) -> PolyGF2:
    """f_n by iterating the defining recurrence f_n = x*f_{n-1} + f_{n-2}."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return PolyGF2(0)
    prev, cur = 0, 1  # f_0, f_1 as raw bits
    for _ in range(n - 1):
        prev, cur = cur, (cur << 1) ^ prev
    return PolyGF2(cur)


def fib_sequence(n_max: int) -> Iterator[PolyGF2]:
    """Yield f_0 .. f_{n_max} in order, amortizing the recurrence across a sweep."""
    if n_max < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = 0, 1
    yield PolyGF2(0)
    for _ in range(n_max):
        yield PolyGF2(cur)
        prev, cur = cur, (cur << 1) ^ prev


def fib_binomial(n: int) -> PolyGF2:
    """f_n from its closed coefficient form: bit i is C(n+i, 2i+1) mod 2.

    A binomial coefficient is odd exactly when the lower index's base-2
    digits are a subset of the upper index's, so each bit is one AND and
    one compare.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    bits = 0
    for i in range(n):
        lo = 2 * i + 1
        if (n + i) & lo == lo:
            bits |= 1 << i
    return PolyGF2(bits)


def fib_hmp(n: int) -> PolyGF2:
    """f_n via the odd-part identity f_{b*2^k} = x^(2^k - 1) * f_b^(2^k), n >= 1.

    Splitting n into odd part b and two-power 2^k replaces most of the
    recurrence with k squarings, each a linear-time bit interleave.
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    k = (n & -n).bit_length() - 1
    b = n >> k
    return (fib_recursive(b) ** (1 << k)) << ((1 << k) - 1)


def divisibility_index(tau: PolyGF2, search_bound: int) -> int | None:
    """Smallest n in 1..search_bound with tau dividing f_n, or None if there is none.

    When that index v exists, tau divides f_m exactly when v divides m.
    The scan runs the recurrence on residues mod tau, costing O(deg tau)
    words per step independent of n.
    """
    if tau.degree < 1:
        raise ValueError("tau must have degree >= 1")
    if search_bound < 1:
        raise ValueError("search_bound must be >= 1")
    t = tau.bits
    prev, cur = 0, 1  # residues of f_0, f_1 (deg tau >= 1 keeps 1 reduced)
    for n in range(1, search_bound + 1):
        if cur == 0:
            return n
        prev, cur = cur, _mod_bits((cur << 1) ^ prev, t)
    return None
