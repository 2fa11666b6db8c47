"""Bit-packed GF(2) kernels for the grid toggle game.

The package computes the Fibonacci polynomial family over GF(2), reduces
the kernel dimension of the n x n all-press toggle system to a single
polynomial GCD, cross-checks that shortcut against brute-force Gaussian
elimination, and sweeps the identities and open conjectures that the
nullity sequence satisfies.
"""

from .conjectures import (
    DEFAULT_DEGREE_CAP,
    ConjectureCase,
    ConjectureReport,
    check_all2,
    check_equivalence,
    check_powers,
    to_csv,
    to_table,
)
from .fibpoly import (
    divisibility_index,
    fib_binomial,
    fib_hmp,
    fib_recursive,
    fib_sequence,
)
from .grid import GridSystem, LightState, StateFormatError, build_system
from .nullity import (
    CheckResult,
    NullityRecord,
    RecurrenceReport,
    d_of_n,
    delta_closed_form,
    delta_via_gcd,
    format_csv,
    nullity_record,
    table,
    verify_recurrence,
)
from .polygf2 import (
    ONE,
    X,
    ZERO,
    PolyGF2,
    add,
    divrem,
    gcd,
    mul,
    multiplicity,
    ore_product_gcd,
    subst_x_plus_1,
)
from .sierpinski import SierpinskiRaster, render, to_ascii, to_pbm

__version__ = "0.1.0"

__all__ = [
    "PolyGF2",
    "ZERO",
    "ONE",
    "X",
    "add",
    "mul",
    "divrem",
    "gcd",
    "subst_x_plus_1",
    "multiplicity",
    "ore_product_gcd",
    "fib_recursive",
    "fib_binomial",
    "fib_hmp",
    "fib_sequence",
    "divisibility_index",
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
    "LightState",
    "GridSystem",
    "build_system",
    "StateFormatError",
    "ConjectureCase",
    "ConjectureReport",
    "DEFAULT_DEGREE_CAP",
    "check_all2",
    "check_powers",
    "check_equivalence",
    "to_csv",
    "to_table",
    "SierpinskiRaster",
    "render",
    "to_pbm",
    "to_ascii",
    "__version__",
]
