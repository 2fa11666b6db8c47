"""Coefficient raster of the Fibonacci family, a right-angled Sierpinski gasket.

Row n of the image (top row is n = 1) shows the coefficients of f_n,
column i holding the coefficient of x^i with column 0 on the left.  The
raster is square: n_rows rows of n_rows columns, which fits because
deg f_n = n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fibpoly import fib_binomial

__all__ = ["SierpinskiRaster", "render", "to_pbm", "to_ascii"]


@dataclass(frozen=True)
class SierpinskiRaster:
    """Bit rows of f_1 .. f_{n_rows}; rows[k] packs row k+1, bit i = column i."""

    n_rows: int
    rows: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.n_rows


def render(n_rows: int) -> SierpinskiRaster:
    """Raster of the first n_rows polynomials, each row from the binomial form."""
    if n_rows < 1:
        raise ValueError("n_rows must be >= 1")
    return SierpinskiRaster(n_rows, tuple(fib_binomial(n).bits for n in range(1, n_rows + 1)))


def to_pbm(raster: SierpinskiRaster) -> str:
    """Plain PBM (P1): header, then space-separated 0/1 rows, 1 for a set coefficient."""
    lines = [f"P1\n{raster.width} {raster.n_rows}"]
    for bits in raster.rows:
        lines.append(" ".join("1" if bits >> i & 1 else "0" for i in range(raster.width)))
    return "\n".join(lines) + "\n"


def to_ascii(raster: SierpinskiRaster) -> str:
    """Terminal rendering: '#' for a set coefficient, '.' otherwise."""
    lines = []
    for bits in raster.rows:
        lines.append("".join("#" if bits >> i & 1 else "." for i in range(raster.width)))
    return "\n".join(lines) + "\n"
