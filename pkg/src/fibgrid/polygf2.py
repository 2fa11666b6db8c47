"""Exact arithmetic for polynomials over GF(2), bit-packed into integers.

Bit i of the backing integer holds the coefficient of x^i, so Python's
arbitrary-precision ints double as dense, word-packed coefficient vectors:
addition is XOR, multiplication by x is a shift, and canonical form (equal
bit patterns iff equal polynomials, degree from bit_length) comes for free.
Every nonzero polynomial is monic, which makes GCDs unique outright.
"""

from __future__ import annotations

from dataclasses import dataclass

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
]


# -- integer kernels ---------------------------------------------------------
# These operate on raw coefficient masks and carry essentially the whole cost
# of the package; everything public wraps them.


def _mul_bits(a: int, b: int) -> int:
    """Carry-less product: XOR shifted copies, iterating over the sparser operand."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() < b.bit_count():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def _divmod_bits(a: int, b: int) -> tuple[int, int]:
    """Long division, clearing the leading remainder bit each step."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    nb = b.bit_length()
    na = a.bit_length()
    q = 0
    while na >= nb:
        shift = na - nb
        q |= 1 << shift
        a ^= b << shift
        na = a.bit_length()
    return q, a


def _mod_bits(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    nb = b.bit_length()
    na = a.bit_length()
    while na >= nb:
        a ^= b << (na - nb)
        na = a.bit_length()
    return a


def _gcd_bits(a: int, b: int) -> int:
    while b:
        a, b = b, _mod_bits(a, b)
    return a


def _spread_table() -> list[int]:
    table = []
    for byte in range(256):
        v = 0
        for i in range(8):
            if byte >> i & 1:
                v |= 1 << (2 * i)
        table.append(v)
    return table


_SPREAD = _spread_table()


def _square_bits(z: int) -> int:
    """Square a polynomial: interleave zero bits (Frobenius in characteristic 2)."""
    if z == 0:
        return 0
    data = z.to_bytes((z.bit_length() + 7) // 8, "little")
    out = bytearray(2 * len(data))
    table = _SPREAD
    for i, byte in enumerate(data):
        spread = table[byte]
        out[2 * i] = spread & 0xFF
        out[2 * i + 1] = spread >> 8
    return int.from_bytes(out, "little")


def _subst_bits(z: int) -> int:
    """Map p(x) to p(x+1) by XOR-folding bit blocks at power-of-two strides.

    Output bit j is the parity of C(i, j) over the set input bits i, an XOR
    over bitwise supersets of j; one fold per stride computes exactly that,
    and the whole transform is an involution.
    """
    if z == 0:
        return 0
    nbits = z.bit_length()
    stride = 1
    while stride < nbits:
        # ones on the low half of each 2*stride block, repeated to cover z
        mask = (1 << stride) - 1
        width = 2 * stride
        while width < nbits + stride:
            mask |= mask << width
            width <<= 1
        z ^= (z >> stride) & mask
        stride <<= 1
    return z


# -- public value type -------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PolyGF2:
    """An immutable polynomial over the two-element field.

    ``bits`` packs the coefficients, bit i being the coefficient of x^i.
    The zero polynomial has degree -1.  Values hash and compare by their
    packed bits, so structural equality is semantic equality.
    """

    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("coefficient bits must be nonnegative")

    # construction

    @classmethod
    def monomial(cls, k: int) -> "PolyGF2":
        """x**k."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls(1 << k)

    @classmethod
    def from_coeffs(cls, coeffs) -> "PolyGF2":
        """Build from an iterable of 0/1 coefficients, lowest degree first."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError("coefficients must be 0 or 1")
            bits |= c << i
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> "PolyGF2":
        """Inverse of to_text: terms 1, x, x^k joined by +, or the single term 0."""
        s = text.strip()
        if s == "0":
            return cls(0)
        bits = 0
        for raw in s.split("+"):
            term = raw.strip()
            if term == "1":
                bit = 1
            elif term == "x":
                bit = 2
            elif term.startswith("x^") and term[2:].isdigit():
                bit = 1 << int(term[2:])
            else:
                raise ValueError(f"bad term {term!r}")
            if bits & bit:
                raise ValueError(f"repeated term {term!r}")
            bits |= bit
        return cls(bits)

    @classmethod
    def from_hex(cls, s: str) -> "PolyGF2":
        """Inverse of to_hex: little-endian coefficient bytes; empty string is zero."""
        return cls(int.from_bytes(bytes.fromhex(s), "little"))

    # inspection

    @property
    def degree(self) -> int:
        """Highest power with a set coefficient, or -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def coefficient(self, i: int) -> int:
        """Coefficient of x**i as 0 or 1."""
        if i < 0:
            raise ValueError("exponent must be nonnegative")
        return self.bits >> i & 1

    # rendering

    def to_text(self) -> str:
        """Canonical text form: terms in descending degree joined by " + "."""
        if not self.bits:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            if self.bits >> k & 1:
                terms.append("x^%d" % k if k >= 2 else ("x" if k == 1 else "1"))
        return " + ".join(terms)

    def to_hex(self) -> str:
        """Little-endian coefficient bytes as lowercase hex; zero is the empty string."""
        if not self.bits:
            return ""
        return self.bits.to_bytes((self.bits.bit_length() + 7) // 8, "little").hex()

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"PolyGF2({self.to_text()!r})"

    # arithmetic

    def __add__(self, other: "PolyGF2") -> "PolyGF2":
        if not isinstance(other, PolyGF2):
            return NotImplemented
        return PolyGF2(self.bits ^ other.bits)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "PolyGF2") -> "PolyGF2":
        if not isinstance(other, PolyGF2):
            return NotImplemented
        return PolyGF2(_mul_bits(self.bits, other.bits))

    def __divmod__(self, other: "PolyGF2") -> tuple["PolyGF2", "PolyGF2"]:
        if not isinstance(other, PolyGF2):
            return NotImplemented
        q, r = _divmod_bits(self.bits, other.bits)
        return PolyGF2(q), PolyGF2(r)

    def __floordiv__(self, other: "PolyGF2") -> "PolyGF2":
        if not isinstance(other, PolyGF2):
            return NotImplemented
        return PolyGF2(_divmod_bits(self.bits, other.bits)[0])

    def __mod__(self, other: "PolyGF2") -> "PolyGF2":
        if not isinstance(other, PolyGF2):
            return NotImplemented
        return PolyGF2(_mod_bits(self.bits, other.bits))

    def __lshift__(self, k: int) -> "PolyGF2":
        """Multiply by x**k."""
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return PolyGF2(self.bits << k)

    def __pow__(self, exponent: int) -> "PolyGF2":
        """Repeated squaring; 0**0 is taken as 1 (empty product)."""
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        out = 1
        base = self.bits
        e = exponent
        while e:
            if e & 1:
                out = _mul_bits(out, base)
            e >>= 1
            if e:
                base = _square_bits(base)
        return PolyGF2(out)

    def __bool__(self) -> bool:
        return bool(self.bits)


ZERO = PolyGF2(0)
ONE = PolyGF2(1)
X = PolyGF2(2)


# -- module-level operations -------------------------------------------------


def add(p: PolyGF2, q: PolyGF2) -> PolyGF2:
    """Sum over GF(2): coefficient-wise XOR.  Every element is its own negative."""
    return PolyGF2(p.bits ^ q.bits)


def mul(p: PolyGF2, q: PolyGF2) -> PolyGF2:
    """Product; degrees add for nonzero operands (no zero divisors)."""
    return PolyGF2(_mul_bits(p.bits, q.bits))


def divrem(p: PolyGF2, q: PolyGF2) -> tuple[PolyGF2, PolyGF2]:
    """Quotient and remainder with p == q*quot + rem and deg rem < deg q.

    Raises ZeroDivisionError when q is the zero polynomial.
    """
    quot, rem = _divmod_bits(p.bits, q.bits)
    return PolyGF2(quot), PolyGF2(rem)


def gcd(p: PolyGF2, q: PolyGF2) -> PolyGF2:
    """Euclidean GCD, unique because nonzero GF(2) polynomials are monic.

    gcd(p, 0) is p for nonzero p; gcd(0, 0) is undefined and raises.
    """
    if not p.bits and not q.bits:
        raise ValueError("gcd(0, 0) is undefined")
    return PolyGF2(_gcd_bits(p.bits, q.bits))


def subst_x_plus_1(p: PolyGF2) -> PolyGF2:
    """Compose with x + 1: output coefficient j is sum over i of C(i, j) c_i mod 2.

    A ring homomorphism and an involution, since (x+1)+1 is x again.
    """
    return PolyGF2(_subst_bits(p.bits))


def multiplicity(p: PolyGF2, factor: PolyGF2) -> int:
    """Largest k such that factor**k divides p; p nonzero, deg factor >= 1."""
    if not p.bits:
        raise ValueError("the zero polynomial has unbounded multiplicity")
    if factor.degree < 1:
        raise ValueError("factor must have degree >= 1")
    bits = p.bits
    count = 0
    while True:
        quot, rem = _divmod_bits(bits, factor.bits)
        if rem:
            return count
        bits = quot
        count += 1


def ore_product_gcd(a: PolyGF2, b: PolyGF2, c: PolyGF2, d: PolyGF2) -> PolyGF2:
    """gcd(a*b, c*d) assembled from four pairwise GCDs of smaller operands.

    Evaluates (a,c) (b,d) (a/(a,c), d/(b,d)) (c/(a,c), b/(b,d)), writing
    (u,v) for gcd(u, v); all four operands must be nonzero.
    """
    if not (a.bits and b.bits and c.bits and d.bits):
        raise ValueError("operands must be nonzero")
    g1 = _gcd_bits(a.bits, c.bits)
    g2 = _gcd_bits(b.bits, d.bits)
    t1 = _gcd_bits(_divmod_bits(a.bits, g1)[0], _divmod_bits(d.bits, g2)[0])
    t2 = _gcd_bits(_divmod_bits(c.bits, g1)[0], _divmod_bits(b.bits, g2)[0])
    return PolyGF2(_mul_bits(_mul_bits(g1, g2), _mul_bits(t1, t2)))
