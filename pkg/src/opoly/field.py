"""Arithmetic in GF(2^n), 1 <= n <= 16, in polynomial basis.

Elements are ints in ``[0, 2^n)`` whose bit ``i`` is the coefficient of
``x^i``.  Addition is XOR.  Scalar routines (``mul``, ``inv``, ``power``,
``trace``) follow the textbook definitions and act as the reference; the
``*_vec`` helpers are numpy versions used to build whole value tables and
are tested against the scalar ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_DEGREE = 16

# Lexicographically smallest irreducible polynomial of each degree.
# Regenerated and checked against is_irreducible in the test suite.
DEFAULT_MODULI = {
    1: 0x2,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}


class FieldError(ValueError):
    """Bad field parameters or an undefined field operation (e.g. 1/0)."""


def degree(poly: int) -> int:
    return poly.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` divided by ``m`` over GF(2)."""
    dm = degree(m)
    while a and degree(a) >= dm:
        a ^= m << (degree(a) - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = degree(poly)
    if d < 1:
        raise FieldError(f"polynomial {poly:#x} has degree < 1")
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(poly, q) == 0:
            return False
    return True


def find_default_modulus(n: int) -> int:
    if not 1 <= n <= MAX_DEGREE:
        raise FieldError(f"n must be in 1..{MAX_DEGREE}, got {n}")
    return DEFAULT_MODULI[n]


def search_smallest_irreducible(n: int) -> int:
    """Scan degree-n bitmasks upward; the slow path behind DEFAULT_MODULI."""
    for poly in range(1 << n, 1 << (n + 1)):
        if is_irreducible(poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    n: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise FieldError(f"n must be in 1..{MAX_DEGREE}, got {self.n}")
        if degree(self.modulus) != self.n:
            raise FieldError(
                f"modulus {self.modulus:#x} does not have degree {self.n}"
            )
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {self.modulus:#x} is reducible")

    @classmethod
    def default(cls, n: int) -> FieldSpec:
        return cls(n, find_default_modulus(n))

    @property
    def order(self) -> int:
        return 1 << self.n

    def __repr__(self):
        return f"FieldSpec(n={self.n}, modulus={self.modulus:#x})"

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def trace_mask(self) -> int:
        """Bit i set iff tr(x^i) = 1, so tr(a) = parity(a & trace_mask)."""
        return sum(trace(self, 1 << i) << i for i in range(self.n))

    @cached_property
    def dual_index(self) -> np.ndarray:
        """``D`` with tr(u*x) == parity(D[u] & x) for all u, x.

        Bit i of D[u] is tr(u * x^i).  Used to re-index Walsh-Hadamard
        output (bitwise characters) into trace characters.
        """
        u = self.elements()
        out = np.zeros_like(u)
        for i in range(self.n):
            out |= trace_vec(self, mul_vec(self, u, 1 << i)) << i
        out.setflags(write=False)
        return out

    @cached_property
    def inverse_table(self) -> np.ndarray:
        """inv(a) for every a, with 0 mapped to 0."""
        t = power_vec(self, self.elements(), self.order - 2)
        t[0] = 0
        t.setflags(write=False)
        return t


def _check(spec: FieldSpec, a: int):
    if not 0 <= a < spec.order:
        raise FieldError(f"{a} is not an element of GF(2^{spec.n})")


def mul(spec: FieldSpec, a: int, b: int) -> int:
    _check(spec, a)
    _check(spec, b)
    top = 1 << spec.n
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= spec.modulus
    return result


def power(spec: FieldSpec, a: int, e: int) -> int:
    """Square-and-multiply; ``power(spec, 0, 0) == 1``."""
    if e < 0:
        raise FieldError("negative exponent")
    _check(spec, a)
    result = 1
    while e:
        if e & 1:
            result = mul(spec, result, a)
        a = mul(spec, a, a)
        e >>= 1
    return result


def inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise FieldError("0 has no multiplicative inverse")
    return power(spec, a, spec.order - 2)


def trace(spec: FieldSpec, a: int) -> int:
    """Absolute trace a + a^2 + a^4 + ... + a^(2^(n-1))."""
    _check(spec, a)
    t = 0
    for _ in range(spec.n):
        t ^= a
        a = mul(spec, a, a)
    if t not in (0, 1):
        raise AssertionError(f"trace left the prime field: {t}")
    return t


# -- vectorised versions ---------------------------------------------------


def mul_vec(spec: FieldSpec, a, b) -> np.ndarray:
    """Elementwise product of broadcastable int arrays (or scalars)."""
    a = np.array(a, dtype=np.int64, copy=True)
    b = np.asarray(b, dtype=np.int64)
    a, b = np.broadcast_arrays(a, b)
    a = a.copy()
    top = 1 << spec.n
    result = np.zeros(a.shape, dtype=np.int64)
    for bit in range(spec.n):
        result ^= np.where((b >> bit) & 1, a, 0)
        a <<= 1
        a ^= np.where(a & top, spec.modulus, 0)
    return result


def power_vec(spec: FieldSpec, a, e: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    result = np.ones(a.shape, dtype=np.int64)
    while e:
        if e & 1:
            result = mul_vec(spec, result, a)
        a = mul_vec(spec, a, a)
        e >>= 1
    return result


def trace_vec(spec: FieldSpec, a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    return (np.bitwise_count(a & spec.trace_mask) & 1).astype(np.int64)


def parse_modulus(text: str, n: int | None = None) -> FieldSpec:
    """Build a FieldSpec from a hex bitmask such as ``0x13``."""
    try:
        modulus = int(text, 16)
    except ValueError:
        raise FieldError(f"modulus {text!r} is not a hexadecimal bitmask") from None
    d = degree(modulus)
    if n is not None and d != n:
        raise FieldError(f"modulus {text} has degree {d}, expected {n}")
    return FieldSpec(d, modulus)
