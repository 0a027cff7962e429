"""Walsh transform W_F(u, v) = sum_x (-1)^(tr(v F(x)) + tr(u x)).

Two routes are kept side by side: ``walsh_at`` evaluates the defining sum
with scalar field arithmetic, and everything else goes through a fast
Walsh-Hadamard transform.  The FWHT uses bitwise characters
``(-1)^popcount(w & x)``; ``FieldSpec.dual_index`` converts those to trace
characters, since tr(u x) = popcount(D[u] & x) mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from opoly.field import FieldSpec, mul, mul_vec, trace, trace_vec
from opoly.func import VecFunc

MATERIALIZE_MAX_N = 10


class ResourceError(RuntimeError):
    """A request exceeds a configured size cap."""


def fwht(vec) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform along the last axis.

    Returns a new int64 array; applying it twice multiplies by the length.
    """
    a = np.array(vec, dtype=np.int64, copy=True)
    size = a.shape[-1]
    if size < 1 or size & (size - 1):
        raise ValueError(f"length {size} is not a power of two")
    lead = a.shape[:-1]
    h = 1
    while h < size:
        a = a.reshape(*lead, size // (2 * h), 2, h)
        lo = a[..., 0, :]
        hi = a[..., 1, :]
        a = np.stack((lo + hi, lo - hi), axis=-2)
        h *= 2
    return a.reshape(*lead, size)


def component_sign_table(F: VecFunc, v: int) -> np.ndarray:
    """(-1)^tr(v F(x)) for every x."""
    bits = trace_vec(F.spec, mul_vec(F.spec, F.table, v))
    return 1 - 2 * bits


def walsh_at(F: VecFunc, u: int, v: int) -> int:
    """The defining character sum, evaluated term by term."""
    spec = F.spec
    total = 0
    for x in range(spec.order):
        e = trace(spec, mul(spec, v, F(x))) ^ trace(spec, mul(spec, u, x))
        total += -1 if e else 1
    return total


def walsh_row(F: VecFunc, v: int) -> np.ndarray:
    """[W_F(u, v) for u in GF(2^n)]."""
    return fwht(component_sign_table(F, v))[F.spec.dual_index]


def diagonal_row(F: VecFunc, b: int) -> np.ndarray:
    """[W_F(b v, v) for v in GF(2^n)].

    W_F(bv, v) = sum_x (-1)^tr(v (F(x) + b x)), the Walsh transform at 0
    of x -> F(x) + b x, i.e. the trace-character transform of the value
    histogram of F(x) + b x.  Needs O(2^n) memory, so the aggregate sums
    can stream over b at any n.
    """
    spec = F.spec
    shifted = F.table ^ mul_vec(spec, spec.elements(), b)
    hist = np.bincount(shifted, minlength=spec.order)
    return fwht(hist)[spec.dual_index]


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """``entries[u, v] == W_F(u, v)``."""

    spec: FieldSpec
    entries: np.ndarray

    def __getitem__(self, uv) -> int:
        u, v = uv
        return int(self.entries[u, v])

    def row(self, v: int) -> np.ndarray:
        return self.entries[:, v]

    def diagonal(self, b: int) -> np.ndarray:
        v = self.spec.elements()
        return self.entries[mul_vec(self.spec, v, b), v]


def full_spectrum(F: VecFunc, max_n: int = MATERIALIZE_MAX_N) -> WalshSpectrum:
    spec = F.spec
    if spec.n > max_n:
        raise ResourceError(
            f"full spectrum capped at n <= {max_n} (got n = {spec.n}); "
            "use walsh_row / diagonal_row to stream rows instead"
        )
    v = spec.elements()
    products = mul_vec(spec, v[:, None], F.table[None, :])
    signs = 1 - 2 * trace_vec(spec, products)
    by_v = fwht(signs)[:, spec.dual_index]
    entries = np.ascontiguousarray(by_v.T)
    entries.setflags(write=False)
    return WalshSpectrum(spec, entries)


def iter_entries(F: VecFunc, dense: bool = False) -> Iterator[tuple[int, int, int]]:
    """Yield (u, v, W) one component row at a time; zeros skipped unless dense."""
    for v in range(F.spec.order):
        row = walsh_row(F, v)
        us = range(F.spec.order) if dense else np.flatnonzero(row)
        for u in us:
            yield int(u), v, int(row[u])


def write_csv(F: VecFunc, stream, dense: bool = False) -> None:
    stream.write("u,v,W\n")
    for u, v, w in iter_entries(F, dense):
        stream.write(f"{u},{v},{w}\n")
