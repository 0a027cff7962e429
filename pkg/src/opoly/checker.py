"""O-polynomial tests and the exact Walsh sums they rest on.

Notation: for b != 0 and any a, N(b, a) = |{x : F(x) + b x = a}|.  F is an
o-polynomial iff every N(b, a) is 0 or 2.  Because X (X - 2)^2 is zero on
{0, 2} and positive on the other naturals,

    count_deficiency(F) = sum_{a, b != 0} N (N - 2)^2 >= 0

with equality exactly for o-polynomials.  Rewriting the power sums of N
through Walsh values turns the same quantity, scaled by 2^(2n), into
``walsh_excess``: the triple sum
    sum_{b != 0} sum_{v1, v2} W(b v1, v1) W(b v2, v2) W(b (v1+v2), v1+v2)
plus 2^(n+2) sum_{v != 0} W(0, v)^2 - 2^(4n+2) + 2^(3n+2).

Everything here is integer arithmetic.  Aggregates are returned as Python
ints; numpy int64 is used only where the bound is checked first.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from opoly.field import mul_vec, trace
from opoly.func import VecFunc, is_permutation, slope_function
from opoly.spectrum import (
    MATERIALIZE_MAX_N,
    ResourceError,
    diagonal_row,
    full_spectrum,
    fwht,
    walsh_at,
)

NAIVE_TRIPLE_MAX_N = 5
COROLLARY_ORACLE_MAX_N = 3


class ConsistencyError(RuntimeError):
    """Two characterizations disagreed: always an implementation bug."""


def _exact_sum(a) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    if int(np.abs(a).max()) * a.size < 2**62:
        return int(a.sum())
    return sum(a.tolist())


def _sum_of_cubes(a: np.ndarray) -> int:
    if a.size and int(np.abs(a).max()) <= 2**20:
        cubes = a**3
        return (_exact_sum(cubes >> 31) << 31) + _exact_sum(cubes & (2**31 - 1))
    return sum(x**3 for x in a.tolist())


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{num} is not divisible by {den}")
    return q


# -- counting side -----------------------------------------------------------


def count_solutions(F: VecFunc, b: int, a: int) -> int:
    """|{x : F(x) + b x = a}| by scanning every x."""
    lhs = F.table ^ mul_vec(F.spec, F.spec.elements(), b)
    return int(np.count_nonzero(lhs == a))


def _histogram(F: VecFunc, b: int) -> np.ndarray:
    """N(b, a) for every a."""
    lhs = F.table ^ mul_vec(F.spec, F.spec.elements(), b)
    return np.bincount(lhs, minlength=F.spec.order)


def count_deficiency(F: VecFunc) -> int:
    total = 0
    for b in range(1, F.spec.order):
        N = _histogram(F, b)
        total += _exact_sum(N * (N - 2) ** 2)
    return total


def check_direct(F: VecFunc) -> bool:
    for b in range(1, F.spec.order):
        N = _histogram(F, b)
        if np.any((N != 0) & (N != 2)):
            return False
    return True


def count_moment(F: VecFunc, j: int) -> int:
    """sum_{a, b != 0} N(b, a)^j straight from count_solutions."""
    q = F.spec.order
    return sum(count_solutions(F, b, a) ** j for b in range(1, q) for a in range(q))


# -- slope functions ---------------------------------------------------------


def check_slopes(F: VecFunc) -> bool:
    """F and every slope function G_s are permutations."""
    if not is_permutation(F):
        return False
    return all(is_permutation(slope_function(F, s)) for s in range(F.spec.order))


# -- Walsh side --------------------------------------------------------------


@dataclass
class SpectralSums:
    """Per-b pieces of the Walsh aggregates, indexed by b (b = 0 included).

    square[b] = sum_v W(bv, v)^2 and
    triple[b] = sum_{v1, v2} W(bv1, v1) W(bv2, v2) W(b(v1+v2), v1+v2).
    """

    n: int
    square: list[int]
    triple: list[int]

    @property
    def square_sum_total(self) -> int:
        return sum(self.square[1:])

    @property
    def triple_sum(self) -> int:
        return sum(self.triple[1:])

    @property
    def zero_column_square_sum(self) -> int:
        """sum_{v != 0} W(0, v)^2."""
        return self.square[0] - 2 ** (2 * self.n)

    @property
    def tail(self) -> int:
        n = self.n
        return 2 ** (n + 2) * self.zero_column_square_sum - 2 ** (4 * n + 2) + 2 ** (3 * n + 2)

    @property
    def walsh_excess(self) -> int:
        return self.triple_sum + self.tail


def _per_b(n: int, row: np.ndarray) -> tuple[int, int]:
    # XOR self-convolution: sum_{v1,v2} f(v1) f(v2) f(v1^v2) = 2^-n sum_w fhat(w)^3
    square = _exact_sum(row * row)
    triple = _exact_div(_sum_of_cubes(fwht(row)), 2**n)
    return square, triple


def spectral_sums(F: VecFunc, method: str = "stream", threads: int = 1) -> SpectralSums:
    """Compute the per-b square and triple sums.

    ``method="stream"`` builds each diagonal row W(bv, v) independently in
    O(2^n) memory; ``method="spectrum"`` gathers them from the materialised
    spectrum.  Results do not depend on ``threads``.
    """
    n = F.spec.n
    if method == "stream":
        def work(b):
            return _per_b(n, diagonal_row(F, b))
    elif method == "spectrum":
        spectrum = full_spectrum(F)

        def work(b):
            return _per_b(n, spectrum.diagonal(b))
    else:
        raise ValueError(f"unknown method {method!r}")

    bs = range(F.spec.order)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, bs))
    else:
        results = [work(b) for b in bs]
    return SpectralSums(n, [r[0] for r in results], [r[1] for r in results])


def square_sum(F: VecFunc, b: int) -> int:
    """sum_v W(bv, v)^2, v = 0 included."""
    row = diagonal_row(F, b)
    return _exact_sum(row * row)


def _naive_diagonals(F: VecFunc) -> list[list[int]]:
    q = F.spec.order
    f = []
    for b in range(q):
        bv = mul_vec(F.spec, F.spec.elements(), b).tolist()
        f.append([walsh_at(F, bv[v], v) for v in range(q)])
    return f


def triple_sum(F: VecFunc, method: str = "stream", threads: int = 1) -> int:
    if method != "naive":
        return spectral_sums(F, method, threads).triple_sum
    if F.spec.n > NAIVE_TRIPLE_MAX_N:
        raise ResourceError(f"naive triple sum capped at n <= {NAIVE_TRIPLE_MAX_N}")
    q = F.spec.order
    f = _naive_diagonals(F)
    total = 0
    for b in range(1, q):
        fb = f[b]
        for v1 in range(q):
            for v2 in range(q):
                total += fb[v1] * fb[v2] * fb[v1 ^ v2]
    return total


def walsh_excess(F: VecFunc, method: str = "stream", threads: int = 1) -> int:
    """Left side of the Walsh inequality; 0 iff F is an o-polynomial."""
    return spectral_sums(F, method, threads).walsh_excess


def check_walsh(F: VecFunc, method: str = "stream", threads: int = 1) -> bool:
    return walsh_excess(F, method, threads) == 0


def remark_constants(n: int) -> tuple[int, int]:
    """Values the square-sum total and the triple sum take on o-polynomials."""
    return (2**n - 1) * 2 ** (2 * n + 1), (2**n - 1) * 2 ** (3 * n + 2)


def check_remark(F: VecFunc, sums: Optional[SpectralSums] = None) -> bool:
    sums = sums or spectral_sums(F)
    square_target, triple_target = remark_constants(F.spec.n)
    return sums.square_sum_total == square_target and sums.triple_sum == triple_target


def moment_sum(F: VecFunc, j: int, sums: Optional[SpectralSums] = None) -> int:
    """sum_{a, b != 0} N(b, a)^j computed from Walsh values, j in {1, 2, 3}.

    With v_1 + ... + v_j = 0 the Walsh products collapse to: W(0, 0) = 2^n
    for j = 1, W(bv, v)^2 for j = 2 (v_2 = v_1 in characteristic 2), and the
    triple sum for j = 3; the result carries a factor 2^(-(j-1) n).
    """
    n = F.spec.n
    q = F.spec.order
    if j == 1:
        return (q - 1) * _walsh_origin(F)
    sums = sums or spectral_sums(F)
    if j == 2:
        return _exact_div(sums.square_sum_total, 2**n)
    if j == 3:
        return _exact_div(sums.triple_sum, 2 ** (2 * n))
    raise ValueError(f"moment order {j} not supported (use 1, 2 or 3)")


def _walsh_origin(F: VecFunc) -> int:
    """W(0, 0), which is always 2^n."""
    return int(diagonal_row(F, 0)[0])


def corollary_excess(F: VecFunc, method: str = "spectral") -> int:
    """Corollary form of the excess; equals walsh_excess.

    Its first term is the triple sum taken over every b (b = 0 included),
    from which the b = 0 contribution sum W(0,v1) W(0,v2) W(0,v1+v2) is
    subtracted.  ``method="oracle"`` computes the first term as
    2^n sum_{v1,v2} sum_{v1 x1 + v2 x2 + (v1+v2) x3 = 0}
        (-1)^tr(v1 F(x1) + v2 F(x2) + (v1+v2) F(x3))
    by a plain five-fold loop, and W(0, v) by walsh_at.
    """
    spec = F.spec
    n = spec.n
    if method == "spectral":
        # gathered from the materialised spectrum when it fits, so this route
        # does not share the per-b histogram path used by walsh_excess
        sums = spectral_sums(F, "spectrum" if n <= MATERIALIZE_MAX_N else "stream")
        all_b = sum(sums.triple)
        return all_b - sums.triple[0] + sums.tail
    if method != "oracle":
        raise ValueError(f"unknown method {method!r}")
    if n > COROLLARY_ORACLE_MAX_N:
        raise ResourceError(f"corollary oracle capped at n <= {COROLLARY_ORACLE_MAX_N}")

    q = spec.order
    els = spec.elements()
    mt = mul_vec(spec, els[:, None], els[None, :]).tolist()
    tr = [trace(spec, a) for a in range(q)]
    Fx = F.tolist()
    first = 0
    for v1 in range(q):
        for v2 in range(q):
            v3 = v1 ^ v2
            for x1 in range(q):
                for x2 in range(q):
                    for x3 in range(q):
                        if mt[v1][x1] ^ mt[v2][x2] ^ mt[v3][x3]:
                            continue
                        e = mt[v1][Fx[x1]] ^ mt[v2][Fx[x2]] ^ mt[v3][Fx[x3]]
                        first += -1 if tr[e] else 1
    first *= q
    w0 = [walsh_at(F, 0, v) for v in range(q)]
    zero_triple = sum(w0[v1] * w0[v2] * w0[v1 ^ v2] for v1 in range(q) for v2 in range(q))
    zero_sq = sum(w * w for w in w0[1:])
    tail = 2 ** (n + 2) * zero_sq - 2 ** (4 * n + 2) + 2 ** (3 * n + 2)
    return first - zero_triple + tail


# -- report ------------------------------------------------------------------


@dataclass
class CheckReport:
    n: int
    modulus: int
    function: str
    verdict_direct: bool
    verdict_slopes: bool
    verdict_walsh: bool
    verdict_remark: bool
    count_deficiency: int
    walsh_excess: int
    square_sum_total: int
    triple_sum: int
    moments: dict[int, int] = field(default_factory=dict)
    verdict_geometry: Optional[bool] = None

    @property
    def is_o_polynomial(self) -> bool:
        return self.verdict_direct

    def to_dict(self) -> dict:
        verdicts = {
            "direct": self.verdict_direct,
            "slopes": self.verdict_slopes,
            "walsh": self.verdict_walsh,
            "remark": self.verdict_remark,
        }
        if self.verdict_geometry is not None:
            verdicts["geometry"] = self.verdict_geometry
        return {
            "n": self.n,
            "modulus": f"{self.modulus:#x}",
            "function": self.function,
            "verdicts": verdicts,
            "sums": {
                "count_deficiency": str(self.count_deficiency),
                "walsh_excess": str(self.walsh_excess),
                "triple_sum": str(self.triple_sum),
                "square_sum_total": str(self.square_sum_total),
                "moments": {str(j): str(m) for j, m in sorted(self.moments.items())},
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def full_report(
    F: VecFunc,
    include_geometry: bool = False,
    method: str = "stream",
    threads: int = 1,
) -> CheckReport:
    direct = check_direct(F)
    slopes = check_slopes(F)
    sums = spectral_sums(F, method, threads)
    excess = sums.walsh_excess
    deficiency = count_deficiency(F)
    geometry = None
    if include_geometry:
        from opoly.geometry import hyperoval_points, is_hyperoval

        geometry = is_hyperoval(F.spec, hyperoval_points(F))

    report = CheckReport(
        n=F.spec.n,
        modulus=F.spec.modulus,
        function=F.label,
        verdict_direct=direct,
        verdict_slopes=slopes,
        verdict_walsh=excess == 0,
        verdict_remark=check_remark(F, sums),
        count_deficiency=deficiency,
        walsh_excess=excess,
        square_sum_total=sums.square_sum_total,
        triple_sum=sums.triple_sum,
        moments={j: moment_sum(F, j, sums) for j in (1, 2, 3)},
        verdict_geometry=geometry,
    )
    verdicts = {direct, slopes, report.verdict_walsh, report.verdict_remark}
    if geometry is not None:
        verdicts.add(geometry)
    if len(verdicts) != 1:
        raise ConsistencyError(f"characterizations disagree for {F.label}: {report.to_dict()}")
    if excess != 2 ** (2 * F.spec.n) * deficiency or excess < 0:
        raise ConsistencyError(
            f"walsh_excess {excess} != 2^(2n) * count_deficiency {deficiency}"
        )
    return report


def sums_report(F: VecFunc, method: str = "stream", threads: int = 1) -> dict:
    """Every aggregate, with the o-polynomial reference values alongside."""
    sums = spectral_sums(F, method, threads)
    square_target, triple_target = remark_constants(F.spec.n)
    return {
        "n": F.spec.n,
        "modulus": f"{F.spec.modulus:#x}",
        "function": F.label,
        "triple_sum": str(sums.triple_sum),
        "square_sums": {str(b): str(s) for b, s in enumerate(sums.square) if b},
        "square_sum_total": str(sums.square_sum_total),
        "zero_column_square_sum": str(sums.zero_column_square_sum),
        "walsh_excess": str(sums.walsh_excess),
        "moments": {str(j): str(moment_sum(F, j, sums)) for j in (1, 2, 3)},
        "reference": {
            "square_sum_total": str(square_target),
            "triple_sum": str(triple_target),
        },
    }
