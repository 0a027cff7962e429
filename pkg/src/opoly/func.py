"""Functions GF(2^n) -> GF(2^n) stored as full value tables."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from opoly.field import FieldSpec, mul_vec, power_vec


class FunctionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class VecFunc:
    """``table[x] == F(x)``.  ``label`` is only used in reports."""

    spec: FieldSpec
    table: np.ndarray
    label: str = ""

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        if t.ndim != 1 or len(t) != self.spec.order:
            raise FunctionError(
                f"table must have {self.spec.order} entries, got {t.size}"
            )
        if t.size and (t.min() < 0 or t.max() >= self.spec.order):
            raise FunctionError(f"table entries must lie in [0, {self.spec.order})")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def n(self) -> int:
        return self.spec.n

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other):
        if not isinstance(other, VecFunc):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.spec, self.table.tobytes()))

    def tolist(self) -> list[int]:
        return self.table.tolist()


def from_table(spec: FieldSpec, values: Sequence[int], label: str = "table") -> VecFunc:
    return VecFunc(spec, np.asarray(values), label)


def from_monomial(spec: FieldSpec, d: int) -> VecFunc:
    """x -> x^d with 0^0 = 1.  ``d`` is not reduced mod 2^n - 1."""
    if not 0 <= d <= spec.order - 1:
        raise FunctionError(f"exponent {d} outside [0, {spec.order - 1}]")
    return VecFunc(spec, power_vec(spec, spec.elements(), d), f"mono:{d}")


def from_polynomial(spec: FieldSpec, terms: Iterable[tuple[int, int]]) -> VecFunc:
    """Sum of ``coef * x^exp`` over ``(exp, coef)`` pairs with distinct exponents."""
    terms = list(terms)
    exps = [e for e, _ in terms]
    if len(set(exps)) != len(exps):
        raise FunctionError(f"duplicate exponents in {exps}")
    xs = spec.elements()
    table = np.zeros(spec.order, dtype=np.int64)
    for e, c in terms:
        if not 0 <= e <= spec.order - 1:
            raise FunctionError(f"exponent {e} outside [0, {spec.order - 1}]")
        if not 0 < c < spec.order:
            raise FunctionError(f"coefficient {c:#x} must be a nonzero field element")
        table ^= mul_vec(spec, power_vec(spec, xs, e), c)
    label = "poly:" + ",".join(f"{e}:{c:x}" for e, c in terms)
    return VecFunc(spec, table, label)


def reduce_exponent(spec: FieldSpec, d: int) -> int:
    """Map d >= 1 into [1, 2^n - 1]; agrees with x^d on every x including 0."""
    if d < 1:
        raise FunctionError("only positive exponents can be reduced")
    return (d - 1) % (spec.order - 1) + 1


def is_permutation(F: VecFunc) -> bool:
    seen = np.zeros(F.spec.order, dtype=bool)
    seen[F.table] = True
    return bool(seen.all())


def slope_function(F: VecFunc, s: int) -> VecFunc:
    """G_s(t) = (F(t+s) + F(s)) / t for t != 0, and G_s(0) = 0."""
    spec = F.spec
    t = spec.elements()
    diff = F.table[t ^ s] ^ F.table[s]
    table = mul_vec(spec, diff, spec.inverse_table)
    table[0] = 0
    return VecFunc(spec, table, f"slope({F.label},{s})")


def read_table_file(spec: FieldSpec, path: str | Path) -> VecFunc:
    """Whitespace-separated hex values, one per field element."""
    text = Path(path).read_text()
    try:
        values = [int(tok, 16) for tok in text.split()]
    except ValueError as exc:
        raise FunctionError(f"{path}: {exc}") from None
    return from_table(spec, values, f"table:@{path}")


def parse_function(spec: FieldSpec, text: str) -> VecFunc:
    """Parse ``mono:<d>``, ``poly:<exp>:<hex>[,...]`` or ``table:@<path>``."""
    kind, _, body = text.partition(":")
    try:
        if kind == "mono":
            return from_monomial(spec, int(body))
        if kind == "poly":
            terms = []
            for item in body.split(","):
                e, c = item.split(":")
                terms.append((int(e), int(c, 16)))
            return from_polynomial(spec, terms)
    except ValueError as exc:
        if isinstance(exc, FunctionError):
            raise
        raise FunctionError(f"cannot parse function spec {text!r}") from None
    if kind == "table" and body.startswith("@"):
        return read_table_file(spec, body[1:])
    raise FunctionError(f"cannot parse function spec {text!r}")
