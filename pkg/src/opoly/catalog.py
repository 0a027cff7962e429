"""Classical hyperoval families as o-polynomials over the default field.

The exponent recipes come from the finite-geometry literature and are
treated as data: the test suite runs every instance through the checkers.
Fractional exponents (Payne) are resolved modulo 2^n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from opoly.field import FieldSpec
from opoly.func import VecFunc, from_polynomial, reduce_exponent


class CatalogError(ValueError):
    pass


def _frac(spec: FieldSpec, num: int, den: int) -> int:
    """Exponent num/den mod 2^n - 1, as a value in [1, 2^n - 1]."""
    m = spec.order - 1
    if gcd(den, m) != 1:
        raise CatalogError(f"1/{den} is not an exponent modulo {m}")
    return reduce_exponent(spec, num * pow(den, -1, m) % m or m)


def _segre(spec, _):
    return [6]


def _glynn1(spec, _):
    sigma = 2 ** ((spec.n + 1) // 2)
    return [3 * sigma + 4]


def _glynn2(spec, _):
    sigma = 2 ** ((spec.n + 1) // 2)
    gamma = 2 ** ((spec.n + 1) // 4)
    return [sigma + gamma]


def _payne(spec, _):
    return [_frac(spec, 1, 6), _frac(spec, 3, 6), _frac(spec, 5, 6)]


def _translation(spec, k):
    return [2**k]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    valid: Callable[[int, int | None], bool]
    exponents: Callable[[FieldSpec, int | None], list[int]]
    takes_param: bool = False


def _odd(n, _):
    return n % 2 == 1


FAMILIES = {
    "translation": FamilySpec(
        "translation",
        lambda n, k: k is not None and 1 <= k < n and gcd(k, n) == 1,
        _translation,
        takes_param=True,
    ),
    "segre": FamilySpec("segre", lambda n, _: n % 2 == 1 and n >= 3, _segre),
    "glynn1": FamilySpec("glynn1", lambda n, _: n % 2 == 1 and n >= 3, _glynn1),
    "glynn2": FamilySpec("glynn2", lambda n, _: n % 4 == 3, _glynn2),
    "payne": FamilySpec("payne", lambda n, _: n % 2 == 1 and n >= 3, _payne),
}


def family(name: str, n: int, param: int | None = None) -> VecFunc:
    """Build one instance, e.g. ``family("translation", 5, 2)`` is x^4."""
    try:
        fam = FAMILIES[name]
    except KeyError:
        raise CatalogError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    if not fam.takes_param:
        param = None
    if not fam.valid(n, param):
        what = f"{name}({param})" if fam.takes_param else name
        raise CatalogError(f"{what} is not defined for n = {n}")
    spec = FieldSpec.default(n)
    exps = [reduce_exponent(spec, e) for e in fam.exponents(spec, param)]
    F = from_polynomial(spec, [(e, 1) for e in exps])
    label = f"{name}({param})" if fam.takes_param else name
    return VecFunc(spec, F.table, label)


def list_families(n: int) -> list[tuple[str, int | None]]:
    out: list[tuple[str, int | None]] = []
    out += [("translation", k) for k in range(1, n) if FAMILIES["translation"].valid(n, k)]
    for name in ("segre", "glynn1", "glynn2", "payne"):
        if FAMILIES[name].valid(n, None):
            out.append((name, None))
    return out


def family_exponents(name: str, n: int, param: int | None = None) -> list[int]:
    spec = FieldSpec.default(n)
    return [reduce_exponent(spec, e) for e in FAMILIES[name].exponents(spec, param)]
