"""Points of PG(2, 2^n) and a brute-force arc test.

This is the slow, obviously-correct cross-check for the algebraic tests in
``checker``: build {(1, t, G(t))} plus (0, 1, 0) and (0, 0, 1) and look at
every triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from opoly.field import FieldSpec, inv, mul
from opoly.func import VecFunc
from opoly.spectrum import ResourceError

ARC_TEST_MAX_N = 5


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point with its first nonzero coordinate scaled to 1."""

    x: int
    y: int
    z: int

    @classmethod
    def normalized(cls, spec: FieldSpec, x: int, y: int, z: int) -> ProjPoint:
        lead = next((c for c in (x, y, z) if c), 0)
        if lead == 0:
            raise ValueError("(0, 0, 0) is not a projective point")
        s = inv(spec, lead)
        return cls(mul(spec, s, x), mul(spec, s, y), mul(spec, s, z))


def det3(spec: FieldSpec, p: ProjPoint, q: ProjPoint, r: ProjPoint) -> int:
    # characteristic 2: the signs in the cofactor expansion vanish
    m = lambda a, b: mul(spec, a, b)  # noqa: E731
    return (
        m(p.x, m(q.y, r.z) ^ m(q.z, r.y))
        ^ m(p.y, m(q.x, r.z) ^ m(q.z, r.x))
        ^ m(p.z, m(q.x, r.y) ^ m(q.y, r.x))
    )


def collinear(spec: FieldSpec, p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    if len({p, q, r}) != 3:
        raise ValueError("collinear() needs three distinct points")
    return det3(spec, p, q, r) == 0


def hyperoval_points(G: VecFunc) -> set[ProjPoint]:
    spec = G.spec
    pts = {ProjPoint(1, t, G(t)) for t in range(spec.order)}
    pts.add(ProjPoint(0, 1, 0))
    pts.add(ProjPoint(0, 0, 1))
    return pts


def is_hyperoval(spec: FieldSpec, points: Iterable[ProjPoint]) -> bool:
    """True iff there are 2^n + 2 points and no three on a line."""
    if spec.n > ARC_TEST_MAX_N:
        raise ResourceError(
            f"arc test capped at n <= {ARC_TEST_MAX_N}; use the algebraic checks"
        )
    pts = sorted(set(points))
    if len(pts) != spec.order + 2:
        return False
    return not any(collinear(spec, *trio) for trio in combinations(pts, 3))


def write_points_csv(points: Iterable[ProjPoint], stream) -> None:
    stream.write("x,y,z\n")
    for p in sorted(points):
        stream.write(f"{p.x:#x},{p.y:#x},{p.z:#x}\n")
