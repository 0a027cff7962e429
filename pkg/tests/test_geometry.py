import itertools

import pytest

from opoly.checker import check_direct
from opoly.field import FieldSpec, inv, mul
from opoly.func import from_monomial, from_table
from opoly.geometry import (
    ProjPoint,
    collinear,
    hyperoval_points,
    is_hyperoval,
    write_points_csv,
)
from opoly.spectrum import ResourceError
from tests.conftest import random_functions


def P(x, y, z):
    return ProjPoint(x, y, z)


def test_collinear_examples(gf8):
    assert not collinear(gf8, P(1, 0, 0), P(0, 1, 0), P(0, 0, 1))
    assert collinear(gf8, P(1, 0, 0), P(0, 1, 0), P(1, 1, 0))
    for t in range(2, 8):
        assert collinear(gf8, P(1, 0, 0), P(1, 1, 1), P(1, t, t))
    with pytest.raises(ValueError):
        collinear(gf8, P(1, 0, 0), P(1, 0, 0), P(0, 0, 1))


def test_normalization(gf8):
    for s in range(1, 8):
        p = ProjPoint.normalized(gf8, mul(gf8, s, 0), mul(gf8, s, 3), mul(gf8, s, 5))
        assert p == P(0, 1, mul(gf8, 5, inv(gf8, 3)))
    with pytest.raises(ValueError):
        ProjPoint.normalized(gf8, 0, 0, 0)


def test_collinear_invariant_under_scaling_and_order(gf16):
    pts = [P(1, 2, 3), P(0, 1, 7), P(1, 9, 4), P(1, 5, 5), P(0, 0, 1)]
    for trio in itertools.combinations(pts, 3):
        base = collinear(gf16, *trio)
        for perm in itertools.permutations(trio):
            assert collinear(gf16, *perm) == base
        for s in range(1, 16):
            a, b, c = trio
            scaled = ProjPoint(mul(gf16, s, a.x), mul(gf16, s, a.y), mul(gf16, s, a.z))
            if scaled in (b, c):
                continue
            assert collinear(gf16, scaled, b, c) == base


def test_hyperoval_points(gf4, gf8):
    pts = hyperoval_points(from_monomial(gf8, 5))
    assert P(0, 1, 0) in pts and P(0, 0, 1) in pts
    assert len(hyperoval_points(from_monomial(gf8, 2))) == 10
    zero = hyperoval_points(from_table(gf4, [0] * 4))
    assert len(zero) == 6
    assert not is_hyperoval(gf4, zero)


def test_is_hyperoval_examples(gf8):
    assert is_hyperoval(gf8, hyperoval_points(from_monomial(gf8, 2)))
    assert not is_hyperoval(gf8, hyperoval_points(from_monomial(gf8, 1)))
    assert not is_hyperoval(gf8, [P(1, 0, 0), P(0, 1, 0)])


def test_is_hyperoval_cap():
    with pytest.raises(ResourceError):
        is_hyperoval(FieldSpec.default(6), [])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_geometry_agrees_with_direct(n):
    spec = FieldSpec.default(n)
    funcs = [from_monomial(spec, d) for d in range(spec.order)]
    funcs += random_functions(n, 20, seed=n)
    for F in funcs:
        assert is_hyperoval(spec, hyperoval_points(F)) == check_direct(F)


def test_points_csv(gf4, tmp_path):
    import io

    buf = io.StringIO()
    write_points_csv(hyperoval_points(from_monomial(gf4, 2)), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "x,y,z" and len(lines) == 7
    assert "0x0,0x0,0x1" in lines and "0x1,0x2,0x3" in lines
