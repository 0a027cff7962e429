import io

import numpy as np
import pytest
from hypothesis import given, strategies as st

from opoly.field import FieldSpec, mul, trace
from opoly.func import from_monomial, from_table, is_permutation
from opoly.spectrum import (
    ResourceError,
    component_sign_table,
    diagonal_row,
    full_spectrum,
    fwht,
    walsh_at,
    walsh_row,
    write_csv,
)
from tests.conftest import random_functions


def hadamard_oracle(vec):
    size = len(vec)
    return [
        sum(vec[x] * (-1) ** bin(w & x).count("1") for x in range(size))
        for w in range(size)
    ]


def test_fwht_examples():
    assert fwht([1, 1, 1, 1]).tolist() == [4, 0, 0, 0]
    assert fwht([1, -1, 1, -1]).tolist() == [0, 4, 0, 0]
    assert fwht(fwht([3, -7])).tolist() == [6, -14]
    with pytest.raises(ValueError):
        fwht([1, 2, 3])


@given(st.integers(0, 6).flatmap(
    lambda k: st.lists(st.integers(-50, 50), min_size=2**k, max_size=2**k)))
def test_fwht_matches_definition_and_involution(vec):
    assert fwht(vec).tolist() == hadamard_oracle(vec)
    assert fwht(fwht(vec)).tolist() == [len(vec) * x for x in vec]


def test_fwht_batched_rows():
    m = np.arange(32).reshape(4, 8) - 10
    assert fwht(m).tolist() == [hadamard_oracle(r) for r in m.tolist()]


def test_component_sign_table(gf8):
    F = from_monomial(gf8, 5)
    assert component_sign_table(F, 0).tolist() == [1] * 8
    ident = component_sign_table(from_monomial(gf8, 1), 1).tolist()
    trace_zero = [x for x in range(8) if trace(gf8, x) == 0]
    assert [x for x in range(8) if ident[x] == 1] == trace_zero
    assert len(trace_zero) == 4
    assert component_sign_table(from_table(gf8, [0] * 8), 3).tolist() == [1] * 8


def test_walsh_at_examples(gf8):
    F = from_monomial(gf8, 3)
    assert walsh_at(F, 0, 0) == 8
    ident = from_monomial(gf8, 1)
    square = from_monomial(gf8, 2)
    for u in range(8):
        for v in range(8):
            assert walsh_at(ident, u, v) == (8 if u == v else 0)
            assert walsh_at(square, u, v) == (8 if mul(gf8, u, u) == v else 0)


def test_walsh_row_examples(gf8):
    F = from_monomial(gf8, 3)
    assert walsh_row(F, 0).tolist() == [8] + [0] * 7
    ident = from_monomial(gf8, 1)
    for v in range(8):
        row = walsh_row(ident, v).tolist()
        assert row == [8 if u == v else 0 for u in range(8)]
        assert sum(w * w for w in walsh_row(F, v).tolist()) == 64


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fast_rows_match_definition(n):
    for F in random_functions(n, 10, seed=n):
        S = full_spectrum(F)
        for v in range(F.spec.order):
            naive = [walsh_at(F, u, v) for u in range(F.spec.order)]
            assert walsh_row(F, v).tolist() == naive
            assert S.row(v).tolist() == naive


@pytest.mark.parametrize("modulus", [0x13, 0x19])
def test_diagonal_row_matches_definition(modulus):
    spec = FieldSpec(4, modulus)
    for F in [from_monomial(spec, 7)] + [
        from_table(spec, np.random.default_rng(i).integers(0, 16, 16)) for i in range(3)
    ]:
        S = full_spectrum(F)
        for b in range(16):
            want = [walsh_at(F, mul(spec, b, v), v) for v in range(16)]
            assert diagonal_row(F, b).tolist() == want
            assert S.diagonal(b).tolist() == want


def test_full_spectrum_examples(gf4, gf8):
    S = full_spectrum(from_monomial(gf4, 1))
    assert S.entries.tolist() == (4 * np.eye(4, dtype=int)).tolist()
    S = full_spectrum(from_monomial(gf8, 2))
    for v in range(8):
        col = S.row(v).tolist()
        nonzero = [u for u in range(8) if col[u]]
        assert len(nonzero) == 1 and col[nonzero[0]] == 8
        assert mul(gf8, nonzero[0], nonzero[0]) == v


def test_full_spectrum_cap():
    F = from_monomial(FieldSpec.default(11), 3)
    with pytest.raises(ResourceError):
        full_spectrum(F)
    with pytest.raises(ResourceError):
        full_spectrum(from_monomial(FieldSpec.default(4), 3), max_n=3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_spectrum_structure(n):
    spec = FieldSpec.default(n)
    funcs = random_functions(n, 5, seed=100 + n)
    funcs += [from_monomial(spec, d) for d in range(spec.order)]
    for F in funcs:
        W = full_spectrum(F).entries
        assert W[0, 0] == spec.order
        assert W[:, 0].tolist() == [spec.order] + [0] * (spec.order - 1)
        assert ((W * W).sum(axis=0) == spec.order**2).all()
        assert (W % 2 == 0).all()
        assert is_permutation(F) == bool((W[0, 1:] == 0).all())


def test_csv_sparse_and_dense(gf4):
    buf = io.StringIO()
    write_csv(from_monomial(gf4, 1), buf)
    assert buf.getvalue().splitlines() == ["u,v,W", "0,0,4", "1,1,4", "2,2,4", "3,3,4"]
    buf = io.StringIO()
    write_csv(from_monomial(gf4, 1), buf, dense=True)
    assert len(buf.getvalue().splitlines()) == 17
