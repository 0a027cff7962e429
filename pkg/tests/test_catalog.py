import pytest

from opoly.catalog import CatalogError, family, family_exponents, list_families
from opoly.checker import check_direct, check_remark, check_slopes, check_walsh
from opoly.field import FieldSpec
from opoly.func import from_monomial
from opoly.geometry import hyperoval_points, is_hyperoval


def test_translation_matches_monomial():
    assert family("translation", 4, 1) == from_monomial(FieldSpec.default(4), 2)


def test_segre():
    F = family("segre", 5)
    assert F == from_monomial(FieldSpec.default(5), 6)
    assert check_direct(F)
    with pytest.raises(CatalogError):
        family("segre", 4)


def test_errors():
    with pytest.raises(CatalogError):
        family("translation", 4, 2)
    with pytest.raises(CatalogError):
        family("glynn2", 5)
    with pytest.raises(CatalogError):
        family("cherowitzo", 5)


def test_list_families():
    assert list_families(4) == [("translation", 1), ("translation", 3)]
    assert list_families(2) == [("translation", 1)]
    names = list_families(5)
    assert [("translation", k) for k in (1, 2, 3, 4)] == names[:4]
    assert {"segre", "glynn1", "payne"} <= {name for name, _ in names}
    assert "glynn2" not in {name for name, _ in names}
    assert ("glynn2", None) in list_families(7)


@pytest.mark.parametrize("n", range(2, 10))
def test_translation_symmetry(n):
    for k in range(1, n):
        valid = ("translation", k) in list_families(n)
        assert valid == (("translation", n - k) in list_families(n))


@pytest.mark.parametrize("n", range(2, 10))
def test_every_instance_is_an_o_polynomial(n):
    for name, k in list_families(n):
        F = family(name, n, k)
        assert check_direct(F), (name, k, family_exponents(name, n, k))
        assert check_walsh(F)
        if n <= 6:
            assert check_slopes(F) and check_remark(F)
        if n <= 5:
            assert is_hyperoval(F.spec, hyperoval_points(F))
