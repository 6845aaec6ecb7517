import pytest

from sparseproj.groebner import (
    NotZeroDimensional,
    buchberger,
    normal_form,
    quotient_basis,
)
from sparseproj.mpoly import SparsePoly
from sparseproj.rat import rat


def P(nvars, terms):
    return SparsePoly(nvars, terms)


def test_buchberger_twisted_cubic_style():
    # x^2 - y, x^3 - z under grevlex
    f = P(3, {(2, 0, 0): -1, (0, 1, 0): 1})
    g = P(3, {(3, 0, 0): -1, (0, 0, 1): 1})
    basis = buchberger([f, g])
    # grevlex reduced basis: x^2-y, xy-z, y^2-xz (cross-checked independently)
    rendered = sorted(p.format() for p in basis)
    assert rendered == ["-X1*X3+X2^2", "X1*X2-X3", "X1^2-X2"]


def test_normal_form_is_canonical():
    f = P(2, {(2, 0): 1, (0, 1): -1})      # x^2 - y
    basis = buchberger([f])
    p = P(2, {(4, 0): 1})                  # x^4
    assert normal_form(p, basis) == P(2, {(0, 2): 1})
    # reduced to zero inside the ideal
    assert normal_form(f * f, basis).is_zero()


def test_quotient_basis_square():
    fs = [P(2, {(2, 0): 1, (0, 0): -1}), P(2, {(0, 2): 1, (0, 0): -2})]
    basis = buchberger(fs)
    std = quotient_basis(basis, 2)
    assert sorted(std) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_quotient_basis_positive_dimensional():
    basis = buchberger([P(2, {(1, 1): 1, (0, 0): -1})])
    with pytest.raises(NotZeroDimensional):
        quotient_basis(basis, 2)


def test_quotient_basis_unit_ideal():
    basis = buchberger([P(1, {(1,): 1}), P(1, {(1,): 1, (0,): 1})])
    assert quotient_basis(basis, 1) == []


def test_buchberger_membership_property(rng):
    from conftest import random_poly

    for _ in range(5):
        gens = [random_poly(rng, 2, max_terms=3, max_exp=2, bound=5)
                for _ in range(2)]
        basis = buchberger(gens)
        for g in gens:
            assert normal_form(g, basis).is_zero()
        # random combinations stay in the ideal
        h = gens[0] * random_poly(rng, 2, max_terms=2, max_exp=2, bound=5) \
            + gens[1] * random_poly(rng, 2, max_terms=2, max_exp=1, bound=5)
        assert normal_form(h, basis).is_zero()
