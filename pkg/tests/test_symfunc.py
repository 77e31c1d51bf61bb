from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from matroidkl.series import TPoly
from matroidkl.symfunc import (DegreeCapExceeded, SymFunc, basis_convert,
                               character, dimension, hook_length_dimension,
                               is_schur_positive, kronecker, multiply,
                               partitions, plethysm, strong_log_concave_check)


def s(*lam):
    return SymFunc.schur(lam)


def schur_table(f):
    return {lam: c.terms.get(0, 0) for lam, c in f.to_schur().items()}


def test_basis_examples():
    assert s(2) == SymFunc({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert s(1, 1) == SymFunc({(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    assert basis_convert({(2,): 1}, "power") == s(2)
    assert basis_convert(s(2), "schur") == {(2,): TPoly.const(1)}
    with pytest.raises(DegreeCapExceeded):
        SymFunc.schur((15,))


def test_character_table_orthogonality():
    for n in range(1, 8):
        parts = list(partitions(n))
        for lam in parts:
            assert sum(character(lam, mu) ** 2 * _class_size(mu) for mu in parts) == factorial(n)
            assert character(lam, (1,) * n) == hook_length_dimension(lam)


def _class_size(mu):
    from matroidkl.symfunc import z_lambda

    return Fraction(factorial(sum(mu)), z_lambda(mu))


def test_products():
    assert multiply(s(1), s(1)) == s(2) + s(1, 1)
    assert schur_table(s(3) * s(2)) == {(5,): 1, (4, 1): 1, (3, 2): 1}


def test_kronecker_examples():
    for lam in partitions(4):
        assert kronecker(s(4), s(*lam)) == s(*lam)
    assert kronecker(s(1, 1, 1), s(2, 1)) == s(2, 1)
    assert kronecker(s(1, 1, 1, 1), s(3, 1)) == s(2, 1, 1)
    with pytest.raises(ValueError):
        kronecker(s(2), s(3))


def test_dimension_examples():
    assert dimension(s(2, 2)) == TPoly.const(2)
    assert dimension(s(4, 2)) == TPoly.const(9)
    assert dimension(s(7)) == TPoly.const(1)


def test_schur_positivity_examples():
    assert is_schur_positive(s(2) + s(1, 1))
    assert not is_schur_positive(s(2) - s(1, 1))
    assert is_schur_positive(SymFunc())


def test_plethysm_examples():
    X = SymFunc.p((1,), TPoly({0: -2, 1: 1}))
    assert plethysm(SymFunc.p((2,)), X) == SymFunc.p((2,), TPoly({0: -2, 2: 1}))
    for n in range(1, 6):
        assert plethysm(s(n), s(1)) == s(n)


def test_exponential_specialization_of_plethysm_kernel():
    # keep only p_1^n terms and multiply by n!: e^{(t-2)u} has coefficients (t-2)^n / n!
    X = SymFunc.p((1,), TPoly({0: -2, 1: 1}))
    for n in range(0, 7):
        v = plethysm(SymFunc.h(n), X, max_degree=n) if n else SymFunc.one()
        coeff = v.terms.get((1,) * n, TPoly())
        assert coeff == TPoly({0: -2, 1: 1}) ** n * Fraction(1, factorial(n))


def test_strong_log_concave_examples():
    C = s(3, 1)
    assert strong_log_concave_check([C, C, C]) == []
    assert (0, 1, 1, 2) in strong_log_concave_check([s(4), SymFunc(), s(4)])


def test_json_round_trip():
    f = s(2, 1).scale(TPoly({0: 1, 2: 3})) + s(3)
    obj = f.to_json_obj()
    assert {tuple(e["partition"]) for e in obj} == {(2, 1), (3,)}
    assert SymFunc.from_json_obj(obj) == f


# ------------------------------------------------------------ properties

@st.composite
def schur_elements(draw, n):
    parts = list(partitions(n))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(parts), max_size=len(parts)))
    return SymFunc.from_schur({lam: c for lam, c in zip(parts, coeffs)})


@settings(max_examples=25, deadline=None)
@given(schur_elements(6))
def test_basis_round_trip(f):
    assert SymFunc.from_schur(f.to_schur()) == f
    assert all(c.terms.get(0, 0) == int(c.terms.get(0, 0)) for c in f.to_schur().values())


@settings(max_examples=20, deadline=None)
@given(schur_elements(3), schur_elements(2))
def test_product_properties(f, g):
    assert f * g == g * f
    table = (f * g).to_schur()
    assert all(isinstance(c.terms.get(0, 0), int) for c in table.values())
    assert dimension(f * g) == dimension(f) * dimension(g) * comb(5, 2)


@settings(max_examples=20, deadline=None)
@given(schur_elements(4), schur_elements(4))
def test_kronecker_dimension(f, g):
    assert dimension(kronecker(f, g)) == dimension(f) * dimension(g)
    assert all(isinstance(c.terms.get(0, 0), int) for c in kronecker(f, g).to_schur().values())


@pytest.mark.parametrize("n,c", [(2, 2), (3, 2), (3, 4), (4, 3)])
def test_plethysm_constant_alphabet(n, c):
    f = plethysm(s(n), SymFunc.p((1,), c))
    # every p_k -> 1 evaluates on the alphabet 1^c
    assert sum(v(1) for v in f.terms.values()) == comb(n + c - 1, n)
    # as an S_n representation it is the c^n-dimensional permutation module
    assert dimension(f) == TPoly.const(c ** n)
