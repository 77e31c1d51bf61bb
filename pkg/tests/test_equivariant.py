import json
from fractions import Fraction

import pytest

from matroidkl.equivariant import (EquivariantKL, braid_coefficient_gf_check,
                                   braid_kernel_equivariant,
                                   braid_leading_coeff_check, dump_table,
                                   equivariant_positivity_check,
                                   necklace_exponent, rational_taylor,
                                   solve_braid_fe, solve_thagomizer_fe,
                                   solve_uniform_fe,
                                   strong_log_concavity_failures,
                                   uniform_equivariant_closed,
                                   uniform_equivariant_kl)
from matroidkl.kl import (kl_braid_type, kl_polynomial, kl_thagomizer_closed,
                          kl_uniform_type)
from matroidkl.matroid import complete_graph, uniform
from matroidkl.polynomial import Poly
from matroidkl.roots import check_contraction_interlacing
from matroidkl.series import TPoly
from matroidkl.symfunc import SymFunc, dimension


def s(*lam):
    return SymFunc.schur(lam)


# ------------------------------------------------------------ uniform closed form

def test_closed_form_examples():
    assert uniform_equivariant_closed(1, 3, 1) == s(2, 2)
    assert dimension(s(2, 2)) == TPoly.const(kl_uniform_type(1, 3).polynomial[1])
    assert uniform_equivariant_closed(2, 4, 1) == s(4, 2) + s(3, 3)
    assert dimension(uniform_equivariant_closed(2, 4, 1)) == TPoly.const(14)
    assert uniform_equivariant_closed(2, 4, 2) == SymFunc()
    assert uniform_equivariant_closed(3, 2, 0) == s(5)
    with pytest.raises(ValueError):
        uniform_equivariant_closed(1, 0, 0)


def test_representation_stability():
    for m in range(1, 4):
        for i in range(1, 3):
            for d in range(m + 2 * i, 9 - m):
                a = set(uniform_equivariant_closed(m, d, i).to_schur())
                b = set(uniform_equivariant_closed(m, d + 1, i).to_schur())
                assert b == {(lam[0] + 1,) + lam[1:] for lam in a}


@pytest.mark.parametrize("m", range(1, 4))
def test_uniform_interlacing_along_d(m):
    for d in range(2, 10 - m):
        assert check_contraction_interlacing(uniform(m, d), 0).status == "pass"


# ------------------------------------------------------------ solvers

def test_uniform_solver_examples():
    table = solve_uniform_fe(3, 4)
    assert table[(1, 3)] == Poly([1, 2])
    assert all(table[k] == kl_uniform_type(*k).polynomial for k in table)
    eq = solve_uniform_fe(5, 6, equivariant=True, max_total=6)
    assert eq[(2, 4)].coefficients[1] == s(4, 2) + s(3, 3)
    for key, ekl in eq.items():
        assert ekl == uniform_equivariant_kl(*key)
        assert ekl.graded_dimension() == kl_uniform_type(*key).polynomial
        assert equivariant_positivity_check(ekl)


def test_thagomizer_solver():
    table = solve_thagomizer_fe(10)
    assert table[3] == Poly([1, 4])
    assert all(table[n] == kl_thagomizer_closed(n) for n in table)
    eq = solve_thagomizer_fe(6, equivariant=True)
    for n, ekl in eq.items():
        assert ekl.graded_dimension() == kl_thagomizer_closed(n)
        assert equivariant_positivity_check(ekl)


def test_braid_solver():
    table = solve_braid_fe(12)
    assert table[4] == Poly([1, 1]) and table[5] == Poly([1, 5])
    assert all(table[n] == kl_braid_type(n).polynomial for n in table)
    for n in range(1, 7):
        assert table[n] == kl_polynomial(complete_graph(n), method="lattice").polynomial
    with pytest.raises(ValueError):
        solve_braid_fe(23)
    with pytest.raises(ValueError):
        solve_braid_fe(9, equivariant=True)


def test_braid_equivariant_small():
    eq = solve_braid_fe(5, equivariant=True)
    # linear term of B_4: coatoms (two orbits) minus atoms leaves the trivial character
    assert eq[4].coefficients == (s(4), s(4))
    for n, ekl in eq.items():
        assert ekl.graded_dimension() == kl_braid_type(n).polynomial
        assert equivariant_positivity_check(ekl)
        assert strong_log_concavity_failures(ekl) == []


def test_braid_kernel_low_degrees():
    K = braid_kernel_equivariant(3)
    assert K[(1,)] == s(1)
    assert K[(2,)] == s(2).scale(TPoly({0: -1, 1: 1}))
    assert necklace_exponent(1) == TPoly.t(1)
    assert necklace_exponent(2) == TPoly({1: Fraction(-1, 2), 2: Fraction(1, 2)})
    assert necklace_exponent(6) == TPoly({1: Fraction(1, 6), 2: Fraction(-1, 6), 3: Fraction(-1, 6), 6: Fraction(1, 6)})


def test_positivity_rejects_virtual():
    assert not equivariant_positivity_check(EquivariantKL(2, (s(2), s(2) - s(1, 1))))


def test_uniform_strong_log_concavity():
    assert strong_log_concavity_failures(uniform_equivariant_kl(1, 5)) == []
    for m in range(0, 4):
        for d in range(1, 8 - m):
            assert strong_log_concavity_failures(uniform_equivariant_kl(m, d)) == []


# ------------------------------------------------------------ braid coefficient checks

def test_leading_coefficients():
    rows = braid_leading_coeff_check(10)
    assert rows[0] == {"k": 2, "n": 4, "computed": 1, "conjectured": 1, "match": True}
    assert rows[1]["conjectured"] == 15
    assert all(r["match"] for r in rows)


def test_generating_functions():
    for i in (1, 2):
        rep = braid_coefficient_gf_check(i, 14)
        assert rep["match"] and rep["first_mismatch"] is None
    assert braid_coefficient_gf_check(1, 14)["computed"][:4] == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        braid_coefficient_gf_check(3)


def test_rational_taylor():
    # 1 / (1 - 2z) = sum 2^n z^n
    assert rational_taylor([1], [(2, 1)], 6) == [2 ** n for n in range(7)]


def test_serialization():
    text = dump_table(solve_thagomizer_fe(2, equivariant=True), "thagomizer")
    rows = json.loads(text)
    assert rows[0]["family"] == "thagomizer" and rows[0]["n"] == 0
    assert {"partition", "multiplicity"} <= set(rows[0]["schur"][0])
    assert text == dump_table(solve_thagomizer_fe(2, equivariant=True), "thagomizer")
