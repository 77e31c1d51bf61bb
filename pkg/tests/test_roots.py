from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from matroidkl.matroid import complete_graph, uniform
from matroidkl.polynomial import Poly
from matroidkl.roots import (INF, DegenerateInterlacing, InterlacingReport,
                             all_roots_negative_real, check_contraction_interlacing,
                             count_real_roots, interlaces, interlacing_verdict,
                             is_log_concave_no_internal_zeros, is_real_rooted,
                             isolate_roots, refine_roots, squarefree_factors,
                             sturm_chain)

t = sympy.Symbol("t")


def P(*c):
    return Poly(list(c))


def sympy_real_root_count(p: Poly, a=None, b=None):
    expr = sum(c * t ** i for i, c in enumerate(p.coeffs))
    roots = sympy.Poly(expr, t).real_roots()
    distinct = set(roots)
    return sum(1 for r in distinct if (a is None or r > a) and (b is None or r <= b))


def test_log_concave_examples():
    assert is_log_concave_no_internal_zeros(P(1, 4))
    assert not is_log_concave_no_internal_zeros(P(1, 1, 3))
    assert not is_log_concave_no_internal_zeros(P(1, 0, 1))
    assert is_log_concave_no_internal_zeros(P(0, 0, 1, 2, 1))


def test_count_examples():
    assert count_real_roots(P(-2, 0, 1), -INF, 0) == 1
    assert count_real_roots(P(1, 0, 1)) == 0
    assert count_real_roots(Poly.from_roots([-1, -1, -2])) == 2
    with pytest.raises(ValueError):
        count_real_roots(Poly())


def test_negative_real_examples():
    assert all_roots_negative_real(P(1, 2))
    assert all_roots_negative_real(P(1, 14, 21))
    assert not all_roots_negative_real(P(1, 1, 1))
    assert all_roots_negative_real(P(5))
    assert not all_roots_negative_real(P(0, 1))


def test_isolation_examples():
    iso = isolate_roots(P(-2, 0, 1))
    assert len(iso) == 2
    (a, b), (c, d) = iso.intervals
    assert a < 0 and a * a > 2 and (b >= 0 or b * b <= 2)
    assert d * d >= 2 and (c < 0 or c * c < 2)
    assert b <= c
    iso = isolate_roots(Poly.from_roots([-1, -2, -3]))
    assert [lo < r <= hi for (lo, hi), r in zip(iso.intervals, (-3, -2, -1))] == [True] * 3
    assert len(isolate_roots(P(7))) == 0


def test_refinement_brackets_sqrt2():
    iso = refine_roots(P(-2, 0, 1), Fraction(1, 10 ** 6))
    lo, hi = iso.intervals[1]
    assert hi - lo <= Fraction(1, 10 ** 6)
    assert lo ** 2 < 2 <= hi ** 2 or lo ** 2 <= 2 < hi ** 2


def test_multiplicities():
    iso = isolate_roots(Poly.from_roots([-1, -1, -2, 3, 3, 3]))
    assert sorted(iso.multiplicities) == [1, 2, 3]
    assert squarefree_factors(Poly.from_roots([1, 1, 2]))[0][1] == 1


def test_interlacing_examples():
    assert interlaces(Poly.from_roots([-1, -3]), Poly.from_roots([-2]))
    assert not interlaces(Poly.from_roots([-1, -2]), Poly.from_roots([-3]))
    with pytest.raises(DegenerateInterlacing):
        interlaces(Poly.from_roots([-1, -1]), Poly.from_roots([-2]))
    with pytest.raises(DegenerateInterlacing):
        interlaces(Poly.from_roots([-1, -3]), Poly.from_roots([-1]))
    with pytest.raises(ValueError):
        interlaces(P(1, 1), P(1, 1))


def test_interlacing_scale_invariance():
    f, g = Poly.from_roots([-1, -4, -9]), Poly.from_roots([-2, -5])
    assert interlaces(f, g) and interlaces(f * 7, g * Fraction(1, 3))


def test_sturm_distinct_linear_factors():
    for k in range(1, 7):
        roots = [Fraction(j * j - 3, j + 1) for j in range(k)]
        assert count_real_roots(Poly.from_roots(roots)) == k


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7))
def test_counts_match_sympy(coeffs):
    p = Poly(coeffs)
    assume(p.degree >= 1)
    assert count_real_roots(p) == sympy_real_root_count(p)
    assert count_real_roots(p, -1, 2) == sympy_real_root_count(p, -1, 2)
    assert is_real_rooted(p) == (len(sympy.Poly(sum(c * t ** i for i, c in enumerate(coeffs)), t).real_roots())
                                 == p.degree)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=6))
def test_negative_roots_imply_positive_coefficients(roots):
    p = Poly.from_roots([-r for r in roots])
    assert all_roots_negative_real(p)
    assert all(c > 0 for c in p.coeffs)


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(-40, 40), min_size=3, max_size=9))
def test_interlacing_matches_sorted_roots(rs):
    rs = sorted(rs)
    f_roots, g_roots = rs[0::2], rs[1::2]
    if len(f_roots) != len(g_roots) + 1:
        f_roots, g_roots = rs[1:][0::2], rs[1:][1::2]
        assume(len(f_roots) == len(g_roots) + 1)
    assert interlaces(Poly.from_roots(f_roots), Poly.from_roots(g_roots))
    top = max(rs)
    assert not interlaces(Poly.from_roots(g_roots + [top + 1, top + 2]), Poly.from_roots(f_roots))


def test_sturm_chain_ends_in_gcd():
    f = Poly.from_roots([1, 1, 2])
    chain = sturm_chain(f)
    assert chain[-1].degree == 1


# ------------------------------------------------------------ contraction interlacing

def test_contraction_examples():
    rep = check_contraction_interlacing(uniform(1, 7), 0)
    assert isinstance(rep, InterlacingReport)
    assert rep.passed and rep.p_form and rep.q_form
    assert rep.parent == P(1, 20, 56, 14) and rep.child == P(1, 14, 21)
    rep = check_contraction_interlacing(complete_graph(5), 0)
    assert rep.passed and rep.child == P(1, 1)
    assert check_contraction_interlacing(uniform(1, 1), 0).status == "hypothesis not met"


def test_degenerate_parent_is_flagged():
    assert interlacing_verdict(P(1), 5, P(1, 3), 100).status == "hypothesis not met"


def test_fail_verdict():
    # roots -2, -1 for the parent and -3 for the child do not alternate
    parent = Poly.from_roots([-1, -2])
    child = Poly.from_roots([-3])
    rep = interlacing_verdict(parent, 5, child)
    assert rep.status == "fail" and rep.p_form is False and rep.q_form is False
