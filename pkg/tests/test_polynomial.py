from fractions import Fraction

from hypothesis import given, strategies as st

from matroidkl.polynomial import Poly, gcd

coeffs = st.lists(st.integers(-20, 20), max_size=6)


def test_normalizes_and_degrees():
    assert Poly([1, 2, 0, 0]).to_list() == [1, 2]
    assert Poly().degree == -1
    assert Poly([Fraction(4, 2)]).to_list() == [2]
    assert isinstance(Poly([Fraction(4, 2)])[0], int)


def test_reflect_and_shift():
    p = Poly([1, 2])
    assert p.reflect(3) == Poly([0, 0, 2, 1])
    assert p.shift(2) == Poly([0, 0, 1, 2])


def test_divmod_and_gcd():
    a = Poly.from_roots([1, 2, 3])
    b = Poly.from_roots([2, 5])
    q, r = a.divmod(b)
    assert q * b + r == a
    assert gcd(a, b) == Poly([-2, 1])


def test_str():
    assert str(Poly([1, -3, 1])) == "1 - 3*t + t^2"


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    A, B, C = Poly(a), Poly(b), Poly(c)
    assert (A + B) + C == A + (B + C)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A * B == B * A


@given(coeffs, coeffs.filter(lambda c: any(c)))
def test_division_identity(a, b):
    A, B = Poly(a), Poly(b)
    q, r = A.divmod(B)
    assert q * B + r == A
    assert r.degree < B.degree
