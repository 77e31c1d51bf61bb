"""Braid KL polynomials up to n = 20 from the exponential generating-function solve,
then the leading coefficients and the t^1, t^2 coefficient series.

Run: python3 demos/braid_coefficients.py
"""

from math import prod

from matroidkl.equivariant import braid_coefficient_gf_check, solve_braid_fe
from matroidkl.kl import kl_braid_type


def main():
    table = solve_braid_fe(20)
    for n in (10, 15, 20):
        same = table[n] == kl_braid_type(n).polynomial
        print(f"B_{n}: degree {table[n].degree}, matches type recursion: {same}")

    print("\nleading coefficient of P_{B_2k} against (2k-3)!! (2k-1)^(k-2)")
    for k in range(2, 11):
        top = table[2 * k][k - 1]
        guess = prod(range(2 * k - 3, 0, -2)) * (2 * k - 1) ** (k - 2)
        print(f"  k={k:2d}: {top}  {'ok' if top == guess else 'MISMATCH ' + str(guess)}")

    for i in (1, 2):
        rep = braid_coefficient_gf_check(i, 14)
        print(f"\ncoefficient of t^{i}, n = 0..14: {rep['computed']}")
        print(f"  rational generating function agrees: {rep['match']}")


if __name__ == "__main__":
    main()
