"""Compute KL polynomials for small matroid families three different ways.

Run: python3 demos/small_families.py
"""

from matroidkl import kl_polynomial
from matroidkl.kl import kl_thagomizer_closed, kl_uniform_1d_closed, kl_uniform_type
from matroidkl.matroid import complete_bipartite, complete_graph, thagomizer, uniform


def main():
    print("U_{1,d}: lattice recursion, grouped uniform recursion, closed form")
    for d in range(1, 9):
        lat = kl_polynomial(uniform(1, d), method="lattice").polynomial
        print(f"  d={d}: {lat}   agree={lat == kl_uniform_type(1, d).polynomial == kl_uniform_1d_closed(d)}")

    print("\nThagomizer T_n and K_{2,n}; P(1) for T_n is a Catalan number")
    for n in range(2, 7):
        T = kl_polynomial(thagomizer(n), method="lattice").polynomial
        K = kl_polynomial(complete_bipartite(n), method="lattice").polynomial
        print(f"  n={n}: T={T}  K={K}  T(1)={T(1)}  closed form ok={T == kl_thagomizer_closed(n)}")

    print("\nBraid matroids K_n")
    for n in range(2, 9):
        print(f"  n={n}: {kl_polynomial(complete_graph(n)).polynomial}")


if __name__ == "__main__":
    main()
