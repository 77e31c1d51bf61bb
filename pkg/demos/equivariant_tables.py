"""Schur expansions of equivariant KL coefficients for uniform, thagomizer and braid matroids.

Run: python3 demos/equivariant_tables.py
"""

from matroidkl.equivariant import (solve_braid_fe, solve_thagomizer_fe,
                                   strong_log_concavity_failures,
                                   uniform_equivariant_kl)


def show(label, ekl):
    print(label)
    for i, c in enumerate(ekl.coefficients):
        parts = []
        for lam, mult in sorted(c.to_schur().items(), reverse=True):
            k = mult(1)
            parts.append(f"{'' if k == 1 else k}s{list(lam)}")
        print(f"  t^{i}: {' + '.join(parts)}")
    print(f"  graded dimension {ekl.graded_dimension()}, strong LC failures: {strong_log_concavity_failures(ekl)}")


def main():
    show("U_{2,4}", uniform_equivariant_kl(2, 4))
    show("U_{1,6}", uniform_equivariant_kl(1, 6))
    show("T_5", solve_thagomizer_fe(5, equivariant=True)[5])
    show("B_6", solve_braid_fe(6, equivariant=True)[6])


if __name__ == "__main__":
    main()
