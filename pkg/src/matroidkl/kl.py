"""Kazhdan-Lusztig polynomials of matroids.

The defining recursion is ``t^r P_M(1/t) = sum_F chi_{M_F}(t) P_{M^F}(t)``
over all flats F, with ``deg P_M < r/2``.  Moving the F = bottom term to the
left leaves ``t^r P_M(1/t) - P_M(t) = R(t)``, which :func:`degree_split`
solves by reading off the top half of R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .lattice import (FlatLattice, braid_characteristic, lattice_of_flats,
                      uniform_characteristic)
from .matroid import Matroid, Minor, MatroidError, simplify
from .polynomial import Poly
from .symfunc import partitions

METHODS = ("lattice", "uniform_type", "braid_type", "closed_form", "functional_equation")


class DegreeSplitError(ValueError):
    pass


@dataclass(frozen=True)
class KLResult:
    polynomial: Poly
    matroid_rank: int
    method: str
    notes: tuple = field(default=())

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def coefficients(self) -> list[int]:
        return self.polynomial.to_list()


@dataclass(frozen=True)
class DegreeSplitInput:
    rank: int
    rhs: Poly


def degree_split(rank, rhs: Poly | None = None, expected_constant=None) -> Poly:
    """Unique P with deg P < rank/2 and t^rank P(1/t) - P(t) = rhs.

    The coefficient of t^i in P is the coefficient of t^(rank-i) in rhs.
    """
    if isinstance(rank, DegreeSplitInput):
        rank, rhs = rank.rank, rank.rhs
    if rank <= 0:
        raise DegreeSplitError("degree_split needs positive rank")
    if rhs.degree > rank:
        raise DegreeSplitError(f"rhs degree {rhs.degree} exceeds rank {rank}")
    for i in range(rank + 1):
        if rhs[i] != -rhs[rank - i]:
            raise DegreeSplitError(
                f"rhs is not antisymmetric: coeff t^{i} = {rhs[i]}, coeff t^{rank - i} = {rhs[rank - i]}")
    p = Poly([rhs[rank - i] for i in range((rank + 1) // 2)])
    if expected_constant is not None and p[0] != expected_constant:
        raise DegreeSplitError(f"constant term {p[0]} != expected {expected_constant}")
    return p


# ------------------------------------------------------------ lattice recursion

def kl_lattice(L: FlatLattice) -> dict[int, Poly]:
    """KL polynomial of every upper interval [F, top] of L, keyed by flat index.

    For each F the recursion's right side sum_{G >= F} chi_[F,G](t) P_G(t)
    is summed as sum_{H >= F} mu(F,H) Z_H(t), where
    Z_H(t) = sum_{G >= H} t^(rk G - rk H) P_G(t); this is the same finite
    double sum with the order of summation exchanged.
    """
    top = L.top
    r_top = L.rank
    ranks = L.ranks
    P: dict[int, Poly] = {top: Poly([1])}
    Z: dict[int, list] = {top: [1]}
    for level in range(r_top - 1, -1, -1):
        for f in L.levels[level]:
            r = r_top - ranks[f]
            mu = L.mobius_from(f)
            w = [0] * (r + 1)
            rhs = [0] * (r + 1)
            for h, m in mu.items():
                if h == f:
                    continue
                zh = Z[h]
                if m:
                    for k, c in enumerate(zh):
                        rhs[k] += m * c
                # W_F = sum_{G > F} t^(rk G - rk F) P_G
                off = ranks[h] - ranks[f]
                for k, c in enumerate(P[h].coeffs):
                    w[k + off] += c
            for k in range(r + 1):
                rhs[k] += w[k]
            p = degree_split(r, Poly(rhs), expected_constant=1)
            P[f] = p
            z = list(w)
            for k, c in enumerate(p.coeffs):
                z[k] += c
            Z[f] = z
    return P


def kl_lattice_literal(L: FlatLattice) -> dict[int, Poly]:
    """Same table as :func:`kl_lattice`, but forming each interval's characteristic
    polynomial explicitly.  Quadratic in interval sizes; used as a cross-check."""
    ranks = L.ranks
    P: dict[int, Poly] = {L.top: Poly([1])}
    for level in range(L.rank - 1, -1, -1):
        for f in L.levels[level]:
            r = L.rank - ranks[f]
            rhs = Poly()
            for g in L.up_set(f)[1:]:
                rhs = rhs + L.interval_characteristic(f, g) * P[g]
            P[f] = degree_split(r, rhs)
    return P


def kl_polynomial(M: Matroid, method: str | None = None, **lattice_kw) -> KLResult:
    """KL polynomial of M.

    Dispatch order: closed form, then type-specialized recursion, then the
    generic lattice recursion.  ``method="lattice"`` forces the lattice path.
    """
    notes = []
    fam = M.family
    if method is None and fam is not None:
        kind = fam[0]
        if kind == "uniform":
            m, d = fam[1], fam[2]
            if m == 1 and d >= 1:
                return KLResult(kl_uniform_1d_closed(d), d, "closed_form")
            return kl_uniform_type(m, d)
        if kind == "braid":
            return kl_braid_type(fam[1])
        if kind == "thagomizer":
            return KLResult(kl_thagomizer_closed(fam[1]), fam[1] + 1, "closed_form")
        if kind == "k2n" and fam[1] >= 2:
            return KLResult(kl_k2n(fam[1]), fam[1] + 1, "closed_form")
    if method not in (None, "lattice"):
        raise ValueError(f"method {method!r} not available for {M!r}")
    S = simplify(M)
    if S is not M:
        notes.append("simplified: loops removed, parallel classes merged")
    if isinstance(M, Minor) and M.interval and M.parent._lattice is not None:
        L = lattice_of_flats(M)
    else:
        L = lattice_of_flats(S, **lattice_kw)
    p = kl_lattice(L)[L.bottom]
    return KLResult(p, L.rank, "lattice", tuple(notes))


# ------------------------------------------------------------ family recursions

@lru_cache(maxsize=None)
def _uniform_kl(m: int, d: int) -> Poly:
    if d == 0:
        return Poly([1])
    n = m + d
    rhs = uniform_characteristic(m, d)
    tm1 = Poly([-1, 1])
    for k in range(1, d):
        rhs = rhs + comb(n, k) * tm1 ** k * _uniform_kl(m, d - k)
    return degree_split(d, rhs, expected_constant=1)


def kl_uniform_type(m: int, d: int) -> KLResult:
    """U_{m,d} with flats grouped by size: localizations are Boolean, restrictions are U_{m,d-k}."""
    if m < 0 or d < 0:
        raise MatroidError("uniform parameters must be non-negative")
    return KLResult(_uniform_kl(m, d), d, "uniform_type")


def set_partitions_of_type(lam) -> int:
    """Number of set partitions of {1..n} whose block sizes form lam."""
    from collections import Counter

    n = sum(lam)
    den = 1
    for part in lam:
        den *= factorial(part)
    for mult in Counter(lam).values():
        den *= factorial(mult)
    return factorial(n) // den


@lru_cache(maxsize=None)
def _braid_kl(n: int) -> Poly:
    if n <= 2:
        return Poly([1])
    rhs = Poly()
    chis = {k: braid_characteristic(k) for k in range(1, n + 1)}
    for lam in partitions(n):
        if len(lam) == n:
            continue
        prod = Poly([set_partitions_of_type(lam)])
        for part in lam:
            if part > 1:
                prod = prod * chis[part]
        rhs = rhs + prod * _braid_kl(len(lam))
    return degree_split(n - 1, rhs, expected_constant=1)


def kl_braid_type(n: int) -> KLResult:
    """B_n by recursion over set-partition types of the flats of the partition lattice."""
    if not 1 <= n <= 25:
        raise MatroidError("braid type recursion supports 1 <= n <= 25")
    return KLResult(_braid_kl(n), n - 1, "braid_type")


# ------------------------------------------------------------ closed forms

def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral coefficient {x} in {what}")
    return int(x)


def kl_uniform_1d_closed(d: int) -> Poly:
    """P_{U_{1,d}}: coefficient of t^i is binom(d-i-1, i) binom(d+1, i) / (i+1)."""
    if d < 1:
        raise MatroidError("need d >= 1")
    coeffs = []
    for i in range((d + 1) // 2):
        c = Fraction(comb(d - i - 1, i) * comb(d + 1, i), i + 1)
        coeffs.append(_exact_int(c, f"P_U(1,{d})"))
    return Poly(coeffs)


def kl_thagomizer_closed(n: int) -> Poly:
    """P_{T_n}: Dyck paths of semilength n counted by long ascents."""
    if n < 0:
        raise MatroidError("need n >= 0")
    coeffs = [1]
    for k in range(1, (n + 2) // 2 + 1):
        s = sum(comb(j - k - 1, k - 1) * comb(n + 1 - k, n - j) for j in range(2 * k, n + 1))
        c = Fraction(comb(n + 1, k) * s, n + 1)
        coeffs.append(_exact_int(c, f"P_T({n})"))
    return Poly(coeffs)


def kl_k2n(n: int) -> Poly:
    """P_{K_{2,n}} = P_{T_n} + t for n >= 2."""
    if n < 2:
        raise MatroidError("K_{2,n} formula needs n >= 2")
    return kl_thagomizer_closed(n) + Poly([0, 1])


def q_transform(P: Poly, rank: int) -> Poly:
    """t^(rank-1) P(-t^-2)."""
    if rank < 1 or 2 * P.degree > rank - 1:
        raise ValueError(f"degree {P.degree} too large for rank {rank}")
    out = [0] * rank
    for i, c in enumerate(P.coeffs):
        out[rank - 1 - 2 * i] = c if i % 2 == 0 else -c
    return Poly(out)


def is_non_degenerate(M_or_poly, rank: int | None = None) -> bool:
    """rank 0, or deg P = floor((rank - 1)/2)."""
    if isinstance(M_or_poly, Poly):
        P = M_or_poly
    else:
        res = kl_polynomial(M_or_poly)
        P, rank = res.polynomial, res.matroid_rank
    if rank == 0:
        return True
    return P.degree == (rank - 1) // 2


def gamma_multiplier_identity(d: int) -> bool:
    """(d+1)! * Gamma(d)[h_d] equals P_{U_{1,d}}, with Gamma(d)_i = 1/((i+1)!(d+1-i)!)
    and h_d = sum binom(d-i-1, i) t^i."""
    h = [comb(d - i - 1, i) for i in range((d + 1) // 2)]
    scaled = [Fraction(factorial(d + 1) * c, factorial(i + 1) * factorial(d + 1 - i)) for i, c in enumerate(h)]
    return Poly(scaled) == kl_uniform_1d_closed(d)


def linear_coefficient_oracle(L: FlatLattice) -> int:
    """#coatoms - #atoms."""
    return len(L.coatoms()) - len(L.atoms())
