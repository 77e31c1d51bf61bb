"""Equivariant KL polynomials and order-by-order solvers for the generating-function
equations of the uniform, thagomizer and braid families.

Every solver peels off one coefficient at a time: the unknown coefficient X
of rank r appears as ``t^r X(1/t) - X(t)`` and everything else is already
known, so :func:`matroidkl.kl.degree_split` recovers X.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .kl import DegreeSplitError, degree_split, kl_braid_type
from .polynomial import Poly
from .series import (Series, TPoly, binomial_power_t, exp_series,
                     inverse_series)
from .symfunc import (SymFunc, is_schur_positive, plethysm,
                      strong_log_concave_check)


@dataclass(frozen=True)
class EquivariantKL:
    """Coefficients C_0, C_1, ... of an S_n-equivariant KL polynomial as Frobenius characters."""

    n: int
    coefficients: tuple

    @classmethod
    def from_graded(cls, n, f: SymFunc):
        top = max(f.t_degree(), 0)
        return cls(n, tuple(f.t_coefficient(i) for i in range(top + 1)))

    def graded(self) -> SymFunc:
        out = SymFunc()
        for i, c in enumerate(self.coefficients):
            out = out + c.scale(TPoly.t(i))
        return out

    def graded_dimension(self) -> Poly:
        from .symfunc import dimension

        return Poly([dimension(c).terms.get(0, 0) for c in self.coefficients])

    def schur_tables(self) -> list[dict]:
        return [{lam: c.terms.get(0, 0) for lam, c in coef.to_schur().items()} for coef in self.coefficients]

    def to_json_obj(self, family: str):
        return [{"family": family, "n": self.n, "t_degree": i, "schur": c.to_json_obj()}
                for i, c in enumerate(self.coefficients)]


def equivariant_positivity_check(ekl: EquivariantKL) -> bool:
    return all(is_schur_positive(c) for c in ekl.coefficients)


def strong_log_concavity_failures(ekl: EquivariantKL) -> list[tuple]:
    return strong_log_concave_check(ekl.coefficients)


def _degree_split_sym(rank: int, rhs: SymFunc, expected=None) -> SymFunc:
    """Coefficientwise degree_split on the power-sum coefficients."""
    out = {}
    for lam, c in rhs.terms.items():
        p = degree_split(rank, c.to_poly())
        if p:
            out[lam] = TPoly.from_poly(p)
    res = SymFunc(out)
    if expected is not None and res.t_coefficient(0) != expected:
        raise DegreeSplitError("equivariant constant term is not the expected representation")
    return res


def _split_scaled(rank: int, rhs: TPoly, scale: int) -> Poly:
    """degree_split of scale * rhs, asserting integrality."""
    p = (rhs * scale).to_poly()
    if not p.is_integral():
        raise DegreeSplitError(f"non-integral right-hand side {p}")
    return degree_split(rank, p, expected_constant=1)


# ------------------------------------------------------------ uniform matroids

def uniform_equivariant_closed(m: int, d: int, i: int) -> SymFunc:
    """Frobenius character of the t^i coefficient for S_{m+d} acting on U_{m,d}.

    For i > 0 this is the sum over b = 1..min(m, d-2i) of
    s[d+m-2i-b+1, b+1, 2^(i-1)]; for i = 0 it is the trivial character s[m+d].
    """
    if m < 0 or d < 1 or i < 0:
        raise ValueError("need m >= 0, d >= 1, i >= 0")
    if i == 0:
        return SymFunc.schur((m + d,))
    out = SymFunc()
    for b in range(1, min(m, d - 2 * i) + 1):
        lam = (d + m - 2 * i - b + 1, b + 1) + (2,) * (i - 1)
        if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)) or sum(lam) != m + d:
            raise ValueError(f"malformed partition {lam} for (m,d,i)=({m},{d},{i})")
        out = out + SymFunc.schur(lam)
    return out


def uniform_equivariant_kl(m: int, d: int) -> EquivariantKL:
    coeffs = [uniform_equivariant_closed(m, d, i) for i in range((d + 1) // 2)]
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return EquivariantKL(m + d, tuple(coeffs))


def _divide_linear(N: Series, alpha) -> Series:
    """G with N = (alpha*u - x) G, for series in (x, u); checks exactness.

    Comparing x^a u^b coefficients gives alpha G[a, b-1] = N[a, b] + G[a-1, b],
    so G[a, b] needs N up to total degree a + b + 1.
    """
    ix, iu = N.variables.index("x"), N.variables.index("u")
    ox, ou = N.orders[ix], N.orders[iu]
    total = N.total if N.total is not None else ox + ou
    inv_alpha = TPoly.t(-1) if alpha == "t" else Fraction(1)

    def key(a, b):
        k = [0, 0]
        k[ix], k[iu] = a, b
        return tuple(k)

    G = {}
    for a in range(ox + 1):
        for b in range(min(ou, total) - 1, -1, -1):
            if a + b + 1 > total:
                continue
            acc = N[key(a, b + 1)]
            prev = G.get(key(a - 1, b + 1))
            if prev is not None:
                acc = acc + prev
            if acc:
                G[key(a, b)] = acc * inv_alpha
    # the u^0 column of N must equal -x G
    for a in range(min(ox, total) + 1):
        lhs = N[key(a, 0)]
        rhs = -G[key(a - 1, 0)] if key(a - 1, 0) in G else 0
        if (lhs or rhs) and lhs != rhs:
            raise ArithmeticError("series is not divisible by the linear form")
    orders = [0, 0]
    orders[ix], orders[iu] = ox, ou - 1
    return Series(N.variables, orders, G, total=total - 1)


def uniform_kernel(x_order: int, total: int, equivariant: bool):
    """Return (H, ratio): the inhomogeneous kernel and the multiplier of P(t,u,x),
    exact for x-degree <= x_order and total degree <= total.

    With A(y) = s(y) (equivariant) or e^y, the kernel is
    u/(u-x) (A(x)/A(u) - 1) + tu/(tu-x) (A(tu) - A(x))/A(u), and the
    multiplier is A(tu)/A(u).
    """
    vars_ = ("x", "u")
    orders = (x_order, total + 1)
    if equivariant:
        coef = [SymFunc.h(n) for n in range(total + 2)]
    else:
        coef = [TPoly.const(Fraction(1, factorial(n))) for n in range(total + 2)]

    def mk(d):
        return Series(vars_, orders, d, total=total + 1)

    Ax = mk({(a, 0): coef[a] for a in range(x_order + 1)})
    Au = mk({(0, b): coef[b] for b in range(total + 2)})
    Atu = mk({(0, b): coef[b] * TPoly.t(b) for b in range(total + 2)})
    invAu = inverse_series(Au)
    N1 = Ax * invAu - Ax.constant(coef[0])
    N2 = (Atu - Ax) * invAu
    G1 = _divide_linear(N1, 1)
    G2 = _divide_linear(N2, "t")
    unit = SymFunc.one() if equivariant else TPoly.const(1)
    u_series = Series(vars_, G1.orders, {(0, 1): unit}, total=G1.total)
    H = u_series * G1 + u_series * G2.map_coeffs(lambda k, v: v * TPoly.t(1))
    ratio = Atu * invAu
    return H, ratio


def solve_uniform_fe(x_order: int, u_order: int, equivariant: bool = False, max_total: int | None = None):
    """Solve for P_{U_{m,d}} (or its Frobenius character) for m <= x_order, 1 <= d <= u_order.

    ``max_total`` bounds m + d.  Returns {(m, d): Poly or EquivariantKL}.
    """
    total = x_order + u_order if max_total is None else max_total
    x_order = min(x_order, total - 1)
    u_order = min(u_order, total)
    H, ratio = uniform_kernel(x_order, total, equivariant)
    sol = {}
    table = {}
    for m in range(x_order + 1):
        for d in range(1, u_order + 1):
            if m + d > total:
                continue
            rhs = H[(m, d)] or (SymFunc() if equivariant else TPoly())
            for j in range(1, d):
                r = ratio[(0, j)]
                prev = sol.get((m, d - j))
                if r and prev:
                    rhs = rhs + r * prev
            if equivariant:
                X = _degree_split_sym(d, rhs, expected=SymFunc.h(m + d))
                sol[(m, d)] = X
                table[(m, d)] = EquivariantKL.from_graded(m + d, X)
            else:
                P = _split_scaled(d, rhs, factorial(m + d))
                sol[(m, d)] = TPoly.from_poly(P) * Fraction(1, factorial(m + d))
                table[(m, d)] = P
    return table


# ------------------------------------------------------------ thagomizer matroids

def thagomizer_kernels(n_max: int, equivariant: bool):
    """(inhomogeneous term, multiplier) as univariate series in u."""
    order = n_max + 1
    if equivariant:
        X = SymFunc.p((1,), TPoly({0: -2, 1: 1}))
        s_u = Series(("u",), (order,), {(n,): SymFunc.h(n) for n in range(order + 1)})
        s_tu = Series(("u",), (order,), {(n,): SymFunc.h(n).scale(TPoly.t(n)) for n in range(order + 1)})
        v = Series(("u",), (order,), {(n,): plethysm(SymFunc.h(n), X, max_degree=n) if n else SymFunc.one()
                                      for n in range(order + 1)})
        u = Series(("u",), (order,), {(1,): SymFunc.one()})
        inhom = (u * s_u * v).scale(TPoly({0: -1, 1: 1}))
        ratio = s_tu * inverse_series(s_u)
        mult = ratio * ratio
    else:
        from .series import exp_linear

        tm1 = TPoly({0: -1, 1: 1})
        u = Series(("u",), (order,), {(1,): TPoly.const(1)})
        inhom = (u * exp_linear("u", order, tm1)).scale(tm1)
        mult = exp_linear("u", order, tm1 * 2)
    return inhom, mult


def solve_thagomizer_fe(n_max: int, equivariant: bool = False):
    """{n: P_{T_n}} or {n: EquivariantKL} for 0 <= n <= n_max."""
    inhom, mult = thagomizer_kernels(n_max, equivariant)
    sol, table = {}, {}
    for n in range(n_max + 1):
        rhs = inhom[(n + 1,)] or (SymFunc() if equivariant else TPoly())
        for j in range(1, n + 1):
            r = mult[(j,)]
            if r and (n - j) in sol:
                rhs = rhs + r * sol[n - j]
        if equivariant:
            X = _degree_split_sym(n + 1, rhs, expected=SymFunc.h(n))
            sol[n] = X
            table[n] = EquivariantKL.from_graded(n, X)
        else:
            P = _split_scaled(n + 1, rhs, factorial(n))
            sol[n] = TPoly.from_poly(P) * Fraction(1, factorial(n))
            table[n] = P
    return table


# ------------------------------------------------------------ braid matroids

def _mobius_number(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def necklace_exponent(k: int) -> TPoly:
    """(1/k) sum_{d | k} mu(k/d) t^d."""
    terms = {}
    for d in range(1, k + 1):
        if k % d == 0:
            mu = _mobius_number(k // d)
            if mu:
                terms[d] = Fraction(mu, k)
    return TPoly(terms)


def braid_kernel_equivariant(order: int) -> Series:
    """t^-1 (-1 + prod_k (1 + u^k p_k)^{necklace_exponent(k)}), graded so that u^n has degree n."""
    logsum = {}
    for k in range(1, order + 1):
        a = necklace_exponent(k)
        for j in range(1, order // k + 1):
            term = SymFunc.p((k,) * j, a * Fraction((-1) ** (j + 1), j))
            key = (k * j,)
            logsum[key] = logsum[key] + term if key in logsum else term
    L = Series(("u",), (order,), logsum)
    E = exp_series(L)
    K = (E - E.constant(SymFunc.one())).map_coeffs(lambda k, v: v.scale(TPoly.t(-1)))
    for k, v in K.coeffs.items():
        if not v.is_polynomial_in_t():
            raise ArithmeticError(f"braid kernel has negative t-powers at u^{k[0]}")
    return K


@lru_cache(maxsize=None)
def _binomial_powers(order: int):
    """[K, K^2/2!, ..., K^order/order!] for K = binomial_power_t(order)."""
    K = binomial_power_t(order)
    out = [None, K]
    cur = K
    for m in range(2, order + 1):
        cur = (cur * K).scale(Fraction(1, m))
        out.append(cur)
    return out


def solve_braid_fe(n_max: int, equivariant: bool = False):
    """{n: P_{B_n}} or {n: EquivariantKL} for 1 <= n <= n_max."""
    if equivariant:
        if n_max > 8:
            raise ValueError("equivariant braid solve supports n_max <= 8")
        return _solve_braid_equivariant(n_max)
    if n_max > 22:
        raise ValueError("braid solve supports n_max <= 22")
    table = {1: Poly([1])}
    if n_max < 2:
        return {n: p for n, p in table.items() if n <= n_max}
    powers = _binomial_powers(n_max)
    for n in range(2, n_max + 1):
        rhs = TPoly()
        for m in range(1, n):
            c = powers[m][(n,)]
            if c:
                rhs = rhs + c * TPoly.from_poly(table[m])
        table[n] = _split_scaled(n - 1, rhs, factorial(n))
    return table


def _solve_braid_equivariant(n_max: int):
    K = braid_kernel_equivariant(n_max)
    Ksym = SymFunc()
    for v in K.coeffs.values():
        Ksym = Ksym + v
    chars = {1: SymFunc.h(1)}
    table = {1: EquivariantKL(1, (SymFunc.h(1),))}
    substituted = {1: plethysm(chars[1], Ksym, max_degree=n_max)}
    for n in range(2, n_max + 1):
        rhs = SymFunc()
        for m in range(1, n):
            rhs = rhs + substituted[m].homogeneous(n)
        X = _degree_split_sym(n - 1, rhs, expected=SymFunc.h(n))
        chars[n] = X
        table[n] = EquivariantKL.from_graded(n, X)
        substituted[n] = plethysm(X, Ksym, max_degree=n_max)
    return table


def braid_leading_coeff_check(k_max: int) -> list[dict]:
    """Top coefficient of P_{B_2k} against (2k-3)!! (2k-1)^(k-2)."""
    rows = []
    for k in range(2, k_max + 1):
        P = kl_braid_type(2 * k).polynomial
        computed = P[k - 1]
        dfact = 1
        for j in range(2 * k - 3, 0, -2):
            dfact *= j
        conjectured = dfact * (2 * k - 1) ** (k - 2)
        rows.append({"k": k, "n": 2 * k, "computed": computed, "conjectured": conjectured,
                     "match": computed == conjectured})
    return rows


BRAID_GF = {
    1: ([0, 0, 0, 0, 1], [(1, 3), (2, 1)]),
    2: ([0, 0, 0, 0, 0, 0, 15, -50, 40, 4], [(1, 5), (2, 3), (4, 1)]),
}


def rational_taylor(numerator, poles, order) -> list[Fraction]:
    """Taylor coefficients of numerator(z) / prod (1 - j z)^e up to z^order."""
    den = Poly([1])
    for j, e in poles:
        den = den * Poly([1, -j]) ** e
    num = list(numerator) + [0] * (order + 1)
    out = []
    for n in range(order + 1):
        c = Fraction(num[n]) - sum(Fraction(den[k]) * out[n - k] for k in range(1, min(n, den.degree) + 1))
        out.append(c / den[0])
    return out


def braid_coefficient_gf_check(i: int, n_max: int = 14) -> dict:
    """Compare sum_n [t^i] P_{B_n} z^n with the rational function for i in {1, 2}."""
    if i not in BRAID_GF:
        raise ValueError("only i = 1, 2 have stated generating functions")
    num, poles = BRAID_GF[i]
    expected = rational_taylor(num, poles, n_max)
    computed = [0] + [kl_braid_type(n).polynomial[i] for n in range(1, n_max + 1)]
    first = next((n for n in range(n_max + 1) if computed[n] != expected[n]), None)
    return {"i": i, "n_max": n_max, "match": first is None, "first_mismatch": first,
            "computed": computed, "expected": [int(x) if x.denominator == 1 else str(x) for x in expected]}


def dump_table(table: dict, family: str) -> str:
    rows = []
    for key in sorted(table):
        val = table[key]
        if isinstance(val, EquivariantKL):
            rows.extend(val.to_json_obj(family))
        else:
            rows.append({"family": family, "key": list(key) if isinstance(key, tuple) else key,
                         "kl": val.to_list()})
    return json.dumps(rows, sort_keys=True)
