"""Symmetric functions with t-graded coefficients.

Elements are stored in the power-sum basis (partition -> TPoly coefficient);
the Schur basis is the input/output basis.  Changes of basis use symmetric
group characters from the Murnaghan-Nakayama rule.  Plethysm treats t as a
rank-one variable: p_k[t X] = t^k p_k[X], while rational constants pass
through unchanged.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational

from .series import TPoly

DEGREE_CAP = 14


class DegreeCapExceeded(ValueError):
    pass


def partitions(n: int, max_part: int | None = None):
    """Integer partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def z_lambda(lam) -> int:
    """Size of the centralizer of a permutation of cycle type lam."""
    out = 1
    for part, mult in Counter(lam).items():
        out *= part ** mult * factorial(mult)
    return out


def conjugate(lam) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


@lru_cache(maxsize=None)
def character(lam: tuple, mu: tuple) -> int:
    """chi^lam evaluated on cycle type mu (Murnaghan-Nakayama, beta-set form)."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        new = tuple(x - (ell - 1 - i) for i, x in enumerate(newbeta))
        new = tuple(p for p in new if p > 0)
        total += (-1) ** height * character(new, rest)
    return total


def hook_length_dimension(lam) -> int:
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def _check_cap(n, cap):
    if n > cap:
        raise DegreeCapExceeded(f"degree {n} exceeds cap {cap}")


def _tp(c):
    return c if isinstance(c, TPoly) else TPoly.const(c)


class SymFunc:
    """Finite sum of c_lam(t) p_lam; may mix degrees."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for lam, c in (terms or {}).items():
            c = _tp(c)
            if c:
                self.terms[tuple(lam)] = c

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    # -- constructors ----------------------------------------------------
    @classmethod
    def p(cls, lam, coeff=1):
        return cls({tuple(sorted(lam, reverse=True)): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def schur(cls, lam, coeff=1, cap=DEGREE_CAP):
        lam = tuple(lam)
        n = sum(lam)
        _check_cap(n, cap)
        c = _tp(coeff)
        return cls({mu: c * Fraction(character(lam, mu), z_lambda(mu)) for mu in partitions(n)})

    @classmethod
    def from_schur(cls, expansion, cap=DEGREE_CAP):
        out = cls()
        for lam, c in expansion.items():
            out = out + cls.schur(lam, c, cap)
        return out

    @classmethod
    def h(cls, n):
        """Complete homogeneous h_n = s[n]."""
        return cls({mu: Fraction(1, z_lambda(mu)) for mu in partitions(n)})

    @classmethod
    def e(cls, n):
        return cls({mu: Fraction((-1) ** (n - len(mu)), z_lambda(mu)) for mu in partitions(n)})

    # -- ring structure ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            if isinstance(other, (int, Rational, TPoly)):
                other = SymFunc({(): other})
            else:
                return NotImplemented
        out = dict(self.terms)
        for lam, c in other.terms.items():
            if lam in out:
                s = out[lam] + c
                if s:
                    out[lam] = s
                else:
                    del out[lam]
            else:
                out[lam] = c
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return SymFunc()
        return SymFunc._raw({lam: v * c for lam, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, (int, Rational, TPoly)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                lam = tuple(sorted(a + b, reverse=True))
                prod = x * y
                if lam in out:
                    out[lam] = out[lam] + prod
                else:
                    out[lam] = prod
        return SymFunc._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, (int, Rational, TPoly)):
            other = SymFunc({(): other})
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        try:
            return " + ".join(f"({c})*s{list(lam)}" for lam, c in sorted(self.to_schur().items()))
        except DegreeCapExceeded:
            return " + ".join(f"({c})*p{list(lam)}" for lam, c in sorted(self.terms.items()))

    # -- t handling ----------------------------------------------------------
    def bar(self, n=0):
        return SymFunc._raw({lam: c.bar(n) for lam, c in self.terms.items()})

    def is_polynomial_in_t(self):
        return all(c.is_polynomial() for c in self.terms.values())

    def map_t(self, fn):
        return SymFunc({lam: fn(c) for lam, c in self.terms.items()})

    def t_coefficient(self, i) -> "SymFunc":
        """The t^i part, as a t-free symmetric function."""
        return SymFunc({lam: c.terms.get(i, 0) for lam, c in self.terms.items()})

    def t_degree(self) -> int:
        return max((c.max_degree for c in self.terms.values()), default=-1)

    # -- grading ----------------------------------------------------------------
    def degrees(self):
        return sorted({sum(lam) for lam in self.terms})

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("inhomogeneous symmetric function")
        return degs[0] if degs else 0

    def homogeneous(self, n) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self.terms.items() if sum(lam) == n})

    def truncate(self, max_degree) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self.terms.items() if sum(lam) <= max_degree})

    # -- bases --------------------------------------------------------------------
    def to_schur(self, cap=DEGREE_CAP, check_integral=False) -> dict:
        """Schur expansion {partition: TPoly}; p_mu = sum_lam chi^lam(mu) s_lam."""
        out = {}
        for n in self.degrees():
            _check_cap(n, cap)
            piece = self.homogeneous(n)
            for lam in partitions(n):
                acc = TPoly()
                for mu, c in piece.terms.items():
                    ch = character(lam, mu)
                    if ch:
                        acc = acc + c * ch
                if acc:
                    out[lam] = acc
        if check_integral:
            for lam, c in out.items():
                if any(isinstance(v, Fraction) for v in c.terms.values()):
                    raise ArithmeticError(f"non-integral Schur multiplicity at {lam}: {c}")
        return out

    def to_power(self) -> dict:
        return dict(self.terms)

    # -- specializations ------------------------------------------------------------
    def adams(self, k: int) -> "SymFunc":
        """p_k[self]: p_j -> p_{jk} and t -> t^k."""
        return SymFunc._raw({tuple(p * k for p in lam): c.subs_power(k) for lam, c in self.terms.items()})

    def dimension_from_power(self) -> TPoly:
        """sum over degrees of n! * [p_1^n]."""
        out = TPoly()
        for lam, c in self.terms.items():
            if all(p == 1 for p in lam):
                out = out + c * factorial(len(lam))
        return out

    # -- serialization ------------------------------------------------------------------
    def to_json_obj(self, cap=DEGREE_CAP):
        return [{"partition": list(lam), "multiplicity": c.to_json()}
                for lam, c in sorted(self.to_schur(cap).items(), key=lambda x: (sum(x[0]), x[0]), reverse=False)]

    @classmethod
    def from_json_obj(cls, obj):
        expansion = {}
        for entry in obj:
            mult = TPoly({int(e): Fraction(v) for e, v in entry["multiplicity"].items()})
            expansion[tuple(entry["partition"])] = mult
        return cls.from_schur(expansion)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


# ------------------------------------------------------------ operations

def basis_convert(f, target: str, cap=DEGREE_CAP):
    """``target="schur"``: SymFunc -> {partition: TPoly}.  ``target="power"``: Schur dict -> SymFunc."""
    if target == "schur":
        return f.to_schur(cap)
    if target == "power":
        return f if isinstance(f, SymFunc) else SymFunc.from_schur(f, cap)
    raise ValueError(f"unknown basis {target!r}")


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


def kronecker(f: SymFunc, g: SymFunc) -> SymFunc:
    """Internal product: p_lam * p_mu = delta z_lam p_lam."""
    if f and g and f.degrees() != g.degrees():
        raise ValueError("kronecker product needs equal degrees")
    out = {}
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d:
            prod = c * d * z_lambda(lam)
            if prod:
                out[lam] = prod
    return SymFunc._raw(out)


def plethysm(f: SymFunc, g: SymFunc, max_degree: int = DEGREE_CAP) -> SymFunc:
    """f[g], truncated at symmetric-function degree ``max_degree``.

    The coefficients of f are constants; t inside g is a plethystic variable.
    g must have no degree-0 part.
    """
    if any(sum(lam) == 0 for lam in g.terms):
        raise ValueError("plethysm argument must have zero constant term")
    adams = {}
    out = SymFunc()
    for lam, c in f.terms.items():
        term = SymFunc.one()
        for k in lam:
            if k not in adams:
                adams[k] = g.adams(k).truncate(max_degree)
            term = (term * adams[k]).truncate(max_degree)
            if not term:
                break
        if term:
            out = out + term.scale(c)
    return out


def dimension(f: SymFunc) -> TPoly:
    """Graded dimension: hook-length dimensions weighted by Schur multiplicities."""
    out = TPoly()
    for lam, c in f.to_schur().items():
        out = out + c * hook_length_dimension(lam)
    return out


def is_schur_positive(f: SymFunc) -> bool:
    return all(c.is_nonnegative() for c in f.to_schur().values())


def strong_log_concave_check(seq) -> list[tuple]:
    """Quadruples i <= j <= k <= l, i + l = j + k, where C_j*C_k - C_i*C_l is not Schur positive."""
    seq = list(seq)
    degs = {d for c in seq for d in c.degrees()}
    if len(degs) > 1:
        raise ValueError("entries must share one degree")
    n = len(seq)
    fails = []
    for i in range(n):
        for l in range(i, n):
            for j in range(i, l + 1):
                k = i + l - j
                if k < j or k > l:
                    continue
                diff = kronecker(seq[j], seq[k]) - kronecker(seq[i], seq[l])
                if not is_schur_positive(diff):
                    fails.append((i, j, k, l))
    return fails


def is_log_concave_equivariant(seq) -> list[int]:
    """Indices i where C_i^2 - C_{i-1} C_{i+1} fails to be Schur positive."""
    return [i for i in range(1, len(seq) - 1)
            if not is_schur_positive(kronecker(seq[i], seq[i]) - kronecker(seq[i - 1], seq[i + 1]))]
