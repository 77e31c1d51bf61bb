"""Laurent polynomials in t and truncated power series in auxiliary variables.

Series coefficients may be :class:`TPoly` or any ring element that supports
``+``, ``-``, ``*``, scaling by a rational, truthiness for zero-testing and
``bar(n)`` (the t -> 1/t substitution followed by multiplication by t^n).
:class:`matroidkl.symfunc.SymFunc` satisfies this.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational

from .polynomial import Poly

DEFAULT_U_ORDER = 21
DEFAULT_X_ORDER = 12


class LaurentError(ValueError):
    """A negative power of t survived where a polynomial was required."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class TPoly:
    """Finitely supported Laurent polynomial in t with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, dict):
            self.terms = {k: _norm(v) for k, v in terms.items() if v}
        else:
            self.terms = {k: _norm(v) for k, v in enumerate(terms) if v}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def t(cls, k=1):
        return cls._raw({k: 1})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(list(p.coeffs))

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, Poly):
            return TPoly.from_poly(other)
        if isinstance(other, (int, Rational)):
            return TPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = _norm(s)
            else:
                out.pop(k, None)
        return TPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return TPoly()
            return TPoly._raw({k: _norm(v * other) for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return TPoly({k: v for k, v in out.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, n):
        out = TPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def shift(self, k):
        return TPoly._raw({e + k: v for e, v in self.terms.items()})

    def bar(self, n=0):
        """t^n * f(1/t)."""
        return TPoly._raw({n - e: v for e, v in self.terms.items()})

    def subs_power(self, k):
        """f(t^k)."""
        return TPoly._raw({e * k: v for e, v in self.terms.items()})

    @property
    def min_degree(self):
        return min(self.terms) if self.terms else 0

    @property
    def max_degree(self):
        return max(self.terms) if self.terms else -1

    def is_polynomial(self):
        return all(e >= 0 for e in self.terms)

    def is_nonnegative(self):
        return all(v >= 0 for v in self.terms.values())

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise LaurentError(f"{self} has negative powers of t")
        out = [0] * (self.max_degree + 1)
        for e, v in self.terms.items():
            out[e] = v
        return Poly(out)

    def __call__(self, x):
        return sum(v * Fraction(x) ** e for e, v in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            v = self.terms[e]
            parts.append(f"{v}" if e == 0 else f"{v}*t^{e}")
        return " + ".join(parts)

    def to_json(self):
        return {str(e): (v if isinstance(v, int) else str(v)) for e, v in sorted(self.terms.items())}


def _is_scalar(c):
    return isinstance(c, (int, Rational)) and not isinstance(c, bool)


class Series:
    """Truncated power series in ``variables``.

    ``coeffs`` maps exponent tuples to nonzero coefficients.  Exponent k of
    variable i is retained only when ``k <= orders[i]``; when ``total`` is set
    the exponent sum is also capped.
    """

    __slots__ = ("variables", "orders", "total", "coeffs")

    def __init__(self, variables, orders, coeffs=None, total=None):
        self.variables = tuple(variables)
        self.orders = tuple(orders)
        self.total = total
        self.coeffs = {}
        for k, v in (coeffs or {}).items():
            k = tuple(k) if isinstance(k, tuple) else (k,)
            if v and self._keep(k):
                self.coeffs[k] = v

    def _keep(self, k):
        if any(e > o for e, o in zip(k, self.orders)):
            return False
        return self.total is None or sum(k) <= self.total

    def _like(self, coeffs):
        out = Series.__new__(Series)
        out.variables, out.orders, out.total = self.variables, self.orders, self.total
        out.coeffs = coeffs
        return out

    @classmethod
    def univariate(cls, var, order, coeff_list):
        return cls((var,), (order,), {(n,): c for n, c in enumerate(coeff_list)})

    def __getitem__(self, k):
        k = tuple(k) if isinstance(k, tuple) else (k,)
        return self.coeffs.get(k, 0)

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.variables != self.variables:
            raise TypeError(f"variable mismatch {self.variables} vs {other.variables}")
        orders = tuple(min(a, b) for a, b in zip(self.orders, other.orders))
        totals = [x for x in (self.total, other.total) if x is not None]
        return orders, (min(totals) if totals else None)

    def __add__(self, other):
        if not isinstance(other, Series):
            return self + self.constant(other)
        orders, total = self._check(other)
        out = Series(self.variables, orders, total=total)
        for src in (self.coeffs, other.coeffs):
            for k, v in src.items():
                if out._keep(k):
                    if k in out.coeffs:
                        s = out.coeffs[k] + v
                        if s:
                            out.coeffs[k] = s
                        else:
                            del out.coeffs[k]
                    else:
                        out.coeffs[k] = v
        return out

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def constant(self, c):
        """The constant series c with this series' shape."""
        zero = (0,) * len(self.variables)
        return self._like({zero: c} if c else {})

    def scale(self, c):
        return self._like({k: v * c for k, v in self.coeffs.items() if v * c})

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        orders, total = self._check(other)
        out = {}
        nv = len(orders)
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = tuple(ka[i] + kb[i] for i in range(nv))
                if any(k[i] > orders[i] for i in range(nv)) or (total is not None and sum(k) > total):
                    continue
                p = va * vb
                if k in out:
                    out[k] = out[k] + p
                else:
                    out[k] = p
        res = Series(self.variables, orders, total=total)
        res.coeffs = {k: v for k, v in out.items() if v}
        return res

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, Series) and self.variables == other.variables and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Series({self.variables}, {self.orders}, {self.coeffs!r})"

    # -- graded pieces -------------------------------------------------
    def by_total_degree(self):
        out = {}
        for k, v in self.coeffs.items():
            out.setdefault(sum(k), {})[k] = v
        return out

    def max_total(self):
        if self.total is not None:
            return self.total
        return sum(self.orders)

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.variables), 0)

    def map_coeffs(self, fn):
        return self._like({k: w for k, v in self.coeffs.items() if (w := fn(k, v))})

    def __pow__(self, n):
        out = self.constant(1)
        for _ in range(n):
            out = out * self
        return out


def _graded(s: Series):
    g = s.by_total_degree()
    return [s._like(g.get(n, {})) for n in range(s.max_total() + 1)]


def exp_series(a: Series) -> Series:
    """exp(a) for a with zero constant term, via n E_n = sum_k k A_k E_{n-k} on total degree."""
    if a.constant_term():
        raise ValueError("exp needs a zero constant term")
    A = _graded(a)
    N = len(A) - 1
    E = [a.constant(1)]
    for n in range(1, N + 1):
        acc = a._like({})
        for k in range(1, n + 1):
            if A[k].coeffs and E[n - k].coeffs:
                acc = acc + (A[k] * E[n - k]).scale(k)
        E.append(acc.scale(Fraction(1, n)))
    out = a._like({})
    for piece in E:
        out = out + piece
    return out


def log_series(s: Series) -> Series:
    """log(s) for s with constant term 1."""
    c = s.constant_term()
    if c != 1:
        raise ValueError("log needs constant term 1")
    S = _graded(s)
    N = len(S) - 1
    L = [s._like({})]
    for n in range(1, N + 1):
        acc = S[n].scale(n)
        for k in range(1, n):
            if L[k].coeffs and S[n - k].coeffs:
                acc = acc - (L[k] * S[n - k]).scale(k)
        L.append(acc.scale(Fraction(1, n)))
    out = s._like({})
    for piece in L:
        out = out + piece
    return out


def inverse_series(s: Series) -> Series:
    """1/s for s with constant term 1 (or a nonzero rational)."""
    c = s.constant_term()
    if _is_scalar(c) and c and c != 1:
        return inverse_series(s.scale(Fraction(1) / c)).scale(Fraction(1) / c)
    if c != 1:
        raise ValueError("inverse needs constant term 1")
    S = _graded(s)
    N = len(S) - 1
    inv = [s.constant(1)]
    for n in range(1, N + 1):
        acc = s._like({})
        for k in range(1, n + 1):
            if S[k].coeffs and inv[n - k].coeffs:
                acc = acc - S[k] * inv[n - k]
        inv.append(acc)
    out = s._like({})
    for piece in inv:
        out = out + piece
    return out


def compose(f: Series, g: Series) -> Series:
    """f(g) for univariate f; g must have zero constant term."""
    if len(f.variables) != 1:
        raise ValueError("compose expects a univariate outer series")
    if g.constant_term():
        raise ValueError("inner series must have zero constant term")
    N = f.orders[0]
    out = g.constant(f[(N,)])
    for n in range(N - 1, -1, -1):
        out = out * g + g.constant(f[(n,)])
    return out


def bar_substitute(s: Series, variable: str, check=True) -> Series:
    """Each coefficient c(t) of v^n becomes t^n c(1/t)."""
    i = s.variables.index(variable)
    out = {}
    for k, v in s.coeffs.items():
        w = v.bar(k[i])
        if check and not _polynomial_in_t(w):
            raise LaurentError(f"bar substitution left negative t-powers at {k}")
        out[k] = w
    return s._like(out)


def _polynomial_in_t(c):
    if isinstance(c, TPoly):
        return c.is_polynomial()
    if hasattr(c, "is_polynomial_in_t"):
        return c.is_polynomial_in_t()
    return True


def binomial_power_t(z_order: int = DEFAULT_U_ORDER) -> Series:
    """K(t, z) = t^-1 ((1+z)^t - 1); the z^n coefficient is (t-1)...(t-n+1)/n!."""
    if z_order < 1:
        raise ValueError("z_order must be >= 1")
    coeffs = {}
    binom = TPoly.const(1)  # binom(t, n) as a polynomial in t
    for n in range(1, z_order + 1):
        binom = binom * TPoly({0: Fraction(-(n - 1), n), 1: Fraction(1, n)})
        c = binom.shift(-1)
        if not c.is_polynomial():
            raise LaurentError("binomial series coefficient is not divisible by t")
        coeffs[(n,)] = c
    return Series(("z",), (z_order,), coeffs)


def exp_linear(var: str, order: int, rate) -> Series:
    """exp(rate * var) with rate a TPoly or rational."""
    rate = rate if isinstance(rate, TPoly) else TPoly.const(rate)
    coeffs = {}
    p = TPoly.const(1)
    for n in range(order + 1):
        coeffs[(n,)] = p * Fraction(1, factorial(n))
        p = p * rate
    return Series((var,), (order,), coeffs)
