"""Exact real-root analysis: Sturm chains, root isolation, log-concavity, interlacing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, gcd

INF = float("inf")


class DegenerateInterlacing(ValueError):
    """Repeated or shared roots: alternation is not defined."""


class RefinementBudgetExceeded(RuntimeError):
    pass


# ------------------------------------------------------------ coefficient tests

def is_log_concave_no_internal_zeros(P: Poly) -> bool:
    c = list(P.coeffs)
    nz = [i for i, x in enumerate(c) if x != 0]
    if not nz:
        return True
    lo, hi = nz[0], nz[-1]
    if any(c[i] == 0 for i in range(lo, hi + 1)):
        return False
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


# ------------------------------------------------------------ Sturm machinery

def sturm_chain(f: Poly) -> list[Poly]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(-rem)
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_at(p: Poly, x) -> int:
    if x == INF:
        s = p.lead
    elif x == -INF:
        s = p.lead if p.degree % 2 == 0 else -p.lead
    else:
        s = p(x)
    return (s > 0) - (s < 0)


def _variations(chain, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def squarefree_part(f: Poly) -> Poly:
    g = gcd(f, f.derivative())
    if g.degree <= 0:
        return f
    return f // g


def count_real_roots(P: Poly, a=-INF, b=INF) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    sq = squarefree_part(P)
    if sq.degree <= 0:
        return 0
    chain = sturm_chain(sq)
    return _variations(chain, a) - _variations(chain, b)


def squarefree_factors(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's decomposition: f = c * prod a_i^i with each a_i squarefree."""
    out = []
    if f.degree <= 0:
        return out
    a = gcd(f, f.derivative())
    b = f // a
    c = f.derivative() // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def is_real_rooted(P: Poly) -> bool:
    if P.is_zero():
        raise ValueError("zero polynomial")
    return all(count_real_roots(a) == a.degree for a, _ in squarefree_factors(P))


def all_roots_negative_real(P: Poly) -> bool:
    if P.is_zero():
        raise ValueError("zero polynomial")
    if P.degree <= 0:
        return True
    if P[0] == 0:
        return False
    return is_real_rooted(P) and count_real_roots(P, 0, INF) == 0


# ------------------------------------------------------------ isolation

@dataclass(frozen=True)
class IsolatingIntervals:
    """Disjoint half-open intervals (lo, hi], sorted, one distinct real root each."""

    intervals: tuple
    multiplicities: tuple

    def __len__(self):
        return len(self.intervals)


def root_bound(P: Poly) -> Fraction:
    """Cauchy bound: every root has |x| < 1 + max |c_i / c_n|."""
    lead = abs(Fraction(P.lead))
    return 1 + max((abs(Fraction(c)) / lead for c in P.coeffs[:-1]), default=Fraction(0))


def _isolate_squarefree(sq: Poly, budget: int):
    chain = sturm_chain(sq)
    B = root_bound(sq)
    out = []
    stack = [(-B, B)]
    steps = 0
    while stack:
        lo, hi = stack.pop()
        n = _variations(chain, lo) - _variations(chain, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        steps += 1
        if steps > budget:
            raise RefinementBudgetExceeded("root isolation exceeded its step budget")
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return chain, out


def isolate_roots(P: Poly, budget: int = 10_000) -> IsolatingIntervals:
    if P.is_zero():
        raise ValueError("zero polynomial")
    items, mult = [], {}
    for a, m in squarefree_factors(P):
        mult[id(a)] = m
        items.extend((lo, hi, a) for lo, hi in _isolate_squarefree(a, budget)[1])
    items = _separate(items, budget)
    return IsolatingIntervals(tuple((lo, hi) for lo, hi, _ in items),
                              tuple(mult[id(a)] for _, _, a in items))


def _refine(poly: Poly, chain, lo, hi):
    mid = (lo + hi) / 2
    left = _variations(chain, lo) - _variations(chain, mid)
    return (lo, mid) if left == 1 else (mid, hi)


def _separate(items, budget):
    """Refine (lo, hi, poly) intervals until pairwise disjoint."""
    chains = {}
    items = list(items)
    steps = 0
    while True:
        items.sort(key=lambda x: x[0])
        clash = None
        for k in range(len(items) - 1):
            if items[k][1] > items[k + 1][0]:
                clash = k
                break
        if clash is None:
            return items
        steps += 1
        if steps > budget:
            raise RefinementBudgetExceeded("interval separation exceeded its step budget")
        for k in (clash, clash + 1):
            lo, hi, poly = items[k]
            if id(poly) not in chains:
                chains[id(poly)] = sturm_chain(poly)
            items[k] = (*_refine(poly, chains[id(poly)], lo, hi), poly)


def refine_roots(P: Poly, width, budget: int = 10_000) -> IsolatingIntervals:
    """Isolating intervals of width at most ``width``."""
    iso = isolate_roots(P, budget)
    sq = squarefree_part(P)
    chain = sturm_chain(sq)
    out = []
    for lo, hi in iso.intervals:
        steps = 0
        while hi - lo > width:
            lo, hi = _refine(sq, chain, lo, hi)
            steps += 1
            if steps > budget:
                raise RefinementBudgetExceeded("refinement exceeded its step budget")
        out.append((lo, hi))
    return IsolatingIntervals(tuple(out), iso.multiplicities)


# ------------------------------------------------------------ interlacing

def interlaces(f: Poly, g: Poly, budget: int = 10_000) -> bool:
    """True if f, g are real rooted and their roots alternate starting with f's smallest.

    Requires deg f = deg g + 1 >= 1.  Repeated roots within f or g, or a root
    shared by f and g, raise :class:`DegenerateInterlacing`.
    """
    if f.degree != g.degree + 1 or f.degree < 1:
        raise ValueError(f"need deg f = deg g + 1 >= 1, got {f.degree}, {g.degree}")
    for name, p in (("f", f), ("g", g)):
        if p.degree > 0 and squarefree_part(p).degree != p.degree:
            raise DegenerateInterlacing(f"{name} has a repeated root")
    if g.degree > 0 and gcd(f, g).degree > 0:
        raise DegenerateInterlacing("f and g share a root")
    if not is_real_rooted(f) or (g.degree > 0 and not is_real_rooted(g)):
        return False
    fi = _isolate_squarefree(f, budget)[1]
    gi = _isolate_squarefree(g, budget)[1] if g.degree > 0 else []
    items = [(lo, hi, f) for lo, hi in fi] + [(lo, hi, g) for lo, hi in gi]
    items = _separate(items, budget)
    pattern = [p is f for _, _, p in items]
    return pattern == [k % 2 == 0 for k in range(len(pattern))]


# ------------------------------------------------------------ contraction chains

class InterlacingDisagreement(AssertionError):
    """The P-form and Q-form verdicts differ, which would mean a bug."""


@dataclass(frozen=True)
class InterlacingReport:
    status: str  # pass | fail | hypothesis not met | degenerate | budget exceeded
    rank: int
    parent: Poly
    child: Poly
    p_form: bool | None = None
    q_form: bool | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _q(P: Poly, rank: int) -> Poly:
    from .kl import q_transform

    return q_transform(P, rank) if rank >= 1 else P


def interlacing_verdict(parent: Poly, rank: int, child: Poly, budget: int = 10_000) -> InterlacingReport:
    """Check a contraction pair given P_M (rank ``rank``) and P_{M/e} (rank ``rank - 1``).

    Odd rank compares P_M with P_{M/e}; even rank compares t*P_{M/e} with
    P_M.  The Q-transforms are compared directly as well, and the two
    verdicts must agree.
    """
    def nondeg(P, r):
        return r == 0 or P.degree == (r - 1) // 2

    if rank < 2 or not (nondeg(parent, rank) and nondeg(child, rank - 1)):
        return InterlacingReport("hypothesis not met", rank, parent, child,
                                 detail="needs rank >= 2 and both polynomials non-degenerate")
    if rank % 2:
        f, g = parent, child
    else:
        f, g = child.shift(1), parent
    try:
        p_form = interlaces(f, g, budget)
        q_form = interlaces(_q(parent, rank), _q(child, rank - 1), budget)
    except DegenerateInterlacing as exc:
        return InterlacingReport("degenerate", rank, parent, child, detail=str(exc))
    except RefinementBudgetExceeded as exc:
        return InterlacingReport("budget exceeded", rank, parent, child, detail=str(exc))
    if p_form != q_form:
        raise InterlacingDisagreement(f"P-form {p_form} vs Q-form {q_form} for {parent} / {child}")
    return InterlacingReport("pass" if p_form else "fail", rank, parent, child, p_form, q_form)


def check_contraction_interlacing(M, e: int, budget: int = 10_000) -> InterlacingReport:
    from .kl import kl_polynomial
    from .matroid import contract_element

    top = kl_polynomial(M)
    sub = kl_polynomial(contract_element(M, e))
    return interlacing_verdict(top.polynomial, top.matroid_rank, sub.polynomial, budget)
