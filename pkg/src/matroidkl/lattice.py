"""Lattice of flats: rank-level enumeration, covers, Möbius values, characteristic polynomials."""

from __future__ import annotations

from .matroid import Matroid, Minor, bits, MatroidError
from .polynomial import Poly

DEFAULT_MAX_FLATS = 10**6
DEFAULT_MAX_GROUND = 64


class LatticeTooLarge(MatroidError):
    """Flat count exceeded the configured cap; use a family-specialized method instead."""


class FlatLattice:
    """Graded lattice of flats.

    Flats are indexed 0..N-1 in rank order, so index 0 is the bottom and
    index N-1 the top.  ``masks[i]`` is the flat as a ground-set bit mask.
    """

    def __init__(self, masks, ranks, upper, lower):
        self.masks = masks
        self.ranks = ranks
        self.upper = upper
        self.lower = lower
        self.index = {m: i for i, m in enumerate(masks)}
        self.rank = ranks[-1]
        self.levels = [[] for _ in range(self.rank + 1)]
        for i, r in enumerate(ranks):
            self.levels[r].append(i)
        self._interval_mobius = {}
        self._mobius_bottom = None

    def __len__(self):
        return len(self.masks)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.masks) - 1

    def counts_by_rank(self) -> list[int]:
        return [len(level) for level in self.levels]

    def atoms(self):
        return self.levels[1] if self.rank >= 1 else []

    def coatoms(self):
        return self.levels[self.rank - 1] if self.rank >= 1 else []

    def leq(self, i, j) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def up_set(self, i) -> list[int]:
        """Flats >= i, sorted by rank."""
        seen = {i}
        frontier = [i]
        out = [i]
        while frontier:
            nxt = []
            for f in frontier:
                for g in self.upper[f]:
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
            out.extend(nxt)
            frontier = nxt
        return out

    def down_set(self, j) -> list[int]:
        seen = {j}
        frontier = [j]
        out = [j]
        while frontier:
            nxt = []
            for f in frontier:
                for g in self.lower[f]:
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
            out.extend(nxt)
            frontier = nxt
        return out[::-1]

    # ------------------------------------------------------------ Möbius
    def mobius_from(self, i) -> dict[int, int]:
        """mu(i, h) for every flat h >= i.

        Uses Weisner's identity on each interval [i, h]: pick an element e of
        h outside i; then mu(i, h) is minus the sum of mu(i, k) over lower
        covers k of h that contain i but not e.
        """
        masks = self.masks
        base = masks[i]
        mu = {i: 1}
        for h in self.up_set(i)[1:]:
            hm = masks[h]
            diff = hm & ~base
            e_bit = diff & -diff
            s = 0
            for k in self.lower[h]:
                if k in mu and not masks[k] & e_bit:
                    s += mu[k]
            mu[h] = -s
        return mu

    @property
    def mobius_bottom(self) -> list[int]:
        if self._mobius_bottom is None:
            mu = self.mobius_from(0)
            self._mobius_bottom = [mu[i] for i in range(len(self.masks))]
        return self._mobius_bottom

    def mobius(self, i, j) -> int:
        """mu(i, j), memoized; zero when i is not below j."""
        if not self.leq(i, j):
            return 0
        if i == 0:
            return self.mobius_bottom[j]
        key = (i, j)
        if key not in self._interval_mobius:
            self._interval_mobius.update(((i, h), v) for h, v in self.mobius_from(i).items())
        return self._interval_mobius[key]

    def mobius_definitional(self, i, j) -> int:
        """mu(i, j) straight from sum_{i <= k <= j} mu(i, k) = 0; slow, for cross-checks."""
        if not self.leq(i, j):
            return 0
        inside = [k for k in self.up_set(i) if self.leq(k, j)]
        inside.sort(key=lambda k: self.ranks[k])
        mu = {}
        for k in inside:
            if k == i:
                mu[k] = 1
            else:
                mu[k] = -sum(v for h, v in mu.items() if self.leq(h, k))
        return mu[j]

    # ------------------------------------------------------------ characteristic polynomials
    def interval_characteristic(self, i, j) -> Poly:
        """Characteristic polynomial of the interval [i, j]."""
        rj = self.ranks[j]
        coeffs = [0] * (rj - self.ranks[i] + 1)
        mu = self.mobius_from(i) if i != 0 else {h: v for h, v in enumerate(self.mobius_bottom)}
        for h, v in mu.items():
            if self.leq(h, j):
                coeffs[rj - self.ranks[h]] += v
        return Poly(coeffs)

    def characteristic_polynomial(self) -> Poly:
        coeffs = [0] * (self.rank + 1)
        for h, v in enumerate(self.mobius_bottom):
            coeffs[self.rank - self.ranks[h]] += v
        return Poly(coeffs)

    # ------------------------------------------------------------ structure
    def join(self, matroid: Matroid, i, j) -> int:
        return self.index[matroid.closure(self.masks[i] | self.masks[j])]

    def meet(self, i, j) -> int:
        return self.index[self.masks[i] & self.masks[j]]

    def is_modular(self, matroid: Matroid) -> bool:
        ranks, masks = self.ranks, self.masks
        n = len(masks)
        for i in range(1, n - 1):
            for j in range(i + 1, n - 1):
                mi, mj = masks[i], masks[j]
                if mi & ~mj == 0 or mj & ~mi == 0:
                    continue
                meet = self.index[mi & mj]
                join = matroid.closure(mi | mj)
                if ranks[i] + ranks[j] != ranks[self.index[join]] + ranks[meet]:
                    return False
        return True

    def sub_interval(self, lo: int, hi: int, relabel=None) -> "FlatLattice":
        """The interval [lo, hi] as its own lattice; masks passed through ``relabel``."""
        members = [h for h in self.up_set(lo) if self.leq(h, hi)]
        members.sort(key=lambda h: (self.ranks[h], self.masks[h]))
        pos = {h: k for k, h in enumerate(members)}
        base = self.ranks[lo]
        masks = [relabel(self.masks[h]) if relabel else self.masks[h] for h in members]
        ranks = [self.ranks[h] - base for h in members]
        upper = [[pos[g] for g in self.upper[h] if g in pos] for h in members]
        lower = [[pos[g] for g in self.lower[h] if g in pos] for h in members]
        return FlatLattice(masks, ranks, upper, lower)


def _enumerate(M: Matroid, max_flats: int) -> FlatLattice:
    bottom = M.closure(0)
    masks = [bottom]
    ranks = [0]
    upper = [[]]
    index = {bottom: 0}
    level = [0]
    full = M.full_mask
    r = 0
    while level:
        nxt = []
        for f in level:
            fm = masks[f]
            remaining = full & ~fm
            covers = upper[f]
            while remaining:
                bit = remaining & -remaining
                g = M.closure(fm | bit)
                remaining &= ~g
                k = index.get(g)
                if k is None:
                    k = len(masks)
                    if k >= max_flats:
                        raise LatticeTooLarge(f"more than {max_flats} flats")
                    index[g] = k
                    masks.append(g)
                    ranks.append(r + 1)
                    upper.append([])
                    nxt.append(k)
                covers.append(k)
        level = nxt
        r += 1
    lower = [[] for _ in masks]
    for f, ups in enumerate(upper):
        for g in ups:
            lower[g].append(f)
    return FlatLattice(masks, ranks, upper, lower)


def lattice_of_flats(M: Matroid, max_flats: int = DEFAULT_MAX_FLATS,
                     max_ground: int = DEFAULT_MAX_GROUND) -> FlatLattice:
    """Enumerate L(M), caching the result on the matroid.

    Interval minors reuse the parent's lattice when it has already been built.
    """
    if M._lattice is not None:
        return M._lattice
    if isinstance(M, Minor) and M.interval and M.parent._lattice is not None:
        parent = M.parent._lattice
        lo = parent.index[M.parent.closure(M.contracted)]
        hi = parent.index[M.top_mask]
        L = parent.sub_interval(lo, hi, relabel=M._lower)
    else:
        if M.size > max_ground:
            raise LatticeTooLarge(f"ground set of size {M.size} exceeds cap {max_ground}")
        L = _enumerate(M, max_flats)
    M._lattice = L
    return L


def characteristic_polynomial(M: Matroid, **kw) -> Poly:
    """chi_M(t) = sum over flats F of mu(bottom, F) t^(rk M - rk F)."""
    fam = M.family
    if fam and fam[0] == "braid":
        return braid_characteristic(fam[1])
    if fam and fam[0] == "uniform":
        return uniform_characteristic(fam[1], fam[2])
    return lattice_of_flats(M, **kw).characteristic_polynomial()


def uniform_characteristic(m: int, d: int) -> Poly:
    from math import comb

    n = m + d
    if d == 0:
        return Poly([1])
    coeffs = [0] * (d + 1)
    for k in range(d):
        coeffs[d - k] = (-1) ** k * comb(n, k)
    coeffs[0] = -sum(coeffs)
    return Poly(coeffs)


def braid_characteristic(n: int) -> Poly:
    """(t-1)(t-2)...(t-n+1)."""
    p = Poly([1])
    for k in range(1, n):
        p = p * Poly([-k, 1])
    return p


def is_modular_lattice(M: Matroid) -> bool:
    return lattice_of_flats(M).is_modular(M)


def flat_elements(L: FlatLattice, i: int) -> list[int]:
    return bits(L.masks[i])
