"""Matroids given by a rank oracle on bit-mask subsets of ``range(size)``.

Backings: uniform, graphic, linear over GF(p), direct sum, and minors
(which cover localizations, restrictions, contractions and simplification).
A matroid may carry a ``family`` tag such as ``("braid", 5)``; the KL engine
uses the tag to dispatch to closed forms and orbit-compressed recursions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path


class MatroidError(ValueError):
    pass


class SpecError(MatroidError):
    """Malformed matroid spec string; ``pos`` is the offending character offset."""

    def __init__(self, message, spec="", pos=0):
        super().__init__(f"{message} (at position {pos} in {spec!r})")
        self.spec = spec
        self.pos = pos


@dataclass(frozen=True)
class GroundSet:
    size: int
    labels: tuple | None = None

    def __post_init__(self):
        if self.size < 0:
            raise MatroidError("ground set size must be non-negative")
        if self.labels is not None:
            if len(self.labels) != self.size or len(set(self.labels)) != self.size:
                raise MatroidError("labels must be distinct and match the ground set size")


@dataclass(frozen=True)
class Flat:
    members: int
    rank: int

    def elements(self):
        return bits(self.members)


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _as_mask(S) -> int:
    if isinstance(S, Flat):
        return S.members
    if isinstance(S, int):
        return S
    m = 0
    for e in S:
        m |= 1 << e
    return m


class Matroid:
    """Base class. Subclasses implement ``rank(mask)``; ``closure`` has a generic fallback."""

    family: tuple | None = None

    def __init__(self, size: int, labels=None, family=None):
        self.ground = GroundSet(size, tuple(labels) if labels is not None else None)
        self.family = family
        self._lattice = None

    @property
    def size(self) -> int:
        return self.ground.size

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def rank(self, mask: int) -> int:
        raise NotImplementedError

    def closure(self, mask: int) -> int:
        r = self.rank(mask)
        out = mask
        for e in range(self.size):
            bit = 1 << e
            if not mask & bit and self.rank(mask | bit) == r:
                out |= bit
        return out

    @cached_property
    def full_rank(self) -> int:
        return self.rank(self.full_mask)

    def is_flat(self, mask) -> bool:
        mask = _as_mask(mask)
        return self.closure(mask) == mask

    def is_loop(self, e: int) -> bool:
        return self.rank(1 << e) == 0

    def flat(self, S) -> Flat:
        mask = self.closure(_as_mask(S))
        return Flat(mask, self.rank(mask))

    def describe(self) -> str:
        if self.family:
            return f"{self.family[0]}{self.family[1:]}"
        return f"{type(self).__name__}(size={self.size}, rank={self.full_rank})"

    def __repr__(self):
        return f"<{self.describe()}>"


class UniformMatroid(Matroid):
    """U_{m,d}: rank d on m+d elements."""

    def __init__(self, m: int, d: int):
        if m < 0 or d < 0:
            raise MatroidError("uniform matroid parameters must be non-negative")
        super().__init__(m + d, family=("uniform", m, d))
        self.m, self.d = m, d

    def rank(self, mask):
        return min(popcount(mask), self.d)

    def closure(self, mask):
        return mask if popcount(mask) < self.d else self.full_mask


class GraphicMatroid(Matroid):
    """Cycle matroid of a (multi)graph; element i is ``edges[i]``."""

    def __init__(self, num_vertices: int, edges, family=None):
        edges = [tuple(e) for e in edges]
        for e in edges:
            if len(e) != 2 or not all(isinstance(v, int) and 0 <= v < num_vertices for v in e):
                raise MatroidError(f"malformed edge {e!r} for {num_vertices} vertices")
        super().__init__(len(edges), labels=[f"{u}-{v}" for u, v in edges] if len(set(edges)) == len(edges) else None,
                         family=family)
        self.num_vertices = num_vertices
        self.edges = edges

    def _components(self, mask):
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in bits(mask):
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r, find

    def rank(self, mask):
        return self._components(mask)[0]

    def closure(self, mask):
        _, find = self._components(mask)
        out = mask
        for i, (u, v) in enumerate(self.edges):
            if find(u) == find(v):
                out |= 1 << i
        return out

    def graph(self):
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(range(self.num_vertices))
        g.add_edges_from(self.edges)
        return g


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class LinearMatroid(Matroid):
    """Column matroid of an integer matrix reduced mod a prime p."""

    def __init__(self, matrix, p: int):
        if not _is_prime(p):
            raise MatroidError(f"field characteristic {p} is not prime")
        rows = [[int(x) % p for x in row] for row in matrix]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise MatroidError("matrix rows have unequal length")
        super().__init__(ncols)
        self.p = p
        self.columns = [tuple(r[j] for r in rows) for j in range(ncols)]

    def rank(self, mask):
        p = self.p
        vecs = [list(self.columns[j]) for j in bits(mask)]
        r = 0
        nrows = len(self.columns[0]) if self.columns else 0
        for row in range(nrows):
            piv = next((k for k in range(r, len(vecs)) if vecs[k][row]), None)
            if piv is None:
                continue
            vecs[r], vecs[piv] = vecs[piv], vecs[r]
            inv = pow(vecs[r][row], p - 2, p)
            for k in range(r + 1, len(vecs)):
                f = vecs[k][row] * inv % p
                if f:
                    vecs[k] = [(a - f * b) % p for a, b in zip(vecs[k], vecs[r])]
            r += 1
        return r


class DirectSum(Matroid):
    def __init__(self, left: Matroid, right: Matroid):
        super().__init__(left.size + right.size)
        self.left, self.right = left, right
        self._shift = left.size
        self._lmask = left.full_mask

    def rank(self, mask):
        return self.left.rank(mask & self._lmask) + self.right.rank(mask >> self._shift)

    def closure(self, mask):
        return self.left.closure(mask & self._lmask) | (self.right.closure(mask >> self._shift) << self._shift)


class Minor(Matroid):
    """``(parent | (kept ∪ contracted)) / contracted`` on the elements ``kept``.

    Element i of the minor is parent element ``kept[i]``.  When ``contracted``
    and ``kept ∪ contracted`` are both flats of the parent, the lattice of the
    minor is the interval between them and is sliced from the parent's lattice.
    """

    def __init__(self, parent: Matroid, kept, contracted: int = 0, family=None, interval=False):
        kept = tuple(kept)
        super().__init__(len(kept), family=family)
        self.parent = parent
        self.kept = kept
        self.contracted = contracted
        self.interval = interval
        self._base = parent.rank(contracted)

    def _lift(self, mask):
        out = self.contracted
        for i in bits(mask):
            out |= 1 << self.kept[i]
        return out

    def _lower(self, pmask):
        out = 0
        for i, e in enumerate(self.kept):
            if pmask >> e & 1:
                out |= 1 << i
        return out

    def rank(self, mask):
        return self.parent.rank(self._lift(mask)) - self._base

    def closure(self, mask):
        return self._lower(self.parent.closure(self._lift(mask)))

    @property
    def top_mask(self) -> int:
        """The kept ∪ contracted set as a parent mask."""
        return self._lift(self.full_mask)


# ---------------------------------------------------------------- builders

def uniform(m: int, d: int) -> UniformMatroid:
    return UniformMatroid(m, d)


def graphic(edges, num_vertices=None, family=None) -> GraphicMatroid:
    edges = [tuple(e) for e in edges]
    if num_vertices is None:
        num_vertices = 1 + max((max(e) for e in edges), default=-1)
    return GraphicMatroid(num_vertices, edges, family=family)


def complete_graph(n: int) -> GraphicMatroid:
    """Braid matroid B_n."""
    if n < 1:
        raise MatroidError("complete graph needs n >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return GraphicMatroid(n, edges, family=("braid", n))


def complete_bipartite(n: int) -> GraphicMatroid:
    """Graphic matroid of K_{2,n} (hubs 0 and 1)."""
    if n < 0:
        raise MatroidError("n must be non-negative")
    edges = [(h, 2 + i) for i in range(n) for h in (0, 1)]
    return GraphicMatroid(n + 2, edges, family=("k2n", n))


def thagomizer(n: int) -> GraphicMatroid:
    """T_n: K_{2,n} plus the edge joining the hubs.  The hub edge is the last element."""
    if n < 0:
        raise MatroidError("n must be non-negative")
    edges = [(h, 2 + i) for i in range(n) for h in (0, 1)] + [(0, 1)]
    return GraphicMatroid(n + 2, edges, family=("thagomizer", n))


def linear(matrix, p: int) -> LinearMatroid:
    return LinearMatroid(matrix, p)


def direct_sum(m1: Matroid, m2: Matroid) -> DirectSum:
    return DirectSum(m1, m2)


# ---------------------------------------------------------------- minors

def _check_flat(M: Matroid, F) -> int:
    mask = _as_mask(F)
    if mask & ~M.full_mask or M.closure(mask) != mask:
        raise MatroidError("not a flat of the matroid")
    return mask


def localization(M: Matroid, F) -> Minor:
    """M_F: the elements of F with independence inherited from M."""
    mask = _check_flat(M, F)
    return Minor(M, bits(mask), 0, interval=True)


def restriction(M: Matroid, F) -> Minor:
    """M^F: the contraction of M by the flat F, on the complement of F."""
    mask = _check_flat(M, F)
    return Minor(M, bits(M.full_mask & ~mask), mask, interval=True)


def _contracted_family(M: Matroid, e: int):
    fam = M.family
    if fam is None:
        return None
    kind = fam[0]
    if kind == "uniform" and fam[2] >= 1:
        return ("uniform", fam[1], fam[2] - 1)
    if kind == "braid" and fam[1] >= 2:
        return ("braid", fam[1] - 1)
    if kind == "thagomizer" and fam[1] >= 1 and e != 2 * fam[1]:
        return ("thagomizer", fam[1] - 1)
    if kind == "k2n" and fam[1] >= 1:
        return ("thagomizer", fam[1] - 1)
    return None


def contract_element(M: Matroid, e: int) -> Minor:
    """M/e realised as the restriction at closure({e}); parallels of e drop out."""
    if not 0 <= e < M.size:
        raise MatroidError(f"element {e} not in ground set")
    if M.is_loop(e):
        raise MatroidError(f"element {e} is a loop")
    F = M.closure(1 << e)
    out = restriction(M, F)
    out.family = _contracted_family(M, e)
    return out


def simplify(M: Matroid) -> Matroid:
    """Drop loops and keep the first element of each parallel class."""
    loops = M.closure(0)
    seen = loops
    keep = []
    for e in range(M.size):
        if seen >> e & 1:
            continue
        keep.append(e)
        seen |= M.closure(1 << e)
    if len(keep) == M.size:
        return M
    return Minor(M, keep, 0, family=M.family)


def is_connected(M: Matroid) -> bool:
    """No proper separator.  Graphic backings use 2-connectivity of the graph."""
    if M.size <= 1:
        return True
    if isinstance(M, GraphicMatroid) and all(u != v for u, v in M.edges):
        import networkx as nx

        g = nx.Graph()
        g.add_edges_from(M.edges)
        return nx.is_biconnected(g)
    # components of the fundamental-circuit graph of a greedy basis
    basis = 0
    for e in range(M.size):
        if M.rank(basis | 1 << e) > popcount(basis):
            basis |= 1 << e
    r = popcount(basis)
    comp = list(range(M.size))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for e in range(M.size):
        if basis >> e & 1:
            continue
        for b in bits(basis):
            if M.rank((basis & ~(1 << b)) | 1 << e) == r:
                comp[find(e)] = find(b)
    return len({find(x) for x in range(M.size)}) == 1


def rank_and_closure(M: Matroid, S) -> tuple[int, Flat]:
    mask = _as_mask(S)
    if mask & ~M.full_mask:
        raise MatroidError("subset not contained in the ground set")
    cl = M.closure(mask)
    return M.rank(mask), Flat(cl, M.rank(cl))


# ---------------------------------------------------------------- input files / spec strings

def read_graph_file(path) -> GraphicMatroid:
    edges = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MatroidError(f"{path}:{lineno}: expected 'u v' with non-negative integers")
        edges.append((int(parts[0]), int(parts[1])))
    return graphic(edges)


def read_matrix_file(path, p: int) -> LinearMatroid:
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(x) for x in line.replace(",", " ").split()])
        except ValueError:
            raise MatroidError(f"{path}:{lineno}: non-integer matrix entry") from None
    return linear(rows, p)


_INT_ARGS = re.compile(r"^\d+(,\d+)*$")
_EDGE_ARGS = re.compile(r"^\d+-\d+(,\d+-\d+)*$")


def parse_spec(spec: str, _offset: int = 0) -> Matroid:
    """Parse ``uniform:m,d``, ``complete:n``, ``thagomizer:n``, ``k2n:n``,
    ``graph:PATH``, ``edges:u-v,u-v,...``, ``linear:PATH:p`` or
    ``dsum:(SPEC)+(SPEC)``."""
    full = spec
    spec = spec.strip()
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise SpecError("missing ':' after family name", full, _offset + len(spec))
    argpos = _offset + len(kind) + 1

    def ints(expected):
        if not _INT_ARGS.match(rest):
            raise SpecError("expected comma-separated non-negative integers", full, argpos)
        vals = [int(x) for x in rest.split(",")]
        if len(vals) != expected:
            raise SpecError(f"expected {expected} integer(s), got {len(vals)}", full, argpos)
        return vals

    if kind == "uniform":
        m, d = ints(2)
        return uniform(m, d)
    if kind == "complete":
        (n,) = ints(1)
        if n < 1:
            raise SpecError("complete graph needs n >= 1", full, argpos)
        return complete_graph(n)
    if kind == "thagomizer":
        (n,) = ints(1)
        return thagomizer(n)
    if kind == "k2n":
        (n,) = ints(1)
        return complete_bipartite(n)
    if kind == "graph":
        if not rest:
            raise SpecError("missing graph file path", full, argpos)
        return read_graph_file(rest)
    if kind == "edges":
        if not _EDGE_ARGS.match(rest):
            raise SpecError("expected comma-separated u-v pairs", full, argpos)
        return graphic([tuple(int(x) for x in tok.split("-")) for tok in rest.split(",")])
    if kind == "linear":
        path, sep2, p = rest.rpartition(":")
        if not sep2 or not p.isdigit():
            raise SpecError("expected linear:PATH:p", full, argpos + len(rest))
        return read_matrix_file(path, int(p))
    if kind == "dsum":
        left, right, rpos = _split_dsum(rest, full, argpos)
        return direct_sum(parse_spec(left, argpos + 1), parse_spec(right, rpos))
    raise SpecError(f"unknown matroid family {kind!r}", full, _offset)


def _split_dsum(rest, full, pos):
    if not rest.startswith("("):
        raise SpecError("expected '(' after dsum:", full, pos)
    depth = 0
    for i, ch in enumerate(rest):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                left = rest[1:i]
                tail = rest[i + 1:]
                if not tail.startswith("+(") or not tail.endswith(")"):
                    raise SpecError("expected '+(SPEC)' after first operand", full, pos + i + 1)
                return left, tail[2:-1], pos + i + 3
    raise SpecError("unbalanced parentheses", full, pos + len(rest))


def build_matroid(desc) -> Matroid:
    """Build from a spec string or a tuple such as ``("uniform", 1, 3)``."""
    if isinstance(desc, str):
        return parse_spec(desc)
    kind, *args = desc
    builders = {
        "uniform": uniform,
        "complete_graph": complete_graph,
        "braid": complete_graph,
        "thagomizer": thagomizer,
        "k2n": complete_bipartite,
        "complete_bipartite": complete_bipartite,
        "complete_bipartite_plus_edge": complete_bipartite,
        "graphic": graphic,
        "linear": linear,
    }
    if kind == "dsum":
        return direct_sum(build_matroid(args[0]), build_matroid(args[1]))
    if kind not in builders:
        raise MatroidError(f"unknown family {kind!r}")
    return builders[kind](*args)
