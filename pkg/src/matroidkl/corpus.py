"""Test corpora: matroid families by parameter range and a bundled list of small graphs."""

from __future__ import annotations

from importlib import resources

from .matroid import (complete_bipartite, complete_graph, graphic, thagomizer,
                      uniform)

GRAPH_FILE = "graphs_2conn_le8.txt"


def generate_graph_corpus(max_edges: int = 8) -> list[tuple[int, list[tuple[int, int]]]]:
    """Non-isomorphic 2-connected simple graphs with at most ``max_edges`` edges.

    A 2-connected graph on n vertices has at least n edges, so for
    ``max_edges <= 8`` the networkx atlas (up to 7 vertices) misses only the
    8-cycle.
    """
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    if max_edges > 8:
        raise ValueError("the atlas covers at most 8 edges here")
    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n < 3 or G.number_of_edges() > max_edges:
            continue
        if nx.is_biconnected(G):
            out.append((n, sorted(tuple(sorted(e)) for e in G.edges())))
    if max_edges == 8:
        out.append((8, [(i, (i + 1) % 8) if i < 7 else (0, 7) for i in range(8)]))
    out.sort(key=lambda g: (len(g[1]), g[0], g[1]))
    return out


def write_graph_corpus(path, max_edges: int = 8):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# vertices: edge list (u-v); 2-connected, pairwise non-isomorphic\n")
        for n, edges in generate_graph_corpus(max_edges):
            fh.write(f"{n}: " + " ".join(f"{u}-{v}" for u, v in edges) + "\n")


def load_graph_corpus(max_edges: int = 8) -> list[tuple[int, list[tuple[int, int]]]]:
    text = resources.files("matroidkl.data").joinpath(GRAPH_FILE).read_text(encoding="utf-8")
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(":")
        edges = [tuple(int(x) for x in tok.split("-")) for tok in rest.split()]
        if len(edges) <= max_edges:
            out.append((int(head), edges))
    return out


def graph_spec(edges) -> str:
    return "edges:" + ",".join(f"{u}-{v}" for u, v in edges)


def family_corpus(families, max_n: int, max_edges: int = 8):
    """Yield (spec, builder) pairs in a fixed order."""
    for fam in families:
        if fam == "uniform":
            for total in range(1, max_n + 1):
                for d in range(1, total + 1):
                    m = total - d
                    yield f"uniform:{m},{d}", (lambda m=m, d=d: uniform(m, d))
        elif fam == "thagomizer":
            for n in range(0, max_n + 1):
                yield f"thagomizer:{n}", (lambda n=n: thagomizer(n))
        elif fam == "k2n":
            for n in range(2, max_n + 1):
                yield f"k2n:{n}", (lambda n=n: complete_bipartite(n))
        elif fam == "braid":
            for n in range(2, max_n + 1):
                yield f"complete:{n}", (lambda n=n: complete_graph(n))
        elif fam == "graphic":
            for n, edges in load_graph_corpus(max_edges):
                yield graph_spec(edges), (lambda n=n, e=edges: graphic(e, n))
        else:
            raise ValueError(f"unknown family {fam!r}")
