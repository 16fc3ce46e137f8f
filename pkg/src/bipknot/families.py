"""Triangle-star exchanges, cousin families and the named-graph catalog."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, canonical_code, canonical_form

FANO_LINES = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]


def _complete_multipartite(sizes):
    labels = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(labels)
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                     if labels[u] != labels[v]])


def heawood() -> Graph:
    """Point-line incidence graph of the Fano plane (points 0-6, lines 7-13)."""
    return Graph(14, [(p, 7 + i) for i, line in enumerate(FANO_LINES) for p in line],
                 ["A"] * 7 + ["B"] * 7)


def cousin110() -> Graph:
    """K5,5 minus the edges of the 3-edge path b1-a1-b2-a2.

    A = 0..4 (a1 = 0, a2 = 1), B = 5..9 (b1 = 5, b2 = 6).
    """
    k55 = _complete_multipartite([5, 5])
    edges = [e for e in k55.edges if e not in {(0, 5), (0, 6), (1, 6)}]
    return Graph(10, edges, ["A"] * 5 + ["B"] * 5)


CATALOG_NAMES = ("K7", "K5", "K33", "K55", "K3311", "HEAWOOD", "COUSIN110")


def catalog(name: str) -> Graph:
    key = name.upper().replace(",", "").replace("_", "")
    if key == "K7":
        return _complete_multipartite([1] * 7)
    if key == "K5":
        return _complete_multipartite([1] * 5)
    if key == "K33":
        return _complete_multipartite([3, 3])
    if key == "K55":
        return _complete_multipartite([5, 5])
    if key == "K3311":
        return _complete_multipartite([3, 3, 1, 1])
    if key == "HEAWOOD":
        return heawood()
    if key == "COUSIN110":
        return cousin110()
    raise KeyError(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG_NAMES)}")


def triangles(g: Graph) -> list:
    adj = g.adj
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not adj[a] >> b & 1:
                continue
            common = adj[a] & adj[b] & ~((1 << (b + 1)) - 1)
            while common:
                low = common & -common
                out.append((a, b, low.bit_length() - 1))
                common ^= low
    return out


def nabla_y(g: Graph, triangle) -> Graph:
    """Replace the triangle ``abc`` by a new vertex joined to ``a``, ``b``, ``c``."""
    a, b, c = triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise GraphError(f"{triangle} is not a triangle")
    edges = list(g.edges)
    for e in ((a, b), (b, c), (a, c)):
        edges.remove(tuple(sorted(e)))
    v = g.n
    edges += [(a, v), (b, v), (c, v)]
    return Graph(g.n + 1, edges)


def y_nabla(g: Graph, v: int, merge: bool = True) -> Graph:
    """Remove the degree-3 vertex ``v`` and join its neighbours pairwise.

    An edge that would double an existing one is dropped when ``merge`` is
    set; otherwise the parallel edge is kept.
    """
    if g.degree(v) != 3:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, not 3")
    nbrs = g.neighbors(v)
    if len(nbrs) != 3:
        raise GraphError(f"vertex {v} has a repeated neighbour")
    edges = [e for e in g.edges if v not in e]
    present = set(edges)
    for x, y in itertools.combinations(nbrs, 2):
        if not (merge and (x, y) in present):
            edges.append((x, y))
    shift = lambda u: u - 1 if u > v else u
    return Graph(g.n - 1, [(shift(x), shift(y)) for x, y in edges])


def y_nabla_sites(g: Graph) -> list:
    return [v for v in range(g.n) if g.degrees[v] == 3 and len(g.neighbors(v)) == 3]


def creates_parallel(g: Graph, v: int) -> bool:
    nbrs = g.neighbors(v)
    return any(g.has_edge(x, y) for x, y in itertools.combinations(nbrs, 2))


class FamilyTooLarge(RuntimeError):
    pass


@dataclass
class Family:
    seed_name: str
    members: set = field(default_factory=set)
    member_graphs: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.members)

    def graphs(self) -> list:
        return [self.member_graphs[c] for c in sorted(self.members)]


def neighbours_in_family(g: Graph, mode: str = "size") -> list:
    """Graphs one move away from ``g``.

    ``mode`` selects how Y-triangle moves that would double an edge are
    treated: ``"size"`` skips them (every cousin keeps the edge count),
    ``"merge"`` applies them with the doubled edge merged.
    """
    out = [nabla_y(g, t) for t in triangles(g)]
    for v in y_nabla_sites(g):
        if mode == "size" and creates_parallel(g, v):
            continue
        out.append(y_nabla(g, v))
    return out


def cousins(seed: Graph, seed_name: str = "", cap: int = 10_000, mode: str = "size") -> Family:
    """Breadth-first closure of ``seed`` under both moves, up to isomorphism."""
    fam = Family(seed_name)
    start = canonical_form(seed)
    code = canonical_code(start)
    fam.members.add(code)
    fam.member_graphs[code] = start
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for h in neighbours_in_family(g, mode):
            c = canonical_code(h)
            if c in fam.members:
                continue
            if len(fam.members) >= cap:
                raise FamilyTooLarge(
                    f"family of {seed_name or seed!r} exceeds {cap} members "
                    f"(frontier {len(queue)}, last edge count {h.num_edges})")
            h = canonical_form(h)
            fam.members.add(c)
            fam.member_graphs[c] = h
            queue.append(h)
    return fam


def nabla_y_descendants(seed: Graph, cap: int = 10_000) -> dict:
    """``seed`` and every graph reachable from it by triangle-to-star moves alone."""
    start = canonical_form(seed)
    out = {canonical_code(start): start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for t in triangles(g):
            h = nabla_y(g, t)
            c = canonical_code(h)
            if c not in out:
                if len(out) >= cap:
                    raise FamilyTooLarge(f"more than {cap} descendants")
                out[c] = canonical_form(h)
                queue.append(out[c])
    return out
