"""Minor and topological-minor containment for small simple graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .families import catalog
from .graph import Graph, canonical_code, simple_underlying

DELETE_EDGE = "DELETE_EDGE"
DELETE_VERTEX = "DELETE_VERTEX"
CONTRACT_EDGE = "CONTRACT_EDGE"


@dataclass(frozen=True)
class MinorWitness:
    """Operations turning the host into a copy of the target.

    Vertex ids in each operation refer to the graph produced by the
    operations before it.  Deleting or contracting away vertex ``v`` shifts
    every larger id down by one; a contraction keeps the smaller endpoint.
    """

    target_name: str
    operations: tuple

    @property
    def edge_deletions(self) -> int:
        return sum(1 for op, *_ in self.operations if op == DELETE_EDGE)

    def __str__(self):
        if not self.operations:
            return f"{self.target_name}: (identity)"
        ops = "; ".join(f"{op} {' '.join(map(str, args))}" for op, *args in self.operations)
        return f"{self.target_name}: {ops}"


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = (min(u, v), max(u, v))
    return Graph(g.n, [x for x in g.edges if x != e])


def delete_vertex(g: Graph, v: int) -> Graph:
    s = lambda x: x - 1 if x > v else x
    return Graph(g.n - 1, [(s(a), s(b)) for a, b in g.edges if v not in (a, b)])


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge ``v`` into ``u`` (keeping the smaller id); loops and parallels dropped."""
    if not g.has_edge(u, v):
        raise ValueError(f"no edge ({u}, {v}) to contract")
    keep, gone = min(u, v), max(u, v)
    s = lambda x: x - 1 if x > gone else x
    edges = set()
    for a, b in g.edges:
        a = keep if a == gone else a
        b = keep if b == gone else b
        if a != b:
            edges.add((s(min(a, b)), s(max(a, b))))
    return Graph(g.n - 1, sorted(edges))


_APPLY = {DELETE_EDGE: delete_edge, DELETE_VERTEX: delete_vertex, CONTRACT_EDGE: contract_edge}


def replay(host: Graph, operations) -> Graph:
    g = simple_underlying(host)
    for op, *args in operations:
        g = _APPLY[op](g, *args)
    return g


def _isolated(g):
    return [v for v in range(g.n) if not g.adj[v]]


class _MinorSearch:
    def __init__(self, h: Graph):
        self.h = simple_underlying(h)
        self.code = canonical_code(self.h)
        self.hn, self.hm = self.h.n, self.h.num_edges
        self.hdeg = sorted(self.h.degrees, reverse=True)
        self.failed = set()

    def run(self, g: Graph, script: list):
        hn, hm = self.hn, self.hm
        n, m = g.n, g.num_edges
        if n < hn or m < hm:
            return None
        iso = len(_isolated(g))
        # every vertex to lose beyond the isolated ones costs at least one edge
        if m - hm < n - hn - iso:
            return None
        if n == hn:
            # only edge deletions remain: need a spanning supergraph
            if any(a < b for a, b in zip(sorted(g.degrees, reverse=True), self.hdeg)):
                return None
            if m == hm:
                return list(script) if canonical_code(g) == self.code else None
        code = canonical_code(g)
        if code in self.failed:
            return None
        if n > hn:
            for v in _isolated(g):
                found = self.run(delete_vertex(g, v), script + [(DELETE_VERTEX, v)])
                if found is not None:
                    return found
                # isolated vertices are interchangeable
                break
            for u, v in g.edges:
                found = self.run(contract_edge(g, u, v), script + [(CONTRACT_EDGE, u, v)])
                if found is not None:
                    return found
        for u, v in g.edges:
            found = self.run(delete_edge(g, u, v), script + [(DELETE_EDGE, u, v)])
            if found is not None:
                return found
        if n > hn:
            for v in range(g.n):
                if g.adj[v]:
                    found = self.run(delete_vertex(g, v), script + [(DELETE_VERTEX, v)])
                    if found is not None:
                        return found
        self.failed.add(code)
        return None


def has_minor(g: Graph, h: Graph, target_name: str = "H"):
    """A :class:`MinorWitness` if ``h`` is a minor of ``g``, else ``None``."""
    search = _MinorSearch(h)
    script = search.run(simple_underlying(g), [])
    if script is None:
        return None
    w = MinorWitness(target_name, tuple(script))
    assert canonical_code(replay(g, w.operations)) == search.code
    return w


def minor_by_edge_deletion(g: Graph, h: Graph, target_name: str = "H", max_delete: int = 2):
    """Look for ``h`` as a spanning subgraph of ``g`` missing at most ``max_delete`` edges."""
    g = simple_underlying(g)
    k = g.num_edges - h.num_edges
    if g.n != h.n or not 0 <= k <= max_delete:
        return None
    code = canonical_code(simple_underlying(h))
    for dropped in itertools.combinations(g.edges, k):
        rest = [e for e in g.edges if e not in dropped]
        if canonical_code(Graph(g.n, rest)) == code:
            # deleting edges keeps vertex ids, so the pairs stay valid in order
            return MinorWitness(target_name, tuple((DELETE_EDGE, u, v) for u, v in dropped))
    return None


def has_topological_minor(g: Graph, h: Graph) -> bool:
    """Whether ``g`` contains a subdivision of ``h``."""
    g = simple_underlying(g)
    h = simple_underlying(h)
    if h.num_edges == 0:
        return g.n >= h.n
    if max(h.degrees) <= 3:
        return has_minor(g, h) is not None
    return _subdivision_search(g, h)


def _subdivision_search(g: Graph, h: Graph) -> bool:
    if g.n < h.n or g.num_edges < h.num_edges:
        return False
    gdeg, hdeg = g.degrees, h.degrees
    order = sorted(range(h.n), key=lambda v: -hdeg[v])
    hedges = sorted(h.distinct_edges(), key=lambda e: (order.index(e[0]), order.index(e[1])))
    gadj = g.adj
    image = {}
    used = set()

    def route(k, used_inner):
        if k == len(hedges):
            return True
        a, b = image[hedges[k][0]], image[hedges[k][1]]
        branch = set(image.values())

        def dfs(v, seen):
            if gadj[v] >> b & 1 and route(k + 1, used_inner | (seen - {a})):
                return True
            m = gadj[v]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w in branch or w in seen or w in used_inner:
                    continue
                seen.add(w)
                if dfs(w, seen):
                    return True
                seen.discard(w)
            return False

        return dfs(a, {a})

    def place(i):
        if i == len(order):
            return route(0, frozenset())
        x = order[i]
        for v in range(g.n):
            if v in used or gdeg[v] < hdeg[x]:
                continue
            image[x] = v
            used.add(v)
            if place(i + 1):
                return True
            used.discard(v)
            del image[x]
        return False

    return place(0)


def ik_by_catalog(g: Graph):
    """``(name, witness)`` if ``g`` has the Heawood graph or Cousin 110 as a minor."""
    hea = catalog("HEAWOOD")
    w = minor_by_edge_deletion(g, hea, "HEAWOOD")
    if w is None and g.n >= hea.n and g.num_edges >= hea.num_edges:
        w = has_minor(g, hea, "HEAWOOD")
    if w is not None:
        return "HEAWOOD", w
    w = has_minor(g, catalog("COUSIN110"), "COUSIN110")
    if w is not None:
        return "COUSIN110", w
    return None
