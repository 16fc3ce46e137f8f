"""Vertex-pair deletion, degree 1/2 reduction and count-equation traces."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import MAX_MULTIPLICITY, Graph, GraphError

DELETED = "deleted-with-pair"
PRUNED = "degree1-prune"
SUPPRESSED = "degree2-suppress"
ISOLATED = "isolated"


@dataclass(frozen=True)
class ReductionTrace:
    removed_pair: tuple
    ne: int
    nv3: int
    nv4: int
    nvy: int
    original_edges: int
    actual_edges: int
    removed_vertices: tuple = ()
    vertex_map: tuple = field(default=(), compare=False)

    @property
    def predicted_edges(self) -> int:
        return self.original_edges - self.ne - self.nv3 - self.nv4 - self.nvy

    @property
    def matches(self) -> bool:
        return self.predicted_edges == self.actual_edges

    def as_row(self) -> str:
        a, b = self.removed_pair
        return "\t".join(map(str, (a, b, self.ne, self.nv3, self.nv4, self.nvy,
                                   self.predicted_edges, self.actual_edges)))


TRACE_HEADER = "a\tb\tNE\tNV3\tNV4\tNVY\tpredicted\tactual"


def neighbors_of_degree(g: Graph, v: int, n: int) -> set:
    """``V_n(v)``: neighbours of ``v`` whose degree in ``g`` is ``n``."""
    deg = g.degrees
    return {u for u in g.neighbors(v) if deg[u] == n}


def _adjacency(g: Graph) -> list:
    adj = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    return adj


def _to_graph(adj, alive) -> tuple:
    keep = sorted(alive)
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    for u in keep:
        for w, k in adj[u].items():
            if u < w:
                edges.extend([(index[u], index[w])] * k)
    return Graph(len(keep), edges), tuple(keep)


def _drop(adj, alive, s, log):
    """Remove the vertices in ``s`` and then any vertex left isolated."""
    touched = set()
    for v in s:
        for w in adj[v]:
            if w not in s:
                del adj[w][v]
                touched.add(w)
        adj[v] = {}
        alive.discard(v)
        log.append((v, DELETED))
    for w in sorted(touched):
        if not adj[w]:
            alive.discard(w)
            log.append((w, DELETED))


def _cascade(adj, alive, log):
    """Prune degree <= 1 and suppress degree 2 vertices, smallest id first."""
    deg = {v: sum(adj[v].values()) for v in alive}
    while True:
        v = -1
        for u in sorted(alive):
            if deg[u] <= 2:
                v = u
                break
        if v < 0:
            return
        nbrs = adj[v]
        if deg[v] == 0:
            log.append((v, ISOLATED))
        elif deg[v] == 1:
            (x,) = nbrs
            del adj[x][v]
            deg[x] -= 1
            log.append((v, PRUNED))
        elif len(nbrs) == 1:
            # both edges run to the same neighbour: the would-be loop is dropped
            (x,) = nbrs
            del adj[x][v]
            deg[x] -= 2
            log.append((v, SUPPRESSED))
        else:
            x, y = nbrs
            del adj[x][v]
            del adj[y][v]
            k = adj[x].get(y, 0) + 1
            if k > MAX_MULTIPLICITY:
                raise GraphError("reduction exceeded the multiplicity cap")
            adj[x][y] = k
            adj[y][x] = k
            log.append((v, SUPPRESSED))
        adj[v] = {}
        alive.discard(v)
        del deg[v]


def delete_vertices(g: Graph, s) -> Graph:
    """Induced graph on the other vertices, isolated vertices dropped, ids re-densified."""
    return delete_vertices_with_map(g, s)[0]


def delete_vertices_with_map(g: Graph, s) -> tuple:
    adj = _adjacency(g)
    alive = set(range(g.n))
    _drop(adj, alive, set(s), [])
    return _to_graph(adj, alive)


def reduce(g: Graph) -> tuple:
    """Reduce ``g`` to minimum degree >= 3 (or empty).

    Returns the reduced graph and the removal log as ``(vertex, reason)``
    pairs in original vertex ids.
    """
    adj = _adjacency(g)
    alive = set(range(g.n))
    log = []
    _cascade(adj, alive, log)
    out, _ = _to_graph(adj, alive)
    assert out.n == 0 or min(out.degrees) >= 3
    return out, log


def hat(g: Graph, a: int, b: int) -> tuple:
    """``G^_{a,b}``: delete ``a`` and ``b``, then reduce.  Returns ``(graph, trace)``."""
    if a == b:
        raise GraphError("a and b must differ")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise GraphError(f"vertex pair ({a}, {b}) out of range")
    adj = _adjacency(g)
    alive = set(range(g.n))
    log = []
    _drop(adj, alive, {a, b} if a < b else {b, a}, log)
    _cascade(adj, alive, log)
    out, keep = _to_graph(adj, alive)
    assert out.n == 0 or min(out.degrees) >= 3

    deg = g.degrees
    mat = g.mat
    na = set(g.neighbors(a))
    nb = set(g.neighbors(b))
    ne = deg[a] + deg[b] - mat[a][b]
    v3 = {u for u in na | nb if deg[u] == 3} - {a, b}
    v4 = {u for u in na if deg[u] == 4} & {u for u in nb if deg[u] == 4}
    # vertices left isolated at the end carry no edge, so they are not counted
    nvy = sum(1 for v, why in log
              if why in (PRUNED, SUPPRESSED) and v not in na and v not in nb)
    trace = ReductionTrace(
        removed_pair=(a, b), ne=ne, nv3=len(v3), nv4=len(v4), nvy=nvy,
        original_edges=g.num_edges, actual_edges=out.num_edges,
        removed_vertices=tuple(log), vertex_map=keep,
    )
    return out, trace


def hat_graph(g: Graph, a: int, b: int) -> Graph:
    return hat(g, a, b)[0]


def audit_count_equation(g: Graph) -> list:
    """``((a, b), predicted, actual)`` for every unordered vertex pair."""
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            _, t = hat(g, a, b)
            out.append(((a, b), t.predicted_edges, t.actual_edges))
    return out


def count_mismatches(g: Graph) -> list:
    return [rec for rec in audit_count_equation(g) if rec[1] != rec[2]]
