"""Exact planarity testing and the small reduced-graph classifier.

``is_planar`` splits the simple underlying graph into blocks and runs the
Demoucron-Malgrange-Pertuiset path-addition algorithm on each block.
"""

from __future__ import annotations

import enum
import itertools

from .graph import Graph, canonical_code, simple_underlying


class Verdict(str, enum.Enum):
    PLANAR = "PLANAR"
    K33 = "K33"
    K5 = "K5"
    K33_E1 = "K33_E1"
    K33_E2 = "K33_E2"
    GENERAL_NONPLANAR = "GENERAL_NONPLANAR"


K33 = Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
K5 = Graph(5, itertools.combinations(range(5), 2))
# K3,3 plus a second copy of one edge / plus one edge inside a part
K33_E1 = K33.add_edges([(0, 3)])
K33_E2 = K33.add_edges([(0, 1)])

NONPLANAR_CATALOG = {
    Verdict.K33: K33,
    Verdict.K5: K5,
    Verdict.K33_E1: K33_E1,
    Verdict.K33_E2: K33_E2,
}
_CODES = {canonical_code(g): v for v, g in NONPLANAR_CATALOG.items()}


def _blocks(n, adj):
    """Biconnected components as lists of edges (Hopcroft-Tarjan, iterative)."""
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] >= 0 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(sorted(adj[root])))]
        estack = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    out.append(block)
    return out


def _find_cycle(adj, start):
    """Some simple cycle through the 2-connected block containing ``start``."""
    parent = {start: None}
    stack = [start]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    # a non-tree edge closes a cycle with the tree paths
    for v in order:
        for w in adj[v]:
            if parent[v] != w and parent.get(w) != v:
                pv, pw = [v], [w]
                while pv[-1] is not None:
                    pv.append(parent[pv[-1]])
                while pw[-1] is not None:
                    pw.append(parent[pw[-1]])
                pv.pop()
                pw.pop()
                common = set(pv) & set(pw)
                i = next(k for k, x in enumerate(pv) if x in common)
                j = pw.index(pv[i])
                return pv[:i + 1] + pw[:j][::-1]
    return None


def _block_planar(edges) -> bool:
    verts = sorted({x for e in edges for x in e})
    nv, ne = len(verts), len(edges)
    if nv <= 4 or ne <= nv + 2:
        return True
    if ne > 3 * nv - 6:
        return False
    adj = {v: set() for v in verts}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    cycle = _find_cycle(adj, verts[0])
    emb_v = set(cycle)
    emb_e = set()
    for i in range(len(cycle)):
        u, w = cycle[i], cycle[(i + 1) % len(cycle)]
        emb_e.add(frozenset((u, w)))
    faces = [list(cycle), list(cycle)]
    while len(emb_e) < ne:
        frags = _fragments(adj, emb_v, emb_e)
        choice = None
        for attach, inner, chord in frags:
            ok = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not ok:
                return False
            if choice is None or len(ok) < len(choice[1]):
                choice = ((attach, inner, chord), ok)
                if len(ok) == 1:
                    break
        (attach, inner, chord), ok = choice
        path = chord if chord is not None else _fragment_path(adj, attach, inner)
        fi = ok[0]
        face = faces[fi]
        a, b = path[0], path[-1]
        ia, ib = face.index(a), face.index(b)
        k = len(face)
        arc1 = [face[(ia + t) % k] for t in range((ib - ia) % k + 1)]  # a .. b
        arc2 = [face[(ib + t) % k] for t in range((ia - ib) % k + 1)]  # b .. a
        mid = path[1:-1]
        faces[fi] = arc1 + mid[::-1]
        faces.append(arc2 + mid)
        emb_v.update(path)
        for u, w in zip(path, path[1:]):
            emb_e.add(frozenset((u, w)))
    return True


def _fragments(adj, emb_v, emb_e):
    """Bridges of the block relative to the embedded subgraph.

    Each is ``(attachments, interior vertices, chord path or None)``.
    """
    out = []
    for u in sorted(emb_v):
        for w in sorted(adj[u]):
            if w in emb_v and u < w and frozenset((u, w)) not in emb_e:
                out.append(({u, w}, set(), [u, w]))
    seen = set()
    for s in sorted(adj):
        if s in emb_v or s in seen:
            continue
        comp = {s}
        stack = [s]
        attach = set()
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in emb_v:
                    attach.add(w)
                elif w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append((attach, comp, None))
    return out


def _fragment_path(adj, attach, inner):
    """Path through ``inner`` joining two distinct attachment vertices."""
    a = min(attach)
    start = [w for w in sorted(adj[a]) if w in inner][0]
    prev = {start: a}
    queue = [start]
    for v in queue:
        for w in sorted(adj[v]):
            if w in attach and w != a:
                path = [w, v]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if w in inner and w not in prev:
                prev[w] = v
                queue.append(w)
    raise AssertionError("fragment with a single attachment in a 2-connected block")


def is_planar(g: Graph) -> bool:
    """Exact planarity test; parallel edges are ignored."""
    s = simple_underlying(g)
    if s.num_edges <= 8 or s.n <= 4:
        return True
    if s.n >= 3 and s.num_edges > 3 * s.n - 6:
        return False
    adj = [[w for w in range(s.n) if s.adj[v] >> w & 1] for v in range(s.n)]
    return all(_block_planar(b) for b in _blocks(s.n, adj))


def prop21_classify(g: Graph) -> Verdict:
    """Classify a reduced graph by edge count, naming small non-planar ones.

    Up to 8 edges every reduced graph is planar; at 9 and 10 edges the only
    non-planar ones are the four catalog members; above that the exact test
    decides.
    """
    if g.n and min(g.degrees) < 3:
        raise ValueError("graph is not reduced (has a vertex of degree < 3)")
    m = g.num_edges
    if m <= 8:
        return Verdict.PLANAR
    if m <= 10:
        if g.n > 6:
            return Verdict.PLANAR
        return _CODES.get(canonical_code(g), Verdict.PLANAR)
    return Verdict.PLANAR if is_planar(g) else Verdict.GENERAL_NONPLANAR


def _degree_sequences(n, total, lo):
    """Non-increasing degree sequences of ``n`` entries >= ``lo`` summing to ``total``."""
    def rec(k, left, cap):
        if k == n:
            if left == 0:
                yield ()
            return
        for d in range(min(cap, left - lo * (n - k - 1)), lo - 1, -1):
            for rest in rec(k + 1, left - d, d):
                yield (d,) + rest
    yield from rec(0, total, total)


def _multigraphs_with_degrees(degs):
    n = len(degs)
    left = list(degs)
    mult = {}

    def fill(i, j):
        if i == n:
            yield dict(mult)
            return
        if j == n:
            if left[i] == 0:
                yield from fill(i + 1, i + 2)
            return
        if j == n - 1:
            choices = [left[i]] if left[i] <= left[j] else []
        else:
            choices = range(min(left[i], left[j]), -1, -1)
        for k in choices:
            left[i] -= k
            left[j] -= k
            mult[(i, j)] = k
            yield from fill(i, j + 1)
            left[i] += k
            left[j] += k
        mult.pop((i, j), None)

    if n == 1:
        return
    yield from fill(0, 1)


def small_reduced_multigraphs(max_edges: int = 10, min_degree: int = 3) -> list:
    """Every loopless multigraph with minimum degree >= ``min_degree`` and at
    most ``max_edges`` edges, one per isomorphism class."""
    seen = {}
    for m in range(1, max_edges + 1):
        for n in range(2, 2 * m // min_degree + 1):
            for degs in _degree_sequences(n, 2 * m, min_degree):
                for mult in _multigraphs_with_degrees(degs):
                    edges = [e for e, k in mult.items() for _ in range(k)]
                    g = Graph(n, edges)
                    seen.setdefault(canonical_code(g), g)
    return [seen[c] for c in sorted(seen)]
