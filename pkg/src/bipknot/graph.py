"""Small immutable multigraphs, canonical labeling and graph6 I/O.

Vertices are the integers ``0..n-1``.  Parallel edges are kept with an
explicit multiplicity (at most ``MAX_MULTIPLICITY``); loops are never stored.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from typing import Iterable, Sequence

MAX_VERTICES = 20
MAX_MULTIPLICITY = 31


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    pass


class Graph:
    """Undirected multigraph value.

    ``edges`` is the sorted multiset of ``(u, v)`` pairs with ``u < v``.
    ``parts`` optionally labels each vertex ``'A'`` or ``'B'``.
    """

    __slots__ = ("n", "edges", "parts", "_mat", "_deg", "_adj", "_code")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), parts=None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        norm = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"endpoint of ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        counts = Counter(norm)
        if counts and max(counts.values()) > MAX_MULTIPLICITY:
            raise GraphError("edge multiplicity exceeds cap of %d" % MAX_MULTIPLICITY)
        if parts is not None:
            parts = tuple(parts)
            if len(parts) != n or any(p not in ("A", "B") for p in parts):
                raise GraphError("parts must give 'A' or 'B' for every vertex")
            for u, v in counts:
                if parts[u] == parts[v]:
                    raise GraphError(f"edge ({u}, {v}) inside part {parts[u]}")
        self.n = n
        self.edges = tuple(norm)
        self.parts = parts
        self._mat = None
        self._deg = None
        self._adj = None
        self._code = None

    # -- basic structure -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def mat(self) -> tuple:
        """Multiplicity matrix as a tuple of row tuples."""
        if self._mat is None:
            rows = [[0] * self.n for _ in range(self.n)]
            for u, v in self.edges:
                rows[u][v] += 1
                rows[v][u] += 1
            self._mat = tuple(tuple(r) for r in rows)
        return self._mat

    @property
    def degrees(self) -> tuple:
        if self._deg is None:
            self._deg = tuple(sum(r) for r in self.mat)
        return self._deg

    @property
    def adj(self) -> tuple:
        """Neighbour bitmasks (parallel edges collapsed)."""
        if self._adj is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._adj = tuple(masks)
        return self._adj

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list:
        row = self.mat[v]
        return [u for u in range(self.n) if row[u]]

    def multiplicity(self, u: int, v: int) -> int:
        return self.mat[u][v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mat[u][v])

    def is_simple(self) -> bool:
        return all(a != b for a, b in zip(self.edges, self.edges[1:]))

    def distinct_edges(self) -> list:
        return sorted(set(self.edges))

    def degree_sequence(self) -> list:
        return sorted(self.degrees, reverse=True)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    # -- derived graphs --------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        parts = None
        if self.parts is not None:
            parts = [None] * self.n
            for v, p in enumerate(self.parts):
                parts[perm[v]] = p
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], parts)

    def add_edges(self, extra: Iterable[Sequence[int]]) -> Graph:
        return Graph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def remove_edge(self, u: int, v: int) -> Graph:
        e = (u, v) if u < v else (v, u)
        edges = list(self.edges)
        try:
            edges.remove(e)
        except ValueError:
            raise GraphError(f"no edge {e}") from None
        return Graph(self.n, edges, self.parts)

    def with_parts(self, parts) -> Graph:
        return Graph(self.n, self.edges, parts)


def make_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(vertex_count, edges)


def simple_underlying(g: Graph) -> Graph:
    """Collapse every class of parallel edges to a single edge."""
    if g.is_simple():
        return g
    return Graph(g.n, sorted(set(g.edges)), g.parts)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components(g)) == 1


def components(g: Graph) -> list:
    seen = 0
    out = []
    adj = g.adj
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def bipartition(g: Graph):
    """Two-colour ``g``; ``None`` if it has an odd cycle.

    The smallest vertex of every connected component goes to side A.
    """
    side = [-1] * g.n
    adj = g.adj
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            m = adj[u]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(v for v in range(g.n) if side[v] == 1)
    return a, b


def with_bipartition(g: Graph) -> Graph:
    sides = bipartition(g)
    if sides is None:
        raise GraphError("graph is not bipartite")
    a, _ = sides
    return g.with_parts(["A" if v in a else "B" for v in range(g.n)])


def girth(g: Graph):
    """Length of a shortest cycle (2 when parallel edges exist), or None."""
    if not g.is_simple():
        return 2
    best = None
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            m = adj[u]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


# ---------------------------------------------------------------------------
# Canonical labeling: ordered-partition refinement plus an individualization
# search tree.  The canonical code is the least adjacency encoding over all
# leaves; automorphisms found at equal leaves prune sibling branches.


def _refine(mat, cells, queue):
    """Refine ordered partition ``cells`` in place to equitability.

    ``queue`` lists splitter cells (by identity).  Fragments of a split cell
    are ordered by increasing count into the splitter, which keeps the
    result independent of vertex names.
    """
    n_cells = len(cells)
    n = len(mat)
    while queue and n_cells < n:
        splitter = queue.pop(0)
        if len(splitter) == 1:
            s = splitter[0]
            cnt = mat[s]
        else:
            cnt = [0] * n
            for s in splitter:
                row = mat[s]
                for v in range(n):
                    cnt[v] += row[v]
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) > 1:
                c0 = cnt[cell[0]]
                for v in cell:
                    if cnt[v] != c0:
                        break
                else:
                    i += 1
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(cnt[v], []).append(v)
                frags = [groups[k] for k in sorted(groups)]
                cells[i:i + 1] = frags
                n_cells += len(frags) - 1
                # the old cell may still be queued; its fragments replace it
                if any(q is cell for q in queue):
                    queue[:] = [q for q in queue if q is not cell]
                queue.extend(frags)
                i += len(frags)
            else:
                i += 1
    return cells


def _initial_cells(mat):
    deg = [sum(r) for r in mat]
    groups = {}
    for v, d in enumerate(deg):
        groups.setdefault(d, []).append(v)
    cells = [groups[d] for d in sorted(groups)]
    return _refine(mat, cells, list(cells))


def _encode(mat, order):
    n = len(order)
    rows = [mat[v] for v in order]
    return bytes([rows[i][order[j]] for i in range(n) for j in range(i + 1, n)])


class _Search:
    __slots__ = ("mat", "best", "best_order", "autos")

    def __init__(self, mat):
        self.mat = mat
        self.best = None
        self.best_order = None
        self.autos = []

    def run(self, cells, prefix):
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            code = _encode(self.mat, order)
            if self.best is None or code < self.best:
                self.best = code
                self.best_order = order
            elif code == self.best:
                # order[i] and best_order[i] play the same role
                perm = [0] * len(order)
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.autos.append(perm)
            return
        cell = cells[target]
        tried = []
        for v in sorted(cell):
            if tried and self._same_orbit(v, tried, prefix):
                continue
            tried.append(v)
            new_cells = [list(c) for c in cells]
            rest = [u for u in cell if u != v]
            new_cells[target:target + 1] = [[v], rest]
            _refine(self.mat, new_cells, [new_cells[target]])
            self.run(new_cells, prefix + [v])

    def _same_orbit(self, v, tried, prefix):
        gens = [p for p in self.autos if all(p[x] == x for x in prefix)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(t in orbit for t in tried)


def canonical_order(g: Graph) -> list:
    """Vertex order realizing the canonical code (``order[new] = old``)."""
    if g.n == 0:
        return []
    mat = g.mat
    search = _Search(mat)
    search.run(_initial_cells(mat), [])
    return search.best_order


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant fingerprint; equal codes iff isomorphic."""
    if g._code is None:
        if g.n == 0:
            g._code = b"\x00"
        else:
            order = canonical_order(g)
            g._code = bytes([g.n]) + _encode(g.mat, order)
    return g._code


def canonical_form(g: Graph) -> Graph:
    """The isomorphic copy of ``g`` whose labeling gives the canonical code."""
    order = canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def graph_from_code(code: bytes) -> Graph:
    n = code[0]
    edges = []
    k = 1
    for i in range(n):
        for j in range(i + 1, n):
            edges.extend([(i, j)] * code[k])
            k += 1
    return Graph(n, edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_code(g) == canonical_code(h)


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


# ---------------------------------------------------------------------------
# graph6


def encode_graph6(g: Graph) -> str:
    if not g.is_simple():
        raise Graph6Error("graph6 cannot represent parallel edges")
    n = g.n
    adj = g.adj
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip("\n")
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"malformed header byte {s[0]!r}")
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds limit of {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nchars:
        raise Graph6Error(f"expected {nchars} data bytes after header, got {len(body)}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise Graph6Error(f"malformed data byte {ch!r}")
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]):
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield decode_graph6(line)
