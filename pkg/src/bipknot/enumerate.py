"""Degree combinations and exhaustive bipartite graph generation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, canonical_code, is_connected


@dataclass(frozen=True, order=True)
class DegreeCombination:
    """Degree multisets of the two parts, each sorted in descending order."""

    deg_a: tuple
    deg_b: tuple

    def __post_init__(self):
        a = tuple(sorted(self.deg_a, reverse=True))
        b = tuple(sorted(self.deg_b, reverse=True))
        if sum(a) != sum(b):
            raise ValueError(f"part degree sums differ: {sum(a)} != {sum(b)}")
        if b > a:
            a, b = b, a
        object.__setattr__(self, "deg_a", a)
        object.__setattr__(self, "deg_b", b)

    @property
    def edges(self) -> int:
        return sum(self.deg_a)

    @property
    def name(self) -> str:
        """Cache-file stem, e.g. ``A5.5.5.4.3_B5.5.5.4.4``."""
        return "A" + ".".join(map(str, self.deg_a)) + "_B" + ".".join(map(str, self.deg_b))

    @classmethod
    def from_name(cls, name: str) -> DegreeCombination:
        left, right = name.split("_")
        if not (left.startswith("A") and right.startswith("B")):
            raise ValueError(f"bad combination name {name!r}")
        return cls(tuple(int(x) for x in left[1:].split(".")),
                   tuple(int(x) for x in right[1:].split(".")))

    def __str__(self):
        return self.name


def grouped(degrees, top: int = 5, bottom: int = 3) -> list:
    """Counts of each degree from ``top`` down to ``bottom``: ``[|X5|, |X4|, |X3|]``."""
    return [sum(1 for d in degrees if d == k) for k in range(top, bottom - 1, -1)]


def _partitions(total, size, lo, hi):
    """Non-increasing tuples of ``size`` integers in [lo, hi] summing to ``total``."""
    if size == 0:
        if total == 0:
            yield ()
        return
    top = min(hi, total - lo * (size - 1))
    for first in range(top, lo - 1, -1):
        if first * size < total:
            break
        for rest in _partitions(total - first, size - 1, lo, first):
            yield (first,) + rest


def part_multisets(edge_budget: int, min_degree: int = 3) -> list:
    out = []
    for size in range(1, edge_budget // min_degree + 1):
        out.extend(_partitions(edge_budget, size, min_degree, edge_budget))
    return out


def degree_combinations(edge_budget: int, min_degree: int = 3) -> list:
    """Every unordered pair of part degree multisets for ``edge_budget`` edges.

    Each degree is at least ``min_degree`` and at most the size of the
    opposite part.
    """
    if edge_budget < 1:
        raise ValueError("edge budget must be positive")
    sides = part_multisets(edge_budget, min_degree)
    out = set()
    for a in sides:
        for b in sides:
            if a[0] <= len(b) and b[0] <= len(a) and a >= b:
                out.add(DegreeCombination(a, b))
    return sorted(out, key=lambda dc: (dc.deg_a, dc.deg_b), reverse=True)


def gale_ryser(rows, cols) -> bool:
    """Whether a 0/1 matrix with these row and column sums exists."""
    if sum(rows) != sum(cols):
        return False
    r = sorted(rows, reverse=True)
    acc = 0
    for k in range(1, len(r) + 1):
        acc += r[k - 1]
        if acc > sum(min(c, k) for c in cols):
            return False
    return True


def biadjacency_matrices(deg_a, deg_b) -> Iterator[list]:
    """Yield row bitmasks of 0/1 matrices with the given row and column sums.

    Rows are filled in order.  Columns that agree in degree and in every
    filled row are interchangeable, so a row only ever takes a prefix of
    each such class.  The output still contains isomorphic duplicates.
    """
    p, q = len(deg_a), len(deg_b)
    rows_deg = list(deg_a)
    cap = list(deg_b)
    rows = [0] * p

    # classes of interchangeable columns, initially equal-degree runs
    classes = []
    for j in range(q):
        if classes and deg_b[classes[-1][-1]] == deg_b[j]:
            classes[-1].append(j)
        else:
            classes.append([j])

    def feasible(i):
        left = p - i
        for c in cap:
            if c > left:
                return False
        return gale_ryser(rows_deg[i:], cap)

    def rec(i, classes):
        if i == p:
            yield list(rows)
            return
        need = rows_deg[i]
        usable = [len(c) if cap[c[0]] > 0 else 0 for c in classes]
        yield from choose(i, classes, usable, 0, need, [])

    def choose(i, classes, usable, k, need, picks):
        if k == len(classes):
            if need:
                return
            mask = 0
            new_classes = []
            for c, t in zip(classes, picks):
                if t:
                    new_classes.append(c[:t])
                    for j in c[:t]:
                        mask |= 1 << j
                        cap[j] -= 1
                if t < len(c):
                    new_classes.append(c[t:])
            rows[i] = mask
            if feasible(i + 1):
                yield from rec(i + 1, new_classes)
            for c, t in zip(classes, picks):
                for j in c[:t]:
                    cap[j] += 1
            return
        rest = sum(usable[k + 1:])
        for t in range(min(usable[k], need), -1, -1):
            if need - t > rest:
                break
            picks.append(t)
            yield from choose(i, classes, usable, k + 1, need - t, picks)
            picks.pop()

    if gale_ryser(deg_a, deg_b):
        yield from rec(0, classes)


def graph_from_rows(rows, q: int) -> Graph:
    p = len(rows)
    edges = [(i, p + j) for i, r in enumerate(rows) for j in range(q) if r >> j & 1]
    return Graph(p + q, edges, ["A"] * p + ["B"] * q)


def enumerate_bipartite(dc: DegreeCombination, connected_only: bool = False) -> list:
    """All simple bipartite graphs realizing ``dc``, one per isomorphism class.

    Returned in increasing canonical-code order.  Vertices ``0..|A|-1`` form
    part A.
    """
    q = len(dc.deg_b)
    seen = {}
    for rows in biadjacency_matrices(dc.deg_a, dc.deg_b):
        g = graph_from_rows(rows, q)
        if connected_only and not is_connected(g):
            continue
        code = canonical_code(g)
        if code not in seen:
            seen[code] = g
    out = []
    for code in sorted(seen):
        g = seen[code]
        assert sorted(g.degrees[:len(dc.deg_a)], reverse=True) == list(dc.deg_a)
        assert sorted(g.degrees[len(dc.deg_a):], reverse=True) == list(dc.deg_b)
        out.append(g)
    return out


def enumerate_domain(edge_budget: int, min_degree: int = 3,
                     connected_only: bool = True) -> Iterator[Graph]:
    for dc in degree_combinations(edge_budget, min_degree):
        yield from enumerate_bipartite(dc, connected_only)


def _ordered(ga, gb):
    # the part with more degree-5 vertices first, ties broken on degree 4
    return (ga, gb) if (ga[0], ga[1]) >= (gb[0], gb[1]) else (gb, ga)


def case_tree(edge_budget: int = 23, min_degree: int = 3, feasible_only: bool = False) -> dict:
    """Degree combinations split by maximum degree, in ``[|X5|, |X4|, |X3|]`` form.

    Keys:
      ``high``        combinations with a vertex of degree 6 or more
      ``high_seven``  seven-vertex parts opposite a part with degree >= 6
      ``parts5`` / ``parts4``  part groupings with maximum degree 5 / 4
      ``both5``, ``only_a5``, ``max4``  ordered ``([A], [B])`` case pairs

    Unrealizable combinations are kept unless ``feasible_only`` is set.
    """
    combos = [dc for dc in degree_combinations(edge_budget, min_degree)
              if not feasible_only or gale_ryser(dc.deg_a, dc.deg_b)]
    out = {"high": [], "high_seven": set(), "parts5": set(), "parts4": set(),
           "both5": set(), "only_a5": set(), "max4": set()}
    for dc in combos:
        a, b = dc.deg_a, dc.deg_b
        if max(a[0], b[0]) >= 6:
            out["high"].append(dc)
            for hi, lo in ((a, b), (b, a)):
                if hi[0] >= 6 and len(lo) == 7:
                    out["high_seven"].add(lo)
            continue
        ga, gb = tuple(grouped(a)), tuple(grouped(b))
        for d, g in ((a, ga), (b, gb)):
            out["parts5" if d[0] == 5 else "parts4"].add(g)
        if a[0] == 5 and b[0] == 5:
            out["both5"].add(_ordered(ga, gb))
        elif a[0] == 5 or b[0] == 5:
            out["only_a5"].add((ga, gb) if a[0] == 5 else (gb, ga))
        else:
            out["max4"].add(_ordered(ga, gb))
    return out
