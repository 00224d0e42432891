"""Simple undirected graphs on vertices ``0..n-1`` and the predicates used to
certify witnesses.

Adjacency is stored as one bitmask per vertex, so neighbourhood intersection
(triangle tests, canonical refinement) is a single ``&``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "Matching",
    "MembershipReport",
    "max_degree",
    "min_degree",
    "is_triangle_free",
    "is_bipartite",
    "is_connected",
    "maximum_matching",
    "matching_number",
    "is_factor_critical",
    "verify_membership",
    "disjoint_union",
]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    ``rows[v]`` is the bitmask of neighbours of ``v``.  Build one with
    ``Graph(n, edges)`` or ``Graph.from_rows(rows)``.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows: tuple[int, ...] = tuple(rows)
        self._hash: int | None = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or (r >> v) & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for w in _bits(r):
                if not (rows[w] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        g = cls.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._hash = None
        return g

    @classmethod
    def _trusted(cls, rows: Sequence[int]) -> "Graph":
        # skips validation; callers guarantee symmetry and no loops
        g = cls.__new__(cls)
        g.n = len(rows)
        g.rows = tuple(rows)
        g._hash = None
        return g

    # -- basic queries ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    # -- derived graphs --------------------------------------------------

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v``; vertices above ``v`` shift down by one."""
        low = (1 << v) - 1
        rows = []
        for u, r in enumerate(self.rows):
            if u == v:
                continue
            rows.append((r & low) | ((r >> (v + 1)) << v))
        return Graph._trusted(rows)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for w in _bits(self.rows[v]):
                i = index.get(w)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph._trusted(rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for w in _bits(r):
                nr |= 1 << perm[w]
            rows[perm[v]] = nr
        return Graph._trusted(rows)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if not (rows[u] >> v) & 1:
                raise ValueError(f"({u}, {v}) is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._trusted(rows)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp_mask = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp_mask
                comp_mask |= nxt
            seen |= comp_mask
            comps.append(list(_bits(comp_mask)))
        return comps


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid_for(self, g: Graph) -> bool:
        used = 0
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            pair = (1 << u) | (1 << v)
            if used & pair:
                return False
            used |= pair
        return True

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)


def max_degree(g: Graph) -> int:
    return max((r.bit_count() for r in g.rows), default=0)


def min_degree(g: Graph) -> int:
    return min((r.bit_count() for r in g.rows), default=0)


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows
    for u, r in enumerate(rows):
        # only look at v > u; a common neighbour closes a triangle
        for v in _bits(r >> (u + 1)):
            if r & rows[u + 1 + v]:
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(g.rows[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(g.components()) == 1


def _augmenting_path(root: int, n: int, adj: Sequence[Sequence[int]], mate: list[int]) -> list[int]:
    """Search for an augmenting path from exposed ``root``.

    Returns the path as a vertex list ending at ``root`` (empty if none).
    Odd cycles are contracted onto their base as they are discovered.
    """
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if base[v] == base[w] or mate[v] == w:
                continue
            if w == root or (mate[w] >= 0 and parent[mate[w]] >= 0):
                b = lca(v, w)
                in_blossom = [False] * n
                mark(v, b, w, in_blossom)
                mark(w, b, v, in_blossom)
                for u in range(n):
                    if in_blossom[base[u]]:
                        base[u] = b
                        if not used[u]:
                            used[u] = True
                            queue.append(u)
            elif parent[w] < 0:
                parent[w] = v
                if mate[w] < 0:
                    path = []
                    x = w
                    while x >= 0:
                        path.append(x)
                        path.append(parent[x])
                        x = mate[parent[x]]
                    return path
                used[mate[w]] = True
                queue.append(mate[w])
    return []


def _blossom_mates(g: Graph) -> list[int]:
    """Edmonds' blossom algorithm; ``mate[v] == -1`` for exposed vertices."""
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n
    # greedy start; augmentation repairs any suboptimal choice
    for v in range(n):
        if mate[v] < 0:
            for w in adj[v]:
                if mate[w] < 0:
                    mate[v], mate[w] = w, v
                    break
    for root in range(n):
        if mate[root] >= 0 or not adj[root]:
            continue
        path = _augmenting_path(root, n, adj, mate)
        for i in range(0, len(path), 2):
            a, b = path[i], path[i + 1]
            mate[a], mate[b] = b, a
    return mate


def maximum_matching(g: Graph) -> Matching:
    mate = _blossom_mates(g)
    return Matching(frozenset((v, w) for v, w in enumerate(mate) if v < w))


def matching_number(g: Graph) -> int:
    return sum(1 for v, w in enumerate(_blossom_mates(g)) if v < w)


def is_factor_critical(g: Graph) -> bool:
    """Connected, odd order, and ``g - v`` has a perfect matching for every ``v``."""
    n = g.n
    if n % 2 == 0 or not is_connected(g):
        return False
    half = (n - 1) // 2
    mate = _blossom_mates(g)
    if sum(1 for w in mate if w >= 0) != 2 * half:
        return False
    for v in range(n):
        # the matching already misses v, so g - v is perfectly matched by it
        if mate[v] < 0:
            continue
        if matching_number(g.delete_vertex(v)) != half:
            return False
    return True


@dataclass(frozen=True)
class MembershipReport:
    d: int
    m: int
    num_edges: int
    max_degree: int
    matching_number: int
    triangle_free: bool
    degree_ok: bool
    matching_ok: bool
    vizing_ok: bool

    @property
    def passed(self) -> bool:
        return self.triangle_free and self.degree_ok and self.matching_ok and self.vizing_ok

    def failures(self) -> list[str]:
        out = []
        if not self.triangle_free:
            out.append("triangle")
        if not self.degree_ok:
            out.append(f"max degree {self.max_degree} > {self.d}")
        if not self.matching_ok:
            out.append(f"matching number {self.matching_number} > {self.m}")
        if not self.vizing_ok:
            out.append(f"{self.num_edges} edges exceed (d+1)*m = {(self.d + 1) * self.m}")
        return out


def verify_membership(g: Graph, d: int, m: int) -> MembershipReport:
    """Check that ``g`` is triangle-free with max degree <= d and matching number <= m.

    Also records the counting bound ``|E| <= (d+1) m`` that every such graph obeys.
    """
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    e = g.num_edges
    delta = max_degree(g)
    nu = matching_number(g)
    return MembershipReport(
        d=d,
        m=m,
        num_edges=e,
        max_degree=delta,
        matching_number=nu,
        triangle_free=is_triangle_free(g),
        degree_ok=delta <= d,
        matching_ok=nu <= m,
        vizing_ok=e <= (d + 1) * m,
    )


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    rows: list[int] = []
    for g in graphs:
        offset = len(rows)
        rows.extend(r << offset for r in g.rows)
    return Graph._trusted(rows)
