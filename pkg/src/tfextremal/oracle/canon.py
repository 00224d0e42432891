"""Canonical forms of small graphs by individualisation-refinement.

The certificate of a graph is the lexicographically smallest tuple of
relabelled adjacency rows over the leaves of the search tree.  Branches
are pruned with two kinds of automorphism:

* twins (same open or closed neighbourhood) inside a cell are swapped by a
  transposition, so only one twin per class is individualised;
* automorphisms discovered by comparing leaves with the first leaf prune
  sibling branches along the first path, as in nauty.

Good enough for n <= 16 in pure Python.
"""

from __future__ import annotations

from typing import Sequence

Cells = list[list[int]]


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement of an ordered partition.

    Fragments replace their parent cell in place, ordered by neighbour count,
    so the result depends only on the isomorphism class of (graph, partition).
    """
    cells = [list(c) for c in cells]
    i = 0
    while i < len(cells):
        w = _mask(cells[i])
        out: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for x in cell:
                groups.setdefault((rows[x] & w).bit_count(), []).append(x)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        i = 0 if split else i + 1
    return cells


def _individualize(cells: Cells, v: int) -> Cells:
    out = []
    for cell in cells:
        if v in cell:
            out.append([v])
            out.append([x for x in cell if x != v])
        else:
            out.append(cell)
    return out


def _twin_representatives(rows: Sequence[int], cell: Sequence[int]) -> list[int]:
    seen_open: set[int] = set()
    seen_closed: set[int] = set()
    reps = []
    for v in cell:
        o = rows[v]
        c = o | (1 << v)
        if o in seen_open or c in seen_closed:
            continue
        seen_open.add(o)
        seen_closed.add(c)
        reps.append(v)
    return reps


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


class _Search:
    def __init__(self, rows: Sequence[int]) -> None:
        self.rows = rows
        self.n = len(rows)
        self.first_lab: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.best_lab: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None
        self.autos: list[list[int]] = []

    def leaf(self, cells: Cells) -> None:
        lab = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = self.rows
        cert = []
        for v in lab:
            r = rows[v]
            nr = 0
            while r:
                low = r & -r
                nr |= 1 << pos[low.bit_length() - 1]
                r ^= low
            cert.append(nr)
        cert_t = tuple(cert)
        if self.first_cert is None:
            self.first_cert = self.best_cert = cert_t
            self.first_lab = self.best_lab = lab
            return
        if cert_t == self.first_cert:
            # lab[i] -> first_lab[i] is an automorphism
            gamma = [0] * self.n
            for a, b in zip(lab, self.first_lab):
                gamma[a] = b
            self.autos.append(gamma)
        if cert_t < self.best_cert:
            self.best_cert = cert_t
            self.best_lab = lab

    def node(self, cells: Cells, on_first_path: bool) -> None:
        cells = refine(self.rows, cells)
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            self.leaf(cells)
            return
        reps = _twin_representatives(self.rows, target)
        start = len(self.autos)
        explored: list[int] = []
        for i, v in enumerate(reps):
            if on_first_path and explored and len(self.autos) > start:
                parent = list(range(self.n))
                for gamma in self.autos[start:]:
                    for a, b in enumerate(gamma):
                        ra, rb = _find(parent, a), _find(parent, b)
                        if ra != rb:
                            parent[ra] = rb
                rv = _find(parent, v)
                if any(_find(parent, u) == rv for u in explored):
                    continue
            explored.append(v)
            self.node(_individualize(cells, v), on_first_path and i == 0)


def canonical_form(rows: Sequence[int], cells: Cells | None = None) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(certificate, labelling)`` for the coloured graph.

    ``cells`` is an ordered colour partition (default: one cell).  Two
    coloured graphs are isomorphic iff their certificates are equal.
    ``labelling[i]`` is the vertex placed at canonical position ``i``.
    """
    n = len(rows)
    if n == 0:
        return (), []
    if cells is None:
        cells = [list(range(n))]
    s = _Search(rows)
    s.node(cells, True)
    return s.best_cert, s.best_lab


def vertex_invariant_cells(rows: Sequence[int]) -> Cells:
    """Initial partition by (degree, number of 4-cycle pairs through the vertex), ascending."""
    n = len(rows)
    key = []
    for v in range(n):
        rv = rows[v]
        c4 = 0
        for w in range(n):
            if w != v:
                k = (rv & rows[w]).bit_count()
                c4 += k * (k - 1) // 2
        key.append((rv.bit_count(), c4))
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        groups.setdefault(key[v], []).append(v)
    return [groups[k] for k in sorted(groups)]


def graph_certificate(rows: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism-class key."""
    cert, _ = canonical_form(rows, vertex_invariant_cells(rows))
    return len(rows), cert
