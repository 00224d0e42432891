"""Isomorph-free generation of small graphs by canonical vertex augmentation.

Every graph is built from its *canonical parent*: the graph minus the
vertex that comes first, among the vertices of smallest
(degree, 4-cycle count), under the rooted canonical order.  A child is kept
only when the added vertex is in that canonical orbit, and children of one
parent are deduplicated by certificate.  All pruning predicates used here
(max degree, triangle-freeness, matching number cap, degree deficiency
against the target order) are inherited by induced subgraphs, so pruning
never cuts off a canonical construction path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

from ..graph import Graph, _blossom_mates
from .canon import canonical_form, refine, vertex_invariant_cells

__all__ = [
    "All",
    "Regular",
    "AlmostRegular",
    "EnumFilter",
    "BudgetExceeded",
    "default_budget",
    "enumerate_graphs",
    "generate",
]

HARD_CAP = 16
DEFAULT_BUDGET = 13


class BudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    """Vertex budget; ``EXTREMAL_BUDGET`` overrides the default of 13."""
    raw = os.environ.get("EXTREMAL_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if not 1 <= value <= HARD_CAP:
        raise ValueError(f"EXTREMAL_BUDGET must lie in [1, {HARD_CAP}]")
    return value


@dataclass(frozen=True)
class All:
    def final_ok(self, degrees: Sequence[int]) -> bool:
        return True

    def min_final_degree(self) -> int:
        return 0


@dataclass(frozen=True)
class Regular:
    d: int

    def final_ok(self, degrees: Sequence[int]) -> bool:
        return all(x == self.d for x in degrees)

    def min_final_degree(self) -> int:
        return self.d


@dataclass(frozen=True)
class AlmostRegular:
    """All degrees ``d`` except exactly one vertex of degree ``d - 1``."""

    d: int

    def final_ok(self, degrees: Sequence[int]) -> bool:
        low = sum(1 for x in degrees if x == self.d - 1)
        return low == 1 and all(x in (self.d, self.d - 1) for x in degrees)

    def min_final_degree(self) -> int:
        return self.d - 1


DegreeProfile = Union[All, Regular, AlmostRegular]


@dataclass(frozen=True)
class EnumFilter:
    n: int
    max_degree: int
    triangle_free: bool = True
    connected: bool = False
    degree_profile: DegreeProfile = All()
    max_matching: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        if isinstance(self.degree_profile, AlmostRegular) and self.n < 2:
            raise ValueError("AlmostRegular needs n >= 2")


def _connected(rows: Sequence[int]) -> bool:
    n = len(rows)
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def _nu(rows: Sequence[int]) -> int:
    return sum(1 for v, w in enumerate(_blossom_mates(Graph._trusted(rows))) if v < w)


def _rooted_key(rows: Sequence[int], base: list[list[int]], v: int) -> tuple[int, ...]:
    cells = []
    for cell in base:
        if v in cell:
            cells.append([v])
            rest = [x for x in cell if x != v]
            if rest:
                cells.append(rest)
        else:
            cells.append(cell)
    cert, _ = canonical_form(rows, cells)
    return cert


def _accept(rows: Sequence[int]) -> tuple[int, ...] | None:
    """Certificate of the child if its last vertex is the canonical one, else None."""
    new = len(rows) - 1
    base = refine(rows, vertex_invariant_cells(rows))
    first = base[0]
    if new not in first:
        return None
    key = _rooted_key(rows, base, new)
    seen_open = {rows[new]}
    seen_closed = {rows[new] | (1 << new)}
    for w in first:
        if w == new:
            continue
        o, c = rows[w], rows[w] | (1 << w)
        # twins of an inspected vertex share its rooted certificate
        if o in seen_open or c in seen_closed:
            continue
        seen_open.add(o)
        seen_closed.add(c)
        if _rooted_key(rows, base, w) < key:
            return None
    return key


def generate(
    n_max: int,
    max_degree: int,
    triangle_free: bool = True,
    max_matching: int | None = None,
    target: tuple[int, int] | None = None,
    budget: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield adjacency rows of every graph on ``0..n_max`` vertices once per
    isomorphism class, subject to the hereditary constraints.

    ``target=(n, delta)`` additionally prunes graphs that cannot be induced
    subgraphs of an ``n``-vertex graph with minimum degree ``delta``.
    """
    if budget is None:
        budget = default_budget()
    if n_max > min(budget, HARD_CAP):
        raise BudgetExceeded(f"{n_max} vertices exceeds the enumeration budget of {budget}")
    t_n, t_delta = target if target is not None else (n_max, 0)

    def children(rows: tuple[int, ...], nu: int) -> Iterator[tuple[tuple[int, ...], int]]:
        k = len(rows)
        degs = [r.bit_count() for r in rows]
        slack = t_n - (k + 1)
        need = t_delta - slack
        forced = 0
        for u in range(k):
            if degs[u] < need:
                if degs[u] + 1 < need:
                    return
                forced |= 1 << u
        if need > max_degree:
            return
        lo_size = max(need, 0)
        if forced.bit_count() > max_degree:
            return
        cand = [u for u in range(k) if degs[u] < max_degree]
        seen: set[tuple[int, ...]] = set()
        ncand = len(cand)

        def rec(i: int, chosen: int, size: int, blocked: int) -> Iterator[int]:
            if i == ncand:
                if size >= lo_size and (chosen & forced) == forced:
                    yield chosen
                return
            u = cand[i]
            bit = 1 << u
            # skip u
            if not (forced & bit):
                yield from rec(i + 1, chosen, size, blocked)
            if size < max_degree and not (blocked & bit):
                yield from rec(i + 1, chosen | bit, size + 1, blocked | (rows[u] if triangle_free else 0))

        for s in rec(0, 0, 0, 0):
            size = s.bit_count()
            # the new vertex must have minimum degree in the child
            ok = True
            for u in range(k):
                du = degs[u] + ((s >> u) & 1)
                if du < size:
                    ok = False
                    break
            if not ok:
                continue
            child = list(rows)
            for u in range(k):
                if (s >> u) & 1:
                    child[u] |= 1 << k
            child.append(s)
            child_t = tuple(child)
            child_nu = nu
            if size and max_matching is not None:
                # adding a vertex raises the matching number by at most one
                if nu >= max_matching:
                    child_nu = _nu(child_t)
                    if child_nu > max_matching:
                        continue
                else:
                    child_nu = -1
            key = _accept(child_t)
            if key is None or key in seen:
                continue
            seen.add(key)
            yield child_t, child_nu

    def walk(rows: tuple[int, ...], nu: int) -> Iterator[tuple[int, ...]]:
        if nu < 0:
            nu = _nu(rows)  # only tracked when a matching cap is set
        yield rows
        if len(rows) == n_max:
            return
        for child, cnu in children(rows, nu):
            yield from walk(child, cnu)

    yield from walk((), 0)


def enumerate_graphs(
    flt: EnumFilter,
    budget: int | None = None,
    extra: Callable[[Graph], bool] | None = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of ``flt.n``-vertex graphs
    satisfying the filter (and ``extra`` if given)."""
    profile = flt.degree_profile
    delta = profile.min_final_degree()
    if delta > flt.max_degree:
        return
    for rows in generate(
        flt.n,
        flt.max_degree,
        triangle_free=flt.triangle_free,
        max_matching=flt.max_matching,
        target=(flt.n, delta),
        budget=budget,
    ):
        if len(rows) != flt.n:
            continue
        if not profile.final_ok([r.bit_count() for r in rows]):
            continue
        if flt.connected and not _connected(rows):
            continue
        g = Graph._trusted(rows)
        if extra is not None and not extra(g):
            continue
        yield g
