"""Brute-force ground truth built on the isomorph-free enumerator.

Vertex bound.  A triangle-free graph without isolated vertices, with
maximum degree ``d`` and matching number ``m``, has at most ``(d+1)*m``
vertices.  Take a maximum matching M.  Every vertex outside M has all its
neighbours in V(M).  For an edge uv of M, if u and v both had neighbours
outside M they would be the same vertex (a triangle) or two distinct
vertices (an augmenting path), so only one endpoint has outside
neighbours, and at most ``d - 1`` of them.  That gives
``2m + (d-1)m = (d+1)m``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from ..constructions import blowup_candidates, realize_blowup, _is_witness
from ..formats import graph6_encode
from ..formulas import ZdResolution, resolve_Zd
from ..graph import Graph, is_factor_critical, matching_number
from ..knapsack import solve_model2
from .enumerate import (
    AlmostRegular,
    BudgetExceeded,
    EnumFilter,
    Regular,
    default_budget,
    enumerate_graphs,
    generate,
)

__all__ = [
    "OracleRecord",
    "vertex_bound",
    "brute_force_f",
    "brute_force_component_f",
    "oracle_f_via_components",
    "search_Zd",
    "search_Zd_blowup",
    "count_witnesses",
    "write_graph6",
]


@dataclass(frozen=True)
class OracleRecord:
    d: int
    m: int
    best_edges: int
    witness: Graph
    vertex_bound_used: int
    exhaustive: bool

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "best_edges": self.best_edges,
            "witness": graph6_encode(self.witness),
            "vertex_bound_used": self.vertex_bound_used,
            "exhaustive": self.exhaustive,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def vertex_bound(d: int, m: int) -> int:
    """Largest possible order of an isolated-vertex-free member."""
    return (d + 1) * m


def _check_budget(n: int, budget: int | None) -> int:
    b = default_budget() if budget is None else budget
    if n > b:
        raise BudgetExceeded(f"{n} vertices exceeds the enumeration budget of {b}")
    return b


def brute_force_f(d: int, m: int, vertex_cap: int | None = None, budget: int | None = None) -> OracleRecord:
    """Largest triangle-free graph with max degree <= d and matching number
    <= m among all graphs on at most ``vertex_cap`` vertices."""
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    bound = vertex_bound(d, m)
    cap = bound if vertex_cap is None else min(vertex_cap, bound)
    b = _check_budget(cap, budget)
    best_rows: tuple[int, ...] = ()
    best = 0
    for rows in generate(cap, d, triangle_free=True, max_matching=m, budget=b):
        if any(r == 0 for r in rows):
            continue
        e = sum(r.bit_count() for r in rows) // 2
        if e > best:
            best, best_rows = e, rows
    return OracleRecord(d, m, best, Graph._trusted(best_rows), cap, cap >= bound)


def brute_force_component_f(d: int, i: int, budget: int | None = None) -> OracleRecord:
    """Largest connected triangle-free graph on 2i+1 vertices with max degree
    <= d and matching number exactly i."""
    if d < 1 or i < 1:
        raise ValueError("d and i must be positive")
    n = 2 * i + 1
    b = _check_budget(n, budget)
    best: Graph | None = None
    flt = EnumFilter(n, d, triangle_free=True, connected=True, max_matching=i)
    for g in enumerate_graphs(flt, budget=b):
        if best is not None and g.num_edges <= best.num_edges:
            continue
        if matching_number(g) == i:
            best = g
    if best is None:
        return OracleRecord(d, i, 0, Graph(0), n, True)
    return OracleRecord(d, i, best.num_edges, best, n, True)


def oracle_f_via_components(d: int, m: int, budget: int | None = None) -> int:
    """``d*m`` plus the knapsack optimum over brute-force component surpluses."""
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    if d == 1:
        return m
    if m < d:
        return d * m
    top = min(m, resolve_Zd(d).value)
    utilities = {}
    for i in range(d, top + 1):
        rec = brute_force_component_f(d, i, budget)
        # no component of this size beats i stars
        utilities[i] = max(rec.best_edges - d * i, 0)
    return d * m + solve_model2(d, m, utilities).objective


def _profile(d: int):
    return Regular(d) if d % 2 == 0 else AlmostRegular(d)


def _witnesses(d: int, nu: int, budget: int | None) -> Iterator[Graph]:
    n = 2 * nu + 1
    b = _check_budget(n, budget)
    if n <= d:
        return
    flt = EnumFilter(n, d, triangle_free=True, connected=True, degree_profile=_profile(d))
    yield from enumerate_graphs(flt, budget=b, extra=is_factor_critical)


def search_Zd(d: int, n_max: int, budget: int | None = None) -> ZdResolution:
    """Smallest matching number ``<= n_max`` with an (almost) d-regular
    triangle-free factor-critical graph, by exhaustive enumeration."""
    if d < 2:
        raise ValueError("d must be at least 2")
    _check_budget(2 * n_max + 1, budget)
    for nu in range(1, n_max + 1):
        for _ in _witnesses(d, nu, budget):
            return ZdResolution(d, "exact", nu, nu, f"oracle: exhaustive search refuted nu < {nu}")
    hi = resolve_Zd(d).hi
    return ZdResolution(d, "interval", n_max + 1, max(hi, n_max + 1), f"oracle: no witness up to nu = {n_max}")


def search_Zd_blowup(d: int, nu_max: int) -> dict[int, Graph | None]:
    """Restricted, non-exhaustive search: for each nu up to ``nu_max`` the first
    uniform-removal C5 blow-up witness, or None."""
    out: dict[int, Graph | None] = {}
    for nu in range(1, nu_max + 1):
        found = None
        for spec in blowup_candidates(d, nu):
            g = realize_blowup(spec)
            if _is_witness(g, d, nu):
                found = g
                break
        out[nu] = found
    return out


def count_witnesses(d: int, nu: int, budget: int | None = None) -> int:
    """Isomorphism classes of (almost) d-regular triangle-free factor-critical
    graphs with matching number ``nu``."""
    if d < 2 or nu < 1:
        raise ValueError("need d >= 2 and nu >= 1")
    return sum(1 for _ in _witnesses(d, nu, budget))


def write_graph6(graphs: Iterable[Graph], out: IO[str]) -> int:
    k = 0
    for g in graphs:
        out.write(graph6_encode(g) + "\n")
        k += 1
    return k
