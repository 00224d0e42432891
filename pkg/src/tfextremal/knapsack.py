"""Component-multiplicity model for the triangle-free extremal problem.

An extremal graph is a star forest plus factor-critical components; a
component with matching number ``i`` contributes ``d*i + g(d, i)`` edges.
Picking multiplicities ``x_i`` under ``sum(i * x_i) <= m`` is an unbounded
knapsack, solved here exactly by dynamic programming over capacity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .formulas import ExtremalValue, Status, f_triangle, g_triangle, in_proven_domain, resolve_Zd, weakest

__all__ = ["KnapsackSolution", "solve_model2", "f_via_model1", "check_optimum_structure"]


@dataclass(frozen=True)
class KnapsackSolution:
    d: int
    m: int
    z: int
    counts: dict[int, int]
    objective: int
    capacity_used: int

    def x(self, i: int) -> int:
        return self.counts.get(i, 0)


def _validate_utilities(d: int, utilities: Mapping[int, int]) -> list[int]:
    if not utilities:
        raise ValueError("empty utility table")
    items = sorted(utilities)
    if items != list(range(d, items[-1] + 1)):
        raise ValueError(f"utilities must be defined on a contiguous range starting at d={d}")
    return items


def solve_model2(d: int, m: int, utilities: Mapping[int, int]) -> KnapsackSolution:
    """Maximise ``sum(utilities[i] * x_i)`` subject to ``sum(i * x_i) <= m``.

    The top key of ``utilities`` plays the role of Z(d).  Among optimal
    vectors the one with the largest ``x_Z`` is returned, then largest
    ``x_d``, ``x_{d+1}``, ... in turn.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if m < d:
        raise ValueError(f"capacity m={m} is below the smallest item d={d}")
    items = _validate_utilities(d, utilities)
    z = items[-1]
    # keys are compared lexicographically; every coordinate is additive, so
    # the DP over capacity stays exact for the composite order
    order = [z] + items[:-1]
    width = len(order) + 1

    def item_key(i: int) -> tuple[int, ...]:
        key = [0] * width
        key[0] = utilities[i]
        key[1 + order.index(i)] = 1
        return tuple(key)

    steps = {i: item_key(i) for i in items}
    zero = (0,) * width
    best: list[tuple[int, ...]] = [zero] * (m + 1)
    for c in range(1, m + 1):
        cur = best[c - 1]
        for i in items:
            if i > c:
                break
            prev = best[c - i]
            cand = tuple(a + b for a, b in zip(prev, steps[i]))
            if cand > cur:
                cur = cand
        best[c] = cur
    key = best[m]
    counts = {i: key[1 + k] for k, i in enumerate(order) if key[1 + k]}
    used = sum(i * x for i, x in counts.items())
    return KnapsackSolution(d, m, z, counts, key[0], used)


def f_via_model1(d: int, m: int, assume_conjectures: bool = False) -> ExtremalValue:
    """``d*m`` plus the knapsack optimum over the component surplus table."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if m < d:
        raise ValueError(f"m={m} must be at least d={d}")
    zres = resolve_Zd(d, assume_conjectures)
    z = zres.value  # raises when Z(d) is unresolved
    table = {i: g_triangle(d, i, assume_conjectures) for i in range(d, z + 1)}
    sol = solve_model2(d, m, {i: v.value for i, v in table.items()})
    if in_proven_domain(d, m):
        status = Status.PROVEN
    else:
        # an unproven entry that fits could change the optimum, used or not
        status = weakest(v.status for i, v in table.items() if i <= m)
    ref = f_triangle(d, m, assume_conjectures)
    return ExtremalValue(d, m, d * m + sol.objective, status, f"component knapsack ({ref.case})")


def check_optimum_structure(sol: KnapsackSolution, d: int) -> bool:
    """At most one component below the top size, with multiplicity one."""
    below = [x for i, x in sol.counts.items() if d <= i < sol.z and x > 0]
    return len(below) == 0 or (len(below) == 1 and below[0] == 1)
