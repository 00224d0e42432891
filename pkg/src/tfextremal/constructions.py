"""Witness graphs: stars, the general-case components, blow-ups of C5 and
full extremal witnesses for given (d, m).

The triangle-free building blocks are found by a deterministic search over
C5 blow-ups with regular bipartite removals, and every graph a search
returns is re-verified with the predicates of :mod:`tfextremal.graph`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import formats
from .formulas import Status, f_gen, f_triangle, in_proven_domain, nu_Bd, resolve_Zd
from .graph import (
    Graph,
    disjoint_union,
    is_factor_critical,
    is_triangle_free,
    matching_number,
    max_degree,
    maximum_matching,
)
from .oracle.enumerate import AlmostRegular, EnumFilter, Regular, enumerate_graphs

__all__ = [
    "BlowUpSpec",
    "NotFound",
    "SearchBudget",
    "WitnessReport",
    "star",
    "realize_blowup",
    "construct_Ad",
    "construct_Bd",
    "Bd_spec",
    "construct_general_component",
    "find_cd_witness",
    "blowup_candidates",
    "assemble_triangle_free_witness",
    "assemble_general_witness",
]


@dataclass(frozen=True)
class BlowUpSpec:
    """Bag sizes around a 5-cycle plus what to delete from the full blow-up.

    ``removals[i]`` is the degree of the circulant bipartite graph removed
    between bags ``i`` and ``i+1 (mod 5)``; it needs equal bag sizes when
    nonzero.  ``extra_removed`` lists further edges (realised vertex labels)
    deleted afterwards.
    """

    sizes: tuple[int, ...]
    removals: tuple[int, ...] = (0, 0, 0, 0, 0)
    extra_removed: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if len(self.sizes) != 5 or len(self.removals) != 5:
            raise ValueError("a C5 blow-up needs 5 bag sizes and 5 removal degrees")
        if any(s < 1 for s in self.sizes):
            raise ValueError("bag sizes must be positive")
        for i, r in enumerate(self.removals):
            a, b = self.sizes[i], self.sizes[(i + 1) % 5]
            if r < 0 or r > min(a, b):
                raise ValueError(f"removal degree {r} out of range between bags {i} and {(i + 1) % 5}")
            if r and a != b:
                raise ValueError(f"a {r}-regular removal needs equal bags, got {a} and {b}")

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def offsets(self) -> list[int]:
        out = [0]
        for s in self.sizes[:-1]:
            out.append(out[-1] + s)
        return out

    def bag_degrees(self) -> list[int]:
        """Degree of a vertex in each bag before ``extra_removed`` is applied."""
        n, r = self.sizes, self.removals
        return [n[i - 1] + n[(i + 1) % 5] - r[i - 1] - r[i] for i in range(5)]


def realize_blowup(spec: BlowUpSpec) -> Graph:
    sizes = spec.sizes
    off = spec.offsets()
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        a, b = sizes[i], sizes[j]
        r = spec.removals[i]
        for p in range(a):
            for q in range(b):
                # circulant removal: drop q = p, p+1, ..., p+r-1 (mod size)
                if r and (q - p) % a < r:
                    continue
                edges.append((off[i] + p, off[j] + q))
    g = Graph(spec.order, edges)
    if spec.extra_removed:
        g = g.remove_edges(spec.extra_removed)
    return g


def star(d: int) -> Graph:
    """K_{1,d} with centre 0."""
    if d < 1:
        raise ValueError("a star needs d >= 1 leaves")
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def construct_general_component(d: int) -> Graph:
    """K_{d+1} for even d; otherwise K_{d+1} minus a perfect matching plus a
    vertex joined to all but one of the others."""
    if d < 1:
        raise ValueError("d must be positive")
    k = d + 1
    if k % 2 == 1:
        return Graph(k, itertools.combinations(range(k), 2))
    edges = [(u, v) for u, v in itertools.combinations(range(k), 2) if not (u % 2 == 0 and v == u + 1)]
    edges += [(i, k) for i in range(d)]
    return Graph(k + 1, edges)


def construct_Ad(d: int) -> Graph:
    """Factor-critical triangle-free graph on 2d+1 vertices with d^2+1 edges and max degree d."""
    if d < 2:
        raise ValueError("A_d needs d >= 2")
    return realize_blowup(BlowUpSpec((1, 1, d // 2, d - 1, (d + 1) // 2)))


# -- (almost) regular factor-critical blow-ups --------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Positive compositions in lexicographic order."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _degree_profile_ok(degs: Sequence[int], sizes: Sequence[int], d: int) -> bool:
    if d % 2 == 0:
        return all(x == d for x in degs)
    # exactly one vertex of degree d-1: a singleton bag
    low = [i for i in range(5) if degs[i] == d - 1]
    return len(low) == 1 and sizes[low[0]] == 1 and all(degs[i] in (d, d - 1) for i in range(5))


def blowup_candidates(d: int, nu: int) -> Iterator[BlowUpSpec]:
    """Uniform-removal blow-ups on 2*nu+1 vertices with the (almost) d-regular
    degree profile, in a fixed order (not yet checked for factor-criticality)."""
    total = 2 * nu + 1
    for sizes in _compositions(total, 5):
        if max(sizes) > d:
            continue
        ranges = []
        for i in range(5):
            a, b = sizes[i], sizes[(i + 1) % 5]
            ranges.append(range(0, a + 1) if a == b else range(0, 1))
        for rem in itertools.product(*ranges):
            n = sizes
            degs = [n[i - 1] + n[(i + 1) % 5] - rem[i - 1] - rem[i] for i in range(5)]
            if _degree_profile_ok(degs, sizes, d):
                yield BlowUpSpec(sizes, tuple(rem))


def _is_witness(g: Graph, d: int, nu: int) -> bool:
    degs = g.degrees()
    if d % 2 == 0:
        profile = all(x == d for x in degs)
    else:
        profile = degs.count(d - 1) == 1 and all(x in (d, d - 1) for x in degs)
    return (
        profile
        and g.n == 2 * nu + 1
        and is_triangle_free(g)
        and is_factor_critical(g)
    )


def _first_uniform(d: int, nu: int) -> BlowUpSpec | None:
    for spec in blowup_candidates(d, nu):
        if _is_witness(realize_blowup(spec), d, nu):
            return spec
    return None


def _matching_plus_path_removal(spec: BlowUpSpec, d: int, nu: int) -> BlowUpSpec | None:
    """From a (d+1)-regular blow-up, delete a path w-a, w-b plus a perfect
    matching of the rest, leaving an almost d-regular graph."""
    g = realize_blowup(spec)
    for w in range(g.n):
        nbrs = g.neighbors(w)
        for a, b in itertools.combinations(nbrs, 2):
            rest = [v for v in range(g.n) if v not in (w, a, b)]
            h = g.remove_edges([(w, a), (w, b)])
            pm = _perfect_matching(h.induced(rest))
            if pm is None:
                continue
            extra = [(min(w, a), max(w, a)), (min(w, b), max(w, b))]
            extra += sorted((min(rest[x], rest[y]), max(rest[x], rest[y])) for x, y in pm)
            cand = BlowUpSpec(spec.sizes, spec.removals, tuple(extra))
            if _is_witness(realize_blowup(cand), d, nu):
                return cand
    return None


def _perfect_matching(g: Graph) -> list[tuple[int, int]] | None:
    mm = maximum_matching(g)
    if 2 * len(mm) != g.n:
        return None
    return sorted(mm.edges)


@functools.lru_cache(maxsize=None)
def _blowup_witness_spec(d: int, nu: int) -> BlowUpSpec | None:
    spec = _first_uniform(d, nu)
    if spec is not None or d % 2 == 0:
        return spec
    base = _first_uniform(d + 1, nu)
    if base is None:
        return None
    return _matching_plus_path_removal(base, d, nu)


def Bd_spec(d: int) -> BlowUpSpec:
    if d < 2:
        raise ValueError("B_d needs d >= 2")
    spec = _blowup_witness_spec(d, nu_Bd(d))
    if spec is None:
        raise RuntimeError(f"blow-up search found no B_{d}; this is a bug")
    return spec


def construct_Bd(d: int) -> Graph:
    """(Almost) d-regular triangle-free factor-critical graph with matching
    number floor(5d/4) (d even) or floor(5(d+1)/4) (d odd)."""
    return realize_blowup(Bd_spec(d))


@dataclass(frozen=True)
class NotFound:
    d: int
    nu: int
    exhaustive: bool
    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class SearchBudget:
    """``blowup`` enables the blow-up search; ``enumerate_up_to`` is the
    largest order for which the exhaustive enumerator is used as fallback."""

    blowup: bool = True
    enumerate_up_to: int = 11


def find_cd_witness(d: int, nu_target: int, search_budget: SearchBudget = SearchBudget()) -> Graph | NotFound:
    """An (almost) d-regular triangle-free factor-critical graph with matching
    number ``nu_target``, or :class:`NotFound`."""
    if d < 2 or nu_target < 1:
        raise ValueError("need d >= 2 and nu_target >= 1")
    n = 2 * nu_target + 1
    if n <= d:
        return NotFound(d, nu_target, True, f"{n} vertices cannot carry degree {d}")
    if search_budget.blowup:
        spec = _blowup_witness_spec(d, nu_target)
        if spec is not None:
            return realize_blowup(spec)
    if n <= search_budget.enumerate_up_to:
        profile = Regular(d) if d % 2 == 0 else AlmostRegular(d)
        flt = EnumFilter(n, d, triangle_free=True, connected=True, degree_profile=profile)
        for g in enumerate_graphs(flt, budget=max(n, 1), extra=is_factor_critical):
            return g
        return NotFound(d, nu_target, True, f"exhaustive enumeration on {n} vertices")
    return NotFound(d, nu_target, False, "blow-up search space exhausted")


# -- full witnesses -------------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    d: int
    m: int
    graph: Graph
    claimed_edges: int
    status: Status
    case_tag: str
    parts: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.graph.num_edges != self.claimed_edges:
            raise AssertionError("witness edge count disagrees with its claim")

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "edges": self.claimed_edges,
            "status": str(self.status),
            "case": self.case_tag,
            "graph6": formats.graph6_encode(self.graph),
        }


@functools.lru_cache(maxsize=None)
def _component_for(d: int, z: int) -> Graph:
    g = find_cd_witness(d, z, SearchBudget(blowup=True, enumerate_up_to=0))
    if not g:
        if z == nu_Bd(d):
            return construct_Bd(d)
        raise RuntimeError(f"no component witness for d={d}, nu={z}")
    return g


def assemble_triangle_free_witness(d: int, m: int, assume_conjectures: bool = False) -> WitnessReport:
    """Disjoint union of top-size components, then A_d or stars for the remainder."""
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    if d == 1:
        g = disjoint_union([star(1)] * m)
        return WitnessReport(d, m, g, g.num_edges, Status.PROVEN, "d=1: disjoint edges", (f"{m} x K2",))

    zres = resolve_Zd(d, assume_conjectures)
    z = zres.value if zres.resolved else zres.hi  # B_d stands in for an unresolved Z(d)
    k, r = divmod(m, z)
    pieces: list[Graph] = []
    parts: list[str] = []
    if k:
        comp = _component_for(d, z)
        pieces += [comp] * k
        parts.append(f"{k} x C_{d} (nu={z})")
    if r >= d:
        pieces.append(construct_Ad(d))
        parts.append(f"A_{d}")
        if r > d:
            pieces += [star(d)] * (r - d)
            parts.append(f"{r - d} x K1,{d}")
    elif r:
        pieces += [star(d)] * r
        parts.append(f"{r} x K1,{d}")
    g = disjoint_union(pieces)

    ref = f_triangle(d, m, assume_conjectures)
    edges = g.num_edges
    if in_proven_domain(d, m) and edges == ref.value and not ref.is_interval:
        status = Status.PROVEN
    elif assume_conjectures and ref.status is Status.CONJECTURED and edges == ref.value:
        status = Status.CONJECTURED
    else:
        status = Status.LOWER_BOUND
    return WitnessReport(d, m, g, edges, status, ref.case, tuple(parts))


def assemble_general_witness(d: int, m: int) -> WitnessReport:
    """Extremal witness without the triangle-free condition."""
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    if d == 1:
        comp = star(1)
    else:
        comp = construct_general_component(d)
    q, r = divmod(m, (d + 1) // 2)
    g = disjoint_union([comp] * q + [star(d)] * r)
    ref = f_gen(d, m)
    if g.num_edges != ref.value or max_degree(g) > d or matching_number(g) > m:
        raise AssertionError("general witness fails its own postconditions")
    return WitnessReport(d, m, g, g.num_edges, Status.PROVEN, "general graphs", (f"{q} x K{d + 1}'", f"{r} x K1,{d}"))
