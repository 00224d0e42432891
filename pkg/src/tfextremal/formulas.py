"""Closed-form extremal values.

``f_triangle(d, m)`` is the largest edge count of a triangle-free graph with
maximum degree at most ``d`` and matching number at most ``m``;
``f_gen`` drops the triangle-free condition.  Every value carries the
status of the argument behind it, so proven and conjectured numbers are
never confused.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

__all__ = [
    "MAX_PARAM",
    "Status",
    "ZdResolution",
    "ExtremalValue",
    "resolve_Zd",
    "nu_Bd",
    "f_gen",
    "f_triangle",
    "g_triangle",
    "h_triangle",
    "in_proven_domain",
]

MAX_PARAM = 10**6


class Status(str, enum.Enum):
    PROVEN = "ProvenOptimal"
    CONJECTURED = "ConjecturedOptimal"
    UNKNOWN = "Unknown"
    LOWER_BOUND = "LowerBound"

    def __str__(self) -> str:
        return self.value


_STRENGTH = {Status.PROVEN: 3, Status.CONJECTURED: 2, Status.LOWER_BOUND: 1, Status.UNKNOWN: 0}


def weakest(statuses) -> Status:
    return min(statuses, key=_STRENGTH.__getitem__, default=Status.PROVEN)


@dataclass(frozen=True)
class ZdResolution:
    """Z(d): least matching number of an (almost) d-regular triangle-free
    factor-critical graph.  ``kind`` is ``exact``, ``interval`` or
    ``conjectured``; for the first and last ``lo == hi``."""

    d: int
    kind: str
    lo: int
    hi: int
    provenance: str

    @property
    def resolved(self) -> bool:
        return self.kind in ("exact", "conjectured")

    @property
    def value(self) -> int:
        if not self.resolved:
            raise ValueError(f"Z({self.d}) is only known to lie in [{self.lo}, {self.hi}]")
        return self.lo

    def candidates(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        if self.kind == "exact":
            return f"Exact({self.lo})"
        if self.kind == "conjectured":
            return f"ConjecturedExact({self.lo})"
        return f"Interval({self.lo}, {self.hi})"


@dataclass(frozen=True)
class ExtremalValue:
    """A computed extremal edge count.

    ``value`` and ``upper`` coincide unless Z(d) is unresolved, in which case
    they bracket the formula over every admissible Z(d).
    """

    d: int
    m: int
    value: int
    status: Status
    case: str
    k: int | None = None
    r: int | None = None
    upper: int | None = None

    def __post_init__(self) -> None:
        if self.upper is None:
            object.__setattr__(self, "upper", self.value)

    @property
    def is_interval(self) -> bool:
        return self.upper != self.value

    def __str__(self) -> str:
        v = f"{self.value}" if not self.is_interval else f"[{self.value}, {self.upper}]"
        return f"{v} ({self.status}; {self.case})"


def _check(d: int, m: int) -> None:
    if not (1 <= d <= MAX_PARAM and 1 <= m <= MAX_PARAM):
        raise ValueError(f"d and m must lie in [1, {MAX_PARAM}], got d={d}, m={m}")


def nu_Bd(d: int) -> int:
    """Matching number of the blow-up family member for degree ``d``."""
    return 5 * d // 4 if d % 2 == 0 else 5 * (d + 1) // 4


def resolve_Zd(d: int, assume_conjecture: bool = False) -> ZdResolution:
    if d < 2:
        raise ValueError("Z(d) is defined for d >= 2")
    if d in (2, 3):
        return ZdResolution(d, "exact", d, d, "Z(d)=d for d in {2,3}")
    if d == 5:
        return ZdResolution(d, "exact", 6, 6, "Z(5)=6 by computer search")
    if d % 2 == 0:
        z = 5 * d // 4
        return ZdResolution(d, "exact", z, z, "even d: Z(d)=floor(5d/4)")
    # the (1, (d-1)/2, d-1, d-1, (d-1)/2) blow-up gives 3(d-1)/2, better only at d = 7
    hi = min(nu_Bd(d), 3 * (d - 1) // 2)
    if assume_conjecture:
        return ZdResolution(d, "conjectured", hi, hi, "conjectured: smallest known construction is optimal")
    # Z(d) >= d+1 for d >= 4 tightens the lower end at d = 7
    lo = max(5 * (d - 1) // 4, d + 1)
    return ZdResolution(d, "interval", lo, hi, "odd d: degree-density lower bound, construction upper bound")


def f_gen(d: int, m: int) -> ExtremalValue:
    """Maximum size without the triangle-free condition."""
    _check(d, m)
    half_up = (d + 1) // 2
    q, r = divmod(m, half_up)
    return ExtremalValue(d, m, d * m + (d // 2) * q, Status.PROVEN, "general graphs", k=q, r=r)


def _star_formula(d: int, m: int, z: int) -> tuple[int, int, int]:
    k, r = divmod(m, z)
    value = d * m + k * (d // 2)
    if r >= d:
        value += r - d + 1
    return value, k, r


def in_proven_domain(d: int, m: int) -> bool | None:
    """True/False when decidable; None when it hinges on an unresolved Z(d)."""
    _check(d, m)
    if d == 1 or d >= m or d <= 6:
        return True
    if m >= 2 * d:
        return False
    z = resolve_Zd(d)
    if m >= z.hi:
        return True
    if m < z.lo:
        return False
    return None


def _case_tag(d: int, m: int, proven: bool | None) -> str:
    if d == 1:
        return "d=1: disjoint edges"
    if d > m:
        return "d>m: star forest"
    if d == m:
        return "d=m"
    if d <= 3:
        return "d in {2,3}, m>d"
    if d <= 6:
        return "d in {4,5,6}, m>d"
    if proven:
        return "Z(d)<=m<2d"
    return "open: 7<=d<m, m<Z(d) or m>=2d"


def f_triangle(d: int, m: int, assume_conjectures: bool = False) -> ExtremalValue:
    """Maximum size of a triangle-free graph with max degree <= d and matching number <= m."""
    _check(d, m)
    if d == 1:
        return ExtremalValue(d, m, m, Status.PROVEN, _case_tag(d, m, True), k=0, r=m)
    if d > m:
        return ExtremalValue(d, m, d * m, Status.PROVEN, _case_tag(d, m, True), k=0, r=m)

    proven = in_proven_domain(d, m)
    zres = resolve_Zd(d, assume_conjectures)
    results = [_star_formula(d, m, z) for z in zres.candidates()]
    if proven:
        # only Z values consistent with the proven case can occur
        if d < m and not zres.resolved:
            results = [_star_formula(d, m, z) for z in zres.candidates() if z <= m]
        status = Status.PROVEN
    elif zres.resolved and assume_conjectures:
        status = Status.CONJECTURED
    else:
        status = Status.UNKNOWN
    values = [v for v, _, _ in results]
    lo, hi = min(values), max(values)
    k = r = None
    if len(results) == 1:
        _, k, r = results[0]
    return ExtremalValue(d, m, lo, status, _case_tag(d, m, proven), k=k, r=r, upper=hi)


def g_triangle(d: int, i: int, assume_conjectures: bool = False) -> ExtremalValue:
    """Edge surplus ``f_triangle(d, i) - d*i`` of a component with matching number ``i``."""
    if d < 2:
        raise ValueError("g_triangle needs d >= 2")
    zres = resolve_Zd(d, assume_conjectures)
    if not d <= i <= zres.hi:
        raise ValueError(f"i={i} outside [{d}, {zres.hi}]")
    f = f_triangle(d, i, assume_conjectures)
    return replace(f, value=f.value - d * i, upper=f.upper - d * i)


def h_triangle(d: int, m: int) -> int:
    """Edges lost to the triangle-free condition, ``f_gen - f_triangle``,
    by case analysis on (d, m).  Only defined where ``f_triangle`` is proven."""
    _check(d, m)
    if not in_proven_domain(d, m):
        raise ValueError(f"(d={d}, m={m}) is outside the proven domain")
    half = d // 2
    if m < d:
        return 0 if m < (d + 1) // 2 else half
    if m == d:
        if d == 1:
            return 0
        return d - 1 if d % 2 == 0 else half - 1
    if d == 1:
        return 0
    if d == 2:
        return m - m // 2
    if d == 3:
        return m // 2 - m // 3
    tail = 1 if (m + 1) % (d + 1) == 0 else 0
    if d == 4:
        return 2 * (m // 2) - 2 * (m // 5) - tail
    if d == 5:
        return 2 * (m // 3) - 2 * (m // 6) - tail
    if d == 6:
        return 3 * (m // 3) - 3 * (m // 7) - tail
    return half if m < 3 * ((d + 1) // 2) else 2 * half
