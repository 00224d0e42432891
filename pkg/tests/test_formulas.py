import pytest
from hypothesis import given, strategies as st

from tfextremal.formulas import (
    MAX_PARAM,
    Status,
    f_gen,
    f_triangle,
    g_triangle,
    h_triangle,
    in_proven_domain,
    resolve_Zd,
)

from naive import f_gen_naive, theorem_value

PAIRS = [(d, m) for d in range(1, 11) for m in range(1, 41)]


def test_resolve_Zd_examples():
    assert str(resolve_Zd(6)) == "Exact(7)"
    assert str(resolve_Zd(5)) == "Exact(6)"
    assert str(resolve_Zd(9)) == "Interval(10, 12)"
    assert str(resolve_Zd(9, True)) == "ConjecturedExact(12)"
    assert resolve_Zd(2).value == 2 and resolve_Zd(3).value == 3 and resolve_Zd(4).value == 5
    with pytest.raises(ValueError):
        resolve_Zd(1)
    with pytest.raises(ValueError):
        resolve_Zd(9).value


def test_Z7_uses_the_nineteen_vertex_construction():
    z = resolve_Zd(7)
    assert (z.lo, z.hi) == (8, 9)
    assert resolve_Zd(7, True).value == 9


@pytest.mark.parametrize("d", range(2, 60))
def test_Zd_bounds(d):
    for flag in (False, True):
        z = resolve_Zd(d, flag)
        assert d <= z.lo <= z.hi < 2 * d
        assert 5 * (d - 1) // 4 <= z.lo
        assert z.hi <= 5 * (d + 1) // 4
        if d % 2 == 0:
            assert z.kind == "exact" and z.lo == 5 * d // 4


def test_f_gen_examples():
    assert f_gen(4, 5).value == 24
    assert f_gen(1, 9).value == 9
    assert f_gen(3, 7).value == 24
    assert f_gen(4, 5).status is Status.PROVEN


def test_f_triangle_examples():
    assert f_triangle(3, 3).value == 10
    v = f_triangle(6, 13)
    assert v.value == 82 and v.status is Status.PROVEN
    assert f_triangle(4, 5).value == 22


def test_argument_range():
    for bad in [(0, 1), (1, 0), (MAX_PARAM + 1, 1)]:
        with pytest.raises(ValueError):
            f_triangle(*bad)
    assert f_triangle(MAX_PARAM, MAX_PARAM).value == MAX_PARAM**2 + 1


@pytest.mark.parametrize("d, m", PAIRS)
def test_unified_formula_matches_case_theorems(d, m):
    if not in_proven_domain(d, m):
        return
    v = f_triangle(d, m)
    assert v.status is Status.PROVEN and not v.is_interval
    assert v.value == theorem_value(d, m)


@pytest.mark.parametrize("d, m", PAIRS)
def test_bounds_and_order(d, m):
    for flag in (False, True):
        v = f_triangle(d, m, flag)
        g = f_gen(d, m).value
        assert d * m <= v.value <= v.upper <= g <= (d + 1) * m
        assert g == f_gen_naive(d, m)


def test_monotone_in_m():
    for d in range(1, 11):
        prev = 0
        for m in range(1, 41):
            if in_proven_domain(d, m):
                v = f_triangle(d, m).value
                assert v >= prev
                prev = v


def test_status_flags_in_open_domain():
    v = f_triangle(9, 30)
    assert v.status is Status.UNKNOWN and v.is_interval
    v = f_triangle(9, 30, True)
    assert v.status is Status.CONJECTURED and not v.is_interval and (v.k, v.r) == (2, 6)
    v = f_triangle(8, 9)
    assert v.status is Status.UNKNOWN and not v.is_interval
    assert f_triangle(8, 9, True).status is Status.CONJECTURED
    assert f_triangle(8, 12).status is Status.PROVEN
    assert in_proven_domain(7, 8) is None and in_proven_domain(7, 9) is True


def test_g_triangle_examples():
    assert g_triangle(5, 5).value == 1
    assert g_triangle(6, 7).value == 3
    v = g_triangle(9, 10, True)
    assert v.value == 2 and v.status is Status.CONJECTURED
    with pytest.raises(ValueError):
        g_triangle(6, 8)
    with pytest.raises(ValueError):
        g_triangle(6, 5)


@pytest.mark.parametrize("d", range(2, 14))
def test_g_triangle_endpoints(d):
    z = resolve_Zd(d, True).value
    assert g_triangle(d, d, True).value == 1
    assert g_triangle(d, z, True).value == d // 2
    for i in range(d + 1, z):
        assert g_triangle(d, i, True).value == i - d + 1


def test_h_triangle_examples():
    assert h_triangle(2, 7) == 4
    assert h_triangle(1, 5) == 0
    assert h_triangle(4, 4) == 3
    assert h_triangle(3, 3) == 0
    assert h_triangle(5, 2) == 0
    with pytest.raises(ValueError):
        h_triangle(9, 30)


@pytest.mark.parametrize("d, m", PAIRS)
def test_h_is_the_difference(d, m):
    if in_proven_domain(d, m):
        assert h_triangle(d, m) == f_gen(d, m).value - f_triangle(d, m).value


@given(st.integers(1, 400), st.integers(1, 400), st.booleans())
def test_value_bounds_property(d, m, flag):
    v = f_triangle(d, m, flag)
    assert d * m <= v.value <= v.upper <= (d + 1) * m
    if in_proven_domain(d, m):
        assert v.status is Status.PROVEN
    elif flag and v.status is not Status.UNKNOWN:
        assert v.status is Status.CONJECTURED
