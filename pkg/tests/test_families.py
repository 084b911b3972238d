import pytest
from hypothesis import given
from hypothesis import strategies as st

from transirr.dsl import FamilySyntaxError, parse_family, render
from transirr.enumeration import enumerate_free_trees, starlike_arms
from transirr.families import (
    BiStarlikeBSStar,
    BiStarlikeBT,
    BrokenUnitArithmetic,
    FamilyError,
    LineOf,
    Starlike,
    TriangleFiveArm,
    TriangleThreeArm,
    build,
    extremal_long_arm,
    long_arm_length,
    order,
    size,
    unit_arithmetic,
    unit_arithmetic_order,
)
from transirr.graph_core import line_graph

EXPRESSIONS = [
    "T(1,2,3)",
    "T(2,3,4,5)",
    "T[1,2;4,5]",
    "BT^(5)(2,3,5)",
    "BS*(2,3,4)",
    "C3(1;1,4;2,4)",
    "C3(1,2,3)",
    "L(T(2,3,4))",
    "L(L(T(1,1,1)))",
]


@pytest.mark.parametrize("text", EXPRESSIONS)
def test_render_round_trip(text):
    spec = parse_family(text)
    assert render(spec) == text
    assert parse_family(render(spec)) == spec


def test_whitespace_and_canonical_order():
    assert render(parse_family(" T( 3 , 1 ,2 ) ")) == "T(1,2,3)"
    assert render(parse_family("C3(1;4,2;4,1)")) == "C3(1;1,4;2,4)"


@pytest.mark.parametrize(
    "text, offset",
    [("T(1,2", 5), ("Q(1,2,3)", 0), ("T(1,2,3)x", 8), ("T(1,,3)", 4)],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(FamilySyntaxError) as info:
        parse_family(text)
    assert info.value.offset == offset


@pytest.mark.parametrize(
    "text, message",
    [
        ("T(0,1,2)", "arm lengths must be ≥ 1"),
        ("T(1,2)", "at least 3 arms"),
        ("BT^(4)(2,3,5)", "shoulder"),
        ("BS*(2,4)", "consecutive"),
        ("T[1,2;3,4]", "c ≥ b+2"),
    ],
)
def test_validation_errors(text, message):
    with pytest.raises(FamilyError, match=message.replace("+", r"\+")):
        parse_family(text)


def test_t123_build():
    g = build(Starlike((1, 2, 3)))
    assert g.n == 7 and g.is_tree() and starlike_arms(g) == (1, 2, 3)


def test_broken_shape():
    spec = BrokenUnitArithmetic.from_params(1, 3)
    assert spec.arms == (1, 2, 4, 5) and spec.shape_params() == (1, 3)
    assert BrokenUnitArithmetic(1, 2, 5, 7).shape_params() is None


def test_line_graph_family_matches_three_arm_triangle():
    # L(T(a,a+1,a+2)) is C3(a-1,a,a+1) once a >= 2
    for a in range(2, 8):
        lg = build(LineOf(Starlike((a, a + 1, a + 2))))
        tri = build(TriangleThreeArm((a - 1, a, a + 1)))
        assert sorted(lg.degrees()) == sorted(tri.degrees()) and lg.m == tri.m


def test_line_of_builds_line_graph():
    spec = Starlike((2, 2, 3))
    assert build(LineOf(spec)) == line_graph(build(spec))


def test_triangle_five_arm_structure():
    g = build(TriangleFiveArm(1, (1, 4), (2, 4)))
    assert g.n == 3 + 1 + 1 + 4 + 2 + 4
    assert g.m == g.n  # unicyclic


def branching(g):
    return sorted(v for v in range(g.n) if g.degree(v) >= 3)


small = st.integers(1, 12)


@given(small, small)
def test_order_formulas(a, k):
    n = unit_arithmetic_order(a, k)
    if k >= 2:
        spec = unit_arithmetic(a, k)
        assert spec.arms == tuple(range(a, a + k + 1))
        assert build(spec).n == n == order(spec)
    assert 2 * n == (k + 1) * (2 * a + k) + 2
    bs = BiStarlikeBSStar(a, k)
    assert build(bs).n == order(bs) == 2 * n + 1
    assert size(bs) == order(bs) - 1
    ext = extremal_long_arm(a, k)
    assert build(ext).n == n + long_arm_length(a, k)
    if k >= 2:
        br = BrokenUnitArithmetic.from_params(a, k)
        # T(a..a+k+1) minus the arm a+k-1
        assert build(br).n == unit_arithmetic_order(a, k + 1) - (a + k - 1)


@given(st.lists(st.integers(1, 6), min_size=3, max_size=6))
def test_branching_vertex_counts(arms):
    assert len(branching(build(Starlike(tuple(arms))))) == 1
    for s in set(arms):
        g = build(BiStarlikeBT(s, tuple(arms)))
        assert g.is_tree() and len(branching(g)) == 2
        assert g.n == 2 * (1 + sum(arms)) - 1


@given(st.integers(1, 8), st.integers(1, 8))
def test_bs_star_shape(a, k):
    g = build(BiStarlikeBSStar(a, k))
    assert g.is_tree()
    degs = sorted((g.degree(v) for v in branching(g)), reverse=True)
    assert degs == [k + 3, k + 2]


@pytest.mark.parametrize("n", range(4, 13))
def test_starlike_counts_match_single_branch_trees(n):
    from transirr.enumeration import enumerate_starlike

    from_trees = sorted(a for g in enumerate_free_trees(n) if (a := starlike_arms(g)))
    from_parts = sorted(s.arms for s in enumerate_starlike(n))
    assert from_trees == from_parts
