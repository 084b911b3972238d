from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transirr import classify as cl
from transirr.classify import Status
from transirr.dsl import parse_family
from transirr.families import BiStarlikeBSStar, LineOf, Starlike, TriangleFiveArm, build, unit_arithmetic
from transirr.graph_core import transmission_profile

IRR, NOT, NONE = Status.IRREGULAR, Status.NOT_IRREGULAR, Status.NO_VERDICT


def ti(spec):
    return transmission_profile(build(spec)).is_irregular


def test_starlike3_examples():
    v = cl.classify_starlike3(2, 3, 4)
    assert v.status is NOT
    assert v.witness == {"set": "N_xz", "i": 1, "k": 2, "p": 1, "gcd": 1}
    assert cl.classify_starlike3(3, 4, 5).status is IRR
    assert cl.classify_starlike3(1, 1, 5).clause == "repeated arm length"
    assert cl.classify_starlike3(1, 2, 5).clause == "k3 > k1 + k2"
    with pytest.raises(ValueError):
        cl.classify_starlike3(0, 1, 2)


def _one_arm_rule(k2, k3):
    if k3 != k2 + 1:
        return False
    # k2 = (t^2-1)/2 or (t^2-2)/2 means 2k2+1 or 2k2+2 is a square
    return not any(isqrt(x) ** 2 == x for x in (2 * k2 + 1, 2 * k2 + 2))


@pytest.mark.parametrize("k2", range(2, 40))
def test_shortest_arm_one(k2):
    for k3 in range(k2 + 1, k2 + 3):
        expected = _one_arm_rule(k2, k3)
        assert ti(Starlike((1, k2, k3))) == expected
        assert (cl.classify_starlike3(1, k2, k3).status is IRR) == expected


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 30))
def test_starlike3_matches_oracle(x, y, z):
    verdict = cl.classify_starlike3(x, y, z)
    assert verdict.status is not NONE
    assert (verdict.status is IRR) == ti(Starlike((x, y, z)))
    hit = cl.exceptional_membership(*sorted((x, y, z)))
    if verdict.witness and "set" in verdict.witness:
        k1, k2, k3 = sorted((x, y, z))
        assert hit.reconstruct(k1, k2) == (k1, k2, k3)


def test_printed_xz_variant_disagrees_somewhere():
    wrong = [
        (k1, k2, k3)
        for k1 in range(1, 13)
        for k2 in range(k1 + 1, 13)
        for k3 in range(k2 + 1, k1 + k2 + 1)
        if (cl.classify_starlike3(k1, k2, k3, printed_xz=True).status is IRR) != ti(Starlike((k1, k2, k3)))
    ]
    # T(1,4,5) is not irregular (2*4+1 = 9), yet the printed form misses it
    assert (1, 4, 5) in wrong


def test_unit_arithmetic_examples():
    assert cl.classify_unit_arithmetic(1, 2).status is IRR
    v = cl.classify_unit_arithmetic(3, 4)
    assert v.status is NOT and v.source == "T2.6" and v.witness["x"] == 2
    assert cl.classify_unit_arithmetic(2, 3).witness["order"] == 15
    with pytest.raises(ValueError):
        cl.classify_unit_arithmetic(1, 1)


@pytest.mark.parametrize("a", range(1, 9))
@pytest.mark.parametrize("k", range(2, 9))
def test_unit_arithmetic_soundness(a, k):
    v = cl.classify_unit_arithmetic(a, k)
    if v.status is not NONE:
        assert (v.status is IRR) == ti(unit_arithmetic(a, k))


def test_consecutive3():
    assert cl.classify_consecutive3(1).status is IRR
    assert cl.classify_consecutive3(49).status is IRR
    v = cl.classify_consecutive3(2)
    assert v.status is NOT and v.witness == {"t": 1, "transmission": 25}


def test_one_to_ell():
    assert cl.classify_one_to_ell(5).witness == {"r": 2}
    assert cl.classify_one_to_ell(10).status is NOT
    assert cl.classify_one_to_ell(7).status is IRR
    with pytest.raises(ValueError):
        cl.classify_one_to_ell(2)


def test_broken():
    assert cl.classify_broken(1, 3).status is IRR
    assert cl.classify_broken(2, 4).status is IRR
    assert cl.classify_broken(1, 2).status is IRR
    assert cl.classify_broken(2, 2).status is NONE


def test_extremal_and_printed_corollary():
    v = cl.classify_extremal(2, 1)
    assert v.status is NONE and v.witness == {"square": 16}
    assert not ti(Starlike((2, 3, 5)))
    # the printed corollary sets miss the square and would wrongly say irregular
    assert cl.classify_cor34_printed(2).status is IRR


def test_bs_star():
    assert cl.classify_bs_star(2, 1).status is IRR
    assert cl.classify_bs_star(1, 3).status is NONE
    assert cl.classify_bs_star(5, 4).status is IRR
    assert ti(BiStarlikeBSStar(5, 4))


def test_triangle():
    assert cl.classify_triangle(3).status is IRR
    v = cl.classify_triangle(7)
    assert v.status is NONE and 16 in v.witness["intersection"]
    for k in range(3, 25):
        if cl.classify_triangle(k).status is IRR:
            assert ti(TriangleFiveArm(1, (1, k), (2, k)))
    with pytest.raises(ValueError):
        cl.classify_triangle(2)


def test_line_graph():
    assert cl.classify_line_consecutive3(2).status is IRR
    assert cl.classify_line_consecutive3(3).witness == {"p": 1}
    # complementarity with the tree itself
    assert not ti(Starlike((2, 3, 4))) and ti(LineOf(Starlike((2, 3, 4))))


def test_necessary_condition():
    assert cl.necessary_condition((1, 1, 5)) is False
    assert cl.necessary_condition((2, 3, 5)) is True
    assert cl.necessary_condition((1, 2, 3)) is True


@pytest.mark.parametrize(
    "text, status, source",
    [
        ("T(1,2,3)", IRR, "T1"),
        ("T(2,3,4)", NOT, "T1"),
        ("T(1,2,3,4,5)", NOT, "T2.5"),
        ("T(1,1,1,9)", NOT, "P1.5"),
        ("T(3,4,5,6,7)", NOT, "T2.6"),
        ("T[1,2;4,5]", IRR, "T3.1"),
        ("BS*(2,3)", IRR, "T3.5"),
        ("C3(1;1,3;2,3)", IRR, "P4.1"),
        ("L(T(2,3,4))", IRR, "T4.2"),
        ("C3(2,3,4)", NOT, "T4.2"),
    ],
)
def test_dispatch(text, status, source):
    v = cl.classify_family(parse_family(text))
    assert (v.status, v.source) == (status, source)
    if v.status is not NONE:
        assert (v.status is IRR) == ti(parse_family(text))
