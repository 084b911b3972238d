"""Constructors for the graph families studied here.

Vertex numbering is canonical: the distinguished vertex is 0, then arms in
the order written in the expression, each arm numbered outward from where it hangs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Union

from .graph_core import Graph, line_graph


class FamilyError(ValueError):
    """A family instance violates one of its structural constraints."""


def _check_arms(arms: tuple[int, ...]) -> None:
    if any(k < 1 for k in arms):
        raise FamilyError("arm lengths must be ≥ 1")


@dataclass(frozen=True)
class Starlike:
    """``T(k1,...,kt)``; arms are kept sorted non-decreasing."""

    arms: tuple[int, ...]

    def __post_init__(self) -> None:
        arms = tuple(sorted(self.arms))
        object.__setattr__(self, "arms", arms)
        _check_arms(arms)
        if len(arms) < 3:
            raise FamilyError("a starlike tree needs at least 3 arms")


@dataclass(frozen=True)
class BrokenUnitArithmetic:
    """``T[a,b;c,d]``: arms ``a..b`` and ``c..d`` with ``b+1..c-1`` removed."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise FamilyError("arm lengths must be ≥ 1")
        if not (self.a <= self.b and self.b + 2 <= self.c and self.c <= self.d):
            raise FamilyError(
                "T[a,b;c,d] needs a ≤ b, c ≤ d and at least one removed length (c ≥ b+2)"
            )
        if len(self.arms) < 3:
            raise FamilyError("a starlike tree needs at least 3 arms")

    @classmethod
    def from_params(cls, a: int, k: int) -> "BrokenUnitArithmetic":
        """The shape ``T[a, a+k-2; a+k, a+k+1]``."""
        if a < 1 or k < 2:
            raise FamilyError("broken unit arithmetic needs a ≥ 1 and k ≥ 2")
        return cls(a, a + k - 2, a + k, a + k + 1)

    @property
    def arms(self) -> tuple[int, ...]:
        return tuple(range(self.a, self.b + 1)) + tuple(range(self.c, self.d + 1))

    def shape_params(self) -> tuple[int, int] | None:
        """``(a, k)`` if this is ``T[a,a+k-2;a+k,a+k+1]``, else ``None``."""
        if self.c == self.b + 2 and self.d == self.c + 1:
            return self.a, self.c - self.a
        return None


@dataclass(frozen=True)
class BiStarlikeBT:
    """``BT^(s)(arms)``: copy 1's branching vertex glued to the leaf of an s-arm of copy 2."""

    shoulder: int
    arms: tuple[int, ...]

    def __post_init__(self) -> None:
        arms = tuple(sorted(self.arms))
        object.__setattr__(self, "arms", arms)
        _check_arms(arms)
        if len(arms) < 3:
            raise FamilyError("a starlike tree needs at least 3 arms")
        if self.shoulder not in arms:
            raise FamilyError(f"BT shoulder {self.shoulder} is not one of the arm lengths")


@dataclass(frozen=True)
class BiStarlikeBSStar:
    """``BS*(a,...,a+k)``: two unit arithmetic copies joined centre to centre plus a pendant."""

    a: int
    k: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise FamilyError("arm lengths must be ≥ 1")
        if self.k < 1:
            raise FamilyError("BS* needs at least two consecutive arm lengths (k ≥ 1)")

    @property
    def arms(self) -> tuple[int, ...]:
        return tuple(range(self.a, self.a + self.k + 1))


@dataclass(frozen=True)
class TriangleFiveArm:
    """``C3(k1;k2,k3;k4,k5)``; pairs sorted, then ordered lexicographically."""

    k1: int
    pair1: tuple[int, int]
    pair2: tuple[int, int]

    def __post_init__(self) -> None:
        p1, p2 = sorted([tuple(sorted(self.pair1)), tuple(sorted(self.pair2))])
        object.__setattr__(self, "pair1", p1)
        object.__setattr__(self, "pair2", p2)
        _check_arms((self.k1, *p1, *p2))

    def triangle_param(self) -> int | None:
        """``k`` if this is ``C3(1;1,k;2,k)``."""
        k = self.pair1[1]
        if self.k1 == 1 and self.pair1 == (1, k) and self.pair2 == (2, k):
            return k
        return None


@dataclass(frozen=True)
class TriangleThreeArm:
    """``C3(k1,k2,k3)``: one pendant path at each triangle vertex."""

    arms: tuple[int, int, int]

    def __post_init__(self) -> None:
        arms = tuple(sorted(self.arms))
        if len(arms) != 3:
            raise FamilyError("C3(k1,k2,k3) takes exactly three arms")
        object.__setattr__(self, "arms", arms)
        _check_arms(arms)


@dataclass(frozen=True)
class LineOf:
    inner: "FamilySpec"


FamilySpec = Union[
    Starlike,
    BrokenUnitArithmetic,
    BiStarlikeBT,
    BiStarlikeBSStar,
    TriangleFiveArm,
    TriangleThreeArm,
    LineOf,
]


def unit_arithmetic(a: int, k: int) -> Starlike:
    if a < 1:
        raise FamilyError("arm lengths must be ≥ 1")
    if k < 2:
        raise FamilyError("unit arithmetic starlike trees need k ≥ 2")
    return Starlike(tuple(range(a, a + k + 1)))


def long_arm_length(a: int, k: int) -> int:
    doubled = (2 * a + k) * (k + 1)
    assert doubled % 2 == 0
    return doubled // 2


def extremal_long_arm(a: int, k: int) -> Starlike:
    """``T(a,...,a+k, (a+k/2)(k+1))``, whose longest arm equals the sum of the others."""
    if a < 1 or k < 1:
        raise FamilyError("extremal_long_arm needs a ≥ 1 and k ≥ 1")
    return Starlike(tuple(range(a, a + k + 1)) + (long_arm_length(a, k),))


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def path(self, at: int, length: int) -> list[int]:
        out = []
        prev = at
        for _ in range(length):
            v = self.vertex()
            self.edge(prev, v)
            out.append(v)
            prev = v
        return out

    def star(self, arms) -> int:
        centre = self.vertex()
        for k in arms:
            self.path(centre, k)
        return centre

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def build(spec: FamilySpec) -> Graph:
    if isinstance(spec, LineOf):
        return line_graph(build(spec.inner))

    b = _Builder()
    if isinstance(spec, (Starlike, BrokenUnitArithmetic)):
        b.star(spec.arms)
    elif isinstance(spec, BiStarlikeBT):
        glue = b.star(spec.arms)
        centre2 = b.vertex()
        glued = False
        for k in spec.arms:
            if k == spec.shoulder and not glued:
                # this arm's leaf is the first copy's branching vertex
                inner = b.path(centre2, k - 1)
                b.edge(inner[-1] if inner else centre2, glue)
                glued = True
            else:
                b.path(centre2, k)
    elif isinstance(spec, BiStarlikeBSStar):
        c1 = b.star(spec.arms)
        c2 = b.star(spec.arms)
        b.edge(c1, c2)
        b.path(c1, 1)
    elif isinstance(spec, TriangleFiveArm):
        x, y, z = b.vertex(), b.vertex(), b.vertex()
        b.edge(x, y)
        b.edge(y, z)
        b.edge(x, z)
        b.path(x, spec.k1)
        for k in spec.pair1:
            b.path(y, k)
        for k in spec.pair2:
            b.path(z, k)
    elif isinstance(spec, TriangleThreeArm):
        tri = [b.vertex() for _ in range(3)]
        b.edge(tri[0], tri[1])
        b.edge(tri[1], tri[2])
        b.edge(tri[0], tri[2])
        for v, k in zip(tri, spec.arms):
            b.path(v, k)
    else:
        raise TypeError(f"not a family spec: {spec!r}")
    return b.graph()


def order(spec: FamilySpec) -> int:
    """Vertex count from each family's closed form, without building anything."""
    if isinstance(spec, (Starlike, BrokenUnitArithmetic)):
        return 1 + sum(spec.arms)
    if isinstance(spec, BiStarlikeBT):
        return 2 * (1 + sum(spec.arms)) - 1
    if isinstance(spec, BiStarlikeBSStar):
        return (spec.k + 1) * (2 * spec.a + spec.k) + 3
    if isinstance(spec, TriangleFiveArm):
        return 3 + spec.k1 + sum(spec.pair1) + sum(spec.pair2)
    if isinstance(spec, TriangleThreeArm):
        return 3 + sum(spec.arms)
    if isinstance(spec, LineOf):
        return size(spec.inner)
    raise TypeError(f"not a family spec: {spec!r}")


def size(spec: FamilySpec) -> int:
    """Edge count; trees have n-1 edges and the triangle families are unicyclic."""
    if isinstance(spec, (TriangleFiveArm, TriangleThreeArm)):
        return order(spec)
    if isinstance(spec, LineOf):
        return sum(comb(d, 2) for d in build(spec.inner).degrees())
    return order(spec) - 1


def unit_arithmetic_order(a: int, k: int) -> int:
    """``(k+1)(a+k/2)+1`` evaluated on doubled integers."""
    doubled = (k + 1) * (2 * a + k)
    assert doubled % 2 == 0
    return doubled // 2 + 1
