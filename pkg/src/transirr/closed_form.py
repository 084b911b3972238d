"""Closed-form transmission layer sets.

Each builder returns a :class:`LayerSets` whose layers hold transmission
offsets relative to ``offset_base``.  ``offset_base`` is always computed from
arm lengths, never from a BFS, so comparing :meth:`LayerSets.transmissions`
with the oracle is a genuine two-sided check.

Everything is integer arithmetic.  Expressions with a ``k/2`` are evaluated on
doubled values and halved only after a parity assertion.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .families import long_arm_length


class ParameterError(ValueError):
    pass


def _half(doubled: int) -> int:
    assert doubled % 2 == 0, f"{doubled} is odd, cannot halve exactly"
    return doubled // 2


@dataclass(frozen=True)
class LayerSets:
    family: str
    params: dict
    constant: int | None
    offset_base: int
    layers: dict[str, tuple[int, ...]]
    # False when offset_base is a reference value rather than some vertex's transmission
    base_is_vertex: bool = True
    extra: dict = field(default_factory=dict)

    def transmissions(self) -> list[int]:
        """The predicted transmission multiset, sorted."""
        out = [self.offset_base] if self.base_is_vertex else []
        for values in self.layers.values():
            out.extend(v + self.offset_base for v in values)
        return sorted(out)

    def duplicates(self) -> list[int]:
        """Offsets occurring in more than one layer (global multiset merge)."""
        counts = Counter(v for values in self.layers.values() for v in values)
        if self.base_is_vertex:
            counts[0] += 1
        return sorted(v for v, c in counts.items() if c > 1)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "constant": self.constant,
            "offset_base": self.offset_base,
            "layers": {key: list(vals) for key, vals in self.layers.items()},
        }


def _star_transmission(arms) -> int:
    # centre of a starlike tree: each arm of length L contributes 1+2+...+L
    return sum(L * (L + 1) // 2 for L in arms)


def unit_constant(a: int, k: int) -> int:
    """``s = (k-1)(a+k/2-1) - 2``, i.e. n - 2(a+k+1) for ``T(a..a+k)``."""
    return _half((k - 1) * (2 * a + k - 2) - 4)


def _layer_rows(a: int, k: int, step: int) -> dict[str, tuple[int, ...]]:
    """``{p*step + p(p-1) + 2pi}`` with ``i`` up to ``k+1`` (shrinking once ``p > a``)."""
    rows = {}
    for p in range(1, a + k + 1):
        count = k + 1 if p <= a else (k + 1) - (p - a)
        rows[str(p)] = tuple(p * step + p * (p - 1) + 2 * p * i for i in range(1, count + 1))
    return rows


def bp_sets(a: int, k: int) -> LayerSets:
    """Layers of ``T(a, a+1, ..., a+k)`` by distance ``p`` from the branching vertex.

    The element for ``i`` is the vertex at distance ``p`` on the ``(a+k+1-i)``-arm.
    Offsets are relative to the branching vertex's own transmission.
    """
    if a < 1 or k < 2:
        raise ParameterError("bp_sets needs a ≥ 1 and k ≥ 2")
    s = unit_constant(a, k)
    return LayerSets(
        family="unit-arithmetic",
        params={"a": a, "k": k},
        constant=s,
        offset_base=_star_transmission(range(a, a + k + 1)),
        layers=_layer_rows(a, k, s),
    )


def claim_a_printed_offset(a: int, k: int) -> int:
    """The published layer shift ``Tr(v) + s + 2``.

    Kept only so the verification harness can show that it does not
    reproduce the oracle; :func:`bp_sets` uses ``Tr(v)``.
    """
    return bp_sets(a, k).offset_base + unit_constant(a, k) + 2


def extremal_constant(a: int, k: int) -> int:
    return (k - 1) * (2 * a + k) + 2 * a - 1


def dp_sets(a: int, k: int) -> LayerSets:
    """Layers of the extremal tree ``T(a..a+k, (a+k/2)(k+1))``.

    ``D_p`` covers the short arms; the long arm contributes the squares
    ``1, 4, ..., M^2`` and is kept under the ``"long"`` key.
    """
    if a < 1 or k < 1:
        raise ParameterError("dp_sets needs a ≥ 1 and k ≥ 1")
    h = extremal_constant(a, k)
    M = long_arm_length(a, k)
    layers = _layer_rows(a, k, h)
    layers["long"] = tuple(q * q for q in range(1, M + 1))
    return LayerSets(
        family="extremal",
        params={"a": a, "k": k},
        constant=h,
        offset_base=_star_transmission([*range(a, a + k + 1), M]),
        layers=layers,
        extra={"long_arm": M},
    )


def d_union(a: int, k: int) -> list[int]:
    """All elements of the short-arm layers ``D_1 ... D_{a+k}``."""
    ls = dp_sets(a, k)
    return sorted(v for key, vals in ls.layers.items() if key != "long" for v in vals)


def square_interval(a: int, k: int) -> tuple[int, int]:
    """``[k(2a+k-1)+1, (a+k/2)^2 (k+1)^2]``."""
    return k * (2 * a + k - 1) + 1, long_arm_length(a, k) ** 2


def cor34_printed_sets(a: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two sets printed for ``T(a, a+1, 2a+1)``.

    They differ from ``D_p`` at ``k = 1`` by ``+p``; kept for discrepancy reports.
    """
    first = tuple(p * (2 * a - 1) + p * p for p in range(1, a + 2))
    second = tuple(p * (2 * a - 1) + p * p + 2 * p for p in range(1, a + 1))
    return first, second


def broken_parts(a: int, k: int) -> tuple[dict[int, tuple[int, ...]], dict[int, tuple[int, ...]]]:
    """Offsets of ``T[a, a+k-2; a+k, a+k+1]`` split into the diametrical path and the rest.

    A vertex at distance ``p`` on an arm of length ``L`` sits at offset
    ``ps + p(p-1) + 2p(a+k+2-L)`` where ``s`` is the constant of ``T(a..a+k)``.
    ``first[p]`` holds the two diametrical arms (``a+k+1`` and ``a+k``), and
    ``second[p]`` the arms ``a..a+k-2``.
    """
    s = unit_constant(a, k)

    def offset(p: int, L: int) -> int:
        return p * s + p * (p - 1) + 2 * p * (a + k + 2 - L)

    first = {
        p: tuple(offset(p, L) for L in (a + k + 1, a + k) if p <= L)
        for p in range(1, a + k + 2)
    }
    second = {
        p: tuple(offset(p, L) for L in range(a + k - 2, a - 1, -1) if p <= L)
        for p in range(1, a + k - 1)
    }
    return first, second


def broken_printed_second(a: int, k: int) -> dict[int, tuple[int, ...]]:
    """The non-diametrical sets exactly as printed, ``{ps + p(p-1) + 2(p+1)i}``.

    They have ``k+1`` elements per layer where only ``k-1`` arms exist; kept for
    discrepancy reports.
    """
    s = unit_constant(a, k)
    out = {}
    for p in range(1, a + k - 1):
        count = k + 1 if p <= a else (k + 1) - (p - a)
        out[p] = tuple(p * s + p * (p - 1) + 2 * (p + 1) * i for i in range(1, count + 1))
    return out


def broken_sets(a: int, k: int) -> LayerSets:
    if a < 1 or k < 2:
        raise ParameterError("broken_sets needs a ≥ 1 and k ≥ 2")
    first, second = broken_parts(a, k)
    layers = {}
    for p in range(1, a + k + 2):
        layers[str(p)] = tuple(sorted(first[p] + second.get(p, ())))
    arms = [*range(a, a + k - 1), a + k, a + k + 1]
    return LayerSets(
        family="broken-unit-arithmetic",
        params={"a": a, "k": k},
        constant=unit_constant(a, k),
        offset_base=_star_transmission(arms),
        layers=layers,
    )


def shoulder_constant(a: int, k: int) -> int:
    """``t = C(k,2) + ak + 1``."""
    return comb(k, 2) + a * k + 1


def bs_star_sets(a: int, k: int) -> LayerSets:
    """Layers of ``BS*(a..a+k)`` relative to the degree-``(k+3)`` centre.

    Key ``"i"`` is ``A_i`` (``"1"`` also carries the pendant vertex), key
    ``"i'"`` is the mirror copy shifted by one, and ``"0'"`` is the second centre.
    """
    if a <= 1:
        raise ParameterError("bs_star_sets needs a > 1")
    if k < 1:
        raise ParameterError("bs_star_sets needs k ≥ 1")
    t = shoulder_constant(a, k)
    pendant = 2 * t + 2 * (a + k) - 1
    base_layers = {}
    for i in range(1, a + k + 1):
        top = k if i <= a else k + a - i
        base_layers[i] = tuple(2 * i * t + i * i + 2 * i * j for j in range(top + 1))
    layers: dict[str, tuple[int, ...]] = {}
    for i, vals in base_layers.items():
        layers[str(i)] = tuple(sorted(vals + (pendant,))) if i == 1 else vals
    layers["0'"] = (1,)
    for i, vals in base_layers.items():
        layers[f"{i}'"] = tuple(v + 1 for v in vals)
    star = _star_transmission(range(a, a + k + 1))
    copy_order = _half((k + 1) * (2 * a + k)) + 1
    return LayerSets(
        family="bs-star",
        params={"a": a, "k": k},
        constant=t,
        # own arms, the pendant, and each vertex of the other copy at one step further
        offset_base=2 * star + 1 + copy_order,
        layers=layers,
        extra={"pendant": pendant, "A": {str(i): v for i, v in base_layers.items()}},
    )


def triangle_sets(k: int) -> LayerSets:
    """Sets for ``C3(1;1,k;2,k)`` relative to ``(k+1)^2``."""
    if k < 3:
        raise ParameterError("triangle_sets needs k ≥ 3")
    a0 = (k + 9, 2 * k + 11, 2 * k + 14, 3 * k + 14, 4 * k + 16)
    a1 = tuple(x + 1 for x in a0)
    squares = tuple(i * i for i in range(3, k + 4))
    base = (k + 1) ** 2
    anchors = {
        "w": k * k + 3 * k + 10,
        "u": base + 9,
        "v": base + 8,
        "w'": k * k + 5 * k + 15,
        "v''": base + 4 * k + 16,
    }
    return LayerSets(
        family="triangle",
        params={"k": k},
        constant=None,
        offset_base=base,
        layers={
            "D": a0,
            "P_u": squares,
            # k^2 + 2k = (k+1)^2 - 1
            "P_v": tuple(b - 1 for b in squares),
        },
        base_is_vertex=False,
        extra={
            "A0": a0,
            "A1": a1,
            "A": tuple(sorted(set(a0) | set(a1))),
            "B": squares,
            "anchors": anchors,
        },
    )


def line_graph_sets(a: int) -> LayerSets:
    """Sets for ``L(T(a, a+1, a+2)) = C3(a-1, a, a+1)`` relative to ``a(3a+7)/2``."""
    if a < 2:
        raise ParameterError("line_graph_sets needs a ≥ 2")
    a_u = tuple(p * a + (p + 2) ** 2 for p in range(1, a))
    a_v = tuple(p * a + (p + 1) ** 2 + 2 for p in range(1, a + 1))
    a_w = tuple(p * a + p * p + 2 for p in range(1, a + 2))
    witness = _half(a - 1) if a % 2 else None
    return LayerSets(
        family="line-consecutive3",
        params={"a": a},
        constant=None,
        offset_base=_half(a * (3 * a + 7)),
        layers={"triangle": (2, 3, 4), "A_u": a_u, "A_v": a_v, "A_w": a_w},
        base_is_vertex=False,
        extra={"collision_p": witness},
    )
