"""Transmission irregularity classifiers for the supported families.

Each classifier takes family parameters and answers Irregular, NotIrregular,
or NoVerdict.  NoVerdict is returned wherever only a sufficient condition is
known and it does not apply; nothing is extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt
from typing import Sequence

from . import closed_form as cf
from .families import (
    BiStarlikeBSStar,
    BiStarlikeBT,
    BrokenUnitArithmetic,
    FamilySpec,
    LineOf,
    Starlike,
    TriangleFiveArm,
    TriangleThreeArm,
    build,
    unit_arithmetic_order,
)
from .graph_core import tree_sanity_predicates


class Status(str, Enum):
    IRREGULAR = "Irregular"
    NOT_IRREGULAR = "NotIrregular"
    NO_VERDICT = "NoVerdict"


@dataclass(frozen=True)
class Verdict:
    status: Status
    source: str
    clause: str = ""
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.status.value,
            "source": self.source,
            "clause": self.clause,
            "witness": self.witness,
        }


def _irregular(source, clause, witness=None):
    return Verdict(Status.IRREGULAR, source, clause, witness)


def _not_irregular(source, clause, witness=None):
    return Verdict(Status.NOT_IRREGULAR, source, clause, witness)


def _no_verdict(source, clause, witness=None):
    return Verdict(Status.NO_VERDICT, source, clause, witness)


def is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


# -- three-arm starlike trees ---------------------------------------------------


@dataclass(frozen=True)
class ExceptionalTriple:
    """A membership witness in one of the three exceptional families.

    ``first``/``second`` are the index pair: ``(i, j)`` for N_xy, ``(j, k)``
    for N_yz and ``(i, k)`` for N_xz.
    """

    which: str
    first: int
    second: int
    p: int
    g: int

    def reconstruct(self, k1: int | None = None, k2: int | None = None, printed: bool = False):
        """Rebuild the triple from the closed form of its set.

        N_xy and N_xz take ``k1`` as a free coordinate, N_yz takes ``k2``.
        """
        lo, hi, p, g = self.first, self.second, self.p, self.g
        # g divides hi - lo, so (hi - lo) * p / g is exact
        scaled = (hi - lo) * p // g
        if self.which == "N_xy":
            return (k1, k1 + (hi - lo) + scaled, p * (lo + hi) // g)
        if self.which == "N_yz":
            return (p * (lo + hi) // g, k2, k2 + (hi - lo) + scaled)
        return (k1, p * (lo + hi) // g, k1 + scaled + (0 if printed else hi - lo))

    def to_dict(self) -> dict:
        names = {"N_xy": ("i", "j"), "N_yz": ("j", "k"), "N_xz": ("i", "k")}[self.which]
        return {"set": self.which, names[0]: self.first, names[1]: self.second, "p": self.p, "gcd": self.g}


def _solve_p(value: int, g: int, idx_sum: int) -> int | None:
    # value = p * idx_sum / g
    if (value * g) % idx_sum:
        return None
    p = value * g // idx_sum
    return p if p >= 1 else None


def _member_xy(k1: int, k2: int, k3: int) -> ExceptionalTriple | None:
    # second coordinate k1 + (j-i)(1+p/g) > k1 + (j-i) bounds j - i by k2 - k1
    for i in range(1, k1 + 1):
        for j in range(i + 1, i + k2 - k1 + 1):
            g = gcd(i + j, j - i)
            p = _solve_p(k3, g, i + j)
            if p is None:
                continue
            if k2 != k1 + (j - i) + (j - i) * p // g:
                continue
            if 2 * i * p < (k1 + j - i) * g:
                continue
            return ExceptionalTriple("N_xy", i, j, p, g)
    return None


def _member_yz(k1: int, k2: int, k3: int) -> ExceptionalTriple | None:
    for j in range(1, k2 + 1):
        for k in range(j + 1, j + k3 - k2 + 1):
            g = gcd(j + k, k - j)
            p = _solve_p(k1, g, j + k)
            if p is None:
                continue
            if k3 != k2 + (k - j) + (k - j) * p // g:
                continue
            if max(j, (j + k) // g) > k2:
                continue
            if p * (j + k) > k2 * g:
                continue
            return ExceptionalTriple("N_yz", j, k, p, g)
    return None


def _member_xz(k1: int, k2: int, k3: int, printed: bool = False) -> ExceptionalTriple | None:
    if printed:
        # third coordinate k1 + (k-i)p/g: k is fixed by i through
        # (k-i)/(k+i) = (k3-k1)/k2, so solve for it rather than scan
        candidates = []
        denom = k1 + k2 - k3
        for i in range(1, k1 + 1):
            num = i * (k2 + k3 - k1)
            if denom > 0 and num % denom == 0 and num // denom > i:
                candidates.append((i, num // denom))
    else:
        candidates = [
            (i, k) for i in range(1, k1 + 1) for k in range(i + 1, i + k3 - k1 + 1)
        ]
    for i, k in candidates:
        g = gcd(i + k, k - i)
        p = _solve_p(k2, g, i + k)
        if p is None:
            continue
        scaled = (k - i) * p // g
        third = k1 + scaled if printed else k1 + (k - i) + scaled
        if k3 != third:
            continue
        if p * (i + k) < k1 * g or 2 * i * p > (k1 + k - i) * g:
            continue
        return ExceptionalTriple("N_xz", i, k, p, g)
    return None


def exceptional_membership(
    k1: int, k2: int, k3: int, *, printed_xz: bool = False
) -> ExceptionalTriple | None:
    """First exceptional set containing ``(k1, k2, k3)``, or ``None``.

    ``printed_xz`` uses the N_xz third coordinate ``k1 + (k-i)p/g`` as typeset;
    the default adds the ``(k-i)`` term the other two sets carry, which is what
    the brute-force oracle agrees with.
    """
    return (
        _member_xy(k1, k2, k3)
        or _member_yz(k1, k2, k3)
        or _member_xz(k1, k2, k3, printed=printed_xz)
    )


def classify_starlike3(k1: int, k2: int, k3: int, *, printed_xz: bool = False) -> Verdict:
    if min(k1, k2, k3) < 1:
        raise ValueError("arm lengths must be ≥ 1")
    k1, k2, k3 = sorted((k1, k2, k3))
    if not (k1 < k2 < k3):
        return _not_irregular("T1", "repeated arm length", {"arms": [k1, k2, k3]})
    if k3 > k1 + k2:
        return _not_irregular("T1", "k3 > k1 + k2", {"arms": [k1, k2, k3]})
    hit = exceptional_membership(k1, k2, k3, printed_xz=printed_xz)
    if hit is not None:
        return _not_irregular("T1", "exceptional set", hit.to_dict())
    return _irregular("T1", "strict, within bound, no exceptional set")


# -- unit arithmetic ------------------------------------------------------------


def unit_arithmetic_congruence(a: int, k: int) -> bool:
    return k % 4 == 3 or (k + 2 * a) % 4 == 0


def non_ti_window(a: int, k: int) -> bool:
    """``2(a-3)/3 ≤ k ≤ 2a+2`` and ``k + 2a ≡ 2 (mod 4)``."""
    return 3 * k >= 2 * (a - 3) and k <= 2 * a + 2 and (k + 2 * a) % 4 == 2


def classify_unit_arithmetic(a: int, k: int) -> Verdict:
    if a < 1 or k < 2:
        raise ValueError("unit arithmetic needs a ≥ 1 and k ≥ 2")
    n = unit_arithmetic_order(a, k)
    if n % 2 == 1:
        return _irregular("T2", "odd order", {"order": n})
    if non_ti_window(a, k):
        x = (k + 2 * a - 2) // 4
        layers = cf.bp_sets(a, k).layers
        collision = max(layers[str(x)])
        assert collision == min(layers[str(x + 1)])
        return _not_irregular(
            "T2.6", "max B_x = min B_(x+1)", {"x": x, "offset": collision}
        )
    return _no_verdict("T2", "even order outside the non-TI window", {"order": n})


def classify_consecutive3(a: int) -> Verdict:
    if a < 1:
        raise ValueError("a must be ≥ 1")
    if a % 2:
        return _irregular("C2.4", "a odd")
    t = a // 2
    layers = cf.bp_sets(a, 2).layers
    collision = max(layers[str(t)])
    assert collision == min(layers[str(t + 1)])
    base = cf.bp_sets(a, 2).offset_base
    return _not_irregular(
        "C2.4", "a even", {"t": t, "transmission": base + collision}
    )


def classify_one_to_ell(ell: int) -> Verdict:
    if ell < 3:
        raise ValueError("T(1..ℓ) needs ℓ ≥ 3")
    r = isqrt(ell - 1)
    if r >= 2 and r * r == ell - 1:
        return _not_irregular("T2.5", "ℓ = r² + 1", {"r": r})
    return _irregular("T2.5", "ℓ not of the form r² + 1")


def classify_broken(a: int, k: int) -> Verdict:
    if a < 1 or k < 2:
        raise ValueError("broken unit arithmetic needs a ≥ 1 and k ≥ 2")
    if k % 4 == 3:
        return _irregular("T3.1", "k ≡ 3 (mod 4)")
    if (k + 2 * a) % 4 == 0:
        return _irregular("T3.1", "k + 2a ≡ 0 (mod 4)")
    return _no_verdict("T3.1", "congruence does not hold")


def classify_extremal(a: int, k: int) -> Verdict:
    if a < 1 or k < 1:
        raise ValueError("extremal trees need a ≥ 1 and k ≥ 1")
    lo, hi = cf.square_interval(a, k)
    for d in cf.d_union(a, k):
        if lo <= d <= hi and is_square(d):
            return _no_verdict("T3.3", "a layer element is a square", {"square": d})
    return _irregular("T3.3", "no layer element is a square in range")


def classify_cor34_printed(a: int) -> Verdict:
    """The corollary for ``T(a, a+1, 2a+1)`` with its sets as printed.

    Known to disagree with the oracle (``a = 2``); used only for discrepancy reports.
    """
    first, second = cf.cor34_printed_sets(a)
    lo, hi = 2 * a + 1, (2 * a + 1) ** 2
    for d in (*first, *second):
        if lo <= d <= hi and is_square(d):
            return _no_verdict("C3.4", "printed set hits a square", {"square": d})
    return _irregular("C3.4", "printed sets avoid squares")


def classify_bs_star(a: int, k: int) -> Verdict:
    if a < 1 or k < 1:
        raise ValueError("BS* needs a ≥ 1 and k ≥ 1")
    if a > 1:
        return _irregular("T3.5", "a > 1")
    return _no_verdict("T3.5", "a = 1")


def classify_triangle(k: int) -> Verdict:
    if k < 3:
        raise ValueError("C3(1;1,k;2,k) needs k ≥ 3")
    extra = cf.triangle_sets(k).extra
    hit = sorted(set(extra["A"]) & set(extra["B"]))
    if hit:
        return _no_verdict("P4.1", "A ∩ B nonempty", {"intersection": hit})
    return _irregular("P4.1", "A ∩ B empty")


def classify_line_consecutive3(a: int) -> Verdict:
    if a < 2:
        raise ValueError("L(T(a,a+1,a+2)) needs a ≥ 2")
    if a % 2 == 0:
        return _irregular("T4.2", "a even")
    return _not_irregular("T4.2", "2p + 1 = a", {"p": (a - 1) // 2})


def necessary_condition(arms: Sequence[int]) -> bool:
    """False when the longest arm exceeds the sum of the others (certainly not TI)."""
    arms = sorted(arms)
    return arms[-1] <= sum(arms[:-1])


# -- dispatch on a family expression --------------------------------------------


def _unit_params(arms: tuple[int, ...]) -> tuple[int, int] | None:
    if all(y - x == 1 for x, y in zip(arms, arms[1:])):
        return arms[0], len(arms) - 1
    return None


def _extremal_params(arms: tuple[int, ...]) -> tuple[int, int] | None:
    head = arms[:-1]
    if len(head) >= 2 and _unit_params(head):
        a, k = _unit_params(head)
        if arms[-1] == (2 * a + k) * (k + 1) // 2:
            return a, k
    return None


def _tree_filters(spec: FamilySpec) -> Verdict | None:
    pred = tree_sanity_predicates(build(spec))
    if pred.equal_split:
        return _not_irregular("P1.2", "edge with n_u = n_v", {"edge": list(pred.equal_split_edge)})
    if pred.adjacent_unit_splits:
        return _not_irregular(
            "P1.3", "two edges with |n_u - n_v| = 1", {"edges": [list(e) for e in pred.unit_split_edges]}
        )
    return None


def classify_family(spec: FamilySpec) -> Verdict:
    """Pick the strongest applicable classifier for a family instance."""
    if isinstance(spec, Starlike):
        arms = spec.arms
        if len(arms) == 3:
            return classify_starlike3(*arms)
        if not necessary_condition(arms):
            return _not_irregular("P1.5", "k_t > sum of other arms")
        unit = _unit_params(arms)
        if unit and unit[0] == 1:
            return classify_one_to_ell(len(arms))
        if unit:
            verdict = classify_unit_arithmetic(*unit)
            if verdict.status is not Status.NO_VERDICT:
                return verdict
        ext = _extremal_params(arms)
        if ext:
            verdict = classify_extremal(*ext)
            if verdict.status is not Status.NO_VERDICT:
                return verdict
        return _tree_filters(spec) or _no_verdict("none", "no applicable result")
    if isinstance(spec, BrokenUnitArithmetic):
        shape = spec.shape_params()
        if shape:
            verdict = classify_broken(*shape)
            if verdict.status is not Status.NO_VERDICT:
                return verdict
        return _tree_filters(spec) or _no_verdict("none", "no applicable result")
    if isinstance(spec, BiStarlikeBSStar):
        verdict = classify_bs_star(spec.a, spec.k)
        if verdict.status is not Status.NO_VERDICT:
            return verdict
        return _tree_filters(spec) or verdict
    if isinstance(spec, BiStarlikeBT):
        return _tree_filters(spec) or _no_verdict("none", "no applicable result")
    if isinstance(spec, TriangleFiveArm):
        k = spec.triangle_param()
        if k is not None and k >= 3:
            return classify_triangle(k)
        return _no_verdict("none", "no applicable result")
    if isinstance(spec, TriangleThreeArm):
        lo, mid, hi = spec.arms
        if mid == lo + 1 and hi == lo + 2:
            return classify_line_consecutive3(lo + 1)
        return _no_verdict("none", "no applicable result")
    if isinstance(spec, LineOf) and isinstance(spec.inner, Starlike):
        arms = spec.inner.arms
        if len(arms) == 3 and arms[0] >= 2 and _unit_params(arms):
            return classify_line_consecutive3(arms[0])
    return _no_verdict("none", "no applicable result")
