"""Verification harness: classifiers and closed forms against the BFS oracle.

Each registered theorem id expands a set of parameter ranges into points.
A point is evaluated independently (so points can run in worker processes)
into a plain-dict record; records are merged into a report in point order.

Outcomes per point are ``agree``, ``mismatch`` or ``no-verdict``.  A
mismatch is ``error`` when the tool itself is wrong and
``discrepancy`` when a claim as printed disagrees with the oracle.
Closed-form checks that fail only for a printed variant are collected as
discrepancy findings without changing the point's outcome.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import classify as cl
from . import closed_form as cf
from .classify import Status, Verdict
from .enumeration import level_sequences, enumerate_starlike, tree_from_levels
from .families import (
    BiStarlikeBSStar,
    BiStarlikeBT,
    BrokenUnitArithmetic,
    LineOf,
    Starlike,
    TriangleFiveArm,
    build,
    extremal_long_arm,
    unit_arithmetic,
    unit_arithmetic_order,
)
from .graph_core import Graph, TransmissionProfile, transmission_profile, tree_sanity_predicates

ERROR = "error"
DISCREPANCY = "discrepancy"


class VerifyError(ValueError):
    pass


@dataclass
class Check:
    name: str
    ok: bool
    category: str = ERROR
    detail: dict | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "category": self.category, "detail": self.detail}


@dataclass(frozen=True)
class Theorem:
    id: str
    kind: str  # "iff", "sufficient" or "closed-form"
    defaults: dict[str, list[int]]
    evaluate: Callable[[dict], tuple[Verdict | None, TransmissionProfile, list[Check]]]
    # these mismatches belong to the stated claim, not the tool
    claim_table: bool = False
    feasible: Callable[[dict], bool] = lambda params: True
    expand: Callable[[dict], Iterable[dict]] | None = None


def _collision_summary(prof: TransmissionProfile, limit: int = 5) -> list[list[int]]:
    tr = prof.transmissions
    return [[u, v, tr[u]] for u, v in prof.collisions[:limit]]


def _master_check(name: str, layers: cf.LayerSets, prof: TransmissionProfile, category=ERROR) -> Check:
    predicted = Counter(layers.transmissions())
    actual = Counter(prof.transmissions)
    ok = predicted == actual
    detail = None
    if not ok:
        detail = {
            "missing": sorted((actual - predicted).elements())[:10],
            "unexpected": sorted((predicted - actual).elements())[:10],
        }
    return Check(name, ok, category, detail)


def _profile(spec) -> TransmissionProfile:
    return transmission_profile(build(spec))


def _starlike_vertex(arms, arm_index: int, depth: int) -> int:
    """Index of the vertex at ``depth`` on arm ``arm_index`` under canonical numbering."""
    return 1 + sum(arms[:arm_index]) + depth - 1


# -- per-theorem evaluation -----------------------------------------------------


def _tree_of(params: dict) -> Graph:
    return tree_from_levels([int(c, 36) for c in params["tree"]])


def _eval_p12(params):
    g = _tree_of(params)
    pred = tree_sanity_predicates(g)
    verdict = (
        Verdict(Status.NOT_IRREGULAR, "P1.2", "edge with n_u = n_v", {"edge": list(pred.equal_split_edge)})
        if pred.equal_split
        else Verdict(Status.NO_VERDICT, "P1.2", "no equal split")
    )
    return verdict, transmission_profile(g), []


def _eval_p13(params):
    g = _tree_of(params)
    pred = tree_sanity_predicates(g)
    verdict = (
        Verdict(Status.NOT_IRREGULAR, "P1.3", "two unit splits", {"edges": [list(e) for e in pred.unit_split_edges]})
        if pred.adjacent_unit_splits
        else Verdict(Status.NO_VERDICT, "P1.3", "fewer than two unit splits")
    )
    return verdict, transmission_profile(g), []


def _eval_p15(params):
    arms = tuple(params["arms"])
    verdict = (
        Verdict(Status.NO_VERDICT, "P1.5", "k_t ≤ sum of others")
        if cl.necessary_condition(arms)
        else Verdict(Status.NOT_IRREGULAR, "P1.5", "k_t > sum of others")
    )
    return verdict, _profile(Starlike(arms)), []


def _eval_t1(params):
    k1, k2, k3 = params["k1"], params["k2"], params["k3"]
    prof = _profile(Starlike((k1, k2, k3)))
    verdict = cl.classify_starlike3(k1, k2, k3)
    checks = []
    if verdict.witness and verdict.witness.get("set"):
        hit = cl.exceptional_membership(k1, k2, k3)
        checks.append(Check("witness reconstructs triple", hit.reconstruct(k1, k2) == (k1, k2, k3)))
    printed = cl.classify_starlike3(k1, k2, k3, printed_xz=True)
    printed_ok = (printed.status is Status.IRREGULAR) == prof.is_irregular
    checks.append(Check("N_xz as printed", printed_ok, DISCREPANCY, None if printed_ok else printed.to_dict()))
    return verdict, prof, checks


def _eval_t2(params):
    a, k = params["a"], params["k"]
    n = unit_arithmetic_order(a, k)
    verdict = (
        Verdict(Status.IRREGULAR, "T2", "odd order", {"order": n})
        if n % 2
        else Verdict(Status.NO_VERDICT, "T2", "even order", {"order": n})
    )
    return verdict, _profile(unit_arithmetic(a, k)), []


def _eval_c23(params):
    a, k = params["a"], params["k"]
    congruent = cl.unit_arithmetic_congruence(a, k)
    verdict = (
        Verdict(Status.IRREGULAR, "C2.3", "congruence holds")
        if congruent
        else Verdict(Status.NO_VERDICT, "C2.3", "congruence fails")
    )
    odd = unit_arithmetic_order(a, k) % 2 == 1
    checks = [Check("congruence ⇔ odd order", congruent == odd)]
    return verdict, _profile(unit_arithmetic(a, k)), checks


def _eval_c24(params):
    a = params["a"]
    prof = _profile(Starlike((a, a + 1, a + 2)))
    verdict = cl.classify_consecutive3(a)
    checks = []
    if verdict.witness:
        target = verdict.witness["transmission"]
        checks.append(Check("collision at predicted transmission", prof.transmissions.count(target) >= 2, ERROR, {"transmission": target}))
    return verdict, prof, checks


def _eval_t25(params):
    ell = params["ell"]
    return cl.classify_one_to_ell(ell), _profile(Starlike(tuple(range(1, ell + 1)))), []


def _eval_t26(params):
    a, k = params["a"], params["k"]
    prof = _profile(unit_arithmetic(a, k))
    if not cl.non_ti_window(a, k):
        return Verdict(Status.NO_VERDICT, "T2.6", "outside window"), prof, []
    x = (k + 2 * a - 2) // 4
    layers = cf.bp_sets(a, k).layers
    ok = max(layers[str(x)]) == min(layers[str(x + 1)])
    verdict = Verdict(Status.NOT_IRREGULAR, "T2.6", "max B_x = min B_(x+1)", {"x": x})
    return verdict, prof, [Check("max B_x = min B_(x+1)", ok, ERROR, {"x": x})]


def _eval_t31(params):
    a, k = params["a"], params["k"]
    prof = _profile(BrokenUnitArithmetic.from_params(a, k))
    layers = cf.broken_sets(a, k)
    checks = [_master_check("broken layers vs oracle", layers, prof)]
    first, _ = cf.broken_parts(a, k)
    printed = [layers.offset_base]
    for group in (first, cf.broken_printed_second(a, k)):
        printed += [v + layers.offset_base for vals in group.values() for v in vals]
    ok = Counter(printed) == Counter(prof.transmissions)
    checks.append(Check("B'' as printed", ok, DISCREPANCY, None if ok else {"predicted_count": len(printed), "order": len(prof.transmissions)}))
    return cl.classify_broken(a, k), prof, checks


def _eval_l32(params):
    a, k = params["a"], params["k"]
    ls = cf.dp_sets(a, k)
    short = {key: v for key, v in ls.layers.items() if key != "long"}
    flat = [x for vals in short.values() for x in vals]
    dup = sorted(x for x, c in Counter(flat).items() if c > 1)
    return None, None, [Check("D_p pairwise disjoint", not dup, ERROR, {"shared": dup} if dup else None)]


def _eval_t33(params):
    a, k = params["a"], params["k"]
    return cl.classify_extremal(a, k), _profile(extremal_long_arm(a, k)), []


def _eval_c34(params):
    a = params["a"]
    prof = _profile(Starlike((a, a + 1, 2 * a + 1)))
    first, second = cf.cor34_printed_sets(a)
    d_sets = cf.dp_sets(a, 1).layers
    derived = sorted(x for key, v in d_sets.items() if key != "long" for x in v)
    same = sorted(first + second) == derived
    checks = [Check("printed sets equal D_p at k=1", same, DISCREPANCY, None if same else {"printed": sorted(first + second), "D": derived})]
    return cl.classify_cor34_printed(a), prof, checks


_REMARK_TABLE = {2: True, 3: True, 5: True, 6: False}


def _eval_r3(params):
    a = params["a"]
    prof = _profile(BiStarlikeBT(2 * a + 1, (a, a + 1, 2 * a + 1)))
    claim = _REMARK_TABLE.get(a)
    if claim is None:
        verdict = Verdict(Status.NO_VERDICT, "R3", "a not covered by the remark")
    elif claim:
        verdict = Verdict(Status.IRREGULAR, "R3", "stated transmission irregular")
    else:
        verdict = Verdict(Status.NOT_IRREGULAR, "R3", "stated not transmission irregular")
    return verdict, prof, []


def _eval_t35(params):
    a, k = params["a"], params["k"]
    return cl.classify_bs_star(a, k), _profile(BiStarlikeBSStar(a, k)), []


def _eval_p41(params):
    k = params["k"]
    prof = _profile(TriangleFiveArm(1, (1, k), (2, k)))
    ls = cf.triangle_sets(k)
    anchors = ls.extra["anchors"]
    # triangle w=0, u=1, v=2; then w', u', P_u (k), v', v'', P_v
    where = {"w": 0, "u": 1, "v": 2, "w'": 3, "v''": 6 + k}
    tr = prof.transmissions
    bad = {name: [anchors[name], tr[idx]] for name, idx in where.items() if anchors[name] != tr[idx]}
    checks = [
        _master_check("triangle sets vs oracle", ls, prof),
        Check("anchor transmissions", not bad, ERROR, bad or None),
    ]
    return cl.classify_triangle(k), prof, checks


def _eval_t42(params):
    a = params["a"]
    prof = _profile(LineOf(Starlike((a, a + 1, a + 2))))
    checks = [_master_check("line graph sets vs oracle", cf.line_graph_sets(a), prof)]
    return cl.classify_line_consecutive3(a), prof, checks


def _eval_claim_a(params):
    a, k = params["a"], params["k"]
    arms = tuple(range(a, a + k + 1))
    prof = _profile(Starlike(arms))
    ls = cf.bp_sets(a, k)
    checks = [_master_check("B_p + Tr(v) vs oracle", ls, prof)]
    tr = prof.transmissions
    misplaced = []
    for p in range(1, a + k + 1):
        for i, val in enumerate(ls.layers[str(p)], start=1):
            arm_index = k + 1 - i  # arm length a + k + 1 - i
            if tr[_starlike_vertex(arms, arm_index, p)] != ls.offset_base + val:
                misplaced.append([p, i])
    checks.append(Check("B_p positional", not misplaced, ERROR, {"bad": misplaced[:10]} if misplaced else None))
    printed_base = cf.claim_a_printed_offset(a, k)
    printed = [ls.offset_base] + [v + printed_base for vals in ls.layers.values() for v in vals]
    ok = Counter(printed) == Counter(tr)
    checks.append(Check("offset Tr(v)+s+2 as printed", ok, DISCREPANCY, None if ok else {"printed_shift": printed_base - ls.offset_base}))
    return None, prof, checks


def _eval_dp(params):
    a, k = params["a"], params["k"]
    prof = _profile(extremal_long_arm(a, k))
    return None, prof, [_master_check("D_p + squares vs oracle", cf.dp_sets(a, k), prof)]


def _eval_ai(params):
    a, k = params["a"], params["k"]
    prof = _profile(BiStarlikeBSStar(a, k))
    ls = cf.bs_star_sets(a, k)
    checks = [_master_check("A_i layers vs oracle", ls, prof)]
    own = [ls.layers[str(i)] for i in range(1, a + k + 1)]
    flat = [x for vals in own for x in vals]
    dup = sorted(x for x, c in Counter(flat).items() if c > 1)
    checks.append(Check("A*_1, A_2.. pairwise disjoint", not dup, ERROR, {"shared": dup} if dup else None))
    return None, prof, checks


def _expand_trees(params):
    for levels in level_sequences(params["n"]):
        yield {"n": params["n"], "tree": "".join("0123456789abcdefghijklmnopqrstuvwxyz"[x] for x in levels)}


def _expand_starlike(params):
    if params["n"] >= 4:
        for spec in enumerate_starlike(params["n"]):
            yield {"n": params["n"], "arms": list(spec.arms)}


def _r(lo, hi):
    return list(range(lo, hi + 1))


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("P1.2", "sufficient", {"n": _r(4, 10)}, _eval_p12, expand=_expand_trees),
        Theorem("P1.3", "sufficient", {"n": _r(4, 10)}, _eval_p13, expand=_expand_trees),
        Theorem("P1.5", "sufficient", {"n": _r(4, 14)}, _eval_p15, expand=_expand_starlike),
        Theorem(
            "T1", "iff", {"k1": _r(1, 12), "k2": _r(1, 12), "k3": _r(1, 12)}, _eval_t1,
            feasible=lambda p: p["k1"] <= p["k2"] <= p["k3"],
        ),
        Theorem("T2", "sufficient", {"a": _r(1, 12), "k": _r(2, 12)}, _eval_t2),
        Theorem("C2.3", "sufficient", {"a": _r(1, 12), "k": _r(2, 12)}, _eval_c23),
        Theorem("C2.4", "iff", {"a": _r(1, 50)}, _eval_c24),
        Theorem("T2.5", "iff", {"ell": _r(3, 30)}, _eval_t25),
        Theorem(
            "T2.6", "sufficient", {"a": _r(1, 12), "k": _r(2, 26)}, _eval_t26,
            feasible=lambda p: cl.non_ti_window(p["a"], p["k"]),
        ),
        Theorem("T3.1", "sufficient", {"a": _r(1, 10), "k": _r(2, 10)}, _eval_t31),
        Theorem("L3.2", "closed-form", {"a": _r(1, 12), "k": _r(1, 12)}, _eval_l32),
        Theorem("T3.3", "sufficient", {"a": _r(1, 8), "k": _r(1, 8)}, _eval_t33),
        Theorem("C3.4", "sufficient", {"a": _r(1, 10)}, _eval_c34, claim_table=True),
        Theorem("R3", "sufficient", {"a": [2, 3, 5, 6]}, _eval_r3, claim_table=True),
        Theorem("T3.5", "sufficient", {"a": _r(1, 10), "k": _r(1, 8)}, _eval_t35),
        Theorem("P4.1", "sufficient", {"k": _r(3, 50)}, _eval_p41),
        Theorem("T4.2", "iff", {"a": _r(2, 30)}, _eval_t42),
        Theorem("ClaimA-layers", "closed-form", {"a": _r(1, 12), "k": _r(2, 12)}, _eval_claim_a),
        Theorem("Dp-layers", "closed-form", {"a": _r(1, 8), "k": _r(1, 8)}, _eval_dp),
        Theorem("Ai-layers", "closed-form", {"a": _r(2, 10), "k": _r(1, 8)}, _eval_ai),
    ]
}


# -- ranges and points ----------------------------------------------------------


def parse_range(text: str) -> tuple[str, list[int]]:
    """``key=lo..hi`` or ``key=v1,v2,...`` (pieces may be mixed)."""
    key, sep, spec = text.partition("=")
    if not sep or not key.strip():
        raise VerifyError(f"range {text!r} must look like key=lo..hi")
    values: list[int] = []
    for piece in spec.split(","):
        piece = piece.strip()
        try:
            if ".." in piece:
                lo, hi = piece.split("..", 1)
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(piece))
        except ValueError:
            raise VerifyError(f"cannot read range piece {piece!r}") from None
    if not values:
        raise VerifyError(f"range {text!r} is empty")
    return key.strip(), sorted(set(values))


def theorem_points(theorem_id: str, ranges: dict[str, list[int]] | None = None) -> list[dict]:
    try:
        thm = THEOREMS[theorem_id]
    except KeyError:
        raise VerifyError(
            f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREMS)}"
        ) from None
    merged = dict(thm.defaults)
    for key, values in (ranges or {}).items():
        if key not in merged:
            raise VerifyError(f"{theorem_id} takes ranges for {sorted(merged)}, not {key!r}")
        merged[key] = list(values)
    keys = list(merged)
    points = []
    for combo in itertools.product(*(merged[k] for k in keys)):
        params = dict(zip(keys, combo))
        if not thm.feasible(params):
            continue
        points.extend(thm.expand(params) if thm.expand else [params])
    if not points:
        raise VerifyError(f"ranges for {theorem_id} contain no feasible point")
    return points


def point_key(params: dict) -> str:
    return json.dumps(params, sort_keys=True)


def evaluate_point(theorem_id: str, params: dict) -> dict:
    thm = THEOREMS[theorem_id]
    verdict, prof, checks = thm.evaluate(params)
    record = {
        "theorem": theorem_id,
        "params": params,
        "verdict": verdict.status.value if verdict else None,
        "source": verdict.source if verdict else None,
        "witness": verdict.witness if verdict else None,
        "oracle_irregular": prof.is_irregular if prof else None,
        "collisions": _collision_summary(prof) if prof else [],
        "checks": [c.to_dict() for c in checks],
    }
    errors = [c for c in checks if not c.ok and c.category == ERROR]
    verdict_bad = False
    if verdict is not None:
        if verdict.status is Status.IRREGULAR:
            verdict_bad = not prof.is_irregular
        elif verdict.status is Status.NOT_IRREGULAR:
            verdict_bad = prof.is_irregular
        elif thm.kind == "iff":
            verdict_bad = True
    if errors or (verdict_bad and not thm.claim_table):
        record["outcome"], record["category"] = "mismatch", ERROR
    elif verdict_bad:
        record["outcome"], record["category"] = "mismatch", DISCREPANCY
    elif verdict is not None and verdict.status is Status.NO_VERDICT:
        record["outcome"], record["category"] = "no-verdict", None
    else:
        record["outcome"], record["category"] = "agree", None
    return record


def _evaluate_packed(args):
    return evaluate_point(*args)


@dataclass
class VerificationReport:
    theorem: str
    points: int = 0
    agreements: int = 0
    no_verdict: int = 0
    mismatches: list[dict] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    records: list[dict] = field(default_factory=list)

    def add(self, record: dict) -> None:
        self.records.append(record)
        self.points += 1
        if record["outcome"] == "agree":
            self.agreements += 1
        elif record["outcome"] == "no-verdict":
            self.no_verdict += 1
        else:
            self.mismatches.append(
                {
                    "params": record["params"],
                    "category": record["category"],
                    "verdict": record["verdict"],
                    "oracle_irregular": record["oracle_irregular"],
                    "collisions": record["collisions"],
                    "failed_checks": [c for c in record["checks"] if not c["ok"]],
                }
            )
        for check in record["checks"]:
            if not check["ok"] and check["category"] == DISCREPANCY:
                self.discrepancies.append({"params": record["params"], **check})

    @property
    def has_errors(self) -> bool:
        return any(m["category"] == ERROR for m in self.mismatches)

    @property
    def exit_code(self) -> int:
        if self.has_errors:
            return 1
        if self.mismatches or self.discrepancies:
            return 3
        return 0

    def summary(self) -> dict:
        return {
            "theorem": self.theorem,
            "points": self.points,
            "agreements": self.agreements,
            "no_verdict": self.no_verdict,
            "mismatches": self.mismatches,
            "discrepancy_findings": len(self.discrepancies),
            "discrepancies": self.discrepancies[:20],
            "elapsed": round(self.elapsed, 3),
            "exit_code": self.exit_code,
        }


def _load_done(path: str, theorem_id: str) -> dict[str, dict]:
    done = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                if rec.get("theorem") == theorem_id:
                    done[point_key(rec["params"])] = rec
    return done


def verify(
    theorem_id: str,
    ranges: dict[str, list[int]] | None = None,
    *,
    jobs: int = 1,
    out: str | None = None,
) -> VerificationReport:
    start = time.perf_counter()
    points = theorem_points(theorem_id, ranges)
    done = _load_done(out, theorem_id)
    todo = [p for p in points if point_key(p) not in done]

    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(todo) // (jobs * 8))
            fresh = list(pool.map(_evaluate_packed, [(theorem_id, p) for p in todo], chunksize=chunk))
    else:
        fresh = [evaluate_point(theorem_id, p) for p in todo]

    if out:
        with open(out, "a") as fh:
            for rec in fresh:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
    by_key = dict(done)
    by_key.update((point_key(r["params"]), r) for r in fresh)

    report = VerificationReport(theorem_id)
    for p in points:
        report.add(by_key[point_key(p)])
    report.elapsed = time.perf_counter() - start
    return report
