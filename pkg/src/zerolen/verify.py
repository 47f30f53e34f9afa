"""End-to-end verification runs: soundness and completeness per catalog.

A soundness run enumerates every bounded zero-sum sequence over the nonzero
elements and demands each distinct length set match a registered family; a
completeness run sweeps family parameters and demands each witness sequence
realize its member exactly.  Reports are deterministic given the bounds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .budget import global_nodes, parallel_map
from .families import (
    COVERED_GROUPS,
    G2_4,
    G22,
    G23,
    G24,
    G3,
    G33,
    G4,
    G5,
    c24_interval_witness,
    family_branches,
    interval_criterion_c24,
    match_family,
    presentation_equivalence,
)
from .groups import FiniteAbelianGroup
from .lengths import engine_for
from .sequences import Sequence
from .system import bounded_intersection, bounded_system

TARGETS = ("P33", "T41", "T46", "T47", "T48", "T36", "C24INT")

# per-target (group, soundness bound) pairs; None bound means families only
_SOUNDNESS: dict[str, tuple[tuple[FiniteAbelianGroup, int], ...]] = {
    "P33": ((G3, 18), (G22, 18), (G4, 16), (G23, 16)),
    "T41": ((G33, 16),),
    "T46": ((G5, 20),),
    "T47": ((G24, 16),),
    "T48": ((G2_4, 12),),
}

_EQUIVALENCES = {"T41": "T41", "T47": "T47-L2", "T48": "T48-L3"}

_FAMILY_PREFIX = {
    "P33": ("P33-C3C22", "P33-C4", "P33-C23"),
    "T41": ("T41",),
    "T46": ("T46",),
    "T47": ("T47",),
    "T48": ("T48",),
}


@dataclass(frozen=True)
class Counterexample:
    kind: str
    group: str
    detail: str
    witness: str = ""


@dataclass
class VerificationReport:
    target: str
    status: str  # "pass" | "fail"
    bounds: dict[str, int]
    checks: list[str] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    seconds: float = 0.0
    nodes: int = 0

    def as_dict(self, with_time: bool = False) -> dict:
        out = {
            "target": self.target,
            "status": self.status,
            "bounds": dict(sorted(self.bounds.items())),
            "checks": list(self.checks),
            "counterexamples": [
                {
                    "kind": c.kind,
                    "group": c.group,
                    "detail": c.detail,
                    "witness": c.witness,
                }
                for c in self.counterexamples
            ],
        }
        if with_time:
            out["seconds"] = round(self.seconds, 3)
            out["nodes"] = self.nodes
        return out


def soundness_check(
    group: FiniteAbelianGroup, bound: int, report: VerificationReport
) -> None:
    system = bounded_system(group, None, bound)
    unmatched = []
    for entry in system.entries:
        if not match_family(group, entry.lengths):
            unmatched.append(entry)
    for entry in unmatched:
        report.counterexamples.append(
            Counterexample(
                "unmatched-length-set",
                group.label,
                f"L={list(entry.lengths)}",
                entry.witness.literal(),
            )
        )
    report.checks.append(
        f"soundness {group.label} bound {bound}: {len(system)} distinct sets, "
        f"{len(unmatched)} unmatched"
    )


def completeness_check(
    families: tuple[str, ...],
    report: VerificationReport,
    y_max: int = 4,
    threads: int = 1,
) -> None:
    branches = [
        br
        for br in family_branches()
        if br.family in families and br.witness_fn is not None
    ]
    jobs = []
    for br in branches:
        for k in br.sweep_ks:
            for y in range(y_max + 1):
                if br.try_member(y, k) is not None:
                    jobs.append((br, y, k))

    def run(job):
        br, y, k = job
        member = tuple(sorted(br.member(y, k)))
        wit = br.witness(y, k)
        got = engine_for(br.group).length_set(wit)
        return (br, y, k, member, wit, got)

    bad = 0
    for br, y, k, member, wit, got in parallel_map(run, jobs, threads):
        if got != member:
            bad += 1
            report.counterexamples.append(
                Counterexample(
                    "witness-mismatch",
                    br.group.label,
                    f"{br.id}(y={y},k={k}): member={list(member)} got={list(got)}",
                    wit.literal(),
                )
            )
    report.checks.append(
        f"completeness {'/'.join(families)}: {len(jobs)} witnesses, {bad} mismatches"
    )


def _verify_catalog(
    target: str, bound: Optional[int], threads: int
) -> VerificationReport:
    report = VerificationReport(target, "pass", {})
    for group, default in _SOUNDNESS[target]:
        b = bound if bound is not None else default
        report.bounds[group.label] = b
        soundness_check(group, b, report)
    completeness_check(_FAMILY_PREFIX[target], report, threads=threads)
    if target in _EQUIVALENCES:
        eq = presentation_equivalence(_EQUIVALENCES[target], bound=30)
        report.checks.append(
            f"presentation equivalence {eq.pair} bound {eq.bound}: "
            f"{'equal' if eq.equal else 'DIFFER'}"
        )
        if not eq.equal:
            report.counterexamples.append(
                Counterexample(
                    "presentation-mismatch",
                    "",
                    f"only in first: {eq.only_first[:3]}, "
                    f"only in second: {eq.only_second[:3]}",
                )
            )
    return report


def _verify_t36(bound: Optional[int], threads: int) -> VerificationReport:
    report = VerificationReport("T36", "pass", {"max": bound or 9})
    for p, gname in ((3, G3), (5, G5)):
        eng = engine_for(gname)
        g = next(x for x in gname.elements if gname.order_of(x) == p)
        g2 = gname.add(g, g)
        for k in range(1, 6):
            B = Sequence.build(gname, {g: p * k, g2: p * k})
            got = eng.length_set(B)
            want = tuple(range(2 * k, 3 * k + 1))
            if got != want:
                report.counterexamples.append(
                    Counterexample(
                        "construction-mismatch",
                        gname.label,
                        f"p={p} k={k}: got {list(got)}",
                        B.literal(),
                    )
                )
    report.checks.append("base constructions p in {3,5}, k <= 5 verified")

    inter = bounded_intersection(COVERED_GROUPS, max_value=bound or 9)
    want = set()
    for k in range(0, (bound or 9) // 3 + 1):
        for y in range(0, (bound or 9) - 3 * k + 1):
            want.add(tuple(range(y + 2 * k, y + 3 * k + 1)))
    got = set(inter.sets)
    for L in sorted(want - got):
        report.counterexamples.append(
            Counterexample("missing-from-intersection", "", f"L={list(L)}")
        )
    for L in sorted(got - want):
        report.counterexamples.append(
            Counterexample("extra-in-intersection", "", f"L={list(L)}")
        )
    for L, gk in inter.unconfirmed:
        report.counterexamples.append(
            Counterexample("unconfirmed-membership", str(gk), f"L={list(L)}")
        )
    report.checks.append(
        f"intersection over {len(COVERED_GROUPS)} groups: {len(got)} sets, "
        f"expected {len(want)}"
    )
    return report


def _verify_c24int(bound: Optional[int], threads: int) -> VerificationReport:
    hi = bound or 10
    report = VerificationReport("C24INT", "pass", {"max": hi})
    eng = engine_for(G2_4)
    realized = 0
    for l1 in range(2, hi + 1):
        for l2 in range(l1, hi + 1):
            if interval_criterion_c24(l1, l2):
                wit = c24_interval_witness(l1, l2)
                got = eng.length_set(wit)
                want = tuple(range(l1, l2 + 1))
                realized += 1
                if got != want:
                    report.counterexamples.append(
                        Counterexample(
                            "interval-witness-mismatch",
                            G2_4.label,
                            f"[{l1},{l2}] got {list(got)}",
                            wit.literal(),
                        )
                    )
    report.checks.append(f"realized {realized} admissible intervals up to {hi}")

    system = bounded_system(G2_4, None, 12)
    if tuple(range(2, 6)) in system.sets or (2, 3, 4, 5) in system.sets:
        report.counterexamples.append(
            Counterexample("forbidden-interval", G2_4.label, "[2,5] realized")
        )
    report.checks.append("[2,5] absent from the bounded system (bound 12)")
    return report


def run_verification(
    target: str, bound: Optional[int] = None, threads: int = 1
) -> VerificationReport:
    """Run one verification target; status reflects the counterexample list."""
    start = time.perf_counter()
    nodes_before = global_nodes()
    if target in _SOUNDNESS:
        report = _verify_catalog(target, bound, threads)
    elif target == "T36":
        report = _verify_t36(bound, threads)
    elif target == "C24INT":
        report = _verify_c24int(bound, threads)
    else:
        raise ValueError(f"unknown verify target {target!r}; known: {TARGETS}")
    report.status = "pass" if not report.counterexamples else "fail"
    report.seconds = time.perf_counter() - start
    report.nodes = global_nodes() - nodes_before
    return report
