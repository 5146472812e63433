"""Exhaustive invariant sweeps over all faithful I and all J for one type.

For each check the sweep records the number of cases examined and every
counterexample payload; a clean run is the package's end-to-end evidence
that the component catalogue matches the closed-form expectations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import degen, oracles
from .cosets import min_reps
from .rootsys import DynkinType, build_root_system, parse_dynkin
from .weyl import generate


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SweepReport:
    type_str: str
    faithful_subsets: int
    strata: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json_obj(self) -> dict:
        return {
            "type": self.type_str,
            "faithful_subsets": self.faithful_subsets,
            "strata": self.strata,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "cases": c.cases,
                    "failures": c.failures,
                }
                for c in self.checks
            ],
        }

    def format_text(self) -> str:
        lines = [
            f"sweep {self.type_str}: {self.faithful_subsets} faithful I x {self.strata} J"
        ]
        for c in self.checks:
            status = "ok" if c.ok else f"{len(c.failures)} FAILURES"
            lines.append(f"  {c.name:<24} cases={c.cases:<6} {status}")
            for f in c.failures:
                lines.append(f"    counterexample: {f}")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"


def _subsets(rank: int) -> list[frozenset[int]]:
    out = []
    for size in range(rank + 1):
        for J in combinations(range(1, rank + 1), size):
            out.append(frozenset(J))
    return out


def run_sweep(type_str: str | DynkinType) -> SweepReport:
    """Run every degeneration invariant check for one Dynkin type."""
    dynkin = parse_dynkin(type_str) if isinstance(type_str, str) else type_str
    rs = build_root_system(dynkin)
    g = generate(rs)
    delta = rs.delta()
    all_subsets = _subsets(rs.rank)
    faithful = [I for I in all_subsets if rs.is_faithful(I)]

    equidim = CheckResult("equidimensionality")
    counts = CheckResult("component counts")
    closed = CheckResult("closed-fiber formula")
    fixed = CheckResult("fixed-point uniqueness")
    weights = CheckResult("weight-set identity")

    for I in faithful:
        q = min_reps(g, I)
        dim_x = q.dim_x
        payload_i = sorted(I)

        counts_by_j: dict[frozenset[int], int] = {}
        for J in all_subsets:
            comps = degen.fiber_components(g, I, J)
            payload = {"I": payload_i, "J": sorted(J)}

            equidim.cases += len(comps)
            for comp in comps:
                if comp.total_dim != dim_x:
                    equidim.failures.append(
                        payload | {
                            "w": list(g.reduced_word(comp.w)),
                            "total_dim": comp.total_dim,
                            "dim_x": dim_x,
                        }
                    )

            counts.cases += 1
            n = len(comps)
            counts_by_j[J] = n
            oracle_n = len(oracles.double_cosets(g, J, I))
            if n != oracle_n:
                counts.failures.append(payload | {"count": n, "oracle": oracle_n})
            if (n == 1) != (J == delta):
                counts.failures.append(payload | {"count": n, "expected_unique_iff": "J=Delta"})

        # antitonicity along single-element extensions of J
        for J in all_subsets:
            for j in delta - J:
                counts.cases += 1
                if counts_by_j[J] < counts_by_j[J | {j}]:
                    counts.failures.append(
                        {"I": payload_i, "J": sorted(J), "j": j, "issue": "count not antitone"}
                    )

        closed.cases += 1
        pairs = [c.schubert_pair for c in degen.fiber_components(g, I, frozenset())]
        direct = degen.closed_fiber(g, I)
        if pairs != direct:
            closed.failures.append({"I": payload_i, "pairs": len(pairs), "direct": len(direct)})

        neg_delta = {rs.neg(rs.simple_index(i)) for i in range(1, rs.rank + 1)}
        covered: set[int] = set()
        for w in q.reps:
            fixed.cases += 1
            profile = degen.fixed_point_profile(g, I, w)
            if profile != {(w, w)}:
                fixed.failures.append(
                    {"I": payload_i, "w": list(g.reduced_word(w)), "profile_size": len(profile)}
                )
            weights.cases += 1
            try:
                ws = degen.weight_set(g, I, w)
            except AssertionError as exc:
                weights.failures.append({"I": payload_i, "w": list(g.reduced_word(w)), "error": str(exc)})
                continue
            if len(ws) != dim_x:
                weights.failures.append(
                    {"I": payload_i, "w": list(g.reduced_word(w)), "size": len(ws), "dim_x": dim_x}
                )
            covered |= ws & neg_delta
        weights.cases += 1
        if covered != neg_delta:
            weights.failures.append({"I": payload_i, "issue": "negative simple roots not covered"})

    return SweepReport(
        type_str=str(dynkin),
        faithful_subsets=len(faithful),
        strata=len(all_subsets),
        checks=[equidim, counts, closed, fixed, weights],
    )
