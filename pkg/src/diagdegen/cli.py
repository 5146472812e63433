"""Command line front end with deterministic JSON and table output.

Grammar: ``diagdegen <verb> <TYPE> [--I a,b,...] [--J a,b,...] [--json]
[--variant paper|signed] [--out PATH]``.  Subsets are comma-separated
1-based simple-root indices; pass ``""`` for the empty subset.  Exit codes:
0 success, 1 sweep failures, 2 usage errors, 3 domain errors (rank cap,
non-faithful I).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import degen, projgor, sweep
from .cosets import min_reps
from .rootsys import (
    DynkinError,
    RootSystem,
    WeylOrderCapError,
    build_root_system,
    parse_dynkin,
)
from .weyl import WeylGroup, generate
from .wonderful import orbit_lattice

VERBS = ("roots", "weyl", "cosets", "orbits", "degen", "flagdegen", "pn", "gorenstein", "sweep")


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagdegen",
        description="Wonderful compactification strata and diagonal degenerations of G/P",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb: str, help_text: str, *, need_i: bool = False, need_j: bool = False,
            variant: bool = False) -> None:
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("type", help="Dynkin type, e.g. A3 or B2xA1")
        if need_i:
            p.add_argument("--I", required=True, help='parabolic subset, e.g. "2,3" ("" = empty)')
        if need_j:
            p.add_argument("--J", required=True, help='stratum subset, e.g. "1" ("" = empty)')
        if variant:
            p.add_argument("--variant", choices=projgor.VARIANTS, default="paper")
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    add("roots", "list the roots of a type")
    add("weyl", "Weyl group summary")
    add("cosets", "minimal coset representatives and cell dimensions", need_i=True)
    add("orbits", "orbit lattice of the wonderful compactification")
    add("degen", "degeneration components over a stratum", need_i=True, need_j=True)
    add("flagdegen", "degeneration components for the full flag variety", need_j=True)
    add("pn", "projective-space closed forms (type A_n)", need_j=True)
    add("gorenstein", "Hilbert polynomial and Gorenstein obstruction (type A_n)", variant=True)
    add("sweep", "run every invariant check over all faithful I and all J")
    return parser


def _parse_subset(rs: RootSystem, text: str, flag: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        indices = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"--{flag}: expected comma-separated integers, got {text!r}") from None
    for i in indices:
        if not 1 <= i <= rs.rank:
            raise UsageError(f"--{flag}: index {i} out of range 1..{rs.rank}")
    return frozenset(indices)


def _require_type_a(rs: RootSystem, verb: str) -> int:
    components = rs.dynkin.components
    if len(components) != 1 or components[0][0] != "A":
        raise UsageError(f"{verb} requires an irreducible type A_n, got {rs.dynkin}")
    return components[0][1]


def _word(g: WeylGroup, w: int) -> list[int]:
    return list(g.reduced_word(w))


def _subset_list(S: frozenset[int]) -> list[int]:
    return sorted(S)


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h)
              for k, h in enumerate(headers)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers)]
    lines.extend(fmt.format(*row) for row in rows)
    return "\n".join(lines) + "\n"


# -- verb handlers -----------------------------------------------------------


def _cmd_roots(ns) -> tuple[dict, str]:
    rs = build_root_system(parse_dynkin(ns.type))
    payload = {
        "verb": "roots",
        "type": str(rs.dynkin),
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "n_roots": rs.n_roots,
        "positive": [list(rs.coords(r)) for r in rs.positive_indices()],
    }
    rows = [
        [str(r), str(list(rs.coords(r))), str(rs.height(r))]
        for r in rs.positive_indices()
    ]
    text = (
        f"type {rs.dynkin}: rank {rs.rank}, {rs.n_roots} roots "
        f"({rs.n_positive} positive)\n"
        + _table(["idx", "coords", "height"], rows)
    )
    return payload, text


def _cmd_weyl(ns) -> tuple[dict, str]:
    g = generate(build_root_system(parse_dynkin(ns.type)))
    payload = {
        "verb": "weyl",
        "type": str(g.rs.dynkin),
        "order": g.order,
        "n_positive": g.rs.n_positive,
        "longest_word": _word(g, g.longest_id),
    }
    text = (
        f"W({g.rs.dynkin}): order {g.order}, longest element length "
        f"{g.lengths[g.longest_id]}, word {_word(g, g.longest_id)}\n"
    )
    return payload, text


def _cmd_cosets(ns) -> tuple[dict, str]:
    g = generate(build_root_system(parse_dynkin(ns.type)))
    I = _parse_subset(g.rs, ns.I, "I")
    q = min_reps(g, I)
    payload = {
        "verb": "cosets",
        "type": str(g.rs.dynkin),
        "I": _subset_list(I),
        "dim_x": q.dim_x,
        "reps": [_word(g, w) for w in q.reps],
        "dims": [list(q.cell_dims(w)) for w in q.reps],
    }
    rows = [
        [str(_word(g, w)), str(q.cell_dims(w)[0]), str(q.cell_dims(w)[1])]
        for w in q.reps
    ]
    text = (
        f"W^I for {g.rs.dynkin}, I={_subset_list(I)}: {len(q.reps)} reps, "
        f"dim X = {q.dim_x}\n" + _table(["word", "dim C", "dim C-"], rows)
    )
    return payload, text


def _cmd_orbits(ns) -> tuple[dict, str]:
    rs = build_root_system(parse_dynkin(ns.type))
    lattice = orbit_lattice(rs)
    payload = {
        "verb": "orbits",
        "type": str(rs.dynkin),
        "dim_g": rs.n_roots + rs.rank,
        "orbits": [
            {
                "J": _subset_list(o.J),
                "orbit_dim": o.orbit_dim,
                "stab_dim": o.stab_dim,
                "unipotent_count": o.unipotent_count,
                "levi": str(o.levi_type) or None,
            }
            for o in lattice
        ],
    }
    rows = [
        [str(_subset_list(o.J)), str(o.orbit_dim), str(o.stab_dim),
         str(o.levi_type) or "-"]
        for o in lattice
    ]
    text = (
        f"{rs.dynkin}: {len(lattice)} orbits, dim G = {rs.n_roots + rs.rank}\n"
        + _table(["J", "dim O_J", "dim stab", "levi"], rows)
    )
    return payload, text


def _components_payload(g: WeylGroup, comps: list[degen.FiberComponent]) -> list[dict]:
    return [
        {
            "w": _word(g, c.w),
            "left": _word(g, c.left_index),
            "dims": {
                "levi": c.levi_quotient_dim,
                "xminus": c.xminus_dim,
                "x": c.x_dim,
                "total": c.total_dim,
            },
        }
        for c in comps
    ]


def _components_text(g: WeylGroup, comps: list[degen.FiberComponent], head: str) -> str:
    rows = [
        [str(_word(g, c.w)), str(_word(g, c.left_index)), str(c.levi_quotient_dim),
         str(c.xminus_dim), str(c.x_dim), str(c.total_dim)]
        for c in comps
    ]
    return head + _table(["w", "left", "levi", "xminus", "x", "total"], rows)


def _cmd_degen(ns) -> tuple[dict, str]:
    g = generate(build_root_system(parse_dynkin(ns.type)))
    I = _parse_subset(g.rs, ns.I, "I")
    J = _parse_subset(g.rs, ns.J, "J")
    comps = degen.fiber_components(g, I, J)
    payload = {
        "verb": "degen",
        "type": str(g.rs.dynkin),
        "I": _subset_list(I),
        "J": _subset_list(J),
        "dim_x": comps[0].total_dim if comps else 0,
        "components": _components_payload(g, comps),
    }
    head = (
        f"degeneration over J={_subset_list(J)} for {g.rs.dynkin}, "
        f"I={_subset_list(I)}: {len(comps)} components\n"
    )
    return payload, _components_text(g, comps, head)


def _cmd_flagdegen(ns) -> tuple[dict, str]:
    g = generate(build_root_system(parse_dynkin(ns.type)))
    J = _parse_subset(g.rs, ns.J, "J")
    comps = degen.full_flag_fiber(g, J)
    payload = {
        "verb": "flagdegen",
        "type": str(g.rs.dynkin),
        "J": _subset_list(J),
        "components": _components_payload(g, comps),
    }
    head = (
        f"full-flag degeneration over J={_subset_list(J)} for {g.rs.dynkin}: "
        f"{len(comps)} components\n"
    )
    return payload, _components_text(g, comps, head)


def _cmd_pn(ns) -> tuple[dict, str]:
    rs = build_root_system(parse_dynkin(ns.type))
    n = _require_type_a(rs, "pn")
    J = _parse_subset(rs, ns.J, "J")
    comp = projgor.composition_from_J(n, J)
    components = projgor.pn_components(comp)
    payload = {
        "verb": "pn",
        "n": n,
        "J": _subset_list(J),
        "blocks": list(comp.blocks),
        "components": [
            {
                "i": c.i,
                "blocks": list(comp.blocks),
                "smooth": c.smooth,
                "blowup_end": c.blowup_end,
                "w_value": c.w_value,
                "dims": {"x": c.x_dim, "y": c.y_dim, "fiber": c.fiber_dim},
            }
            for c in components
        ],
    }
    rows = [
        [str(c.i), str(c.w_value), str(c.x_dim), str(c.y_dim), str(c.fiber_dim),
         "yes" if c.smooth else "no"]
        for c in components
    ]
    text = (
        f"P^{n} with blocks {list(comp.blocks)} (J={_subset_list(J)}): "
        f"{len(components)} components\n"
        + _table(["i", "w(1)", "x", "y", "fiber", "smooth"], rows)
    )
    return payload, text


def _cmd_gorenstein(ns) -> tuple[dict, str]:
    rs = build_root_system(parse_dynkin(ns.type))
    n = _require_type_a(rs, "gorenstein")
    h = projgor.diag_hilbert_poly(n)
    p = projgor.gorenstein_obstruction(n, ns.variant)
    payload = {
        "verb": "gorenstein",
        "n": n,
        "variant": ns.variant,
        "p": p,
        "hilbert": h.json_coeffs(),
    }
    text = (
        f"P^{n}: Hilbert polynomial coefficients {h.json_coeffs()}\n"
        f"variant {ns.variant}: "
        + (f"p = {p}\n" if p is not None else "no integer p (Gorenstein obstructed)\n")
    )
    return payload, text


def _cmd_sweep(ns) -> tuple[dict, str]:
    report = sweep.run_sweep(ns.type)
    return {"verb": "sweep"} | report.to_json_obj(), report.format_text()


_DISPATCH = {
    "roots": _cmd_roots,
    "weyl": _cmd_weyl,
    "cosets": _cmd_cosets,
    "orbits": _cmd_orbits,
    "degen": _cmd_degen,
    "flagdegen": _cmd_flagdegen,
    "pn": _cmd_pn,
    "gorenstein": _cmd_gorenstein,
    "sweep": _cmd_sweep,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code
    try:
        payload, text = _DISPATCH[ns.verb](ns)
    except (DynkinError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WeylOrderCapError, degen.UnfaithfulActionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    rendered = (
        json.dumps(payload, indent=2, sort_keys=True) + "\n" if ns.json else text
    )
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    if ns.verb == "sweep" and not payload["ok"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
