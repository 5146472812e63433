"""Brute-force reference implementations for differential testing.

Everything here recomputes a quantity by a route independent of the
production code path: explicit coset enumeration instead of positivity
filters, reflection-cover closure instead of subword tests, the concrete
e_i - e_j model instead of Cartan-matrix closure, one-line permutations
instead of root permutations.  The test suite and the ``sweep`` command
compare production outputs against these; none of them sits on a
production computation path.
"""

from __future__ import annotations

from typing import Iterable

from .rootsys import RootSystem
from .weyl import WeylGroup


def type_a_positive_vectors(n: int) -> set[tuple[int, ...]]:
    """Positive roots of A_n in the concrete model {e_i - e_j : i < j}."""
    out = set()
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            v = [0] * (n + 1)
            v[i] = 1
            v[j] = -1
            out.add(tuple(v))
    return out


def simple_coords_to_vector(coords: tuple[int, ...]) -> tuple[int, ...]:
    """Expand type-A simple-root coordinates in the e-basis (alpha_k = e_k - e_{k+1})."""
    n = len(coords)
    v = [0] * (n + 1)
    for k, c in enumerate(coords):
        v[k] += c
        v[k + 1] -= c
    return tuple(v)


def subgroup_ids(g: WeylGroup, I: Iterable[int]) -> frozenset[int]:
    """Elements of the parabolic subgroup W_I, by generator closure."""
    gens = [i - 1 for i in sorted(g.rs.simple_subset(I))]
    seen = {0}
    stack = [0]
    while stack:
        w = stack.pop()
        for i in gens:
            v = g.gen_table[w][i]
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def coset_min_reps(g: WeylGroup, I: Iterable[int]) -> tuple[int, ...]:
    """Minimal representatives of W/W_I by explicit coset enumeration."""
    sub = sorted(subgroup_ids(g, I))
    seen = [False] * g.order
    reps = []
    for w in range(g.order):
        if seen[w]:
            continue
        coset = {g.multiply(w, v) for v in sub}
        for u in coset:
            seen[u] = True
        reps.append(min(coset, key=lambda u: (g.lengths[u], u)))
    return tuple(sorted(reps))


def double_cosets(g: WeylGroup, J: Iterable[int], I: Iterable[int]) -> list[frozenset[int]]:
    """The partition of W into double cosets W_J w W_I, by closure."""
    right = [i - 1 for i in sorted(g.rs.simple_subset(I))]
    left = [j - 1 for j in sorted(g.rs.simple_subset(J))]
    seen = [False] * g.order
    out = []
    for seed in range(g.order):
        if seen[seed]:
            continue
        block = {seed}
        stack = [seed]
        while stack:
            w = stack.pop()
            for i in right:
                v = g.gen_table[w][i]
                if v not in block:
                    block.add(v)
                    stack.append(v)
            for j in left:
                v = g.inverse(g.gen_table[g.inverse(w)][j])  # s_j * w
                if v not in block:
                    block.add(v)
                    stack.append(v)
        for u in block:
            seen[u] = True
        out.append(frozenset(block))
    return out


def double_coset_min_reps(g: WeylGroup, J: Iterable[int], I: Iterable[int]) -> tuple[int, ...]:
    """Minimal double-coset representatives, from the explicit partition."""
    reps = [
        min(block, key=lambda u: (g.lengths[u], u))
        for block in double_cosets(g, J, I)
    ]
    return tuple(sorted(reps))


def bruhat_rows_by_covers(g: WeylGroup) -> list[int]:
    """Bruhat order as the transitive closure of reflection covers.

    An element covers u exactly when it equals t*u for a reflection t and
    is one longer; rows are bitmasks with bit u of row w set iff u <= w.
    This route never looks at reduced words.
    """
    reflections = g.reflection_ids()
    rows = [0] * g.order
    for w in range(g.order):  # ids are sorted by length
        acc = 1 << w
        lw = g.lengths[w]
        for t in reflections:
            u = g.multiply(t, w)
            if g.lengths[u] == lw - 1:
                acc |= rows[u]
        rows[w] = acc
    return rows


def one_line_permutation(g: WeylGroup, w: int) -> tuple[int, ...]:
    """Type-A elements as one-line permutations of 1..n+1.

    Multiplies out the reduced word as adjacent transpositions in the
    symmetric group, bypassing the root permutation entirely.
    """
    (family, n), = g.rs.dynkin.components
    if family != "A":
        raise ValueError("one-line permutations require an irreducible type A group")
    line = list(range(1, n + 2))
    for a in g.reduced_word(w):
        line[a - 1], line[a] = line[a], line[a - 1]
    return tuple(line)


def inversions(line: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(line))
        for j in range(i + 1, len(line))
        if line[i] > line[j]
    )


def faithful_by_orbits(rs: RootSystem, g: WeylGroup, I: Iterable[int]) -> bool:
    """Faithfulness via Weyl orbits: no simple root's orbit sits inside Phi_I."""
    return not any(
        g.w_orbit_in_subsystem(alpha, I) for alpha in range(1, rs.rank + 1)
    )
