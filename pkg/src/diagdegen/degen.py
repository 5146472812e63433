"""Irreducible components of the diagonal degenerations in G/P x G/P.

Over the boundary stratum indexed by a simple subset J, the diagonal of
X = G/P_I degenerates into a union of Levi sweeps of Schubert variety
products: one irreducible component

    Z_w = diag(L_J) . (w_J X-_{w_J w} x X_w)

per minimal double-coset representative w in ^J W^I.  Every component is
pure of dimension dim X; its dimension splits as the Levi quotient part
(the diag(L_J) sweep), the opposite Schubert part, and the Schubert part.
The Schubert index of w_J w is always canonicalized into W^I first, since
the corresponding fixed point only depends on the coset.

All functions require the adjoint group to act faithfully on X, i.e.
``rs.is_faithful(I)``; the closed-stratum fiber (J empty) specializes to
the union of X-_w x X_w over w in W^I, and the open stratum (J = Delta)
gives back the diagonal as a single component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cosets import QuotientData, double_min_reps, min_reps
from .weyl import WeylGroup


class UnfaithfulActionError(ValueError):
    """Raised when I swallows a diagram component, so G does not act faithfully."""


def _require_faithful(g: WeylGroup, I: frozenset[int]) -> None:
    if not g.rs.is_faithful(I):
        comp = next(c for c in g.rs.diagram_components() if c <= I)
        raise UnfaithfulActionError(
            f"I is not faithful: it contains the diagram component {sorted(comp)}"
        )


@dataclass(frozen=True)
class FiberComponent:
    """One component Z_w, with its dimension split (levi + xminus + x)."""

    w: int
    left_index: int
    levi_quotient_dim: int
    xminus_dim: int
    x_dim: int

    @property
    def schubert_pair(self) -> tuple[int, int]:
        return (self.left_index, self.w)

    @property
    def total_dim(self) -> int:
        return self.levi_quotient_dim + self.xminus_dim + self.x_dim


def fiber_components(g: WeylGroup, I: Iterable[int], J: Iterable[int]) -> list[FiberComponent]:
    """Catalogue the components of the degeneration over the stratum J."""
    rs = g.rs
    I = rs.simple_subset(I)
    J = rs.simple_subset(J)
    _require_faithful(g, I)
    q = min_reps(g, I)
    w_j = g.longest_in(J)
    phi_j = rs.sub_system(J)
    phi_i = rs.sub_system(I)
    out = []
    for w in double_min_reps(g, J, I):
        left = q.canonicalize(g.multiply(w_j, w))
        inv = g.perms[g.inverse(w)]
        levi = sum(
            1 for a in phi_j
            if not rs.is_positive(inv[a]) and inv[a] not in phi_i
        )
        x_dim, _ = q.cell_dims(w)
        _, xminus = q.cell_dims(left)
        out.append(FiberComponent(w, left, levi, xminus, x_dim))
    return out


def component_count(g: WeylGroup, I: Iterable[int], J: Iterable[int]) -> int:
    """Number of irreducible components over the stratum J (= |^J W^I|)."""
    I = g.rs.simple_subset(I)
    _require_faithful(g, I)
    return len(double_min_reps(g, J, I))


def closed_fiber(g: WeylGroup, I: Iterable[int]) -> list[tuple[int, int]]:
    """Schubert pairs (X-_w, X_w) of the total degeneration, built directly.

    This is the closed-stratum formula union of X-_w x X_w over W^I; it is
    kept independent of :func:`fiber_components` so the two routes can be
    compared.
    """
    I = g.rs.simple_subset(I)
    _require_faithful(g, I)
    return [(w, w) for w in min_reps(g, I).reps]


def fixed_point_profile(g: WeylGroup, I: Iterable[int], w: int) -> set[tuple[int, int]]:
    """Torus-fixed points of (total degeneration) meet (X_w x X-_w).

    Returns all pairs (u, v) of representatives with u <= w <= v such that
    some x in W^I satisfies x <= u and v <= x.  The chain forces the result
    to be the singleton {(w, w)}; the scan verifies that on the nose.
    """
    q = min_reps(g, g.rs.simple_subset(I))
    w = q.canonicalize(w)
    rows = g.bruhat_rows()
    if rows is not None:
        up = g.bruhat_up_rows()
        assert up is not None
        rep_mask = 0
        for u in q.reps:
            rep_mask |= 1 << u
        out = set()
        down_w = rows[w] & rep_mask
        up_w = up[w] & rep_mask
        m = down_w
        while m:
            bu = m & -m
            u = bu.bit_length() - 1
            du = rows[u] & rep_mask
            mv = up_w
            while mv:
                bv = mv & -mv
                v = bv.bit_length() - 1
                if du & up[v]:
                    out.add((u, v))
                mv ^= bv
            m ^= bu
        return out
    leq = g.bruhat_leq
    return {
        (u, v)
        for u in q.reps if leq(u, w)
        for v in q.reps if leq(w, v)
        if any(leq(x, u) and leq(v, x) for x in q.reps)
    }


def weight_set(g: WeylGroup, I: Iterable[int], w: int) -> frozenset[int]:
    """Torus weights on the total degeneration at the fixed point of w.

    Computed both as Phi- intersect w(Phi - Phi_I) and as Phi- minus
    w(Phi_I); the two expressions must agree, and the set has exactly
    dim G/P_I elements.
    """
    rs = g.rs
    I = rs.simple_subset(I)
    q = min_reps(g, I)
    w = q.canonicalize(w)
    phi_i = rs.sub_system(I)
    perm = g.perms[w]
    first = frozenset(
        perm[a] for a in range(rs.n_roots)
        if a not in phi_i and not rs.is_positive(perm[a])
    )
    second = frozenset(
        a for a in range(rs.n_positive, rs.n_roots)
    ) - frozenset(perm[a] for a in phi_i)
    if first != second:
        raise AssertionError(f"weight set expressions disagree for w={w}, I={sorted(I)}")
    return first


def full_flag_fiber(g: WeylGroup, J: Iterable[int]) -> list[FiberComponent]:
    """Degeneration components for the full flag variety (I empty)."""
    return fiber_components(g, frozenset(), J)
