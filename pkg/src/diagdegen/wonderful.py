"""Orbit stratification of the wonderful compactification of an adjoint group.

The compactification of a semisimple adjoint group G carries exactly one
G x G orbit per subset J of the simple roots, ordered by inclusion: J =
Delta is the open orbit (G itself), J = empty the closed one.  Each
descriptor below records the parabolic/Levi root data attached to J and
the dimension bookkeeping dim O_J = dim G - rank + |J|, derived from the
stabilizer: unipotent radicals of an opposite parabolic pair extended by
diag(L_J) and two copies of the center of L_J.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .rootsys import DynkinType, RootSystem


@dataclass(frozen=True)
class OrbitDescriptor:
    """One boundary orbit O_J with its parabolic, Levi and dimension data."""

    J: frozenset[int]
    parabolic_roots: frozenset[int]
    levi_roots: frozenset[int]
    levi_type: DynkinType
    unipotent_count: int
    stab_dim: int
    orbit_dim: int


def orbit(rs: RootSystem, J: Iterable[int]) -> OrbitDescriptor:
    """Describe the orbit attached to the simple subset J."""
    J = rs.simple_subset(J)
    parabolic = frozenset(
        r for r in range(rs.n_roots) if rs.lambda_pairing(J, r) >= 0
    )
    levi = frozenset(r for r in parabolic if rs.lambda_pairing(J, r) == 0)
    unipotent = rs.n_positive - len(levi) // 2
    dim_g = rs.n_roots + rs.rank
    # unipotent radicals of P_J- x P_J, then diag(L_J) (C_J x C_J)
    stab = 2 * unipotent + (len(levi) + rs.rank) + (rs.rank - len(J))
    return OrbitDescriptor(
        J=J,
        parabolic_roots=parabolic,
        levi_roots=levi,
        levi_type=rs.subdiagram_type(J),
        unipotent_count=unipotent,
        stab_dim=stab,
        orbit_dim=2 * dim_g - stab,
    )


def orbit_lattice(rs: RootSystem) -> list[OrbitDescriptor]:
    """All 2^rank orbits, ordered by |J| and then lexicographic J."""
    out = []
    for size in range(rs.rank + 1):
        for J in combinations(range(1, rs.rank + 1), size):
            out.append(orbit(rs, J))
    return out
