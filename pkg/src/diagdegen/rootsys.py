"""Finite crystallographic root systems built from Dynkin type strings.

A root is an integer coordinate vector over the simple-root basis, stored
as a plain tuple.  ``RootSystem.roots`` lists the positive roots first,
sorted by height and then lexicographically, followed by their negatives
in matching order, so index arithmetic and JSON renderings are stable
across runs.  Simple roots are numbered 1..rank per component in Bourbaki
order; subsets of simple roots (the ``I`` and ``J`` arguments used
throughout the package) are frozensets of 1-based indices.

Cartan convention: ``cartan[i][j]`` holds the pairing of the i-th simple
root against the j-th simple coroot, so the simple reflection acts by
``s_i(b) = b - (sum_j b_j * cartan[j][i]) * alpha_i``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

Coords = tuple[int, ...]

#: Refuse to build systems whose Weyl group is larger than this; it keeps
#: every exhaustive sweep downstream desk-scale.  (E7 and E8 are refused.)
WEYL_ORDER_CAP = 10**6

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "F": 4, "G": 2}
_EXACT_RANK = {"F": 4, "G": 2}
_E_RANKS = frozenset({6, 7, 8})
_COMPONENT_RE = re.compile(r"([A-Z])([0-9]+)\Z")


class DynkinError(ValueError):
    """Raised for unparsable or inadmissible Dynkin type descriptions."""


class WeylOrderCapError(ValueError):
    """Raised when a requested type exceeds the Weyl group order cap."""


def _check_component(family: str, rank: int) -> None:
    if family == "E":
        if rank not in _E_RANKS:
            raise DynkinError(f"E{rank}: rank must be 6, 7 or 8")
        return
    if family in _EXACT_RANK:
        if rank != _EXACT_RANK[family]:
            raise DynkinError(f"{family}{rank}: only {family}{_EXACT_RANK[family]} exists")
        return
    if rank < _MIN_RANK[family]:
        raise DynkinError(
            f"{family}{rank}: inadmissible rank (need {family} >= {_MIN_RANK[family]})"
        )


def _component_weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if family == "F":
        return 1152
    return 12  # G2


@dataclass(frozen=True)
class DynkinType:
    """An ordered product of irreducible Dynkin components, e.g. B2xA1."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        for family, rank in self.components:
            _check_component(family, rank)

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.components)

    def weyl_order(self) -> int:
        out = 1
        for family, rank in self.components:
            out *= _component_weyl_order(family, rank)
        return out

    def __str__(self) -> str:
        return "x".join(f"{family}{rank}" for family, rank in self.components)


def parse_dynkin(text: str) -> DynkinType:
    """Parse a type string like ``"A3"`` or ``"B2xA1"`` into a DynkinType."""
    if not isinstance(text, str) or not text.strip():
        raise DynkinError("empty Dynkin type")
    components = []
    for part in text.strip().split("x"):
        m = _COMPONENT_RE.match(part)
        if m is None:
            raise DynkinError(f"cannot parse component {part!r} (expected e.g. A3, B2)")
        family, rank = m.group(1), int(m.group(2))
        if family in ("H", "I"):
            raise DynkinError(f"{part}: non-crystallographic family")
        if family not in _MIN_RANK and family != "E":
            raise DynkinError(f"{part}: unknown family {family!r}")
        components.append((family, rank))
    return DynkinType(tuple(components))


def _component_cartan(family: str, n: int) -> list[list[int]]:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int) -> None:
        m[i][j] = -1
        m[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B":
            m[n - 2][n - 1] = -2  # last simple root is short
        if family == "C":
            m[n - 1][n - 2] = -2  # last simple root is long
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        spine = [0] + list(range(2, n))
        for a, b in zip(spine, spine[1:]):
            bond(a, b)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2)
        m[1][2] = -2  # roots 3, 4 are short
        bond(2, 3)
    else:  # G2, first simple root short
        m[0][1] = -1
        m[1][0] = -3
    return m


def _block_diagonal(blocks: list[list[list[int]]]) -> tuple[tuple[int, ...], ...]:
    total = sum(len(b) for b in blocks)
    out = [[0] * total for _ in range(total)]
    offset = 0
    for block in blocks:
        k = len(block)
        for i in range(k):
            for j in range(k):
                out[offset + i][offset + j] = block[i][j]
        offset += k
    return tuple(tuple(row) for row in out)


class RootSystem:
    """A finite crystallographic root system with stable root indexing."""

    def __init__(self, dynkin: DynkinType, cartan: tuple[tuple[int, ...], ...],
                 positives: list[Coords]):
        self.dynkin = dynkin
        self.cartan = cartan
        self.rank = dynkin.rank
        self.n_positive = len(positives)
        roots = list(positives) + [tuple(-c for c in r) for r in positives]
        self.roots: tuple[Coords, ...] = tuple(roots)
        self.index: dict[Coords, int] = {r: k for k, r in enumerate(roots)}
        self._simple_index = tuple(
            self.index[tuple(1 if j == i else 0 for j in range(self.rank))]
            for i in range(self.rank)
        )
        self._components = self._diagram_components()

    # -- basic queries ---------------------------------------------------

    @property
    def n_roots(self) -> int:
        return 2 * self.n_positive

    def coords(self, r: int) -> Coords:
        return self.roots[r]

    def height(self, r: int) -> int:
        return sum(self.roots[r])

    def is_positive(self, r: int) -> bool:
        return r < self.n_positive

    def neg(self, r: int) -> int:
        """Index of the negated root."""
        return (r + self.n_positive) % self.n_roots

    def root_index(self, coords: Iterable[int]) -> int:
        key = tuple(coords)
        try:
            return self.index[key]
        except KeyError:
            raise ValueError(f"{key} is not a root of {self.dynkin}") from None

    def simple_index(self, i: int) -> int:
        """Root index of the i-th simple root (i is 1-based)."""
        return self._simple_index[i - 1]

    def positive_indices(self) -> range:
        return range(self.n_positive)

    def simple_subset(self, indices: Iterable[int]) -> frozenset[int]:
        """Validate and normalize a subset of 1-based simple-root indices."""
        out = frozenset(indices)
        for i in out:
            if not isinstance(i, int) or not 1 <= i <= self.rank:
                raise ValueError(f"simple-root index {i!r} out of range 1..{self.rank}")
        return out

    def delta(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    # -- reflections and subsystems --------------------------------------

    def reflect(self, i: int, r: int) -> int:
        """Apply the i-th simple reflection to the root with index r."""
        coords = self.roots[r]
        pairing = sum(c * self.cartan[j][i - 1] for j, c in enumerate(coords) if c)
        if pairing == 0:
            return r
        new = list(coords)
        new[i - 1] -= pairing
        return self.root_index(new)

    def sub_system(self, I: Iterable[int]) -> frozenset[int]:
        """Indices of the roots supported on the simple subset I."""
        I = self.simple_subset(I)
        out = set()
        for r, coords in enumerate(self.roots):
            if all(c == 0 or (j + 1) in I for j, c in enumerate(coords)):
                out.add(r)
        return frozenset(out)

    def lambda_pairing(self, J: Iterable[int], r: int) -> int:
        """Pair a root against the cocharacter that is 0 on J, 1 off J."""
        J = self.simple_subset(J)
        return sum(c for j, c in enumerate(self.roots[r]) if (j + 1) not in J)

    # -- Dynkin diagram structure -----------------------------------------

    def _diagram_components(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        comps = []
        for start in range(1, self.rank + 1):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                a = stack.pop()
                for b in range(1, self.rank + 1):
                    if b not in comp and self.cartan[a - 1][b - 1] != 0 and a != b:
                        comp.add(b)
                        stack.append(b)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def diagram_components(self) -> tuple[frozenset[int], ...]:
        """Connected components of the Dynkin diagram (1-based node sets)."""
        return self._components

    def is_faithful(self, I: Iterable[int]) -> bool:
        """Whether the adjoint group acts faithfully on G/P_I.

        True iff no connected component of the Dynkin diagram lies inside I,
        equivalently no simple root has its full Weyl orbit inside Phi_I.
        """
        I = self.simple_subset(I)
        return not any(comp <= I for comp in self._components)

    def subdiagram_type(self, J: Iterable[int]) -> DynkinType:
        """Dynkin type of the diagram induced on the node subset J."""
        J = self.simple_subset(J)
        nodes = sorted(J)
        seen: set[int] = set()
        parts = []
        for start in nodes:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                a = stack.pop()
                for b in nodes:
                    if b not in comp and self.cartan[a - 1][b - 1] != 0 and a != b:
                        comp.add(b)
                        stack.append(b)
            seen |= comp
            parts.append(self._classify_component(sorted(comp)))
        return DynkinType(tuple(parts))

    def _classify_component(self, nodes: list[int]) -> tuple[str, int]:
        k = len(nodes)
        if k == 1:
            return ("A", 1)
        cartan = self.cartan
        neighbors = {
            a: [b for b in nodes if b != a and cartan[a - 1][b - 1] != 0]
            for a in nodes
        }
        edges = [
            (a, b)
            for a in nodes
            for b in neighbors[a]
            if a < b
        ]
        mult = {e: cartan[e[0] - 1][e[1] - 1] * cartan[e[1] - 1][e[0] - 1] for e in edges}
        if any(m == 3 for m in mult.values()):
            return ("G", 2)
        doubles = [e for e, m in mult.items() if m == 2]
        ends = [a for a in nodes if len(neighbors[a]) == 1]
        if doubles:
            a, b = doubles[0]
            if k == 2:
                return ("B", 2)
            if a in ends or b in ends:
                end = a if a in ends else b
                other = b if end == a else a
                # the end node is short exactly for type B
                if cartan[other - 1][end - 1] == -2:
                    return ("B", k)
                return ("C", k)
            return ("F", 4)
        branch = [a for a in nodes if len(neighbors[a]) == 3]
        if not branch:
            return ("A", k)
        center = branch[0]
        arms = sorted(self._arm_length(center, first, neighbors) for first in neighbors[center])
        if arms[0] == 1 and arms[1] == 1:
            return ("D", k)
        return ("E", k)

    @staticmethod
    def _arm_length(center: int, first: int, neighbors: dict[int, list[int]]) -> int:
        length = 1
        prev, cur = center, first
        while True:
            nxt = [b for b in neighbors[cur] if b != prev]
            if not nxt:
                return length
            prev, cur = cur, nxt[0]
            length += 1


def build_root_system(t: DynkinType | str) -> RootSystem:
    """Build the root system of a Dynkin type by reflection closure.

    The generated roots are cross-checked for the basic sign dichotomy, and
    construction refuses types over the Weyl order cap.
    """
    if isinstance(t, str):
        t = parse_dynkin(t)
    if t.weyl_order() > WEYL_ORDER_CAP:
        raise WeylOrderCapError(
            f"{t}: Weyl group order {t.weyl_order()} exceeds cap {WEYL_ORDER_CAP}"
        )
    rank = t.rank
    cartan = _block_diagonal([_component_cartan(f, n) for f, n in t.components])

    def reflect_coords(i: int, coords: Coords) -> Coords:
        pairing = sum(c * cartan[j][i] for j, c in enumerate(coords) if c)
        new = list(coords)
        new[i] -= pairing
        return tuple(new)

    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen: set[Coords] = set(simple)
    stack = list(simple)
    while stack:
        r = stack.pop()
        for i in range(rank):
            r2 = reflect_coords(i, r)
            if r2 not in seen:
                seen.add(r2)
                stack.append(r2)

    positives = sorted(
        (r for r in seen if all(c >= 0 for c in r)),
        key=lambda r: (sum(r), r),
    )
    if 2 * len(positives) != len(seen) or any(
        tuple(-c for c in r) not in seen for r in positives
    ):
        raise RuntimeError(f"root closure of {t} is not sign-symmetric")
    return RootSystem(t, cartan, positives)
