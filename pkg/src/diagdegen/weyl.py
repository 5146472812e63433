"""Weyl groups as permutation groups on the root index set.

Elements are permutations of ``RootSystem.roots``, stored as tuples and
referenced by dense integer ids.  The group is enumerated breadth-first
over right multiplication by the simple reflections, which orders ids by
length with the lexicographically least reduced word breaking ties; ids,
words and every downstream serialization are therefore reproducible
byte-for-byte across runs.

Bruhat order comes in two forms: a per-query walk down the canonical
reduced word (always available), and a dense bitmask matrix built by the
same subword recursion for groups up to ``MATRIX_CAP`` elements.  The
independent reflection-cover oracle lives in :mod:`diagdegen.oracles`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rootsys import RootSystem

#: Precompute the dense Bruhat matrix only for groups up to this order.
MATRIX_CAP = 10_000


@dataclass(frozen=True)
class WeylElement:
    """One group element: a root permutation with cached length and word."""

    id: int
    perm: tuple[int, ...]
    length: int
    word: tuple[int, ...]


class WeylGroup:
    """An enumerated Weyl group with constant-time generator multiplication."""

    def __init__(self, rs: RootSystem, perms: list[tuple[int, ...]],
                 words: list[tuple[int, ...]], lengths: list[int],
                 gen_table: list[tuple[int, ...]], index: dict[tuple[int, ...], int]):
        self.rs = rs
        self.perms = perms
        self.words = words
        self.lengths = lengths
        self.gen_table = gen_table
        self.index = index
        self.longest_id = len(perms) - 1
        self._inverses: list[int] | None = None
        self._bruhat_rows: list[int] | None = None
        self._bruhat_up_rows: list[int] | None = None
        self._reflections: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.perms)

    def element(self, w: int) -> WeylElement:
        return WeylElement(w, self.perms[w], self.lengths[w], self.words[w])

    def simple(self, i: int) -> int:
        """Id of the i-th simple reflection (i is 1-based)."""
        return self.gen_table[0][i - 1]

    # -- group operations --------------------------------------------------

    def multiply(self, u: int, w: int) -> int:
        pu = self.perms[u]
        return self.index[tuple(map(pu.__getitem__, self.perms[w]))]

    def inverse(self, w: int) -> int:
        if self._inverses is None:
            n = len(self.perms[0])
            inv = []
            for p in self.perms:
                q = [0] * n
                for r, pr in enumerate(p):
                    q[pr] = r
                inv.append(self.index[tuple(q)])
            self._inverses = inv
        return self._inverses[w]

    def act(self, w: int, r: int) -> int:
        """Image root index of root r under the element w."""
        return self.perms[w][r]

    # -- words, longest elements, descents ----------------------------------

    def reduced_word(self, w: int) -> tuple[int, ...]:
        """Reduced word for w, always stripping the smallest right descent."""
        out = []
        lengths, gen_table = self.lengths, self.gen_table
        while lengths[w]:
            for i in range(1, self.rs.rank + 1):
                v = gen_table[w][i - 1]
                if lengths[v] < lengths[w]:
                    out.append(i)
                    w = v
                    break
        out.reverse()
        return tuple(out)

    def longest_in(self, I: Iterable[int]) -> int:
        """Longest element of the parabolic subgroup generated by I."""
        I = sorted(self.rs.simple_subset(I))
        w = 0
        while True:
            for i in I:
                v = self.gen_table[w][i - 1]
                if self.lengths[v] > self.lengths[w]:
                    w = v
                    break
            else:
                return w

    # -- Bruhat order --------------------------------------------------------

    def bruhat_leq(self, u: int, w: int) -> bool:
        """Whether u <= w in Bruhat order (subword test on canonical words)."""
        rows = self.bruhat_rows()
        if rows is not None:
            return bool((rows[w] >> u) & 1)
        return self._bruhat_leq_walk(u, w)

    def _bruhat_leq_walk(self, u: int, w: int) -> bool:
        # Greedy subword embedding along the canonical reduced word of w,
        # scanned from the right: u <= w iff min(u, u s_i) <= w s_i for any
        # right descent i of w.
        lengths, gen_table = self.lengths, self.gen_table
        while lengths[w]:
            i = self.words[w][-1]
            w = gen_table[w][i - 1]
            v = gen_table[u][i - 1]
            if lengths[v] < lengths[u]:
                u = v
        return u == 0

    def bruhat_rows(self) -> list[int] | None:
        """Bitmask rows of the order: bit u of row w is set iff u <= w.

        Built by the aggregated subword recursion
        ``S(w) = S(w s_i) | S(w s_i) s_i`` for the last canonical-word letter
        i; returns None for groups over MATRIX_CAP.
        """
        if self.order > MATRIX_CAP:
            return None
        if self._bruhat_rows is None:
            gen_table = self.gen_table
            rows = [0] * self.order
            rows[0] = 1
            for w in range(1, self.order):
                i = self.words[w][-1] - 1
                rv = rows[self.gen_table[w][i]]
                acc = rv
                m = rv
                while m:
                    b = m & -m
                    acc |= 1 << gen_table[b.bit_length() - 1][i]
                    m ^= b
                rows[w] = acc | (1 << w)
            self._bruhat_rows = rows
        return self._bruhat_rows

    def bruhat_up_rows(self) -> list[int] | None:
        """Transposed bitmask rows: bit x of row v is set iff v <= x."""
        rows = self.bruhat_rows()
        if rows is None:
            return None
        if self._bruhat_up_rows is None:
            up = [0] * self.order
            for w, row in enumerate(rows):
                m = row
                bit = 1 << w
                while m:
                    b = m & -m
                    up[b.bit_length() - 1] |= bit
                    m ^= b
            self._bruhat_up_rows = up
        return self._bruhat_up_rows

    # -- reflections and orbits ----------------------------------------------

    def reflection_ids(self) -> tuple[int, ...]:
        """Ids of the reflections, aligned with the positive root indices.

        Propagated from the simple reflections along root orbits via
        t(s_i(b)) = s_i t(b) s_i.
        """
        if self._reflections is None:
            rs = self.rs
            refl: dict[int, int] = {}
            queue = []
            for i in range(1, rs.rank + 1):
                b = rs.simple_index(i)
                refl[b] = self.simple(i)
                queue.append(b)
            k = 0
            while k < len(queue):
                b = queue[k]
                k += 1
                for i in range(1, rs.rank + 1):
                    c = rs.reflect(i, b)
                    if rs.is_positive(c) and c not in refl:
                        si = self.simple(i)
                        refl[c] = self.multiply(self.multiply(si, refl[b]), si)
                        queue.append(c)
            self._reflections = tuple(refl[b] for b in rs.positive_indices())
        return self._reflections

    def w_orbit_in_subsystem(self, alpha: int, I: Iterable[int]) -> bool:
        """Whether the full Weyl orbit of the simple root alpha lies in Phi_I."""
        rs = self.rs
        sub = rs.sub_system(I)
        start = rs.simple_index(alpha)
        if start not in sub:
            return False
        orbit = {start}
        stack = [start]
        while stack:
            r = stack.pop()
            for i in range(1, rs.rank + 1):
                r2 = rs.reflect(i, r)
                if r2 not in orbit:
                    if r2 not in sub:
                        return False
                    orbit.add(r2)
                    stack.append(r2)
        return True


def generate(rs: RootSystem) -> WeylGroup:
    """Enumerate the Weyl group of a root system.

    Breadth-first over right multiplication by simple reflections; new
    elements inherit their parent's word plus the generator letter, which
    yields ids sorted by (length, lexicographically least reduced word).
    """
    rank = rs.rank
    n = rs.n_roots
    simple_perms = [
        tuple(rs.reflect(i, r) for r in range(n)) for i in range(1, rank + 1)
    ]
    identity = tuple(range(n))
    perms: list[tuple[int, ...]] = [identity]
    words: list[tuple[int, ...]] = [()]
    lengths: list[int] = [0]
    index: dict[tuple[int, ...], int] = {identity: 0}
    gen_table: list[tuple[int, ...]] = []
    w = 0
    while w < len(perms):
        pw = perms[w]
        row = []
        for i, sp in enumerate(simple_perms):
            q = tuple(map(pw.__getitem__, sp))
            j = index.get(q)
            if j is None:
                j = len(perms)
                index[q] = j
                perms.append(q)
                words.append(words[w] + (i + 1,))
                lengths.append(lengths[w] + 1)
            row.append(j)
        gen_table.append(tuple(row))
        w += 1

    expected = rs.dynkin.weyl_order()
    if len(perms) != expected:
        raise RuntimeError(
            f"{rs.dynkin}: enumerated {len(perms)} elements, order formula says {expected}"
        )
    if len(perms) > 1 and (lengths[-1] != rs.n_positive or lengths[-2] == lengths[-1]):
        raise RuntimeError(f"{rs.dynkin}: longest element is not unique of length |Phi+|")
    return WeylGroup(rs, perms, words, lengths, gen_table, index)
