"""Closed forms for projective space, and the Gorenstein obstruction.

For X = P^n the degeneration combinatorics admit a hands-on description:
a simple subset J of A_n cuts the coordinate space k^{n+1} into blocks
V_0, ..., V_r at the unmarked positions, and the degeneration over J has
r + 1 components

    Z_i = {(x, y) : x in P(V_{<i} + l), y in P(V_{>i} + l), l a line in V_i}.

These closed forms serve as an independent oracle for the general
catalogue in :mod:`diagdegen.degen` (type A_n with I = {2, ..., n}).

The module also carries the Euler characteristic obstruction against the
total degeneration Z in P^n x P^n being Gorenstein: its Hilbert
polynomial h(m) = (2m+1)...(2m+n)/n! would have to satisfy
h(-m) = h(m + p) for an integer p, which fails for even n.  The "signed"
variant adds the (-1)^n duality factor and has the solution p = -(n+1)/2
for odd n.  Polynomial arithmetic is exact over Fraction coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

VARIANTS = ("paper", "signed")


@dataclass(frozen=True)
class RationalPolynomial:
    """A univariate polynomial with exact rational coefficients, ascending."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[Fraction | int]) -> "RationalPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RationalPolynomial(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return RationalPolynomial.from_coeffs(out)

    def __mul__(self, other: "RationalPolynomial | Fraction | int") -> "RationalPolynomial":
        if isinstance(other, (Fraction, int)):
            return RationalPolynomial.from_coeffs(c * other for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial.from_coeffs(out)

    __rmul__ = __mul__

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute(self, a: Fraction | int, b: Fraction | int) -> "RationalPolynomial":
        """The polynomial m -> self(a*m + b)."""
        inner = RationalPolynomial.from_coeffs([b, a])
        acc = RationalPolynomial.from_coeffs([])
        for c in reversed(self.coeffs):
            acc = acc * inner + RationalPolynomial.from_coeffs([c])
        return acc

    def json_coeffs(self) -> list[list[int]]:
        return [[c.numerator, c.denominator] for c in self.coeffs]


@dataclass(frozen=True)
class Composition:
    """Block sizes (dim V_0, ..., dim V_r) of k^{n+1} cut by Delta - J."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.blocks) != self.n + 1 or any(b < 1 for b in self.blocks):
            raise ValueError(f"blocks {self.blocks} do not partition n+1 = {self.n + 1}")

    @property
    def r(self) -> int:
        return len(self.blocks) - 1


@dataclass(frozen=True)
class PnComponent:
    """One component Z_i of a degeneration of the diagonal of P^n.

    ``w_value`` is the image of 1 under the Weyl representative indexing
    this component in the general catalogue; ``x_dim``/``y_dim`` are the
    subspace dimensions dim P(V_{<i} + l) and dim P(V_{>i} + l), while
    ``fiber_dim`` = dim P(V_i) counts the sweep of the line l.
    """

    i: int
    x_dim: int
    y_dim: int
    fiber_dim: int
    smooth: bool
    blowup_end: bool
    w_value: int

    @property
    def total_dim(self) -> int:
        return self.x_dim + self.y_dim + self.fiber_dim


def composition_from_J(n: int, J: Iterable[int]) -> Composition:
    """Cut {1, ..., n+1} at the simple positions missing from J."""
    J = frozenset(J)
    for j in J:
        if not 1 <= j <= n:
            raise ValueError(f"mark {j} out of range 1..{n}")
    cuts = sorted(set(range(1, n + 1)) - J)
    bounds = [0] + cuts + [n + 1]
    return Composition(n, tuple(b - a for a, b in zip(bounds, bounds[1:])))


def pn_components(c: Composition) -> list[PnComponent]:
    """The r+1 components of the degeneration for a block decomposition.

    Z_i is smooth iff its block is a line or i is extremal (the extremal
    components are blow-ups of P^n along a linear subspace); interior
    components with dim V_i >= 2 are singular along P(V_{<i}) x P(V_{>i}).
    """
    r = c.r
    out = []
    before = 0
    for i, b in enumerate(c.blocks):
        after = c.n + 1 - before - b
        out.append(PnComponent(
            i=i,
            x_dim=before,
            y_dim=after,
            fiber_dim=b - 1,
            smooth=(b == 1 or i in (0, r)),
            blowup_end=(i in (0, r)),
            w_value=before + 1,
        ))
        before += b
    return out


def pairwise_intersection_dim(c: Composition, i: int) -> int:
    """dim of Z_i meet Z_{i+1}, the divisor P(V_{<=i}) x P(V_{>i}); always n-1."""
    if not 0 <= i < c.r:
        raise ValueError(f"index {i} out of range 0..{c.r - 1}")
    left = sum(c.blocks[: i + 1]) - 1
    right = sum(c.blocks[i + 1:]) - 1
    return left + right


def diag_hilbert_poly(n: int) -> RationalPolynomial:
    """Hilbert polynomial (2m+1)(2m+2)...(2m+n)/n! of every degeneration."""
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = RationalPolynomial.from_coeffs([1])
    for i in range(1, n + 1):
        poly = poly * RationalPolynomial.from_coeffs([i, 2])
    return poly * Fraction(1, factorial(n))


def _obstruction_by_roots(n: int, variant: str) -> int | None:
    # h(-m) has roots {i/2 : 1 <= i <= n} with leading coefficient (-2)^n/n!,
    # h(m+p) has roots {-p - i/2} with leading 2^n/n!; matching the sums of
    # roots forces p = -(n+1)/2, and the leading signs must also agree.
    if variant == "paper" and n % 2 == 1:
        return None
    if n % 2 == 0:
        return None  # p = -(n+1)/2 is not an integer
    p = -(n + 1) // 2
    lhs = sorted(Fraction(i, 2) for i in range(1, n + 1))
    rhs = sorted(-p - Fraction(i, 2) for i in range(1, n + 1))
    return p if lhs == rhs else None


def gorenstein_obstruction(n: int, variant: str = "paper") -> int | None:
    """Smallest-|p| integer with h(-m) = (sign) h(m+p), or None.

    Variant "paper" matches the polynomials as written; "signed" inserts
    the duality factor (-1)^n on the right-hand side.  An exhaustive scan
    of p in [-2n, 2n] is compared against the root-matching shortcut.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    h = diag_hilbert_poly(n)
    target = h.substitute(-1, 0)
    sign = (-1) ** n if variant == "signed" else 1
    matches = [
        p for p in range(-2 * n, 2 * n + 1)
        if h.substitute(1, p) * sign == target
    ]
    scanned = min(matches, key=lambda p: (abs(p), p)) if matches else None
    shortcut = _obstruction_by_roots(n, variant)
    if scanned != shortcut:
        raise AssertionError(
            f"p-scan ({scanned}) and root matching ({shortcut}) disagree for n={n}"
        )
    return scanned
