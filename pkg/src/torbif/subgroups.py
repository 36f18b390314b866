"""Closed subgroups of the 2-torus encoded by their character lattices.

A character (m, n) is the homomorphism (z, w) -> z^m w^n from the torus
T^2 = S^1 x S^1 to S^1.  Every closed subgroup is the common kernel of
finitely many characters, and the set of all characters vanishing on it is
a sublattice of Z^2 that determines the subgroup uniquely.  Storing that
lattice in a fixed normal form turns subgroup equality into tuple equality:

* rank 0 (empty basis): the full torus, dimension 2;
* rank 1, a single generator (m, n) with n > 0, or n == 0 and m > 0: a
  one-dimensional subgroup, the kernel of that character;
* rank 2, rows (a, 0) and (b, d) with a > 0, d > 0, 0 <= b < a: a finite
  subgroup of order a * d.

Generators are deliberately not reduced to primitive vectors: the lattice
spanned by (2, 0) annihilates {z: z^2 = 1} x S^1, a strictly smaller
lattice than the one spanned by (1, 0), so (2, 0) and (1, 0) name
different subgroups.  Intersecting subgroups corresponds to summing their
lattices, which keeps everything downstream purely integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

Character = tuple[int, int]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g == gcd(a, b) >= 0 and g == x*a + y*b."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _fold(pivot: Character, vec: Character) -> tuple[Character, int]:
    """Absorb `vec` into a second-coordinate pivot.

    Returns an updated pivot whose second coordinate is
    gcd(pivot[1], vec[1]) >= 0 plus the first coordinate of a leftover
    vector on the first axis; the spanned lattice is unchanged.
    """
    m1, n1 = pivot
    m2, n2 = vec
    if n2 == 0:
        return pivot, m2
    if n1 == 0:
        if n2 < 0:
            m2, n2 = -m2, -n2
        return (m2, n2), m1
    g, x, y = _xgcd(n1, n2)
    m0 = x * m1 + y * m2
    r1 = m1 - (n1 // g) * m0
    r2 = m2 - (n2 // g) * m0
    return (m0, g), math.gcd(r1, r2)


def _canonical_rows(chars: Iterable[Character]) -> tuple[Character, ...]:
    """Canonical basis of the sublattice of Z^2 spanned by `chars`."""
    pivot: Character = (0, 0)
    axis = 0
    for m, n in chars:
        if m == 0 and n == 0:
            continue
        pivot, leftover = _fold(pivot, (m, n))
        axis = math.gcd(axis, leftover)
    m0, d = pivot
    if d == 0:
        return () if axis == 0 else ((axis, 0),)
    if axis == 0:
        return ((m0, d),)
    return ((axis, 0), (m0 % axis, d))


def _check_int(value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"character entries must be ints, got {value!r}")
    return value


@dataclass(frozen=True)
class TorusSubgroup:
    """A closed subgroup of T^2, identified by its annihilator lattice.

    `rows` must already be a canonical basis as described in the module
    docstring; use `from_characters` to build a subgroup from arbitrary
    characters.
    """

    rows: tuple[Character, ...] = ()

    def __post_init__(self) -> None:
        rows = self.rows
        if not isinstance(rows, tuple) or not all(
            isinstance(r, tuple) and len(r) == 2 for r in rows
        ):
            raise ValueError(f"rows must be a tuple of int pairs, got {rows!r}")
        for r in rows:
            _check_int(r[0])
            _check_int(r[1])
        if len(rows) == 0:
            return
        if len(rows) == 1:
            m, n = rows[0]
            if n > 0 or (n == 0 and m > 0):
                return
        elif len(rows) == 2:
            (a, z), (b, d) = rows
            if z == 0 and a > 0 and d > 0 and 0 <= b < a:
                return
        raise ValueError(f"rows {rows!r} are not a canonical lattice basis")

    @classmethod
    def from_characters(cls, chars: Iterable[Character]) -> "TorusSubgroup":
        """Common kernel of the given characters; (0, 0) entries are ignored."""
        pairs = []
        for ch in chars:
            m, n = ch
            pairs.append((_check_int(m), _check_int(n)))
        return _interned(_canonical_rows(pairs))

    @classmethod
    def full(cls) -> "TorusSubgroup":
        """The whole torus."""
        return _interned(())

    @classmethod
    def kernel(cls, m: int, n: int) -> "TorusSubgroup":
        """Kernel of the single character (m, n)."""
        return cls.from_characters([(m, n)])

    @classmethod
    def trivial(cls) -> "TorusSubgroup":
        """The one-element subgroup."""
        return _interned(((1, 0), (0, 1)))

    @property
    def dim(self) -> int:
        return 2 - len(self.rows)

    @property
    def order(self) -> int:
        """Number of elements; defined only for finite subgroups."""
        if len(self.rows) != 2:
            raise ValueError("order is defined only for finite (0-dimensional) subgroups")
        return self.rows[0][0] * self.rows[1][1]

    @property
    def is_full(self) -> bool:
        return not self.rows

    def intersect(self, other: "TorusSubgroup") -> "TorusSubgroup":
        """Intersection of subgroups: the sum of their character lattices."""
        return _interned(_canonical_rows(self.rows + other.rows))

    def __str__(self) -> str:
        if len(self.rows) == 0:
            return "T"
        if len(self.rows) == 1:
            m, n = self.rows[0]
            return f"H({m},{n})"
        (a, z), (b, d) = self.rows
        return f"F({a},{z};{b},{d})"


@lru_cache(maxsize=None)
def _interned(rows: tuple[Character, ...]) -> TorusSubgroup:
    # Canonical rows recur constantly in ring products; share the instances.
    return TorusSubgroup(rows)
