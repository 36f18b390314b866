"""Exact arithmetic in the Euler rings of the 2-torus and the circle.

The Euler ring of T^2 is the free Z-module on the orbit classes of closed
subgroups.  The product of two generators is the class of the intersection
when the dimensions are additive,

    dim H1 + dim H2 == 2 + dim (H1 n H2),

and zero otherwise; the class of the full torus is the multiplicative
identity.  Grading by subgroup dimension, products of two one-dimensional
classes land in degree zero and everything below degree one multiplies to
zero, which makes the non-identity part of any element nilpotent of order
three.  Elements are canonically sorted sparse integer combinations, so
equality is structural and all arithmetic is exact.

The circle's Euler ring enters only through its additive group, generated
by the full-orbit class and the classes with finite cyclic isotropy, and
through the embedding into the torus ring induced by collapsing the loop
direction: the full-orbit class goes to the identity and the class with
isotropy of order k goes to the kernel of the character (k, 0).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .subgroups import TorusSubgroup


class NotInvertible(ValueError):
    """Inversion was attempted on an element whose identity coefficient is not +-1."""


TermsT2 = Union[
    Mapping[TorusSubgroup, int],
    Iterable[tuple[TorusSubgroup, int]],
]


def _term_key(item: tuple[TorusSubgroup, int]) -> tuple[int, tuple[tuple[int, int], ...]]:
    subgroup, _ = item
    return (-subgroup.dim, subgroup.rows)


def _check_coeff(value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"coefficients must be ints, got {value!r}")
    return value


@dataclass(frozen=True)
class EulerElementT2:
    """A finitely supported integer combination of torus orbit classes.

    Accepts a mapping or an iterable of (subgroup, coefficient) pairs;
    like terms merge, zero coefficients drop, and terms are stored sorted
    by descending subgroup dimension and then by lattice rows.
    """

    terms: tuple[tuple[TorusSubgroup, int], ...] = ()

    def __post_init__(self) -> None:
        raw = self.terms
        items = raw.items() if isinstance(raw, Mapping) else raw
        merged: dict[TorusSubgroup, int] = {}
        for subgroup, coeff in items:
            if not isinstance(subgroup, TorusSubgroup):
                raise TypeError(f"expected TorusSubgroup keys, got {subgroup!r}")
            merged[subgroup] = merged.get(subgroup, 0) + _check_coeff(coeff)
        cleaned = tuple(
            sorted(((h, c) for h, c in merged.items() if c), key=_term_key)
        )
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls) -> "EulerElementT2":
        return cls(())

    @classmethod
    def identity(cls) -> "EulerElementT2":
        """The class of the full torus, the ring identity."""
        return cls(((TorusSubgroup.full(), 1),))

    @classmethod
    def generator(cls, subgroup: TorusSubgroup) -> "EulerElementT2":
        return cls(((subgroup, 1),))

    def coefficient(self, subgroup: TorusSubgroup) -> int:
        for h, c in self.terms:
            if h == subgroup:
                return c
        return 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "EulerElementT2") -> "EulerElementT2":
        if not isinstance(other, EulerElementT2):
            return NotImplemented
        merged = {h: c for h, c in self.terms}
        for h, c in other.terms:
            merged[h] = merged.get(h, 0) + c
        return EulerElementT2(merged)

    def __sub__(self, other: "EulerElementT2") -> "EulerElementT2":
        if not isinstance(other, EulerElementT2):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "EulerElementT2":
        return EulerElementT2(tuple((h, -c) for h, c in self.terms))

    def __mul__(self, scale: int) -> "EulerElementT2":
        if not isinstance(scale, int) or isinstance(scale, bool):
            return NotImplemented
        return EulerElementT2(tuple((h, scale * c) for h, c in self.terms))

    __rmul__ = __mul__

    def star(self, other: "EulerElementT2") -> "EulerElementT2":
        """Ring product, extended bilinearly from generator products."""
        if not isinstance(other, EulerElementT2):
            raise TypeError(f"cannot multiply EulerElementT2 by {type(other).__name__}")
        out: dict[TorusSubgroup, int] = {}
        for h1, c1 in self.terms:
            for h2, c2 in other.terms:
                h0 = _generator_product(h1, h2)
                if h0 is not None:
                    out[h0] = out.get(h0, 0) + c1 * c2
        return EulerElementT2(out)

    def project(self, dim: int) -> "EulerElementT2":
        """The part supported on subgroups of the given dimension."""
        if dim not in (0, 1, 2):
            raise ValueError(f"dimension must be 0, 1, or 2, got {dim!r}")
        return EulerElementT2(tuple((h, c) for h, c in self.terms if h.dim == dim))

    def invert(self) -> "EulerElementT2":
        """Multiplicative inverse of a unit.

        An element is a unit exactly when its identity coefficient is +1 or
        -1; the rest is nilpotent (cube zero by the grading), so the inverse
        is the usual finite geometric series.
        """
        c = self.coefficient(TorusSubgroup.full())
        if c not in (1, -1):
            raise NotInvertible(
                f"identity coefficient is {c}; only coefficients +1 and -1 invert"
            )
        nil = self - c * EulerElementT2.identity()
        series = EulerElementT2.identity() - c * nil + nil.star(nil)
        return c * series

    def __str__(self) -> str:
        return format_element(self)


@lru_cache(maxsize=None)
def _generator_product(h1: TorusSubgroup, h2: TorusSubgroup) -> TorusSubgroup | None:
    """Product of two orbit-class generators, or None when it vanishes."""
    meet = h1.intersect(h2)
    if h1.dim + h2.dim == 2 + meet.dim:
        return meet
    return None


def format_element(element: EulerElementT2) -> str:
    """Render an element in the textual grammar; the zero element is '0'."""
    if not element.terms:
        return "0"
    parts: list[str] = []
    for subgroup, coeff in element.terms:
        if not parts:
            parts.append(f"{coeff}*{subgroup}")
        elif coeff < 0:
            parts.append(f" - {-coeff}*{subgroup}")
        else:
            parts.append(f" + {coeff}*{subgroup}")
    return "".join(parts)


TermsS1 = Union[Mapping[int, int], Iterable[tuple[int, int]]]


@dataclass(frozen=True)
class EulerElementS1:
    """An additive element of the circle's Euler ring.

    `fixed` is the coefficient of the full-orbit class; `finite` maps the
    order k >= 1 of a finite cyclic isotropy group to its coefficient.
    """

    fixed: int = 0
    finite: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        _check_coeff(self.fixed)
        raw = self.finite
        items = raw.items() if isinstance(raw, Mapping) else raw
        merged: dict[int, int] = {}
        for order, coeff in items:
            if not isinstance(order, int) or isinstance(order, bool) or order < 1:
                raise ValueError(f"isotropy order must be a positive int, got {order!r}")
            merged[order] = merged.get(order, 0) + _check_coeff(coeff)
        cleaned = tuple(sorted((k, c) for k, c in merged.items() if c))
        object.__setattr__(self, "finite", cleaned)

    @classmethod
    def zero(cls) -> "EulerElementS1":
        return cls()

    @classmethod
    def identity(cls) -> "EulerElementS1":
        """The full-orbit class."""
        return cls(fixed=1)

    @classmethod
    def cyclic(cls, order: int) -> "EulerElementS1":
        """The class of the orbit type with cyclic isotropy of the given order."""
        return cls(0, ((order, 1),))

    def __bool__(self) -> bool:
        return bool(self.fixed or self.finite)

    def __add__(self, other: "EulerElementS1") -> "EulerElementS1":
        if not isinstance(other, EulerElementS1):
            return NotImplemented
        merged = {k: c for k, c in self.finite}
        for k, c in other.finite:
            merged[k] = merged.get(k, 0) + c
        return EulerElementS1(self.fixed + other.fixed, merged)

    def __sub__(self, other: "EulerElementS1") -> "EulerElementS1":
        if not isinstance(other, EulerElementS1):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "EulerElementS1":
        return EulerElementS1(-self.fixed, tuple((k, -c) for k, c in self.finite))

    def __mul__(self, scale: int) -> "EulerElementS1":
        if not isinstance(scale, int) or isinstance(scale, bool):
            return NotImplemented
        return EulerElementS1(scale * self.fixed, tuple((k, scale * c) for k, c in self.finite))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self:
            return "0"
        labelled = []
        if self.fixed:
            labelled.append(("S1", self.fixed))
        labelled.extend((f"Z{k}", c) for k, c in self.finite)
        parts: list[str] = []
        for label, coeff in labelled:
            if not parts:
                parts.append(f"{coeff}*{label}")
            elif coeff < 0:
                parts.append(f" - {-coeff}*{label}")
            else:
                parts.append(f" + {coeff}*{label}")
        return "".join(parts)


def embed_s1_to_t2(element: EulerElementS1) -> EulerElementT2:
    """Embedding induced by collapsing the loop direction of the torus.

    The full-orbit class maps to the identity and the class with isotropy
    of order k maps to the kernel of the character (k, 0).
    """
    terms: dict[TorusSubgroup, int] = {}
    if element.fixed:
        terms[TorusSubgroup.full()] = element.fixed
    for order, coeff in element.finite:
        terms[TorusSubgroup.kernel(order, 0)] = coeff
    return EulerElementT2(terms)
