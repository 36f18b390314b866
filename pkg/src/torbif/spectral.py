"""Linearization data at a critical point, kept exact over the rationals.

The input is the spectrum of the potential's Hessian at a critical point:
each distinct eigenvalue alpha together with the circle-isotypic splitting
of its eigenspace, plus the precomputed circle-equivariant degree of the
negated gradient and whether the critical point is unique.  From this the
module enumerates candidate bifurcation levels and assembles the relevant
pieces of the second variation of the action on Fourier modes.

On the n-th mode over the eigenspace of alpha, the second variation at
frequency lambda scales by (n^2 - lambda^2 alpha) / (n^2 + 1), so the mode
is negative, null, or positive according to the exact comparison of n^2
with lambda^2 alpha.  A candidate level is a frequency whose square q
makes q * alpha a perfect square for some positive eigenvalue alpha;
levels are identified by q, so coincident frequencies arising from
different eigenvalues are a single level and every comparison is
decidable.  The negative space is taken just below or just above the
level ("minus" keeps n^2 < q alpha strict, "plus" also absorbs the null
modes), which is exactly the difference of Morse data across the level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .euler import EulerElementS1
from .rationals import as_fraction
from .representations import S1Representation, T2Representation, loop_decompose

Side = Literal["minus", "plus"]


class InvalidLevel(ValueError):
    """The requested frequency is not a candidate bifurcation level."""


@dataclass(frozen=True)
class SpectralDatum:
    """One Hessian eigenvalue with the isotypic splitting of its eigenspace."""

    alpha: Fraction
    isotypic: S1Representation

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        if not isinstance(self.isotypic, S1Representation):
            raise TypeError("isotypic must be an S1Representation")
        if self.isotypic.dim == 0:
            raise ValueError("an eigenspace must have positive dimension")


@dataclass(frozen=True)
class AssumptionReport:
    """Which structural assumptions the problem satisfies."""

    positive_eigenvalue: bool
    nonzero_degree: bool

    @property
    def ok(self) -> bool:
        return self.positive_eigenvalue and self.nonzero_degree


@dataclass(frozen=True)
class CriticalPointProblem:
    """A critical point described by its Hessian spectrum, the circle
    degree of the negated gradient, and a uniqueness flag."""

    spectra: tuple[SpectralDatum, ...]
    deg_s1: EulerElementS1
    unique_critical_point: bool = False

    def __post_init__(self) -> None:
        spectra = tuple(self.spectra)
        if not spectra:
            raise ValueError("a problem needs at least one spectral datum")
        if not all(isinstance(d, SpectralDatum) for d in spectra):
            raise TypeError("spectra must contain SpectralDatum entries")
        alphas = [d.alpha for d in spectra]
        if len(set(alphas)) != len(alphas):
            raise ValueError("duplicate eigenvalues; merge their eigenspaces first")
        object.__setattr__(self, "spectra", spectra)
        if not isinstance(self.deg_s1, EulerElementS1):
            raise TypeError("deg_s1 must be an EulerElementS1")
        if not isinstance(self.unique_critical_point, bool):
            raise TypeError("unique_critical_point must be a bool")

    @property
    def dimension(self) -> int:
        return sum(d.isotypic.dim for d in self.spectra)

    def positive_alphas(self) -> tuple[Fraction, ...]:
        return tuple(d.alpha for d in self.spectra if d.alpha > 0)

    def eigenspace(self, alpha: Fraction) -> S1Representation:
        for d in self.spectra:
            if d.alpha == alpha:
                return d.isotypic
        raise ValueError(f"{alpha} is not an eigenvalue of this problem")


def validate(problem: CriticalPointProblem) -> AssumptionReport:
    """Check the two assumptions every certificate below relies on:
    a positive eigenvalue exists and the equivariant degree is nonzero."""
    return AssumptionReport(
        positive_eigenvalue=any(d.alpha > 0 for d in problem.spectra),
        nonzero_degree=bool(problem.deg_s1),
    )


@dataclass(frozen=True, eq=False)
class BifurcationLevel:
    """A candidate level, addressed as the frequency k / sqrt(alpha).

    Identity is the square of the frequency: two levels are equal exactly
    when their `lambda_sq` values are equal, so coincident levels coming
    from different eigenvalues compare equal.
    """

    k: int
    alpha: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive int, got {self.k!r}")
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    @property
    def lambda_sq(self) -> Fraction:
        return Fraction(self.k * self.k) / self.alpha

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BifurcationLevel):
            return NotImplemented
        return self.lambda_sq == other.lambda_sq

    def __hash__(self) -> int:
        return hash(self.lambda_sq)

    def __repr__(self) -> str:
        return f"BifurcationLevel(k={self.k}, alpha={self.alpha})"


def lambda_set(problem: CriticalPointProblem, max_k: int) -> list[BifurcationLevel]:
    """Candidate levels k / sqrt(alpha) for k = 1..max_k over the positive
    eigenvalues, merged by frequency and sorted ascending.  Each merged
    level keeps the representative with the smallest k."""
    if not isinstance(max_k, int) or isinstance(max_k, bool) or max_k < 1:
        raise ValueError(f"max_k must be a positive int, got {max_k!r}")
    found: dict[Fraction, BifurcationLevel] = {}
    for k in range(1, max_k + 1):
        for alpha in problem.positive_alphas():
            level = BifurcationLevel(k, alpha)
            found.setdefault(level.lambda_sq, level)
    return sorted(found.values(), key=lambda lvl: lvl.lambda_sq)


def resonant_pairs(
    problem: CriticalPointProblem, level: BifurcationLevel
) -> tuple[tuple[int, Fraction], ...]:
    """All (mode, alpha) with mode^2 == lambda_sq * alpha, mode >= 1."""
    q = level.lambda_sq
    pairs = []
    for datum in problem.spectra:
        if datum.alpha <= 0:
            continue
        target = q * datum.alpha
        if target.denominator != 1:
            continue
        n = math.isqrt(target.numerator)
        if n >= 1 and n * n == target.numerator:
            pairs.append((n, datum.alpha))
    return tuple(sorted(pairs))


def level_from_lambda_sq(
    problem: CriticalPointProblem, value: int | str | Fraction
) -> BifurcationLevel:
    """Resolve a squared frequency to a level of this problem."""
    q = as_fraction(value)
    if q > 0:
        candidates = []
        for datum in problem.spectra:
            if datum.alpha <= 0:
                continue
            target = q * datum.alpha
            if target.denominator != 1:
                continue
            n = math.isqrt(target.numerator)
            if n >= 1 and n * n == target.numerator:
                candidates.append((n, datum.alpha))
        if candidates:
            n, alpha = min(candidates)
            return BifurcationLevel(n, alpha)
    raise InvalidLevel(f"lambda_sq = {q} is not a candidate bifurcation level")


def hessian_eigenvalue(
    mode: int, lambda_sq: int | str | Fraction, alpha: int | str | Fraction
) -> Fraction:
    """Scaling factor of the second variation on the `mode`-th Fourier mode
    over the eigenspace of alpha: (mode^2 - lambda_sq * alpha) / (mode^2 + 1)."""
    if not isinstance(mode, int) or isinstance(mode, bool) or mode < 0:
        raise ValueError(f"mode must be a nonnegative int, got {mode!r}")
    q = as_fraction(lambda_sq)
    a = as_fraction(alpha)
    return (Fraction(mode * mode) - q * a) / (mode * mode + 1)


def negative_space(
    problem: CriticalPointProblem, level: BifurcationLevel, side: Side = "minus"
) -> T2Representation:
    """Direct sum of the negative Fourier modes of the second variation at
    the level; side "minus" keeps the comparison strict, side "plus" also
    absorbs the null modes."""
    if side not in ("minus", "plus"):
        raise ValueError(f"side must be 'minus' or 'plus', got {side!r}")
    strict = side == "minus"
    q = level.lambda_sq
    total = T2Representation()
    for datum in problem.spectra:
        if datum.alpha <= 0:
            continue
        bound = q * datum.alpha
        n = 1
        while n * n < bound or (not strict and n * n == bound):
            total = total + loop_decompose(datum.isotypic, n)
            n += 1
    return total


def resonant_space(
    problem: CriticalPointProblem, level: BifurcationLevel
) -> T2Representation:
    """Direct sum of the null Fourier modes of the second variation at the level."""
    total = T2Representation()
    for n, alpha in resonant_pairs(problem, level):
        total = total + loop_decompose(problem.eigenspace(alpha), n)
    return total
