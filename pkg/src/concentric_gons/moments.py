"""Power averages of circle radii and the algebra that decides whether a
radii family can be realized by regular polygons, plus circumradius recovery.

The central facts, writing S(2m) for the average of the 2m-th powers of the
radii: a family of n radii comes from a regular n-gon observed from a fixed
point if and only if

  I.  2/3 <= S(2)^2 / S(4) <= 1, and
  II. every higher average S(2m), m = 3..n-1, is the polynomial in S(2) and
      S(4) produced by eliminating the two radii from the power-sum system.

When both hold, the two circumradii follow from S(2) and S(4) alone.
"""

import math
from dataclasses import dataclass

from .errors import InfeasibleMoments, InvalidMomentOrder
from .geom import DEFAULT_TOLERANCE, PlanePoint, Tolerance

MAX_VERTEX_COUNT = 64


@dataclass(frozen=True)
class CircleFamily:
    """Concentric circles: a common center and ascending radii."""

    center: PlanePoint
    radii: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))
        if len(self.radii) < 3:
            raise ValueError(f"need at least 3 radii, got {len(self.radii)}")
        for r in self.radii:
            if not (math.isfinite(r) and r >= 0.0):
                raise ValueError(f"radii must be finite and >= 0, got {r}")
        if any(a > b for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("radii must be sorted ascending")

    @property
    def n(self) -> int:
        return len(self.radii)


@dataclass(frozen=True)
class CyclicAverages:
    """Averages of the 2m-th radius powers for m = 1..n-1.

    ``values[m-1]`` holds the order-2m average.
    """

    n: int
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} averages, got {len(self.values)}")

    def power(self, m: int) -> float:
        """The average of the 2m-th powers."""
        if not 1 <= m <= self.n - 1:
            raise InvalidMomentOrder(f"order m={m} outside 1..{self.n - 1}")
        return self.values[m - 1]


@dataclass(frozen=True)
class RadiiPair:
    """Recovered circumradii, larger first, with the single-polygon flag."""

    larger: float
    smaller: float
    degenerate: bool

    def __post_init__(self):
        if not self.larger >= self.smaller >= 0.0:
            raise ValueError(f"need larger >= smaller >= 0, got ({self.larger}, {self.smaller})")


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of both feasibility conditions for a radii family."""

    condition1_ok: bool
    condition1_ratio: float
    condition2_ok: bool
    condition2_residuals: tuple[float, ...]
    degenerate_single_polygon: bool

    @property
    def feasible(self) -> bool:
        return self.condition1_ok and self.condition2_ok


def cyclic_averages(family: CircleFamily, max_n: int = MAX_VERTEX_COUNT) -> CyclicAverages:
    """Averages of the 2m-th radius powers, m = 1..n-1, via compensated sums.

    Vertex counts above ``max_n`` are rejected: with radii far from 1 the
    top-order powers overflow doubles. Rescale radii to geometric mean 1
    before raising the cap.
    """
    n = family.n
    if n > max_n:
        raise ValueError(f"vertex count {n} exceeds the cap {max_n}")
    squares = [r * r for r in family.radii]
    values = tuple(math.fsum(q ** m for q in squares) / n for m in range(1, n))
    return CyclicAverages(n=n, values=values)


def two_radius_power_sum(r1: float, r2: float, n: int, m: int) -> float:
    """Sum of the 2m-th powers of the n distances from the shared point to
    either polygon's vertices, expressed through the two circumradii.

    Closed form: ``n * ((r1^2 + r2^2)^m + sum_k C(m,2k) C(2k,k)
    (r1 r2)^(2k) (r1^2 + r2^2)^(m-2k))`` over k = 1..floor(m/2).
    """
    if r1 < 0.0 or r2 < 0.0:
        raise ValueError(f"radii must be >= 0, got ({r1}, {r2})")
    if not 1 <= m <= n - 1:
        raise InvalidMomentOrder(f"order m={m} outside 1..{n - 1}")
    square_sum = r1 * r1 + r2 * r2
    product = r1 * r2
    total = square_sum ** m
    for k in range(1, m // 2 + 1):
        coeff = math.comb(m, 2 * k) * math.comb(2 * k, k)
        total += coeff * product ** (2 * k) * square_sum ** (m - 2 * k)
    return n * total


def condition_one(
    av: CyclicAverages, tol: Tolerance = DEFAULT_TOLERANCE
) -> tuple[bool, float]:
    """First feasibility test: S(2)^2 / S(4) must lie in [2/3, 1].

    The upper bound holds automatically for real radii; checking it anyway
    guards against corrupted inputs.
    """
    s2 = av.power(1)
    s4 = av.power(2)
    if s4 <= 0.0:
        ratio = 1.0 if s2 <= 0.0 else math.inf  # all-zero radii are feasible
    else:
        ratio = (s2 * s2) / s4
    g = tol.gap(1.0)
    return (2.0 / 3.0 - g <= ratio <= 1.0 + g), ratio


def higher_average_prediction(s2: float, s4: float, m: int) -> float:
    """The order-2m average implied by the first two, for a realizable family.

    ``s2^m + sum_k (1/2^k) C(m,2k) C(2k,k) (s4 - s2^2)^k s2^(m-2k)`` over
    k = 1..floor(m/2); the spread ``s4 - s2^2`` is clamped at zero.
    """
    spread = max(s4 - s2 * s2, 0.0)
    total = s2 ** m
    for k in range(1, m // 2 + 1):
        coeff = math.comb(m, 2 * k) * math.comb(2 * k, k) / 2 ** k
        total += coeff * spread ** k * s2 ** (m - 2 * k)
    return total


def condition_two(
    av: CyclicAverages, tol: Tolerance = DEFAULT_TOLERANCE
) -> tuple[bool, tuple[float, ...]]:
    """Second feasibility test: each S(2m), m = 3..n-1, must match the value
    predicted from S(2) and S(4).

    Residuals are relative: ``|S(2m) - predicted| / max(1, S(2m))``. For
    n = 3 the range is empty and the test passes vacuously.
    """
    s2 = av.power(1)
    s4 = av.power(2)
    residuals = []
    for m in range(3, av.n):
        actual = av.power(m)
        predicted = higher_average_prediction(s2, s4, m)
        residuals.append(abs(actual - predicted) / max(1.0, actual))
    g = tol.gap(1.0)
    return all(r <= g for r in residuals), tuple(residuals)


def _discriminant(s2: float, s4: float) -> float:
    """(difference of squared circumradii)^2, from the first two averages."""
    return 3.0 * s2 * s2 - 2.0 * s4


def recover_circumradii(
    av: CyclicAverages, tol: Tolerance = DEFAULT_TOLERANCE
) -> RadiiPair:
    """The two circumradii determined by the first two averages.

    ``larger^2, smaller^2 = (S(2) +/- sqrt(3 S(2)^2 - 2 S(4))) / 2``. A
    discriminant within tolerance of zero is clamped and flagged degenerate
    (exactly one polygon exists); below that it raises InfeasibleMoments.
    """
    s2 = av.power(1)
    s4 = av.power(2)
    disc = _discriminant(s2, s4)
    g = tol.gap(max(s2 * s2, s4))
    if disc < -g:
        raise InfeasibleMoments(f"discriminant {disc} is negative beyond tolerance")
    degenerate = disc <= g
    root = math.sqrt(max(disc, 0.0))
    larger_sq = (s2 + root) / 2.0
    smaller_sq = (s2 - root) / 2.0
    if smaller_sq < -g:
        raise InfeasibleMoments(f"squared radius {smaller_sq} is negative beyond tolerance")
    larger = math.sqrt(max(larger_sq, 0.0))
    smaller = math.sqrt(max(smaller_sq, 0.0))
    if degenerate:
        smaller = larger
    return RadiiPair(larger=larger, smaller=min(smaller, larger), degenerate=degenerate)


def assess_feasibility(
    av: CyclicAverages, tol: Tolerance = DEFAULT_TOLERANCE
) -> FeasibilityReport:
    """Run both conditions and flag the vanishing-discriminant case."""
    ok1, ratio = condition_one(av, tol)
    ok2, residuals = condition_two(av, tol)
    s2 = av.power(1)
    s4 = av.power(2)
    degenerate = abs(_discriminant(s2, s4)) <= tol.gap(max(s2 * s2, s4))
    return FeasibilityReport(
        condition1_ok=ok1,
        condition1_ratio=ratio,
        condition2_ok=ok2,
        condition2_residuals=residuals,
        degenerate_single_polygon=degenerate,
    )
