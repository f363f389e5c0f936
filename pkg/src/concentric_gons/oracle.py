"""Independent brute-force checks: direct power-sum evaluation against the
closed form, dense angle sweeps, and reproducible random instances.

Nothing here reuses the library's recovery or phase-search paths, so these
routines can certify them. Randomness comes from splitmix64, a fixed,
documented recurrence, so instances reproduce bit-for-bit anywhere.
"""

import math
from typing import NamedTuple

from .errors import InvalidMomentOrder
from .geom import (
    PlanePoint,
    RegularPolygonSpec,
    normalize_angle,
    vertices,
)
from .moments import CircleFamily

TWO_PI = 2.0 * math.pi
_MASK64 = (1 << 64) - 1
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output is the state mixed by
    two xor-shift-multiply rounds. Tiny, seedable, and language-independent.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0 ** -53)

    def angle(self) -> float:
        return self.uniform(0.0, TWO_PI)

    def below(self, n: int) -> int:
        return self.next_u64() % n


def power_identity_residual(
    poly: RegularPolygonSpec, point: PlanePoint, m: int
) -> float:
    """Relative gap between the directly summed 2m-th powers of the vertex
    distances and their closed form in the circumradius and the distance
    from the point to the polygon center.

    This is an identity for every regular polygon, point, and m in 1..n-1;
    the residual certifies the arithmetic, not the input.
    """
    if not 1 <= m <= poly.n - 1:
        raise InvalidMomentOrder(f"order m={m} outside 1..{poly.n - 1}")
    direct = math.fsum(
        ((v.x - point.x) ** 2 + (v.y - point.y) ** 2) ** m for v in vertices(poly)
    )
    r = poly.circumradius
    l = point.distance_to(poly.center)
    square_sum = r * r + l * l
    closed = square_sum ** m
    for k in range(1, m // 2 + 1):
        coeff = math.comb(m, 2 * k) * math.comb(2 * k, k)
        closed += coeff * (r * l) ** (2 * k) * square_sum ** (m - 2 * k)
    closed *= poly.n
    return abs(direct - closed) / max(1.0, abs(closed))


def _sweep_residual(n: int, r: float, l: float, t: float, target: tuple[float, ...]) -> float:
    step = TWO_PI / n
    generated = sorted(
        math.sqrt(max(r * r + l * l - 2.0 * r * l * math.cos(t + step * k), 0.0))
        for k in range(n)
    )
    return max(abs(a - b) for a, b in zip(generated, target))


class SweepResult(NamedTuple):
    best_phase: float
    best_residual: float


def angle_sweep(
    r: float,
    l: float,
    n: int,
    target: tuple[float, ...],
    grid_size: int = 3600,
    refine_iters: int = 40,
) -> SweepResult:
    """Minimize the multiset gap between generated vertex distances and a
    target over one period of the phase.

    A uniform grid over [0, 2*pi/n) locates the best cell, then golden
    section refinement narrows it; 3600 cells with 40 iterations pin the
    phase to roughly 1e-9 rad. Deterministic for fixed inputs.
    """
    if grid_size < 360:
        raise ValueError(f"grid_size must be >= 360, got {grid_size}")
    period = TWO_PI / n
    step = period / grid_size
    best_i = 0
    best = math.inf
    for i in range(grid_size):
        res = _sweep_residual(n, r, l, i * step, target)
        if res < best:
            best = res
            best_i = i
    lo = (best_i - 1) * step
    hi = (best_i + 1) * step
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1 = _sweep_residual(n, r, l, x1, target)
    f2 = _sweep_residual(n, r, l, x2, target)
    for _ in range(refine_iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = _sweep_residual(n, r, l, x1, target)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = _sweep_residual(n, r, l, x2, target)
    mid = (lo + hi) / 2.0
    res_mid = _sweep_residual(n, r, l, mid, target)
    phase = math.fmod(mid, period)
    if phase < 0.0:
        phase += period
    return SweepResult(best_phase=phase, best_residual=min(res_mid, best))


class RandomInstance(NamedTuple):
    polygon1: RegularPolygonSpec
    polygon2: RegularPolygonSpec
    point: PlanePoint
    family: CircleFamily


def random_instance(n: int, seed: int, zero_smaller_radius: bool = False) -> RandomInstance:
    """A reproducible pair of regular polygons sharing a distance multiset.

    Circumradii are drawn in [0.1, 10], the observation point in [-5, 5]^2,
    and each polygon center is placed at the other circumradius's distance
    from the point in a random direction. The second polygon's vertex angles
    mirror or shift the first's, which is exactly the freedom that preserves
    the multiset. With ``zero_smaller_radius`` the second circumradius is 0
    and every distance collapses to the first circumradius.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rng = SplitMix64(seed)
    r1 = rng.uniform(0.1, 10.0)
    r2 = 0.0 if zero_smaller_radius else rng.uniform(0.1, 10.0)
    point = PlanePoint(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
    dir1 = rng.angle()
    dir2 = rng.angle()
    relative = rng.angle()
    mirror = -1.0 if rng.next_u64() & 1 else 1.0
    shift = rng.below(n)
    center1 = PlanePoint(point.x + r2 * math.cos(dir1), point.y + r2 * math.sin(dir1))
    center2 = PlanePoint(point.x + r1 * math.cos(dir2), point.y + r1 * math.sin(dir2))
    # The angle from each center back to the point anchors the vertex phases.
    phase1 = normalize_angle(dir1 + math.pi + relative)
    phase2 = normalize_angle(dir2 + math.pi + mirror * relative + TWO_PI * shift / n)
    polygon1 = RegularPolygonSpec(n, center1, r1, phase1)
    polygon2 = RegularPolygonSpec(n, center2, r2, phase2)
    radii = tuple(sorted(point.distance_to(v) for v in vertices(polygon1)))
    return RandomInstance(
        polygon1=polygon1,
        polygon2=polygon2,
        point=point,
        family=CircleFamily(center=point, radii=radii),
    )
