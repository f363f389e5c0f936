"""Plane primitives: points, regular polygons, distances, stable triangle area,
circle intersection, and tolerance-aware multiset comparison.

Everything here is a pure function over immutable values. Tolerances are
explicit: comparisons accept a :class:`Tolerance` and default to
:data:`DEFAULT_TOLERANCE`.
"""

import math
from dataclasses import dataclass

from .errors import CoincidentCircles, TriangleInequalityViolated

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Tolerance:
    """Mixed absolute/relative comparison slack.

    Two quantities a, b compare equal when
    ``|a - b| <= absolute_floor + relative_eps * max(1, scale)``
    where ``scale`` defaults to the first quantity.
    """

    relative_eps: float = 1e-9
    absolute_floor: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.relative_eps < 1e-3:
            raise ValueError(f"relative_eps must lie in (0, 1e-3), got {self.relative_eps}")
        if self.absolute_floor < 0.0:
            raise ValueError(f"absolute_floor must be >= 0, got {self.absolute_floor}")

    def gap(self, scale: float = 1.0) -> float:
        """Largest difference still considered zero at the given magnitude."""
        return self.absolute_floor + self.relative_eps * max(1.0, abs(scale))

    def close(self, a: float, b: float, scale: float | None = None) -> bool:
        return abs(a - b) <= self.gap(a if scale is None else scale)

    def scaled(self, factor: float) -> "Tolerance":
        """A loosened copy; relative_eps stays below its validity ceiling."""
        return Tolerance(
            relative_eps=min(self.relative_eps * factor, 9.9e-4),
            absolute_floor=self.absolute_floor * factor,
        )


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class PlanePoint:
    """A Cartesian point in the Euclidean plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "PlanePoint") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def translated(self, dx: float, dy: float) -> "PlanePoint":
        return PlanePoint(self.x + dx, self.y + dy)


def normalize_angle(angle: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    a = math.fmod(angle, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:  # fmod rounding can land exactly on 2*pi
        a -= TWO_PI
    return a


@dataclass(frozen=True)
class RegularPolygonSpec:
    """A regular n-gon given by vertex count, center, circumradius and phase.

    Vertex k sits at ``center + circumradius * (cos(phase + 2*pi*k/n),
    sin(phase + 2*pi*k/n))``. The phase is normalized to [0, 2*pi) on
    construction.
    """

    n: int
    center: PlanePoint
    circumradius: float
    phase: float

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"vertex count must be an integer >= 3, got {self.n}")
        if not (math.isfinite(self.circumradius) and self.circumradius >= 0.0):
            raise ValueError(f"circumradius must be finite and >= 0, got {self.circumradius}")
        if not math.isfinite(self.phase):
            raise ValueError(f"phase must be finite, got {self.phase}")
        object.__setattr__(self, "phase", normalize_angle(self.phase))


def vertices(poly: RegularPolygonSpec) -> tuple[PlanePoint, ...]:
    """The n vertices, counterclockwise, starting at angle ``poly.phase``."""
    step = TWO_PI / poly.n
    return tuple(
        PlanePoint(
            poly.center.x + poly.circumradius * math.cos(poly.phase + step * k),
            poly.center.y + poly.circumradius * math.sin(poly.phase + step * k),
        )
        for k in range(poly.n)
    )


def heron_area(a: float, b: float, c: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Triangle area from side lengths, using the cancellation-resistant
    sorted product form.

    Returns exactly 0.0 when the sides are collinear within tolerance.
    Raises TriangleInequalityViolated when the longest side exceeds the sum
    of the other two beyond tolerance.
    """
    if a < 0.0 or b < 0.0 or c < 0.0:
        raise ValueError(f"side lengths must be >= 0, got ({a}, {b}, {c})")
    a, b, c = sorted((a, b, c), reverse=True)
    slack = b + c - a  # the only factor that can go negative
    if slack < 0.0:
        if -slack <= tol.gap(a):
            return 0.0
        raise TriangleInequalityViolated(
            f"side {a} exceeds the sum of the other two ({b} + {c}) by {-slack}"
        )
    # Parenthesization matters: keep the exact grouping of the stable form.
    product = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    if product <= 0.0:
        return 0.0
    return math.sqrt(product) / 4.0


def circle_circle_intersection(
    c1: PlanePoint,
    r1: float,
    c2: PlanePoint,
    r2: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> tuple[PlanePoint, ...]:
    """Intersection points of two circles.

    Returns two points for transversal intersection (the point on the
    positive side of the c1->c2 axis first), one point for tangency within
    tolerance, and none when the circles are disjoint. Coincident circles
    of positive radius raise CoincidentCircles.
    """
    if r1 < 0.0 or r2 < 0.0:
        raise ValueError(f"radii must be >= 0, got ({r1}, {r2})")
    dist = c1.distance_to(c2)
    g = tol.gap(max(r1 + r2, dist))
    if dist <= g:
        if abs(r1 - r2) <= g:
            if r1 <= g and r2 <= g:
                # Two point-circles at the same spot intersect in that point.
                return (PlanePoint((c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0),)
            raise CoincidentCircles(f"circles share center and radius {r1}")
        return ()
    if dist > r1 + r2 + g or dist < abs(r1 - r2) - g:
        return ()
    ux = (c2.x - c1.x) / dist
    uy = (c2.y - c1.y) / dist
    along = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist)
    foot = PlanePoint(c1.x + along * ux, c1.y + along * uy)
    if abs(dist - (r1 + r2)) <= g or abs(dist - abs(r1 - r2)) <= g:
        return (foot,)
    height_sq = r1 * r1 - along * along
    height = math.sqrt(height_sq) if height_sq > 0.0 else 0.0
    # (-uy, ux) is the counterclockwise normal: positive half-plane first.
    return (
        PlanePoint(foot.x - height * uy, foot.y + height * ux),
        PlanePoint(foot.x + height * uy, foot.y - height * ux),
    )


def distance_multiset(poly: RegularPolygonSpec, point: PlanePoint) -> tuple[float, ...]:
    """Distances from a point to every vertex, sorted ascending."""
    return tuple(sorted(point.distance_to(v) for v in vertices(poly)))


def multiset_close(
    a: tuple[float, ...] | list[float],
    b: tuple[float, ...] | list[float],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> bool:
    """Elementwise comparison of two ascending sequences of lengths."""
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol.gap(x) for x, y in zip(a, b))
