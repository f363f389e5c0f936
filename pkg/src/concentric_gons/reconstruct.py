"""Circles-to-polygons direction: realize a feasible radii family as two
concrete regular polygons observed from the family center.

Placement convention: with M the family center, both polygon centers go on
the +x axis from M, the first at distance ``smaller`` with circumradius
``larger`` and the second at distance ``larger`` with circumradius
``smaller``. Only distances are forced by the mathematics; fixing the
directions makes outputs deterministic and diffable.
"""

import math
from dataclasses import dataclass

from .errors import (
    DegenerateGeometry,
    InfeasibleFamily,
    InfeasibleMoments,
    PhaseSearchFailed,
)
from .geom import (
    DEFAULT_TOLERANCE,
    PlanePoint,
    RegularPolygonSpec,
    Tolerance,
    distance_multiset,
    multiset_close,
    normalize_angle,
)
from .moments import (
    CircleFamily,
    FeasibilityReport,
    RadiiPair,
    assess_feasibility,
    cyclic_averages,
    recover_circumradii,
)

TWO_PI = 2.0 * math.pi


def phase_candidates(
    r: float, l: float, d: float, tol: Tolerance = DEFAULT_TOLERANCE
) -> tuple[float, ...]:
    """Opening angles t with d^2 = r^2 + l^2 - 2 r l cos(t).

    Returns the +/- pair, one angle at the extremes (d equal to r + l or
    |r - l| within tolerance), and nothing when d is out of range. Zero arm
    lengths leave the angle underdetermined and raise DegenerateGeometry.
    """
    if r <= 0.0 or l <= 0.0:
        raise DegenerateGeometry(
            f"arm lengths must be positive, got ({r}, {l}): any angle works "
            "when d equals |r - l|, none otherwise"
        )
    cos_t = (r * r + l * l - d * d) / (2.0 * r * l)
    if abs(cos_t) > 1.0 + tol.gap(1.0):
        return ()
    cos_t = max(-1.0, min(1.0, cos_t))
    t = math.acos(cos_t)
    if abs(cos_t) >= 1.0 - tol.gap(1.0):
        return (t,)
    return (t, -t)


@dataclass(frozen=True)
class Reconstruction:
    """Two polygon placements realizing a radii family, with diagnostics."""

    polygon1: RegularPolygonSpec
    polygon2: RegularPolygonSpec
    report: FeasibilityReport
    circumradii: RadiiPair
    point_polygon: bool  # second polygon collapsed to a point
    residuals: tuple[float, float]


def verify_reconstruction(family: CircleFamily, poly: RegularPolygonSpec) -> float:
    """Largest elementwise gap between the polygon's sorted vertex distances
    from the family center and the family radii."""
    if poly.n != family.n:
        raise ValueError(f"vertex count {poly.n} does not match {family.n} radii")
    measured = distance_multiset(poly, family.center)
    return max(abs(a - b) for a, b in zip(measured, family.radii))


def _generated_distances(n: int, r: float, l: float, t: float) -> tuple[float, ...]:
    step = TWO_PI / n
    return tuple(
        sorted(
            math.sqrt(max(r * r + l * l - 2.0 * r * l * math.cos(t + step * k), 0.0))
            for k in range(n)
        )
    )


def _find_phase(
    n: int, r: float, l: float, radii: tuple[float, ...], tol: Tolerance
) -> float:
    """An opening angle whose full generated multiset matches the radii.

    Tries the largest radius first (its cosine is nearest -1 and best
    conditioned), then smaller ones, + branch before -; the acceptance
    tolerance is 10x the base to absorb trig rounding across n vertices.
    """
    accept = tol.scaled(10.0)
    for d in sorted(radii, reverse=True):
        for t in phase_candidates(r, l, d, tol):
            if multiset_close(_generated_distances(n, r, l, t), radii, accept):
                return t
    raise PhaseSearchFailed(
        f"no phase reproduced the radii for arms ({r}, {l}); this indicates a "
        "tolerance mismatch, not mathematical impossibility"
    )


def reconstruct_polygons(
    family: CircleFamily, tol: Tolerance = DEFAULT_TOLERANCE
) -> Reconstruction:
    """Build the two regular polygons whose vertex distances from the family
    center reproduce the family radii.

    Raises InfeasibleFamily (report attached) when either feasibility
    condition fails. When the smaller recovered circumradius vanishes, the
    second polygon degenerates to a point at distance ``larger`` from the
    center and the phase search is skipped.
    """
    averages = cyclic_averages(family)
    report = assess_feasibility(averages, tol)
    if not report.feasible:
        raise InfeasibleFamily("radii family fails the feasibility conditions", report)
    try:
        pair = recover_circumradii(averages, tol)
    except InfeasibleMoments as exc:
        # Possible only when the first condition sits exactly on its lower
        # boundary: its ratio tolerance and the discriminant tolerance scale
        # differently.
        raise InfeasibleFamily(str(exc), report) from exc
    center = family.center
    n = family.n
    # Collapse detection happens at the squared-radius level: recovery goes
    # through a square root, so an exactly-zero radius resurfaces only as
    # sqrt(rounding) in length units.
    if pair.smaller ** 2 <= tol.gap(pair.larger ** 2):
        poly1 = RegularPolygonSpec(n, center, pair.larger, 0.0)
        poly2 = RegularPolygonSpec(
            n, PlanePoint(center.x + pair.larger, center.y), 0.0, 0.0
        )
        point_polygon = True
    else:
        t1 = _find_phase(n, pair.larger, pair.smaller, family.radii, tol)
        t2 = _find_phase(n, pair.smaller, pair.larger, family.radii, tol)
        # Each center sits on the +x axis, so the direction back to the
        # family center is pi; vertex angles are measured from that line.
        poly1 = RegularPolygonSpec(
            n,
            PlanePoint(center.x + pair.smaller, center.y),
            pair.larger,
            normalize_angle(math.pi + t1),
        )
        poly2 = RegularPolygonSpec(
            n,
            PlanePoint(center.x + pair.larger, center.y),
            pair.smaller,
            normalize_angle(math.pi + t2),
        )
        point_polygon = False
    residuals = (
        verify_reconstruction(family, poly1),
        verify_reconstruction(family, poly2),
    )
    return Reconstruction(
        polygon1=poly1,
        polygon2=poly2,
        report=report,
        circumradii=pair,
        point_polygon=point_polygon,
        residuals=residuals,
    )
