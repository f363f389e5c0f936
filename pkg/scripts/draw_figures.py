#!/usr/bin/env python3
"""Render the worked configurations to SVG files.

Produces four drawings in the output directory:
  triangles.svg       two equilateral triangles on three concentric circles
  squares.svg         two squares on four concentric circles
  shared_vertex.svg   the tangent case where the common point is the shared vertex
  rotation.svg        the smaller triangle shown in three positions around
                      the common center, vertices staying on the circles
"""

import argparse
import math
import os

from concentric_gons import (
    CircleFamily,
    PlanePoint,
    RegularPolygonSpec,
    pair_polygons,
    reconstruct_polygons,
)
from concentric_gons.svg import SvgScene, render_configuration

SQRT3 = math.sqrt(3.0)
TRIANGLE_FAMILY = (math.sqrt(5 - 2 * SQRT3), math.sqrt(5), math.sqrt(5 + 2 * SQRT3))
SQUARE_FAMILY = (math.sqrt(5 - 2 * SQRT3), SQRT3, math.sqrt(7), math.sqrt(5 + 2 * SQRT3))


def reconstruction_figure(radii):
    family = CircleFamily(PlanePoint(0, 0), radii)
    rec = reconstruct_polygons(family)
    return render_configuration(
        circles=[(family.center, r) for r in family.radii],
        polygons=[rec.polygon1, rec.polygon2],
        centers=[rec.polygon1.center, rec.polygon2.center],
        common_points=[family.center],
    )


def shared_vertex_figure():
    p1 = RegularPolygonSpec(3, PlanePoint(0, 0), 1.0, 0.0)
    p2 = RegularPolygonSpec(3, PlanePoint(2, 0), 1.0, math.pi)
    result = pair_polygons(p1, p2)[0]
    return render_configuration(
        circles=[(result.center, r) for r in result.circles.radii if r > 0],
        polygons=[p1, result.aligned_second],
        centers=[p1.center, p2.center],
        common_points=[result.center],
    )


def rotation_figure():
    # Three positions of the smaller triangle around the common center;
    # each keeps one vertex on each of the three circles.
    family = CircleFamily(PlanePoint(0, 0), TRIANGLE_FAMILY)
    rec = reconstruct_polygons(family)
    scene = SvgScene()
    for r in family.radii:
        scene.add_circle(family.center, r)
    scene.add_polygon(rec.polygon1)
    base = rec.polygon2
    step = 2.0 * math.pi / 9.0
    for k in range(3):
        # rotating the polygon about the family center preserves distances
        angle = k * step
        cx = base.center.x * math.cos(angle) - base.center.y * math.sin(angle)
        cy = base.center.x * math.sin(angle) + base.center.y * math.cos(angle)
        rotated = RegularPolygonSpec(
            base.n, PlanePoint(cx, cy), base.circumradius, base.phase + angle
        )
        scene.add_polygon(rotated, dashed=True)
        scene.add_cross(rotated.center)
    scene.add_cross(rec.polygon1.center)
    scene.add_dot(family.center)
    return scene.to_svg()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    figures = {
        "triangles.svg": reconstruction_figure(TRIANGLE_FAMILY),
        "squares.svg": reconstruction_figure(SQUARE_FAMILY),
        "shared_vertex.svg": shared_vertex_figure(),
        "rotation.svg": rotation_figure(),
    }
    for name, text in figures.items():
        path = os.path.join(args.out_dir, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
