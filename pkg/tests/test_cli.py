import io
import json
import math
import xml.etree.ElementTree as ET
from contextlib import redirect_stderr, redirect_stdout

import pytest
from hypothesis import given, strategies as st

from concentric_gons import PlanePoint, RegularPolygonSpec, random_instance
from concentric_gons.cli import main
from concentric_gons.instances import (
    InstanceFormatError,
    canonical_json,
    dump_canonical,
    instance_record,
    load_instance,
    parse_instance,
)

SQRT3 = math.sqrt(3.0)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def write_circles(path, radii, center=(0.0, 0.0)):
    payload = {
        "format": "concentric-gons/1",
        "kind": "circles",
        "circles": {"center": list(center), "radii": list(radii)},
    }
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def write_polygon_pair(path, p1, p2):
    payload = {
        "format": "concentric-gons/1",
        "kind": "polygon_pair",
        "polygons": [
            {
                "n": p.n,
                "center": [p.center.x, p.center.y],
                "circumradius": p.circumradius,
                "phase": p.phase,
            }
            for p in (p1, p2)
        ],
    }
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


# ----------------------------------------------------------- instance files


def test_parse_round_trip(tmp_path):
    path = tmp_path / "inst.json"
    write_circles(path, [1.0, 1.0, 2.0])
    loaded = load_instance(str(path))
    assert loaded.kind == "circles"
    assert loaded.circles.radii == (1.0, 1.0, 2.0)
    # dumping and re-parsing preserves the payload
    text = dump_canonical(instance_record(loaded))
    again = parse_instance(json.loads(text))
    assert again.circles.radii == loaded.circles.radii


def test_parse_sorts_radii_with_warning(tmp_path):
    path = tmp_path / "unsorted.json"
    write_circles(path, [2.0, 1.0, 1.0])
    doc = load_instance(str(path))
    assert doc.circles.radii == (1.0, 1.0, 2.0)
    assert doc.load_warnings


def test_polygon_pair_document_round_trip(tmp_path):
    p1 = RegularPolygonSpec(3, PlanePoint(0, 0), 2.0, 0.25)
    p2 = RegularPolygonSpec(3, PlanePoint(2, 0), 1.0, 1.5)
    path = write_polygon_pair(tmp_path / "pair.json", p1, p2)
    doc = load_instance(path)
    text = dump_canonical(instance_record(doc))
    again = parse_instance(json.loads(text))
    assert again.polygons == doc.polygons


def test_parse_ignores_unknown_fields():
    doc = parse_instance(
        {
            "format": "concentric-gons/1",
            "kind": "circles",
            "circles": {"center": [0, 0], "radii": [1, 1, 2]},
            "unexpected": {"stuff": 1},
        }
    )
    assert doc.circles.radii == (1.0, 1.0, 2.0)


def test_parse_rejects_bad_documents():
    with pytest.raises(InstanceFormatError):
        parse_instance({"kind": "circles"})
    with pytest.raises(InstanceFormatError):
        parse_instance({"kind": "nonsense"})
    with pytest.raises(InstanceFormatError):
        parse_instance({"format": "other/1", "kind": "circles"})
    with pytest.raises(InstanceFormatError):
        parse_instance(
            {"kind": "polygon_pair", "polygons": [{"n": 3, "center": [0, 0]}]}
        )


def test_metadata_round_trip(tmp_path):
    payload = {
        "format": "concentric-gons/1",
        "kind": "circles",
        "circles": {"center": [0.0, 0.0], "radii": [1.0, 1.0, 2.0]},
        "metadata": {"label": "worked family", "source": "test"},
    }
    path = tmp_path / "meta.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    doc = load_instance(str(path))
    assert doc.metadata == payload["metadata"]
    emitted = json.loads(dump_canonical(instance_record(doc)))
    assert emitted["metadata"] == payload["metadata"]
    with pytest.raises(InstanceFormatError):
        parse_instance({**payload, "metadata": {"bad": 7}})


def test_canonical_json_formatting():
    text = canonical_json({"b": 0.1, "a": [1, True, None, "x"]})
    assert '"a"' in text and '"b"' in text
    assert text.index('"a"') < text.index('"b"')
    assert "0.10000000000000001" in text
    with pytest.raises(ValueError):
        canonical_json(math.inf)


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_canonical_floats_round_trip_exactly(value):
    assert float(canonical_json(value)) == value


# ------------------------------------------------------------------- check


def test_check_feasible_degenerate_family():
    code, out, _ = run_cli("check", "--radii", "1,1,2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["feasible"] is True
    assert payload["recovered"]["degenerate"] is True
    assert payload["recovered"]["larger"] == pytest.approx(1.0)
    assert payload["report"]["degenerate_single_polygon"] is True


def test_check_infeasible_progression():
    code, out, _ = run_cli("check", "--radii", "1,2,3,4", "--json")
    assert code == 2
    payload = json.loads(out)
    assert payload["feasible"] is False
    residuals = payload["report"]["condition2_residuals"]
    assert residuals[0]["m"] == 3
    assert residuals[0]["residual"] == pytest.approx(75.0 / 1222.5, abs=1e-12)


def test_check_all_equal_family():
    code, out, _ = run_cli("check", "--radii", "1,1,1,1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["recovered"]["larger"] == pytest.approx(1.0)
    assert payload["recovered"]["smaller"] == pytest.approx(0.0, abs=1e-12)


def test_check_unsorted_radii_warns_and_sorts():
    code, out, err = run_cli("check", "--radii", "2,1,1", "--json")
    assert code == 0
    assert "warning" in err
    assert json.loads(out)["radii"] == [1.0, 1.0, 2.0]


def test_check_usage_errors():
    code, _, err = run_cli("check", "--radii", "1,x,2", "--json")
    assert code == 1
    assert "error" in err
    code, _, err = run_cli("check", "--radii", "1,2", "--json")
    assert code == 1
    code, _, _ = run_cli("check")
    assert code == 1


def test_check_tol_flag_loosens_comparison():
    # barely-unbalanced progression accepted under a huge tolerance
    code, _, _ = run_cli("check", "--radii", "1,2,3,4", "--tol", "4e-4")
    assert code == 2  # still far outside even a loose tolerance
    bad = run_cli("check", "--radii", "1,2,3,4", "--tol", "2.0")
    assert bad[0] == 1  # tolerance outside its validity range is a usage error


# ------------------------------------------------------------- reconstruct


def test_reconstruct_worked_family(tmp_path):
    radii = f"{math.sqrt(5 - 2 * SQRT3)},{math.sqrt(5)},{math.sqrt(5 + 2 * SQRT3)}"
    svg_path = tmp_path / "out.svg"
    code, out, _ = run_cli(
        "reconstruct", "--radii", radii, "--json", "--svg", str(svg_path)
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["circumradii"]["larger"] == pytest.approx(2.0, abs=1e-12)
    assert payload["circumradii"]["smaller"] == pytest.approx(1.0, abs=1e-12)
    assert max(payload["residuals"]) <= 1e-9
    root = ET.fromstring(svg_path.read_text(encoding="utf-8"))
    assert root.tag.endswith("svg")
    group = root[0]
    circles = [el for el in group if el.tag.endswith("circle") and el.get("fill") == "none"]
    polygons = [el for el in group if el.tag.endswith("polygon")]
    assert len(circles) == 3
    assert len(polygons) == 2


def test_reconstruct_point_polygon_flagged():
    code, out, _ = run_cli("reconstruct", "--radii", "1,1,1,1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["point_polygon"] is True
    assert payload["polygons"][1]["circumradius"] == 0.0


def test_reconstruct_infeasible_exit():
    code, out, _ = run_cli("reconstruct", "--radii", "1,2,3,4", "--json")
    assert code == 2
    assert json.loads(out)["feasible"] is False


# -------------------------------------------------------------------- pair


def test_pair_requires_input():
    code, _, _ = run_cli("pair")
    assert code == 1


def test_pair_worked_pair(tmp_path):
    p1 = RegularPolygonSpec(3, PlanePoint(0, 0), 2.0, 0.0)
    p2 = RegularPolygonSpec(3, PlanePoint(2, 0), 1.0, 0.5)
    path = write_polygon_pair(tmp_path / "pair.json", p1, p2)
    svg_path = tmp_path / "pair.svg"
    code, out, _ = run_cli("pair", "--input", path, "--json", "--svg", str(svg_path))
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4  # two intersection points, two rotations each
    centers = {(round(res["center"][0], 9), round(res["center"][1], 9)) for res in payload["results"]}
    height = math.sqrt(15) / 4
    assert centers == {(0.25, round(height, 9)), (0.25, round(-height, 9))}
    for res in payload["results"]:
        center = PlanePoint(*res["center"])
        assert center.distance_to(p1.center) == pytest.approx(1.0, abs=1e-9)
        assert center.distance_to(p2.center) == pytest.approx(2.0, abs=1e-9)
    ET.fromstring(svg_path.read_text(encoding="utf-8"))


def test_check_accepts_circle_instance_file(tmp_path):
    path = write_circles(tmp_path / "fam.json", [1.0, 1.0, 2.0])
    code, out, _ = run_cli("check", "--input", path, "--json")
    assert code == 0
    assert json.loads(out)["feasible"] is True


def test_check_rejects_polygon_pair_file(tmp_path):
    p = RegularPolygonSpec(3, PlanePoint(0, 0), 1.0, 0.0)
    path = write_polygon_pair(tmp_path / "pp.json", p, p)
    code, _, err = run_cli("check", "--input", path, "--json")
    assert code == 1
    assert "error" in err


def test_pair_shared_vertex_tangent(tmp_path):
    p1 = RegularPolygonSpec(3, PlanePoint(0, 0), 1.0, 0.0)
    p2 = RegularPolygonSpec(3, PlanePoint(2, 0), 1.0, math.pi)
    path = write_polygon_pair(tmp_path / "shared.json", p1, p2)
    code, out, _ = run_cli("pair", "--input", path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1
    assert payload["results"][0]["center"] == pytest.approx([1.0, 0.0], abs=1e-12)
    assert payload["results"][0]["radii"] == pytest.approx([0.0, SQRT3, SQRT3], abs=1e-12)


def test_pair_far_apart_exits_two(tmp_path):
    p1 = RegularPolygonSpec(3, PlanePoint(0, 0), 1.0, 0.0)
    p2 = RegularPolygonSpec(3, PlanePoint(9, 0), 1.0, 0.0)
    path = write_polygon_pair(tmp_path / "far.json", p1, p2)
    code, out, _ = run_cli("pair", "--input", path, "--json")
    assert code == 2
    assert json.loads(out)["count"] == 0


def test_pair_mismatched_order_exits_one(tmp_path):
    p1 = RegularPolygonSpec(3, PlanePoint(0, 0), 1.0, 0.0)
    p2 = RegularPolygonSpec(4, PlanePoint(2, 0), 1.0, 0.0)
    path = write_polygon_pair(tmp_path / "mismatch.json", p1, p2)
    code, _, err = run_cli("pair", "--input", path, "--json")
    assert code == 1
    assert "error" in err


def test_pair_identical_polygons_degenerate(tmp_path):
    p = RegularPolygonSpec(3, PlanePoint(0, 0), 1.0, 0.25)
    path = write_polygon_pair(tmp_path / "same.json", p, p)
    code, out, _ = run_cli("pair", "--input", path, "--json")
    assert code == 2
    assert json.loads(out)["degenerate_continuum"] is True


# ------------------------------------------------------------------ verify


def test_verify_instance_file(tmp_path):
    inst = random_instance(4, 2)
    path = write_polygon_pair(tmp_path / "inst.json", inst.polygon1, inst.polygon2)
    code, out, _ = run_cli("verify", "--input", path, "--json")
    assert code == 0
    payload = json.loads(out)
    section = payload["result"]
    assert section["pass"] is True
    assert all(item["residual"] <= 1e-10 for item in section["power_identity_residuals"])


def test_verify_circles_kind_runs_sweeps_only(tmp_path):
    path = write_circles(
        tmp_path / "circ.json",
        sorted((math.sqrt(5 - 2 * SQRT3), math.sqrt(5), math.sqrt(5 + 2 * SQRT3))),
    )
    code, out, _ = run_cli("verify", "--input", path, "--json")
    assert code == 0
    section = json.loads(out)["result"]
    assert section["kind"] == "circles"
    assert "power_identity_residuals" not in section
    assert len(section["angle_sweeps"]) == 2
    assert all(s["best_residual"] <= 1e-6 for s in section["angle_sweeps"])


def test_verify_corrupted_radii_identifies_failing_order(tmp_path):
    base = random_instance(5, 31)
    radii = list(base.family.radii)
    radii[2] *= 1.001  # corrupt one digit
    path = write_circles(tmp_path / "bad.json", sorted(radii))
    code, out, _ = run_cli("verify", "--input", path, "--json")
    assert code == 2
    section = json.loads(out)["result"]
    residuals = section["report"]["condition2_residuals"]
    failing = [row["m"] for row in residuals if row["residual"] > 1e-9]
    assert 3 in failing


def test_verify_certification_mode():
    code, out, _ = run_cli("verify", "--seed", "5", "--json")
    assert code == 0
    section = json.loads(out)["result"]
    assert section["kind"] == "certification"
    assert all(row["worst_residual"] <= 1e-10 for row in section["per_n"])


# ------------------------------------------------------------------ render


def test_render_circles_instance(tmp_path):
    path = write_circles(tmp_path / "c.json", [1.0, 1.0, 2.0])
    svg_path = tmp_path / "c.svg"
    code, _, _ = run_cli("render", "--input", path, "--svg", str(svg_path))
    assert code == 0
    root = ET.fromstring(svg_path.read_text(encoding="utf-8"))
    assert root.get("viewBox")


def test_render_requires_svg(tmp_path):
    path = write_circles(tmp_path / "c.json", [1.0, 1.0, 2.0])
    code, _, _ = run_cli("render", "--input", path)
    assert code == 1


def test_human_readable_output():
    code, out, _ = run_cli("check", "--radii", "1,1,2")
    assert code == 0
    assert "feasible: yes" in out
    code, out, _ = run_cli("reconstruct", "--radii", "1,1,1,1")
    assert code == 0
    assert "point polygon" in out


def test_verify_degenerate_instance(tmp_path):
    inst = random_instance(4, 11, zero_smaller_radius=True)
    path = write_polygon_pair(tmp_path / "deg.json", inst.polygon1, inst.polygon2)
    code, out, _ = run_cli("verify", "--input", path, "--json")
    assert code == 0
    section = json.loads(out)["result"]
    assert section["pass"] is True
    assert section["pairing_count"] == 1
    assert section["angle_sweeps"] == []


# ------------------------------------------------------------- determinism


def test_json_outputs_are_byte_identical():
    first = run_cli("check", "--radii", "1,1,2", "--json")
    second = run_cli("check", "--radii", "1,1,2", "--json")
    assert first == second
    rec1 = run_cli("reconstruct", "--radii", "1,1,1,1", "--json")
    rec2 = run_cli("reconstruct", "--radii", "1,1,1,1", "--json")
    assert rec1 == rec2


def test_certification_output_is_byte_identical():
    first = run_cli("verify", "--seed", "3", "--json")
    second = run_cli("verify", "--seed", "3", "--json")
    assert first == second
    assert first[0] == 0


def test_svg_outputs_are_byte_identical(tmp_path):
    radii = f"{math.sqrt(5 - 2 * SQRT3)},{math.sqrt(5)},{math.sqrt(5 + 2 * SQRT3)}"
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run_cli("reconstruct", "--radii", radii, "--svg", str(a))
    run_cli("reconstruct", "--radii", radii, "--svg", str(b))
    assert a.read_bytes() == b.read_bytes()
