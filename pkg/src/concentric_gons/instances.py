"""Instance documents on disk and deterministic JSON output.

An instance file is UTF-8 JSON with ``"format": "concentric-gons/1"`` and a
``kind`` of either ``"circles"`` (a center and radii) or ``"polygon_pair"``
(two regular polygon records). Unknown fields are ignored on read and never
written. All emitted JSON uses sorted keys and fixed 17-significant-digit
float formatting, so identical inputs give byte-identical output.
"""

import json
import math
from dataclasses import dataclass, field

from .geom import PlanePoint, RegularPolygonSpec
from .moments import CircleFamily

FORMAT_NAME = "concentric-gons/1"


class InstanceFormatError(ValueError):
    """The document is not a valid instance file."""


@dataclass(frozen=True)
class InstanceDocument:
    """Parsed instance file: exactly one of the two payloads is present."""

    kind: str  # "circles" or "polygon_pair"
    circles: CircleFamily | None = None
    polygons: tuple[RegularPolygonSpec, RegularPolygonSpec] | None = None
    metadata: dict[str, str] = field(default_factory=dict)
    load_warnings: tuple[str, ...] = ()


def _as_point(raw, where: str) -> PlanePoint:
    if (
        not isinstance(raw, (list, tuple))
        or len(raw) != 2
        or not all(isinstance(v, (int, float)) for v in raw)
    ):
        raise InstanceFormatError(f"{where} must be a [x, y] pair, got {raw!r}")
    return PlanePoint(float(raw[0]), float(raw[1]))


def _as_polygon(raw, where: str) -> RegularPolygonSpec:
    if not isinstance(raw, dict):
        raise InstanceFormatError(f"{where} must be an object, got {raw!r}")
    try:
        return RegularPolygonSpec(
            n=int(raw["n"]),
            center=_as_point(raw["center"], f"{where}.center"),
            circumradius=float(raw["circumradius"]),
            phase=float(raw.get("phase", 0.0)),
        )
    except KeyError as exc:
        raise InstanceFormatError(f"{where} is missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(f"{where} is invalid: {exc}") from None


def parse_instance(raw: object) -> InstanceDocument:
    """Build an InstanceDocument from decoded JSON, sorting radii if needed."""
    if not isinstance(raw, dict):
        raise InstanceFormatError(f"instance must be a JSON object, got {type(raw).__name__}")
    fmt = raw.get("format", FORMAT_NAME)
    if not isinstance(fmt, str) or not fmt.startswith("concentric-gons/"):
        raise InstanceFormatError(f"unsupported format {fmt!r}")
    kind = raw.get("kind")
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise InstanceFormatError("metadata must map strings to strings")
    warnings: list[str] = []
    if kind == "circles":
        payload = raw.get("circles")
        if not isinstance(payload, dict):
            raise InstanceFormatError("circles payload missing")
        radii_raw = payload.get("radii")
        if not isinstance(radii_raw, list) or not all(
            isinstance(v, (int, float)) for v in radii_raw
        ):
            raise InstanceFormatError("circles.radii must be a list of numbers")
        radii = [float(v) for v in radii_raw]
        if sorted(radii) != radii:
            warnings.append("radii were not sorted ascending; sorted them")
            radii = sorted(radii)
        try:
            family = CircleFamily(
                center=_as_point(payload.get("center", [0.0, 0.0]), "circles.center"),
                radii=tuple(radii),
            )
        except ValueError as exc:
            raise InstanceFormatError(f"circles payload invalid: {exc}") from None
        return InstanceDocument(
            kind="circles", circles=family, metadata=dict(metadata),
            load_warnings=tuple(warnings),
        )
    if kind == "polygon_pair":
        payload = raw.get("polygons")
        if not isinstance(payload, list) or len(payload) != 2:
            raise InstanceFormatError("polygons payload must list exactly two polygons")
        polys = tuple(_as_polygon(p, f"polygons[{i}]") for i, p in enumerate(payload))
        return InstanceDocument(
            kind="polygon_pair", polygons=polys, metadata=dict(metadata),
            load_warnings=tuple(warnings),
        )
    raise InstanceFormatError(f"kind must be 'circles' or 'polygon_pair', got {kind!r}")


def load_instance(path: str) -> InstanceDocument:
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path} is not valid JSON: {exc}") from None
    return parse_instance(raw)


def polygon_record(poly: RegularPolygonSpec) -> dict:
    return {
        "n": poly.n,
        "center": [poly.center.x, poly.center.y],
        "circumradius": poly.circumradius,
        "phase": poly.phase,
    }


def instance_record(doc: InstanceDocument) -> dict:
    record: dict = {"format": FORMAT_NAME, "kind": doc.kind}
    if doc.kind == "circles":
        record["circles"] = {
            "center": [doc.circles.center.x, doc.circles.center.y],
            "radii": list(doc.circles.radii),
        }
    else:
        record["polygons"] = [polygon_record(p) for p in doc.polygons]
    if doc.metadata:
        record["metadata"] = dict(doc.metadata)
    return record


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite float {value}")
    return format(value, ".17g")


def canonical_json(value: object, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, fixed float formatting."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        parts = [
            f"{inner}{json.dumps(str(k))}: {canonical_json(v, indent + 1)}"
            for k, v in sorted(value.items())
        ]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        parts = [f"{inner}{canonical_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dump_canonical(value: object) -> str:
    """Canonical JSON document text, newline-terminated."""
    return canonical_json(value) + "\n"
