"""Deterministic export writers: JSON, CSV and DOT text for every model.

Each function returns the complete file body as a string.  Orderings are
canonical (atlas order D1..D15, U1..U6, V1..V6, ascending bit strings for
vectors), so repeated runs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from gqlab.atlas import atlas, classify, label_of
from gqlab.gf2 import MAT_IDENTITY, SYM_IDENTITY, bits6, eigenspace_dim, mat_mul, sym_to_mat
from gqlab.pg import (
    elliptic_quadric,
    elliptic_quadric_at,
    klein_quadric,
    lines_in,
)
from gqlab.planes import DISTINGUISHED, family_planes, intersection_statistics, raw_plane_rows
from gqlab.quadrangle import (
    DOUBLE_SIX_ISOMORPHISM,
    build_matrix_quadrangle,
    collinearity_graph_edges,
)

_CLASS_COLORS = {"D": "lightblue", "U": "palegreen", "V": "lightsalmon"}


def _json_text(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _atlas_rows() -> list[dict]:
    at = atlas()
    rows = []
    for x in (SYM_IDENTITY,) + at.points:
        m = sym_to_mat(x)
        rows.append(
            {
                "label": label_of(x),
                "bits": bits6(x),
                "class": classify(x).value,
                "eigenspace_dim": eigenspace_dim(m),
                "involution": mat_mul(m, m) == MAT_IDENTITY,
            }
        )
    return rows


def atlas_json() -> str:
    return _json_text(_atlas_rows())


def atlas_csv() -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "bits", "class", "eigenspace_dim", "involution"])
    for row in _atlas_rows():
        writer.writerow(
            [row["label"], row["bits"], row["class"], row["eigenspace_dim"], row["involution"]]
        )
    return buf.getvalue()


def incidence_json() -> str:
    inc = build_matrix_quadrangle()
    return _json_text(
        {
            "points": list(inc.points),
            "lines": [list(line) for line in inc.lines],
            "order": {"s": 2, "t": 4},
        }
    )


def incidence_dot() -> str:
    at = atlas()
    lines = ["graph collinearity {", "  node [shape=circle style=filled];"]
    for x in at.points:
        label = label_of(x)
        cls = classify(x).value
        lines.append(f'  "{label}" [class="{cls}" fillcolor="{_CLASS_COLORS[cls]}"];')
    for a, b in collinearity_graph_edges():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _quadric_record(form_name: str, points: frozenset[int]) -> dict:
    return {
        "form": form_name,
        "points": [bits6(v) for v in sorted(points)],
        "lines_contained": [[bits6(v) for v in line] for line in lines_in(points)],
    }


def quadrics_json() -> str:
    records = [
        _quadric_record("q0", klein_quadric()),
        _quadric_record("q", elliptic_quadric()),
    ]
    for m in atlas().points:
        records.append(_quadric_record(f"qM:{label_of(m)}", elliptic_quadric_at(m)))
    return _json_text(records)


def planes_json() -> str:
    records = []
    for x in atlas().points:
        raw = raw_plane_rows(sym_to_mat(x))
        echelon = family_planes()[label_of(x)]
        records.append(
            {
                "label": label_of(x),
                "matrix_rows": [bits6(r) for r in raw],
                "echelon": [bits6(r) for r in echelon],
                "class": classify(x).value,
            }
        )
    for plane, label in DISTINGUISHED.items():
        records.append(
            {
                "label": label,
                "matrix_rows": [bits6(r) for r in plane],
                "echelon": [bits6(r) for r in plane],
                "class": "distinguished",
            }
        )
    return _json_text(records)


def planes_csv() -> str:
    """Meet statistics of every quadrangle plane against the opposite class.

    D and V rows count meets with the U planes; U rows count meets with the
    V planes.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "meets_point", "meets_line", "skew", "class"])
    for x in atlas().points:
        prof = intersection_statistics(x)
        writer.writerow([prof.label, prof.points, prof.lines, prof.skew, classify(x).value])
    return buf.getvalue()


def isomorphism_json() -> str:
    at = atlas()
    ordered = {label_of(x): DOUBLE_SIX_ISOMORPHISM[label_of(x)] for x in at.points}
    return _json_text(ordered)


EXPORTERS = {
    ("atlas", "json"): atlas_json,
    ("atlas", "csv"): atlas_csv,
    ("incidence", "json"): incidence_json,
    ("incidence", "dot"): incidence_dot,
    ("quadric", "json"): quadrics_json,
    ("planes", "json"): planes_json,
    ("planes", "csv"): planes_csv,
    ("isomorphism", "json"): isomorphism_json,
}


class UnsupportedFormatError(ValueError):
    """The selector/format combination has no exporter."""


def render_export(what: str, fmt: str) -> str:
    try:
        exporter = EXPORTERS[(what, fmt)]
    except KeyError:
        supported = sorted(f for w, f in EXPORTERS if w == what)
        if not supported:
            raise UnsupportedFormatError(f"unknown export selector {what!r}") from None
        raise UnsupportedFormatError(
            f"export {what!r} supports formats {supported}, not {fmt!r}"
        ) from None
    return exporter()
