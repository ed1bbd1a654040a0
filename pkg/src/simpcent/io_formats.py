"""Text formats: complex files, report files, matrix dumps.

A complex file holds one simplex per line, labels split on whitespace or
commas, with ``#`` comments and blank lines ignored.  Emission writes the
facets only, sorted, so parse(emit(c)) == c.  Reports go out as JSON or CSV
with a fixed row order (dimension, then lexicographic), which makes repeated
runs byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .core import SimplicialComplex, build_complex
from .errors import ArgumentError, ParseError

FORMATS = ("json", "csv")


# ---------------------------------------------------------------------------
# complex files
# ---------------------------------------------------------------------------


def parse_complex(text: str) -> SimplicialComplex:
    """Build a complex from the one-simplex-per-line format."""
    generators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        labels = line.replace(",", " ").split()
        if len(set(labels)) != len(labels):
            raise ParseError(f"duplicate vertex in {line!r}", line=lineno)
        generators.append(tuple(labels))
    try:
        return build_complex(generators)
    except ArgumentError as exc:
        raise ParseError(str(exc)) from exc


def load_complex(path: str) -> SimplicialComplex:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_complex(text)


def emit_complex(c: SimplicialComplex, metadata: dict | None = None) -> str:
    lines = []
    if metadata:
        for key, value in metadata.items():
            lines.append(f"# {key}: {value}")
    for facet in sorted(c.facet_labels()):
        lines.append(" ".join(facet))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# value formatting
# ---------------------------------------------------------------------------


def _value_cell(v):
    """(json value, exact string) for one report value."""
    if isinstance(v, Fraction):
        return float(v), str(v)
    if isinstance(v, bool):
        return int(v), str(int(v))
    if isinstance(v, int):
        return v, str(v)
    if isinstance(v, float):
        if math.isinf(v):
            return "inf", None
        return v, None
    raise ArgumentError(f"cannot serialize value {v!r}")


def _json_safe(obj):
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def _row_key(c, sigma):
    if sigma == ():
        return (-1, ())
    return (len(sigma), tuple(c.vertices.labels[i] for i in sigma))


def _simplex_string(c, sigma):
    if sigma == ():
        return "*"
    return c.label(sigma)


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=True, separators=(", ", ": ")) + "\n"


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def emit_report(report, c: SimplicialComplex, fmt: str = "json") -> str:
    """Serialize a report object carrying measure/params/values/flags."""
    if fmt not in FORMATS:
        raise ArgumentError(f"format must be one of {FORMATS}, got {fmt!r}")
    rows = []
    for sigma in sorted(report.values, key=lambda s: _row_key(c, s)):
        value, exact = _value_cell(report.values[sigma])
        flags = list(getattr(report, "flags", {}).get(sigma, ()))
        rows.append(
            {
                "simplex": _simplex_string(c, sigma),
                "value": value,
                "exact": exact,
                "flags": flags,
            }
        )
    if fmt == "json":
        payload = {
            "measure": report.measure,
            "params": _json_safe(report.params),
            "complex_digest": c.digest(),
            "values": rows,
        }
        metadata = getattr(report, "metadata", None)
        if metadata:
            payload["metadata"] = _json_safe(metadata)
        return _dumps(payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["simplex", "value", "exact", "flags"])
    for row in rows:
        writer.writerow(
            [
                row["simplex"],
                row["value"],
                row["exact"] if row["exact"] is not None else "",
                "|".join(row["flags"]),
            ]
        )
    return buf.getvalue()


def emit_matrix(name, params, matrix, row_labels, c, fmt: str = "json") -> str:
    """Serialize an integer matrix with simplex row labels."""
    if fmt not in FORMATS:
        raise ArgumentError(f"format must be one of {FORMATS}, got {fmt!r}")
    dense = matrix.toarray() if hasattr(matrix, "toarray") else matrix
    entries = [[int(x) for x in row] for row in dense]
    if fmt == "json":
        return _dumps(
            {
                "matrix": name,
                "params": _json_safe(params),
                "complex_digest": c.digest(),
                "shape": list(dense.shape),
                "labels": list(row_labels),
                "entries": entries,
            }
        )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["simplex"] + list(row_labels))
    for lab, row in zip(row_labels, entries):
        writer.writerow([lab] + row)
    return buf.getvalue()


def emit_info(c: SimplicialComplex, fmt: str = "json") -> str:
    info = {
        "vertices": len(c.vertices),
        "dim": c.dim,
        "f_vector": list(c.f_vector),
        "n_simplices": c.n_simplices,
        "facets": [" ".join(f) for f in sorted(c.facet_labels())],
        "digest": c.digest(),
    }
    if fmt == "json":
        return _dumps(info)
    if fmt != "csv":
        raise ArgumentError(f"format must be one of {FORMATS}, got {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in info.items():
        if isinstance(value, list):
            value = "|".join(str(v) for v in value)
        writer.writerow([key, value])
    return buf.getvalue()


def emit_components(part, c: SimplicialComplex, fmt: str = "json") -> str:
    classes = [[c.label(s) for s in cl] for cl in part.classes]
    if fmt == "json":
        return _dumps(
            {
                "p": part.p,
                "semantics": part.semantics,
                "complex_digest": c.digest(),
                "n_classes": len(classes),
                "q_star": part.q_star,
                "classes": classes,
            }
        )
    if fmt != "csv":
        raise ArgumentError(f"format must be one of {FORMATS}, got {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class", "simplex"])
    for idx, cl in enumerate(classes):
        for lab in cl:
            writer.writerow([idx, lab])
    return buf.getvalue()


def emit_oracle(diff, c: SimplicialComplex, fmt: str = "json") -> str:
    summary = {
        "ok": diff.ok,
        "complex_digest": c.digest(),
        "checked": _json_safe(diff.checked),
        "mismatches": {k: len(v) for k, v in diff.mismatches.items()},
        "diagnostics": {
            k: [_json_safe(e) for e in v] for k, v in diff.diagnostics.items()
        },
    }
    if fmt == "json":
        return _dumps(summary)
    if fmt != "csv":
        raise ArgumentError(f"format must be one of {FORMATS}, got {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["section", "key", "value"])
    writer.writerow(["result", "ok", int(diff.ok)])
    for key, n in sorted(diff.checked.items()):
        writer.writerow(["checked", key, n])
    for key, v in sorted(diff.mismatches.items()):
        writer.writerow(["mismatch", key, len(v)])
    for key, v in sorted(diff.diagnostics.items()):
        writer.writerow(["diagnostic", key, len(v)])
    return buf.getvalue()
