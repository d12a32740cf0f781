"""JSON documents: matrices, spectral specs, reports and certificates."""

import json

from .errors import DimensionError, ParseError
from .matrices import FIELDS, Matrix
from .partitions import Partition
from .scalars import parse_scalar
from .spectral import SpectralDatum, EigenvalueClass, from_spectral_data


def dumps(obj):
    """Deterministic serialization: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_text(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _field(doc, override=None):
    field = override or doc.get("field")
    if field not in FIELDS:
        raise ParseError(f"field must be one of {FIELDS}, got {field!r}")
    return field


def matrix_to_json(M):
    return {"field": M.field, "n": M.nrows, "entries": [[str(x) for x in r] for r in M.rows]}


def matrix_from_json(doc, field=None):
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError("matrix document needs an 'entries' array")
    field = _field(doc, field)
    rows = doc["entries"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("'entries' must be a non-empty list of rows")
    n = doc.get("n", len(rows))
    if n != len(rows) or any(len(r) != n for r in rows):
        raise ParseError(f"'entries' is not an n x n array with n = {n}")
    return Matrix([[parse_scalar(x if isinstance(x, str) else str(x), field) for x in r]
                   for r in rows], field)


def spectral_from_json(doc, field=None):
    """JordanData for the canonical matrix described by a spectral spec."""
    field = _field(doc, field)
    items = doc.get("data")
    if not isinstance(items, list) or not items:
        raise ParseError("spectral spec needs a non-empty 'data' list")
    data = []
    for item in items:
        try:
            lam = parse_scalar(str(item["lambda"]), "C")
            part = Partition(tuple((d, t) for d, t in item["partition"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad spectral datum {item!r}: {exc}") from exc
        data.append(SpectralDatum(EigenvalueClass(lam, field), part))
    try:
        return from_spectral_data(data, field)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def spectral_to_json(jd):
    return {"field": jd.field,
            "data": [{"lambda": str(s.value), "partition": s.partition.to_json()} for s in jd.data]}


def load_input(doc, field=None):
    """(X, jd or None) from a matrix document, a spectral spec, or both.

    When both are present the spectral spec wins and the matrix is ignored.
    """
    if not isinstance(doc, dict):
        raise ParseError("input must be a JSON object")
    if "data" in doc:
        jd = spectral_from_json(doc, field)
        return jd.canonical(), jd
    if "entries" in doc:
        X = matrix_from_json(doc, field)
        if not X.is_square():
            raise DimensionError("input matrix must be square")
        return X, None
    raise ParseError("input needs 'entries' (matrix) or 'data' (spectral spec)")


def certificate_to_json(cert):
    return {"X": matrix_to_json(cert.X), "g": matrix_to_json(cert.g),
            "flags": dict(cert.flags), "transcript": list(cert.transcript)}


def certificate_from_json(doc):
    """(g, X, claimed flag names) from a certificate document."""
    if not isinstance(doc, dict) or "g" not in doc or "X" not in doc:
        raise ParseError("certificate document needs 'g' and 'X'")
    g = matrix_from_json(doc["g"])
    X = matrix_from_json(doc["X"]) if "entries" in doc["X"] else load_input(doc["X"])[0]
    flags = doc.get("flags")
    if flags is None:
        claimed = ["conjugatesToNegative"]
    elif isinstance(flags, dict):
        claimed = sorted(k for k, v in flags.items() if v)
    else:
        raise ParseError("'flags' must be an object")
    return g, X, claimed
