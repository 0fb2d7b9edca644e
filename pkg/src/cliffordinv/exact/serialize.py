"""Canonical JSON forms of exact values: integers and rationals as decimal strings."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .fields import QSQRT2, FieldElement
from .matrix import ExactMatrix
from .poly import Polynomial

SCHEMA_VERSION = 1


def scalar_json(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, FieldElement):
        if x.is_rational():
            return str(x.to_fraction())
        return {
            "field": "sqrt2" if x.field is QSQRT2 else f"cyclotomic{x.field.conductor}",
            "coords": [str(c) for c in x.coords()],
        }
    raise TypeError(f"not an exact scalar: {type(x).__name__}")


def polynomial_json(p, names=None):
    return {
        "nvars": p.nvars,
        "terms": [[list(e), scalar_json(c)] for e, c in p.sorted_terms()],
        "text": p.to_text(names),
    }


def matrix_json(g):
    return [[scalar_json(x) for x in row] for row in g.rows]


def to_jsonable(obj):
    """Recursively convert exact objects; plain floats and strings pass through."""
    if isinstance(obj, (bool, str, float)) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction, FieldElement)):
        return scalar_json(obj)
    if isinstance(obj, Polynomial):
        return polynomial_json(obj)
    if isinstance(obj, ExactMatrix):
        return matrix_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, bytes):
        return hashlib.sha256(obj).hexdigest()
    if hasattr(obj, "tolist"):
        return to_jsonable(obj.tolist())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_plain(obj):
    """Like ``to_jsonable`` but with scalars as readable strings, for text output."""
    if isinstance(obj, (bool, str, float)) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction, FieldElement)):
        return str(obj)
    if isinstance(obj, Polynomial):
        return obj.to_text()
    if isinstance(obj, ExactMatrix):
        return [[str(x) for x in row] for row in obj.rows]
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    return to_jsonable(obj)


def dumps(payload):
    """Deterministic JSON text with the schema version attached."""
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(to_jsonable(payload))
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
