"""JSON certificates for representations and classifications.

A thinness certificate is ``{"pthin": k, "ordering": [...], "classes": [...]}``
with an optional ``"c0"`` path. A classification wraps one:
``{"verdict": "pthin1" | "pthin2" | "ge3", "certificate": {...}}``; for
``ge3`` the inner object holds ``family``, ``params`` and ``vertices``, where
``vertices[i]`` is the host vertex playing template vertex ``i``.
"""

from __future__ import annotations

import json

from .families import FamilySpec
from .recognition import Classification
from .thinness import Representation
from .witness import Witness


class CertificateError(ValueError):
    pass


def representation_to_dict(rep: Representation, c0=None) -> dict:
    out = {"pthin": rep.k, "ordering": list(rep.ordering), "classes": list(rep.classes)}
    if c0 is not None:
        out["c0"] = list(c0)
    return out


def witness_to_dict(w: Witness) -> dict:
    return {"family": w.family.family, "params": list(w.family.params), "vertices": list(w.mapping)}


def classification_to_dict(c: Classification) -> dict:
    if c.verdict == "ge3":
        cert = witness_to_dict(c.witness)
    else:
        cert = representation_to_dict(c.representation, c.c0)
    return {"verdict": c.verdict, "certificate": cert}


def dumps(obj: dict) -> str:
    """Stable text form: sorted keys, one object per file, trailing newline."""
    return json.dumps(obj, sort_keys=True) + "\n"


def _ints(obj, key):
    value = obj.get(key)
    if not isinstance(value, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise CertificateError(f"field {key!r} must be an array of integers")
    return value


def _representation(obj: dict) -> Representation:
    ordering, classes = _ints(obj, "ordering"), _ints(obj, "classes")
    k = obj.get("pthin")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise CertificateError("field 'pthin' must be a positive integer")
    return Representation(tuple(ordering), tuple(classes), k)


def load_certificate(text: str) -> dict:
    """Parse either a bare thinness certificate or a wrapped classification.

    Returns ``{"verdict": ..., "representation": Representation | None,
    "c0": list | None, "witness": Witness | None}``.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    verdict = None
    if "verdict" in obj:
        verdict = obj["verdict"]
        if verdict not in ("pthin1", "pthin2", "ge3"):
            raise CertificateError(f"unknown verdict {verdict!r}")
        obj = obj.get("certificate")
        if not isinstance(obj, dict):
            raise CertificateError("field 'certificate' must be an object")
    if verdict == "ge3":
        params = _ints(obj, "params")
        family = obj.get("family")
        if not isinstance(family, str):
            raise CertificateError("field 'family' must be a string")
        spec = FamilySpec(family, tuple(params))
        try:
            spec.validate()
        except ValueError as exc:
            raise CertificateError(str(exc)) from None
        return {"verdict": verdict, "representation": None, "c0": None,
                "witness": Witness(spec, tuple(_ints(obj, "vertices")))}
    rep = _representation(obj)
    c0 = _ints(obj, "c0") if "c0" in obj else None
    return {"verdict": verdict, "representation": rep, "c0": c0, "witness": None}
