"""JSON encodings for elements and verification reports.

Element JSON: {"operad": label, "arity": n, "terms": [{"basis": [...],
"coeff": "..."}]} with terms sorted by basis key and coefficients rendered
by the field ("3", "-1/2", "4 mod 32003").  All dumps are deterministic:
sorted keys, fixed separators, no timestamps.
"""

import json

from .elements import Element, OperadError


def element_to_json(x):
    return {
        "operad": x.operad.label,
        "arity": x.arity,
        "terms": [
            {"basis": x.operad.basis_to_json(k), "coeff": x.operad.field.format(v)}
            for k, v in x.sorted_terms()
        ],
    }


def element_from_json(data, operad):
    if not isinstance(data, dict) or "terms" not in data:
        raise OperadError("element JSON needs an object with a 'terms' array")
    label = data.get("operad")
    if label is not None and label != operad.label:
        raise OperadError(f"element JSON is for operad {label!r}, expected {operad.label!r}")
    if "arity" not in data:
        raise OperadError("element JSON needs an 'arity' field")
    arity = int(data["arity"])
    field = operad.field
    terms = {}
    for entry in data["terms"]:
        key = operad.basis_from_json(entry["basis"])
        coeff = entry["coeff"]
        c = field.from_int(coeff) if isinstance(coeff, int) else field.parse(str(coeff))
        if key in terms:
            c = field.add(terms[key], c)
        terms[key] = c
    return Element(operad, arity, terms)


def dumps(obj):
    """Canonical deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def pairs_to_json(pairs):
    """Tensor summand list -> JSON array of {left, right} element objects."""
    return [
        {"left": element_to_json(a), "right": element_to_json(b)} for a, b in pairs
    ]
