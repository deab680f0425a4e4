"""JSON interchange format for weak Hopf algebras given by structure constants.

Documents are sparse: multiplication and comultiplication are triple lists
[i, j, k, coeff], unit/counit are pair lists [i, coeff], the optional
antipode is a matrix-entry list [row, col, coeff].  Scalars are strings in
the exact-scalar grammar ("p", "p/q", polynomials in z for cyclotomic
fields), never floats.  Emission is canonical (entries sorted, keys sorted),
so parse -> emit -> parse is the identity and emitted bytes are reproducible.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fields import make_field
from .linalg import Matrix
from .wha import WeakHopfAlgebra

__all__ = ["document_to_wha", "wha_to_document", "dumps", "loads"]

SCHEMA_VERSION = "1"


def wha_to_document(h, name=None, metadata=None):
    fmt = h.field.format
    mult = []
    for (i, j), cell in sorted(h.mult.items()):
        for k, c in sorted(cell.items()):
            mult.append([i, j, k, fmt(c)])
    comult = []
    for i in range(h.dim):
        for (j, k), c in sorted(h.comult[i].items()):
            comult.append([i, j, k, fmt(c)])
    unit = [[i, fmt(c)] for i, c in enumerate(h.unit) if c]
    counit = [[i, fmt(c)] for i, c in enumerate(h.counit) if c]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": h.field.spec(),
        "dim": h.dim,
        "basis": list(h.labels),
        "mult": mult,
        "comult": comult,
        "unit": unit,
        "counit": counit,
        "metadata": dict(metadata or {}, name=name or h.name),
    }
    if h.antipode is not None:
        doc["antipode"] = [
            [i, j, fmt(h.antipode[i, j])]
            for i in range(h.dim)
            for j in range(h.dim)
            if h.antipode[i, j]
        ]
    return doc


def _field_from_doc(doc):
    spec = doc.get("field")
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError("missing or malformed field spec")
    try:
        return make_field(spec["kind"], spec.get("order"))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def document_to_wha(doc):
    if not isinstance(doc, dict):
        raise ParseError("document is not a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {doc.get('schema_version')!r}")
    field = _field_from_doc(doc)
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("dim must be a positive integer")
    basis = doc.get("basis") or [f"e{i}" for i in range(dim)]
    if len(basis) != dim:
        raise ParseError("basis labels do not match dim")

    def scalar(text):
        if not isinstance(text, str):
            raise ParseError(f"scalar {text!r} must be a string")
        return field.parse(text)

    def index(i):
        if not isinstance(i, int) or not 0 <= i < dim:
            raise ParseError(f"index {i!r} out of range")
        return i

    mult = {}
    for entry in doc.get("mult", []):
        if len(entry) != 4:
            raise ParseError(f"mult entry {entry!r} must be [i, j, k, coeff]")
        i, j, k, c = entry
        mult.setdefault((index(i), index(j)), {})[index(k)] = scalar(c)
    comult = [dict() for _ in range(dim)]
    for entry in doc.get("comult", []):
        if len(entry) != 4:
            raise ParseError(f"comult entry {entry!r} must be [i, j, k, coeff]")
        i, j, k, c = entry
        comult[index(i)][(index(j), index(k))] = scalar(c)
    unit = [field.zero()] * dim
    for entry in doc.get("unit", []):
        if len(entry) != 2:
            raise ParseError(f"unit entry {entry!r} must be [i, coeff]")
        unit[index(entry[0])] = scalar(entry[1])
    counit = [field.zero()] * dim
    for entry in doc.get("counit", []):
        if len(entry) != 2:
            raise ParseError(f"counit entry {entry!r} must be [i, coeff]")
        counit[index(entry[0])] = scalar(entry[1])
    antipode = None
    if "antipode" in doc:
        rows = [[field.zero()] * dim for _ in range(dim)]
        for entry in doc["antipode"]:
            if len(entry) != 3:
                raise ParseError(f"antipode entry {entry!r} must be [i, j, coeff]")
            i, j, c = entry
            rows[index(i)][index(j)] = scalar(c)
        antipode = Matrix(field, rows)
    name = (doc.get("metadata") or {}).get("name", "H")
    return WeakHopfAlgebra(
        field, basis, mult, unit, comult, counit, antipode=antipode, name=name
    )


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
