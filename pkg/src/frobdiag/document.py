"""Reading and writing algebra description files.

A document is JSON with a fixed shape: a named basis with degrees, unit
and top indices, and an explicit list of nonzero structure constants.
A pair document adds a ``module`` section whose ``action`` tensor is the
module action; the ring's own ``lambda`` list then plays the role of the
ring tensor.

Rationals travel as strings ("3", "-1/2"), never floats.  Sparse entries
are listed with explicit indices and are NOT completed symmetrically:
both (i,j,k) and (j,i,k) must be present.  A file is a faithful dump of
the tensor that was validated, nothing more; silent completion is how
sign errors hide.

Emission is canonical (fixed key order, entries sorted by index, reduced
rationals), so emit -> parse -> emit is the identity on bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .boundary import ModulePair
from .ring import GradedBasis, RingStructure

Payload = RingStructure | ModulePair

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


class DocumentError(ValueError):
    """Malformed document, with the JSON path of the offending field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _parse_rational(raw: Any, location: str) -> Fraction:
    if not isinstance(raw, str) or not _RATIONAL_RE.match(raw):
        raise DocumentError(
            f"expected a rational string like '2' or '-3/4', got {raw!r}",
            location)
    try:
        return Fraction(raw)
    except ZeroDivisionError:
        raise DocumentError("zero denominator", location) from None


def _expect(mapping: Any, key: str, kind: type, location: str) -> Any:
    if not isinstance(mapping, dict):
        raise DocumentError("expected an object", location)
    if key not in mapping:
        raise DocumentError(f"missing field {key!r}", location)
    value = mapping[key]
    if kind is int and isinstance(value, bool):
        raise DocumentError(f"field {key!r} must be an integer", location)
    if not isinstance(value, kind):
        raise DocumentError(
            f"field {key!r} must be {kind.__name__}", location)
    return value


def _reject_unknown(mapping: dict, allowed: set[str], location: str) -> None:
    unknown = set(mapping) - allowed
    if unknown:
        raise DocumentError(
            f"unknown field(s): {', '.join(sorted(unknown))}", location)


def _parse_basis(raw: Any, location: str) -> tuple[tuple[str, ...],
                                                   tuple[int, ...]]:
    if not isinstance(raw, list) or not raw:
        raise DocumentError("expected a nonempty list", location)
    labels, degrees = [], []
    for idx, item in enumerate(raw):
        here = f"{location}[{idx}]"
        label = _expect(item, "label", str, here)
        degree = _expect(item, "degree", int, here)
        _reject_unknown(item, {"label", "degree"}, here)
        if degree < 0:
            raise DocumentError("degree must be nonnegative", here)
        labels.append(label)
        degrees.append(degree)
    return tuple(labels), tuple(degrees)


def _parse_tensor(raw: Any, location: str) -> dict[tuple[int, int, int],
                                                   Fraction]:
    if not isinstance(raw, list):
        raise DocumentError("expected a list of entries", location)
    tensor: dict[tuple[int, int, int], Fraction] = {}
    for idx, item in enumerate(raw):
        here = f"{location}[{idx}]"
        i = _expect(item, "i", int, here)
        j = _expect(item, "j", int, here)
        k = _expect(item, "k", int, here)
        _reject_unknown(item, {"i", "j", "k", "value"}, here)
        value = _parse_rational(item.get("value"), f"{here}.value")
        if (i, j, k) in tensor:
            raise DocumentError(f"duplicate entry for ({i}, {j}, {k})", here)
        tensor[(i, j, k)] = value
    return tensor


def _optional_index(mapping: dict, key: str, location: str) -> int | None:
    value = mapping.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field {key!r} must be an integer or null",
                            location)
    return value


def parse_document(text: str) -> tuple[str, Payload]:
    """Parse a document into its name and ring or module pair.

    Raises :class:`DocumentError` for anything structurally wrong: bad
    JSON, missing or mistyped fields, duplicate tensor keys, indices that
    do not address the declared basis.  Axiom violations are *not*
    checked here; run the validators on the returned payload.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}", "") from None
    if not isinstance(raw, dict):
        raise DocumentError("top level must be an object", "")
    _reject_unknown(raw, {"name", "dimension", "basis", "unit", "top",
                          "lambda", "module"}, "")
    name = _expect(raw, "name", str, "")
    dimension = _expect(raw, "dimension", int, "")
    labels, degrees = _parse_basis(_expect(raw, "basis", list, ""), "basis")
    unit = _expect(raw, "unit", int, "")
    top = _optional_index(raw, "top", "")
    tensor = _parse_tensor(_expect(raw, "lambda", list, ""), "lambda")
    # In a pair document, "dimension" is the module's formal dimension;
    # the ring's own formal dimension is the degree of its top class when
    # it has one (e.g. the absolute ring of a cylinder).
    ring_dimension = dimension
    if "module" in raw and top is not None:
        if not 0 <= top < len(degrees):
            raise DocumentError("top index out of range", "top")
        ring_dimension = degrees[top]
    try:
        basis = GradedBasis(labels=labels, degrees=degrees,
                            formal_dimension=ring_dimension, unit_index=unit,
                            top_index=top)
        ring = RingStructure(basis, tensor)
    except ValueError as exc:
        raise DocumentError(str(exc), "basis") from None

    if "module" not in raw:
        return name, ring

    mod = raw["module"]
    if not isinstance(mod, dict):
        raise DocumentError("expected an object", "module")
    _reject_unknown(mod, {"basis", "top", "action"}, "module")
    mod_labels, mod_degrees = _parse_basis(
        _expect(mod, "basis", list, "module"), "module.basis")
    mod_top = _optional_index(mod, "top", "module")
    action = _parse_tensor(_expect(mod, "action", list, "module"),
                           "module.action")
    try:
        module_basis = GradedBasis(labels=mod_labels, degrees=mod_degrees,
                                   formal_dimension=dimension,
                                   unit_index=None, top_index=mod_top)
        pair = ModulePair(ring, module_basis, action)
    except ValueError as exc:
        raise DocumentError(str(exc), "module") from None
    return name, pair


def _basis_json(basis: GradedBasis) -> list[dict]:
    return [{"label": lbl, "degree": deg}
            for lbl, deg in zip(basis.labels, basis.degrees)]


def _tensor_json(tensor: dict) -> list[dict]:
    return [{"i": i, "j": j, "k": k, "value": str(v)}
            for (i, j, k), v in sorted(tensor.items())]


def document_dict(name: str, payload: Payload) -> dict:
    """Canonical JSON-ready dictionary for a ring or module pair."""
    if isinstance(payload, ModulePair):
        ring = payload.ring
        doc = {
            "name": name,
            "dimension": payload.module_basis.formal_dimension,
            "basis": _basis_json(ring.basis),
            "unit": ring.basis.unit_index,
            "top": ring.basis.top_index,
            "lambda": _tensor_json(ring.tensor),
            "module": {
                "basis": _basis_json(payload.module_basis),
                "top": payload.module_basis.top_index,
                "action": _tensor_json(payload.action),
            },
        }
    else:
        doc = {
            "name": name,
            "dimension": payload.basis.formal_dimension,
            "basis": _basis_json(payload.basis),
            "unit": payload.basis.unit_index,
            "top": payload.basis.top_index,
            "lambda": _tensor_json(payload.tensor),
        }
    return doc


def emit_document(name: str, payload: Payload) -> str:
    """Canonical text form; a fixed point of emit -> parse -> emit."""
    return json.dumps(document_dict(name, payload), indent=2) + "\n"
