"""JSON scheme documents.

A document looks like::

    {
      "ambient_dim": 2,
      "components": [
        {"role": "L0", "multiplicity": 2, "cutting_forms": [["0", "1", "0"], ["0", "0", "1"]]},
        {"role": "H0", "multiplicity": 0, "cutting_forms": [["1", "0", "0"]]},
        {"role": "inner", "multiplicity": 2, "cutting_forms": [["1", "0", "0"], ["0", "0", "1"]]}
      ],
      "metadata": {"name": "two double points"}
    }

Roles are ``L0``, ``H0``, ``inner``, ``extra_hyperplane`` (an inclic) or
``plain`` (a bare fat scheme); a document uses one family or the other.
Entries are rational strings such as ``"2/3"`` or ``"-1"``; JSON integers
are accepted, floats are not. :func:`emit_scheme` writes the canonical form
and ``parse_scheme(emit_scheme(x)) == x``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .scheme_core import (FatComponent, FatSchemeSpec, InclicScheme, LinearSubspace,
                          SchemeError, validate_inclic)

ROLES = ("inner", "L0", "H0", "extra_hyperplane", "plain")


class DocumentError(ValueError):
    """Malformed scheme document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line, self.column = line, column


class InclicValidationError(DocumentError):
    """The document describes an inclic that violates C1-C4."""

    def __init__(self, report):
        self.report = report
        super().__init__("inclic validation failed: " + "; ".join(map(str, report.violations)))


def parse_rational(value, where: str = "") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{where}: expected a rational string or integer, got {value!r}")
    try:
        return Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: bad rational {value!r} ({exc})") from None


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scheme(text: str) -> "FatSchemeSpec | InclicScheme":
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}", exc.lineno, exc.colno) from None
    return scheme_from_dict(doc)


def scheme_from_dict(doc) -> "FatSchemeSpec | InclicScheme":
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = doc.get("ambient_dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"ambient_dim must be a positive integer, got {n!r}")
    raw = doc.get("components")
    if not isinstance(raw, list):
        raise DocumentError("components must be a list")
    parsed = []
    for idx, c in enumerate(raw):
        where = f"components[{idx}]"
        if not isinstance(c, dict):
            raise DocumentError(f"{where}: expected an object")
        role = c.get("role", "plain")
        if role not in ROLES:
            raise DocumentError(f"{where}: unknown role {role!r}")
        mult = c.get("multiplicity", 1)
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
            raise DocumentError(f"{where}: multiplicity must be a non-negative integer")
        forms = c.get("cutting_forms")
        if not isinstance(forms, list) or not all(isinstance(r, list) for r in forms):
            raise DocumentError(f"{where}: cutting_forms must be a list of rows")
        rows = [[parse_rational(x, f"{where}.cutting_forms[{i}][{j}]") for j, x in enumerate(r)]
                for i, r in enumerate(forms)]
        try:
            sub = LinearSubspace(n, rows)
        except SchemeError as exc:
            raise DocumentError(f"{where}: {exc}") from None
        parsed.append((role, FatComponent(sub, mult)))

    roles = {r for r, _ in parsed}
    if roles <= {"plain"}:
        try:
            return FatSchemeSpec(n, [c for _, c in parsed])
        except SchemeError as exc:
            raise DocumentError(str(exc)) from None
    if "plain" in roles:
        raise DocumentError("cannot mix 'plain' components with inclic roles")
    L0 = [c for r, c in parsed if r == "L0"]
    H0 = [c for r, c in parsed if r == "H0"]
    if len(L0) != 1 or len(H0) != 1:
        raise DocumentError("an inclic needs exactly one L0 and one H0 component")
    X = InclicScheme(n, L0[0], H0[0].subspace,
                     [c for r, c in parsed if r == "inner"],
                     [c for r, c in parsed if r == "extra_hyperplane"])
    report = validate_inclic(X)
    if not report.ok:
        raise InclicValidationError(report)
    return X


def _component_dict(role: str, c: FatComponent) -> dict:
    return {"role": role, "multiplicity": c.multiplicity,
            "cutting_forms": [[format_rational(x) for x in row]
                              for row in c.subspace.cutting_forms]}


def scheme_to_dict(scheme, metadata: dict | None = None) -> dict:
    if isinstance(scheme, InclicScheme):
        comps = [_component_dict("L0", scheme.L0),
                 _component_dict("H0", FatComponent(scheme.H0, 0))]
        comps += [_component_dict("inner", c) for c in scheme.inner]
        comps += [_component_dict("extra_hyperplane", c) for c in scheme.hyperplanes]
    else:
        comps = [_component_dict("plain", c) for c in scheme.components]
    doc = {"ambient_dim": scheme.ambient_dim, "components": comps}
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def emit_scheme(scheme, metadata: dict | None = None) -> str:
    return json.dumps(scheme_to_dict(scheme, metadata), indent=2) + "\n"
