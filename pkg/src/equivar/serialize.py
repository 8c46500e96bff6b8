"""JSON forms for every value the CLI reads or writes.

Rationals travel as decimal-free strings ("3", "-1/2"); floats are rejected
on input so no coefficient is ever corrupted.  Terms are listed in
descending graded-lex order and documents are dumped with sorted keys, so
identical inputs always produce byte-identical files.

Phase polynomials use the same polynomial form with nvars = 2n; the first n
exponents belong to the x block and the last n to the dual block.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .actions import THETA, PolyVectorField, is_invariant
from .equivariants import EquivariantGens
from .errors import NotInvariant, ParseError
from .groups import DEFAULT_CAP, MatGroup, close_group
from .invariants import InvariantGens
from .linalg import RatMatrix
from .molien import MolienSeries
from .poly import MultiPoly
from .reduction import ReducedSystem

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def frac_to_str(c: Fraction) -> str:
    return str(c)


def frac_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RAT_RE.match(value.strip()):
            raise ParseError(f"not a decimal-free rational string: {value!r}")
        return Fraction(value)
    raise ParseError(f"rationals must be integers or strings, got {type(value).__name__}")


def _expect(doc, key, kind, where):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"{where}: key {key!r} has type {type(value).__name__}")
    return value


# -- polynomials ------------------------------------------------------------


def poly_to_doc(p: MultiPoly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [{"c": frac_to_str(c), "e": list(e)} for e, c in p.sorted_terms()],
    }


def poly_from_doc(doc) -> MultiPoly:
    nvars = _expect(doc, "nvars", int, "polynomial")
    terms = _expect(doc, "terms", list, "polynomial")
    pairs = []
    for t in terms:
        c = frac_from_json(_expect(t, "c", None, "polynomial term"))
        e = _expect(t, "e", list, "polynomial term")
        if not all(isinstance(x, int) and x >= 0 for x in e):
            raise ParseError(f"polynomial term exponents must be non-negative ints: {e!r}")
        pairs.append((tuple(e), c))
    try:
        return MultiPoly(nvars, pairs)
    except Exception as exc:
        raise ParseError(f"invalid polynomial: {exc}") from exc


# -- vector fields ----------------------------------------------------------


def field_to_doc(field: PolyVectorField) -> dict:
    return {"n": field.n, "comps": [poly_to_doc(c) for c in field.comps]}


def field_from_doc(doc) -> PolyVectorField:
    n = _expect(doc, "n", int, "vector field")
    comps = _expect(doc, "comps", list, "vector field")
    if len(comps) != n:
        raise ParseError(f"vector field: expected {n} components, got {len(comps)}")
    try:
        return PolyVectorField([poly_from_doc(c) for c in comps])
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"invalid vector field: {exc}") from exc


# -- matrices and groups ----------------------------------------------------


def matrix_to_doc(m: RatMatrix) -> list:
    return [[frac_to_str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def matrix_from_doc(doc, n: int) -> RatMatrix:
    if not isinstance(doc, list) or len(doc) != n:
        raise ParseError(f"matrix must be a list of {n} rows")
    rows = []
    for r in doc:
        if not isinstance(r, list) or len(r) != n:
            raise ParseError(f"matrix row must have {n} entries")
        rows.append([frac_from_json(x) for x in r])
    return RatMatrix.from_rows(rows)


def group_from_doc(doc, cap_override: int | None = None) -> MatGroup:
    n = _expect(doc, "n", int, "group")
    gens_doc = _expect(doc, "generators", list, "group")
    if not gens_doc:
        raise ParseError("group: at least one generator is required")
    cap = doc.get("cap", DEFAULT_CAP)
    if not isinstance(cap, int) or cap < 1:
        raise ParseError(f"group: cap must be a positive integer, got {cap!r}")
    if cap_override is not None:
        cap = cap_override
    gens = [matrix_from_doc(g, n) for g in gens_doc]
    return close_group(gens, cap=cap)


# -- derived objects --------------------------------------------------------


def series_doc(series: MolienSeries) -> dict:
    return {
        "numer": [frac_to_str(c) for c in series.numer],
        "denom": [frac_to_str(c) for c in series.denom],
    }


def _dimension_table(series: MolienSeries, upto: int) -> list:
    return [{"degree": d, "dim": series.coefficient(d)} for d in range(upto + 1)]


def invariant_gens_to_doc(inv: InvariantGens, series: MolienSeries, bound: int) -> dict:
    return {
        "n": inv.group.n,
        "bound": bound,
        "generators": [poly_to_doc(g) for g in inv.gens],
        "degrees": list(inv.degrees),
        "molien": series_doc(series),
        "dimensions": _dimension_table(series, bound),
    }


def invariant_gens_from_doc(doc, group: MatGroup) -> InvariantGens:
    gens_doc = _expect(doc, "generators", list, "invariant generators")
    polys = [poly_from_doc(g) for g in gens_doc]
    for p in polys:
        if p.nvars != group.n:
            raise ParseError(
                f"invariant generator has {p.nvars} variables, group acts on {group.n}"
            )
    return InvariantGens.from_polys(group, polys)


def equivariant_gens_to_doc(eg: EquivariantGens, series: MolienSeries, bound: int) -> dict:
    return {
        "n": eg.group.n,
        "bound": bound,
        "generators": [field_to_doc(v) for v in eg.vgens],
        "degrees": list(eg.degrees),
        "equivariant_molien": series_doc(series),
        "dimensions": _dimension_table(series, bound),
    }


def equivariant_gens_from_doc(doc, group: MatGroup, inv: InvariantGens) -> EquivariantGens:
    gens_doc = _expect(doc, "generators", list, "equivariant generators")
    fields = [field_from_doc(g) for g in gens_doc]
    degrees = []
    for f in fields:
        if f.n != group.n:
            raise ParseError(f"field generator lives in dimension {f.n}, group acts on {group.n}")
        if f.is_zero or not f.is_homogeneous():
            raise ParseError("field generators must be homogeneous and nonzero")
        chk = is_invariant(group, f, THETA)
        if not chk:
            raise NotInvariant("field generator is not equivariant", chk.generator_index, chk.difference)
        degrees.append(f.total_degree())
    return EquivariantGens(group, fields, degrees, inv)


def reduced_to_doc(rs: ReducedSystem) -> dict:
    return {"k": rs.k, "comps": [poly_to_doc(c) for c in rs.comps]}


def reduced_from_doc(doc) -> ReducedSystem:
    k = _expect(doc, "k", int, "reduced system")
    comps = _expect(doc, "comps", list, "reduced system")
    if len(comps) != k:
        raise ParseError(f"reduced system: expected {k} components, got {len(comps)}")
    try:
        return ReducedSystem([poly_from_doc(c) for c in comps])
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"invalid reduced system: {exc}") from exc


# -- files ------------------------------------------------------------------


def dumps(doc) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def parse_rational_vector(text: str) -> list[Fraction]:
    """Parse a comma-separated list of rationals, e.g. '1/2,-3'."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ParseError(f"bad rational vector: {text!r}")
    return [frac_from_json(p) for p in parts]
