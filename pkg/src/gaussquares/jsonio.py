"""JSON wire formats.

Gaussian integers encode as two-element arrays of decimal strings
[re, im]; plain JSON integers are accepted wherever a real value is
meant. Rational parts use "p/q" strings, radical values an object with
"a", "b" and "radicand". Triples and triplets are records with a "kind"
tag and a three-element "components" array. Grids carry a 3x3 "cells"
array (magic or gap arrangement on input, always magic on output) and
an optional same-shape "roots" array.
"""

from __future__ import annotations

from fractions import Fraction

from .correspond import ArithTriplet, LegTriple, ZeroSumTriple
from .exact import GaussInt, GaussRat, RadicalValue, Scalar
from .grids import MAGIC_TO_LATTICE, GapBasis, MagicSquare, NearMissReport


class FormatError(ValueError):
    """Malformed JSON payload; the message carries the offending path."""


def scalar_to_json(x: Scalar):
    if isinstance(x, GaussInt):
        return [str(x.re), str(x.im)]
    if isinstance(x, GaussRat):
        return [str(x.re), str(x.im)]
    if isinstance(x, RadicalValue):
        return {
            "a": scalar_to_json(x.a),
            "b": scalar_to_json(x.b),
            "radicand": str(x.n),
        }
    raise TypeError(f"not an exact scalar: {type(x).__name__}")


def complex_to_json(z: complex):
    return [z.real, z.imag]


def parse_scalar(obj, path: str = "value") -> Scalar:
    if isinstance(obj, bool):
        raise FormatError(f"{path}: expected a number, got a boolean")
    if isinstance(obj, int):
        return GaussInt(obj)
    if isinstance(obj, str):
        re = _parse_rational(obj, path)
        if re.denominator == 1:
            return GaussInt(int(re))
        return GaussRat(re)
    if isinstance(obj, list):
        if len(obj) != 2:
            raise FormatError(f"{path}: component array must have two elements")
        re = _parse_part(obj[0], f"{path}[0]")
        im = _parse_part(obj[1], f"{path}[1]")
        if re.denominator == 1 and im.denominator == 1:
            return GaussInt(int(re), int(im))
        return GaussRat(re, im)
    if isinstance(obj, dict):
        try:
            n = int(obj["radicand"])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"{path}.radicand: {exc}") from exc
        a = _as_rat(parse_scalar(obj.get("a", 0), f"{path}.a"))
        b = _as_rat(parse_scalar(obj.get("b", 0), f"{path}.b"))
        return RadicalValue(a, b, n)
    raise FormatError(f"{path}: cannot parse {type(obj).__name__} as a scalar")


def _as_rat(x: Scalar) -> GaussRat:
    if isinstance(x, GaussInt):
        return GaussRat.from_gauss_int(x)
    if isinstance(x, GaussRat):
        return x
    raise FormatError("radical coefficients must be rational")


def _parse_part(obj, path: str) -> Fraction:
    if isinstance(obj, bool):
        raise FormatError(f"{path}: expected a number, got a boolean")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return _parse_rational(obj, path)
    raise FormatError(f"{path}: expected an integer or decimal string")


def _parse_rational(s: str, path: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{path}: not a rational number: {s!r}") from exc


# -- triples and triplets ------------------------------------------------------


def leg_triple_to_json(t: LegTriple) -> dict:
    return {"kind": "legs", "components": [scalar_to_json(c) for c in (t.A, t.B, t.C)]}


def zero_sum_to_json(z: ZeroSumTriple) -> dict:
    return {"kind": "zero_sum", "components": [scalar_to_json(c) for c in z.components]}


def triplet_to_json(t: ArithTriplet, *, derived: bool = False) -> dict:
    out = {"kind": "triplet", "components": [scalar_to_json(r) for r in t.roots]}
    if derived:
        out["values"] = [scalar_to_json(v) for v in t.values]
        out["defect"] = scalar_to_json(t.defect)
        out["integral"] = t.integral
    return out


def float_triplet_to_json(t) -> dict:
    return {
        "kind": "triplet_float",
        "components": [complex_to_json(r) for r in t.roots],
        "values": [complex_to_json(v) for v in t.values],
        "defect": complex_to_json(t.defect),
    }


def parse_triple(obj, path: str = "triple"):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError(f"{path}: expected an object with a 'kind' tag")
    comps = obj.get("components")
    if not isinstance(comps, list) or len(comps) != 3:
        raise FormatError(f"{path}.components: expected three components")
    kind = obj["kind"]
    parsed = [parse_scalar(c, f"{path}.components[{i}]") for i, c in enumerate(comps)]
    if kind == "legs":
        gs = [_req_gauss(p, path) for p in parsed]
        return LegTriple(*gs)
    if kind == "zero_sum":
        gs = [_req_gauss(p, path) for p in parsed]
        return ZeroSumTriple.of(*gs)
    if kind == "triplet":
        return ArithTriplet(*parsed)
    raise FormatError(f"{path}.kind: unknown kind {kind!r}")


def _req_gauss(x: Scalar, path: str) -> GaussInt:
    if isinstance(x, GaussInt):
        return x
    raise FormatError(f"{path}: component must be a Gaussian integer")


# -- grids ----------------------------------------------------------------------


def grid_to_json(sq: MagicSquare) -> dict:
    out = {
        "arrangement": "magic",
        "cells": [[scalar_to_json(sq.value(r, c)) for c in range(3)] for r in range(3)],
    }
    if sq.has_roots():
        out["roots"] = [
            [None if sq.root(r, c) is None else scalar_to_json(sq.root(r, c)) for c in range(3)]
            for r in range(3)
        ]
    return out


def parse_grid(obj, path: str = "grid") -> MagicSquare:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected an object")
    arrangement = obj.get("arrangement", "magic")
    cells = obj.get("cells")
    if not _is_3x3(cells):
        raise FormatError(f"{path}.cells: expected a 3x3 array")
    values = [
        [_cell_value(cells[r][c], f"{path}.cells[{r}][{c}]") for c in range(3)]
        for r in range(3)
    ]
    roots_json = obj.get("roots")
    roots = None
    if roots_json is not None:
        if not _is_3x3(roots_json):
            raise FormatError(f"{path}.roots: expected a 3x3 array")
        roots = [
            [
                None
                if roots_json[r][c] is None
                else parse_scalar(roots_json[r][c], f"{path}.roots[{r}][{c}]")
                for c in range(3)
            ]
            for r in range(3)
        ]
    if arrangement == "magic":
        return MagicSquare(values, roots if roots is not None else "auto")
    if arrangement == "gap":
        return _grid_from_gap_cells(values, roots, path)
    raise FormatError(f"{path}.arrangement: unknown arrangement {arrangement!r}")


def _grid_from_gap_cells(values, roots, path: str) -> MagicSquare:
    """Cells laid out by lattice coordinates: cells[r][c] = value at (r-1, c-1)."""
    m = values[1][1]
    u = values[2][1] - m
    v = values[1][2] - m
    basis = GapBasis(m, u, v)
    for j in (-1, 0, 1):
        for k in (-1, 0, 1):
            if basis.value_at(j, k) != values[j + 1][k + 1]:
                raise FormatError(
                    f"{path}.cells[{j + 1}][{k + 1}]: gap arrangement is not a lattice "
                    f"(expected {basis.value_at(j, k)})"
                )
    magic_values = [[None] * 3 for _ in range(3)]
    magic_roots = [[None] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            j, k = MAGIC_TO_LATTICE[r][c]
            magic_values[r][c] = values[j + 1][k + 1]
            if roots is not None:
                magic_roots[r][c] = roots[j + 1][k + 1]
    return MagicSquare(magic_values, magic_roots if roots is not None else "auto")


def _cell_value(obj, path: str) -> GaussInt:
    v = parse_scalar(obj, path)
    if not isinstance(v, GaussInt):
        raise FormatError(f"{path}: cell values must be Gaussian integers")
    return v


def _is_3x3(obj) -> bool:
    return (
        isinstance(obj, list)
        and len(obj) == 3
        and all(isinstance(row, list) and len(row) == 3 for row in obj)
    )


# -- reports ---------------------------------------------------------------------


def report_to_json(r: NearMissReport) -> dict:
    return {
        "line_sums": [scalar_to_json(s) for s in r.line_sums],
        "magic_constant": None if r.magic_constant is None else scalar_to_json(r.magic_constant),
        "thrice_center_ok": r.thrice_center_ok,
        "square_count": r.square_count,
        "distinct_count": r.distinct_count,
        "central_defects": [scalar_to_json(d) for d in r.central_defects],
        "is_gap": r.is_gap,
    }


def _any_triplet_to_json(t) -> dict:
    if isinstance(t, ArithTriplet):
        return triplet_to_json(t, derived=True)
    return float_triplet_to_json(t)


def family_to_json(fam) -> dict:
    return {
        "line_set": fam.line_set,
        "triplet_count": fam.triplet_count,
        "lines": [
            {
                "line": _any_triplet_to_json(e.line),
                "older": _any_triplet_to_json(e.older),
                "younger": _any_triplet_to_json(e.younger),
                "integral": e.integral,
                "float_backed": e.float_backed,
                "line_defect": scalar_to_json(e.line_defect),
                "sibling_defect": scalar_to_json(e.sibling_defect),
            }
            for e in fam.entries
        ],
    }


def pseudo_to_json(p) -> dict:
    exact = not p.float_backed
    return {
        "direction": p.direction,
        "assembly": p.assembly,
        "segments": [_any_triplet_to_json(s) for s in p.segments],
        "midpoints": [
            scalar_to_json(m) if exact else complex_to_json(m) for m in p.midpoints
        ],
        "error": scalar_to_json(p.error) if exact else None,
        "error_float": complex_to_json(complex(p.error)),
        "identity_residual": scalar_to_json(p.identity_residual) if exact else None,
        "identity_residual_float": complex_to_json(complex(p.identity_residual)),
        "relative_error": p.relative_error,
        "near_miss": p.near_miss,
        "float_backed": p.float_backed,
    }


def candidate_to_json(c) -> dict:
    return {
        "basis": {
            "m": scalar_to_json(c.basis.m),
            "u": scalar_to_json(c.basis.u),
            "v": scalar_to_json(c.basis.v),
        },
        "square_count": c.square_count,
        "square_positions": sorted(list(p) for p in c.square_positions),
        "distinct": c.distinct,
        "provenance": [triplet_to_json(t) for t in c.provenance],
    }


def shift_series_to_json(points) -> list[dict]:
    return [
        {
            "shift": p.shift,
            "abs_error": p.abs_error,
            "rel_error": p.rel_error,
            "flagged": p.flagged,
        }
        for p in points
    ]
