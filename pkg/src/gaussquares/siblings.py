"""Sibling families, pseudo-grids and the near-miss error term.

Every grid line (an arithmetic triplet, kinked or not) has two siblings
through the three-to-one correspondence, so a 3x3 grid carries 8 + 16 =
24 triplets. Older siblings of three parallel slant-grid lines line up
into a pseudo-grid whose middle column misses being a triplet by the
exact error

    E = (D*b + B*d - 2*C*c) / 2

in the letters of the six outer roots, with the closed form
2*E*(Db + Bd + 2*C*c) = -(Bb - Dd)^2 whenever the two outer columns are
arithmetic progressions. E is always computed from the midpoint values
(the definition); the closed form is a checked identity, not the
computation path. The product expansion behind the check uses
(D^2 + B^2)*(b^2 + d^2) = 4*C^2*c^2, i.e. the column relations; grouping
the letters any other way breaks the derivation.
"""

from __future__ import annotations

import cmath
import statistics
from dataclasses import dataclass

import mpmath

from .correspond import (
    ArithTriplet,
    SiblingPair,
    sibling_defect_from_values,
    siblings_of_triplet,
)
from .exact import GaussInt, MixedRadicals, Scalar, scalar_half, simplify_scalar
from .grids import GapBasis, GapRecovery, MagicSquare, derive_root, gap_recover, line_data

# pseudo-grids flagged as near-misses below this relative error; arbitrary
# but documented, and overridable per call
NEAR_MISS_THRESHOLD = 1e-2

# demo slant grid for the origin-distance study: a square lattice
# (v = -i*u) sized so the decade shifts 10^2..10^6 walk from covering the
# origin out to the far field; scanned once and frozen
DEMO_STUDY_BASIS = GapBasis(GaussInt(0), GaussInt(30000, 10000), GaussInt(10000, -30000))

# lattice positions of the letters (D, b, c, C, B, d) and of the three
# parallel segment lines, per pseudo-grid direction
_LETTER_POS = {
    "rows": ((-1, -1), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 1)),
    "cols": ((-1, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (1, 1)),
}
_SEGMENT_LINES = {
    "rows": (((-1, -1), (-1, 0), (-1, 1)), ((0, -1), (0, 0), (0, 1)), ((1, -1), (1, 0), (1, 1))),
    "cols": (((-1, -1), (0, -1), (1, -1)), ((-1, 0), (0, 0), (1, 0)), ((-1, 1), (0, 1), (1, 1))),
}


@dataclass(frozen=True)
class FloatTriplet:
    """Floating stand-in for sibling roots that exact radicals cannot host."""

    left: complex
    center: complex
    right: complex

    @property
    def roots(self) -> tuple[complex, complex, complex]:
        return (self.left, self.center, self.right)

    @property
    def values(self) -> tuple[complex, complex, complex]:
        return (self.left**2, self.center**2, self.right**2)

    @property
    def defect(self) -> complex:
        lv, cv, rv = self.values
        return lv + rv - 2 * cv


@dataclass(frozen=True)
class LineSiblings:
    """One grid line with its two siblings and exact bookkeeping.

    line_defect and sibling_defect are always exact: both have closed
    forms in the line's cell values, usable even when the roots
    themselves needed the floating backend.
    """

    line: ArithTriplet | FloatTriplet
    older: ArithTriplet | FloatTriplet
    younger: ArithTriplet | FloatTriplet
    integral: bool
    float_backed: bool
    line_defect: Scalar
    sibling_defect: Scalar


@dataclass(frozen=True)
class SiblingFamily:
    """All eight lines of a grid with their sixteen siblings."""

    line_set: str  # "gap" | "arrangement"
    entries: tuple[LineSiblings, ...]

    @property
    def triplet_count(self) -> int:
        """Originals plus siblings."""
        return 3 * len(self.entries)


def grid_siblings(sq: MagicSquare) -> SiblingFamily:
    """Siblings of all eight lines; slant-grid lines when available.

    Lines whose sibling roots would need two distinct radicands, and
    lines through cells with no exact root at all, fall back to floating
    roots and are flagged float_backed; their defects stay exact through
    the value-level closed forms.
    """
    kind, rows = line_data(sq)
    entries = []
    for values, roots in rows:
        xv, zv, yv = values
        line_defect = simplify_scalar(xv + yv - (zv + zv))
        sib_defect = sibling_defect_from_values(xv, zv, yv)
        line: ArithTriplet | FloatTriplet
        try:
            if any(r is None for r in roots):
                raise MixedRadicals("no exact root on this line")
            line = ArithTriplet(*roots)
            pair: SiblingPair = siblings_of_triplet(*roots)
            older, younger = pair.older, pair.younger
            integral = pair.integral
            float_backed = False
        except MixedRadicals:
            rf = [
                complex(r) if r is not None else cmath.sqrt(complex(v))
                for r, v in zip(roots, values)
            ]
            line = FloatTriplet(*rf)
            xf, zf, yf = rf
            s = (xf + yf) / 2
            w = (xf - yf) / 2
            older = FloatTriplet(zf + 1j * w, s, zf - 1j * w)
            younger = FloatTriplet(zf + 1j * s, w, zf - 1j * s)
            integral = False
            float_backed = True
        entries.append(
            LineSiblings(
                line=line,
                older=older,
                younger=younger,
                integral=integral,
                float_backed=float_backed,
                line_defect=line_defect,
                sibling_defect=sib_defect,
            )
        )
    return SiblingFamily(line_set=kind, entries=tuple(entries))


# -- pseudo-grids -------------------------------------------------------------


@dataclass(frozen=True)
class PseudoGrid:
    """Three parallel sibling segments with the exact error of their middle column."""

    direction: str  # "rows" | "cols"
    assembly: str  # "older" | "younger"
    segments: tuple  # three ArithTriplet | FloatTriplet
    midpoints: tuple  # three exact or complex midpoint values
    error: Scalar | complex
    identity_residual: Scalar | complex
    relative_error: float
    near_miss: bool
    float_backed: bool


def _lattice_root_lookup(sq: MagicSquare, rec: GapRecovery):
    """Root accessor keyed by lattice position, preferring the grid's own roots."""
    explicit = {}
    for r in range(3):
        for c in range(3):
            root = sq.root(r, c)
            if root is not None:
                explicit[rec.positions[r][c]] = root

    def root_at(pos):
        root = explicit.get(pos)
        if root is None:
            root = derive_root(rec.basis.value_at(*pos))
        return root

    return root_at


def pseudo_letters(sq: MagicSquare, direction: str) -> tuple[Scalar, ...]:
    """The six outer roots (D, b, c, C, B, d) for a pseudo-grid direction.

    rows: the three lattice rows, endpoints at k = -1 and k = +1;
    cols: the three lattice columns, endpoints at j = -1 and j = +1.
    Either way the letters satisfy D^2 + B^2 = 2*c^2 and
    b^2 + d^2 = 2*C^2 on a slant grid.
    """
    if direction not in _LETTER_POS:
        raise ValueError("direction must be 'rows' or 'cols'")
    rec = gap_recover(sq)
    root_at = _lattice_root_lookup(sq, rec)
    letters = []
    for pos in _LETTER_POS[direction]:
        root = root_at(pos)
        if root is None:
            raise MixedRadicals(f"no exact root at lattice {pos}")
        letters.append(root)
    return tuple(letters)


def error_term(D, b, c, C, B, d, *, assembly: str = "older"):
    """Middle-column defect of the pseudo-grid, from the midpoints.

    older assembly midpoints are the squared half-sums ((D+b)/2)^2 etc.;
    younger uses half-differences. Exact when the letters share at most
    one radicand; MixedRadicals propagates otherwise. Returns
    (E, (m1, m2, m3)).
    """
    if assembly == "older":
        m1 = scalar_half(D + b).square()
        m2 = scalar_half(c + C).square()
        m3 = scalar_half(B + d).square()
    elif assembly == "younger":
        m1 = scalar_half(D - b).square()
        m2 = scalar_half(c - C).square()
        m3 = scalar_half(B - d).square()
    else:
        raise ValueError("assembly must be 'older' or 'younger'")
    return m1 + m3 - m2 - m2, (m1, m2, m3)


def identity_residual(E, D, b, c, C, B, d, *, assembly: str = "older"):
    """2E*(Db + Bd + 2Cc) + (Bb - Dd)^2, sign flipped for the younger assembly.

    Zero exactly whenever D^2 + B^2 = 2*c^2 and b^2 + d^2 = 2*C^2 (true
    for every slant grid), independent of root sign choices.
    """
    denom = D * b + B * d + (C * c + C * c)
    cross = (B * b - D * d).square()
    twoE = E + E
    if assembly == "older":
        return twoE * denom + cross
    return twoE * denom - cross


def pseudo_grid(
    sq: MagicSquare,
    direction: str,
    *,
    assembly: str = "older",
    near_miss_threshold: float = NEAR_MISS_THRESHOLD,
) -> PseudoGrid:
    """Assemble the sibling pseudo-grid for one direction of a slant grid.

    Requires gap_recover to succeed. Exact whenever the letters and
    segment roots fit one radicand; otherwise everything is evaluated on
    the floating backend (good to about 1e-9 relative) and flagged.
    Older siblings are the reported assembly; the younger one sits
    behind the assembly flag for exploration.
    """
    if direction not in _SEGMENT_LINES:
        raise ValueError("direction must be 'rows' or 'cols'")
    if assembly not in ("older", "younger"):
        raise ValueError("assembly must be 'older' or 'younger'")
    rec = gap_recover(sq)
    root_at = _lattice_root_lookup(sq, rec)
    seg_lines = _SEGMENT_LINES[direction]
    letter_pos = _LETTER_POS[direction]

    def froot(pos):
        root = root_at(pos)
        if root is not None:
            return complex(root)
        v = rec.basis.value_at(*pos)
        return cmath.sqrt(complex(v))

    # error term and identity from the six letters, exact when they share
    # one radicand (segment roots do not enter here)
    try:
        letters = []
        for pos in letter_pos:
            root = root_at(pos)
            if root is None:
                raise MixedRadicals(f"no exact root at lattice {pos}")
            letters.append(root)
        D, b, c, C, B, d = letters
        E, midpoints = error_term(D, b, c, C, B, d, assembly=assembly)
        residual = identity_residual(E, D, b, c, C, B, d, assembly=assembly)
        float_backed = False
    except MixedRadicals:
        float_backed = True
        sign = 1 if assembly == "older" else -1
        Df, bf, cf, Cf, Bf, df = (froot(p) for p in letter_pos)
        if assembly == "older":
            m1, m2, m3 = ((Df + bf) / 2) ** 2, ((cf + Cf) / 2) ** 2, ((Bf + df) / 2) ** 2
        else:
            m1, m2, m3 = ((Df - bf) / 2) ** 2, ((cf - Cf) / 2) ** 2, ((Bf - df) / 2) ** 2
        E = m1 + m3 - 2 * m2
        midpoints = (m1, m2, m3)
        residual = 2 * E * (Df * bf + Bf * df + 2 * Cf * cf) + sign * (Bf * bf - Df * df) ** 2

    # segments fall back to floats one by one; a mixed-radicand sibling on
    # one row does not cost the error term its exactness
    segments = []
    for line in seg_lines:
        rs = [root_at(p) for p in line]
        try:
            if any(r is None for r in rs):
                raise MixedRadicals("missing exact root on a segment")
            pair = siblings_of_triplet(rs[0], rs[1], rs[2])
            segments.append(pair.older if assembly == "older" else pair.younger)
        except MixedRadicals:
            rf = [froot(p) for p in line]
            s = (rf[0] + rf[2]) / 2
            w = (rf[0] - rf[2]) / 2
            if assembly == "older":
                segments.append(FloatTriplet(rf[1] + 1j * w, s, rf[1] - 1j * w))
            else:
                segments.append(FloatTriplet(rf[1] + 1j * s, w, rf[1] - 1j * s))
    entries = [abs(complex(v)) for seg in segments for v in seg.values]

    scale = statistics.median(entries)
    rel = abs(complex(E)) / scale if scale else float("inf")
    return PseudoGrid(
        direction=direction,
        assembly=assembly,
        segments=tuple(segments),
        midpoints=tuple(midpoints),
        error=E,
        identity_residual=residual,
        relative_error=rel,
        near_miss=rel < near_miss_threshold,
        float_backed=float_backed,
    )


# -- origin-distance study ----------------------------------------------------


@dataclass(frozen=True)
class ShiftPoint:
    shift: float
    abs_error: float
    rel_error: float
    flagged: bool  # closed-form denominator vanished at this shift


def origin_shift_study(
    basis: GapBasis,
    shifts,
    *,
    direction: str = "rows",
    dps: int = 50,
) -> list[ShiftPoint]:
    """|E| against translation distance, on the floating backend.

    Each shift t translates all nine values by t; roots are principal
    square roots of the shifted values and E comes from the midpoint
    definition. High-precision floats are used because far from the
    origin E sinks below double-precision cancellation noise (the decay
    is cubic in the distance once the grid no longer covers the origin).
    Points where the closed-form denominator Db + Bd + 2Cc vanishes are
    flagged rather than fatal.
    """
    if direction not in _LETTER_POS:
        raise ValueError("direction must be 'rows' or 'cols'")
    out = []
    with mpmath.workdps(dps):
        for t in shifts:
            out.append(_study_point(basis, t, direction))
    return out


def _study_point(basis: GapBasis, t, direction: str) -> ShiftPoint:
    def root_at(j, k):
        v = basis.value_at(j, k)
        return mpmath.sqrt(mpmath.mpc(v.re + t, v.im))

    D, b, c, C, B, d = (root_at(*p) for p in _LETTER_POS[direction])
    m1 = ((D + b) / 2) ** 2
    m2 = ((c + C) / 2) ** 2
    m3 = ((B + d) / 2) ** 2
    E = m1 + m3 - 2 * m2
    denom = D * b + B * d + 2 * C * c
    entries = []
    for line in _SEGMENT_LINES[direction]:
        rs = [root_at(*p) for p in line]
        s = (rs[0] + rs[2]) / 2
        w = (rs[0] - rs[2]) / 2
        for val in ((rs[1] + 1j * w) ** 2, s**2, (rs[1] - 1j * w) ** 2):
            entries.append(abs(val))
    entries.sort()
    scale = entries[len(entries) // 2]
    rel = float(abs(E) / scale) if scale != 0 else float("inf")
    return ShiftPoint(
        shift=float(t),
        abs_error=float(abs(E)),
        rel_error=rel,
        flagged=(denom == 0),
    )
