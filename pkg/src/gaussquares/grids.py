"""3x3 magic squares and slant grids (general arithmetic progressions).

A fully magic 3x3 square is, up to a fixed cell permutation, the same
thing as the nine values m + j*u + k*v for j, k in {-1, 0, 1}: the magic
total is forced to 3*m, every sum through the center is an arithmetic
triplet, and the whole square plots as a slanted grid in the complex
plane. ``gap_recover`` inverts that permutation; ``magic_report``
diagnoses how near a near-miss comes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .correspond import ArithTriplet
from .exact import (
    GaussInt,
    RadicalValue,
    Scalar,
    gauss_sqrt,
    normalize_sign,
)


class NotAGap(ValueError):
    """The cells do not form a 3x3 general arithmetic progression."""


class InvalidGrid(ValueError):
    """Malformed cells or a root that does not square to its value."""


Pos = tuple[int, int]

# magic-arrangement coordinates of the four pairs through the center,
# in report order: main diagonal, anti-diagonal, middle row, middle column
CENTRAL_PAIRS: tuple[tuple[Pos, Pos], ...] = (
    ((0, 0), (2, 2)),
    ((0, 2), (2, 0)),
    ((1, 0), (1, 2)),
    ((0, 1), (2, 1)),
)

# the eight magic-arrangement lines: rows, columns, main/anti diagonal
ARRANGEMENT_LINES: tuple[tuple[Pos, Pos, Pos], ...] = (
    ((0, 0), (0, 1), (0, 2)),
    ((1, 0), (1, 1), (1, 2)),
    ((2, 0), (2, 1), (2, 2)),
    ((0, 0), (1, 0), (2, 0)),
    ((0, 1), (1, 1), (2, 1)),
    ((0, 2), (1, 2), (2, 2)),
    ((0, 0), (1, 1), (2, 2)),
    ((0, 2), (1, 1), (2, 0)),
)

# cell permutation between the magic arrangement and lattice coordinates:
# MAGIC_TO_LATTICE[r][c] = (j, k) with value m + j*u + k*v
MAGIC_TO_LATTICE: tuple[tuple[Pos, ...], ...] = (
    ((1, 0), (-1, -1), (0, 1)),
    ((-1, 1), (0, 0), (1, -1)),
    ((0, -1), (1, 1), (-1, 0)),
)

# the eight lattice lines (each an arithmetic progression by construction):
# three rows along v, three columns along u, and the two diagonals
GAP_LINES: tuple[tuple[Pos, Pos, Pos], ...] = (
    ((-1, -1), (-1, 0), (-1, 1)),
    ((0, -1), (0, 0), (0, 1)),
    ((1, -1), (1, 0), (1, 1)),
    ((-1, -1), (0, -1), (1, -1)),
    ((-1, 0), (0, 0), (1, 0)),
    ((-1, 1), (0, 1), (1, 1)),
    ((-1, -1), (0, 0), (1, 1)),
    ((-1, 1), (0, 0), (1, -1)),
)


def derive_root(value: GaussInt) -> Scalar | None:
    """Default root for a cell value.

    Perfect Gaussian squares get their sign-normalized Gaussian root;
    other rational integers get the exact radical sqrt(v) (or i*sqrt(-v));
    non-real non-squares have no exact root here.
    """
    g = gauss_sqrt(value)
    if g is not None:
        return g
    if value.is_real():
        return RadicalValue.sqrt_of_int(value.re)
    return None


class MagicSquare:
    """3x3 grid of exact values with optional exact roots per cell."""

    __slots__ = ("values", "roots")

    def __init__(self, values, roots=None):
        vals = []
        for r in range(3):
            row = []
            for c in range(3):
                v = values[r][c]
                if isinstance(v, int):
                    v = GaussInt(v)
                if not isinstance(v, GaussInt):
                    raise InvalidGrid(f"cell ({r},{c}): value must be a Gaussian integer")
                row.append(v)
            vals.append(tuple(row))
        self.values = tuple(vals)
        if roots == "auto":
            roots = [[derive_root(self.values[r][c]) for c in range(3)] for r in range(3)]
        if roots is None:
            self.roots = ((None,) * 3,) * 3
        else:
            rr = []
            for r in range(3):
                row = []
                for c in range(3):
                    root = roots[r][c]
                    if root is not None and root.square() != self.values[r][c]:
                        raise InvalidGrid(f"cell ({r},{c}): root^2 != value")
                    row.append(root)
                rr.append(tuple(row))
            self.roots = tuple(rr)

    @classmethod
    def from_values(cls, values, roots="auto") -> MagicSquare:
        return cls(values, roots)

    def value(self, r: int, c: int) -> GaussInt:
        return self.values[r][c]

    def root(self, r: int, c: int) -> Scalar | None:
        return self.roots[r][c]

    @property
    def center_value(self) -> GaussInt:
        return self.values[1][1]

    @property
    def center_root(self) -> Scalar | None:
        return self.roots[1][1]

    def all_values(self) -> list[GaussInt]:
        return [self.values[r][c] for r in range(3) for c in range(3)]

    def has_roots(self) -> bool:
        return any(root is not None for row in self.roots for root in row)

    def __eq__(self, other):
        if not isinstance(other, MagicSquare):
            return NotImplemented
        return self.values == other.values and self.roots == other.roots

    def __repr__(self):
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.values)
        return f"MagicSquare({rows})"


@dataclass(frozen=True)
class NearMissReport:
    """Exact diagnosis of a candidate square; the report is the verdict.

    line_sums follow ARRANGEMENT_LINES order (rows, columns, diagonals).
    magic_constant is present iff all eight sums agree, and
    thrice_center_ok records whether it equals three times the center.
    central_defects follow CENTRAL_PAIRS order.
    """

    line_sums: tuple[GaussInt, ...]
    magic_constant: GaussInt | None
    thrice_center_ok: bool
    square_count: int
    distinct_count: int
    central_defects: tuple[GaussInt, ...]
    is_gap: bool


@dataclass(frozen=True)
class GapBasis:
    """Slant-grid basis: the nine values m + j*u + k*v."""

    m: GaussInt
    u: GaussInt
    v: GaussInt

    def __post_init__(self):
        for name in ("m", "u", "v"):
            val = getattr(self, name)
            if isinstance(val, int):
                object.__setattr__(self, name, GaussInt(val))

    def value_at(self, j: int, k: int) -> GaussInt:
        return self.m + self.u * j + self.v * k

    def nine_values(self) -> dict[Pos, GaussInt]:
        return {(j, k): self.value_at(j, k) for j in (-1, 0, 1) for k in (-1, 0, 1)}

    def canonical(self) -> GapBasis:
        """Sign-normalize the steps and order them by (norm, re, im)."""
        u = normalize_sign(self.u)
        v = normalize_sign(self.v)
        if (u.norm(), u.re, u.im) > (v.norm(), v.re, v.im):
            u, v = v, u
        return GapBasis(self.m, u, v)

    def build_magic(self, roots="auto") -> MagicSquare:
        """Lay the lattice out as a magic square (all eight sums equal 3m)."""
        vals = self.nine_values()
        cells = [[vals[MAGIC_TO_LATTICE[r][c]] for c in range(3)] for r in range(3)]
        return MagicSquare(cells, roots)

    def __str__(self):
        return f"(m={self.m}, u={self.u}, v={self.v})"


@dataclass(frozen=True)
class GapRecovery:
    """Result of gap_recover: the basis plus the recorded cell permutation."""

    basis: GapBasis
    positions: tuple[tuple[Pos, ...], ...]  # positions[r][c] = (j, k)

    def lattice_value(self, j: int, k: int) -> GaussInt:
        return self.basis.value_at(j, k)

    def cell_of(self, j: int, k: int) -> Pos:
        for r in range(3):
            for c in range(3):
                if self.positions[r][c] == (j, k):
                    return (r, c)
        raise KeyError((j, k))


def magic_report(sq: MagicSquare) -> NearMissReport:
    """All eight sums, squareness, distinctness and central defects, exactly."""
    sums = tuple(
        sq.value(*line[0]) + sq.value(*line[1]) + sq.value(*line[2])
        for line in ARRANGEMENT_LINES
    )
    magic = sums[0] if all(s == sums[0] for s in sums) else None
    center = sq.center_value
    thrice_ok = magic is not None and magic == center * 3
    square_count = sum(1 for v in sq.all_values() if gauss_sqrt(v) is not None)
    distinct_count = len({(v.re, v.im) for v in sq.all_values()})
    defects = tuple(
        sq.value(*a) + sq.value(*b) - sq.center_value * 2 for a, b in CENTRAL_PAIRS
    )
    try:
        gap_recover(sq)
        is_gap = True
    except NotAGap:
        is_gap = False
    return NearMissReport(
        line_sums=sums,
        magic_constant=magic,
        thrice_center_ok=thrice_ok,
        square_count=square_count,
        distinct_count=distinct_count,
        central_defects=defects,
        is_gap=is_gap,
    )


def gap_recover(sq: MagicSquare) -> GapRecovery:
    """Find (m, u, v) with the nine cells equal to m + j*u + k*v.

    Succeeds exactly when every central pair sums to 2m and the four
    central differences decompose as {u, v, u+v, v-u} up to signs. The
    returned basis is canonical and the cell permutation is recorded.
    """
    m = sq.center_value
    diffs = []
    for a, b in CENTRAL_PAIRS:
        if sq.value(*a) + sq.value(*b) != m * 2:
            raise NotAGap(
                f"central pair {sq.value(*a)}, {sq.value(*b)} sums to "
                f"{sq.value(*a) + sq.value(*b)} != 2*{m}"
            )
        diffs.append(sq.value(*a) - m)

    def signed_multiset(items):
        out = {}
        for w in items:
            key = _key(normalize_sign(w))
            out[key] = out.get(key, 0) + 1
        return out

    target = signed_multiset(diffs)
    best = None
    for iu in range(4):
        for iv in range(4):
            if iu == iv:
                continue
            u = normalize_sign(diffs[iu])
            v = normalize_sign(diffs[iv])
            for vv in (v, -v):
                got = signed_multiset([u, vv, u + vv, vv - u])
                if got == target:
                    cand = GapBasis(m, u, vv).canonical()
                    key = (cand.u.norm(), cand.u.re, cand.u.im, cand.v.norm(), cand.v.re, cand.v.im)
                    if best is None or key < best[0]:
                        best = (key, cand)
    if best is None:
        raise NotAGap("central differences do not decompose as {u, v, u+v, v-u}")
    basis = best[1]

    # assign lattice coordinates to cells by value, consuming duplicates
    slots: dict[tuple, list[Pos]] = {}
    for (j, k), val in basis.nine_values().items():
        slots.setdefault(_key(val), []).append((j, k))
    for key in slots:
        slots[key].sort()
    positions = []
    for r in range(3):
        row = []
        for c in range(3):
            key = _key(sq.value(r, c))
            if key not in slots or not slots[key]:
                raise NotAGap(f"cell ({r},{c}) value {sq.value(r, c)} not on the lattice")
            row.append(slots[key].pop(0))
        positions.append(tuple(row))
    return GapRecovery(basis=basis, positions=tuple(positions))


def _key(z: GaussInt):
    return (z.re, z.im)


def gap_lines(basis: GapBasis, roots=None) -> list[ArithTriplet]:
    """The eight lattice lines as triplets, defect zero by construction.

    ``roots`` maps lattice positions (j, k) to explicit roots; positions
    not covered fall back to derive_root on the value.
    """
    vals = basis.nine_values()
    out = []
    for line in GAP_LINES:
        rs = []
        for pos in line:
            root = roots.get(pos) if roots else None
            if root is None:
                root = derive_root(vals[pos])
            if root is None:
                raise InvalidGrid(f"no exact root available at lattice {pos}")
            rs.append(root)
        out.append(ArithTriplet(rs[0], rs[1], rs[2]))
    return out


def arrangement_lines(sq: MagicSquare) -> list[ArithTriplet]:
    """The eight magic-arrangement lines, middle cell as center.

    Fallback line set for squares that are not slant grids; defects may
    be nonzero (those are exactly the kinks the reports quantify).
    """
    out = []
    for line in ARRANGEMENT_LINES:
        rs = []
        for pos in line:
            root = sq.root(*pos)
            if root is None:
                root = derive_root(sq.value(*pos))
            if root is None:
                raise InvalidGrid(f"no exact root available at cell {pos}")
            rs.append(root)
        out.append(ArithTriplet(rs[0], rs[1], rs[2]))
    return out


def lines_with_roots(sq: MagicSquare) -> tuple[str, list[ArithTriplet]]:
    """Line set used for sibling generation: lattice lines when the square
    is a slant grid, magic-arrangement lines otherwise."""
    try:
        rec = gap_recover(sq)
    except NotAGap:
        return "arrangement", arrangement_lines(sq)
    roots = {}
    for r in range(3):
        for c in range(3):
            root = sq.root(r, c)
            if root is not None:
                roots[rec.positions[r][c]] = root
    return "gap", gap_lines(rec.basis, roots)


def line_data(sq: MagicSquare) -> tuple[str, list[tuple[tuple, tuple]]]:
    """Raw material for sibling generation: per line, (values, roots).

    Uses lattice lines when the square is a slant grid and the magic
    arrangement otherwise. Roots may be None where no exact root exists
    (non-square non-real cells); values are always exact.
    """
    try:
        rec = gap_recover(sq)
    except NotAGap:
        rows = []
        for line in ARRANGEMENT_LINES:
            vals = tuple(sq.value(*p) for p in line)
            roots = tuple(
                sq.root(*p) if sq.root(*p) is not None else derive_root(sq.value(*p))
                for p in line
            )
            rows.append((vals, roots))
        return "arrangement", rows
    explicit = {}
    for r in range(3):
        for c in range(3):
            root = sq.root(r, c)
            if root is not None:
                explicit[rec.positions[r][c]] = root
    vals9 = rec.basis.nine_values()
    rows = []
    for line in GAP_LINES:
        vals = tuple(vals9[p] for p in line)
        roots = tuple(
            explicit[p] if p in explicit else derive_root(vals9[p]) for p in line
        )
        rows.append((vals, roots))
    return "gap", rows


def random_basis(rng: random.Random, span: int = 50, real: bool = False) -> GapBasis:
    """Random basis whose nine values are pairwise distinct (for tests).

    With real=True the values stay rational integers, so every cell has
    an exact root (Gaussian or radical) and line triplets are exact.
    """

    def pick():
        if real:
            return GaussInt(rng.randint(-span, span))
        return GaussInt(rng.randint(-span, span), rng.randint(-span, span))

    while True:
        basis = GapBasis(pick(), pick(), pick())
        vals = list(basis.nine_values().values())
        if len({(z.re, z.im) for z in vals}) == 9:
            return basis
