"""Built-in fixtures, re-verified on every load.

The two famous near-misses are carried as literal cell values and
trusted only after the exact checker re-proves every structural claim
made about them: the Bremner square has all eight sums equal to
541875 = 3 * 425^2 with exactly two non-square cells, the Parker square
has seven sums of 3051 (the odd one out is 4107 = 3 * 37^2, the unique
line satisfying the thrice-center law), nine squares and only six
distinct values. The registry is closed; new grids enter through the
JSON interface instead.
"""

from __future__ import annotations

from .correspond import LegTriple
from .exact import GaussInt
from .grids import MagicSquare, magic_report

FIXTURE_NAMES = ("bremner", "parker", "loshu", "paper-example")


class FixtureError(RuntimeError):
    """A built-in fixture failed its own verification; the build is broken."""


BREMNER_CELLS = (
    (373**2, 289**2, 565**2),
    (360721, 425**2, 23**2),
    (205**2, 527**2, 222121),
)

PARKER_CELLS = (
    (29**2, 1, 47**2),
    (41**2, 37**2, 1),
    (23**2, 41**2, 29**2),
)

LOSHU_CELLS = (
    (4, 9, 2),
    (3, 5, 7),
    (8, 1, 6),
)

PAPER_EXAMPLE_LEGS = (GaussInt(8, -4), GaussInt(4, 7), GaussInt(4, -1))


def _check(cond: bool, name: str, claim: str) -> None:
    if not cond:
        raise FixtureError(f"fixture {name!r} failed verification: {claim}")


def _verified_grid(name: str, cells) -> MagicSquare:
    sq = MagicSquare.from_values(cells, roots="auto")
    rep = magic_report(sq)
    if name == "bremner":
        _check(rep.magic_constant == GaussInt(541875), name, "magic constant 541875")
        _check(rep.thrice_center_ok, name, "T = 3*M^2")
        _check(rep.square_count == 7, name, "exactly seven square cells")
        _check(rep.distinct_count == 9, name, "nine distinct cells")
        _check(all(d.is_zero() for d in rep.central_defects), name, "central defects all zero")
        _check(rep.is_gap, name, "forms a slant grid")
    elif name == "parker":
        _check(rep.magic_constant is None, name, "one mismatched sum")
        _check(
            sorted((s.re for s in rep.line_sums)) == [3051] * 7 + [4107],
            name,
            "seven sums of 3051 and one of 4107",
        )
        _check(rep.square_count == 9, name, "nine square cells")
        _check(rep.distinct_count == 6, name, "six distinct cells")
        _check(
            sorted(d.re for d in rep.central_defects) == [-1056, -1056, -1056, 0],
            name,
            "central defects {0, -1056, -1056, -1056}",
        )
        _check(not rep.is_gap, name, "not a slant grid")
    elif name == "loshu":
        _check(rep.magic_constant == GaussInt(15), name, "magic constant 15")
        _check(rep.thrice_center_ok, name, "T = 3*M")
        _check(rep.distinct_count == 9, name, "nine distinct cells")
        _check(rep.is_gap, name, "forms a slant grid")
    return sq


def fixture(name: str):
    """Load a fixture by name; grids come back verified with roots attached."""
    if name == "bremner":
        return _verified_grid(name, BREMNER_CELLS)
    if name == "parker":
        return _verified_grid(name, PARKER_CELLS)
    if name == "loshu":
        return _verified_grid(name, LOSHU_CELLS)
    if name == "paper-example":
        t = LegTriple(*PAPER_EXAMPLE_LEGS)  # validates A^2 + B^2 = C^2
        return t
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
