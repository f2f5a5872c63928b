from fractions import Fraction

import pytest

from gaussquares.correspond import ArithTriplet, LegTriple, to_zero_sum
from gaussquares.exact import GaussInt, GaussRat, MixedRadicals, RadicalValue, gauss_sqrt, to_gauss_int
from gaussquares.fixtures import fixture
from gaussquares.grids import GapBasis, NotAGap
from gaussquares.siblings import (
    DEMO_STUDY_BASIS,
    FloatTriplet,
    error_term,
    grid_siblings,
    identity_residual,
    origin_shift_study,
    pseudo_grid,
    pseudo_letters,
)

G = GaussInt


def random_ap_letters(rng):
    """Two exact root progressions (D, c, B) and (b, C, d) from leg pairs."""

    def triple(p, q):
        P, Q, R = p * p - q * q, (p * q) * 2, p * p + q * q
        return P + Q, P - Q, R  # (P+Q)^2 + (P-Q)^2 = 2 R^2

    while True:
        p1, q1, p2, q2 = (
            G(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(4)
        )
        D, B, c = triple(p1, q1)
        b, d, C = triple(p2, q2)
        if not any(x.is_zero() for x in (D, B, c, b, d, C)):
            return D, b, c, C, B, d


class TestGridSiblings:
    def test_bremner_middle_row(self):
        fam = grid_siblings(fixture("bremner"))
        assert fam.line_set == "gap"
        assert fam.triplet_count == 24
        middle = fam.entries[1]
        assert middle.line.roots == (G(205), G(425), G(565))
        # endpoints up to orientation: {425 +- 180i} around center 385
        assert {middle.older.left, middle.older.right} == {G(425, 180), G(425, -180)}
        assert middle.older.center == G(385)
        assert set(middle.older.values) == {G(148225, 153000), G(148225), G(148225, -153000)}
        assert middle.older.defect.is_zero()
        assert {middle.younger.left, middle.younger.right} == {G(425, 385), G(425, -385)}
        assert middle.younger.center.square() == G(180).square()
        assert middle.younger.defect.is_zero()

    def test_bremner_mixed_radical_line_goes_float(self):
        fam = grid_siblings(fixture("bremner"))
        flagged = [e for e in fam.entries if e.float_backed]
        assert len(flagged) == 1  # the row holding both non-square cells
        e = flagged[0]
        assert isinstance(e.older, FloatTriplet)
        # defects stay exact through the value-level form
        assert e.line_defect.is_zero() and e.sibling_defect.is_zero()
        assert abs(e.older.defect) < 1e-6 * max(abs(v) for v in e.older.values)

    def test_defect_negation_every_fixture_line(self):
        for name in ("bremner", "parker", "loshu"):
            fam = grid_siblings(fixture(name))
            for e in fam.entries:
                assert e.sibling_defect == -e.line_defect
                if not e.float_backed:
                    assert e.older.defect == e.sibling_defect
                    assert e.younger.defect == e.sibling_defect

    def test_parker_duplicate_endpoints_propagate(self):
        fam = grid_siblings(fixture("parker"))
        assert fam.line_set == "arrangement"
        dups = [e for e in fam.entries if e.older.left == e.older.right]
        assert len(dups) == 1
        assert dups[0].line.roots == (G(29), G(37), G(29))


class TestPseudoGrid:
    def test_bremner_rows_exact(self):
        pg = pseudo_grid(fixture("bremner"), "rows")
        assert not pg.float_backed
        expected = RadicalValue(
            GaussRat(Fraction(-219529, 2)), GaussRat(Fraction(289, 2)), 360721
        )
        assert pg.error == expected
        assert pg.identity_residual.is_zero()
        assert not pg.near_miss  # relative error ~0.11 is way past the threshold

    def test_bremner_letters(self):
        D, b, c, C, B, d = pseudo_letters(fixture("bremner"), "rows")
        assert (D, b, c, C, B) == (G(23), G(527), G(205), G(565), G(289))
        assert d == RadicalValue(0, 1, 360721)
        # Db + Bd = 12121 + 289 sqrt(360721), 2Cc = 231650
        db_bd = D * b + B * d
        assert db_bd == RadicalValue(12121, 289, 360721)
        assert C * c * 2 == RadicalValue(231650, 0, 1)

    def test_bremner_cols_float_within_tolerance(self):
        pg = pseudo_grid(fixture("bremner"), "cols")
        assert pg.float_backed  # two distinct radicands: 222121 and 360721
        scale = max(abs(complex(pg.error)), 1.0) ** 2
        assert abs(complex(pg.identity_residual)) / scale < 1e-9

    def test_younger_error_negates_older(self):
        older = pseudo_grid(fixture("bremner"), "rows")
        younger = pseudo_grid(fixture("bremner"), "rows", assembly="younger")
        assert younger.error == -older.error
        assert younger.identity_residual.is_zero()

    def test_parker_rejected(self):
        with pytest.raises(NotAGap):
            pseudo_grid(fixture("parker"), "rows")

    def test_identity_on_random_ap_configurations(self, rng):
        for _ in range(200):
            D, b, c, C, B, d = random_ap_letters(rng)
            E, _ = error_term(D, b, c, C, B, d)
            assert identity_residual(E, D, b, c, C, B, d).is_zero()
            Ey, _ = error_term(D, b, c, C, B, d, assembly="younger")
            assert identity_residual(Ey, D, b, c, C, B, d, assembly="younger").is_zero()
            assert (E + Ey).is_zero()

    def test_identity_sign_insensitive(self, rng):
        for _ in range(50):
            D, b, c, C, B, d = random_ap_letters(rng)
            for flip in range(6):
                letters = [D, b, c, C, B, d]
                letters[flip] = -letters[flip]
                E, _ = error_term(*letters)
                assert identity_residual(E, *letters).is_zero()

    def test_near_miss_flag_threshold(self):
        # far from the origin the demo pseudo-grid tightens into a near-miss
        basis = GapBasis(DEMO_STUDY_BASIS.m + G(10**6), DEMO_STUDY_BASIS.u, DEMO_STUDY_BASIS.v)
        sq = basis.build_magic()
        pg = pseudo_grid(sq, "rows")
        assert pg.float_backed  # nine shifted values, nine radicands
        assert pg.relative_error < 1e-2
        assert pg.near_miss


class TestOriginStudy:
    def test_decay_and_covering(self):
        pts = origin_shift_study(DEMO_STUDY_BASIS, [10**2, 10**4, 10**6])
        assert pts[0].abs_error > pts[1].abs_error > pts[2].abs_error
        origin = origin_shift_study(DEMO_STUDY_BASIS, [0])[0]
        assert origin.rel_error > 0.5

    def test_far_field_decay_is_cubic(self):
        # for a small grid the decade shifts live in the far field, where
        # the error falls off with the third power of the distance
        import math

        pts = origin_shift_study(GapBasis(G(0), G(1), G(3)), [10**3, 10**4, 10**5])
        ratios = [
            math.log10(pts[i].abs_error / pts[i + 1].abs_error) for i in range(2)
        ]
        for r in ratios:
            assert abs(r - 3.0) < 0.05

    def test_zero_denominator_flagged(self):
        # constant-row degenerate grid: the closed-form denominator is
        # 4*(m + t), which vanishes at t = -m
        pts = origin_shift_study(GapBasis(G(5), G(1), G(0)), [-5.0, 1.0])
        assert pts[0].flagged
        assert not pts[1].flagged

    def test_directions(self):
        rows = origin_shift_study(DEMO_STUDY_BASIS, [100], direction="rows")
        cols = origin_shift_study(DEMO_STUDY_BASIS, [100], direction="cols")
        assert rows[0].abs_error > 0 and cols[0].abs_error > 0
