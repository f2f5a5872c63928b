import math

import pytest

from gaussquares.correspond import (
    ArithTriplet,
    GaussianParity,
    LegTriple,
    NotArithmetic,
    NotPythagorean,
    NotSquare,
    RationalZeroSum,
    TrivialTriple,
    ZeroSumTriple,
    pyth_to_triplet_int,
    same_triplet_class,
    siblings_of_triplet,
    to_zero_sum,
    triplet_to_pyth_int,
    triplet_to_triple,
    triplets_from_triple,
)
from gaussquares.exact import GaussInt, GaussRat, gauss_sqrt, normalize_sign

from conftest import random_gauss

G = GaussInt


def legs(a, b, c):
    return LegTriple(G(a), G(b), G(c))


class TestIntegerCorrespondence:
    def test_fold_examples(self):
        t = pyth_to_triplet_int(legs(3, 4, 5))
        assert t.roots == (G(1), G(5), G(7))
        assert t.values == (G(1), G(25), G(49))
        assert t.defect.is_zero()

        t = pyth_to_triplet_int(legs(20, 21, 29))
        assert t.roots == (G(1), G(29), G(41))
        assert t.values[1] - t.values[0] == G(840)
        assert t.values[2] - t.values[1] == G(840)

        t = pyth_to_triplet_int(legs(6, 8, 10))
        assert t.roots == (G(2), G(10), G(14))

    def test_unfold_examples(self):
        assert triplet_to_pyth_int(1, 25, 49) == legs(4, 3, 5)
        assert triplet_to_pyth_int(1, 841, 1681) == legs(21, 20, 29)
        with pytest.raises(NotArithmetic):
            triplet_to_pyth_int(9, 25, 49)
        with pytest.raises(NotSquare):
            triplet_to_pyth_int(2, 25, 48)

    def test_bad_legs_rejected(self):
        with pytest.raises(NotPythagorean):
            legs(3, 4, 6)

    def test_round_trip_small(self):
        for a, b, c in [(3, 4, 5), (5, 12, 13), (8, 15, 17), (20, 21, 29), (9, 12, 15)]:
            t = pyth_to_triplet_int(legs(a, b, c))
            back = triplet_to_pyth_int(t.values[0].re, t.values[1].re, t.values[2].re)
            assert {back.A.re, back.B.re} == {a, b}
            assert back.C.re == c


class TestZeroSum:
    def test_worked_example(self):
        z = to_zero_sum(LegTriple(G(8, -4), G(4, 7), G(4, -1)))
        assert z.components == (G(4, -1), G(4, 8), G(7, -4))

    def test_integer_example(self):
        z = to_zero_sum(legs(3, 4, 5))
        assert z.components == (G(5), G(0, 3), G(0, 4))

    def test_trivial_rejected(self):
        with pytest.raises(TrivialTriple):
            to_zero_sum(legs(0, 1, 1))

    def test_centroid_at_zero(self, rng):
        # the three squares always average to zero
        for a, b, c in [(3, 4, 5), (20, 21, 29), (5, 12, 13)]:
            z = to_zero_sum(legs(a, b, c))
            total = sum((comp.square() for comp in z.components), G(0))
            assert total.is_zero()

    def test_invariant_enforced(self):
        with pytest.raises(ValueError):
            ZeroSumTriple.of(G(1), G(1), G(1))


class TestThreeToOne:
    def setup_method(self):
        self.z = to_zero_sum(LegTriple(G(8, -4), G(4, 7), G(4, -1)))

    def test_worked_example_triplets(self):
        t1, t2, t3 = triplets_from_triple(self.z)
        assert t1.roots == (G(12, 3), G(4, -1), G(4, -11))
        # printed forms differ by left/right order and conjugation; compare classes
        assert same_triplet_class(t2, ArithTriplet(G(5, 11), G(4, 8), G(3, 3)))
        assert same_triplet_class(t3, ArithTriplet(G(9), G(7, -4), G(7, -8)))
        for t in (t1, t2, t3):
            assert t.defect.is_zero()

    def test_erratum_value_fails(self):
        # 5+12i in place of 5+11i breaks the even-spacing identity
        wrong = ArithTriplet(G(5, 12), G(4, 8), G(3, 3))
        assert not wrong.defect.is_zero()
        right = ArithTriplet(G(5, 11), G(4, 8), G(3, 3))
        assert right.defect.is_zero()

    def test_integer_image(self):
        z = to_zero_sum(legs(3, 4, 5))
        trips = triplets_from_triple(z)
        # same triplet as (7, 5, 1) up to left/right orientation
        assert trips[0].strict_key() == ArithTriplet(G(7), G(5), G(1)).strict_key()
        assert trips[0].values[1] == G(25)

    def test_inverse_examples(self):
        back = triplet_to_triple(ArithTriplet(G(12, 3), G(4, -1), G(4, -11)))
        assert back.class_key() == self.z.class_key()
        back2 = triplet_to_triple(ArithTriplet(G(7), G(5), G(1)))
        assert back2.class_key() == to_zero_sum(legs(3, 4, 5)).class_key()
        with pytest.raises(NotArithmetic):
            triplet_to_triple(ArithTriplet(G(1), G(2), G(3)))

    def test_round_trip_all_three(self):
        for t in triplets_from_triple(self.z):
            assert triplet_to_triple(t).class_key() == self.z.class_key()

    def test_gaussian_parity_is_checked_not_assumed(self):
        # i^2 + 3^2 = 8 = 2 * 2^2, yet (i + 3)/2 is not a Gaussian integer:
        # the integer parity argument does not transfer to Z[i]
        t = ArithTriplet(G(0, 1), G(2), G(3))
        assert t.defect.is_zero()
        with pytest.raises(GaussianParity):
            triplet_to_triple(t)
        rat = triplet_to_triple(t, allow_rational=True)
        assert isinstance(rat, RationalZeroSum)
        assert not rat.integral
        total = sum(
            ((c * c) for c in (rat.alpha, rat.beta, rat.gamma)),
            GaussRat(0),
        )
        assert total.is_zero()


class TestSiblings:
    def test_example_7_5_1(self):
        pair = siblings_of_triplet(G(7), G(5), G(1))
        assert pair.older.roots == (G(5, 3), G(4), G(5, -3))
        assert pair.older.values == (G(16, 30), G(16), G(16, -30))
        assert pair.younger.roots == (G(5, 4), G(3), G(5, -4))
        assert pair.younger.values == (G(9, 40), G(9), G(9, -40))
        assert pair.older.defect.is_zero() and pair.younger.defect.is_zero()
        assert pair.integral

    def test_parker_diagonal(self):
        pair = siblings_of_triplet(G(29), G(37), G(29))
        assert pair.older.roots == (G(37), G(29), G(37))  # duplicate endpoints
        assert pair.younger.center == G(0)
        assert pair.older.defect == G(1056)
        assert pair.younger.defect == G(1056)
        line_defect = G(29).square() + G(29).square() - G(37).square() * 2
        assert line_defect == G(-1056)

    def test_non_integral_halves_flagged(self):
        pair = siblings_of_triplet(G(2), G(1), G(1))
        assert not pair.integral
        assert pair.older.center == GaussRat.from_gauss_int(G(3)) / GaussRat(2)
        # still exact: defects negate
        assert pair.older.defect == -(G(2).square() + G(1).square() - G(1).square() * 2)

    def test_defect_negation_random(self, rng):
        for _ in range(1000):
            x, z, y = (random_gauss(rng, 30) for _ in range(3))
            pair = siblings_of_triplet(x, z, y)
            line_defect = x.square() + y.square() - z.square() * 2
            assert pair.older.defect == -line_defect
            assert pair.younger.defect == -line_defect

    def test_perfect_square_closure(self, rng):
        # x == y mod 2 makes every sibling entry a perfect Gaussian square
        for _ in range(300):
            x, z, w = (random_gauss(rng, 20) for _ in range(3))
            y = x + w * 2
            pair = siblings_of_triplet(x, z, y)
            assert pair.integral
            for trip in (pair.older, pair.younger):
                for v in trip.values:
                    assert gauss_sqrt(v) is not None


class TestTripletClassKeys:
    def test_swap_and_sign_fold(self):
        a = ArithTriplet(G(1), G(5), G(7))
        b = ArithTriplet(G(-7), G(5), G(1))
        assert a.strict_key() == b.strict_key()

    def test_conjugation_folds_only_in_class_key(self):
        a = ArithTriplet(G(3, 5), G(1, 3), G(3, -3))
        c = a.conjugate()
        assert a.strict_key() != c.strict_key()
        assert a.class_key() == c.class_key()
