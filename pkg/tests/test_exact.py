import math
from fractions import Fraction

import pytest

from gaussquares.exact import (
    GaussInt,
    GaussRat,
    MixedRadicals,
    RadicalValue,
    gauss_sqrt,
    is_gaussian_integer,
    isqrt,
    norm,
    normalize_sign,
    radical_mul,
    scalar_half,
    scalar_times_i,
    split_square,
)

from conftest import random_gauss


class TestIsqrt:
    @pytest.mark.parametrize(
        "n,root,exact",
        [(49, 7, True), (48, 6, False), (360721, 600, False), (0, 0, True), (1, 1, True)],
    )
    def test_examples(self, n, root, exact):
        assert isqrt(n) == (root, exact)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)

    def test_bracketing(self, rng):
        for _ in range(2000):
            n = rng.randint(0, 10**12)
            r, exact = isqrt(n)
            assert r * r <= n < (r + 1) * (r + 1)
            assert exact == (r * r == n)


class TestGaussInt:
    def test_norm_examples(self):
        assert norm(GaussInt(8, -4)) == 80
        assert norm(GaussInt(0, 0)) == 0
        assert norm(GaussInt(1, 1)) == 2

    def test_norm_multiplicative(self, rng):
        for _ in range(1000):
            z = random_gauss(rng, 10**6)
            w = random_gauss(rng, 10**6)
            assert norm(z * w) == norm(z) * norm(w)

    def test_ring_laws(self, rng):
        for _ in range(500):
            a, b, c = (random_gauss(rng, 10**9) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_str_forms(self):
        assert str(GaussInt(8, -4)) == "8-4i"
        assert str(GaussInt(0, 1)) == "i"
        assert str(GaussInt(0, -1)) == "-i"
        assert str(GaussInt(3)) == "3"
        assert str(GaussInt(0, 7)) == "7i"

    def test_int_coercion_and_eq(self):
        assert GaussInt(5) == 5
        assert GaussInt(5) + 1 == GaussInt(6)
        assert 2 * GaussInt(1, 1) == GaussInt(2, 2)
        assert GaussInt(2) == GaussRat(2)
        assert hash(GaussInt(2)) == hash(GaussRat(2))


class TestNormalizeSign:
    def test_examples(self):
        assert normalize_sign(GaussInt(-7, 4)) == GaussInt(7, -4)
        assert normalize_sign(GaussInt(4, -1)) == GaussInt(4, -1)
        assert normalize_sign(GaussInt(0, -1)) == GaussInt(0, 1)

    def test_idempotent_and_square_preserving(self, rng):
        for _ in range(500):
            z = random_gauss(rng)
            n = normalize_sign(z)
            assert normalize_sign(n) == n
            assert n.square() == z.square()

    def test_radical(self):
        r = RadicalValue(0, -1, 2)
        assert normalize_sign(r) == RadicalValue(0, 1, 2)


class TestGaussSqrt:
    def test_examples(self):
        assert gauss_sqrt(GaussInt(-48, 64)) == GaussInt(4, 8)
        assert gauss_sqrt(GaussInt(0, 2)) == GaussInt(1, 1)
        assert gauss_sqrt(GaussInt(5)) is None
        assert gauss_sqrt(GaussInt(0)) == GaussInt(0)

    def test_roundtrip(self, rng):
        for _ in range(1000):
            g = random_gauss(rng, 10**4)
            r = gauss_sqrt(g.square())
            assert r is not None
            assert r == normalize_sign(g)

    def test_absence_confirmed_by_brute_force(self, rng):
        checked = 0
        while checked < 1000:
            z = random_gauss(rng, 70, nonzero=True)
            if norm(z) > 10**4 or gauss_sqrt(z) is not None:
                continue
            top = math.isqrt(norm(z))
            for a in range(0, math.isqrt(top) + 1):
                for b in range(-math.isqrt(top), math.isqrt(top) + 1):
                    g = GaussInt(a, b)
                    if g.norm() ** 2 <= norm(z):
                        assert g.square() != z
            checked += 1


class TestGaussRat:
    def test_lowest_terms(self):
        r = GaussRat(Fraction(2, 4), Fraction(-6, 4))
        assert r.re == Fraction(1, 2) and r.re.denominator == 2
        assert r.im == Fraction(-3, 2)

    def test_gauss_int_roundtrip(self):
        r = GaussRat(3, -7)
        assert r.is_gaussian_integer()
        assert r.to_gauss_int() == GaussInt(3, -7)
        assert GaussRat.from_gauss_int(GaussInt(3, -7)) == r
        assert GaussRat(Fraction(1, 2)).to_gauss_int() is None

    def test_division(self):
        assert GaussRat(1) / GaussRat(0, 1) == GaussRat(0, -1)
        with pytest.raises(ZeroDivisionError):
            GaussRat(1) / GaussRat(0)


class TestSplitSquare:
    def test_examples(self):
        assert split_square(360721) == (1, 360721)  # 137 * 2633, squarefree
        assert split_square(12) == (2, 3)
        assert split_square(49) == (7, 1)
        assert split_square(0) == (1, 0)
        assert split_square(1) == (1, 1)

    def test_random(self, rng):
        for _ in range(300):
            n = rng.randint(1, 10**6)
            s, f = split_square(n)
            assert s * s * f == n
            # f squarefree: no prime square divides it
            d = 2
            while d * d <= f:
                assert f % (d * d) != 0
                d += 1


class TestRadicalValue:
    def test_mul_examples(self):
        dd = radical_mul(RadicalValue(23, 0, 1), RadicalValue(0, 1, 360721))
        assert dd == RadicalValue(0, 23, 360721)
        conj = radical_mul(RadicalValue(1, 1, 2), RadicalValue(1, -1, 2))
        assert conj == RadicalValue(-1, 0, 1)
        with pytest.raises(MixedRadicals):
            radical_mul(RadicalValue(0, 1, 2), RadicalValue(0, 1, 3))

    def test_normalization(self):
        assert RadicalValue(0, 1, 12) == RadicalValue(0, 2, 3)
        assert RadicalValue(1, 1, 1) == GaussRat(2)
        assert RadicalValue(5, 3, 4).to_gauss_rat() == GaussRat(11)  # 5 + 3*2
        assert RadicalValue(0, 0, 7).n == 1

    def test_zero_iff_both_zero(self):
        assert RadicalValue(0, 0, 5).is_zero()
        assert not RadicalValue(0, 1, 5).is_zero()
        assert not RadicalValue(1, 0, 1).is_zero()

    def test_sqrt_of_int(self):
        assert RadicalValue.sqrt_of_int(49) == GaussRat(7)
        r = RadicalValue.sqrt_of_int(360721)
        assert r.square() == GaussRat(360721)
        neg = RadicalValue.sqrt_of_int(-3)
        assert neg.square() == GaussRat(-3)
        assert RadicalValue.sqrt_of_int(0).is_zero()
        assert RadicalValue.sqrt_of_int(-4) == GaussRat(0, 2)

    def test_same_radicand_product_keeps_radicand(self, rng):
        for _ in range(200):
            n = rng.choice([2, 3, 5, 7, 11])
            x = RadicalValue(rng.randint(-9, 9), rng.randint(-9, 9), n)
            y = RadicalValue(rng.randint(-9, 9), rng.randint(-9, 9), n)
            p = x * y
            assert p.n in (1, n)

    def test_float_agreement(self, rng):
        for _ in range(500):
            n = rng.randint(0, 10**6)
            x = RadicalValue(rng.randint(-50, 50), rng.randint(-50, 50), n)
            y = RadicalValue(rng.randint(-50, 50), rng.randint(-50, 50), x.n)
            exact = complex(x * y)
            approx = complex(x) * complex(y)
            scale = max(abs(exact), abs(approx), 1.0)
            assert abs(exact - approx) / scale < 1e-9

    def test_sign_determination(self):
        # 1 - 1*sqrt(2) is negative, 3 - 1*sqrt(2) is positive
        assert RadicalValue(1, -1, 2).real_sign() == -1
        assert RadicalValue(3, -1, 2).real_sign() == 1
        assert RadicalValue(0, 1, 2).real_sign() == 1
        assert RadicalValue(GaussRat(0, 1), 0, 1).real_sign() == 0


class TestScalarHelpers:
    def test_half(self):
        assert scalar_half(GaussInt(4, -2)) == GaussInt(2, -1)
        h = scalar_half(GaussInt(3))
        assert isinstance(h, GaussRat) and h == GaussRat(Fraction(3, 2))
        assert scalar_half(RadicalValue(0, 2, 5)) == RadicalValue(0, 1, 5)

    def test_times_i(self):
        assert scalar_times_i(GaussInt(3, 4)) == GaussInt(-4, 3)
        assert scalar_times_i(GaussRat(1, 2)) == GaussRat(-2, 1)
        r = scalar_times_i(RadicalValue(0, 1, 3))
        assert r == RadicalValue(0, GaussRat(0, 1), 3)

    def test_is_gaussian_integer(self):
        assert is_gaussian_integer(GaussInt(1, 2))
        assert is_gaussian_integer(GaussRat(1, 2))
        assert not is_gaussian_integer(GaussRat(Fraction(1, 2)))
        assert is_gaussian_integer(RadicalValue(3, 0, 1))
        assert not is_gaussian_integer(RadicalValue(0, 1, 2))
