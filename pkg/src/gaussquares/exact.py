"""Exact scalar arithmetic over the Gaussian integers and friends.

Three immutable value types cover everything the rest of the package
needs:

``GaussInt``
    a + b*i with arbitrary-precision integer parts.
``GaussRat``
    a + b*i with rational parts, always in lowest terms (hosts the
    half-integer roots that sibling formulas produce).
``RadicalValue``
    a + b*sqrt(n) with ``GaussRat`` coefficients and one squarefree
    nonnegative integer radicand (hosts exact roots of non-square real
    grid entries).

Floating point never enters here; callers that need approximate values
convert through ``complex()``.
"""

from __future__ import annotations

import math
from fractions import Fraction


class MixedRadicals(ValueError):
    """Raised when arithmetic would need two distinct nontrivial radicands."""


def isqrt(n: int) -> tuple[int, bool]:
    """Floor square root and an exactness flag.

    Returns ``(r, exact)`` with ``r*r <= n < (r+1)*(r+1)`` and
    ``exact`` true iff ``r*r == n``. Negative input is rejected.
    """
    if n < 0:
        raise ValueError("isqrt of negative integer")
    r = math.isqrt(n)
    return r, r * r == n


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def split_square(n: int) -> tuple[int, int]:
    """Write ``n = s*s*f`` with ``f`` squarefree; returns ``(s, f)``.

    Trial division; fine for the grid-entry magnitudes this package
    works with (the fixtures top out near 10**6).
    """
    if n < 0:
        raise ValueError("split_square of negative integer")
    if n == 0:
        return 1, 0
    s = 1
    f = 1
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                f *= d
        d += 1
    if m > 1:
        f *= m
    return s, f


class GaussInt:
    """Gaussian integer a + b*i."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = re
        self.im = im

    def __reduce__(self):
        return (GaussInt, (self.re, self.im))

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _as_gauss_int(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss_int(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss_int(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss_int(other)
        if other is None:
            return NotImplemented
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = GaussInt(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def square(self) -> GaussInt:
        return self * self

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """re*re + im*im; multiplicative and zero only at zero."""
        return self.re * self.re + self.im * self.im

    # -- predicates and conversions --------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_even(self) -> bool:
        """Divisible by 2 (both parts even)."""
        return self.re % 2 == 0 and self.im % 2 == 0

    def __eq__(self, other):
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.re == other and self.im == 0
        if isinstance(other, (GaussRat, RadicalValue, Fraction)):
            return GaussRat.from_gauss_int(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self):
        return format_complex_parts(self.re, self.im)


def format_complex_parts(re, im) -> str:
    """Render a + b*i the way the worked displays do: ``8-4i``, ``3``, ``7i``."""
    if im == 0:
        return str(re)
    unit = "i" if abs(im) == 1 else f"{abs(im)}i"
    sign = "-" if im < 0 else "+"
    if re == 0:
        return f"-{unit}" if im < 0 else unit
    return f"{re}{sign}{unit}"


I = GaussInt(0, 1)
ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)


def _as_gauss_int(x) -> GaussInt | None:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x, 0)
    return None


def norm(z: GaussInt) -> int:
    return _require_gauss_int(z).norm()


def _require_gauss_int(z) -> GaussInt:
    g = _as_gauss_int(z)
    if g is None:
        raise TypeError(f"expected GaussInt, got {type(z).__name__}")
    return g


def normalize_sign(z):
    """Pick the representative among {z, -z} with re > 0, or re == 0 and im >= 0.

    Only +-1 are allowed as unit multipliers because they are the units
    that fix the square; normalizing by +-i would negate it. Idempotent,
    and works on any of the exact scalar types.
    """
    if isinstance(z, int):
        z = GaussInt(z)
    if isinstance(z, GaussInt):
        if z.re > 0 or (z.re == 0 and z.im >= 0):
            return z
        return -z
    if isinstance(z, GaussRat):
        if z.re > 0 or (z.re == 0 and z.im >= 0):
            return z
        return -z
    if isinstance(z, RadicalValue):
        s = z.real_sign()
        if s > 0 or (s == 0 and z.imag_sign() >= 0):
            return z
        return -z
    raise TypeError(f"cannot sign-normalize {type(z).__name__}")


def gauss_sqrt(z: GaussInt) -> GaussInt | None:
    """Exact square root in Z[i], or None when z is not a perfect square.

    Candidate construction: the norm of a root must be the exact integer
    square root s of norm(z); then a*a = (s + re)/2 and b*b = (s - re)/2.
    The candidate is always verified by squaring, so sign conventions
    cannot produce a wrong accept. Absence is a value, not an error.
    """
    z = _require_gauss_int(z)
    if z.is_zero():
        return ZERO
    s, exact = isqrt(z.norm())
    if not exact:
        return None
    ha = s + z.re
    if ha % 2:
        return None
    a, exact = isqrt(ha // 2)
    if not exact:
        return None
    b, exact = isqrt((s - z.re) // 2)
    if not exact:
        return None
    for bb in (b, -b) if b else (0,):
        g = GaussInt(a, bb)
        if g.square() == z:
            return normalize_sign(g)
    return None


class GaussRat:
    """Gaussian rational a + b*i with Fraction parts (always lowest terms)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __reduce__(self):
        return (GaussRat, (self.re, self.im))

    @classmethod
    def from_gauss_int(cls, z: GaussInt) -> GaussRat:
        return cls(z.re, z.im)

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        other = _as_gauss_rat(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss_rat(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss_rat(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss_rat(other)
        if other is None:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss_rat(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRat")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def square(self) -> GaussRat:
        return self * self

    def conjugate(self) -> GaussRat:
        return GaussRat(self.re, -self.im)

    # -- predicates and conversions --------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_gauss_int(self) -> GaussInt | None:
        """Lossless conversion back to GaussInt when both parts are integral."""
        if self.is_gaussian_integer():
            return GaussInt(int(self.re), int(self.im))
        return None

    def __eq__(self, other):
        if isinstance(other, RadicalValue):
            return other == self
        other = _as_gauss_rat(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_complex_parts(self.re, self.im)


def _as_gauss_rat(x) -> GaussRat | None:
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x, 0)
    if isinstance(x, GaussInt):
        return GaussRat.from_gauss_int(x)
    return None


class RadicalValue:
    """Exact value a + b*sqrt(n) with GaussRat a, b and squarefree n >= 0.

    Construction normalizes: the square part of the radicand is folded
    into b, and b == 0 (or n == 1) collapses to a plain rational value
    with n == 1. Values with b != 0 therefore always carry a squarefree
    radicand n >= 2, which makes equality a plain field comparison.
    """

    __slots__ = ("a", "b", "n")

    def __init__(self, a=0, b=0, n: int = 1):
        a = _as_gauss_rat(a)
        b = _as_gauss_rat(b)
        if a is None or b is None:
            raise TypeError("RadicalValue coefficients must be rational scalars")
        if not isinstance(n, int) or n < 0:
            raise ValueError("radicand must be a nonnegative integer")
        if n == 0:
            b = GaussRat(0)
            n = 1
        elif n > 1:
            s, f = split_square(n)
            if s != 1:
                b = b * s
                n = f
        if n == 1:
            a = a + b
            b = GaussRat(0)
        if b.is_zero():
            n = 1
        self.a = a
        self.b = b
        self.n = n

    def __reduce__(self):
        return (RadicalValue, (self.a, self.b, self.n))

    @classmethod
    def sqrt_of_int(cls, v: int) -> RadicalValue:
        """Exact square root of a rational integer: sqrt(v), or i*sqrt(-v)."""
        if v >= 0:
            s, f = split_square(v)
            if f == 1:
                return cls(s, 0, 1)
            return cls(0, s, f)
        s, f = split_square(-v)
        coeff = GaussRat(0, s)
        if f == 1:
            return cls(coeff, 0, 1)
        return cls(0, coeff, f)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> RadicalValue | None:
        if isinstance(other, RadicalValue):
            return other
        r = _as_gauss_rat(other)
        if r is None:
            return None
        return RadicalValue(r, 0, 1)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = _join_radicands(self, other)
        return RadicalValue(self.a + other.a, self.b + other.b, n)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = _join_radicands(self, other)
        return RadicalValue(
            self.a * other.a + self.b * other.b * n,
            self.a * other.b + other.a * self.b,
            n,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return RadicalValue(-self.a, -self.b, self.n)

    def square(self) -> RadicalValue:
        return self * self

    def conjugate(self) -> RadicalValue:
        """Complex conjugation (sqrt(n) is real, so only a, b conjugate)."""
        return RadicalValue(self.a.conjugate(), self.b.conjugate(), self.n)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_rational(self) -> bool:
        return self.b.is_zero()

    def to_gauss_rat(self) -> GaussRat | None:
        return self.a if self.b.is_zero() else None

    def real_sign(self) -> int:
        """Exact sign of the real part a.re + b.re*sqrt(n)."""
        return _radical_part_sign(self.a.re, self.b.re, self.n)

    def imag_sign(self) -> int:
        return _radical_part_sign(self.a.im, self.b.im, self.n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # distinct squarefree radicands never alias: sqrt(n) is irrational
        return self.a == other.a and self.b == other.b and (
            self.b.is_zero() or self.n == other.n
        )

    def __hash__(self):
        if self.b.is_zero():
            return hash((self.a.re, self.a.im))
        return hash((self.a.re, self.a.im, self.b.re, self.b.im, self.n))

    def __complex__(self) -> complex:
        return complex(self.a) + complex(self.b) * math.sqrt(self.n)

    def __repr__(self):
        return f"RadicalValue({self.a!r}, {self.b!r}, {self.n})"

    def __str__(self):
        if self.b.is_zero():
            return str(self.a)
        root = f"√{self.n}"
        b = self.b
        if b == GaussRat(1):
            bs = root
        elif b == GaussRat(-1):
            bs = f"-{root}"
        else:
            bs = f"({b}){root}" if b.im != 0 or b.re < 0 else f"{b}{root}"
        if self.a.is_zero():
            return bs
        joiner = "" if bs.startswith("-") else "+"
        return f"({self.a}){joiner}{bs}" if self.a.im != 0 else f"{self.a}{joiner}{bs}"


def _join_radicands(x: RadicalValue, y: RadicalValue) -> int:
    if x.b.is_zero():
        return y.n
    if y.b.is_zero():
        return x.n
    if x.n != y.n:
        raise MixedRadicals(f"radicands differ: {x.n} vs {y.n}")
    return x.n


def _radical_part_sign(p: Fraction, q: Fraction, n: int) -> int:
    """Exact sign of p + q*sqrt(n) for rational p, q and squarefree n."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # opposite signs: the larger magnitude wins; p*p == q*q*n would make
    # the squarefree radicand a rational square, which cannot happen for
    # the normalized values this is called on (b != 0 forces n >= 2)
    lhs = p * p
    rhs = q * q * n
    if lhs == rhs:
        return 0
    bigger_p = lhs > rhs
    return (1 if p > 0 else -1) if bigger_p else (1 if q > 0 else -1)


def radical_mul(x: RadicalValue, y: RadicalValue) -> RadicalValue:
    """Exact product of two radical values.

    Requires equal radicands, or either factor purely rational; raises
    MixedRadicals otherwise, in which case the caller falls back to the
    floating backend.
    """
    if not isinstance(x, RadicalValue) or not isinstance(y, RadicalValue):
        raise TypeError("radical_mul expects RadicalValue operands")
    return x * y


# -- generic scalar helpers ----------------------------------------------
#
# The sibling and pseudo-grid formulas work uniformly over GaussInt,
# GaussRat and RadicalValue; these helpers keep that code free of
# isinstance ladders.

Scalar = GaussInt | GaussRat | RadicalValue


def as_scalar(x) -> Scalar:
    if isinstance(x, (GaussInt, GaussRat, RadicalValue)):
        return x
    if isinstance(x, int):
        return GaussInt(x)
    if isinstance(x, Fraction):
        return GaussRat(x)
    raise TypeError(f"not an exact scalar: {type(x).__name__}")


def scalar_half(x: Scalar) -> Scalar:
    """Exact division by 2, staying in the smallest type that fits."""
    x = as_scalar(x)
    if isinstance(x, GaussInt):
        if x.is_even():
            return GaussInt(x.re // 2, x.im // 2)
        return GaussRat(Fraction(x.re, 2), Fraction(x.im, 2))
    if isinstance(x, GaussRat):
        return GaussRat(x.re / 2, x.im / 2)
    return RadicalValue(scalar_half(x.a), scalar_half(x.b), x.n)


def scalar_times_i(x: Scalar) -> Scalar:
    x = as_scalar(x)
    if isinstance(x, GaussInt):
        return GaussInt(-x.im, x.re)
    if isinstance(x, GaussRat):
        return GaussRat(-x.im, x.re)
    return RadicalValue(scalar_times_i(x.a), scalar_times_i(x.b), x.n)


def scalar_square(x: Scalar) -> Scalar:
    return as_scalar(x).square()


def is_gaussian_integer(x: Scalar) -> bool:
    x = as_scalar(x)
    if isinstance(x, GaussInt):
        return True
    if isinstance(x, GaussRat):
        return x.is_gaussian_integer()
    return x.b.is_zero() and x.a.is_gaussian_integer()


def to_gauss_int(x: Scalar) -> GaussInt | None:
    """Collapse any exact scalar to GaussInt when it is one, else None."""
    x = as_scalar(x)
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, GaussRat):
        return x.to_gauss_int()
    r = x.to_gauss_rat()
    return r.to_gauss_int() if r is not None else None


def scalar_is_zero(x: Scalar) -> bool:
    return as_scalar(x).is_zero()


def simplify_scalar(x: Scalar) -> Scalar:
    """Collapse to the smallest type that holds the value exactly."""
    x = as_scalar(x)
    if isinstance(x, RadicalValue):
        r = x.to_gauss_rat()
        if r is None:
            return x
        x = r
    if isinstance(x, GaussRat):
        g = x.to_gauss_int()
        return g if g is not None else x
    return x
