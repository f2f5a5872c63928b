"""Maps between Pythagorean triples and arithmetic triplets of squares.

Over the rational integers the correspondence is one-to-one: the
hypotenuse square of A*A + B*B = C*C is the middle square of the
progression (A-B)^2, C^2, (A+B)^2, and conversely integral half-sums
recover the legs. Over the Gaussian integers the triple symmetrizes to
alpha^2 + beta^2 + gamma^2 = 0, any component can play hypotenuse, and
the correspondence becomes three-to-one.

Equivalence comes in two strengths throughout:

* strict keys fold component order and per-component signs;
* class keys additionally fold componentwise conjugation (conjugating
  every component maps valid identities to valid identities, and some
  printed forms of the same triplet differ exactly by this).

Outputs are never conjugate-canonicalized; only the checkers use the
coarse classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exact import (
    GaussInt,
    GaussRat,
    RadicalValue,
    Scalar,
    as_scalar,
    gauss_sqrt,
    is_gaussian_integer,
    isqrt,
    normalize_sign,
    scalar_half,
    scalar_times_i,
    simplify_scalar,
    to_gauss_int,
)


class NotPythagorean(ValueError):
    """A*A + B*B != C*C."""


class NotArithmetic(ValueError):
    """The three squares are not evenly spaced (nonzero defect)."""


class NotSquare(ValueError):
    """A value that must be a perfect square is not one."""


class TrivialTriple(ValueError):
    """A zero component makes the triple degenerate."""


class GaussianParity(ValueError):
    """Half-sums of the roots are not Gaussian integers."""


@dataclass(frozen=True)
class LegTriple:
    """Pythagorean triple in leg form: A*A + B*B = C*C exactly."""

    A: GaussInt
    B: GaussInt
    C: GaussInt

    def __post_init__(self):
        for name in ("A", "B", "C"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, GaussInt(v))
        if self.A.square() + self.B.square() != self.C.square():
            raise NotPythagorean(f"{self.A}^2 + {self.B}^2 != {self.C}^2")

    def __str__(self):
        return f"({self.A}, {self.B}, {self.C})"


@dataclass(frozen=True)
class ZeroSumTriple:
    """Triple with alpha^2 + beta^2 + gamma^2 = 0, components nonzero.

    Components are stored sign-normalized; use :meth:`of` to build from
    raw values.
    """

    alpha: GaussInt
    beta: GaussInt
    gamma: GaussInt

    def __post_init__(self):
        for c in self.components:
            if c.is_zero():
                raise TrivialTriple("zero component in zero-sum triple")
            if normalize_sign(c) != c:
                raise ValueError("components must be sign-normalized; use ZeroSumTriple.of")
        if not (self.alpha.square() + self.beta.square() + self.gamma.square()).is_zero():
            raise ValueError("components do not satisfy the zero-sum identity")

    @classmethod
    def of(cls, alpha, beta, gamma) -> ZeroSumTriple:
        comps = []
        for c in (alpha, beta, gamma):
            if isinstance(c, int):
                c = GaussInt(c)
            comps.append(normalize_sign(c))
        return cls(*comps)

    @property
    def components(self) -> tuple[GaussInt, GaussInt, GaussInt]:
        return (self.alpha, self.beta, self.gamma)

    def conjugate(self) -> ZeroSumTriple:
        return ZeroSumTriple.of(*(c.conjugate() for c in self.components))

    def strict_key(self):
        """Class under component order and signs."""
        return tuple(sorted((c.re, c.im) for c in self.components))

    def class_key(self):
        """Class under order, signs and componentwise conjugation."""
        plain = self.strict_key()
        conj = tuple(sorted((normalize_sign(c.conjugate()).re, normalize_sign(c.conjugate()).im) for c in self.components))
        return min(plain, conj)

    def __str__(self):
        return f"({self.alpha}, {self.beta}, {self.gamma})"


@dataclass(frozen=True)
class ArithTriplet:
    """Roots (left, center, right) whose squares aim to be evenly spaced.

    The defect left^2 + right^2 - 2*center^2 measures the failure: zero
    exactly when the squares form an arithmetic progression. Triplets
    with nonzero defect are first-class citizens here (kinked grid lines
    produce them), so construction never validates.
    """

    left: Scalar
    center: Scalar
    right: Scalar

    def __post_init__(self):
        for name in ("left", "center", "right"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @property
    def roots(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.left, self.center, self.right)

    @cached_property
    def values(self) -> tuple[Scalar, Scalar, Scalar]:
        return tuple(simplify_scalar(r.square()) for r in self.roots)  # type: ignore[return-value]

    @cached_property
    def defect(self) -> Scalar:
        lv, cv, rv = self.values
        return simplify_scalar(lv + rv - (cv + cv))

    @property
    def is_arithmetic(self) -> bool:
        return self.defect.is_zero()

    @property
    def integral(self) -> bool:
        """True when all three roots are Gaussian integers."""
        return all(is_gaussian_integer(r) for r in self.roots)

    def as_gauss_ints(self) -> tuple[GaussInt, GaussInt, GaussInt] | None:
        out = tuple(to_gauss_int(r) for r in self.roots)
        return None if any(r is None for r in out) else out  # type: ignore[return-value]

    def conjugate(self) -> ArithTriplet:
        return ArithTriplet(*(r.conjugate() for r in self.roots))

    def strict_key(self):
        """Class under left/right swap and per-component signs (Gaussian roots only)."""
        g = self.as_gauss_ints()
        if g is None:
            raise TypeError("strict_key needs Gaussian-integer roots")
        l, c, r = (normalize_sign(x) for x in g)
        lt, ct, rt = (l.re, l.im), (c.re, c.im), (r.re, r.im)
        return min((lt, ct, rt), (rt, ct, lt))

    def class_key(self):
        """strict_key coarsened by componentwise conjugation."""
        return min(self.strict_key(), self.conjugate().strict_key())

    def __str__(self):
        l, c, r = self.roots
        return f"[{l} | {c} | {r}]"


def same_triplet_class(a: ArithTriplet, b: ArithTriplet) -> bool:
    return a.class_key() == b.class_key()


# -- integer correspondence -------------------------------------------------


def pyth_to_triplet_int(t: LegTriple) -> ArithTriplet:
    """(A, B, C) -> roots (|A - B|, C, A + B); the squares are evenly spaced.

    Integer triples only; the Gaussian direction goes through
    :func:`to_zero_sum` and :func:`triplets_from_triple`.
    """
    for leg in (t.A, t.B, t.C):
        if not leg.is_real():
            raise NotPythagorean("integer correspondence needs rational integer legs")
    left = GaussInt(abs(t.A.re - t.B.re))
    right = GaussInt(abs(t.A.re + t.B.re))
    center = normalize_sign(t.C)
    return ArithTriplet(left, center, right)


def triplet_to_pyth_int(v_left: int, v_center: int, v_right: int) -> LegTriple:
    """Values (L^2, C^2, R^2) -> legs ((L+R)/2, |L-R|/2, C).

    The halves are integral automatically: L^2 + R^2 = 2*C^2 forces L and
    R to share parity. Raises NotSquare / NotArithmetic when the values
    are not three squares in progression.
    """
    roots = []
    for v in (v_left, v_center, v_right):
        if v < 0:
            raise NotSquare(f"{v} is negative")
        r, exact = isqrt(v)
        if not exact:
            raise NotSquare(f"{v} is not a perfect square")
        roots.append(r)
    L, C, R = roots
    if v_left + v_right != 2 * v_center:
        raise NotArithmetic(f"{v_left} + {v_right} != 2*{v_center}")
    return LegTriple(
        GaussInt((L + R) // 2),
        GaussInt(abs(L - R) // 2),
        GaussInt(C),
    )


# -- Gaussian correspondence -------------------------------------------------


def to_zero_sum(t: LegTriple) -> ZeroSumTriple:
    """Collect A*A + B*B = C*C into C^2 + (iA)^2 + (iB)^2 = 0."""
    i = GaussInt(0, 1)
    return ZeroSumTriple.of(t.C, i * t.A, i * t.B)


def triplets_from_triple(z: ZeroSumTriple) -> tuple[ArithTriplet, ArithTriplet, ArithTriplet]:
    """The three triplets of a zero-sum triple, one per hypotenuse choice.

    For hypotenuse h with remaining components p, q (input order), the
    roots are (i*(p - q), h, i*(p + q)), each sign-normalized. All three
    have defect zero.
    """
    comps = z.components
    out = []
    for idx in range(3):
        h = comps[idx]
        p, q = (comps[j] for j in range(3) if j != idx)
        left = normalize_sign(scalar_times_i(p - q))
        right = normalize_sign(scalar_times_i(p + q))
        out.append(ArithTriplet(left, h, right))
    return tuple(out)  # type: ignore[return-value]


@dataclass(frozen=True)
class RationalZeroSum:
    """Zero-sum components that failed Gaussian integrality (opt-in result)."""

    alpha: GaussRat
    beta: GaussRat
    gamma: GaussRat
    integral: bool = False


def triplet_to_triple(t: ArithTriplet, *, allow_rational: bool = False) -> ZeroSumTriple | RationalZeroSum:
    """Inverse of the 3-to-1 map: the triple this triplet came from.

    Roots (L, Z, R) with defect zero map to (Z, i*(L+R)/2, i*(R-L)/2);
    unfolding the output with hypotenuse Z reproduces the input up to
    signs. Whether L^2 + R^2 = 2*Z^2 forces the halves integral over
    Z[i] is treated as a checked property, never assumed: non-integral
    halves raise GaussianParity, or come back as a flagged
    RationalZeroSum when allow_rational is set.
    """
    if not t.defect.is_zero():
        raise NotArithmetic(f"defect {t.defect} != 0")
    L, Z, R = t.roots
    p = scalar_times_i(scalar_half(L + R))
    q = scalar_times_i(scalar_half(R - L))
    comps = []
    for x in (Z, p, q):
        g = to_gauss_int(x)
        comps.append(g)
    if any(c is None for c in comps):
        if not allow_rational:
            raise GaussianParity("half-sums of roots are not Gaussian integers")
        rat = tuple(normalize_sign(_as_rat(x)) for x in (Z, p, q))
        return RationalZeroSum(*rat)
    return ZeroSumTriple.of(*comps)  # type: ignore[arg-type]


def _as_rat(x: Scalar) -> GaussRat:
    x = as_scalar(x)
    if isinstance(x, GaussInt):
        return GaussRat.from_gauss_int(x)
    if isinstance(x, GaussRat):
        return x
    r = x.to_gauss_rat()
    if r is None:
        raise TypeError("radical value is not rational")
    return r


# -- siblings ----------------------------------------------------------------


@dataclass(frozen=True)
class SiblingPair:
    older: ArithTriplet
    younger: ArithTriplet
    integral: bool


def siblings_of_triplet(x: Scalar, z: Scalar, y: Scalar) -> SiblingPair:
    """The two triplets sharing this one's generating triple.

    With s = (x + y)/2 and w = (x - y)/2:

    * older   = (z + i*w, s, z - i*w)   (sum at the center)
    * younger = (z + i*s, w, z - i*s)   (difference at the center)

    Both carry defect exactly -(x^2 + y^2 - 2 z^2), whether or not the
    input was a true triplet. Non-integral halves are flagged, not
    rejected; mixed radicands raise MixedRadicals and the caller picks
    the floating backend.
    """
    x, z, y = as_scalar(x), as_scalar(z), as_scalar(y)
    s = scalar_half(x + y)
    w = scalar_half(x - y)
    iw = scalar_times_i(w)
    i_s = scalar_times_i(s)
    older = ArithTriplet(z + iw, s, z - iw)
    younger = ArithTriplet(z + i_s, w, z - i_s)
    integral = all(is_gaussian_integer(v) for v in (s, w, z))
    return SiblingPair(older, younger, integral)


def sibling_defect_from_values(x_sq: Scalar, z_sq: Scalar, y_sq: Scalar) -> Scalar:
    """Exact sibling defect 2*z^2 - (x^2 + y^2), straight from the values.

    Algebraically identical to minus the input defect, and computable
    even when the sibling roots themselves need mixed radicands.
    """
    return simplify_scalar((z_sq + z_sq) - (x_sq + y_sq))
