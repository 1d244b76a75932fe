"""Exact arithmetic in the truncated Chow ring of a CICY threefold.

Everything here is a pure function of immutable values and all arithmetic is
exact rational (`fractions.Fraction`); no floating point is used anywhere.
The working ring is Q[H]/(H^4), where H is the hyperplane class of the
ambient projective space restricted to the threefold.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

#: The five multidegrees of smooth complete-intersection Calabi-Yau threefolds.
KNOWN_MULTIDEGREES: tuple[tuple[int, ...], ...] = (
    (5,),
    (2, 4),
    (3, 3),
    (2, 2, 3),
    (2, 2, 2, 2),
)


class NotInvertibleError(ValueError):
    """Raised when inverting a truncated class with zero constant term."""


def _comb0(top: int, bottom: int) -> int:
    """Binomial coefficient with C(top, bottom) = 0 whenever top < bottom."""
    if top < bottom:
        return 0
    return math.comb(top, bottom)


@dataclass(frozen=True)
class CicyContext:
    """One complete-intersection Calabi-Yau threefold, given by its multidegree.

    In strict mode (the default) only the five smooth CICY multidegrees are
    accepted.  Lax mode accepts any multidegree satisfying the Calabi-Yau
    condition (degrees summing to ambient dimension + 1) and warns when the
    floor-quarter encoding of the ambient dimension breaks down.
    """

    multidegree: tuple[int, ...]
    strict: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        md = tuple(sorted(int(d) for d in self.multidegree))
        object.__setattr__(self, "multidegree", md)
        if not md or any(d < 1 for d in md):
            raise ValueError("multidegree must be a nonempty list of positive integers")
        if self.strict:
            if md not in KNOWN_MULTIDEGREES:
                names = ", ".join(",".join(map(str, m)) for m in KNOWN_MULTIDEGREES)
                raise ValueError(f"unknown threefold {md}; valid multidegrees: {names}")
            assert self.v + 4 == self.ambient_dim + 1
            return
        if sum(md) != self.ambient_dim + 1:
            raise ValueError(
                f"multidegree {md} is not Calabi-Yau: degrees must sum to "
                f"{self.ambient_dim + 1} in P^{self.ambient_dim}"
            )
        if self.v + 4 != self.ambient_dim + 1:
            warnings.warn(
                f"multidegree {md}: floor(u/4) + 4 != ambient dimension + 1; "
                "the Euler-characteristic formula is unverified here",
                stacklevel=2,
            )

    @property
    def ambient_dim(self) -> int:
        """Dimension n of the ambient projective space (codimension + 3)."""
        return len(self.multidegree) + 3

    @property
    def u(self) -> int:
        """Degree of the threefold, the product of the defining degrees."""
        u = 1
        for d in self.multidegree:
            u *= d
        return u

    @property
    def v(self) -> int:
        return self.u // 4

    def label(self) -> str:
        return ",".join(str(d) for d in self.multidegree)

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"X_{{{self.label()}}}"


QUINTIC = CicyContext((5,))
X24 = CicyContext((2, 4))
X33 = CicyContext((3, 3))
X223 = CicyContext((2, 2, 3))
X2222 = CicyContext((2, 2, 2, 2))

ALL_CONTEXTS = (QUINTIC, X24, X33, X223, X2222)


@dataclass(frozen=True)
class TruncatedClass:
    """Polynomial a0 + a1*H + a2*H^2 + a3*H^3 with rational coefficients, H^4 = 0."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != 4:
            raise ValueError("a truncated class has exactly 4 coefficients")

    @classmethod
    def of(cls, *coeffs) -> "TruncatedClass":
        padded = tuple(coeffs) + (0,) * (4 - len(coeffs))
        return cls(tuple(Fraction(c) for c in padded))

    @classmethod
    def unit(cls) -> "TruncatedClass":
        return cls.of(1)

    @classmethod
    def line(cls, twist: int) -> "TruncatedClass":
        """Total Chern class 1 + t*H of the line bundle O(t)."""
        return cls.of(1, twist)

    def __add__(self, other: "TruncatedClass") -> "TruncatedClass":
        return TruncatedClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedClass") -> "TruncatedClass":
        return TruncatedClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedClass") -> "TruncatedClass":
        a, b = self.coeffs, other.coeffs
        return TruncatedClass(
            (
                a[0] * b[0],
                a[0] * b[1] + a[1] * b[0],
                a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
                a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
            )
        )

    def invert(self) -> "TruncatedClass":
        a = self.coeffs
        if a[0] == 0:
            raise NotInvertibleError("not invertible: constant term is zero")
        b0 = 1 / Fraction(a[0])
        b1 = -(a[1] * b0) / a[0]
        b2 = -(a[1] * b1 + a[2] * b0) / a[0]
        b3 = -(a[1] * b2 + a[2] * b1 + a[3] * b0) / a[0]
        return TruncatedClass((b0, b1, b2, b3))


def ring_mul(x: TruncatedClass, y: TruncatedClass) -> TruncatedClass:
    """Product in Q[H]/(H^4); commutative and associative with unit (1,0,0,0)."""
    return x * y


def ring_invert(x: TruncatedClass) -> TruncatedClass:
    """Two-sided inverse under ring_mul; requires a nonzero constant term."""
    return x.invert()


@dataclass(frozen=True)
class BundleInvariants:
    """Rank and Chern numbers of a bundle, in the curve-degree convention.

    c2 is the degree of the associated curve in the ambient projective space,
    i.e. the H^2-coefficient of the Chern class times the threefold degree u.
    """

    rank: int
    c1: int
    c2: int
    c3: int | None = None

    def as_pair(self) -> tuple[int, int]:
        return (self.c1, self.c2)


def _integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ValueError(f"{what} is not an integer: {x}")
    return int(x)


def chern_from_resolution(
    sub_twists: list[int], quot_twists: list[int], ctx: CicyContext
) -> BundleInvariants:
    """Invariants of the bundle E in 0 -> (+)O(s_i) -> (+)O(q_j) -> E -> 0.

    By the Whitney formula c(E) = prod(1 + q_j H) / prod(1 + s_i H), truncated
    in degree 3.  The same arithmetic computes kernels 0 -> E -> (+)O(q_j) ->
    (+)O(s_i) -> 0, since only the Chern-class quotient matters.
    """
    rank = len(quot_twists) - len(sub_twists)
    if rank < 1:
        raise ValueError("rank <= 0: need more quotient twists than sub twists")
    total = TruncatedClass.unit()
    for q in quot_twists:
        total = total * TruncatedClass.line(q)
    subs = TruncatedClass.unit()
    for s in sub_twists:
        subs = subs * TruncatedClass.line(s)
    c = total * subs.invert()
    c1 = _integer(c.coeffs[1], "c1")
    c2 = _integer(c.coeffs[2] * ctx.u, "c2")
    c3 = _integer(c.coeffs[3] * ctx.u, "c3")
    return BundleInvariants(rank=rank, c1=c1, c2=c2, c3=c3)


def chern_of_extension(a: int, b: int, z_degree: int, ctx: CicyContext) -> BundleInvariants:
    """Rank-2 invariants of an extension 0 -> O(a) -> E -> I_Z(b) -> 0.

    Z is a curve of degree z_degree (possibly empty); c2 picks up the degree
    of Z on top of the split part: c2 = a*b*u + deg(Z).
    """
    if z_degree < 0:
        raise ValueError("z_degree must be nonnegative")
    return BundleInvariants(rank=2, c1=a + b, c2=a * b * ctx.u + z_degree)


def chi_rank2(ctx: CicyContext, c1: int, c2: int) -> Fraction:
    """Euler characteristic of a rank-2 bundle with Chern numbers (c1, c2).

    chi = (u/6)c1^3 - c1*c2/2 + (c1/12)(12(v+4) - 2u) with v = floor(u/4);
    on the five CICYs v + 4 equals the ambient dimension + 1.
    """
    u, v = ctx.u, ctx.v
    return (
        Fraction(u, 6) * c1**3
        - Fraction(c1 * c2, 2)
        + Fraction(c1, 12) * (12 * (v + 4) - 2 * u)
    )


def twist_rank2(c1: int, c2: int, t: int, ctx: CicyContext) -> tuple[int, int]:
    """Chern numbers of E(t) for a rank-2 bundle E: (c1 + 2t, c2 + u*t*c1 + u*t^2)."""
    return (c1 + 2 * t, c2 + ctx.u * t * c1 + ctx.u * t * t)


def h0_line_bundle(ctx: CicyContext, t: int) -> int:
    """Number of global sections of O_X(t), via inclusion-exclusion.

    Sections of O(t) on the ambient space restrict onto X with kernel cut by
    the defining equations; alternating over subsets S of the multidegree:
    sum (-1)^|S| C(n + t - sum(S), n), binomials with negative top being 0.
    """
    if t < 0:
        return 0
    n = ctx.ambient_dim
    md = ctx.multidegree
    total = 0
    for size in range(len(md) + 1):
        for subset in combinations(md, size):
            total += (-1) ** size * _comb0(n + t - sum(subset), n)
    return total


def max_rank_no_trivial(sub_twists: list[int], ctx: CicyContext) -> int:
    """Largest rank of a globally generated quotient, with no trivial factor,
    of a direct sum of trivial bundles by (+)O(s_i) with all s_i < 0.

    Equals sum_i h0(O_X(-s_i)) minus the number of sub twists.
    """
    if not sub_twists or any(s >= 0 for s in sub_twists):
        raise ValueError("all sub twists must be negative")
    return sum(h0_line_bundle(ctx, -s) for s in sub_twists) - len(sub_twists)


def context_from_label(label: str, strict: bool | None = None) -> CicyContext:
    """Parse a threefold label like "5", "2,4" or the degree alias "X9"."""
    text = label.strip()
    aliases = {
        "X5": (5,),
        "X8": (2, 4),
        "X9": (3, 3),
        "X12": (2, 2, 3),
        "X16": (2, 2, 2, 2),
    }
    if text.upper() in aliases:
        md = aliases[text.upper()]
    else:
        try:
            md = tuple(int(part) for part in text.replace(" ", "").split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse threefold label {label!r}") from exc
    if strict is None:
        return CicyContext(md)
    return CicyContext(md, strict=strict)
