"""Genus bounds and complete-intersection curve invariants.

Castelnuovo's bound pi(d, r) caps the arithmetic genus of an integral
nondegenerate degree-d curve in P^r; pi_one is the refinement for curves not
lying on a surface of minimal degree.  Both are used as pruning rules by the
classifier.
"""

from __future__ import annotations

from typing import NamedTuple

from .chow import CicyContext


class UnsupportedBoundError(ValueError):
    """Raised when a refined bound is requested outside its verified range."""


def castelnuovo_pi(d: int, r: int) -> int:
    """Castelnuovo bound for integral nondegenerate degree-d curves in P^r.

    With m = floor((d-1)/(r-1)) and eps = (d-1) - m(r-1):
    pi(d, r) = m(m-1)(r-1)/2 + m*eps.  Requires d >= r >= 3; plane curves
    have the exact genus formula instead (see plane_genus).
    """
    if r < 3:
        raise ValueError("castelnuovo_pi needs r >= 3; use plane_genus for r = 2")
    if d < r:
        raise ValueError(f"degenerate for this span: degree {d} < span {r}")
    m, eps = divmod(d - 1, r - 1)
    return m * (m - 1) * (r - 1) // 2 + m * eps


#: Verified values of the refined bound, keyed by (degree, span).
#: The main term m1(m1-1)r/2 + m1*eps1 with d - 1 = m1*r + eps1 accounts for
#: the first and third entries (correction term 0); the correction term's
#: general form is not pinned down here, so other inputs are refused.
_PI_ONE: dict[tuple[int, int], int] = {
    (11, 4): 8,
    (14, 5): 11,
    (15, 5): 16,
}


def pi_one(d: int, r: int) -> int:
    """Refined genus bound for curves on no surface of minimal degree r-1.

    Implemented only on the anchored inputs; anything else raises rather than
    risk a silently wrong extrapolation.
    """
    if d < r or r < 3:
        raise ValueError(f"degenerate for this span: degree {d} < span {r}")
    try:
        return _PI_ONE[(d, r)]
    except KeyError:
        raise UnsupportedBoundError(
            f"unsupported: refined bound not verified at (d, r) = ({d}, {r})"
        ) from None


def plane_genus(d: int) -> int:
    """Genus (d-1)(d-2)/2 of a smooth plane curve of degree d."""
    if d < 1:
        raise ValueError("degree must be positive")
    return (d - 1) * (d - 2) // 2


class CurveInvariants(NamedTuple):
    degree: int
    omega_twist: int
    genus: int


def ci_curve_invariants(degrees: list[int], n: int) -> CurveInvariants:
    """Degree, dualizing twist and genus of a complete-intersection curve.

    A curve cut by n-1 hypersurfaces of the given degrees in P^n has
    degree = prod(d_i), omega = O(sum(d_i) - n - 1) by adjunction, and
    2g - 2 = degree * omega_twist.
    """
    if len(degrees) != n - 1:
        raise ValueError(
            f"a curve in P^{n} needs {n - 1} hypersurface degrees, got {len(degrees)}"
        )
    if any(d < 1 for d in degrees):
        raise ValueError("hypersurface degrees must be positive")
    degree = 1
    for d in degrees:
        degree *= d
    omega_twist = sum(degrees) - n - 1
    two_g_minus_2 = degree * omega_twist
    if two_g_minus_2 % 2:
        raise ValueError("parity violation: degree * omega_twist must be even")
    return CurveInvariants(degree, omega_twist, two_g_minus_2 // 2 + 1)


def max_curve_degree(ctx: CicyContext, c1: int, rank: int) -> int:
    """Degree cap for the curve associated to a spanned bundle with det O(c1).

    The curve sits in the intersection of two sections of O(c1), so its
    degree is at most c1^2 * u.  For rank 2 and c1 = 2 the top three values
    are excluded (the extremes force the wrong dualizing twist), giving
    4u - 3.  For c1 = 1 the cap is the degree u of a bi-hyperplane section.
    """
    if c1 == 1:
        return ctx.u
    if c1 == 2:
        if rank == 2:
            return 4 * ctx.u - 3
        return 4 * ctx.u
    raise ValueError(f"unsupported first Chern class {c1}; only 1 and 2 are in range")
