"""Divisor-class calculus on ruled surfaces.

A ruled surface here is a P^1-bundle over a smooth curve of genus q with a
section h of minimal self-intersection -e and fiber f; the Picard lattice is
Z<h, f> with h^2 = -e, h.f = 1, f^2 = 0.  q = 0 gives the Hirzebruch surface
F_e.  The module provides the intersection pairing, canonical classes,
adjunction genus, embedding degrees, and a finite Diophantine search used to
certify case eliminations.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class SearchNotFiniteError(ValueError):
    """Raised when a divisor-class search is not bounded to a finite box."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer class a*h + b*f on a ruled surface."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __iter__(self):
        return iter((self.a, self.b))


@dataclass(frozen=True)
class RuledSurface:
    """P^1-bundle over a genus-q curve; h^2 = -e, h.f = 1, f^2 = 0.

    The Segre-Nagata bound e >= -q holds for every such surface, and
    Hirzebruch surfaces (q = 0) have e >= 0.
    """

    e: int
    q: int = 0

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError("base genus q must be nonnegative")
        if self.e < -self.q:
            raise ValueError(f"e = {self.e} violates the Segre-Nagata bound e >= -q = {-self.q}")


def intersect(d1: DivisorClass, d2: DivisorClass, s: RuledSurface) -> int:
    """Intersection number (a1*h + b1*f).(a2*h + b2*f) = -e*a1*a2 + a1*b2 + a2*b1."""
    return -s.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def canonical_class(s: RuledSurface) -> DivisorClass:
    """Canonical class -2h + (2q - 2 - e)f."""
    return DivisorClass(-2, 2 * s.q - 2 - s.e)


def adjunction_genus(c: DivisorClass, s: RuledSurface) -> int:
    """Arithmetic genus g of a curve in |c|, from 2g - 2 = C.(C + K)."""
    pairing = intersect(c, c + canonical_class(s), s)
    if pairing % 2:
        raise ValueError(f"lattice violation: C.(C+K) = {pairing} is odd")
    return pairing // 2 + 1


def embedding_degree(c: DivisorClass, hyperplane: DivisorClass, s: RuledSurface) -> int:
    """Degree of a curve in |c| under the embedding defined by |hyperplane|."""
    return intersect(c, hyperplane, s)


@dataclass(frozen=True)
class GenusSearch:
    """Constraints for a finite search over integer classes a*h + b*f.

    A class qualifies when its embedding degree matches `degree`, its
    adjunction genus matches `genus` (if given), and every linear band
    lo <= ca*a + cb*b <= hi holds (None bounds are open).  The search scans
    a over [-box, box] and solves the degree equation for b, so the
    hyperplane class must have a nonzero h-coefficient.
    """

    hyperplane: DivisorClass
    degree: int
    genus: int | None = None
    bands: tuple[tuple[int, int, int | None, int | None], ...] = field(default_factory=tuple)
    box: int = 1000


def eliminate_by_genus(search: GenusSearch, s: RuledSurface) -> list[DivisorClass]:
    """All integer classes meeting the search constraints, in lex order.

    An empty result certifies that no curve class satisfies the constraints.
    This is deliberately a brute-force box scan: it *is* the reference
    computation, cross-checked in the tests against an independent 2-d scan.
    """
    ha, hb = search.hyperplane.a, search.hyperplane.b
    if ha == 0:
        raise SearchNotFiniteError("search not finite: hyperplane class has no h-component")
    found = []
    for a in range(-search.box, search.box + 1):
        # degree equation: -e*a*ha + a*hb + ha*b = degree
        numerator = search.degree + s.e * a * ha - a * hb
        if numerator % ha:
            continue
        b = numerator // ha
        cls = DivisorClass(a, b)
        if search.genus is not None and adjunction_genus(cls, s) != search.genus:
            continue
        ok = True
        for ca, cb, lo, hi in search.bands:
            value = ca * a + cb * b
            if lo is not None and value < lo:
                ok = False
                break
            if hi is not None and value > hi:
                ok = False
                break
        if ok:
            found.append(cls)
    return sorted(found, key=lambda c: (c.a, c.b))


def disjointness_obstruction(classes: list[DivisorClass], s: RuledSurface) -> bool:
    """True when some pair of the classes has positive intersection number.

    Positive pairing means two members cannot be realized by disjoint curves,
    so a disjoint-union hypothesis is contradicted.
    """
    if len(classes) < 2:
        raise ValueError("need at least two classes")
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if intersect(classes[i], classes[j], s) > 0:
                return True
    return False
