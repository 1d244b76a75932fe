"""Rule and verdict types shared by the candidate filters and the classifier.

Rules come in two kinds.  ARITHMETIC rules are recomputed from the kernel
modules every time they fire; their recorded values carry the inputs and
outputs of those computations so a self-audit can replay them.  AXIOM rules
are geometric steps (Bertini arguments, spannedness of specific ideals,
secant-variety dimensions, ...) that the engine consumes as hypotheses; each
is toggleable so the arithmetic skeleton can be audited on its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class RuleKind(str, Enum):
    ARITHMETIC = "ARITHMETIC"
    AXIOM = "AXIOM"


class Status(str, Enum):
    SURVIVES = "SURVIVES"
    ELIMINATED = "ELIMINATED"
    AXIOM_ELIMINATED = "AXIOM-ELIMINATED"


@dataclass(frozen=True)
class Rule:
    id: str
    kind: RuleKind
    statement: str
    ref: str
    annotation: str | None = None


@dataclass
class TrailEntry:
    rule_id: str
    outcome: str  # "pass", "fail" or "hypothesis"
    values: dict

    def to_dict(self) -> dict:
        return {"rule": self.rule_id, "outcome": self.outcome, "values": self.values}


@dataclass
class Verdict:
    candidate: object
    status: Status
    trail: list[TrailEntry]
    witnesses: list[str] = field(default_factory=list)
    unresolved: bool = False

    @property
    def survives(self) -> bool:
        return self.status is Status.SURVIVES


_R = RuleKind.ARITHMETIC
_A = RuleKind.AXIOM

_CORPUS: tuple[Rule, ...] = (
    # -- component-level filters -------------------------------------------
    Rule("R-regime-genus", _R,
         "component genus matches the dualizing-twist regime: g = d + 1 for "
         "twist two, 2g - 2 = d for twist one",
         "serre-curve-genus"),
    Rule("R-plane-degree", _R,
         "a plane component is a plane-section curve: genus (d-1)(d-2)/2 and "
         "degree equal to one of the defining degrees",
         "plane-section-degrees"),
    Rule("A-no-plane", _A,
         "none of the five threefolds contains a 2-plane",
         "no-planes"),
    Rule("R-span3-cap", _R,
         "a component spanning a 3-space lies inside the degree-u linear "
         "section, so its degree is at most u",
         "linear-section-cap"),
    Rule("A-no-quartic-surface", _A,
         "on the (3,3) threefold a degree-8 extremal space curve would need a "
         "quartic surface inside the threefold, which does not exist",
         "quadric-quartic-exclusion"),
    Rule("R-section-match", _R,
         "a curve filling its linear section carries the section's "
         "complete-intersection degree and genus",
         "section-genus"),
    Rule("A-spannedness-h0", _A,
         "a spanned twisted ideal with a two-dimensional space of linear "
         "sections forces the curve to be the full linear-section curve",
         "ideal-spannedness"),
    Rule("R-genus-bound", _R,
         "component genus is at most the Castelnuovo bound for its degree and span",
         "castelnuovo-bound"),
    Rule("R-ideal-sections", _R,
         "for determinant twist one a spanned ideal needs at least two linear "
         "sections, so the span dimension is at most n - 2",
         "linear-system-count"),
    Rule("R-degree-cap", _R,
         "total curve degree respects the quadric-section degree cap",
         "degree-cap"),
    # -- degenerate (extension) route --------------------------------------
    Rule("R-ext-z", _R,
         "a degenerate curve comes from a twisted extension; the residual "
         "degree z = d - u must be 0 (split pair) or 3 (plane cubic)",
         "extension-residual"),
    Rule("A-ext-plane-cubic", _A,
         "three independent linear forms through the residual subscheme force "
         "it to be a plane curve; trivial dualizing sheaf then forces a cubic",
         "residual-planarity"),
    Rule("R-union-genus", _R,
         "disjoint-union genus bookkeeping: p_a = sum(g_i) - s + 1 (+ meets)",
         "union-genus"),
    # -- quintic, twist two -------------------------------------------------
    Rule("A-base-locus", _A,
         "three general quadric sections either cut a curve of degree at most "
         "eight or share a base surface of degree at most three",
         "quadric-base-locus"),
    Rule("R-ci-omega", _R,
         "a complete-intersection curve whose dualizing twist differs from "
         "the determinant twist is excluded",
         "ci-adjunction-twist"),
    Rule("R-mu-d", _R,
         "on a degree-3 base surface the intersection multiplicity satisfies "
         "mu * d = 15; only d = 15 admits the required genus d + 1",
         "scroll-multiplicity"),
    Rule("R-hirzebruch-F1", _R,
         "no divisor class on the smooth cubic scroll has embedding degree 15 "
         "and genus 16",
         "smooth-scroll-search"),
    Rule("R-cone-disjointness", _R,
         "on the cubic cone every pair of smoothness-band classes has "
         "positive pairing, so a multi-component curve cannot be disjoint",
         "cone-disjointness"),
    Rule("R-hirzebruch-F3", _R,
         "on the cubic cone the degree-15 smoothness band forces the class "
         "(5,15), whose genus 26 is not 16",
         "cone-scroll-search"),
    Rule("A-two-planes", _A,
         "a disjoint pair of plane sections whose planes meet in one external "
         "point is cut out by quadrics along the threefold",
         "plane-pair-spannedness"),
    Rule("A-three-planes", _A,
         "three pairwise disjoint plane sections are never cut out by "
         "quadrics along the threefold",
         "plane-triple-obstruction"),
    Rule("A-quadric-plane", _A,
         "a quadric surface plus an external plane is never cut out by "
         "quadrics along the threefold",
         "quadric-plane-obstruction"),
    Rule("R-surface-budget", _R,
         "the base-locus surface degree budget must cover the minimal surface "
         "degree of every component",
         "surface-degree-budget"),
    Rule("A-scroll-spannedness", _A,
         "for rank at least three the twisted dualizing sheaf of a smooth-"
         "scroll curve of degree 15 is not spanned",
         "scroll-spannedness",
         annotation=(
             "recorded discrepancy: the inequality 30a^2 - 31a + 60 <= 0 used "
             "by this elimination step has no integer solutions, while the "
             "lattice-derived inequality 3a^2 - 31a + 60 <= 0 is satisfied for "
             "a in [3, 7]; the step is therefore kept as an axiom, not an "
             "arithmetic rule"
         )),
    Rule("A-minimal-resolution", _A,
         "a connected plane-section curve yields a split bundle through the "
         "minimal free resolution of its ideal",
         "minimal-resolution-split"),
    # -- degree-8 threefold, twist two --------------------------------------
    Rule("R-x24-extremal", _R,
         "several components, each of degree at least 8, with total degree at "
         "most 16: exactly two degree-8 space sections",
         "extremal-pair"),
    Rule("A-section-pair", _A,
         "a transversal pair of codimension-2 linear sections is cut out by "
         "quadrics along the threefold",
         "section-pair-existence"),
    Rule("A-x24-three-quadrics", _A,
         "three disjoint quadric-section components are not cut out by "
         "quadrics (linear-projection argument)",
         "conic-triple-obstruction"),
    Rule("R-x24-si-degree", _R,
         "each base surface cuts its curve with the quartic: component degree "
         "is 4 * deg(S) with deg(S) in {2,...,7}",
         "surface-cut-degree"),
    Rule("R-adjunction-28-40", _R,
         "ruled-surface adjunction gives 2g - 2 in {28, 40} on the degree-3 "
         "and degree-4 base surfaces, never the required 2d in {24, 32}",
         "ruled-adjunction-table"),
    Rule("R-x24-s2-span5", _R,
         "a spanning component living beside others is capped by twice a "
         "residual surface degree, at most 12, below the genus floor 14",
         "residual-degree-cap"),
    Rule("R-quadric-cap", _R,
         "a curve cut out by quadrics in P^5 has degree at most 2^4 = 16",
         "quadric-ci-cap"),
    Rule("R-x24-mod4", _R,
         "a curve cut from a base surface by the quartic has degree 4*deg(S)",
         "quartic-cut-divisibility"),
    Rule("R-ci-residual", _R,
         "degree below 16 leaves a nonempty residual inside the four-quadric "
         "intersection; meeting it changes the dualizing twist",
         "ci-residual-meet"),
    Rule("A-ci-connected", _A,
         "complete-intersection curves are connected",
         "ci-connectedness"),
    Rule("A-deg-S-5", _A,
         "no degree-5 base surface: in both Delta-genus branches the twisted "
         "dualizing sheaf of the surface has sections with nonempty zero locus",
         "almost-minimal-surface"),
    Rule("A-deg-S-6", _A,
         "no degree-6 base surface: the trisecant count forces sectional "
         "genus 2 and the twisted dualizing sheaf has sections",
         "berzolari-sectional-genus"),
    Rule("A-linked-plane-7", _A,
         "no degree-7 base surface: every quadric through it contains the "
         "plane linked to it inside three quadrics",
         "cayley-bacharach-link"),
    # -- degree-9 threefold, twist two --------------------------------------
    Rule("A-harris-surface", _A,
         "genus meeting or exceeding the refined bound forces the curve onto "
         "a surface of low degree",
         "refined-bound-surface"),
    Rule("R-pi1-cut", _R,
         "the refined-bound surface is cut by the cubics: d <= 3 * deg(T)",
         "cubic-cut-cap"),
    Rule("A-delpezzo5", _A,
         "the degree-5 surface carrying the degree-15 curve is a weak del "
         "Pezzo surface with anticanonical twist -1",
         "quintic-delpezzo"),
    Rule("R-surface-cut-twist", _R,
         "surface dualizing twist plus cutting degree must equal the "
         "determinant twist",
         "surface-cut-twist"),
    Rule("R-liaison-18", _R,
         "linkage inside the (2,2,2,3) complete intersection forces the "
         "admissible piece to have degree 18",
         "liaison-degree"),
    Rule("R-s-omega", _R,
         "a degree-8 base surface is a three-quadric complete intersection "
         "with trivial dualizing twist",
         "ci-surface-twist"),
    Rule("R-cut-cap", _R,
         "curve degree is at most 3 times the base-surface degree (deg <= 8)",
         "cubic-cut-budget"),
    Rule("R-dim3-degree", _R,
         "a threefold base component cuts a curve of degree 9 * deg",
         "threefold-cut-degree"),
    Rule("A-x33-cubic-3fold", _A,
         "the degree-3 threefold route dies: the twisted dualizing sheaf of a "
         "desingularization has sections with nonempty zero locus",
         "cubic-threefold-sections"),
    Rule("A-berzolari", _A,
         "the trisecant-line count forces the general hyperplane section of "
         "the degree-6 base surface to have genus 2",
         "berzolari-trisecant-count"),
    Rule("R-ruled-38", _R,
         "degree-17 curve on the degree-6 ruled surface: adjunction gives "
         "2g - 2 = 38 for every even invariant e, never the required 34",
         "genus2-scroll-adjunction"),
    Rule("A-secant-dim", _A,
         "the secant variety of an integral nondegenerate curve in P^5 has "
         "dimension 3, so it meets every 3-space",
         "secant-variety-dimension"),
    Rule("R-ruled-58", _R,
         "triple-section case of the degree-16 curve: -3e + 6q + 58 = 32 has "
         "no even solution with e >= -q and q <= 2",
         "scroll-case-equation-16"),
    Rule("R-clifford", _R,
         "double-section case of the degree-16 curve: a primitive pencil of "
         "Clifford index 2 gives h0 = 8 sections, but genus 17 exceeds the "
         "Castelnuovo bound 12 in P^7",
         "clifford-castelnuovo",
         annotation=(
             "recorded discrepancy: the genus bookkeeping uses 2g - 2 = 32, "
             "i.e. g = 17; the variant relation 2g + 2 = 32 appearing in one "
             "intermediate step is recorded here and not used"
         )),
    Rule("R-ruled-e2q20", _R,
         "triple-section case of the degree-18 curve: 2q + 16 - e = 36 forces "
         "e = 2q - 20 < -q, infeasible for q <= 2",
         "scroll-case-equation-18"),
    Rule("A-ample-connected", _A,
         "an ample divisor on the carrier surface is connected, so the curve "
         "cannot be one component among several",
         "ample-connectedness"),
    Rule("A-x33-span-overlap", _A,
         "overlapping component spans put a reducible quadric into the base "
         "locus of the twisted ideal",
         "span-overlap-obstruction"),
    Rule("A-x33-two-ci", _A,
         "two degree-12 components would make the two carrier surfaces a "
         "three-quadric complete intersection, leaving too few quadrics",
         "quadric-count-pair"),
    Rule("A-x33-three-sections", _A,
         "three space-section components force every quadric through the "
         "curve to be a cone over one quadric surface, leaving one section",
         "triple-section-cones"),
    Rule("A-x33-s2-deg8", _A,
         "a degree-8 base surface beside a linear span gives quadric counts "
         "3 versus at most 2, impossible for a disconnected curve",
         "quadric-count-deg8"),
    Rule("R-x33-surface-budget", _R,
         "the three-quadric intersection (degree 8) must hold the carrier "
         "surfaces of all non-section components",
         "surface-degree-budget-9"),
    # -- witnesses / registry-backed pass rules ------------------------------
    Rule("A-plane-in-quadric", _A,
         "the unique quadric through the threefold contains planes, and a "
         "general one cuts a smooth plane quartic on the quartic equation",
         "plane-in-quadric-existence"),
    Rule("R-resolution-shape", _R,
         "Chern numbers and rank window of a twisted free resolution shape",
         "resolution-shape"),
    Rule("R-ext-split", _R,
         "split bundles O(a) + O(b) contribute c2 = a*b*u",
         "split-pairs"),
)

RULES: dict[str, Rule] = {rule.id: rule for rule in _CORPUS}
RULE_ORDER: dict[str, int] = {rule.id: i for i, rule in enumerate(_CORPUS)}


def get_rule(rule_id: str) -> Rule:
    return RULES[rule_id]


def annotations() -> list[dict]:
    """The recorded discrepancy annotations, in corpus order."""
    return [
        {"rule": rule.id, "note": rule.annotation}
        for rule in _CORPUS
        if rule.annotation
    ]


class Trail:
    """Mutable trail builder honoring a set of disabled rule ids."""

    def __init__(self, disabled: frozenset[str] = frozenset()):
        self.entries: list[TrailEntry] = []
        self.disabled = disabled

    def active(self, rule_id: str) -> bool:
        if rule_id not in RULES:
            raise KeyError(f"unknown rule {rule_id}")
        return rule_id not in self.disabled

    def fire(self, rule_id: str, ok: bool, **values) -> bool | None:
        """Record a pass/fail firing; returns None when the rule is disabled."""
        if not self.active(rule_id):
            return None
        self.entries.append(TrailEntry(rule_id, "pass" if ok else "fail", values))
        return ok

    def hypothesis(self, rule_id: str, **values) -> bool:
        """Record an axiom hypothesis; returns False when disabled."""
        if not self.active(rule_id):
            return False
        self.entries.append(TrailEntry(rule_id, "hypothesis", values))
        return True

    def failing_kinds(self) -> set[RuleKind]:
        return {RULES[e.rule_id].kind for e in self.entries if e.outcome == "fail"}
