"""Named verification checks: anchor values, property suites and the
classification equalities, grouped by module for the command-line runner."""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import bounds, classifier, constructions
from .chow import (
    ALL_CONTEXTS,
    QUINTIC,
    X24,
    X33,
    X223,
    TruncatedClass,
    chern_from_resolution,
    chern_of_extension,
    chi_rank2,
    h0_line_bundle,
    max_rank_no_trivial,
    ring_invert,
    ring_mul,
    twist_rank2,
)
from .constructions import incidence_dimension_check, required_genus, union_genus
from .ruled import (
    DivisorClass,
    GenusSearch,
    RuledSurface,
    adjunction_genus,
    canonical_class,
    disjointness_obstruction,
    eliminate_by_genus,
    embedding_degree,
    intersect,
)
from .verdicts import RULES, RuleKind, Status


class CheckFailure(AssertionError):
    pass


def _eq(computed, expected, label: str) -> str:
    if computed != expected:
        raise CheckFailure(f"{label}: expected {expected!r}, got {computed!r}")
    return f"{label} = {expected!r}"


def _true(condition: bool, label: str) -> str:
    if not condition:
        raise CheckFailure(label)
    return label


# --------------------------------------------------------------------------
# chow
# --------------------------------------------------------------------------


def check_chi_hyperplane_oracle() -> str:
    """chi(O(1) + O) doubles to the ambient section count on all five."""
    out = []
    for ctx in ALL_CONTEXTS:
        out.append(_eq(chi_rank2(ctx, 1, 0), Fraction(ctx.ambient_dim + 1),
                       f"chi({ctx.label()},1,0)"))
    return "; ".join(out)


def check_chi_trivial_zero() -> str:
    for ctx in ALL_CONTEXTS:
        _eq(chi_rank2(ctx, 0, 0), Fraction(0), f"chi({ctx.label()},0,0)")
    return "chi(ctx,0,0) = 0 on all five threefolds"


def check_chi_twisted_pair() -> str:
    return _eq(chi_rank2(QUINTIC, 2, 5), Fraction(10), "chi(5,2,5)")


def check_ring_examples() -> str:
    a = TruncatedClass.of(1, 1) * TruncatedClass.of(1, 1)
    _eq(a.coeffs, TruncatedClass.of(1, 2, 1).coeffs, "(1+H)^2")
    b = TruncatedClass.of(1, 2, 4, 8) * TruncatedClass.of(1, -2)
    _eq(b.coeffs, TruncatedClass.unit().coeffs, "(1,2,4,8)*(1,-2,0,0)")
    inv = ring_invert(TruncatedClass.of(1, -2))
    _eq(inv.coeffs, TruncatedClass.of(1, 2, 4, 8).coeffs, "1/(1-2H)")
    inv2 = ring_invert(TruncatedClass.of(1, -1))
    return _eq(inv2.coeffs, TruncatedClass.of(1, 1, 1, 1).coeffs, "1/(1-H)")


def check_ring_inverse_roundtrip() -> str:
    rng = random.Random(20260811)
    for _ in range(1000):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        if coeffs[0] == 0:
            coeffs[0] = Fraction(1)
        x = TruncatedClass(tuple(coeffs))
        _eq(ring_mul(x, ring_invert(x)).coeffs, TruncatedClass.unit().coeffs,
            "x * x^-1")
        _eq(ring_mul(ring_invert(x), x).coeffs, TruncatedClass.unit().coeffs,
            "x^-1 * x")
    return "1000 random units invert to both sides"


def check_resolution_chern() -> str:
    cases = [
        (([-2], [0, 0, 0, 0], QUINTIC), (3, 2, 20)),
        (([-1], [0, 0, 0, 0, 0], QUINTIC), (4, 1, 5)),
        (([], [0, 0], QUINTIC), (2, 0, 0)),
        (([-1], [0, 0, 0, 1], QUINTIC), (3, 2, 10)),
        (([-1, -1], [0, 0, 0, 0, 0], QUINTIC), (3, 2, 15)),
    ]
    for (sub, quot, ctx), expected in cases:
        inv = chern_from_resolution(sub, quot, ctx)
        _eq((inv.rank, inv.c1, inv.c2), expected, f"resolution {sub}->{quot}")
    return "resolution Chern data: c2 in {20, 5, 0, 10, 15}"


def check_resolution_additivity() -> str:
    rng = random.Random(7)
    for _ in range(200):
        sub = [rng.randint(-3, -1) for _ in range(rng.randint(0, 2))]
        quot = [rng.randint(-2, 3) for _ in range(len(sub) + rng.randint(1, 4))]
        inv = chern_from_resolution(sub, quot, QUINTIC)
        _eq(inv.c1, sum(quot) - sum(sub), f"c1 additivity {sub}->{quot}")
    return "c1 = sum(quot) - sum(sub) on 200 random resolutions"


def check_extension_chern() -> str:
    _eq(chern_of_extension(1, 1, 3, X24).as_pair(), (2, 11), "ext(1,1,3) on 2,4")
    _eq(chern_of_extension(0, 2, 16, X33).as_pair(), (2, 16), "ext(0,2,16) on 3,3")
    return _eq(chern_of_extension(1, 1, 0, QUINTIC).as_pair(), (2, 5),
               "ext(1,1,0) on 5")


def check_twist_examples() -> str:
    _eq(twist_rank2(2, 10, -1, QUINTIC), (0, 5), "twist(2,10,-1) on 5")
    _eq(twist_rank2(3, 7, 0, X24), (3, 7), "twist identity")
    _eq(twist_rank2(0, 0, 1, X24), (2, 8), "twist(0,0,1) on 2,4")
    rng = random.Random(11)
    for _ in range(200):
        c1, c2, t = rng.randint(-4, 4), rng.randint(-40, 40), rng.randint(-3, 3)
        ctx = ALL_CONTEXTS[rng.randrange(5)]
        _eq(twist_rank2(*twist_rank2(c1, c2, t, ctx), -t, ctx), (c1, c2),
            "twist round-trip")
    return "twist anchors and 200 random round-trips"


def check_h0_values() -> str:
    _eq(h0_line_bundle(QUINTIC, 2), 15, "h0(O_X5(2))")
    _eq(h0_line_bundle(X24, 1), 6, "h0(O_X24(1))")
    for ctx in ALL_CONTEXTS:
        _eq(h0_line_bundle(ctx, 0), 1, f"h0(O_{ctx.label()})")
        _eq(h0_line_bundle(ctx, 1), ctx.ambient_dim + 1, f"h0(O_{ctx.label()}(1))")
        _eq(h0_line_bundle(ctx, -1), 0, "h0(O(-1))")
    return "section counts: 15, 6, and n+1 linear sections on all five"


def check_max_rank() -> str:
    _eq(max_rank_no_trivial([-2], QUINTIC), 14, "max rank for O(-2)")
    _eq(max_rank_no_trivial([-1, -1], QUINTIC), 8, "max rank for O(-1)^2")
    _eq(max_rank_no_trivial([-1], QUINTIC), 4, "max rank for O(-1)")
    return "rank ceilings 14 / 8 / 4 (+1 twisted factor gives 5)"


# --------------------------------------------------------------------------
# bounds
# --------------------------------------------------------------------------


def check_castelnuovo_anchors() -> str:
    anchors = {(6, 3): 4, (7, 3): 6, (8, 3): 9, (5, 4): 1, (6, 4): 2,
               (11, 4): 12, (14, 5): 15, (16, 7): 12, (3, 3): 0}
    for (d, r), value in sorted(anchors.items()):
        _eq(bounds.castelnuovo_pi(d, r), value, f"pi({d},{r})")
    return "nine genus-bound anchors"


def check_castelnuovo_ranges() -> str:
    for x in range(3, 6):
        _eq(bounds.castelnuovo_pi(x, 3), x - 3, f"pi({x},3)")
    for x in range(4, 8):
        _eq(bounds.castelnuovo_pi(x, 4), x - 4, f"pi({x},4)")
    return "pi(x,3) = x-3 on [3,5]; pi(x,4) = x-4 on [4,7]"


def check_castelnuovo_monotone() -> str:
    for r in range(3, 10):
        values = [bounds.castelnuovo_pi(d, r) for d in range(r, 41)]
        _true(all(a <= b for a, b in zip(values, values[1:])),
              f"pi(.,{r}) nondecreasing in degree")
    for d in range(9, 41):
        values = [bounds.castelnuovo_pi(d, r) for r in range(3, min(d, 9) + 1)]
        _true(all(a >= b for a, b in zip(values, values[1:])),
              f"pi({d},.) nonincreasing in span")
    return "bound monotone in degree and span"


def check_pi_one() -> str:
    _eq(bounds.pi_one(14, 5), 11, "pi1(14,5)")
    _eq(bounds.pi_one(15, 5), 16, "pi1(15,5)")
    _eq(bounds.pi_one(11, 4), 8, "pi1(11,4)")
    for (d, r) in ((14, 5), (15, 5), (11, 4)):
        _true(bounds.pi_one(d, r) <= bounds.castelnuovo_pi(d, r),
              f"pi1 <= pi at ({d},{r})")
    try:
        bounds.pi_one(20, 5)
    except bounds.UnsupportedBoundError:
        return "refined-bound anchors; out-of-range input refused"
    raise CheckFailure("pi_one must refuse unverified inputs")


def check_plane_genus() -> str:
    _eq(bounds.plane_genus(5), 6, "plane quintic genus")
    _eq(bounds.plane_genus(1), 0, "line genus")
    return _eq(bounds.plane_genus(4), 3, "plane quartic genus")


def check_ci_invariants() -> str:
    _eq(tuple(bounds.ci_curve_invariants([2, 2, 2, 2], 5)), (16, 2, 17),
        "four quadrics")
    _eq(tuple(bounds.ci_curve_invariants([1, 1, 2, 4], 5)), (8, 2, 9),
        "linear section of the (2,4) threefold")
    _eq(tuple(bounds.ci_curve_invariants([2, 2, 2, 3], 5)), (24, 3, 37),
        "three quadrics and a cubic")
    try:
        bounds.ci_curve_invariants([1, 1], 2)
    except ValueError:
        return "complete-intersection invariants and codimension guard"
    raise CheckFailure("wrong codimension must be rejected")


def check_max_curve_degree() -> str:
    _eq(bounds.max_curve_degree(QUINTIC, 2, 2), 17, "cap on 5 (rank 2)")
    _eq(bounds.max_curve_degree(X24, 2, 3), 32, "cap on 2,4 (higher rank)")
    return _eq(bounds.max_curve_degree(X33, 1, 2), 9, "cap on 3,3 (twist one)")


# --------------------------------------------------------------------------
# ruled surfaces
# --------------------------------------------------------------------------


def check_intersection_anchors() -> str:
    _eq(intersect(DivisorClass(4, 8), DivisorClass(2, 5), RuledSurface(1)), 28,
        "(4h+8f).(2h+5f) on e=1")
    _eq(intersect(DivisorClass(0, 1), DivisorClass(0, 1), RuledSurface(2, 1)), 0,
        "f.f")
    _eq(intersect(DivisorClass(4, 12), DivisorClass(2, 7), RuledSurface(3)), 28,
        "(4h+12f).(2h+7f) on e=3")
    return _eq(intersect(DivisorClass(4, 8), DivisorClass(2, 6), RuledSurface(0)),
               40, "(4h+8f).(2h+6f) on e=0")


def check_canonical_classes() -> str:
    _eq(tuple(canonical_class(RuledSurface(1))), (-2, -3), "K on F1")
    _eq(tuple(canonical_class(RuledSurface(3))), (-2, -5), "K on F3")
    return _eq(tuple(canonical_class(RuledSurface(0, 1))), (-2, 0),
               "K on the elliptic product")


def check_adjunction_anchors() -> str:
    _eq(adjunction_genus(DivisorClass(5, 15), RuledSurface(3)), 26,
        "genus of (5,15) on F3")
    for e in range(0, 5):
        for q in range(0, 3):
            if e < -q:
                continue
            _eq(adjunction_genus(DivisorClass(0, 1), RuledSurface(e, q)), 0,
                "fiber genus")
            _eq(adjunction_genus(DivisorClass(1, 0), RuledSurface(e, q)), q,
                "section genus")
    return _eq(adjunction_genus(DivisorClass(4, 8), RuledSurface(1)), 15,
               "genus of (4,8) on F1")


def check_embedding_degrees() -> str:
    _eq(embedding_degree(DivisorClass(5, 15), DivisorClass(1, 3), RuledSurface(3)),
        15, "degree of (5,15)")
    for a, b in ((1, 2), (2, 5), (3, 4)):
        _eq(embedding_degree(DivisorClass(a, b), DivisorClass(1, 2), RuledSurface(1)),
            a + b, "cubic-scroll degree a+b")
    return _eq(embedding_degree(DivisorClass(0, 1), DivisorClass(1, 7),
                                RuledSurface(2)), 1, "fibers are lines")


def check_f1_elimination() -> str:
    hits = eliminate_by_genus(GenusSearch(DivisorClass(1, 2), 15, genus=16),
                              RuledSurface(1))
    _eq(hits, [], "degree-15 genus-16 classes on F1")
    return "smooth cubic scroll carries no degree-15 curve of genus 16"


def check_f3_elimination() -> str:
    hits = eliminate_by_genus(
        GenusSearch(DivisorClass(1, 3), 15, bands=((-3, 1, 0, 1),)),
        RuledSurface(3))
    _eq(hits, [DivisorClass(5, 15)], "smoothness band on F3")
    return _eq(adjunction_genus(DivisorClass(5, 15), RuledSurface(3)), 26,
               "its genus is 26, not 16")


def check_f0_conic() -> str:
    hits = eliminate_by_genus(GenusSearch(DivisorClass(1, 1), 2, genus=0),
                              RuledSurface(0))
    _true(DivisorClass(1, 1) in hits, "conic class on the quadric surface")
    return "degree-2 genus-0 search contains (1,1)"


def check_adjunction_table() -> str:
    cases = [
        (RuledSurface(1), DivisorClass(4, 8), 28),
        (RuledSurface(3), DivisorClass(4, 12), 28),
        (RuledSurface(0), DivisorClass(4, 8), 40),
        (RuledSurface(2), DivisorClass(4, 12), 40),
        (RuledSurface(4), DivisorClass(4, 16), 40),
    ]
    values = []
    for s, cls, expected in cases:
        values.append(_eq(2 * adjunction_genus(cls, s) - 2, expected,
                          f"2g-2 of ({cls.a},{cls.b}) on e={s.e}"))
    return "quartic cuts of scroll surfaces: 28, 28, 40, 40, 40"


def check_ruled_38() -> str:
    for q in (0, 1, 2):
        for e in (-4, -2, 0, 2):
            if e < -q:
                continue
            s = RuledSurface(e, q)
            cls = DivisorClass(3, 8 + (3 * e) // 2)
            _eq(embedding_degree(cls, DivisorClass(1, 3 + e // 2), s), 17,
                "degree pinned to 17")
            value = intersect(cls, cls + canonical_class(s), s)
            _eq(value, 26 + 6 * q, f"constant in e at q={q}")
            _true(value != 34, "never the required 34")
    s2 = RuledSurface(0, 2)
    cls2 = DivisorClass(3, 8)
    return _eq(intersect(cls2, cls2 + canonical_class(s2), s2), 38,
               "value 38 at the forced sectional genus 2")


def check_ruled_58() -> str:
    solutions = [(q, e) for q in (0, 1, 2) for e in range(-q, 7)
                 if e % 2 == 0 and -3 * e + 6 * q + 58 == 32]
    _eq(solutions, [], "-3e + 6q + 58 = 32 over admissible even e")
    _true((6 * 0 + 26) % 3 != 0, "3e = 6q + 26 impossible mod 3")
    return "degree-16 triple-section equation unsolvable"


def check_ruled_e2q20() -> str:
    for q in (0, 1, 2):
        e = 2 * q - 20
        _true(e < -q, f"e = 2q - 20 = {e} below the floor -q = {-q}")
    return "degree-18 case forces e = 2q - 20, infeasible"


def check_disjointness() -> str:
    f3 = RuledSurface(3)
    _true(disjointness_obstruction([DivisorClass(1, 4), DivisorClass(1, 4)], f3),
          "(1,4) pairs meet on F3")
    _true(not disjointness_obstruction([DivisorClass(0, 1), DivisorClass(0, 1)],
                                       RuledSurface(2)),
          "fibers are disjoint")
    _true(disjointness_obstruction([DivisorClass(1, 3), DivisorClass(2, 6)], f3),
          "(1,3).(2,6) = 6 > 0")
    return "disjointness obstructions: positive pairings detected"


# --------------------------------------------------------------------------
# constructions
# --------------------------------------------------------------------------


def _registry_check(name: str):
    def run() -> str:
        reports = constructions.validate_construction(name)
        labels = ", ".join(",".join(map(str, r.threefold)) for r in reports)
        n = sum(len(r.checks) for r in reports)
        return f"validated on {labels} ({n} recomputed fields)"
    run.__name__ = f"check_registry_{name.replace('-', '_')}"
    return run


def check_required_genus() -> str:
    _eq(required_genus(2, 5), 6, "twist two, degree 5")
    _eq(required_genus(1, 4), 3, "twist one, degree 4")
    _eq(required_genus(0, 0), None, "empty curve sentinel")
    try:
        required_genus(2, 0)
    except ValueError:
        pass
    else:
        raise CheckFailure("degree 0 with twist 2 must be rejected")
    try:
        required_genus(1, 3)
    except constructions.ParityError:
        return "twisted-genus anchors and parity guard"
    raise CheckFailure("odd product must raise the parity error")


def check_union_genus() -> str:
    _eq(union_genus([12, 0], 2), 13, "component plus line with two meets")
    _eq(union_genus([6, 6]), 11, "two disjoint plane quintics")
    return _eq(union_genus([7]), 7, "single part")


def check_liaison() -> str:
    _eq(constructions.liaison_solve(24, 3, 2, 3), 18, "linkage degree")
    brute = [d for d in range(1, 24) if (3 - 2) * d == 3 * (24 - d)]
    _eq(brute, [18], "independent scan of the linkage equation")
    try:
        constructions.liaison_solve(24, 3, 3, 3)
    except constructions.LiaisonError:
        return "liaison degree 18, cross-checked by scan; degenerate refused"
    raise CheckFailure("zero-coefficient liaison must be refused")


def check_incidence_dimensions() -> str:
    report = incidence_dimension_check()
    _eq(report["grassmannian_dim"], 68, "quadric-system dimension")
    _eq(report["fiber_dim"], 23, "cubics through one curve")
    _eq(report["incidence_dim"], 91, "incidence variety")
    _eq(report["cubic_family_dim"], 36, "curves on a general cubic")
    _eq(report["h0_cubics"], 56, "cubic monomial count")
    return _eq(report["h0_ideal_cubics"], 24, "ideal cubics through the curve")


def check_registry_serialization() -> str:
    text = constructions.serialize_registry()
    records = json.loads(text)
    _true(len(records) >= 10, "at least ten registry records")
    keys = list(records[0].keys())
    _eq(keys, ["name", "threefold", "rank", "c1", "c2", "components", "ref"],
        "stable key order")
    _eq(json.dumps(records, indent=2), text, "round-trip is byte-identical")
    return f"{len(records)} records serialized with stable keys"


# --------------------------------------------------------------------------
# classifier
# --------------------------------------------------------------------------


def check_quintic_rank2_pairs() -> str:
    result = classifier.classify(QUINTIC, 2, classifier.RANK2)
    _eq(set(result.admissible_pairs), set(constructions.QUINTIC_RANK2_PAIRS),
        "rank-2 pairs on the quintic")
    return "pairs {(1,0), (2,0), (2,5), (2,10)}"


def check_quintic_higher_rank() -> str:
    result = classifier.classify(QUINTIC, 2, classifier.HIGHER_RANK)
    _eq(result.admissible_c2, [0, 5, 10, 15, 20], "higher-rank c2 set")
    _eq(result.rank_windows.get(20), (3, 14), "window at c2=20")
    _eq(result.rank_windows.get(15), (3, 8), "window at c2=15")
    _eq(result.rank_windows.get(10), (3, 5), "window at c2=10")
    return "c2 in {0,5,10,15,20} with rank windows 14/8/5"


def check_x24_classification() -> str:
    result = classifier.classify(X24, 2, classifier.RANK2)
    _eq(result.admissible_c2, [0, 4, 8, 11, 16], "c2 set on 2,4")
    _eq(result.unresolved, [16], "unresolved case")
    for c2 in (4, 8, 11, 16):
        _true(bool(result.witnesses.get(c2)), f"witness at c2={c2}")
    return "c2 in {0,4,8,11,16}, 16 unresolved, witnesses attached"


def check_x33_classification() -> str:
    result = classifier.classify(X33, 2, classifier.RANK2)
    _eq(result.admissible_c2, [0, 9, 12, 15, 16, 18], "c2 set on 3,3")
    _eq(result.unresolved, [16], "unresolved case")
    for c2 in (9, 12, 15, 16, 18):
        _true(bool(result.witnesses.get(c2)), f"witness at c2={c2}")
    return "c2 in {0,9,12,15,16,18}, 16 unresolved, witnesses attached"


def check_trivial_regime() -> str:
    for ctx in ALL_CONTEXTS:
        result = classifier.classify(ctx, 0, classifier.RANK2)
        _eq(result.admissible_c2, [0], f"c1=0 on {ctx.label()}")
    return "first Chern class 0 forces the trivial bundle on all five"


def check_determinism() -> str:
    first = classifier.report_json(classifier.rule_report(X33, 2))
    second = classifier.report_json(classifier.rule_report(X33, 2))
    _true(first == second, "two runs byte-identical")
    reparsed = json.dumps(json.loads(first), indent=2)
    _true(reparsed == first, "JSON round-trip byte-identical")
    return "byte-identical reports and JSON round-trip"


def check_trail_audit() -> str:
    total = 0
    for ctx, regime in ((QUINTIC, classifier.RANK2), (X24, classifier.RANK2),
                        (X33, classifier.RANK2), (QUINTIC, classifier.HIGHER_RANK)):
        result = classifier.classify(ctx, 2, regime)
        mismatches = classifier.audit_verdicts(result.verdicts + result.component_verdicts)
        _eq(mismatches, [], f"audit on {ctx.label()} {regime}")
        total += sum(
            len(e.values.get("checks", ()))
            for v in result.verdicts + result.component_verdicts
            for e in v.trail
        )
    return f"replayed {total} recorded kernel computations"


def check_axiom_toggle_monotone() -> str:
    axioms = sorted(r.id for r in RULES.values() if r.kind is RuleKind.AXIOM)
    grew = 0
    for ctx in (QUINTIC, X24, X33):
        base = {
            (v.candidate.triples())
            for v in classifier.classify(ctx, 2).verdicts
            if v.survives and isinstance(v.candidate, constructions.CurveCandidate)
        }
        for axiom in axioms:
            toggled = {
                (v.candidate.triples())
                for v in classifier.classify(ctx, 2, disabled=frozenset({axiom})).verdicts
                if v.survives and isinstance(v.candidate, constructions.CurveCandidate)
            }
            _true(base <= toggled, f"disabling {axiom} must not shrink survivors")
            if base < toggled:
                grew += 1
    return f"survivor sets monotone under all axiom toggles ({grew} strict growths)"


def check_no_hidden_eliminations() -> str:
    flipped = 0
    for ctx in (QUINTIC, X24, X33):
        for c1 in (1, 2):
            candidates = classifier.enumerate_candidates(ctx, c1)
            for verdict in classifier.apply_rules(candidates, ctx, c1):
                if verdict.status is not Status.ELIMINATED:
                    continue
                failing = frozenset(
                    e.rule_id for e in verdict.trail if e.outcome == "fail"
                )
                requeued = classifier.judge_candidate(verdict.candidate, ctx, c1,
                                                      failing)
                _true(requeued.status is not Status.ELIMINATED,
                      f"{verdict.candidate.label()} stays eliminated with its "
                      f"failing rules disabled")
                flipped += 1
    return f"{flipped} eliminated candidates flip without their failing rules"


def check_component_examples() -> str:
    v1 = constructions.component_admissible(
        constructions.CurveComponent(8, 9, 3), X24, 2)
    _true(v1.survives, "(8,9,3) survives on 2,4")
    v2 = constructions.component_admissible(
        constructions.CurveComponent(7, 8, 4), QUINTIC, 2)
    _true(not v2.survives, "(7,8,4) dies on the quintic")
    _true(any(e.rule_id == "R-genus-bound" and e.outcome == "fail"
              for e in v2.trail), "killed by the genus bound")
    v3 = constructions.component_admissible(
        constructions.CurveComponent(9, 10, 3), X33, 2)
    _true(v3.survives, "(9,10,3) survives on 3,3")
    return "component filter anchors"


def check_candidate_examples() -> str:
    cands = classifier.enumerate_candidates(QUINTIC, 2)
    plane_pair = constructions.CurveCandidate(
        (constructions.CurveComponent(5, 6, 2), constructions.CurveComponent(5, 6, 2)))
    _true(plane_pair in cands, "two plane quintics enumerated")
    x24_c1 = classifier.enumerate_candidates(X24, 1)
    quartic = constructions.CurveCandidate((constructions.CurveComponent(4, 3, 2),))
    _true(quartic in x24_c1, "(4,3,2) enumerated at twist one")
    sextic = constructions.CurveComponent(6, 4, 3)
    _true(all(sextic not in c.components for c in x24_c1),
          "(6,4,3) excluded at twist one")
    return "candidate enumeration anchors"


def check_classifier_unsupported() -> str:
    try:
        classifier.classify(X223, 2, classifier.RANK2)
    except classifier.UnsupportedClassificationError:
        pass
    else:
        raise CheckFailure("codimension-3 classification must be refused")
    try:
        classifier.classify(X24, 2, classifier.HIGHER_RANK)
    except classifier.UnsupportedClassificationError:
        return "out-of-scope regimes refused explicitly"
    raise CheckFailure("higher rank off the quintic must be refused")


CHECKS: list[tuple[str, str, object]] = [
    ("chow", "chi-hyperplane-oracle", check_chi_hyperplane_oracle),
    ("chow", "chi-trivial-zero", check_chi_trivial_zero),
    ("chow", "chi-twisted-pair", check_chi_twisted_pair),
    ("chow", "ring-examples", check_ring_examples),
    ("chow", "ring-inverse-roundtrip-1000", check_ring_inverse_roundtrip),
    ("chow", "resolution-chern", check_resolution_chern),
    ("chow", "resolution-additivity", check_resolution_additivity),
    ("chow", "extension-chern", check_extension_chern),
    ("chow", "twist-examples", check_twist_examples),
    ("chow", "h0-values", check_h0_values),
    ("chow", "max-rank", check_max_rank),
    ("bounds", "castelnuovo-anchors", check_castelnuovo_anchors),
    ("bounds", "castelnuovo-ranges", check_castelnuovo_ranges),
    ("bounds", "castelnuovo-monotone", check_castelnuovo_monotone),
    ("bounds", "pi-one", check_pi_one),
    ("bounds", "plane-genus", check_plane_genus),
    ("bounds", "ci-invariants", check_ci_invariants),
    ("bounds", "max-curve-degree", check_max_curve_degree),
    ("ruled", "intersection-anchors", check_intersection_anchors),
    ("ruled", "canonical-classes", check_canonical_classes),
    ("ruled", "adjunction-anchors", check_adjunction_anchors),
    ("ruled", "embedding-degrees", check_embedding_degrees),
    ("ruled", "f1-elimination", check_f1_elimination),
    ("ruled", "f3-elimination", check_f3_elimination),
    ("ruled", "f0-conic", check_f0_conic),
    ("ruled", "adjunction-28-40", check_adjunction_table),
    ("ruled", "ruled-38", check_ruled_38),
    ("ruled", "ruled-58", check_ruled_58),
    ("ruled", "ruled-e2q20", check_ruled_e2q20),
    ("ruled", "disjointness", check_disjointness),
    ("constructions", "required-genus", check_required_genus),
    ("constructions", "union-genus", check_union_genus),
    ("constructions", "liaison-18-two-routes", check_liaison),
    ("constructions", "incidence-dimensions", check_incidence_dimensions),
    ("constructions", "registry-serialization", check_registry_serialization),
    ("classifier", "quintic-rank2-pairs", check_quintic_rank2_pairs),
    ("classifier", "quintic-higher-rank", check_quintic_higher_rank),
    ("classifier", "x24-classification", check_x24_classification),
    ("classifier", "x33-classification", check_x33_classification),
    ("classifier", "trivial-regime", check_trivial_regime),
    ("classifier", "determinism", check_determinism),
    ("classifier", "trail-audit", check_trail_audit),
    ("classifier", "axiom-toggle-monotone", check_axiom_toggle_monotone),
    ("classifier", "no-hidden-eliminations", check_no_hidden_eliminations),
    ("classifier", "component-examples", check_component_examples),
    ("classifier", "candidate-examples", check_candidate_examples),
    ("classifier", "unsupported-regimes", check_classifier_unsupported),
]

for _name in constructions.registry_names():
    CHECKS.append(("registry", _name, _registry_check(_name)))


def run_checks(module: str | None = None):
    """Run (module-filtered) checks; yields (module, name, ok, detail)."""
    for mod, name, fn in CHECKS:
        if module and mod != module:
            continue
        try:
            detail = fn()
            yield mod, name, True, detail
        except Exception as exc:  # noqa: BLE001 - report any failure
            yield mod, name, False, f"{type(exc).__name__}: {exc}"


def module_names() -> list[str]:
    return sorted({mod for mod, _, _ in CHECKS})
