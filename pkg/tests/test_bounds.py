import pytest

from cicy_bundles import (
    QUINTIC,
    X24,
    X33,
    UnsupportedBoundError,
    castelnuovo_pi,
    ci_curve_invariants,
    max_curve_degree,
    pi_one,
    plane_genus,
)


@pytest.mark.parametrize("d, r, expected", [
    (6, 3, 4), (7, 3, 6), (8, 3, 9),
    (5, 4, 1), (6, 4, 2), (7, 4, 3), (11, 4, 12),
    (14, 5, 15), (16, 7, 12), (3, 3, 0),
])
def test_castelnuovo_anchors(d, r, expected):
    assert castelnuovo_pi(d, r) == expected


def test_castelnuovo_linear_ranges():
    for x in range(3, 6):
        assert castelnuovo_pi(x, 3) == x - 3
    for x in range(4, 8):
        assert castelnuovo_pi(x, 4) == x - 4


def test_castelnuovo_monotone():
    for r in range(3, 10):
        values = [castelnuovo_pi(d, r) for d in range(r, 41)]
        assert values == sorted(values)
    for d in range(9, 41):
        values = [castelnuovo_pi(d, r) for r in range(3, 10) if r <= d]
        assert values == sorted(values, reverse=True)


def test_castelnuovo_guards():
    with pytest.raises(ValueError, match="degenerate"):
        castelnuovo_pi(4, 5)
    with pytest.raises(ValueError, match="plane_genus"):
        castelnuovo_pi(6, 2)


def test_pi_one_anchors():
    assert pi_one(14, 5) == 11
    assert pi_one(15, 5) == 16
    assert pi_one(11, 4) == 8


def test_pi_one_refines():
    for d, r in ((14, 5), (15, 5), (11, 4)):
        assert pi_one(d, r) <= castelnuovo_pi(d, r)


def test_pi_one_refuses_unverified():
    with pytest.raises(UnsupportedBoundError, match="unsupported"):
        pi_one(16, 5)
    with pytest.raises(ValueError):
        pi_one(2, 5)


@pytest.mark.parametrize("d, expected", [(5, 6), (1, 0), (4, 3), (3, 1)])
def test_plane_genus(d, expected):
    assert plane_genus(d) == expected


@pytest.mark.parametrize("degrees, n, expected", [
    ([2, 2, 2, 2], 5, (16, 2, 17)),
    ([1, 1, 2, 4], 5, (8, 2, 9)),
    ([1, 1, 3, 3], 5, (9, 2, 10)),
    ([2, 2, 2, 3], 5, (24, 3, 37)),
    ([1, 1, 5], 4, (5, 2, 6)),
    ([2, 2, 2], 4, (8, 1, 5)),
])
def test_ci_curve_invariants(degrees, n, expected):
    assert tuple(ci_curve_invariants(degrees, n)) == expected


def test_ci_parity_is_automatic():
    # the parity assertion holds across small inputs
    for a in range(1, 5):
        for b in range(1, 5):
            inv = ci_curve_invariants([a, b], 3)
            assert (inv.degree * inv.omega_twist) % 2 == 0


def test_ci_codimension_guard():
    with pytest.raises(ValueError, match="needs"):
        ci_curve_invariants([1, 1], 2)


def test_max_curve_degree():
    assert max_curve_degree(QUINTIC, 2, 2) == 17
    assert max_curve_degree(X24, 2, 3) == 32
    assert max_curve_degree(X33, 1, 2) == 9
    with pytest.raises(ValueError, match="unsupported"):
        max_curve_degree(X24, 3, 2)
