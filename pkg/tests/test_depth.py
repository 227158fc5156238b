"""Depth engines: worked examples, engine agreement, approximation bounds."""

import numpy as np
import pytest

from halfdepth.depth import (DepthMethod, depth_1d, depth_2d_exact,
                             depth_approx, depth_bruteforce)

CROSS = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
TRIANGLE = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


def test_cross_center():
    r = depth_2d_exact(CROSS, [0.0, 0.0])
    assert (r.count, r.n) == (2, 4)
    assert depth_bruteforce(CROSS, [0.0, 0.0]).count == 2


def test_triangle_corner():
    r = depth_2d_exact(TRIANGLE, [0.0, 0.0])
    assert (r.count, r.n) == (1, 3)
    assert r.fraction.numerator == 1 and r.fraction.denominator == 3
    assert depth_bruteforce(TRIANGLE, [0.0, 0.0]).count == 1


def test_query_off_support():
    r = depth_2d_exact(TRIANGLE, [10.0, 10.0])
    assert r.count == 0
    assert r.value == 0.0


def test_all_points_equal_query():
    pts = np.tile([1.5, -2.0], (7, 1))
    assert depth_2d_exact(pts, [1.5, -2.0]).value == 1.0
    assert depth_bruteforce(pts, [1.5, -2.0]).value == 1.0
    assert depth_2d_exact(pts, [1.5, -1.0]).value < 1.0


def test_depth_1d():
    pts = np.array([[1.0], [2.0], [3.0], [4.0]])
    r = depth_1d(pts, 2.5)
    assert (r.count, r.n) == (2, 4)
    assert depth_1d(pts, 1.0).count == 1
    assert depth_1d(pts, 0.0).count == 0
    assert depth_bruteforce(pts, [2.5]).count == 2


def test_octahedron_and_tetrahedron():
    octa = np.array([[1.0, 0, 0], [-1, 0, 0], [0, 1, 0],
                     [0, -1, 0], [0, 0, 1], [0, 0, -1]])
    assert depth_bruteforce(octa, [0.0, 0.0, 0.0]).count == 3
    tetra = np.array([[0.0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert depth_bruteforce(tetra, [0.0, 0.0, 0.0]).count == 1


def test_sweep_agrees_with_oracle_random():
    rng = np.random.default_rng(2)
    for trial in range(120):
        n = int(rng.integers(1, 45))
        if trial % 3 == 0:
            pts = rng.standard_normal((n, 2))
            x = rng.standard_normal(2)
        elif trial % 3 == 1:
            pts = rng.integers(-3, 4, size=(n, 2)).astype(float)
            x = rng.integers(-3, 4, size=2).astype(float)
        else:
            pts = rng.standard_cauchy((n, 2))
            x = pts[int(rng.integers(n))].copy()
        a = depth_2d_exact(pts, x)
        b = depth_bruteforce(pts, x)
        assert a.count == b.count, (trial, a.count, b.count)
        assert a.method is DepthMethod.EXACT_2D
        assert b.method is DepthMethod.BRUTE


def test_oracle_invariant_under_zero_coordinate_embedding():
    rng = np.random.default_rng(3)
    for trial in range(25):
        n = int(rng.integers(1, 25))
        pts = rng.integers(-2, 3, size=(n, 2)).astype(float)
        x = rng.integers(-2, 3, size=2).astype(float)
        flat = depth_bruteforce(pts, x).count
        lifted = depth_bruteforce(np.column_stack([pts, np.zeros(n)]),
                                  np.append(x, 0.0)).count
        assert flat == lifted, trial


def test_exact_engines_permutation_invariant():
    rng = np.random.default_rng(4)
    pts = rng.standard_normal((40, 2))
    x = np.array([0.1, -0.2])
    base = depth_2d_exact(pts, x).count
    for _ in range(5):
        perm = rng.permutation(len(pts))
        assert depth_2d_exact(pts[perm], x).count == base


def test_sweep_witness_recounts():
    rng = np.random.default_rng(5)
    hits = 0
    for _ in range(40):
        pts = rng.standard_normal((30, 2))
        x = rng.standard_normal(2) * 0.3
        r = depth_2d_exact(pts, x)
        if r.witness is not None:
            hits += 1
            count = int(np.count_nonzero((pts - x) @ r.witness.u <= 0.0))
            assert count == r.count
    assert hits >= 35, "witness should verify in generic position"


def test_approx_upper_bounds_exact():
    rng = np.random.default_rng(6)
    for trial in range(30):
        pts = rng.standard_normal((50, 2))
        x = rng.standard_normal(2) * 0.5
        exact = depth_2d_exact(pts, x).count
        approx = depth_approx(pts, x, k=300, seed=trial, refine=True)
        assert approx.count >= exact
        assert approx.method is DepthMethod.APPROX


def test_approx_gap_small_in_2d():
    # With 10^4 directions in the plane the angular mesh is fine enough that
    # the raw minimum lands within 1/n of the exact value nearly always.
    rng = np.random.default_rng(11)
    good = 0
    for trial in range(200):
        pts = rng.standard_normal((50, 2))
        x = rng.standard_normal(2) * 0.5
        exact = depth_2d_exact(pts, x).count
        approx = depth_approx(pts, x, k=10_000, seed=trial, refine=False).count
        assert approx >= exact
        if approx - exact <= 1:
            good += 1
    assert good >= 190, f"only {good}/200 instances within 1/n"


def test_approx_origin_depth_half_in_5d():
    from halfdepth.alpha_symmetric import AlphaSymmetricLaw, Kind, sample_law

    law = AlphaSymmetricLaw(5, 0.5, Kind.INDEPENDENT)
    pts = sample_law(law, 100_000, 314)
    r = depth_approx(pts.data, np.zeros(5), k=5000, seed=9)
    assert abs(r.value - 0.5) <= 0.02


def test_approx_prefix_monotone_without_refine():
    rng = np.random.default_rng(7)
    pts = rng.standard_normal((200, 3))
    x = np.zeros(3)
    prev = None
    for k in (10, 50, 250, 1000):
        v = depth_approx(pts, x, k=k, seed=42, refine=False).count
        if prev is not None:
            assert v <= prev, "more directions can only lower the minimum"
        prev = v


def test_approx_deterministic():
    rng = np.random.default_rng(8)
    pts = rng.standard_normal((100, 3))
    a = depth_approx(pts, [0.0, 0.0, 0.0], k=500, seed=1, refine=True)
    b = depth_approx(pts, [0.0, 0.0, 0.0], k=500, seed=1, refine=True)
    assert a.count == b.count
    assert np.array_equal(a.witness.u, b.witness.u)


def test_validation():
    pts2 = np.zeros((5, 2))
    with pytest.raises(ValueError):
        depth_bruteforce(np.zeros((5, 4)), np.zeros(4))
    with pytest.raises(ValueError):
        depth_bruteforce(np.zeros((201, 2)), np.zeros(2))
    with pytest.raises(ValueError):
        depth_2d_exact(pts2, [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        depth_2d_exact(np.zeros((5, 3)), np.zeros(3))
    with pytest.raises(ValueError):
        depth_approx(pts2, [0.0, 0.0], k=0, seed=0)
    with pytest.raises(ValueError):
        depth_1d(np.array([[1.0, 2.0]]), 0.0)


def test_duplicated_query_points_count_everywhere():
    # three copies of the query among 6 points: every halfspace picks them up
    pts = np.array([[0.0, 0.0], [0.0, 0.0], [0.0, 0.0],
                    [5.0, 0.0], [0.0, 5.0], [-5.0, -5.0]])
    r = depth_2d_exact(pts, [0.0, 0.0])
    assert r.count == depth_bruteforce(pts, [0.0, 0.0]).count
    assert r.count >= 3
