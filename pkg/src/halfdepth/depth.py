"""Empirical halfspace depth engines.

All engines count weak (closed) halfspaces: a sample point with u.p = u.x lies
on the boundary and is counted, and points equal to the query count for every
direction.  The infimum over directions may be attained only in the limit of
a generic direction where boundary points (other than copies of the query)
fall off; the exact engines realize that limit combinatorially.

* depth_1d: exact counts in one dimension.
* depth_2d_exact: O(n log n) angular sweep.  Translated points are mapped to
  (base angle in [0, pi), half-plane flag), so antipodal pairs share one base
  angle and the open-semicircle maximum needs no floating "angle + pi"
  arithmetic; weak-count minimum = n' - (max open-semicircle count).
* depth_bruteforce: exact oracle for d <= 3, n <= 200.  Enumerates candidate
  directions normal to point-spanned hyperplanes through the query, counts
  strict sides, and resolves boundary points by a lower-dimensional recursion
  (the achievable limit under infinitesimal rotation).  Sign classification
  uses floating filters with certified error bounds and falls back to exact
  rational arithmetic when a sign is in doubt.
* depth_approx: minimum over k seeded random directions, optionally sharpened
  by step-halving spherical descent; an upper bound on the exact depth.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .alpha_symmetric import Direction, SampleMatrix
from .rng import make_rng

__all__ = [
    "DepthMethod",
    "DepthResult",
    "depth_1d",
    "depth_2d_exact",
    "depth_bruteforce",
    "depth_approx",
]

_EPS = 2.0 ** -53
_ORACLE_MAX_N = 200
_REFINE_BUDGET = 200


class DepthMethod(enum.Enum):
    EXACT_1D = "exact_1d"
    EXACT_2D = "exact_2d"
    BRUTE = "brute"
    APPROX = "approx"


@dataclass(frozen=True)
class DepthResult:
    """Depth as an exact count over n, plus the method and witness direction.

    ``witness``, when present, is a direction whose weak-side count equals
    ``count``; for minima only attained in the limit it is a representative
    of the optimal open set of directions.
    """

    count: int
    n: int
    method: DepthMethod
    witness: Direction | None = None

    @property
    def value(self) -> float:
        return self.count / self.n

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.count, self.n)


def _as_points(sample) -> np.ndarray:
    if isinstance(sample, SampleMatrix):
        return sample.data
    pts = np.asarray(sample, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValueError("sample must be a nonempty n x d matrix")
    if not np.all(np.isfinite(pts)):
        raise ValueError("sample entries must be finite")
    return pts


def _as_query(x, d: int) -> np.ndarray:
    q = np.atleast_1d(np.asarray(x, dtype=float))
    if q.shape != (d,) or not np.all(np.isfinite(q)):
        raise ValueError(f"query must be a finite vector of length {d}")
    return q


# ---------------------------------------------------------------------------
# 1D
# ---------------------------------------------------------------------------


def depth_1d(sample, x: float) -> DepthResult:
    """Exact depth min(#{X_i <= x}, #{X_i >= x}) / n."""
    pts = _as_points(sample)
    if pts.shape[1] != 1:
        raise ValueError("depth_1d expects one-dimensional data")
    q = float(_as_query(x, 1)[0])
    vals = pts[:, 0]
    le = int(np.count_nonzero(vals <= q))
    ge = int(np.count_nonzero(vals >= q))
    u = np.array([1.0]) if le <= ge else np.array([-1.0])
    return DepthResult(min(le, ge), len(vals), DepthMethod.EXACT_1D, Direction(u))


# ---------------------------------------------------------------------------
# 2D exact sweep
# ---------------------------------------------------------------------------


def depth_2d_exact(sample, x) -> DepthResult:
    """Exact bivariate depth by angular sweep, O(n log n)."""
    pts = _as_points(sample)
    if pts.shape[1] != 2:
        raise ValueError("depth_2d_exact expects bivariate data")
    q = _as_query(x, 2)
    v = pts - q
    nonzero = (v[:, 0] != 0.0) | (v[:, 1] != 0.0)
    m0 = int(len(v) - np.count_nonzero(nonzero))
    vv = v[nonzero]
    n = len(v)
    if len(vv) == 0:
        return DepthResult(n, n, DepthMethod.EXACT_2D, Direction(np.array([1.0, 0.0])))

    # Canonical projective form: flip lower-half-plane points through the
    # origin (exact negation), so +/-v share one base angle in [0, pi).
    upper = (vv[:, 1] > 0.0) | ((vv[:, 1] == 0.0) & (vv[:, 0] > 0.0))
    w = np.where(upper[:, None], vv, -vv)
    base = np.arctan2(w[:, 1], w[:, 0])
    bu = np.sort(base[upper])
    bl = np.sort(base[~upper])

    # Open-semicircle count anchored at a point's own angle: for an anchor in
    # the upper class it is #upper{b >= a} + #lower{b < a}, and symmetrically
    # for lower anchors -- all comparisons on identical exact floats.
    best_count = -1
    best_anchor = None
    if bu.size:
        cu = (bu.size - np.searchsorted(bu, bu, side="left")) \
            + np.searchsorted(bl, bu, side="left")
        i = int(np.argmax(cu))
        best_count = int(cu[i])
        best_anchor = float(bu[i])
    if bl.size:
        cl = (bl.size - np.searchsorted(bl, bl, side="left")) \
            + np.searchsorted(bu, bl, side="left")
        i = int(np.argmax(cl))
        if int(cl[i]) > best_count:
            best_count = int(cl[i])
            best_anchor = float(bl[i]) - math.pi
    numer = m0 + (len(vv) - best_count)
    witness = _sweep_witness(v, vv, best_anchor, numer)
    return DepthResult(numer, n, DepthMethod.EXACT_2D, witness)


def _sweep_witness(v_all, vv, anchor: float, numer: int) -> Direction | None:
    # The winning count is the half-open arc [anchor, anchor + pi); it equals
    # the open semicircle (anchor - eps, anchor + pi - eps) once eps is below
    # the cyclic gap down from BOTH arc ends to the nearest point angle.  The
    # recount below keeps this honest against rounding: a failed recount
    # yields no witness, never a wrong one.
    theta = np.arctan2(vv[:, 1], vv[:, 0])

    def down_gap(target: float) -> float:
        d = np.mod(target - theta, 2.0 * math.pi)
        d = d[(d > 1e-9) & (d < 2.0 * math.pi - 1e-9)]
        return float(d.min()) if d.size else 2.0 * math.pi

    eps = 0.5 * min(down_gap(anchor), down_gap(anchor + math.pi),
                    0.5 * math.pi)
    phi = anchor + 0.5 * math.pi - eps
    u = np.array([math.cos(phi), math.sin(phi)])
    if int(np.count_nonzero(v_all @ u <= 0.0)) == numer:
        return Direction(u)
    return None


# ---------------------------------------------------------------------------
# Exact brute-force oracle (d <= 3, n <= 200)
# ---------------------------------------------------------------------------


def _frac_dot(a, b) -> Fraction:
    return sum((Fraction(float(x)) * Fraction(float(y)) for x, y in zip(a, b)),
               Fraction(0))


def _cross_q(a, b) -> tuple:
    """Cross product over exact rationals."""
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _frac_cross(a, b) -> tuple:
    return _cross_q(tuple(Fraction(float(c)) for c in a),
                    tuple(Fraction(float(c)) for c in b))


def _min_ray_count(points: np.ndarray, spine: np.ndarray) -> int:
    """Points are nonzero multiples of spine; minimum of the two ray counts."""
    k = int(np.argmax(np.abs(spine)))
    same = np.sign(points[:, k]) == np.sign(spine[k])
    pos = int(np.count_nonzero(same))
    return min(pos, len(points) - pos)


def _rec_line(points: np.ndarray) -> int:
    """All points collinear through the origin (or empty): min weak count."""
    if len(points) == 0:
        return 0
    return _min_ray_count(points, points[0])


def _rec_plane2(points: np.ndarray) -> int:
    """inf over u != 0 of #{p: u.p <= 0} for nonzero 2D points, exactly.

    Candidates are the normals of each point's spanned line, both signs;
    boundary points resolve to the smaller ray count (the infinitesimal
    rotation limit).  Sign classification: filtered float dot with exact
    rational fallback.
    """
    k = len(points)
    if k == 0:
        return 0
    normals = np.column_stack([-points[:, 1], points[:, 0]])  # exact rot90
    dots = points @ normals.T  # dots[p, c] = normal_c . point_p
    bound = 4.0 * _EPS * (np.abs(points) @ np.abs(normals).T)
    sgn = np.where(dots > bound, 1, np.where(dots < -bound, -1, 0))
    # bound == 0 certifies every product term is exactly zero, so the float
    # dot is exact; anything else inside the bound (a zero dot included --
    # cancellation can round a nonzero sum to 0.0) goes to rationals.
    unsure = np.argwhere((sgn == 0) & ~((dots == 0.0) & (bound == 0.0)))
    for p, c in unsure:
        exact = _frac_dot(normals[c], points[p])
        sgn[p, c] = 0 if exact == 0 else (1 if exact > 0 else -1)
    best = k
    for c in range(k):
        col = sgn[:, c]
        on_line = points[col == 0]
        minray = _min_ray_count(on_line, points[c])
        neg = int(np.count_nonzero(col < 0))
        pos = int(np.count_nonzero(col > 0))
        best = min(best, neg + minray, pos + minray)
    return best


def _rec_plane3(points: np.ndarray, axis_exact) -> int:
    """Same as _rec_plane2 but for points lying in the plane through the
    origin orthogonal to the (exact rational) axis, kept in 3D coordinates.

    The in-plane normal to each spine is cross(axis, spine), built from the
    exact axis: it is then exactly orthogonal to both, nonzero because the
    spine lies in the plane, so its sign on in-plane points classifies them
    within the plane with no rounding at all.
    """
    k = len(points)
    if k == 0:
        return 0
    best = k
    for i in range(k):
        spine = points[i]
        spine_q = tuple(Fraction(float(c)) for c in spine)
        w = _cross_q(axis_exact, spine_q)
        neg = pos = 0
        on_line = []
        for p in points:
            s = sum(a * Fraction(float(b)) for a, b in zip(w, p))
            if s < 0:
                neg += 1
            elif s > 0:
                pos += 1
            else:
                on_line.append(p)
        minray = _min_ray_count(np.array(on_line), spine) if on_line else 0
        best = min(best, neg + minray, pos + minray)
    return best


def _brute_2d(vv: np.ndarray) -> int:
    return _rec_plane2(vv)


def _brute_3d(vv: np.ndarray) -> int:
    k = len(vv)
    if k == 0:
        return 0
    # Candidate axes: cross products of point pairs -- normals of every plane
    # spanned by two sample directions (the vertices of the central great-
    # circle arrangement).  Parallel pairs span no plane and are skipped;
    # a certified-zero float test decides, exact rationals settle doubt.
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    axes = []
    for i, j in pairs:
        a, b = vv[i], vv[j]
        cf = np.cross(a, b)
        # per-component bound on |fl(cross) - cross|
        scale = np.array([
            abs(a[1] * b[2]) + abs(a[2] * b[1]),
            abs(a[2] * b[0]) + abs(a[0] * b[2]),
            abs(a[0] * b[1]) + abs(a[1] * b[0]),
        ])
        cerr = 4.0 * _EPS * scale
        if np.all(np.abs(cf) <= cerr):
            exact = _frac_cross(a, b)
            if all(c == 0 for c in exact):
                continue  # parallel pair
        axes.append((i, j, cf, cerr))
    if not axes:
        return _rec_line(vv)  # all points on one line through the origin

    best = k
    plane_cache: dict[tuple, int] = {}  # boundary index set -> recursion value
    for i, j, axis_f, cerr in axes:
        # |float dot - exact dot| <= dot rounding + cross rounding carried
        # through the dot; entries inside the bound get the exact sign, except
        # that bound == 0 certifies the zero float dot is already exact.
        dots = vv @ axis_f
        bound = 8.0 * _EPS * (np.abs(vv) @ np.abs(axis_f)) + np.abs(vv) @ cerr
        sgn = np.where(dots > bound, 1, np.where(dots < -bound, -1, 0))
        unsure = np.nonzero((np.abs(dots) <= bound)
                            & ~((dots == 0.0) & (bound == 0.0)))[0]
        axis_exact = None
        for p in unsure:
            if axis_exact is None:
                axis_exact = _frac_cross(vv[i], vv[j])
            s = sum(c * Fraction(float(w)) for c, w in zip(axis_exact, vv[p]))
            sgn[p] = 0 if s == 0 else (1 if s > 0 else -1)
        neg = int(np.count_nonzero(sgn < 0))
        pos = int(np.count_nonzero(sgn > 0))
        on_plane = np.nonzero(sgn == 0)[0]
        if len(on_plane):
            # The recursion value depends only on the boundary point set (the
            # plane is determined by it, and a collinear set resolves to ray
            # counts either way), so coincident planes are computed once.
            key = tuple(on_plane.tolist())
            rec = plane_cache.get(key)
            if rec is None:
                if axis_exact is None:
                    axis_exact = _frac_cross(vv[i], vv[j])
                rec = _rec_plane3(vv[on_plane], axis_exact)
                plane_cache[key] = rec
        else:
            rec = 0
        best = min(best, neg + rec, pos + rec)
        if best == 0:
            break
    return best


def depth_bruteforce(sample, x) -> DepthResult:
    """Exact oracle for d in {1, 2, 3}, n <= 200; cubic-ish cost accepted."""
    pts = _as_points(sample)
    n, d = pts.shape
    if d not in (1, 2, 3):
        raise ValueError(f"brute-force oracle supports d in {{1,2,3}}, got d={d}")
    if n > _ORACLE_MAX_N:
        raise ValueError(f"brute-force oracle supports n <= {_ORACLE_MAX_N}, got n={n}")
    q = _as_query(x, d)
    v = pts - q
    nonzero = np.any(v != 0.0, axis=1)
    m0 = int(n - np.count_nonzero(nonzero))
    vv = v[nonzero]
    if d == 1:
        le = int(np.count_nonzero(v[:, 0] <= 0.0))
        ge = int(np.count_nonzero(v[:, 0] >= 0.0))
        return DepthResult(min(le, ge), n, DepthMethod.BRUTE)
    if d == 2:
        inner = _brute_2d(vv)
    else:
        inner = _brute_3d(vv)
    return DepthResult(m0 + inner, n, DepthMethod.BRUTE)


# ---------------------------------------------------------------------------
# Direction-sampling approximation
# ---------------------------------------------------------------------------


def depth_approx(sample, x, k: int, seed: int, refine: bool = False) -> DepthResult:
    """Upper bound on depth from k seeded random directions.

    With refine=False the evaluated directions for seed s and count k1 are a
    prefix of those for k2 >= k1, so the value is nonincreasing in k.  The
    optional refinement runs coordinate-step descent on the sphere (step
    halving, budget 200 evaluations) from two starts -- the best sampled
    direction and the best signed coordinate direction; it can only lower
    the value, but its starts are k-dependent so prefix monotonicity is
    only guaranteed without it.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    pts = _as_points(sample)
    n, d = pts.shape
    q = _as_query(x, d)
    rng = make_rng(seed)
    dirs = rng.standard_normal((k, d))
    norms = np.linalg.norm(dirs, axis=1)
    dirs[norms == 0.0] = np.eye(d)[0]  # probability-zero guard
    best_count = n + 1
    best_u = None
    chunk = max(1, int(1.25e7 / max(n, 1)))
    for lo in range(0, k, chunk):
        block = dirs[lo:lo + chunk]
        counts = (pts @ block.T <= block @ q).sum(axis=0)
        i = int(np.argmin(counts))
        if int(counts[i]) < best_count:
            best_count = int(counts[i])
            best_u = block[i]
    if refine:
        best_count, best_u = _refine(pts, q, best_u, best_count)
    u = best_u / np.linalg.norm(best_u)
    return DepthResult(best_count, n, DepthMethod.APPROX, Direction(u))


def _count(pts, q, u) -> int:
    return int(np.count_nonzero(pts @ u <= u @ q))


def _descend(pts, q, u, best, budget):
    """Coordinate-step descent on the sphere with step halving."""
    step = 0.5
    d = len(u)
    while budget > 0 and step > 1e-4:
        improved = False
        for j in range(d):
            for s in (1.0, -1.0):
                if budget <= 0:
                    break
                cand = u.copy()
                cand[j] += s * step
                cand /= np.linalg.norm(cand)
                cnt = _count(pts, q, cand)
                budget -= 1
                if cnt < best:
                    best, u, improved = cnt, cand, True
        if not improved:
            step *= 0.5
    return best, u, budget


def _refine(pts, q, u0, c0):
    # Two descent starts split the budget: the best sampled direction, and
    # the best coordinate direction (marginal halfspaces are the classic
    # cheap upper-bound candidates and often sit in a different basin than
    # any of the random directions).
    d = len(q)
    starts = [(c0, u0 / np.linalg.norm(u0))]
    budget = _REFINE_BUDGET
    if 2 * d <= budget // 2:
        best_cnt, best_e = None, None
        for j in range(d):
            for s in (1.0, -1.0):
                e = np.zeros(d)
                e[j] = s
                cnt = _count(pts, q, e)
                budget -= 1
                if best_cnt is None or cnt < best_cnt:
                    best_cnt, best_e = cnt, e
        starts.append((best_cnt, best_e))
    per = budget // len(starts)
    best, best_u = c0, starts[0][1]
    for cnt, u in starts:
        cnt, u, _ = _descend(pts, q, u, cnt, per)
        if cnt < best:
            best, best_u = cnt, u
    return best, best_u
