"""Newton polytopes, the exact zero-mixed-volume test, and exact mixed
volumes in low ambient dimension.

The zero test is Minkowski's criterion: the mixed volume of (P_1, ..., P_k)
is positive iff every subcollection I has dim(sum of P_i, i in I) >= |I|.
With the affine convention the origin is adjoined to every polytope first,
so dimensions are ranks of support spans, computed exactly over Q.

Exact values use the inclusion-exclusion identity
    MV(P_1..P_k) = sum over nonempty I of (-1)^(k-|I|) vol(P_I),
with Euclidean volumes of Minkowski sums computed by an exact incremental
triangulation.  Axis-parallel segments (the linear equations of our square
systems) are first eliminated by multilinearity, which keeps the convex
hulls small.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd

import numpy as np

from .polynomials import MultiPoly


@dataclass(frozen=True)
class NewtonPolytope:
    """Support of a polynomial: lattice points in Z^dim (deduplicated)."""
    points: frozenset
    dim: int

    def __post_init__(self):
        if not self.points:
            raise ValueError("empty support")

    def with_origin(self):
        origin = (0,) * self.dim
        if origin in self.points:
            return self
        return NewtonPolytope(self.points | {origin}, self.dim)

    def translated_to_origin(self):
        base = min(self.points)
        moved = frozenset(tuple(a - b for a, b in zip(p, base))
                          for p in self.points)
        return NewtonPolytope(moved, self.dim)


def newton_polytope(p: MultiPoly) -> NewtonPolytope:
    """Exponent support of a nonzero polynomial."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return NewtonPolytope(frozenset(p.support()), len(p.names))


# -- exact linear algebra over Z ------------------------------------------


def _row_reduce(rows):
    """Exact fraction-free row echelon; returns the nonzero reduced rows."""
    rows = [list(r) for r in rows if any(r)]
    basis = []
    for row in rows:
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if row[lead]:
                f = row[lead]
                g = b[lead]
                row = [x * g - y * f for x, y in zip(row, b)]
        if any(row):
            d = 0
            for x in row:
                d = gcd(d, x)
            row = [x // d for x in row]
            basis.append(row)
            basis.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    return basis


def _span_basis(poly: NewtonPolytope, affine: bool):
    """Basis of the direction space of the polytope (origin adjoined first
    under the affine convention)."""
    pts = sorted(poly.points)
    base = (0,) * poly.dim if affine else pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts]
    return _row_reduce(diffs)


def _rank_of_union(bases):
    return len(_row_reduce([r for b in bases for r in b]))


def zero_mixed_volume(polys, affine: bool = False) -> bool:
    """Exact decision: is the mixed volume of this square collection zero?

    True iff some subcollection I has dim(Minkowski sum over I) < |I|.
    When every direction space is a coordinate subspace the subset scan runs
    on variable bitmasks; otherwise ranks are computed exactly per subset.
    """
    k = len(polys)
    if any(p.dim != k for p in polys):
        raise ValueError(f"need {k} polytopes in {k} variables")
    if k == 0:
        return False
    bases = [_span_basis(p, affine) for p in polys]
    dims = [len(b) for b in bases]
    masks = []
    coordinate = True
    for b in bases:
        mask = 0
        for row in b:
            for i, x in enumerate(row):
                if x:
                    mask |= 1 << i
        masks.append(mask)
        if mask.bit_count() != len(b):
            coordinate = False
    if coordinate:
        union = [0] * (1 << k)
        for sub in range(1, 1 << k):
            low = sub & -sub
            union[sub] = union[sub ^ low] | masks[low.bit_length() - 1]
            if union[sub].bit_count() < sub.bit_count():
                return True
        return False
    for size in range(1, k + 1):
        for idx in combinations(range(k), size):
            if min(dims[i] for i in idx) >= size:
                continue  # rank of the union is at least the largest member
            if _rank_of_union([bases[i] for i in idx]) < size:
                return True
    return False


# -- exact volumes ---------------------------------------------------------


def int_det(rows) -> int:
    """Exact determinant of a small square integer matrix (Bareiss)."""
    n = len(rows)
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for step in range(n - 1):
        piv = None
        for i in range(step, n):
            if m[i][step]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != step:
            m[step], m[piv] = m[piv], m[step]
            sign = -sign
        p = m[step][step]
        for i in range(step + 1, n):
            a = m[i][step]
            for j in range(step + 1, n):
                m[i][j] = (p * m[i][j] - a * m[step][j]) // prev
            m[i][step] = 0
        prev = p
    return sign * m[n - 1][n - 1]


def _sign_rows(rows):
    """Sign of an integer determinant, float-filtered with exact fallback.

    The float value is trusted only outside a conservative error bound;
    anything closer to zero is recomputed exactly in integers.
    """
    arr = np.array(rows, dtype=float)
    det = np.linalg.det(arr)
    norms = np.sqrt((arr * arr).sum(axis=1))
    bound = 1e-12 * float(np.prod(np.maximum(norms, 1.0)))
    if abs(det) > bound:
        return 1 if det > 0 else -1
    exact = int_det(rows)
    return (exact > 0) - (exact < 0)


def _facet_sign(fpts, x, xscale=1):
    """Side of x/xscale relative to the hyperplane through fpts.

    Rows are the facet's edge vectors plus (x - xscale * fpts[0]); scaling
    the last row by the positive xscale leaves the sign unchanged.
    """
    base = fpts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in fpts[1:]]
    rows.append([a - xscale * b for a, b in zip(x, base)])
    return _sign_rows(rows)


def _facet_normal(pts, dim):
    """Integer normal of the hyperplane through dim many points."""
    base = pts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    normal = []
    for j in range(dim):
        minor = [[r[t] for t in range(dim) if t != j] for r in rows]
        normal.append((-1) ** j * int_det(minor))
    return normal


def _hull_triangulation(points, dim):
    """Exact beneath-beyond triangulation of conv(points).

    Returns (total |det| sum over simplices, boundary facet list) where each
    facet is (vertex index tuple).  Assumes the points affinely span R^dim.
    """
    pts = [tuple(map(int, p)) for p in points]

    # greedily pick dim+1 affinely independent seed points
    seed = [0]
    rows = []
    for i in range(1, len(pts)):
        cand = rows + [[a - b for a, b in zip(pts[i], pts[0])]]
        if len(_row_reduce(cand)) == len(cand):
            rows = cand
            seed.append(i)
            if len(seed) == dim + 1:
                break
    if len(seed) < dim + 1:
        return 0, []  # lower-dimensional: zero volume

    total = abs(int_det(rows))
    # interior reference: (sum of seed vertices), compared at scale dim+1
    ref = [sum(pts[i][j] for i in seed) for j in range(dim)]
    scale = dim + 1

    boundary = {}

    def toggle(facet_idx):
        key = tuple(sorted(facet_idx))
        if key in boundary:
            del boundary[key]
        else:
            boundary[key] = key

    for facet in combinations(seed, dim):
        toggle(facet)

    ref_signs = {}

    def beyond(facet_idx, q):
        """Strictly outside the facet hyperplane, on the far side from ref."""
        fpts = [pts[i] for i in facet_idx]
        s_ref = ref_signs.get(facet_idx)
        if s_ref is None:
            s_ref = _facet_sign(fpts, ref, xscale=scale)
            ref_signs[facet_idx] = s_ref
        s_q = _facet_sign(fpts, q)
        return s_q != 0 and s_q == -s_ref

    for i in range(len(pts)):
        if i in seed:
            continue
        visible = [f for f in list(boundary) if beyond(f, pts[i])]
        if not visible:
            continue
        for f in visible:
            rows = [[a - b for a, b in zip(pts[j], pts[f[0]])]
                    for j in list(f[1:]) + [i]]
            total += abs(int_det(rows))
            for sub in combinations(f, dim - 1):
                toggle(tuple(sub) + (i,))
            toggle(f)
    return total, list(boundary)


def lattice_volume(points) -> Fraction:
    """Exact Euclidean volume of the convex hull of integer points."""
    pts = [tuple(map(int, p)) for p in points]
    pts = sorted(set(pts))
    if not pts:
        return Fraction(0)
    dim = len(pts[0])
    if len(pts) <= dim:
        return Fraction(0)

    candidates, rest = _prune_candidates(pts, dim)
    for _ in range(4):
        total, boundary = _hull_triangulation(candidates, dim)
        if not boundary:
            return Fraction(0)
        missed = _outside_points(candidates, boundary, rest, dim)
        if not missed:
            return Fraction(total, factorial(dim))
        candidates = candidates + missed
        rest = [p for p in rest if p not in set(missed)]
    total, boundary = _hull_triangulation(pts, dim)  # give up on pruning
    return Fraction(total, factorial(dim))


def _prune_candidates(pts, dim):
    """Split points into likely-extreme candidates and the rest via Qhull.

    Purely a performance filter: whatever it discards is verified exactly
    against the final hull and re-added if the filter was wrong.
    """
    if len(pts) <= dim + 8:
        return list(pts), []
    try:
        from scipy.spatial import ConvexHull
        arr = np.array(pts, dtype=float)
        spread = float(arr.max() - arr.min()) or 1.0
        hull = ConvexHull(arr, qhull_options="Qt")
        margin = 1e-7 * spread
        dist = (arr @ hull.equations[:, :-1].T
                + hull.equations[:, -1]).max(axis=1)
        keep = dist >= -margin
        cand = [pts[i] for i in range(len(pts)) if keep[i]]
        rest = [pts[i] for i in range(len(pts)) if not keep[i]]
        return cand, rest
    except Exception:
        return list(pts), []


def _outside_points(candidates, boundary, rest, dim):
    """Exact check that every non-candidate lies inside the hull.

    Facet inequalities are exact integer data; the test is a vectorized
    integer matrix product (int64 when safe, Python ints otherwise).
    """
    if not rest:
        return []
    normals = []
    offsets = []
    # fixed interior reference: average of first simplex = any hull point mix;
    # reuse the centroid of all candidate points (scaled to stay integral)
    m = len(candidates)
    centroid = [sum(p[j] for p in candidates) for j in range(dim)]
    for facet in boundary:
        fpts = [candidates[i] for i in facet]
        nrm = _facet_normal(fpts, dim)
        off = sum(a * b for a, b in zip(nrm, fpts[0]))
        side = sum(a * b for a, b in zip(nrm, centroid)) - off * m
        if side > 0:
            nrm = [-x for x in nrm]
            off = -off
        normals.append(nrm)
        offsets.append(off)
    max_n = max((abs(x) for row in normals for x in row), default=0)
    max_p = max((abs(x) for p in rest for x in p), default=0)
    if max_n * max_p * dim < 2 ** 62:
        arr_n = np.array(normals, dtype=np.int64)
        arr_o = np.array(offsets, dtype=np.int64)
        arr_p = np.array(rest, dtype=np.int64)
        viol = (arr_p @ arr_n.T) > arr_o[None, :]
        bad = np.nonzero(viol.any(axis=1))[0]
        return [rest[i] for i in bad]
    out = []
    for p in rest:
        for nrm, off in zip(normals, offsets):
            if sum(a * b for a, b in zip(nrm, p)) > off:
                out.append(p)
                break
    return out


def _minkowski_points(point_sets):
    """Candidate vertex set of a Minkowski sum, pruned pairwise.

    The pruning is conservative (points are dropped only when clearly
    interior); lattice_volume re-verifies its own final pruning exactly.
    """
    acc = sorted(point_sets[0])
    for nxt in point_sets[1:]:
        sums = {tuple(a + b for a, b in zip(p, q))
                for p in acc for q in nxt}
        acc = sorted(sums)
        if len(acc) > 40:
            cand, _ = _prune_candidates(acc, len(acc[0]))
            acc = sorted(cand)
    return acc


def _axis_segment(poly_pts, dim):
    """If the points are collinear along a coordinate axis, return
    (axis, lattice length), else None."""
    lo = min(poly_pts)
    hi = max(poly_pts)
    diffs = {tuple(a - b for a, b in zip(p, lo)) for p in poly_pts}
    axes = {i for d in diffs for i, x in enumerate(d) if x}
    if len(axes) != 1:
        return None
    axis = axes.pop()
    return axis, hi[axis] - lo[axis]


def mixed_volume(polys, affine: bool = False) -> int:
    """Exact normalized mixed volume of a square collection (dim <= 6).

    Inclusion-exclusion over subset Minkowski sums with exact volumes;
    axis-parallel segment polytopes are eliminated first by multilinearity.
    """
    k = len(polys)
    if any(p.dim != k for p in polys):
        raise ValueError(f"need {k} polytopes in {k} variables")
    if k > 6:
        raise ValueError("mixed_volume supports ambient dimension <= 6 "
                         "(the zero test has no such limit)")
    if k == 0:
        return 1
    if zero_mixed_volume(polys, affine):
        return 0
    sets = [sorted((p.with_origin() if affine else p).points) for p in polys]
    factor = 1
    while True:
        seg = None
        for i, pts in enumerate(sets):
            if len(pts) == 1:
                return 0  # a point polytope kills the mixed volume
            hit = _axis_segment(pts, len(pts[0]))
            if hit:
                seg = (i, *hit)
                break
        if seg is None:
            break
        i, axis, length = seg
        factor *= length
        sets.pop(i)
        sets = [sorted({p[:axis] + p[axis + 1:] for p in pts})
                for pts in sets]
        if not sets:
            return factor
    kk = len(sets)
    total = Fraction(0)
    for size in range(1, kk + 1):
        for idx in combinations(range(kk), size):
            vol = lattice_volume(_minkowski_points([sets[i] for i in idx]))
            total += (-1) ** (kk - size) * vol
    result = factor * total
    if result.denominator != 1 or result < 0:
        raise ArithmeticError(f"mixed volume came out non-integral: {result}")
    return int(result)
