"""Exact lattice-polytope geometry: hulls, volumes, Minkowski sums, mixed volumes.

Everything runs on integer arithmetic.  Hull volumes come from an incremental
beneath-beyond placing triangulation: points are inserted one at a time, the
simplices spanned by the new point and the strictly visible boundary facets
are accumulated, and coplanar facets are skipped (their pyramids have volume
zero, so degenerate inputs cost nothing but bookkeeping).  The normalized
mixed volume is the inclusion-exclusion alternating sum of subset Minkowski
sum volumes, scaled so that MV of n standard simplices is 1; equivalently it
is the generic toric root count of Bernstein's theorem.

The method is exponential in the dimension, which is fine at the intended
scale; a configurable cap (default 12) rejects larger ambient dimensions.
"""

from __future__ import annotations

from math import factorial

from .rat import rat

DEFAULT_DIM_CAP = 12


class PolytopeError(ValueError):
    pass


class Support:
    """Finite set of lattice points with nonnegative entries."""

    __slots__ = ("dim", "points")

    def __init__(self, dim: int, points):
        if dim < 1:
            raise PolytopeError("ambient dimension must be >= 1")
        pts = frozenset(tuple(int(x) for x in p) for p in points)
        if not pts:
            raise PolytopeError("empty support")
        for p in pts:
            if len(p) != dim:
                raise PolytopeError(f"point arity {len(p)} != {dim}")
            if any(x < 0 for x in p):
                raise PolytopeError(f"negative entry in {p}")
        self.dim = dim
        self.points = pts

    @classmethod
    def simplex(cls, dim: int) -> "Support":
        """Vertex set {0, e_1, ..., e_dim} of the standard simplex."""
        pts = [(0,) * dim]
        for i in range(dim):
            e = [0] * dim
            e[i] = 1
            pts.append(tuple(e))
        return cls(dim, pts)

    def translate_to_origin(self) -> "Support":
        mins = tuple(map(min, *self.points)) if len(self.points) > 1 else next(iter(self.points))
        if not any(mins):
            return self
        return Support(self.dim, [tuple(x - m for x, m in zip(p, mins)) for p in self.points])

    def __eq__(self, other):
        return isinstance(other, Support) and self.dim == other.dim and self.points == other.points

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return f"Support({self.dim}, {sorted(self.points)})"


class SupportFamily:
    __slots__ = ("dim", "members")

    def __init__(self, members):
        members = tuple(members)
        if not members:
            raise PolytopeError("empty family")
        dim = members[0].dim
        if any(m.dim != dim for m in members):
            raise PolytopeError("mixed ambient dimensions in family")
        self.dim = dim
        self.members = members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __eq__(self, other):
        return isinstance(other, SupportFamily) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"SupportFamily({list(self.members)})"


# -- integer linear algebra helpers -------------------------------------------

def _int_det(rows) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row = m[i]
            top = m[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * pk - mik * top[j]) // prev
            row[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _int_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = None
        for i in range(row, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pval = m[row][col]
        for i in range(row + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = [a * pval - f * b for a, b in zip(m[i], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def affine_rank(points) -> int:
    """Dimension of the affine hull of a point collection."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    return _int_rank([[x - b for x, b in zip(p, base)] for p in pts[1:]])


def _facet_normal(pts):
    """Integer normal of the hyperplane through d points of R^d (generalized
    cross product of the difference vectors); zero vector iff degenerate."""
    base = pts[0]
    rows = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
    d = len(base)
    normal = []
    sign = 1
    for i in range(d):
        minor = [r[:i] + r[i + 1:] for r in rows]
        normal.append(sign * _int_det(minor))
        sign = -sign
    return tuple(normal)


# -- beneath-beyond hull --------------------------------------------------------

def _hull_1d(pts):
    vals = [p[0] for p in pts]
    lo, hi = min(vals), max(vals)
    vol = hi - lo
    corners = [(lo,)] if lo == hi else [(lo,), (hi,)]
    return vol, corners


def hull_volume_and_corners(points):
    """Exact d!-scaled volume of conv(points) plus a covering corner set.

    Returns (scaled_volume: int, corners: list of points) where scaled_volume
    is d! times the Euclidean volume.  The corner list spans the same hull and
    is usually much smaller than the input; for lower-dimensional hulls the
    volume is 0 and the input points are returned unreduced.
    """
    pts = sorted(set(tuple(p) for p in points))
    d = len(pts[0])
    if len(pts) == 1:
        return 0, pts
    if d == 1:
        return _hull_1d(pts)

    # greedy affinely independent seed of d+1 points
    seed = [0]
    rows = []
    for i in range(1, len(pts)):
        cand = [x - b for x, b in zip(pts[i], pts[0])]
        if _int_rank(rows + [cand]) > len(rows):
            rows.append(cand)
            seed.append(i)
            if len(seed) == d + 1:
                break
    if len(seed) < d + 1:
        return 0, pts

    order = seed + [i for i in range(len(pts)) if i not in set(seed)]
    ref = [sum(pts[i][j] for i in seed) for j in range(d)]  # (d+1) * centroid

    facets = {}

    def add_facet(idx_tuple):
        vpts = [pts[i] for i in idx_tuple]
        normal = _facet_normal(vpts)
        if not any(normal):
            raise PolytopeError("degenerate facet")
        offset = sum(a * x for a, x in zip(normal, vpts[0]))
        side = sum(a * x for a, x in zip(normal, ref)) - (d + 1) * offset
        if side == 0:
            raise PolytopeError("reference point on facet hyperplane")
        if side > 0:
            normal = tuple(-a for a in normal)
            offset = -offset
        facets[frozenset(idx_tuple)] = (normal, offset)

    first = _int_det(rows)
    vol_scaled = abs(first)
    for drop in range(d + 1):
        add_facet(tuple(seed[i] for i in range(d + 1) if i != drop))

    for idx in order[d + 1:]:
        p = pts[idx]
        visible = []
        for key, (normal, offset) in facets.items():
            if sum(a * x for a, x in zip(normal, p)) > offset:
                visible.append(key)
        if not visible:
            continue
        ridge_count = {}
        for key in visible:
            verts = tuple(key)
            vol_scaled += abs(_int_det(
                [[x - y for x, y in zip(pts[v], p)] for v in verts]))
            for v in verts:
                ridge = key - {v}
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
            del facets[key]
        for ridge, cnt in ridge_count.items():
            if cnt == 1:
                add_facet(tuple(ridge) + (idx,))

    corner_idx = set()
    for key in facets:
        corner_idx.update(key)
    corners = sorted(pts[i] for i in corner_idx)
    return vol_scaled, corners


def hull_volume(s: Support, dim_cap: int = DEFAULT_DIM_CAP):
    """Exact Euclidean volume of conv(s.points); 0 when lower-dimensional."""
    if s.dim > dim_cap:
        raise PolytopeError(
            f"ambient dimension {s.dim} exceeds cap {dim_cap} (exponential method)")
    scaled, _ = hull_volume_and_corners(s.points)
    return rat(scaled, factorial(s.dim))


def minkowski_sum(a: Support, b: Support) -> Support:
    """Pointwise sum set {p+q}, duplicates removed."""
    if a.dim != b.dim:
        raise PolytopeError("ambient dimension mismatch")
    pts = {tuple(x + y for x, y in zip(p, q)) for p in a.points for q in b.points}
    return Support(a.dim, pts)


def _sum_corners(a_pts, b_pts):
    return {tuple(x + y for x, y in zip(p, q)) for p in a_pts for q in b_pts}


_mv_cache: dict = {}


def mixed_volume(family: SupportFamily, dim_cap: int = DEFAULT_DIM_CAP) -> int:
    """Normalized mixed volume of a square family (MV of n simplices = 1)."""
    n = family.dim
    if len(family.members) != n:
        raise PolytopeError("square family required")
    if n > dim_cap:
        raise PolytopeError(
            f"ambient dimension {n} exceeds cap {dim_cap} (exponential method)")

    normalized = tuple(sorted(
        (m.translate_to_origin().points for m in family.members),
        key=lambda s: sorted(s)))
    key = (n, normalized)
    hit = _mv_cache.get(key)
    if hit is not None:
        return hit

    # reduce every member to hull corners before summing
    members = [hull_volume_and_corners(pts)[1] for pts in normalized]

    sums: dict = {}        # bitmask -> corner point list of the subset sum
    total = 0
    fact = factorial(n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if rest == 0:
            pts = members[low]
            scaled = None
        else:
            pts = sorted(_sum_corners(sums[rest], members[low]))
            scaled = None
        scaled, corners = hull_volume_and_corners(pts)
        sums[mask] = corners
        sign = 1 if (n - mask.bit_count()) % 2 == 0 else -1
        total += sign * scaled
    if total % fact:
        raise PolytopeError("inclusion-exclusion did not produce an integer")
    mv = total // fact
    if mv < 0:
        raise PolytopeError("negative mixed volume (internal error)")
    _mv_cache[key] = mv
    return mv


def mv_positive(family: SupportFamily, dim_cap: int = DEFAULT_DIM_CAP) -> bool:
    """True iff the normalized mixed volume is positive."""
    return mixed_volume(family, dim_cap) > 0
