"""Rational polyhedral cones with synchronized V- and H-descriptions.

A Cone stores primitive generator rays and primitive inward facet normals.
For pointed cones the rays are exactly the extreme rays; for cones with
lineality the stored generators are the extreme rays of the pointed part
plus +-pairs spanning the lineality space. Halfspace lists follow the same
convention on the dual side, so `halfspaces` always generates the dual cone
and `contains` is a plain sign check in every case.
"""

import operator
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, product
from math import lcm

from .errors import DimensionError, NotFullDimensionalError, NotPointedError
from .linalg import (
    adjugate,
    columns_matrix,
    det,
    dot,
    identity,
    mat_mul,
    mat_vec,
    primitive,
    rank,
    smith_normal_form,
    vneg,
    vsub,
)
from .lp import rational_feasible


def _ivec(v):
    return tuple(operator.index(c) for c in v)


def _one_dim_kernel(rows, dim):
    """Primitive spanning vector of the kernel of dim-1 stacked rows.

    Entries are signed cofactors (the generalized cross product), so
    <row, v> == 0 for every row; None when the rows have rank < dim-1.
    """
    v = []
    for j in range(dim):
        minor = tuple(tuple(row[i] for i in range(dim) if i != j) for row in rows)
        v.append((-1) ** j * det(minor))
    if not any(v):
        return None
    return primitive(v)


def _pointed_extreme_rays(normals, dim):
    """Extreme rays of {x : <n,x> >= 0 for all n}, assuming no line inside.

    Every extreme ray lies on dim-1 independent active hyperplanes, so
    enumerating (dim-1)-subsets of the normals finds them all.
    """
    normals = tuple(normals)
    found = set()
    for subset in combinations(normals, dim - 1):
        v = _one_dim_kernel(subset, dim)
        if v is None:
            continue
        pos = neg = False
        for n in normals:
            s = dot(n, v)
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            continue
        if neg:
            v = vneg(v)
        found.add(v)
    return tuple(sorted(found))


def _h_to_v(normals, dim):
    """Generator description of {x : <n,x> >= 0 for all n}.

    Returns (lines, rays): a lattice basis of the lineality space and the
    extreme rays of the pointed part. When there is lineality, a unimodular
    change of coordinates pushes it into the trailing coordinates and the
    pointed part is solved in the leading ones.
    """
    if dim < 1:
        raise DimensionError("dimension must be positive")
    normals = tuple(n for n in normals if any(n))
    if not normals:
        return identity(dim), ()
    _, D, V = smith_normal_form(normals)
    r = 0
    for t in range(min(len(normals), dim)):
        if D[t][t]:
            r += 1
    if r == dim:
        return (), _pointed_extreme_rays(normals, dim)
    lines = []
    for j in range(r, dim):
        col = tuple(V[i][j] for i in range(dim))
        for x in col:
            if x:
                if x < 0:
                    col = vneg(col)
                break
        lines.append(col)
    reduced = sorted({primitive(row[:r]) for row in mat_mul(normals, V)})
    rays = []
    for w in _pointed_extreme_rays(reduced, r):
        rays.append(tuple(sum(V[i][j] * w[j] for j in range(r)) for i in range(dim)))
    return tuple(sorted(lines)), tuple(sorted(rays))


def _with_line_pairs(lines, rays):
    out = set(rays)
    for line in lines:
        out.add(line)
        out.add(vneg(line))
    return tuple(sorted(out))


def _half(v):
    # 0 for angle in [0, pi), 1 for [pi, 2*pi)
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def _circular_cmp(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = a[0] * b[1] - a[1] * b[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


class Cone:
    __slots__ = ("dim", "rays", "halfspaces", "pointed", "full_dim")

    def __init__(self, dim, rays, halfspaces, pointed, full_dim):
        self.dim = dim
        self.rays = rays
        self.halfspaces = halfspaces
        self.pointed = pointed
        self.full_dim = full_dim

    @classmethod
    def from_rays(cls, rays, dim=None):
        rays = [_ivec(r) for r in rays]
        if dim is None:
            if not rays:
                raise DimensionError("cannot infer dimension from an empty ray list")
            dim = len(rays[0])
        if dim < 1:
            raise DimensionError("dimension must be positive")
        for r in rays:
            if len(r) != dim:
                raise DimensionError(f"ray {r} does not have length {dim}")
        norm = sorted({primitive(r) for r in rays if any(r)})
        if dim == 2 and len(norm) >= 2:
            fast = cls._from_rays_2d(norm)
            if fast is not None:
                return fast
        dual_lines, dual_rays = _h_to_v(norm, dim)
        return cls._from_halfspace_set(_with_line_pairs(dual_lines, dual_rays), dim)

    @classmethod
    def _from_rays_2d(cls, norm):
        """Pointed full-dimensional 2D cones without any normal form work.

        Sort the rays by angle; a circular gap wider than pi pins down the
        two extreme rays. Anything degenerate falls back to the generic
        construction by returning None.
        """
        order = sorted(norm, key=cmp_to_key(_circular_cmp))
        k = len(order)
        lo = hi = None
        for i in range(k):
            a = order[i]
            b = order[(i + 1) % k]
            c = a[0] * b[1] - a[1] * b[0]
            if c == 0:
                return None  # antipodal pair, the cone contains a line
            if c < 0:
                lo, hi = b, a
                break
        if lo is None:
            return None  # rays wrap around, the cone is the whole plane
        halfspaces = tuple(sorted(((-lo[1], lo[0]), (hi[1], -hi[0]))))
        return cls(2, tuple(sorted((lo, hi))), halfspaces, True, True)

    @classmethod
    def _from_halfspace_set(cls, halfspaces, dim):
        lines, prays = _h_to_v(halfspaces, dim)
        if lines:
            rays = _with_line_pairs(lines, prays)
            pointed = False
        else:
            rays = tuple(sorted(prays))
            pointed = True
        full = bool(rays) and rank(rays) == dim
        return cls(dim, rays, tuple(sorted(halfspaces)), pointed, full)

    @classmethod
    def from_halfspaces(cls, normals, dim=None):
        # canonicalize the normal set as generators of the dual cone
        dual = cls.from_rays(normals, dim)
        return cls._from_halfspace_set(dual.rays, dual.dim)

    def contains(self, point) -> bool:
        for n in self.halfspaces:
            if dot(n, point) < 0:
                return False
        return True

    def dual(self):
        return Cone.from_rays(self.halfspaces, self.dim)

    def __eq__(self, other):
        return (
            isinstance(other, Cone)
            and self.dim == other.dim
            and self.rays == other.rays
            and self.halfspaces == other.halfspaces
        )

    def __hash__(self):
        return hash((self.dim, self.rays, self.halfspaces))

    def __repr__(self):
        return f"Cone(dim={self.dim}, rays={list(self.rays)})"


def dual_cone(cone: Cone) -> Cone:
    return cone.dual()


def is_pointed(cone: Cone) -> bool:
    return cone.pointed


def interior_point(cone: Cone):
    """Integer point strictly inside every facet halfspace."""
    if not cone.full_dim:
        raise NotFullDimensionalError("interior point needs a full-dimensional cone")
    w = tuple(map(sum, zip(*cone.rays))) if cone.rays else (0,) * cone.dim
    if all(dot(n, w) > 0 for n in cone.halfspaces):
        return w
    point = rational_feasible([(n, 1) for n in cone.halfspaces], cone.dim)
    assert point is not None, "full-dimensional cone has interior"
    scale = 1
    for f in point:
        scale = lcm(scale, f.denominator)
    return tuple(int(f * scale) for f in point)


def _simplicial_pieces(rays, dim):
    """Placing triangulation anchored at the lexicographically smallest ray.

    Input rays must be the extreme rays of their cone. Each output tuple
    spans a simplicial cone; the union is the whole cone with pairwise
    disjoint interiors.
    """
    rays = tuple(sorted(rays))
    if not rays:
        return ()
    if len(rays) == rank(rays):
        return (rays,)
    cone = Cone.from_rays(rays, dim)
    r0 = rays[0]
    pieces = set()
    for h in cone.halfspaces:
        if dot(h, r0) <= 0:
            continue  # facets through r0 are covered by their own cones
        facet = tuple(r for r in cone.rays if dot(h, r) == 0)
        for sub in _simplicial_pieces(facet, dim):
            pieces.add(tuple(sorted(sub + (r0,))))
    return tuple(sorted(pieces))


def triangulate(cone: Cone):
    if not cone.pointed:
        raise NotPointedError("triangulation needs a pointed cone")
    if not cone.full_dim:
        raise NotFullDimensionalError("triangulation needs a full-dimensional cone")
    return tuple(
        Cone.from_rays(piece, cone.dim)
        for piece in _simplicial_pieces(cone.rays, cone.dim)
    )


def parallelepiped_points(vectors):
    """Lattice points with all barycentric coordinates in [0, 1).

    Exactly |det| many: one representative per coset of Z^d modulo the
    column lattice, translated into the half-open box.
    """
    vectors = tuple(_ivec(v) for v in vectors)
    d = len(vectors)
    if d == 0 or any(len(v) != d for v in vectors):
        raise DimensionError("need d vectors in Z^d")
    M = columns_matrix(vectors)
    dM = det(M)
    if dM == 0:
        raise DimensionError("parallelepiped needs linearly independent vectors")
    U, D, _ = smith_normal_form(M)
    diag = tuple(D[i][i] for i in range(d))
    sign = det(U)
    Uadj = adjugate(U)
    Uinv = tuple(tuple(sign * Uadj[i][j] for j in range(d)) for i in range(d))
    Madj = adjugate(M)
    points = []
    for y in product(*(range(di) for di in diag)):
        z = mat_vec(Uinv, y)
        # floor of the rational barycentric coordinates; // floors for any sign
        shift = tuple(dot(Madj[i], z) // dM for i in range(d))
        points.append(
            tuple(z[i] - sum(M[i][j] * shift[j] for j in range(d)) for i in range(d))
        )
    assert len(points) == abs(dM)
    return tuple(sorted(points))


@dataclass(frozen=True)
class HilbertBasis:
    cone: Cone
    elements: tuple


def hilbert_basis(cone: Cone) -> HilbertBasis:
    """Unique minimal generating set of cone ∩ Z^d for a pointed cone."""
    if not cone.pointed:
        raise NotPointedError("Hilbert basis needs a pointed cone")
    if not cone.full_dim:
        raise NotFullDimensionalError("Hilbert basis needs a full-dimensional cone")
    candidates = set(cone.rays)
    for piece in _simplicial_pieces(cone.rays, cone.dim):
        for x in parallelepiped_points(piece):
            if any(x):
                candidates.add(x)
    # sum of facet normals is strictly positive on the cone minus origin
    grading = tuple(map(sum, zip(*cone.halfspaces)))
    ordered = sorted(candidates, key=lambda v: (dot(grading, v), v))
    kept = []
    for v in ordered:
        reducible = False
        for k in kept:
            if cone.contains(vsub(v, k)):
                reducible = True
                break
        if not reducible:
            kept.append(v)
    return HilbertBasis(cone, tuple(sorted(kept)))


def _hull2d(points):
    """Strict convex hull in counterclockwise order (monotone chain)."""
    pts = sorted(points)
    if len(pts) <= 1:
        return list(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and (
            (lower[-1][0] - lower[-2][0]) * (p[1] - lower[-2][1])
            - (lower[-1][1] - lower[-2][1]) * (p[0] - lower[-2][0])
        ) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and (
            (upper[-1][0] - upper[-2][0]) * (p[1] - upper[-2][1])
            - (upper[-1][1] - upper[-2][1]) * (p[0] - upper[-2][0])
        ) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polyhedron_vertices(points, cone: Cone):
    """Sorted vertices of conv(points) + cone.

    A point is a vertex iff some functional is strictly positive on the
    recession rays and strictly minimized at the point; after scaling this
    is plain >= 1 feasibility. In the plane only hull vertices can qualify
    and their two hull neighbors imply all other point constraints.
    """
    pts = sorted({_ivec(p) for p in points})
    if not pts:
        return ()
    ray_constraints = [(r, 1) for r in cone.rays]
    if cone.dim == 2:
        hull = _hull2d(pts)
        k = len(hull)
        out = []
        for i, v in enumerate(hull):
            constraints = list(ray_constraints)
            if k > 1:
                constraints.append((vsub(hull[i - 1], v), 1))
                constraints.append((vsub(hull[(i + 1) % k], v), 1))
            if rational_feasible(constraints, 2) is not None:
                out.append(v)
        return tuple(sorted(out))
    out = []
    for v in pts:
        constraints = [(vsub(q, v), 1) for q in pts if q != v]
        constraints.extend(ray_constraints)
        if rational_feasible(constraints, cone.dim) is not None:
            out.append(v)
    return tuple(sorted(out))
