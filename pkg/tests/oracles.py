"""Independent brute-force reference implementations for cross-checking.

Everything here trades speed for obviousness: permutation determinants,
dense Fraction solves, exhaustive lattice scans. The Hilbert basis oracle
enumerates irreducible lattice points directly from a graded bounding box
and never calls the triangulation-based algorithm under test.
"""

from fractions import Fraction
from itertools import permutations, product
from math import ceil

import numpy as np


def permutation_det(M):
    """Leibniz formula; fine for n <= 5."""
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = 1
        for i, j in enumerate(perm):
            term *= M[i][j]
        total += -term if inv % 2 else term
    return total


def frac_solve(M, rhs):
    """Solve the square system M x = rhs over Q; None when singular."""
    n = len(M)
    A = [
        [Fraction(M[i][j]) for j in range(n)] + [Fraction(rhs[i])]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col] != 0), None)
        if pivot is None:
            return None
        A[col], A[pivot] = A[pivot], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return tuple(row[n] for row in A)


def box_parallelepiped(vectors):
    """Integer points of {sum l_i v_i : 0 <= l_i < 1} by box scan + solve."""
    d = len(vectors)
    corners = [
        tuple(sum(e * v[i] for e, v in zip(eps, vectors)) for i in range(d))
        for eps in product((0, 1), repeat=d)
    ]
    lo = [min(c[i] for c in corners) for i in range(d)]
    hi = [max(c[i] for c in corners) for i in range(d)]
    columns = [[vectors[j][i] for j in range(d)] for i in range(d)]
    out = []
    for x in product(*(range(lo[i], hi[i] + 1) for i in range(d))):
        lam = frac_solve(columns, x)
        if lam is not None and all(0 <= l < 1 for l in lam):
            out.append(x)
    return sorted(out)


def in_cone_2d(rays, z):
    """z in cone(r1, r2) via Cramer; rays must be independent."""
    (a, b), (c, d) = rays
    det = a * d - b * c
    l1 = Fraction(z[0] * d - z[1] * c, det)
    l2 = Fraction(a * z[1] - b * z[0], det)
    return l1 >= 0 and l2 >= 0


def _grade(w, v):
    return sum(wi * vi for wi, vi in zip(w, v))


def _gradings(rays, dim, bound=64):
    """All integer w with <w,r> >= 1 for every ray, at the smallest sup norm."""
    B = 1
    while B <= bound:
        found = [
            w
            for w in product(range(-B, B + 1), repeat=dim)
            if all(_grade(w, r) >= 1 for r in rays)
        ]
        if found:
            return found
        B *= 2
    raise AssertionError(f"no grading with entries <= {bound} for rays {rays}")


def brute_force_hilbert(rays, halfspaces, dim, volume_limit=None):
    """Sorted irreducible lattice points of the cone, i.e. its Hilbert basis.

    Soundness of the cap: in any triangulation piece a point with some ray
    coefficient >= 1 drops a ray and stays in the cone, so every irreducible
    has grade below the sum of the dim largest ray grades. The scan covers
    that whole graded region, so the result is the complete basis.
    """
    for r in rays:
        assert any(r), "zero ray"
        assert all(_grade(h, r) >= 0 for h in halfspaces), "halfspace fails a ray"
    best = None
    for w in _gradings(rays, dim):
        grades = sorted((_grade(w, r) for r in rays), reverse=True)
        cap = sum(grades[:dim])
        exts = [
            max(ceil(abs(r[i]) * cap / _grade(w, r)) for r in rays)
            for i in range(dim)
        ]
        vol = 1
        for e in exts:
            vol *= 2 * e + 1
        if best is None or vol < best[0]:
            best = (vol, w, cap, exts)
    vol, w, cap, exts = best
    if volume_limit is not None and vol > volume_limit:
        raise RuntimeError(f"graded box too large: {vol}")
    points = _cone_points(halfspaces, w, cap, exts, dim)
    irr = []
    for p in sorted(points, key=lambda q: (_grade(w, q), q)):
        gp = _grade(w, p)
        if not any(
            _grade(w, h) < gp
            and tuple(a - b for a, b in zip(p, h)) in points
            for h in irr
        ):
            irr.append(p)
    return sorted(irr)


def _cone_points(halfspaces, w, cap, exts, dim):
    """Lattice points with all halfspace dots >= 0 and grade in [1, cap]."""
    H = np.array(halfspaces, dtype=np.int64).T
    wv = np.array(w, dtype=np.int64)
    tail = [np.arange(-e, e + 1, dtype=np.int64) for e in exts[1:]]
    if tail:
        base = np.stack(np.meshgrid(*tail, indexing="ij"), axis=-1).reshape(-1, dim - 1)
    else:
        base = np.zeros((1, 0), dtype=np.int64)
    points = set()
    for x0 in range(-exts[0], exts[0] + 1):
        grid = np.concatenate(
            [np.full((base.shape[0], 1), x0, dtype=np.int64), base], axis=1
        )
        grades = grid @ wv
        keep = (grades >= 1) & (grades <= cap)
        keep &= (grid @ H >= 0).all(axis=1)
        for row in grid[keep]:
            points.add(tuple(int(c) for c in row))
    return points


def vertices_via_lp(points, rays, dim):
    """Vertex test straight from the definition, one LP per candidate."""
    from nashtoric.lp import rational_feasible

    pts = sorted(set(points))
    out = []
    for v in pts:
        cons = [
            (tuple(p[i] - v[i] for i in range(dim)), 1) for p in pts if p != v
        ]
        cons += [(r, 1) for r in rays]
        if rational_feasible(cons, dim) is not None:
            out.append(v)
    return tuple(out)
