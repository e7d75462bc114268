"""Finitely generated affine semigroups in Z^d.

Construction enforces the two standing hypotheses: the cone spanned by the
generators is pointed, and the generators span all of Z^d as a group.
Everything downstream (membership, minimal generators, saturation,
smoothness) is exact.
"""

import operator
from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .errors import (
    DimensionError,
    NotFullLatticeError,
    NotPointedError,
    NotSaturatedError,
)
from .cones import Cone, hilbert_basis, polyhedron_vertices
from .linalg import columns_matrix, cross2, det, dot, group_is_full_lattice, vsub


def _ivec(v):
    return tuple(operator.index(c) for c in v)


def _generated_member(x, gens, cone, cache) -> bool:
    """Is x a finite sum of the given generators?

    Iterative depth-first search on x minus partial sums, pruned by cone
    membership; the search is a DAG because every generator is strictly
    positive on the cone's grading. cache must map the origin to True. It
    may persist across calls provided the generator list only ever grows
    by elements already marked True in it.
    """
    hit = cache.get(x)
    if hit is not None:
        return hit
    stack = [x]
    while stack:
        v = stack[-1]
        if v in cache:
            stack.pop()
            continue
        result = None
        pending = []
        for g in gens:
            w = vsub(v, g)
            r = cache.get(w)
            if r is True:
                result = True
                break
            if r is None and cone.contains(w):
                pending.append(w)
        if result is None and not pending:
            result = False
        if result is None:
            # revisit v after the unresolved children are settled
            stack.extend(pending)
        else:
            cache[v] = result
            stack.pop()
    return cache[x]


class AffineSemigroup:
    __slots__ = (
        "dim",
        "generators",
        "_cone",
        "_minimal",
        "_saturated",
        "_member_cache",
        "_grading",
    )

    def __init__(self, dim, generators):
        dim = operator.index(dim)
        if dim < 1:
            raise DimensionError("dimension must be positive")
        gens = set()
        for g in generators:
            t = _ivec(g)
            if len(t) != dim:
                raise DimensionError(f"generator {t} does not have length {dim}")
            if any(t):
                gens.add(t)
        if not gens:
            raise NotFullLatticeError("no nonzero generators")
        gens = tuple(sorted(gens))
        cone = Cone.from_rays(gens, dim)
        if not cone.pointed:
            raise NotPointedError("generators span a cone containing a line")
        if not group_is_full_lattice(gens, dim):
            raise NotFullLatticeError("generators do not span Z^d as a group")
        self.dim = dim
        self.generators = gens
        self._cone = cone
        self._minimal = None
        self._saturated = None
        self._member_cache = {(0,) * dim: True}
        self._grading = None

    @classmethod
    def from_cone(cls, cone: Cone) -> "AffineSemigroup":
        """The saturated semigroup cone ∩ Z^d, generated by its Hilbert basis."""
        hb = hilbert_basis(cone)
        s = cls.__new__(cls)
        s.dim = cone.dim
        s.generators = hb.elements
        s._cone = cone
        s._minimal = hb.elements
        s._saturated = True
        s._member_cache = {(0,) * cone.dim: True}
        s._grading = None
        return s

    @property
    def cone(self) -> Cone:
        return self._cone

    @property
    def grading(self):
        """Integer functional strictly positive on the cone minus the origin."""
        if self._grading is None:
            self._grading = tuple(map(sum, zip(*self._cone.halfspaces)))
        return self._grading

    def membership(self, x) -> bool:
        x = _ivec(x)
        if len(x) != self.dim:
            raise DimensionError(f"point {x} does not have length {self.dim}")
        if not self._cone.contains(x):
            return False
        if self._saturated is True:
            # saturated means the semigroup is exactly cone ∩ Z^d
            return True
        return _generated_member(x, self.generators, self._cone, self._member_cache)

    def minimal_generators(self):
        """The unique minimal generating set, lexicographically sorted."""
        if self._minimal is None:
            w = self.grading
            order = sorted(self.generators, key=lambda g: (dot(w, g), g))
            kept = []
            cache = {(0,) * self.dim: True}
            for g in order:
                if kept and _generated_member(g, tuple(kept), self._cone, cache):
                    continue
                kept.append(g)
                cache[g] = True
            self._minimal = tuple(sorted(kept))
        return self._minimal

    def saturate(self) -> "AffineSemigroup":
        if self._saturated is True:
            return self
        return AffineSemigroup.from_cone(self._cone)

    def is_saturated(self) -> bool:
        if self._saturated is None:
            sat = AffineSemigroup.from_cone(self._cone)
            self._saturated = self.minimal_generators() == sat.minimal_generators()
        return self._saturated

    def is_smooth(self) -> bool:
        """Free on a lattice basis: d minimal generators with determinant +-1."""
        gens = self.minimal_generators()
        if len(gens) != self.dim:
            return False
        return abs(det(columns_matrix(gens))) == 1

    def __eq__(self, other):
        return (
            isinstance(other, AffineSemigroup)
            and self.dim == other.dim
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.dim, self.generators))

    def __repr__(self):
        return f"AffineSemigroup(dim={self.dim}, generators={list(self.generators)})"


def _ccw_cmp(a, b):
    c = cross2(a, b)
    if c > 0:
        return -1
    if c < 0:
        return 1
    # same direction: shorter first
    la = a[0] * a[0] + a[1] * a[1]
    lb = b[0] * b[0] + b[1] * b[1]
    if la < lb:
        return -1
    if la > lb:
        return 1
    return 0


@dataclass(frozen=True)
class SurfaceProfile:
    semigroup: AffineSemigroup
    ordered_generators: tuple

    def consecutive_determinants(self):
        gens = self.ordered_generators
        return tuple(cross2(gens[i], gens[i + 1]) for i in range(len(gens) - 1))


def surface_profile(S: AffineSemigroup) -> SurfaceProfile:
    """Minimal generators in counterclockwise order, clockwise-most first.

    Well defined because the cone is pointed, so all generators fit in an
    open half-plane and the cross product comparator is a total order up to
    collinear pairs, which are broken by length.
    """
    if S.dim != 2:
        raise DimensionError("surface profile needs dimension 2")
    ordered = sorted(S.minimal_generators(), key=cmp_to_key(_ccw_cmp))
    return SurfaceProfile(S, tuple(ordered))


def boundary_generators_crosscheck(S: AffineSemigroup):
    """Lattice points on the compact edges of conv(Γ ∖ {0}), sorted.

    For a saturated 2D semigroup this set must coincide with the minimal
    generators; tests compare the two independently computed sides.
    """
    if S.dim != 2:
        raise DimensionError("boundary cross-check needs dimension 2")
    if not S.is_saturated():
        raise NotSaturatedError("boundary cross-check is defined for saturated semigroups")
    gens = S.minimal_generators()
    chain = sorted(polyhedron_vertices(gens, S.cone), key=cmp_to_key(_ccw_cmp))
    pts = set(chain)
    for a, b in zip(chain, chain[1:]):
        step = vsub(b, a)
        g = gcd(step[0], step[1])
        sx, sy = step[0] // g, step[1] // g
        for t in range(1, g):
            pts.add((a[0] + t * sx, a[1] + t * sy))
    return tuple(sorted(pts))
