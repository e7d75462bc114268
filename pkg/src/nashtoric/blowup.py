"""One combinatorial Nash blowup step.

Pipeline: admissible d-subsets of minimal generators (determinant nonzero
mod p) give the ideal exponents; their convex hull plus the semigroup's
cone is the Newton polyhedron; each vertex yields an affine chart.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import ToricError
from .cones import Cone, polyhedron_vertices
from .linalg import columns_matrix, det, dot, vadd, validate_characteristic, vsub
from .semigroups import AffineSemigroup


@dataclass(frozen=True)
class MonomialIdealExponents:
    semigroup: AffineSemigroup
    characteristic: int
    exponents: tuple
    raw_exponents: tuple


def log_jacobian_ideal(S: AffineSemigroup, characteristic) -> MonomialIdealExponents:
    """Exponent set of the logarithmic Jacobian ideal modulo p.

    E = sums of d distinct minimal generators whose determinant does not
    vanish mod p (p = 0 reads as: does not vanish over Z). The public
    exponent list drops any exponent reachable from a smaller one inside
    the semigroup; the raw list is kept for invariance checks.
    """
    p = validate_characteristic(characteristic)
    gens = S.minimal_generators()
    raw = set()
    for subset in combinations(gens, S.dim):
        dt = det(columns_matrix(subset))
        if dt == 0 or (p and dt % p == 0):
            continue
        total = subset[0]
        for g in subset[1:]:
            total = vadd(total, g)
        raw.add(total)
    assert raw, "a full-lattice generator set always has an admissible subset"
    raw = tuple(sorted(raw))
    w = S.grading
    kept = []
    for e in sorted(raw, key=lambda e: (dot(w, e), e)):
        if any(S.membership(vsub(e, k)) for k in kept):
            continue
        kept.append(e)
    return MonomialIdealExponents(S, p, tuple(sorted(kept)), raw)


@dataclass(frozen=True)
class NewtonPolyhedron:
    semigroup: AffineSemigroup
    characteristic: int
    exponents: tuple
    recession_cone: Cone
    vertices: tuple


def newton_polyhedron(ideal: MonomialIdealExponents) -> NewtonPolyhedron:
    """Vertices of conv(exponents) + cone(semigroup)."""
    S = ideal.semigroup
    vertices = polyhedron_vertices(ideal.exponents, S.cone)
    return NewtonPolyhedron(S, ideal.characteristic, ideal.exponents, S.cone, vertices)


@dataclass(frozen=True)
class BlowupChart:
    vertex: tuple
    semigroup: AffineSemigroup
    normalized: bool


def blowup_charts(N: NewtonPolyhedron, normalize: bool = True):
    """One chart per Newton polyhedron vertex, in vertex order.

    The chart at v is generated by the parent's minimal generators together
    with e - v for every exponent e; with normalize the chart semigroup is
    replaced by its saturation.
    """
    S = N.semigroup
    charts = []
    for v in N.vertices:
        gens = list(S.minimal_generators())
        gens.extend(vsub(e, v) for e in N.exponents)
        try:
            chart = AffineSemigroup(S.dim, gens)
        except ToricError as exc:
            # chart semigroups are provably pointed with full group; reaching
            # this means the construction itself is broken
            raise RuntimeError(
                f"blowup chart at vertex {v} violated construction invariants: {exc}"
            ) from exc
        if normalize:
            chart = chart.saturate()
        charts.append(BlowupChart(v, chart, normalize))
    return tuple(charts)


def is_trivial_step(N: NewtonPolyhedron, charts) -> bool:
    """True when the single chart reproduces the parent semigroup.

    Only meaningful for charts built without normalization.
    """
    if len(charts) != 1:
        return False
    return (
        charts[0].semigroup.minimal_generators()
        == N.semigroup.minimal_generators()
    )
