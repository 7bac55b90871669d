"""Exact Gram-matrix geometry of a Coxeter system.

The Gram matrix has entries -cos(pi/m_ij), all of which live in
Q(sqrt2, sqrt3) for exponents in {2, 3, 4, 6, inf}.  Signatures are computed
by symmetric congruence (Sylvester) reduction with exact signs, so the
spherical / euclidean / hyperbolic trichotomy is decided without any
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .catalog import ComponentInfo, connected_components, identify_component
from .presentation import CoxeterMatrix

from .quadfield import ONE, ZERO, QuadField

_COS = {
    2: ZERO,
    3: QuadField.of(Fraction(1, 2)),
    4: QuadField.of(0, Fraction(1, 2)),
    6: QuadField.of(0, 0, Fraction(1, 2)),
    None: ONE,  # cos(pi/inf) = 1
}


def gram_entry(m_ij) -> QuadField:
    """-cos(pi / m_ij) for m_ij in {1, 2, 3, 4, 6, inf}."""
    if m_ij == 1:
        return ONE
    if m_ij not in _COS:
        raise ValueError(f"no exact Gram entry for exponent {m_ij}")
    return -_COS[m_ij]


def gram_matrix(cm: CoxeterMatrix) -> list[list[QuadField]]:
    return [[gram_entry(cm.m[i][j]) if i != j else ONE for j in range(cm.n)] for i in range(cm.n)]


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int
    zero: int

    @property
    def n(self) -> int:
        return self.positive + self.negative + self.zero


def signature(g: list[list[QuadField]], pivot_order=None) -> Signature:
    """Signature of a symmetric matrix over Q(sqrt2, sqrt3) by congruence
    reduction.  ``pivot_order`` fixes the order in which diagonal pivots are
    tried; the result is independent of it (Sylvester's law)."""
    n = len(g)
    a = [row[:] for row in g]
    active = list(pivot_order) if pivot_order is not None else list(range(n))
    if sorted(active) != list(range(n)):
        raise ValueError("pivot_order must be a permutation of the indices")
    pos = neg = zero = 0
    done: set[int] = set()
    while len(done) < n:
        rest = [i for i in active if i not in done]
        pivot = next((i for i in rest if a[i][i].sign() != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in rest for j in rest if i != j and a[i][j].sign() != 0),
                None,
            )
            if pair is None:
                zero += len(rest)
                break
            # zero diagonal, coupled pair: congruence e_i += e_j makes
            # a[i][i] = 2*a[i][j] != 0 and the loop proceeds normally
            i, j = pair
            for t in rest:
                a[i][t] = a[i][t] + a[j][t]
            for t in rest:
                a[t][i] = a[t][i] + a[t][j]
            continue
        p = a[pivot][pivot]
        if p.sign() > 0:
            pos += 1
        else:
            neg += 1
        done.add(pivot)
        rest = [i for i in rest if i != pivot]
        # Schur complement of the pivot; the border is never read again
        for k in rest:
            factor = a[k][pivot] / p
            if factor.is_zero():
                continue
            for t in rest:
                a[k][t] = a[k][t] - factor * a[pivot][t]
    return Signature(pos, neg, zero)


@dataclass(frozen=True)
class GeometricType:
    kind: str  # "spherical" | "euclidean" | "hyperbolic" | "other"
    dimension: int | None
    signature: Signature


def geometric_type(cm: CoxeterMatrix) -> GeometricType:
    """Trichotomy for a rank-n system.

    Spherical: positive definite (dim n-1).  Euclidean: connected, positive
    semidefinite with a one-dimensional kernel (dim n-1).  Hyperbolic:
    connected with exactly one negative direction; the action dimension is
    the positive index, which is n-1 for simplex diagrams but drops below it
    for pyramid-style diagrams whose Gram matrix is degenerate.
    """
    sig = signature(gram_matrix(cm))
    n = cm.n
    if sig.positive == n:
        return GeometricType("spherical", n - 1, sig)
    connected = len(connected_components(n, cm.connected_to)) == 1
    if connected and sig.negative == 0 and sig.zero == 1:
        return GeometricType("euclidean", n - 1, sig)
    if connected and sig.negative == 1:
        return GeometricType("hyperbolic", sig.positive, sig)
    return GeometricType("other", None, sig)


def classify_components(cm: CoxeterMatrix) -> list[ComponentInfo]:
    comps = connected_components(cm.n, cm.connected_to)
    return [identify_component(c, cm.entry) for c in comps]


def is_elliptic(cm: CoxeterMatrix, subset) -> bool:
    """The standard subgroup on ``subset`` is finite iff its Gram block is
    positive definite, i.e. every connected component is in the finite
    catalogue (the classifications coincide)."""
    return finite_subgroup_order(cm, subset) is not None


def finite_subgroup_order(cm: CoxeterMatrix, subset) -> int | None:
    """Catalogue order of the standard subgroup on ``subset``; None if infinite."""
    vs = sorted(subset)
    if not vs:
        return 1
    order = 1
    for comp in classify_components(cm.submatrix(vs)):
        if comp.kind != "finite":
            return None
        order *= comp.order
    return order


def elliptic_subsets(cm: CoxeterMatrix):
    """All subsets whose standard subgroup is finite, with its order.

    Returns [(subset_tuple, order), ...]; the empty set contributes ((), 1).
    """
    out = [((), 1)]
    good: set[frozenset] = {frozenset()}
    for size in range(1, cm.n + 1):
        found_any = False
        for subset in combinations(range(cm.n), size):
            # monotonicity cut: all facets must already be elliptic
            if any(frozenset(subset) - {v} not in good for v in subset):
                continue
            order = finite_subgroup_order(cm, subset)
            if order is None:
                continue
            good.add(frozenset(subset))
            out.append((subset, order))
            found_any = True
        if not found_any:
            break
    return out


def ideal_vertex_subsets(cm: CoxeterMatrix, dimension: int):
    """Subsets fixing an ideal point of hyperbolic space of the given
    dimension: every connected component affine (positive semidefinite with a
    one-dimensional kernel), with Gram rank exactly dimension - 1.  An affine
    component on k vertices contributes rank k - 1, so the subset spans a
    (dimension - 1)-dimensional flat."""
    out = []
    for size in range(2, cm.n + 1):
        for subset in combinations(range(cm.n), size):
            sub = cm.submatrix(subset)
            comps = classify_components(sub)
            if all(c.kind == "affine" for c in comps):
                flat_dim = sum(len(c.vertices) - 1 for c in comps)
                if flat_dim == dimension - 1:
                    out.append(subset)
    return out
