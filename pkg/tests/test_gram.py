"""Gram matrices, signatures and the geometric trichotomy."""

import random

import numpy as np
import pytest

from coxmut.gram import (
    Signature,
    elliptic_subsets,
    finite_subgroup_order,
    geometric_type,
    gram_entry,
    gram_matrix,
    ideal_vertex_subsets,
    is_elliptic,
    signature,
)
from coxmut.catalog import finite_order
from coxmut.presentation import CoxeterMatrix
from coxmut.rootsystem import standard_coxeter_exponents

EXPONENTS = (2, 3, 4, 6, None)


def coxeter_of(label) -> CoxeterMatrix:
    std = standard_coxeter_exponents(label)
    n = len(std)
    return CoxeterMatrix(n, tuple(tuple(std[i][j] for j in range(n)) for i in range(n)))


def random_coxeter(rng, n) -> CoxeterMatrix:
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = rng.choice(EXPONENTS)
    return CoxeterMatrix(n, tuple(tuple(row) for row in m))


def numpy_signature(cm: CoxeterMatrix) -> Signature:
    """Floating-point eigenvalue oracle; random Coxeter Gram matrices have
    eigenvalues comfortably away from the 1e-9 cut unless exactly zero."""
    a = np.array([[float(x) for x in row] for row in gram_matrix(cm)])
    vals = np.linalg.eigvalsh(a)
    pos = int((vals > 1e-9).sum())
    neg = int((vals < -1e-9).sum())
    return Signature(pos, neg, cm.n - pos - neg)


def test_gram_entries():
    assert float(gram_entry(2)) == 0.0
    assert float(gram_entry(3)) == pytest.approx(-0.5)
    assert float(gram_entry(4)) == pytest.approx(-(2**0.5) / 2)
    assert float(gram_entry(6)) == pytest.approx(-(3**0.5) / 2)
    assert float(gram_entry(None)) == -1.0
    with pytest.raises(ValueError):
        gram_entry(5)


def test_signature_matches_eigenvalue_oracle():
    rng = random.Random(11)
    for _ in range(300):
        cm = random_coxeter(rng, rng.randint(1, 6))
        assert signature(gram_matrix(cm)) == numpy_signature(cm)


def test_signature_independent_of_pivot_order():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(2, 6)
        cm = random_coxeter(rng, n)
        g = gram_matrix(cm)
        base = signature(g)
        order = list(range(n))
        rng.shuffle(order)
        assert signature(g, pivot_order=order) == base


@pytest.mark.parametrize("label", ["A3", "A5", "B4", "D5", "E6", "F4", "G2"])
def test_finite_systems_are_spherical(label):
    cm = coxeter_of(label)
    gt = geometric_type(cm)
    assert gt.kind == "spherical"
    assert gt.dimension == cm.n - 1
    assert gt.signature == Signature(cm.n, 0, 0)


def test_affine_cycle_is_euclidean():
    cm = CoxeterMatrix(3, ((1, 3, 3), (3, 1, 3), (3, 3, 1)))
    gt = geometric_type(cm)
    assert gt.kind == "euclidean"
    assert gt.dimension == 2
    assert gt.signature == Signature(2, 0, 1)


def test_344_triangle_is_hyperbolic():
    cm = CoxeterMatrix(3, ((1, 3, 4), (3, 1, 4), (4, 4, 1)))
    gt = geometric_type(cm)
    assert gt.kind == "hyperbolic"
    assert gt.dimension == 2
    assert gt.signature == Signature(2, 1, 0)


def test_degenerate_hyperbolic_keeps_positive_index_as_dimension():
    # an affine component plus a vertex joined by infinite bonds produces one
    # negative direction with a degenerate radical
    cm = CoxeterMatrix(4, ((1, 3, 3, None), (3, 1, 3, None), (3, 3, 1, None), (None, None, None, 1)))
    gt = geometric_type(cm)
    assert gt.kind == "hyperbolic"
    assert gt.signature.negative == 1
    assert gt.dimension == gt.signature.positive


def brute_elliptic(cm, subset):
    vs = sorted(subset)
    if not vs:
        return True
    sub = cm.submatrix(vs)
    if any(sub.m[i][j] is None for i in range(sub.n) for j in range(sub.n)):
        return False
    return signature(gram_matrix(sub)).positive == sub.n


def test_is_elliptic_matches_signature_oracle():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 5)
        cm = random_coxeter(rng, n)
        for size in range(n + 1):
            for _ in range(4):
                subset = tuple(sorted(rng.sample(range(n), size)))
                assert is_elliptic(cm, subset) == brute_elliptic(cm, subset)


def test_elliptic_subsets_against_brute_force():
    rng = random.Random(14)
    for _ in range(40):
        n = rng.randint(1, 5)
        cm = random_coxeter(rng, n)
        got = {s for s, _ in elliptic_subsets(cm)}
        from itertools import combinations

        want = {
            subset
            for size in range(n + 1)
            for subset in combinations(range(n), size)
            if brute_elliptic(cm, subset)
        }
        assert got == want


def test_elliptic_subset_orders():
    cm = coxeter_of("B3")
    orders = dict(elliptic_subsets(cm))
    assert orders[()] == 1
    assert orders[(0,)] == 2
    assert orders[(0, 1)] == 6  # A2
    assert orders[(1, 2)] == 8  # B2
    assert orders[(0, 2)] == 4  # A1 x A1
    assert orders[(0, 1, 2)] == finite_order("B3")


def brute_ideal(cm, dimension):
    from itertools import combinations

    from coxmut.catalog import connected_components

    out = []
    for size in range(2, cm.n + 1):
        for subset in combinations(range(cm.n), size):
            sub = cm.submatrix(subset)
            comps = connected_components(sub.n, sub.connected_to)
            ok = True
            flat = 0
            for comp in comps:
                block = sub.submatrix(comp)
                sig = signature(gram_matrix(block))
                if not (sig.zero == 1 and sig.positive == block.n - 1):
                    ok = False
                    break
                flat += block.n - 1
            if ok and flat == dimension - 1:
                out.append(subset)
    return out


def test_ideal_vertex_subsets_against_signature_oracle():
    rng = random.Random(15)
    for _ in range(40):
        n = rng.randint(2, 6)
        cm = random_coxeter(rng, n)
        for dim in (2, 3, 4):
            assert ideal_vertex_subsets(cm, dim) == brute_ideal(cm, dim)


def test_finite_subgroup_order_full_system():
    assert finite_subgroup_order(coxeter_of("E6"), range(6)) == finite_order("E6")
    assert finite_subgroup_order(coxeter_of("A3"), ()) == 1
    hyper = CoxeterMatrix(3, ((1, 3, 4), (3, 1, 4), (4, 4, 1)))
    assert finite_subgroup_order(hyper, range(3)) is None
