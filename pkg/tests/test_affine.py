"""Affine Weyl representations."""

from fractions import Fraction

import pytest

from coxmut.affine import (
    ClosureCapExceeded,
    aff_apply,
    aff_evaluate_word,
    aff_identity,
    aff_mul,
    affine_rep,
    bounded_closure_order,
    is_translation,
    lattice_rank,
    symmetrizer,
)
from coxmut.catalog import finite_order
from coxmut.rootsystem import cartan_matrix


def test_aff_mul_composition_order():
    n = 2
    shift = (aff_identity(n)[0], (Fraction(1), Fraction(0)))
    double = (
        tuple(tuple(Fraction(2) if i == j else Fraction(0) for j in range(n)) for i in range(n)),
        (Fraction(0), Fraction(0)),
    )
    # apply shift first, then double: x -> 2(x + e0)
    composed = aff_mul(shift, double)
    assert aff_apply(composed, (0, 0)) == (Fraction(2), Fraction(0))
    # apply double first, then shift: x -> 2x + e0
    composed = aff_mul(double, shift)
    assert aff_apply(composed, (1, 0)) == (Fraction(3), Fraction(0))


def test_symmetrizer():
    assert symmetrizer(cartan_matrix("A3")) == [1, 1, 1]
    assert symmetrizer(cartan_matrix("G2")) in ([1, 3], [3, 1])
    c = cartan_matrix("B3")
    d = symmetrizer(c)
    n = len(c)
    assert all(c[i][j] * d[i] == c[j][i] * d[j] for i in range(n) for j in range(n))


@pytest.mark.parametrize("label", ["~A1", "~A2", "~A4", "~B3", "~G2"])
def test_affine_generators_satisfy_coxeter_relations(label):
    rep = affine_rep(label)
    n = rep.n
    ident = aff_identity(len(rep.generators[0][1]))
    for i in range(n):
        assert aff_mul(rep.generators[i], rep.generators[i]) == ident
        for j in range(i + 1, n):
            m = rep.coxeter[i][j]
            if m is None:
                continue
            assert aff_evaluate_word(rep.generators, (i, j) * m) == ident
            assert aff_evaluate_word(rep.generators, (i, j) * (m - 1)) != ident


def test_affine_group_is_infinite():
    rep = affine_rep("~A2")
    with pytest.raises(ClosureCapExceeded):
        bounded_closure_order(rep.generators, cap=2000)


def test_finite_parabolic_closure_orders():
    # dropping the affine node leaves the finite Weyl group
    for label, finite in (("~A2", "A2"), ("~B3", "B3"), ("~G2", "G2")):
        rep = affine_rep(label)
        assert bounded_closure_order(rep.generators[:-1]) == finite_order(finite)


def test_translations():
    rep = affine_rep("~A1")
    s0, s1 = rep.generators
    assert not is_translation(s0)
    assert not is_translation(s1)
    # the product of the two reflections is a nonzero translation
    t = aff_mul(s0, s1)
    assert is_translation(t)
    assert any(x != 0 for x in t[1])


def test_lattice_rank():
    assert lattice_rank([(1, 0), (0, 1)]) == 2
    assert lattice_rank([(1, 2), (2, 4)]) == 1
    assert lattice_rank([(0, 0)]) == 0
    assert lattice_rank([(Fraction(1, 2), 0), (1, 0), (0, 3)]) == 2
