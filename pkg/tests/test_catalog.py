"""Finite/affine catalogue recognition and Coxeter-system isomorphism."""

import random
from math import factorial

import pytest

from coxmut.catalog import (
    connected_components,
    coxeter_isomorphism,
    finite_order,
    identify_component,
)
from coxmut.rootsystem import standard_coxeter_exponents


def exponents_of(label):
    std = standard_coxeter_exponents(label)
    return len(std), lambda i, j: std[i][j]


@pytest.mark.parametrize(
    "label, order",
    [
        ("A1", 2),
        ("A4", factorial(5)),
        ("B3", 2**3 * factorial(3)),
        ("B4", 2**4 * factorial(4)),
        ("D4", 2**3 * factorial(4)),
        ("D5", 2**4 * factorial(5)),
        ("E6", 51840),
        ("E7", 2903040),
        ("E8", 696729600),
        ("F4", 1152),
        ("G2", 12),
        ("H3", 120),
        ("H4", 14400),
        ("I2(7)", 14),
    ],
)
def test_finite_orders(label, order):
    assert finite_order(label) == order


@pytest.mark.parametrize("label", ["A1", "A2", "A5", "B2", "B3", "B6", "D4", "D6", "E6", "E7", "E8", "F4", "G2"])
def test_recognizes_standard_finite_systems(label, ):
    n, m = exponents_of(label)
    info = identify_component(range(n), m)
    assert info.kind == "finite"
    assert info.label == label
    assert info.order == finite_order(label)


def test_recognizes_finite_systems_under_relabeling():
    rng = random.Random(5)
    for label in ("A5", "B4", "D5", "E6", "F4"):
        n, m = exponents_of(label)
        perm = list(range(n))
        rng.shuffle(perm)
        inv = {perm[i]: i for i in range(n)}
        info = identify_component(range(n), lambda i, j: m(inv[i], inv[j]))
        assert (info.kind, info.label) == ("finite", label)


def cycle_exponents(n):
    # all consecutive pairs joined by m = 3: the affine ~A_{n-1} system
    def m(i, j):
        if i == j:
            return 1
        return 3 if (i - j) % n in (1, n - 1) else 2

    return m


def test_recognizes_affine_cycle():
    for n in (3, 4, 5, 6):
        info = identify_component(range(n), cycle_exponents(n))
        assert (info.kind, info.label) == ("affine", f"~A{n - 1}")


def test_recognizes_affine_a1():
    info = identify_component(range(2), lambda i, j: 1 if i == j else None)
    assert (info.kind, info.label) == ("affine", "~A1")


def test_recognizes_other():
    # the (3, 4, 4) triangle is hyperbolic: neither finite nor affine
    table = [[1, 3, 4], [3, 1, 4], [4, 4, 1]]
    info = identify_component(range(3), lambda i, j: table[i][j])
    assert info.kind == "other"


def test_connected_components():
    # vertices 0-1 joined, 2 isolated
    comps = connected_components(3, lambda i, j: {(0, 1), (1, 0)}.__contains__((i, j)))
    assert sorted(map(tuple, comps)) == [(0, 1), (2,)]


def test_coxeter_isomorphism_roundtrip():
    rng = random.Random(6)
    for label in ("A4", "B4", "D5", "F4"):
        n, m = exponents_of(label)
        perm = list(range(n))
        rng.shuffle(perm)
        inv = {perm[i]: i for i in range(n)}
        iso = coxeter_isomorphism(n, lambda i, j: m(inv[i], inv[j]), n, m)
        assert iso is not None
        # iso maps the relabeled system onto the standard one
        for i in range(n):
            for j in range(n):
                assert m(inv[i], inv[j]) == m(iso[i], iso[j])


def test_coxeter_isomorphism_rejects_mismatch():
    n, ma = exponents_of("A4")
    _, mb = exponents_of("B4")
    assert coxeter_isomorphism(n, ma, n, mb) is None
