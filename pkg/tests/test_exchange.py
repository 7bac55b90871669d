"""Exchange matrices, mutation and diagram views."""

import random

import pytest

from coxmut.exchange import (
    Diagram,
    DiagramError,
    ExchangeMatrix,
    InvalidMatrixError,
    apply_sequence,
    check_cycle_products,
    diagram_view,
    mutate,
    realize_matrix,
)

A3 = ExchangeMatrix.from_lists([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
B3 = ExchangeMatrix.from_lists([[0, 1, 0], [-1, 0, 1], [0, -2, 0]], [1, 1, 2])


def random_skew_symmetric(rng, n):
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-3, 3)
            b[i][j] = x
            b[j][i] = -x
    return ExchangeMatrix.from_lists(b)


def random_skew_symmetrizable(rng, n):
    d = [rng.choice([1, 1, 2, 3]) for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            # b_ij d_j = -b_ji d_i needs b_ij divisible by d_i / gcd
            from math import gcd

            g = gcd(d[i], d[j])
            x = rng.randint(-2, 2)
            b[i][j] = x * (d[i] // g)
            b[j][i] = -x * (d[j] // g)
    return ExchangeMatrix.from_lists(b, d)


def test_mutation_hand_computed_a3():
    # mutating the middle of the A3 path closes a 3-cycle
    out = mutate(A3, 1)
    assert out.b == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_mutation_hand_computed_b3():
    out = mutate(B3, 1)
    assert out.b == ((0, -1, 1), (1, 0, -1), (-2, 2, 0))
    assert out.d == (1, 1, 2)


def test_mutation_is_involutive():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 6)
        m = random_skew_symmetrizable(rng, n)
        k = rng.randrange(n)
        assert mutate(mutate(m, k), k) == m


def test_mutation_preserves_skew_symmetrizability():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(2, 6)
        m = random_skew_symmetrizable(rng, n)
        out = apply_sequence(m, [rng.randrange(n) for _ in range(4)])
        out.validate()  # raises on any violated invariant
        assert out.d == m.d


def test_mutation_vertex_out_of_range():
    with pytest.raises(IndexError):
        mutate(A3, 3)


@pytest.mark.parametrize(
    "b, d, invariant",
    [
        ([[1, 0], [0, 0]], None, "zero-diagonal"),
        ([[0, 1], [0, 0]], None, "zero-pattern-symmetry"),
        ([[0, 1], [-2, 0]], None, "skew-symmetrizability"),
        ([[0, 1], [-1, 0]], [1, 0], "positive-symmetrizer"),
        ([[0, 1], [-1, 0]], [1], "symmetrizer-length"),
        ([[0, 1, 0], [-1, 0]], None, "square-shape"),
    ],
)
def test_invalid_matrices_name_the_invariant(b, d, invariant):
    with pytest.raises(InvalidMatrixError) as exc:
        ExchangeMatrix.from_lists(b, d)
    assert exc.value.invariant == invariant


def test_json_roundtrip():
    for m in (A3, B3):
        assert ExchangeMatrix.from_json(m.to_json()) == m


def test_json_errors():
    with pytest.raises(InvalidMatrixError) as exc:
        ExchangeMatrix.from_json("not json")
    assert exc.value.invariant == "json-syntax"
    with pytest.raises(InvalidMatrixError) as exc:
        ExchangeMatrix.from_json('{"n": 3, "b": [[0, 1], [-1, 0]]}')
    assert exc.value.invariant == "json-shape"


def test_diagram_view_weights():
    g = diagram_view(B3)
    assert g.edges == frozenset({(0, 1, 1), (1, 2, 2)})
    assert g.weight(1, 2) == 2
    assert g.weight(2, 1) == 0
    assert g.max_weight() == 2
    assert g.is_connected()


def test_diagram_view_of_cycle():
    g = diagram_view(mutate(A3, 1))
    assert g.n == 3
    assert len(g.edges) == 3
    assert g.out_edges(0) == [(2, 1)]
    assert g.in_edges(0) == [(1, 1)]


def test_check_cycle_products_on_mutation_classes():
    # the square-product condition is a mutation invariant of valid matrices
    rng = random.Random(9)
    for seed in (A3, B3):
        for _ in range(50):
            seq = [rng.randrange(seed.n) for _ in range(rng.randrange(6))]
            assert check_cycle_products(diagram_view(apply_sequence(seed, seq)))


def test_check_cycle_products_rejects_bad_triangle():
    g = Diagram(3, frozenset({(0, 1, 1), (1, 2, 1), (2, 0, 2)}))
    assert not check_cycle_products(g)


def test_realize_matrix_inverts_diagram_view():
    rng = random.Random(10)
    for seed in (A3, B3):
        for _ in range(50):
            seq = [rng.randrange(seed.n) for _ in range(rng.randrange(6))]
            m = apply_sequence(seed, seq)
            g = diagram_view(m)
            back = realize_matrix(g)
            back.validate()
            assert diagram_view(back) == g


def test_realize_matrix_rejects_unrealizable_diagram():
    g = Diagram(3, frozenset({(0, 1, 1), (1, 2, 1), (2, 0, 2)}))
    with pytest.raises(DiagramError):
        realize_matrix(g)
