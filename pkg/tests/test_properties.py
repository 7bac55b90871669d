"""Hypothesis property tests for the core invariants."""

from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from coxmut.canonical import canonical_form
from coxmut.exchange import ExchangeMatrix, apply_sequence, check_cycle_products, diagram_view, mutate
from coxmut.presentation import Presentation, emit_presentation, free_reduce, parse_presentation


@st.composite
def matrices(draw, max_n=5):
    n = draw(st.integers(2, max_n))
    d = [draw(st.sampled_from([1, 1, 2, 3])) for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(st.integers(-2, 2))
            g = gcd(d[i], d[j])
            b[i][j] = x * (d[i] // g)
            b[j][i] = -x * (d[j] // g)
    return ExchangeMatrix.from_lists(b, d)


@st.composite
def matrices_with_sequence(draw):
    m = draw(matrices())
    seq = draw(st.lists(st.integers(0, m.n - 1), max_size=6))
    return m, seq


@given(matrices_with_sequence())
def test_mutation_involutive_and_valid_everywhere(ms):
    m, seq = ms
    cur = m
    for k in seq:
        nxt = mutate(cur, k)
        nxt.validate()
        assert mutate(nxt, k) == cur
        assert nxt.d == m.d
        cur = nxt


@given(matrices_with_sequence())
def test_cycle_products_stay_square(ms):
    m, seq = ms
    assert check_cycle_products(diagram_view(apply_sequence(m, seq)))


@given(matrices_with_sequence(), st.randoms(use_true_random=False))
def test_canonical_key_invariant_under_relabeling(ms, rnd):
    from coxmut.exchange import Diagram

    m, seq = ms
    g = diagram_view(apply_sequence(m, seq))
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Diagram(g.n, frozenset((perm[i], perm[j], w) for i, j, w in g.edges))
    assert canonical_form(g) == canonical_form(h)


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 6))
    powers = []
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.sampled_from([None, 2, 3, 4, 6]))
            if m is not None:
                powers.append((i, j, m))
    extras = draw(
        st.lists(
            st.tuples(
                st.lists(st.integers(0, n - 1), min_size=1, max_size=5).map(tuple),
                st.integers(1, 4),
            ),
            max_size=3,
        )
    )
    return Presentation(n, tuple(powers), (), tuple(extras))


@settings(max_examples=200)
@given(presentations())
def test_emit_parse_roundtrip(pres):
    text = emit_presentation(pres)
    back = parse_presentation(text)
    assert back.n_generators == pres.n_generators
    assert sorted(back.power_relators) == sorted(pres.power_relators)
    assert sorted(back.extra_relators) == sorted(pres.extra_relators)
    assert emit_presentation(back) == text


@given(st.lists(st.integers(0, 4), max_size=20))
def test_free_reduce_idempotent_and_reduced(word):
    reduced = free_reduce(word)
    assert free_reduce(reduced) == reduced
    assert all(reduced[i] != reduced[i + 1] for i in range(len(reduced) - 1))
