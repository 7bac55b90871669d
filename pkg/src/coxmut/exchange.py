"""Exchange matrices, diagrams and mutation.

The mutation substrate is a skew-symmetrizable integer matrix together with
its symmetrizer.  Diagrams (labeled digraphs) are derived views and are never
mutated directly; the matrix rule is deterministic while the diagram rule has
a sign ambiguity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class InvalidMatrixError(ValueError):
    """Input violates an exchange-matrix invariant.

    ``invariant`` names the failed invariant so callers (and the CLI) can
    produce a precise diagnostic.
    """

    def __init__(self, invariant: str, detail: str):
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class ExchangeMatrix:
    """Skew-symmetrizable integer matrix b with positive symmetrizer d."""

    b: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.b)

    @staticmethod
    def from_lists(b, d=None) -> "ExchangeMatrix":
        n = len(b)
        for row in b:
            if len(row) != n:
                raise InvalidMatrixError("square-shape", f"row of length {len(row)} in {n}x{n} matrix")
        if d is None:
            d = [1] * n
        if len(d) != n:
            raise InvalidMatrixError("symmetrizer-length", f"expected {n} entries, got {len(d)}")
        m = ExchangeMatrix(tuple(tuple(int(x) for x in row) for row in b), tuple(int(x) for x in d))
        m.validate()
        return m

    def validate(self) -> None:
        n = self.n
        for i, di in enumerate(self.d):
            if di <= 0:
                raise InvalidMatrixError("positive-symmetrizer", f"d[{i}] = {di}")
        for i in range(n):
            if self.b[i][i] != 0:
                raise InvalidMatrixError("zero-diagonal", f"b[{i}][{i}] = {self.b[i][i]}")
            for j in range(n):
                if (self.b[i][j] == 0) != (self.b[j][i] == 0):
                    raise InvalidMatrixError(
                        "zero-pattern-symmetry", f"b[{i}][{j}] = {self.b[i][j]} but b[{j}][{i}] = {self.b[j][i]}"
                    )
                if self.b[i][j] * self.d[j] != -self.b[j][i] * self.d[i]:
                    raise InvalidMatrixError(
                        "skew-symmetrizability",
                        f"b[{i}][{j}]*d[{j}] != -b[{j}][{i}]*d[{i}] at (i,j)=({i},{j})",
                    )

    def to_json(self) -> str:
        payload = {"n": self.n, "b": [list(row) for row in self.b]}
        if any(x != 1 for x in self.d):
            payload["d"] = list(self.d)
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "ExchangeMatrix":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidMatrixError("json-syntax", str(exc)) from exc
        if not isinstance(payload, dict) or "b" not in payload:
            raise InvalidMatrixError("json-shape", 'expected an object with a "b" matrix')
        b = payload["b"]
        n = payload.get("n", len(b))
        if n != len(b):
            raise InvalidMatrixError("json-shape", f'"n" = {n} does not match matrix size {len(b)}')
        return ExchangeMatrix.from_lists(b, payload.get("d"))


@dataclass(frozen=True)
class Diagram:
    """Labeled digraph: edges (i, j, w) mean an arrow i -> j with weight w."""

    n: int
    edges: frozenset[tuple[int, int, int]]

    def weight(self, i: int, j: int) -> int:
        """Weight of the arrow i -> j, or 0 if there is none."""
        for a, b, w in self.edges:
            if a == i and b == j:
                return w
        return 0

    def out_edges(self, i: int):
        return sorted((j, w) for a, j, w in self.edges if a == i)

    def in_edges(self, j: int):
        return sorted((i, w) for i, b, w in self.edges if b == j)

    def underlying_pairs(self):
        """Unordered adjacency: {frozenset({i, j}): w}."""
        return {frozenset((i, j)): w for i, j, w in self.edges}

    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = {i: set() for i in range(self.n)}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == self.n


def mutate(m: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at vertex k (0-based).  Involutive."""
    n = m.n
    if not 0 <= k < n:
        raise IndexError(f"mutation vertex {k} out of range for rank {n}")
    b = m.b
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                new[i][j] = -b[i][j]
            else:
                new[i][j] = b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
    return ExchangeMatrix(tuple(tuple(row) for row in new), m.d)


def apply_sequence(m: ExchangeMatrix, seq) -> ExchangeMatrix:
    for k in seq:
        m = mutate(m, k)
    return m


def diagram_view(m: ExchangeMatrix) -> Diagram:
    """Diagram of the matrix: arrow i -> j labeled |b_ij * b_ji| when b_ij > 0."""
    edges = set()
    for i in range(m.n):
        for j in range(m.n):
            if m.b[i][j] > 0:
                edges.add((i, j, abs(m.b[i][j] * m.b[j][i])))
    return Diagram(m.n, frozenset(edges))


def check_cycle_products(g: Diagram) -> bool:
    """Every chordless cycle of the underlying graph carries a perfect-square label product."""
    from .presentation import chordless_cycles_undirected

    for cycle in chordless_cycles_undirected(g):
        prod = 1
        d = len(cycle)
        pairs = g.underlying_pairs()
        for t in range(d):
            prod *= pairs[frozenset((cycle[t], cycle[(t + 1) % d]))]
        if isqrt(prod) ** 2 != prod:
            return False
    return True


_FACTOR_PAIRS = {w: [(p, w // p) for p in range(1, w + 1) if w % p == 0] for w in range(1, 64)}


def realize_matrix(g: Diagram) -> ExchangeMatrix:
    """Reconstruct some exchange matrix whose diagram_view equals ``g``.

    Splits each weight w into b_ij * |b_ji| = w so that a positive rational
    symmetrizer exists; the perfect-square cycle condition guarantees a
    consistent choice.  Backtracks over factorizations (weights here are
    tiny).
    """
    n = g.n
    edge_list = sorted(g.edges)
    choices: list[tuple[int, int]] = []

    def consistent(upto: int):
        # d_i / d_j = p / q for each directed edge (i, j) with split (p, q)
        ratio: dict[int, Fraction] = {}
        for comp_root in range(n):
            if comp_root in ratio:
                continue
            ratio[comp_root] = Fraction(1)
            stack = [comp_root]
            while stack:
                v = stack.pop()
                for idx in range(upto):
                    i, j, _ = edge_list[idx]
                    p, q = choices[idx]
                    for a, bb, r in ((i, j, Fraction(p, q)), (j, i, Fraction(q, p))):
                        if a == v:
                            want = ratio[v] / r
                            if bb in ratio:
                                if ratio[bb] != want:
                                    return None
                            else:
                                ratio[bb] = want
                                stack.append(bb)
        return ratio

    def search(idx: int):
        if idx == len(edge_list):
            return consistent(idx)
        _, _, w = edge_list[idx]
        for pq in _FACTOR_PAIRS[w]:
            choices.append(pq)
            if consistent(idx + 1) is not None:
                result = search(idx + 1)
                if result is not None:
                    return result
            choices.pop()
        return None

    ratio = search(0)
    if ratio is None:
        raise DiagramError("diagram is not realizable by a skew-symmetrizable matrix")
    # clear denominators to get positive integer d
    from math import lcm

    denom = lcm(*(r.denominator for r in ratio.values())) if ratio else 1
    d = [int(ratio[i] * denom) for i in range(n)]
    b = [[0] * n for _ in range(n)]
    for idx, (i, j, _) in enumerate(edge_list):
        p, q = choices[idx] if idx < len(choices) else (1, 1)
        b[i][j] = p
        b[j][i] = -q
    # the split (p, q) was chosen so that p*d_j == q*d_i
    return ExchangeMatrix.from_lists(b, d)
