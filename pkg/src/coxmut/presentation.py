"""Coxeter data and group presentations read off a diagram.

Generators are involutions throughout, so words are plain index sequences
with no inverse bookkeeping.  Indices are 0-based in memory and 1-based in
the text format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .exchange import Diagram, ExchangeMatrix, mutate

INF = None

Word = tuple[int, ...]


class LabelError(ValueError):
    pass


class CycleRelatorError(ValueError):
    """No rotation of the cycle yields t(l) = 0; the diagram is outside the
    finite/affine scope this presentation scheme covers."""


class PresentationParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric table of exponents m_ij; None encodes infinity."""

    n: int
    m: tuple[tuple[int | None, ...], ...]

    def entry(self, i: int, j: int):
        return self.m[i][j]

    def connected_to(self, i: int, j: int) -> bool:
        return i != j and self.m[i][j] != 2

    def submatrix(self, vertices) -> "CoxeterMatrix":
        vs = sorted(vertices)
        return CoxeterMatrix(len(vs), tuple(tuple(self.m[i][j] for j in vs) for i in vs))


_LABEL_TO_M = {1: 3, 2: 4, 3: 6, 4: INF}


def coxeter_data(g: Diagram) -> CoxeterMatrix:
    """Coxeter exponents from diagram weights: 1,2,3,4 -> 3,4,6,inf; no edge -> 2."""
    m = [[2] * g.n for _ in range(g.n)]
    for i in range(g.n):
        m[i][i] = 1
    for i, j, w in g.edges:
        if w not in _LABEL_TO_M:
            raise LabelError(f"edge weight {w} on {i}->{j} is outside the supported range 1..4")
        m[i][j] = m[j][i] = _LABEL_TO_M[w]
    return CoxeterMatrix(g.n, tuple(tuple(row) for row in m))


def chordless_oriented_cycles(g: Diagram) -> list[tuple[int, ...]]:
    """Chordless consistently-oriented cycles, one canonical rotation each.

    The representative starts at the least vertex of the cycle and follows
    the arrow direction.
    """
    out = {i: [j for a, j, _ in sorted(g.edges) if a == i] for i in range(g.n)}
    pairs = g.underlying_pairs()
    found = []

    def chordless(cycle):
        d = len(cycle)
        for a in range(d):
            for b in range(a + 1, d):
                if (b - a) % d in (1, d - 1):
                    continue
                if frozenset((cycle[a], cycle[b])) in pairs:
                    return False
        return True

    def dfs(start, path, onpath):
        v = path[-1]
        for w in out[v]:
            if w == start and len(path) >= 3:
                if chordless(path):
                    found.append(tuple(path))
            elif w > start and w not in onpath:
                onpath.add(w)
                path.append(w)
                dfs(start, path, onpath)
                path.pop()
                onpath.discard(w)

    for start in range(g.n):
        dfs(start, [start], {start})
    return sorted(found)


def chordless_cycles_undirected(g: Diagram) -> list[tuple[int, ...]]:
    """Chordless cycles of the underlying graph, orientation ignored."""
    pairs = g.underlying_pairs()
    adj = {i: sorted({v for p in pairs for v in p if i in p and v != i}) for i in range(g.n)}
    found = set()

    def chordless(cycle):
        d = len(cycle)
        for a in range(d):
            for b in range(a + 1, d):
                if (b - a) % d in (1, d - 1):
                    continue
                if frozenset((cycle[a], cycle[b])) in pairs:
                    return False
        return True

    def dfs(start, path, onpath):
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                if chordless(path):
                    found.add(tuple(path))
            elif w > start and w not in onpath:
                onpath.add(w)
                path.append(w)
                dfs(start, path, onpath)
                path.pop()
                onpath.discard(w)

    for start in range(g.n):
        dfs(start, [start], {start})
    return sorted(found)


@dataclass(frozen=True)
class CycleRelator:
    cycle: tuple[int, ...]
    l: int
    t_value: int
    exponent: int
    word: Word


_T_TO_M = {0: 2, 1: 3, 2: 4, 3: 6}


def cycle_t_values(g: Diagram, cycle) -> list[int]:
    """Seven's integer t(l) for each rotation of a chordless oriented cycle."""
    d = len(cycle)
    weights = [g.weight(cycle[t], cycle[(t + 1) % d]) for t in range(d)]
    if any(w == 0 for w in weights):
        raise ValueError("cycle is not consistently oriented in the diagram")
    values = []
    for l in range(d):
        path_prod = 1
        for j in range(d - 1):
            path_prod *= weights[(l + j) % d]
        back = weights[(l + d - 1) % d]
        square = path_prod * back
        root = isqrt(square)
        if root * root != square:
            raise ValueError("cycle label product is not a perfect square")
        values.append(path_prod + back - 2 * root)
    return values


def _relator_word(cycle, l) -> Word:
    d = len(cycle)
    rotated = [cycle[(l + j) % d] for j in range(d)]
    return tuple(rotated[:-1] + [rotated[-1]] + rotated[-2:0:-1])


def cycle_relator(g: Diagram, cycle) -> CycleRelator:
    """Relator for the least rotation with exponent 2 (t(l) = 0)."""
    values = cycle_t_values(g, cycle)
    for l, t in enumerate(values):
        if t == 0:
            return CycleRelator(tuple(cycle), l, t, _T_TO_M[t], _relator_word(cycle, l))
    raise CycleRelatorError(f"no rotation of cycle {tuple(cycle)} has t(l) = 0; t-values {values}")


@dataclass(frozen=True)
class Presentation:
    n_generators: int
    power_relators: tuple[tuple[int, int, int], ...]  # (i, j, m) with m finite
    cycle_relators: tuple[CycleRelator, ...]
    extra_relators: tuple[tuple[Word, int], ...] = ()

    def relator_words(self, include_squares: bool = True):
        """All relators expanded to plain words equal to the identity."""
        words = []
        if include_squares:
            words.extend((i, i) for i in range(self.n_generators))
        for i, j, m in self.power_relators:
            words.append((i, j) * m)
        for c in self.cycle_relators:
            words.append(c.word * c.exponent)
        for w, m in self.extra_relators:
            words.append(tuple(w) * m)
        return words


def build_presentation(g: Diagram, extra=()) -> Presentation:
    cm = coxeter_data(g)
    powers = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if cm.m[i][j] is not INF:
                powers.append((i, j, cm.m[i][j]))
    cycles = [cycle_relator(g, c) for c in chordless_oriented_cycles(g)]
    return Presentation(
        g.n,
        tuple(powers),
        tuple(cycles),
        tuple((tuple(w), int(m)) for w, m in extra),
    )


def free_reduce(word) -> Word:
    """Cancel adjacent equal letters (all generators are involutions)."""
    out: list[int] = []
    for x in word:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def evolve_generators(m: ExchangeMatrix, seq) -> tuple[Word, ...]:
    """Words expressing the generators after the mutation sequence in terms of
    the starting generators.

    At each step k the generator of a vertex with an arrow into k picks up a
    conjugation by the current word of k; the arrow test is evaluated on the
    mutating matrix.
    """
    words: list[Word] = [(i,) for i in range(m.n)]
    cur = m
    for k in seq:
        if not 0 <= k < m.n:
            raise IndexError(f"mutation vertex {k} out of range")
        wk = words[k]
        new = list(words)
        for i in range(m.n):
            if cur.b[i][k] > 0:
                new[i] = free_reduce(wk + words[i] + wk)
        words = new
        cur = mutate(cur, k)
    return tuple(words)


def emit_presentation(p: Presentation) -> str:
    """Deterministic text form; see the grammar in the README."""
    lines = [f"gens {p.n_generators}"]
    for i, j, m in sorted(p.power_relators):
        lines.append(f"pow {i + 1} {j + 1} {m}")
    for c in sorted(p.cycle_relators, key=lambda c: c.word):
        lines.append("cyc " + " ".join(str(x + 1) for x in c.word) + f" ^ {c.exponent}")
    for w, m in sorted(p.extra_relators):
        lines.append("rel " + " ".join(str(x + 1) for x in w) + f" ^ {m}")
    return "\n".join(lines) + "\n"


def _parse_int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PresentationParseError(lineno, col, f"expected an integer, got {tok!r}") from None


def parse_presentation(text: str) -> Presentation:
    n = None
    powers, cycles, extras = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        toks = line.split()
        cols = []
        pos = 0
        for t in toks:
            pos = line.index(t, pos)
            cols.append(pos + 1)
            pos += len(t)
        head = toks[0]
        if head == "gens":
            if len(toks) != 2:
                raise PresentationParseError(lineno, 1, "gens takes exactly one argument")
            n = _parse_int(toks[1], lineno, cols[1])
        elif head in ("pow", "cyc", "rel"):
            if n is None:
                raise PresentationParseError(lineno, 1, "gens line must come first")
            if head == "pow":
                if len(toks) != 4:
                    raise PresentationParseError(lineno, 1, "pow takes three arguments")
                i, j, m = (_parse_int(t, lineno, c) for t, c in zip(toks[1:], cols[1:]))
                powers.append((i - 1, j - 1, m))
            else:
                if len(toks) < 4 or toks[-2] != "^":
                    raise PresentationParseError(lineno, len(line), "expected '... ^ <exponent>'")
                m = _parse_int(toks[-1], lineno, cols[-1])
                letters = tuple(_parse_int(t, lineno, c) - 1 for t, c in zip(toks[1:-2], cols[1:-2]))
                for c, x in zip(cols[1:-2], letters):
                    if not 0 <= x < n:
                        raise PresentationParseError(lineno, c, f"generator index {x + 1} out of range")
                if head == "cyc":
                    cycles.append((letters, m))
                else:
                    extras.append((letters, m))
        else:
            raise PresentationParseError(lineno, 1, f"unknown directive {head!r}")
    if n is None:
        raise PresentationParseError(1, 1, "missing gens line")
    cycle_relators = tuple(_cycle_from_word(w, m) for w, m in cycles)
    return Presentation(n, tuple(powers), cycle_relators, tuple(extras))


def _cycle_from_word(word: Word, exponent: int) -> CycleRelator:
    # word pattern: i_l i_{l+1} ... i_{l+d-1} ... i_{l+1}; recover the cycle
    d = (len(word) + 2) // 2
    rotated = word[:d]
    least = min(range(d), key=lambda t: rotated[t])
    cycle = tuple(rotated[(least + j) % d] for j in range(d))
    l = (-least) % d
    t_value = {2: 0, 3: 1, 4: 2, 6: 3}.get(exponent, 0)
    return CycleRelator(cycle, l, t_value, exponent, word)
