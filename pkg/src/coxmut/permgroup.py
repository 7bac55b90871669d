"""Permutation groups via deterministic stabilizer chains (Schreier-Sims).

Permutations are tuples of images; ``mul(a, b)`` applies a first, then b.
Group orders and membership tests are exact; nothing here is randomized, so
identical inputs always produce identical chains.
"""

from __future__ import annotations

from dataclasses import dataclass


def identity(degree: int):
    return tuple(range(degree))


def mul(a, b):
    """Composition: apply a, then b."""
    return tuple(b[x] for x in a)


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def evaluate_word(gens, word):
    """Product of generator permutations along ``word`` (left to right)."""
    out = identity(len(gens[0]))
    for i in word:
        out = mul(out, gens[i])
    return out


@dataclass
class _Level:
    point: int
    gens: list
    transversal: dict  # orbit point -> coset representative (base point -> that point)


class StabilizerChain:
    """Base-and-strong-generating-set structure for a permutation group."""

    def __init__(self, generators, degree: int):
        self.degree = degree
        self.identity = identity(degree)
        self.levels: list[_Level] = []
        for g in generators:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            self._sift_in(0, tuple(g))
        self._verify()

    # -- construction ------------------------------------------------------

    def _level_generators(self, idx: int):
        """Strong generators acting at level idx: everything installed at
        this level or deeper (those fix all earlier base points too)."""
        out = []
        for lvl in self.levels[idx:]:
            out.extend(lvl.gens)
        return out

    def _close_orbit(self, idx: int) -> None:
        lvl = self.levels[idx]
        gens = self._level_generators(idx)
        frontier = list(lvl.transversal)
        while frontier:
            p = frontier.pop()
            rep = lvl.transversal[p]
            for g in gens:
                q = g[p]
                if q not in lvl.transversal:
                    lvl.transversal[q] = tuple(map(g.__getitem__, rep))
                    frontier.append(q)

    def _add_generator(self, idx: int, g) -> None:
        if idx == len(self.levels):
            point = min(p for p in range(self.degree) if g[p] != p)
            self.levels.append(_Level(point, [], {point: self.identity}))
        self.levels[idx].gens.append(g)
        # the new generator also acts at every earlier level
        for j in range(idx, -1, -1):
            self._close_orbit(j)

    def _sift_in(self, idx: int, g) -> int | None:
        """Strip g from level idx down; install the residue where it sticks.
        Returns the level that changed, or None if g was already a member."""
        h = g
        i = idx
        while i < len(self.levels):
            if h == self.identity:
                return None
            lvl = self.levels[i]
            q = h[lvl.point]
            if q not in lvl.transversal:
                break
            h = mul(h, inverse(lvl.transversal[q]))
            i += 1
        if h == self.identity:
            return None
        self._add_generator(i, h)
        return i

    def _verify(self) -> None:
        """Check every Schreier generator sifts to the identity; on failure,
        install the residue and resume from the level it landed on."""
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            clean = True
            for p in sorted(lvl.transversal):
                rep = lvl.transversal[p]
                for g in self._level_generators(i):
                    schreier = mul(mul(rep, g), inverse(lvl.transversal[g[p]]))
                    changed = self._sift_in(i + 1, schreier)
                    if changed is not None:
                        i = changed
                        clean = False
                        break
                if not clean:
                    break
            if clean:
                i -= 1

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.transversal)
        return out

    def contains(self, g) -> bool:
        h = tuple(g)
        for lvl in self.levels:
            q = h[lvl.point]
            if q not in lvl.transversal:
                return False
            h = mul(h, inverse(lvl.transversal[q]))
        return h == self.identity


def subgroup_order(generators, degree: int) -> int:
    return StabilizerChain(generators, degree).order()


def verify_relators(gens, relator_words) -> bool:
    """True when every relator word evaluates to the identity permutation."""
    ident = identity(len(gens[0]))
    return all(evaluate_word(gens, w) == ident for w in relator_words)
