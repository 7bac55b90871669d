"""Crystallographic root systems and the induced permutation representation.

Roots are kept in root-lattice coordinates (integer tuples over the simple
roots), closed under the simple reflections

    s_i(beta)_i = beta_i - sum_j C[i][j] * beta_j,

so the Cartan convention here is C[i][j] = <alpha_j, alpha_i^vee>.  The
resulting action on the (finite) root list is a faithful permutation
representation of the Weyl group, which is what the stabilizer-chain code
consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache


def cartan_matrix(label: str) -> list[list[int]]:
    """Cartan matrix for a crystallographic finite catalogue label.

    Numbering is along the path, branch node conventions:
    D_n attaches node n-1 to node n-3; E_n attaches the last node to node 2
    (0-based) of an A_{n-1} path.
    """
    if label == "G2":
        return [[2, -1], [-3, 2]]
    if label == "F4":
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    family, rank = label[0], int(label[1:])
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif family == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        # last simple root short: s_{n-1} is the short one
        bond(rank - 2, rank - 1, -1, -2)
    elif family == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == "E" and rank in (6, 7, 8):
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(2, rank - 1)
    else:
        raise ValueError(f"no Cartan matrix for label {label}")
    return c


def root_system(c: list[list[int]]) -> list[tuple[int, ...]]:
    """All roots of the finite system, closed from the simple roots."""
    n = len(c)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple) | {tuple(-x for x in s) for s in simple}
    frontier = list(roots)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(c[i][j] * beta[j] for j in range(n))
                img = tuple(x - pairing if j == i else x for j, x in enumerate(beta))
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(roots)


@dataclass(frozen=True)
class PermRepresentation:
    degree: int
    generators: tuple[tuple[int, ...], ...]  # one permutation per simple reflection
    roots: tuple[tuple[int, ...], ...]


@cache
def weyl_permutation_rep(label: str) -> PermRepresentation:
    """Permutation representation of W(label) on its roots."""
    c = cartan_matrix(label)
    roots = root_system(c)
    index = {r: k for k, r in enumerate(roots)}
    n = len(c)
    gens = []
    for i in range(n):
        perm = []
        for beta in roots:
            pairing = sum(c[i][j] * beta[j] for j in range(n))
            img = tuple(x - pairing if j == i else x for j, x in enumerate(beta))
            perm.append(index[img])
        gens.append(tuple(perm))
    return PermRepresentation(len(roots), tuple(gens), tuple(roots))


def highest_root(c: list[list[int]]) -> tuple[int, ...]:
    """The root of maximal height (coordinate sum)."""
    return max(root_system(c), key=lambda r: sum(r))


def standard_coxeter_exponents(label: str) -> tuple[tuple[int, ...], ...]:
    """Coxeter matrix (m_ij) of a crystallographic finite label, numbered as
    cartan_matrix."""
    c = cartan_matrix(label)
    n = len(c)
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    return tuple(
        tuple(1 if i == j else table[c[i][j] * c[j][i]] for j in range(n)) for i in range(n)
    )


def _symmetrizer_of(c) -> list:
    from fractions import Fraction

    n = len(c)
    d = [Fraction(0)] * n
    for root in range(n):
        if d[root]:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and c[i][j] != 0 and not d[j]:
                    d[j] = d[i] * c[i][j] / c[j][i]
                    stack.append(j)
    return d


def reflection_permutation(label: str, beta) -> tuple[int, ...]:
    """Permutation of the roots of W(label) induced by the reflection in the
    root ``beta`` (simple-root coordinates)."""
    from fractions import Fraction

    rep = weyl_permutation_rep(label)
    c = cartan_matrix(label)
    n = len(c)
    d = _symmetrizer_of(c)
    gram = [[Fraction(c[i][j]) * d[i] for j in range(n)] for i in range(n)]

    def form(x, y):
        return sum(gram[i][j] * x[i] * y[j] for i in range(n) for j in range(n))

    norm = form(beta, beta)
    index = {r: k for k, r in enumerate(rep.roots)}
    perm = []
    for gamma in rep.roots:
        pairing = 2 * form(gamma, beta) / norm
        img = tuple(int(x - pairing * b) for x, b in zip(gamma, beta))
        perm.append(index[img])
    return tuple(perm)


def is_positive_root(root) -> bool:
    return all(x >= 0 for x in root)
