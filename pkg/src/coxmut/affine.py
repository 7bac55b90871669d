"""Affine Weyl groups as exact rational affine transformations.

An element is a pair (A, v) acting on simple-root coordinates by
x |-> A x + v.  The finite simple reflections are linear; the extra affine
generator reflects in the hyperplane {x : (theta, x) = 1} where theta is the
highest root, giving the standard affine realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsystem import cartan_matrix, highest_root

DEFAULT_CLOSURE_CAP = 100_000


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"group closure exceeded the cap of {cap} elements")
        self.cap = cap


Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]
AffineElement = tuple[Matrix, Vector]


def aff_identity(n: int) -> AffineElement:
    return (
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
        tuple(Fraction(0) for _ in range(n)),
    )


def aff_mul(e1: AffineElement, e2: AffineElement) -> AffineElement:
    """Apply e1 first, then e2."""
    a1, v1 = e1
    a2, v2 = e2
    n = len(v1)
    a = tuple(tuple(sum(a2[i][k] * a1[k][j] for k in range(n)) for j in range(n)) for i in range(n))
    v = tuple(sum(a2[i][k] * v1[k] for k in range(n)) + v2[i] for i in range(n))
    return (a, v)


def aff_apply(e: AffineElement, x) -> Vector:
    a, v = e
    n = len(v)
    return tuple(sum(a[i][j] * Fraction(x[j]) for j in range(n)) + v[i] for i in range(n))


def is_translation(e: AffineElement) -> bool:
    a, v = e
    n = len(v)
    return all(a[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def symmetrizer(c) -> list[int]:
    """Minimal positive integers d with c[i][j]*d[i] == c[j][i]*d[j]."""
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
    from math import lcm

    scale = lcm(*(x.denominator for x in d))
    out = [int(x * scale) for x in d]
    g = out[0]
    from math import gcd

    for x in out[1:]:
        g = gcd(g, x)
    return [x // g for x in out]


@dataclass(frozen=True)
class AffineRep:
    label: str  # affine label, e.g. "~A2"
    generators: tuple[AffineElement, ...]  # finite nodes first, affine node last
    coxeter: tuple[tuple[int | None, ...], ...]  # exponents of the affine system

    @property
    def n(self) -> int:
        return len(self.generators)


def affine_rep(label: str) -> AffineRep:
    """Standard affine realization for an affine catalogue label ('~X<r>')."""
    if not label.startswith("~"):
        raise ValueError(f"expected an affine label, got {label}")
    finite = label[1:]
    c = cartan_matrix(finite)
    r = len(c)
    d = symmetrizer(c)
    gram = [[Fraction(c[i][j] * d[i]) for j in range(r)] for i in range(r)]
    theta = highest_root(c)
    norm = sum(gram[i][j] * theta[i] * theta[j] for i in range(r) for j in range(r))
    d_theta = norm / 2
    theta_v = [Fraction(t) / d_theta for t in theta]
    g_theta = [sum(gram[i][j] * theta[j] for j in range(r)) for i in range(r)]

    gens = []
    for i in range(r):
        a = tuple(
            tuple(Fraction((1 if row == col else 0) - (c[i][col] if row == i else 0)) for col in range(r))
            for row in range(r)
        )
        gens.append((a, tuple(Fraction(0) for _ in range(r))))
    a0 = tuple(
        tuple(Fraction(int(row == col)) - theta_v[row] * g_theta[col] for col in range(r)) for row in range(r)
    )
    gens.append((a0, tuple(theta_v)))

    # Coxeter exponents from the pairing products, alpha_0 = -theta
    def pair_m(k: int) -> int | None:
        b = sum(g_theta[i] * Fraction(1 if i == k else 0) for i in range(r))
        prod = b * b / (d_theta * d[k])
        # product 4 (the ~A1 double bond) means an infinite exponent
        return {0: 2, 1: 3, 2: 4, 3: 6}.get(int(prod))

    cox = [[None] * (r + 1) for _ in range(r + 1)]
    for i in range(r + 1):
        cox[i][i] = 1
    for i in range(r):
        for j in range(r):
            if i != j:
                prod = c[i][j] * c[j][i]
                cox[i][j] = {0: 2, 1: 3, 2: 4, 3: 6}.get(prod)
    for k in range(r):
        cox[r][k] = cox[k][r] = pair_m(k)
    return AffineRep(label, tuple(gens), tuple(tuple(row) for row in cox))


def aff_evaluate_word(gens, word) -> AffineElement:
    n = len(gens[0][1])
    out = aff_identity(n)
    for i in word:
        out = aff_mul(out, gens[i])
    return out


def bounded_closure_order(gens, cap: int = DEFAULT_CLOSURE_CAP) -> int:
    """Order of the group generated by affine elements, by plain closure."""
    if not gens:
        return 1
    n = len(gens[0][1])
    seen = {aff_identity(n)}
    frontier = [aff_identity(n)]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = aff_mul(e, g)
                if f not in seen:
                    if len(seen) >= cap:
                        raise ClosureCapExceeded(cap)
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return len(seen)


def lattice_rank(vectors) -> int:
    """Rank over Q of a list of rational vectors."""
    rows = [list(map(Fraction, v)) for v in vectors if any(x != 0 for x in v)]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rows and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank
