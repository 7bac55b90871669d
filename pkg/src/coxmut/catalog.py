"""Recognition of connected Coxeter diagrams against the finite and affine catalogues.

Components are matched purely by graph shape and edge labels (m-values);
no Gram arithmetic is involved, so non-crystallographic entries (H3, H4,
I2(m)) are recognized too.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

INF = None  # m_ij = infinity


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    label: str
    kind: str  # "finite" | "affine" | "other"
    order: int | None  # defined for finite components only


_EXCEPTIONAL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}


def finite_order(label: str) -> int:
    """|W| for a finite catalogue label such as 'A4', 'B3', 'D5', 'I2(7)'."""
    if label in _EXCEPTIONAL_ORDERS:
        return _EXCEPTIONAL_ORDERS[label]
    if label.startswith("I2("):
        return 2 * int(label[3:-1])
    family, rank = label[0], int(label[1:])
    if family == "A":
        return factorial(rank + 1)
    if family == "B":
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if family == "G" and rank == 2:
        return 12
    raise ValueError(f"unknown finite label {label}")


def _finite(vs, label):
    return ComponentInfo(tuple(vs), label, "finite", finite_order(label))


def _affine(vs, label):
    return ComponentInfo(tuple(vs), label, "affine", None)


def _other(vs):
    return ComponentInfo(tuple(vs), "Other", "other", None)


def identify_component(vertices, m) -> ComponentInfo:
    """Classify one connected component.

    ``vertices``: iterable of vertex ids; ``m(i, j)``: Coxeter exponent
    (int >= 2, or None for infinity).
    """
    vs = sorted(vertices)
    n = len(vs)
    if n == 1:
        return _finite(vs, "A1")
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            mm = m(vs[a], vs[b])
            if mm != 2:
                edges.append((vs[a], vs[b], mm))
    if n == 2:
        mm = edges[0][2]
        if mm == 3:
            return _finite(vs, "A2")
        if mm == 4:
            return _finite(vs, "B2")
        if mm == 6:
            return _finite(vs, "G2")
        if mm is INF:
            return _affine(vs, "~A1")
        return _finite(vs, f"I2({mm})")

    labels = sorted((e[2] for e in edges), key=lambda x: 99 if x is INF else x)
    deg = {v: 0 for v in vs}
    for a, b, _ in edges:
        deg[a] += 1
        deg[b] += 1

    if len(edges) == n and all(deg[v] == 2 for v in vs):
        if all(l == 3 for l in labels):
            return _affine(vs, f"~A{n - 1}")
        return _other(vs)
    if len(edges) != n - 1:
        return _other(vs)

    # tree component
    adj = {v: [] for v in vs}
    lab = {}
    for a, b, mm in edges:
        adj[a].append(b)
        adj[b].append(a)
        lab[frozenset((a, b))] = mm
    branch = [v for v in vs if deg[v] >= 3]

    def path_labels():
        # edge-label sequence along a path component
        ends = [v for v in vs if deg[v] == 1]
        seq, prev, cur = [], None, ends[0]
        while True:
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:
                break
            seq.append(lab[frozenset((cur, nxts[0]))])
            prev, cur = cur, nxts[0]
        return seq

    def arms(v):
        out = []
        for start in adj[v]:
            length, prev, cur = 1, v, start
            while True:
                nxts = [x for x in adj[cur] if x != prev]
                if not nxts:
                    break
                length += 1
                prev, cur = cur, nxts[0]
            out.append(length)
        return sorted(out)

    if any(l is INF for l in labels):
        return _other(vs)

    if all(l == 3 for l in labels):
        if not branch:
            return _finite(vs, f"A{n}")
        if len(branch) == 1:
            v = branch[0]
            if deg[v] == 4:
                return _affine(vs, "~D4") if arms(v) == [1, 1, 1, 1] else _other(vs)
            a = arms(v)
            if a[:2] == [1, 1]:
                return _finite(vs, f"D{n}")
            table = {(1, 2, 2): ("E6", "finite"), (1, 2, 3): ("E7", "finite"), (1, 2, 4): ("E8", "finite"),
                     (2, 2, 2): ("~E6", "affine"), (1, 3, 3): ("~E7", "affine"), (1, 2, 5): ("~E8", "affine")}
            hit = table.get(tuple(a))
            if hit is None:
                return _other(vs)
            return _finite(vs, hit[0]) if hit[1] == "finite" else _affine(vs, hit[0])
        if len(branch) == 2 and all(deg[v] == 3 for v in branch):
            if all(sorted(arms(v))[:2] == [1, 1] for v in branch):
                return _affine(vs, f"~D{n - 1}")
        return _other(vs)

    if labels.count(4) == 1 and all(l in (3, 4) for l in labels):
        if not branch:
            seq = path_labels()
            if (seq[0] == 4 or seq[-1] == 4) and sum(l == 4 for l in seq) == 1:
                return _finite(vs, f"B{n}")
            if seq == [3, 4, 3]:
                return _finite(vs, "F4")
            if seq in ([3, 3, 4, 3], [3, 4, 3, 3]):
                return _affine(vs, "~F4")
            return _other(vs)
        if len(branch) == 1 and deg[branch[0]] == 3 and arms(branch[0])[:2] == [1, 1]:
            v = branch[0]
            # the 4-edge must be the terminal edge of the long arm, away from the fork
            four = next((a, b) for a, b, mm in edges if mm == 4)
            has_leaf_end = deg[four[0]] == 1 or deg[four[1]] == 1
            leaves3 = [x for x in adj[v] if deg[x] == 1 and lab[frozenset((v, x))] == 3]
            if has_leaf_end and len(leaves3) >= 2:
                return _affine(vs, f"~B{n - 1}")
        return _other(vs)

    if labels.count(4) == 2 and all(l in (3, 4) for l in labels) and not branch:
        seq = path_labels()
        if seq[0] == 4 and seq[-1] == 4 and all(l == 3 for l in seq[1:-1]):
            return _affine(vs, f"~C{n - 1}")
        return _other(vs)

    if labels.count(5) == 1 and all(l in (3, 5) for l in labels) and not branch:
        seq = path_labels()
        if seq in ([5, 3], [3, 5]) and n == 3:
            return _finite(vs, "H3")
        if seq in ([5, 3, 3], [3, 3, 5]) and n == 4:
            return _finite(vs, "H4")
        return _other(vs)

    if labels.count(6) == 1 and all(l in (3, 6) for l in labels) and not branch:
        seq = path_labels()
        if seq in ([6, 3], [3, 6]) and n == 3:
            return _affine(vs, "~G2")
        return _other(vs)

    return _other(vs)


def coxeter_isomorphism(na, ma, nb, mb):
    """Backtracking isomorphism between two Coxeter systems.

    ``ma(i, j)`` / ``mb(i, j)`` give exponents on vertex sets range(na) /
    range(nb).  Returns a dict a-vertex -> b-vertex, or None.  Ranks are
    small, so brute force with neighborhood pruning is plenty.
    """
    if na != nb:
        return None

    def profile(n, m):
        return [tuple(sorted((99 if m(i, j) is None else m(i, j)) for j in range(n) if j != i)) for i in range(n)]

    pa, pb = profile(na, ma), profile(nb, mb)
    if sorted(pa) != sorted(pb):
        return None
    assign: dict[int, int] = {}
    used: set[int] = set()

    def search(i: int):
        if i == na:
            return dict(assign)
        for cand in range(nb):
            if cand in used or pb[cand] != pa[i]:
                continue
            if any(ma(i, j) != mb(cand, assign[j]) for j in assign):
                continue
            assign[i] = cand
            used.add(cand)
            result = search(i + 1)
            if result is not None:
                return result
            del assign[i]
            used.discard(cand)
        return None

    return search(0)


def connected_components(n, connected):
    """Components of {0..n-1} under a symmetric predicate ``connected(i, j)``."""
    seen, comps = set(), []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in range(n):
                if u not in comp and connected(v, u):
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(sorted(comp))
    return comps
