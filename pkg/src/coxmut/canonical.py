"""Canonical keys for diagrams up to vertex relabeling.

Iterative refinement on (color, labeled in/out neighborhoods) followed by
individualization on the residual cells; the key is the lexicographically
least adjacency encoding over all leaves of the search tree.  Ranks here are
tiny, so simplicity wins over asymptotics.
"""

from __future__ import annotations

from .exchange import Diagram


def _refine(n, out, inn, colors):
    while True:
        keys = [
            (
                colors[i],
                tuple(sorted((w, colors[j]) for j, w in out[i])),
                tuple(sorted((w, colors[j]) for j, w in inn[i])),
            )
            for i in range(n)
        ]
        order = {k: c for c, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _encode(n, edges, position):
    return (n, tuple(sorted((position[i], position[j], w) for i, j, w in edges)))


def canonical_form(g: Diagram) -> bytes:
    """Relabeling-invariant key; equal keys iff diagrams are isomorphic."""
    n = g.n
    out = [[] for _ in range(n)]
    inn = [[] for _ in range(n)]
    for i, j, w in g.edges:
        out[i].append((j, w))
        inn[j].append((i, w))

    best: list = [None]

    def search(colors):
        colors = _refine(n, out, inn, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            position = {v: colors[v] for v in range(n)}
            enc = _encode(n, g.edges, position)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        for v in target:
            branched = list(colors)
            branched[v] = n  # fresh color, splits the cell
            search(branched)

    search([0] * n)
    return repr(best[0]).encode()


def canonical_permutation(g: Diagram) -> dict[int, int]:
    """One vertex -> position map realizing the canonical encoding."""
    n = g.n
    out = [[] for _ in range(n)]
    inn = [[] for _ in range(n)]
    for i, j, w in g.edges:
        out[i].append((j, w))
        inn[j].append((i, w))

    best: list = [None]

    def search(colors):
        colors = _refine(n, out, inn, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            position = {v: colors[v] for v in range(n)}
            enc = _encode(n, g.edges, position)
            if best[0] is None or enc < best[0][0]:
                best[0] = (enc, position)
            return
        for v in target:
            branched = list(colors)
            branched[v] = n
            search(branched)

    search([0] * n)
    return best[0][1]
