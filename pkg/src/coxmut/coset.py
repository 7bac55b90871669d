"""Coset enumeration (Todd-Coxeter) for presentations on involutive generators.

Every generator is an involution, so the coset table stores a single edge per
generator and no inverse bookkeeping is needed.  Coincidences are handled
with a union-find over coset labels; the enumeration is HLT-style with
repeated relator scans until the table closes.
"""

from __future__ import annotations

DEFAULT_MAX_COSETS = 1_000_000


class CosetLimitExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"coset enumeration exceeded the cap of {cap} cosets")
        self.cap = cap


def todd_coxeter(ngens: int, relators, subgroup=(), max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    """Index of <subgroup> in <s_1..s_n | s_i^2, relators>.

    ``relators``: words (index tuples) equal to the identity; the square
    relators are implicit.  ``subgroup``: words generating the subgroup.
    Returns the number of cosets, or raises CosetLimitExceeded.
    """
    parent: list[int] = [0]
    nbr: list[list[int | None]] = [[None] * ngens]

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def new_coset() -> int:
        if len(parent) >= max_cosets:
            raise CosetLimitExceeded(max_cosets)
        parent.append(len(parent))
        nbr.append([None] * ngens)
        return len(parent) - 1

    def set_edge(a: int, g: int, b: int) -> None:
        # involutive generators: the edge is symmetric
        for x, y in ((a, b), (b, a)):
            cur = nbr[x][g]
            if cur is None:
                nbr[x][g] = y
            elif find(cur) != find(y):
                merge(cur, y)

    def merge(a: int, b: int) -> None:
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            x, y = find(x), find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            parent[y] = x
            for g in range(ngens):
                e = nbr[y][g]
                if e is None:
                    continue
                cur = nbr[x][g]
                if cur is None:
                    nbr[x][g] = e
                else:
                    queue.append((cur, e))

    def trace(start: int, word, define: bool) -> None:
        """Walk ``word`` from ``start``; with ``define`` fill gaps with new
        cosets and close the loop back to ``start``."""
        c = find(start)
        for pos, g in enumerate(word):
            c = find(c)
            nxt = nbr[c][g]
            if nxt is None:
                if not define:
                    return
                nxt = find(start) if pos == len(word) - 1 else new_coset()
                set_edge(c, g, nxt)
            c = find(nxt)
        if find(c) != find(start):
            merge(c, start)

    for w in subgroup:
        trace(0, tuple(w), define=True)

    # HLT pass: scan relators at each coset in creation order, then fill any
    # undefined edges so the table is complete.
    idx = 0
    while idx < len(parent):
        c = idx
        idx += 1
        if find(c) != c:
            continue
        for w in relators:
            if find(c) != c:
                break
            trace(find(c), tuple(w), define=True)
        if find(c) != c:
            continue
        for g in range(ngens):
            cc = find(c)
            if nbr[cc][g] is None:
                set_edge(cc, g, new_coset())

    # Verification passes: coincidences may have attached unscanned edges to
    # surviving cosets; re-trace until no further collapse.  The table is
    # complete, so tracing only merges.
    while True:
        live = [c for c in range(len(parent)) if find(c) == c]
        for c in live:
            if find(c) != c:
                continue
            for w in relators:
                trace(find(c), tuple(w), define=False)
        after = [c for c in range(len(parent)) if find(c) == c]
        if after == live:
            return len(live)
