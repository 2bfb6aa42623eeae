"""Pure-Python kernels; the compiled ``_kernels`` module mirrors this API.

Graph arguments arrive in CSR form: ``offsets`` has ``n + 1`` entries and
the neighbours of ``v`` are ``targets[offsets[v]:offsets[v+1]]``, reached
through edge ids ``edge_ids[...]`` at the same positions. Colours are
``1..k``; ``0`` marks an uncoloured edge, which acts as a wildcard.
"""

from collections import deque

BACKEND = "python"


def rainbow_feasible(n, offsets, targets, edge_ids, colors, k):
    """Whether every vertex pair still has a candidate rainbow path.

    A candidate is a walk of length at most ``k`` whose coloured edges carry
    distinct colours. With no wildcards this is exact rainbow connectivity.
    """
    for s in range(n - 1):
        need = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        reached = 1 << s
        best = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue and reached & need != need:
            v, mask = queue.popleft()
            w = best[(v, mask)]
            if mask.bit_count() + w >= k:
                continue
            for p in range(offsets[v], offsets[v + 1]):
                c = colors[edge_ids[p]]
                if c == 0:
                    nmask, nw = mask, w + 1
                else:
                    bit = 1 << (c - 1)
                    if mask & bit:
                        continue
                    nmask, nw = mask | bit, w
                u = targets[p]
                state = (u, nmask)
                old = best.get(state)
                if old is None or nw < old:
                    best[state] = nw
                    reached |= 1 << u
                    queue.append(state)
        if reached & need != need:
            return False
    return True


def search_coloring(n, offsets, targets, edge_ids, m, k, order):
    """Depth-first search for a rainbow ``k``-colouring.

    Edges are coloured in ``order``; an edge may take at most one more than
    the largest colour used so far, so each colouring is visited once up to
    colour permutation. Returns ``(colors or None, nodes)``.
    """
    colors = [0] * m
    nodes = 0

    def rec(i, maxc):
        nonlocal nodes
        nodes += 1
        if i == m:
            return True
        e = order[i]
        for c in range(1, min(maxc + 1, k) + 1):
            colors[e] = c
            if rainbow_feasible(n, offsets, targets, edge_ids, colors, k):
                if rec(i + 1, max(maxc, c)):
                    return True
        colors[e] = 0
        return False

    if not rainbow_feasible(n, offsets, targets, edge_ids, colors, k):
        return None, 1
    found = rec(0, 0)
    return (colors if found else None), nodes


def canon_min(n, adj, cells):
    """Minimal column-major upper-triangle code over cell-respecting orders.

    ``cells`` is an ordered partition of the vertices; position ``i`` of the
    relabeled graph may only hold a vertex from the cell covering ``i``.
    Returns ``(code, order)`` with ``order[i]`` the vertex at position ``i``.
    """
    cell_of_pos = []
    for ci, cell in enumerate(cells):
        cell_of_pos.extend([ci] * len(cell))
    order = [0] * n
    cols = [0] * n
    best_cols = None
    best_order = None
    used = 0

    def rec(j):
        nonlocal best_cols, best_order, used
        if j == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols[:]
                best_order = order[:]
            return
        for v in cells[cell_of_pos[j]]:
            if used >> v & 1:
                continue
            col = 0
            for i in range(j):
                col = col << 1 | (adj[order[i]] >> v & 1)
            cols[j] = col
            if best_cols is not None and cols[: j + 1] > best_cols[: j + 1]:
                continue
            order[j] = v
            used |= 1 << v
            rec(j + 1)
            used &= ~(1 << v)
        cols[j] = 0

    rec(0)
    code = 0
    for j in range(1, n):
        code = code << j | best_cols[j]
    return code, best_order
