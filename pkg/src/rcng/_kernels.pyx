# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same API and semantics as ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"

cdef int MAX_K = 20


cdef struct Csr:
    int n
    int *offsets
    int *targets
    int *edge_ids


cdef struct Scratch:
    unsigned char *best      # n * 2^k, 255 = unseen
    unsigned char *inq
    int *queue               # circular, capacity n * 2^k
    int cap


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef inline int popcount(unsigned int x) nogil:
    return __builtin_popcount(x)


cdef int feasible(Csr *g, int *colors, int k, Scratch *sc) nogil:
    cdef int n = g.n
    cdef int nmasks = 1 << k
    cdef int s, v, u, p, c, w, nw, head, tail, count, st, nst
    cdef unsigned int mask, nmask, bit
    cdef unsigned long long need, reached
    cdef int ok = 1
    for s in range(n - 1):
        need = ((1ULL << n) - 1) & ~((1ULL << (s + 1)) - 1)
        reached = 1ULL << s
        head = 0
        tail = 0
        count = 0
        st = s * nmasks
        sc.best[st] = 0
        sc.inq[st] = 1
        sc.queue[tail] = st
        tail = (tail + 1) % sc.cap
        count = 1
        while count > 0 and (reached & need) != need:
            st = sc.queue[head]
            head = (head + 1) % sc.cap
            count -= 1
            sc.inq[st] = 0
            v = st // nmasks
            mask = st % nmasks
            w = sc.best[st]
            if popcount(mask) + w >= k:
                continue
            for p in range(g.offsets[v], g.offsets[v + 1]):
                c = colors[g.edge_ids[p]]
                if c == 0:
                    nmask = mask
                    nw = w + 1
                else:
                    bit = 1u << (c - 1)
                    if mask & bit:
                        continue
                    nmask = mask | bit
                    nw = w
                u = g.targets[p]
                nst = u * nmasks + nmask
                if nw < sc.best[nst]:
                    sc.best[nst] = nw
                    reached |= 1ULL << u
                    if not sc.inq[nst]:
                        sc.inq[nst] = 1
                        sc.queue[tail] = nst
                        tail = (tail + 1) % sc.cap
                        count += 1
        memset(sc.best, 255, n * nmasks)
        memset(sc.inq, 0, n * nmasks)
        if (reached & need) != need:
            ok = 0
            break
    return ok


cdef class _Workspace:
    cdef Csr g
    cdef Scratch sc
    cdef int *colors
    cdef int m

    def __cinit__(self, int n, offsets, targets, edge_ids, int m, int k):
        cdef int i
        cdef int nnz = len(targets)
        if n > 63:
            raise ValueError("kernels support n <= 63")
        if k > MAX_K:
            raise ValueError(f"kernels support k <= {MAX_K}")
        self.g.n = n
        self.m = m
        self.g.offsets = <int *>malloc((n + 1) * sizeof(int))
        self.g.targets = <int *>malloc((nnz + 1) * sizeof(int))
        self.g.edge_ids = <int *>malloc((nnz + 1) * sizeof(int))
        self.colors = <int *>malloc((m + 1) * sizeof(int))
        self.sc.cap = n * (1 << k)
        self.sc.best = <unsigned char *>malloc(self.sc.cap)
        self.sc.inq = <unsigned char *>malloc(self.sc.cap)
        self.sc.queue = <int *>malloc(self.sc.cap * sizeof(int))
        if (not self.g.offsets or not self.g.targets or not self.g.edge_ids
                or not self.colors or not self.sc.best or not self.sc.inq or not self.sc.queue):
            raise MemoryError()
        for i in range(n + 1):
            self.g.offsets[i] = offsets[i]
        for i in range(nnz):
            self.g.targets[i] = targets[i]
            self.g.edge_ids[i] = edge_ids[i]
        memset(self.colors, 0, (m + 1) * sizeof(int))
        memset(self.sc.best, 255, self.sc.cap)
        memset(self.sc.inq, 0, self.sc.cap)

    def __dealloc__(self):
        free(self.g.offsets)
        free(self.g.targets)
        free(self.g.edge_ids)
        free(self.colors)
        free(self.sc.best)
        free(self.sc.inq)
        free(self.sc.queue)


def rainbow_feasible(int n, offsets, targets, edge_ids, colors, int k):
    """Whether every vertex pair still has a candidate rainbow path."""
    cdef int i
    cdef int m = len(colors)
    if n <= 1:
        return True
    if k <= 0:
        return False
    ws = _Workspace(n, offsets, targets, edge_ids, m, k)
    cdef _Workspace w = ws
    for i in range(m):
        w.colors[i] = colors[i]
    return bool(feasible(&w.g, w.colors, k, &w.sc))


def search_coloring(int n, offsets, targets, edge_ids, int m, int k, order):
    """Depth-first search for a rainbow ``k``-colouring; ``(colors or None, nodes)``."""
    cdef int i, e, c, top, lim
    cdef long long nodes = 0
    cdef int found = 0
    if k <= 0:
        return None, 1
    ws = _Workspace(n, offsets, targets, edge_ids, m, k)
    cdef _Workspace w = ws
    cdef int *ord_ = <int *>malloc((m + 1) * sizeof(int))
    cdef int *maxc = <int *>malloc((m + 2) * sizeof(int))
    if not ord_ or not maxc:
        free(ord_)
        free(maxc)
        raise MemoryError()
    for i in range(m):
        ord_[i] = order[i]
    try:
        with nogil:
            nodes = 1
            if n <= 1 or feasible(&w.g, w.colors, k, &w.sc):
                # maxc[i] = largest colour among the first i ordered edges
                maxc[0] = 0
                top = 0
                if m == 0:
                    found = 1
                while not found and top >= 0:
                    e = ord_[top]
                    c = w.colors[e] + 1
                    lim = maxc[top] + 1
                    if lim > k:
                        lim = k
                    while c <= lim:
                        w.colors[e] = c
                        if feasible(&w.g, w.colors, k, &w.sc):
                            break
                        c += 1
                    if c > lim:
                        w.colors[e] = 0
                        top -= 1
                        continue
                    nodes += 1
                    maxc[top + 1] = maxc[top] if maxc[top] > c else c
                    top += 1
                    if top == m:
                        found = 1
        if found:
            return [w.colors[i] for i in range(m)], nodes
        return None, nodes
    finally:
        free(ord_)
        free(maxc)


def canon_min(int n, adj, cells):
    """Minimal column-major upper-triangle code over cell-respecting orders."""
    cdef unsigned long long a[64]
    cdef int cell_start[64]
    cdef int cell_end[64]
    cdef int members[64]
    cdef int order[64]
    cdef int best_order[64]
    cdef unsigned long long cols[64]
    cdef unsigned long long best_cols[64]
    cdef int cursor[64]
    cdef unsigned long long used = 0
    cdef int have_best = 0
    cdef int i, j, v, pos, ci, cmp, jj
    cdef unsigned long long col
    if n > 63:
        raise ValueError("kernels support n <= 63")
    if n == 0:
        return 0, []
    for i in range(n):
        a[i] = adj[i]
    pos = 0
    for cell in cells:
        start = pos
        for v in cell:
            members[pos] = v
            pos += 1
        for i in range(start, pos):
            cell_start[i] = start
            cell_end[i] = pos
    for i in range(n):
        cols[i] = 0
    j = 0
    cursor[0] = cell_start[0]
    with nogil:
        while j >= 0:
            if j == n:
                cmp = 0
                if have_best:
                    for jj in range(1, n):
                        if cols[jj] != best_cols[jj]:
                            cmp = -1 if cols[jj] < best_cols[jj] else 1
                            break
                if not have_best or cmp < 0:
                    have_best = 1
                    for jj in range(n):
                        best_cols[jj] = cols[jj]
                        best_order[jj] = order[jj]
                j -= 1
                used &= ~(1ULL << order[j])
                continue
            if cursor[j] >= cell_end[j]:
                j -= 1
                if j >= 0:
                    used &= ~(1ULL << order[j])
                continue
            v = members[cursor[j]]
            cursor[j] += 1
            if used >> v & 1:
                continue
            col = 0
            for i in range(j):
                col = col << 1 | ((a[order[i]] >> v) & 1)
            cols[j] = col
            if have_best:
                cmp = 0
                for jj in range(1, j + 1):
                    if cols[jj] != best_cols[jj]:
                        cmp = -1 if cols[jj] < best_cols[jj] else 1
                        break
                if cmp > 0:
                    continue
            order[j] = v
            used |= 1ULL << v
            j += 1
            if j < n:
                cursor[j] = cell_start[j]
    code = 0
    for j in range(1, n):
        code = (code << j) | best_cols[j]
    return code, [best_order[i] for i in range(n)]
