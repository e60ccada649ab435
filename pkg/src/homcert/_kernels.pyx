# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of homcert._pykernels.

Same algorithms and same results on every input the dispatcher routes
here (orders up to 64, counts below 2**63); homcert.kernels enforces
those limits before calling in.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #define HC_POPCOUNT(x) __builtin_popcountll(x)
    #define HC_CTZ(x) __builtin_ctzll(x)
    """
    int HC_POPCOUNT(unsigned long long) nogil
    int HC_CTZ(unsigned long long) nogil

cdef uint64_t ONE = 1
cdef uint64_t UMAX = <uint64_t>0xFFFFFFFFFFFFFFFF

CANON_BUDGET = 6000


def _plan(h_rows):
    """Degeneracy order of the pattern plus per-level earlier-neighbor masks."""
    cdef int k = len(h_rows)
    cdef list rows = list(h_rows)
    alive = (1 << k) - 1
    removal = []
    cdef int v, idx, jdx, best_v, best_d, dv
    for _ in range(k):
        best_v = -1
        best_d = k + 1
        for v in range(k):
            if (alive >> v) & 1:
                dv = bin(rows[v] & alive).count("1")
                if dv < best_d:
                    best_d = dv
                    best_v = v
        removal.append(best_v)
        alive ^= 1 << best_v
    order = removal[::-1]
    pmasks = []
    for idx in range(k):
        m = 0
        for jdx in range(idx):
            if (rows[order[idx]] >> order[jdx]) & 1:
                m |= 1 << jdx
        pmasks.append(m)
    return order, pmasks


def hom_count(h_rows, g_rows):
    """Number of adjacency-preserving maps V(h) -> V(g)."""
    cdef int k = len(h_rows)
    cdef int n = len(g_rows)
    if k > 48 or n > 64:
        raise ValueError("compiled kernel limited to 48 pattern / 64 target vertices")
    order, pmasks = _plan(h_rows)
    cdef uint64_t grows[64]
    cdef uint64_t pm[48]
    cdef uint64_t cand[48]
    cdef int assigned[48]
    cdef int i
    for i in range(n):
        grows[i] = <uint64_t>g_rows[i]
    for i in range(k):
        pm[i] = <uint64_t>pmasks[i]
    cdef uint64_t full = UMAX if n == 64 else (ONE << n) - 1
    cdef unsigned long long total = 0
    cdef int last = k - 1
    cdef int level = 0
    cdef int v, j
    cdef uint64_t c, m
    cand[0] = full
    while level >= 0:
        if level == last:
            total += HC_POPCOUNT(cand[level])
            level -= 1
            continue
        if cand[level] == 0:
            level -= 1
            continue
        v = HC_CTZ(cand[level])
        cand[level] &= cand[level] - 1
        assigned[level] = v
        level += 1
        c = full
        m = pm[level]
        while m:
            j = HC_CTZ(m)
            c &= grows[assigned[j]]
            m &= m - 1
        cand[level] = c
    return total


def inj_count(h_rows, g_rows):
    """Number of injective homomorphisms V(h) -> V(g)."""
    cdef int k = len(h_rows)
    cdef int n = len(g_rows)
    if k > 48 or n > 64:
        raise ValueError("compiled kernel limited to 48 pattern / 64 target vertices")
    if k > n:
        return 0
    order, pmasks = _plan(h_rows)
    cdef uint64_t grows[64]
    cdef uint64_t pm[48]
    cdef uint64_t cand[48]
    cdef uint64_t used[49]
    cdef int assigned[48]
    cdef int i
    for i in range(n):
        grows[i] = <uint64_t>g_rows[i]
    for i in range(k):
        pm[i] = <uint64_t>pmasks[i]
    cdef uint64_t full = UMAX if n == 64 else (ONE << n) - 1
    cdef unsigned long long total = 0
    cdef int last = k - 1
    cdef int level = 0
    cdef int v, j
    cdef uint64_t c, m
    used[0] = 0
    cand[0] = full
    while level >= 0:
        if level == last:
            total += HC_POPCOUNT(cand[level])
            level -= 1
            continue
        if cand[level] == 0:
            level -= 1
            continue
        v = HC_CTZ(cand[level])
        cand[level] &= cand[level] - 1
        assigned[level] = v
        used[level + 1] = used[level] | (ONE << v)
        level += 1
        c = full & ~used[level]
        m = pm[level]
        while m:
            j = HC_CTZ(m)
            c &= grows[assigned[j]]
            m &= m - 1
        cand[level] = c
    return total


cdef class _CanonMin:
    cdef uint64_t rows[64]
    cdef uint64_t words[65][64]
    cdef uint64_t cur_cols[64]
    cdef uint64_t best_cols[64]
    cdef int placed[64]
    cdef int best_perm[64]
    cdef int n
    cdef bint have_best

    cdef void rec(self, int p, uint64_t used, bint tight):
        cdef int n = self.n
        cdef int i, v, u
        cdef uint64_t wmin, w
        if p == n:
            if self.have_best:
                for i in range(n):
                    if self.cur_cols[i] < self.best_cols[i]:
                        break
                    if self.cur_cols[i] > self.best_cols[i]:
                        return
                else:
                    return
            for i in range(n):
                self.best_cols[i] = self.cur_cols[i]
                self.best_perm[i] = self.placed[i]
            self.have_best = True
            return
        wmin = UMAX
        for v in range(n):
            if not (used >> v) & 1:
                w = self.words[p][v]
                if w < wmin:
                    wmin = w
        if self.have_best and tight:
            if wmin > self.best_cols[p]:
                return
            tight = wmin == self.best_cols[p]
        self.cur_cols[p] = wmin
        for v in range(n):
            if (used >> v) & 1 or self.words[p][v] != wmin:
                continue
            for u in range(n):
                if not (used >> u) & 1 and u != v:
                    self.words[p + 1][u] = (self.words[p][u] << 1) | (
                        (self.rows[u] >> v) & 1
                    )
            self.placed[p] = v
            self.rec(p + 1, used | (ONE << v), tight)


def canonical_min_rows(rows):
    """Relabeling of the graph whose column bit-string is lexicographically least."""
    rows = tuple(rows)
    cdef int n = len(rows)
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    if n == 1:
        return rows
    full_py = (1 << n) - 1
    if all(r == 0 for r in rows):
        return rows
    if all(r == (full_py ^ (1 << v)) for v, r in enumerate(rows)):
        return rows
    cdef _CanonMin cm = _CanonMin()
    cm.n = n
    cm.have_best = False
    cdef int i, t, s
    for i in range(n):
        cm.rows[i] = <uint64_t>rows[i]
        cm.words[0][i] = 0
    cm.rec(0, 0, True)
    out = [0] * n
    for t in range(n):
        for s in range(n):
            if (cm.rows[cm.best_perm[t]] >> cm.best_perm[s]) & 1:
                out[t] |= 1 << s
    return tuple(out)


cdef class _CanonMax:
    cdef uint64_t rows[64]
    cdef uint64_t idw[64]
    cdef uint64_t words[65][64]
    cdef bint tailzero[65]
    cdef int n
    cdef long nodes
    cdef long budget
    cdef bint over

    cdef bint rec(self, uint64_t used, int p):
        cdef int n = self.n
        cdef int v, u
        cdef uint64_t target, w
        if p == n:
            return False
        if self.tailzero[p]:
            for v in range(n):
                if not (used >> v) & 1 and self.rows[v] != 0:
                    return True
            return False
        self.nodes += 1
        if self.nodes > self.budget:
            self.over = True
            return False
        target = self.idw[p]
        for v in range(n):
            if (used >> v) & 1:
                continue
            if self.words[p][v] > target:
                return True
        for v in range(n):
            if (used >> v) & 1 or self.words[p][v] != target:
                continue
            for u in range(n):
                if not (used >> u) & 1 and u != v:
                    self.words[p + 1][u] = (self.words[p][u] << 1) | (
                        (self.rows[u] >> v) & 1
                    )
            if self.rec(used | (ONE << v), p + 1):
                return True
            if self.over:
                return False
        return False


cdef bint _canon_max_rows(_CanonMax cm, int n, long budget):
    cdef int p, t
    cdef uint64_t w
    for p in range(n):
        w = 0
        for t in range(p):
            w = (w << 1) | ((cm.rows[p] >> t) & 1)
        cm.idw[p] = w
    cm.tailzero[n] = True
    for p in range(n - 1, -1, -1):
        cm.tailzero[p] = cm.tailzero[p + 1] and cm.idw[p] == 0
    cm.n = n
    cm.nodes = 0
    cm.budget = budget
    cm.over = False
    for p in range(n):
        cm.words[0][p] = 0
    return not cm.rec(0, 0)


def is_canonical_max(rows, budget=CANON_BUDGET):
    """Whether no relabeling produces a lexicographically larger column string."""
    rows = tuple(rows)
    cdef int n = len(rows)
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    cdef _CanonMax cm = _CanonMax()
    cdef int i
    for i in range(n):
        cm.rows[i] = <uint64_t>rows[i]
    return bool(_canon_max_rows(cm, n, budget))


cdef class _RegEnum:
    cdef uint64_t rows[64]
    cdef int deg[64]
    cdef int cell_i[2016]
    cdef int cell_j[2016]
    cdef int n, d, total_cells, m_target
    cdef long budget
    cdef list out
    cdef _CanonMax cm

    cdef bint feasible(self, int last_pos):
        cdef int i0 = self.cell_i[last_pos]
        cdef int j0 = self.cell_j[last_pos]
        cdef int remaining = 2 * (self.total_cells - last_pos - 1)
        cdef int needed = 0
        cdef int v, need, s
        for v in range(self.n):
            need = self.d - self.deg[v]
            needed += need
            if need == 0 or v > j0:
                continue
            if v == j0:
                s = (j0 - 1 - i0) + (self.n - 1 - j0)
            else:
                s = (1 if v > i0 else 0) + (self.n - 1 - j0)
            if need > s:
                return False
        return needed <= remaining

    cdef void rec(self, int last_pos, int m):
        cdef int n = self.n
        cdef int u, pos, i, j, v
        if m == self.m_target:
            self.out.append(tuple([self.rows[v] for v in range(n)]))
            return
        u = 0
        while self.deg[u] == self.d:
            u += 1
        cdef int deadline = (n - 1) * (n - 2) // 2 + u
        for pos in range(last_pos + 1, self.total_cells):
            if pos > deadline and self.deg[u] < self.d:
                break
            i = self.cell_i[pos]
            j = self.cell_j[pos]
            if self.deg[i] == self.d or self.deg[j] == self.d:
                continue
            self.rows[i] |= ONE << j
            self.rows[j] |= ONE << i
            self.deg[i] += 1
            self.deg[j] += 1
            if self.feasible(pos):
                for v in range(n):
                    self.cm.rows[v] = self.rows[v]
                if _canon_max_rows(self.cm, n, self.budget):
                    self.rec(pos, m + 1)
            self.rows[i] ^= ONE << j
            self.rows[j] ^= ONE << i
            self.deg[i] -= 1
            self.deg[j] -= 1


def enumerate_regular_rows(n, d, budget=CANON_BUDGET):
    """All d-regular graphs on n vertices, one labeled representative per class."""
    cdef int cn = n
    cdef int cd = d
    if cn < 1:
        raise ValueError("order must be at least 1")
    if cn > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    if cd < 0 or cd >= cn or (cn * cd) % 2 == 1:
        return []
    if cd == 0:
        return [tuple([0] * cn)]
    cdef _RegEnum re = _RegEnum()
    re.n = cn
    re.d = cd
    re.budget = budget
    re.m_target = cn * cd // 2
    re.out = []
    re.cm = _CanonMax()
    cdef int i, j, idx
    idx = 0
    for j in range(cn):
        for i in range(j):
            re.cell_i[idx] = i
            re.cell_j[idx] = j
            idx += 1
    re.total_cells = idx
    for i in range(cn):
        re.rows[i] = 0
        re.deg[i] = 0
    re.rec(-1, 0)
    return re.out
