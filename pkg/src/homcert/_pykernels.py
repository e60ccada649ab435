"""Pure-Python counting and enumeration kernels.

Graphs are passed around as tuples of adjacency bitmasks: rows[v] has bit
u set iff uv is an edge.  homcert._kernels is a compiled twin of this
module with identical semantics; tests assert parity between the two.

All column/bit-string conventions are column-major (graph6 order): the
string of a labeled graph is the concatenation of column words, where
column p holds the adjacency bits of vertex p to vertices 0..p-1, most
significant bit first.  Sorting canonical forms therefore agrees with
sorting graph6 strings of equal order.
"""

from __future__ import annotations

CANON_BUDGET = 6000


def _plan(h_rows):
    """Degeneracy order of the pattern plus per-level earlier-neighbor masks."""
    k = len(h_rows)
    alive = (1 << k) - 1
    removal = []
    for _ in range(k):
        best_v = -1
        best_d = k + 1
        for v in range(k):
            if (alive >> v) & 1:
                dv = (h_rows[v] & alive).bit_count()
                if dv < best_d:
                    best_d = dv
                    best_v = v
        removal.append(best_v)
        alive ^= 1 << best_v
    order = removal[::-1]
    pmasks = []
    for idx, v in enumerate(order):
        m = 0
        for jdx in range(idx):
            if (h_rows[v] >> order[jdx]) & 1:
                m |= 1 << jdx
        pmasks.append(m)
    return order, pmasks


def hom_count(h_rows, g_rows):
    """Number of adjacency-preserving maps V(h) -> V(g)."""
    k = len(h_rows)
    n = len(g_rows)
    order, pmasks = _plan(h_rows)
    full = (1 << n) - 1
    last = k - 1
    assigned = [0] * k
    total = 0

    def candidates(level):
        c = full
        m = pmasks[level]
        while m:
            j = (m & -m).bit_length() - 1
            c &= g_rows[assigned[j]]
            m &= m - 1
        return c

    def rec(level):
        nonlocal total
        c = candidates(level)
        if level == last:
            total += c.bit_count()
            return
        while c:
            v = (c & -c).bit_length() - 1
            assigned[level] = v
            rec(level + 1)
            c &= c - 1

    rec(0)
    return total


def inj_count(h_rows, g_rows):
    """Number of injective homomorphisms V(h) -> V(g)."""
    k = len(h_rows)
    n = len(g_rows)
    if k > n:
        return 0
    order, pmasks = _plan(h_rows)
    full = (1 << n) - 1
    last = k - 1
    assigned = [0] * k
    total = 0

    def rec(level, used):
        nonlocal total
        c = full & ~used
        m = pmasks[level]
        while m:
            j = (m & -m).bit_length() - 1
            c &= g_rows[assigned[j]]
            m &= m - 1
        if level == last:
            total += c.bit_count()
            return
        while c:
            v = (c & -c).bit_length() - 1
            assigned[level] = v
            rec(level + 1, used | (1 << v))
            c &= c - 1

    rec(0, 0)
    return total


def canonical_min_rows(rows):
    """Relabeling of the graph whose column bit-string is lexicographically least.

    Branch-and-bound over placements: at each position only vertices whose
    column word is minimal can extend an optimal prefix, so only ties are
    branched.  Leaves are compared whole against the best string found.
    """
    rows = tuple(rows)
    n = len(rows)
    if n == 1:
        return rows
    full = (1 << n) - 1
    if all(r == 0 for r in rows):
        return rows
    if all(r == (full ^ (1 << v)) for v, r in enumerate(rows)):
        return rows

    best_cols = None
    best_perm = None
    placed = []
    cur_cols = []

    def rec(words, tight):
        nonlocal best_cols, best_perm
        p = len(placed)
        if p == n:
            if best_cols is None or cur_cols < best_cols:
                best_cols = list(cur_cols)
                best_perm = list(placed)
            return
        w_min = None
        ties = []
        for v in range(n):
            w = words[v]
            if w is None:
                continue
            if w_min is None or w < w_min:
                w_min = w
                ties = [v]
            elif w == w_min:
                ties.append(v)
        if best_cols is not None and tight:
            if w_min > best_cols[p]:
                return
            tight = w_min == best_cols[p]
        cur_cols.append(w_min)
        for v in ties:
            words2 = list(words)
            words2[v] = None
            for u in range(n):
                if words2[u] is not None:
                    words2[u] = (words2[u] << 1) | ((rows[u] >> v) & 1)
            placed.append(v)
            rec(words2, tight)
            placed.pop()
        cur_cols.pop()

    rec([0] * n, True)
    out = [0] * n
    for t in range(n):
        rt = rows[best_perm[t]]
        for s in range(n):
            if (rt >> best_perm[s]) & 1:
                out[t] |= 1 << s
    return tuple(out)


def is_canonical_max(rows, budget=CANON_BUDGET):
    """Whether no relabeling produces a lexicographically larger column string.

    Exceeding the node budget returns True without a verdict; callers must
    dedup downstream.  A False is always a genuine witness.
    """
    rows = tuple(rows)
    n = len(rows)
    idw = []
    for p in range(n):
        w = 0
        for t in range(p):
            w = (w << 1) | ((rows[p] >> t) & 1)
        idw.append(w)
    tailzero = [False] * (n + 1)
    tailzero[n] = True
    for p in range(n - 1, -1, -1):
        tailzero[p] = tailzero[p + 1] and idw[p] == 0

    state = {"nodes": 0, "over": False}

    def rec(words, used, p):
        if p == n:
            return False
        if tailzero[p]:
            for v in range(n):
                if not (used >> v) & 1 and rows[v] != 0:
                    return True
            return False
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["over"] = True
            return False
        target = idw[p]
        ties = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            w = words[v]
            if w > target:
                return True
            if w == target:
                ties.append(v)
        for v in ties:
            words2 = list(words)
            for u in range(n):
                if not (used >> u) & 1 and u != v:
                    words2[u] = (words2[u] << 1) | ((rows[u] >> v) & 1)
            if rec(words2, used | (1 << v), p + 1):
                return True
            if state["over"]:
                return False
        return False

    return not rec([0] * n, 0, 0)


def enumerate_regular_rows(n, d, budget=CANON_BUDGET):
    """All d-regular graphs on n vertices, one labeled representative per class.

    Orderly generation: edges are added in increasing cell position (column
    major), and a partial graph is extended only while it stays max-lex
    canonical.  Removing the positionally last edge of a canonical graph
    leaves a canonical graph, so every class is reached.  Budget-capped
    canonicity may keep spurious representatives; callers canonicalize and
    dedup the output.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if d < 0 or d >= n or (n * d) % 2 == 1:
        return []
    if d == 0:
        return [tuple([0] * n)]
    total_cells = n * (n - 1) // 2
    cells = []
    for j in range(n):
        for i in range(j):
            cells.append((i, j))
    rows = [0] * n
    deg = [0] * n
    out = []
    m_target = n * d // 2

    def feasible(last_pos):
        i0, j0 = cells[last_pos]
        remaining = 2 * (total_cells - last_pos - 1)
        needed = 0
        for v in range(n):
            need = d - deg[v]
            needed += need
            if need == 0 or v > j0:
                continue
            if v == j0:
                s = (j0 - 1 - i0) + (n - 1 - j0)
            else:
                s = (1 if v > i0 else 0) + (n - 1 - j0)
            if need > s:
                return False
        return needed <= remaining

    def rec(last_pos, m):
        if m == m_target:
            out.append(tuple(rows))
            return
        u = 0
        while deg[u] == d:
            u += 1
        deadline = (n - 1) * (n - 2) // 2 + u
        for pos in range(last_pos + 1, total_cells):
            if pos > deadline and deg[u] < d:
                break
            i, j = cells[pos]
            if deg[i] == d or deg[j] == d:
                continue
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            deg[i] += 1
            deg[j] += 1
            if feasible(pos) and is_canonical_max(rows, budget):
                rec(pos, m + 1)
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
            deg[i] -= 1
            deg[j] -= 1

    rec(-1, 0)
    return out
