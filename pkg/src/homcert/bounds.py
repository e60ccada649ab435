"""Spectral bounding polynomials for injective homomorphism counts.

For a connected pattern H that is not a tree, build_bound_poly produces a
bivariate polynomial p(lam, d) with

    inj(H, G)  <=  sum over adjacency eigenvalues lam of G of p(lam, d)

for every d-regular G (non-bipartite branch) or every bipartite d-regular
G (bipartite branch).  The construction chains four moves:

  1. edge deletion: inj(H, G) <= inj(H', G) for the spanning unicyclic
     subgraph H' = T + e, T a BFS tree and e a non-tree edge closing a
     shortest cycle (shortest odd cycle in the non-bipartite branch, so
     the anchor exponent is odd);
  2. the partition identity hom(Y) = sum_P inj(Y/P), applied twice, turns
     inj(H') into hom terms of quotients plus smaller inj terms:
     inj(Y) = hom(Y) - sum_P hom(Y/P) + sum_P sum_Q inj(Y/P/Q)
     over nontrivial partitions with loop-free quotients;
  3. hom terms of trees and unicyclic graphs are exact spectral sums
     (hom = sum lam^k d^(n-k), with k = 0 read as the tree case d^(n-1));
     hom of a denser quotient is lower-bounded through its cycle profile,
     hom(Z, G) >= sum_lam [ sum_k c_k lam^k d^(n-k) - (m - n) d^(n-1) ];
  4. the remaining inj terms recurse through the same expansion.

In the bipartite branch every quotient that is not bipartite is dropped:
its hom and inj counts into bipartite targets vanish identically.  When
every loop-free quotient of H' is a tree or unicyclic (and, in the
bipartite branch, bipartite), the full Möbius inversion is taken instead
and the polynomial is exact: its spectral sum equals inj(H', G) for every
d-regular G.

The anchor monomial lam^k d^(n-k) has coefficient 1 and is the unique
monomial of total degree n = |V(H)|; bipartite-branch polynomials contain
only even powers of lam.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from homcert import homomorphism as hm
from homcert.graphs import (
    Graph,
    canonical_form,
    complete,
    complete_bipartite,
    is_bipartite,
    is_connected,
    metrics,
    parse_graph6,
    write_graph6,
)
from homcert.poly import BivarPoly
from homcert.spectral import eval_poly_sum

PARITIES = ("non-bipartite", "bipartite")

EQUALITY_REPORT_SPAN = 5


class BoundViolation(Exception):
    """A certified bound failed on a concrete graph: the exact gap
    sum_lam p(lam, d) - inj(h, g) came out negative."""

    def __init__(self, graph6, gap):
        super().__init__(
            f"bound violated on {graph6}: spectral sum minus count = {gap}"
        )
        self.graph6 = graph6
        self.gap = gap


@dataclass(frozen=True)
class CycleProfile:
    """BFS cycle structure of a connected graph, on its canonical labeling.

    graph is the canonical copy all edges refer to; the BFS tree is rooted
    at vertex 0 (the canonically least vertex), neighbors visited in
    ascending order.  Every non-tree edge uv closes the cycle formed with
    the tree path from u to v; counts[k] is the number of non-tree edges
    whose cycle has length k.
    """

    graph: Graph
    tree_edges: tuple
    non_tree: tuple  # of (u, v, cycle_length)
    counts: dict

    @property
    def order(self):
        return self.graph.order

    @property
    def size(self):
        return self.graph.size


def cycle_profile(h):
    if not is_connected(h):
        raise ValueError("cycle profile requires a connected graph")
    g = canonical_form(h)
    n = g.order
    parent = [-1] * n
    depth = [0] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    q = deque([0])
    while q:
        v = q.popleft()
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                depth[u] = depth[v] + 1
                order.append(u)
                q.append(u)
    tree = {(min(u, v), max(u, v)) for u, v in ((w, parent[w]) for w in range(1, n))}
    non_tree = []
    counts = {}
    for u, v in g.edges():
        if (u, v) in tree:
            continue
        a, b = u, v
        dist = 0
        while depth[a] > depth[b]:
            a = parent[a]
            dist += 1
        while depth[b] > depth[a]:
            b = parent[b]
            dist += 1
        while a != b:
            a = parent[a]
            b = parent[b]
            dist += 2
        k = dist + 1
        non_tree.append((u, v, k))
        counts[k] = counts.get(k, 0) + 1
    return CycleProfile(
        graph=g,
        tree_edges=tuple(sorted(tree)),
        non_tree=tuple(non_tree),
        counts=counts,
    )


def unicyclic_hom_poly(h):
    """Exact spectral polynomial for hom of a connected tree or unicyclic
    pattern: hom(h, G) = sum_lam lam^k d^(n-k) with k the cycle length
    (k = 0 terms, i.e. d^(n-1), for trees)."""
    m = metrics(h)
    if not m.connected:
        raise ValueError("pattern must be connected")
    n = h.order
    if m.size == n - 1:
        return BivarPoly.monomial(0, n - 1)
    if m.size == n:
        k = int(m.girth)
        return BivarPoly.monomial(k, n - k)
    raise ValueError("pattern has more than one cycle")


def neg_hom_majorant(h):
    """Polynomial q with -hom(h, G) <= sum_lam q(lam, d) for d-regular G.

    From the cycle profile: hom(h, G) >= sum over non-tree edges of the
    spectral count of their cycles with the tree completed, minus the
    over-count (m - n) d^(n-1) per extra edge, so q flips that sign:
    q = (m - n) d^(n-1) - sum_k c_k lam^k d^(n-k).
    """
    prof = cycle_profile(h)
    n = prof.order
    m = prof.size
    p = BivarPoly.monomial(0, n - 1, m - n)
    for k, c in sorted(prof.counts.items()):
        p = p - BivarPoly.monomial(k, n - k, c)
    return p


def choose_unicyclic_subgraph(h, parity):
    """Spanning unicyclic subgraph T + e of the canonical copy of h.

    T is the BFS tree of the cycle profile; e is the non-tree edge whose
    BFS cycle is shortest, restricted to odd cycles in the non-bipartite
    branch (one always exists for connected non-bipartite h), ties broken
    by the lexicographically least edge.  Returns (subgraph, cycle_length)
    with the subgraph on the canonical labeling of h.
    """
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")
    prof = cycle_profile(h)
    if not prof.non_tree:
        raise ValueError("pattern is a tree; no cycle to anchor the bound")
    if parity == "non-bipartite":
        candidates = [(k, u, v) for u, v, k in prof.non_tree if k % 2 == 1]
        if not candidates:
            raise ValueError(
                "no odd cycle available; pattern is bipartite, use the "
                "bipartite branch"
            )
    else:
        candidates = [(k, u, v) for u, v, k in prof.non_tree]
    k, u, v = min(candidates)
    edges = list(prof.tree_edges) + [(u, v)]
    return Graph(prof.order, edges), k


@dataclass(frozen=True)
class BoundCertificate:
    """A bounding polynomial with its derivation trace.

    steps is the ordered list of inequality/identity applications; each
    entry records the rule, the sub-pattern it was applied to (graph6),
    and whether the move is exact or an upper bound.  equality_report maps
    degrees d to the exact gap of the bound at the anchor clique (K_{d+1}
    or K_{d,d}); exact means the spectral sum equals inj(H', G) for every
    admissible G, not merely at the anchor.
    """

    pattern: str  # canonical graph6 of H
    parity: str
    anchor_k: int
    poly: BivarPoly
    steps: tuple
    equality_report: dict
    exact: bool

    @property
    def order(self):
        return parse_graph6(self.pattern).order

    def to_json_dict(self):
        return {
            "schema": "bound-certificate/1",
            "pattern": self.pattern,
            "parity": self.parity,
            "anchor_k": self.anchor_k,
            "poly": self.poly.coefficient_list(),
            "steps": [dict(s) for s in self.steps],
            "equality_report": {
                str(d): f"{gap.numerator}/{gap.denominator}"
                for d, gap in sorted(self.equality_report.items())
            },
            "exact": self.exact,
        }

    @classmethod
    def from_json_dict(cls, data):
        if data.get("schema") != "bound-certificate/1":
            raise ValueError("not a bound-certificate/1 document")
        report = {}
        for key, val in data["equality_report"].items():
            num, den = val.split("/")
            report[int(key)] = Fraction(int(num), int(den))
        return cls(
            pattern=data["pattern"],
            parity=data["parity"],
            anchor_k=int(data["anchor_k"]),
            poly=BivarPoly.from_coefficient_list(data["poly"]),
            steps=tuple(data["steps"]),
            equality_report=report,
            exact=bool(data["exact"]),
        )


def _is_tree_or_unicyclic(g):
    return is_connected(g) and g.size <= g.order


def _quotients(y, parity, nontrivial_only=True):
    """Loop-free quotients of y by (non)trivial partitions, parity-filtered."""
    out = []
    for p in hm.enumerate_partitions(y.order):
        if nontrivial_only and p.is_trivial():
            continue
        q = hm.quotient(y, p)
        if q.has_loop:
            continue
        if parity == "bipartite" and not is_bipartite(q.graph):
            continue
        out.append((p, q.graph))
    return out


class _Builder:
    def __init__(self, parity):
        self.parity = parity
        self.steps = []
        self.memo = {}

    def step(self, rule, pattern, kind, detail=None):
        entry = {"rule": rule, "pattern": write_graph6(pattern), "kind": kind}
        if detail is not None:
            entry["detail"] = detail
        if not self.steps or self.steps[-1] != entry:
            self.steps.append(entry)

    def exact_moebius_applicable(self, y):
        """Full Möbius inversion is exact and parity-clean when every
        loop-free quotient (trivial included) is a tree or unicyclic and,
        in the bipartite branch, bipartite."""
        if not _is_tree_or_unicyclic(y):
            return False
        for p in hm.enumerate_partitions(y.order):
            q = hm.quotient(y, p)
            if q.has_loop:
                continue
            if not _is_tree_or_unicyclic(q.graph):
                return False
            if self.parity == "bipartite" and not is_bipartite(q.graph):
                return False
        return True

    def exact_moebius_poly(self, y):
        total = BivarPoly.zero()
        terms = 0
        for p in hm.enumerate_partitions(y.order):
            q = hm.quotient(y, p)
            if q.has_loop:
                continue
            total = total + hm.moebius_coeff(p) * unicyclic_hom_poly(q.graph)
            terms += 1
        self.step(
            "exact-moebius",
            y,
            "exact",
            {"loop_free_terms": terms},
        )
        return total

    def expand_inj(self, y):
        """Exact-or-upper polynomial for inj(y, .): the two-level partition
        expansion.  y must be a tree (bipartite branch only) or unicyclic."""
        p = unicyclic_hom_poly(y)
        self.step("hom-identity", y, "exact")
        for part, z in _quotients(y, self.parity):
            if _is_tree_or_unicyclic(z):
                p = p - unicyclic_hom_poly(z)
                self.step("exact-hom", z, "exact")
            else:
                p = p + neg_hom_majorant(z)
                self.step("hom-majorant", z, "upper")
            for part2, w in _quotients(z, self.parity):
                p = p + self.inj_upper(w)
        return p

    def inj_upper(self, w):
        """Upper-bound polynomial for inj(w, .), memoized on canonical rows."""
        wc = canonical_form(w)
        key = wc.rows
        if key in self.memo:
            return self.memo[key]
        if not is_connected(wc):
            raise ValueError("quotient expansion produced a disconnected graph")
        if _is_tree_or_unicyclic(wc):
            y = wc
        else:
            y, _ = choose_unicyclic_subgraph(wc, self.parity)
            self.step(
                "edge-deletion",
                wc,
                "upper",
                {"kept_edges": y.size, "removed": wc.size - y.size},
            )
        poly = self.expand_inj(y)
        self.memo[key] = poly
        return poly


def _clique_spectral_sum(poly, parity, d):
    """Exact sum of poly over the anchor clique's spectrum."""
    d = Fraction(d)
    if parity == "non-bipartite":
        # K_{d+1}: eigenvalue d once, -1 with multiplicity d
        return poly.evaluate(d, d) + d * poly.evaluate(-1, d)
    # K_{d,d}: eigenvalues d, -d once each and 0 with multiplicity 2d - 2
    return (
        poly.evaluate(d, d)
        + poly.evaluate(-d, d)
        + (2 * d - 2) * poly.evaluate(0, d)
    )


def anchor_clique(parity, d):
    return complete(d + 1) if parity == "non-bipartite" else complete_bipartite(d, d)


def build_bound_poly(h, parity="auto"):
    """Bounding certificate for a connected non-tree pattern.

    parity "auto" selects by the pattern: bipartite patterns get the
    bipartite branch (bound valid for bipartite d-regular targets, anchor
    K_{d,d}), others the non-bipartite branch (valid for all d-regular
    targets, anchor K_{d+1}).
    """
    if h.order > 8:
        raise ValueError("bound construction is limited to patterns with "
                         "at most 8 vertices")
    m = metrics(h)
    if not m.connected:
        raise ValueError("pattern must be connected")
    if m.tree:
        raise ValueError("pattern is a tree; the bound needs a cycle anchor")
    hb = is_bipartite(h)
    if parity == "auto":
        parity = "bipartite" if hb else "non-bipartite"
    elif parity not in PARITIES:
        raise ValueError(f"parity must be 'auto' or one of {PARITIES}")
    elif parity == "bipartite" and not hb:
        raise ValueError("bipartite branch requires a bipartite pattern")
    elif parity == "non-bipartite" and hb:
        raise ValueError(
            "non-bipartite branch requires an odd cycle in the pattern"
        )

    hc = canonical_form(h)
    n = hc.order
    builder = _Builder(parity)
    y, anchor_k = choose_unicyclic_subgraph(hc, parity)
    if y.size < hc.size:
        builder.step(
            "edge-deletion",
            hc,
            "upper",
            {"kept_edges": y.size, "removed": hc.size - y.size},
        )
    if builder.exact_moebius_applicable(y):
        poly = builder.exact_moebius_poly(y)
        exact = True
    else:
        poly = builder.expand_inj(y)
        exact = False

    # shape checks: unique top monomial lam^k d^(n-k) with coefficient 1
    assert poly.total_degree() == n
    top = [(k, j) for (k, j), c in poly.coeffs.items() if k + j == n]
    assert top == [(anchor_k, n - anchor_k)]
    assert poly.coefficient(anchor_k, n - anchor_k) == 1
    if parity == "bipartite":
        assert all(k % 2 == 0 for k, _ in poly.coeffs)

    report = {}
    for d in range(n, n + EQUALITY_REPORT_SPAN):
        clique = anchor_clique(parity, d)
        gap = _clique_spectral_sum(poly, parity, d) - hm.inj_count(hc, clique)
        report[d] = gap
    return BoundCertificate(
        pattern=write_graph6(hc),
        parity=parity,
        anchor_k=anchor_k,
        poly=poly,
        steps=tuple(builder.steps),
        equality_report=report,
        exact=exact,
    )


@dataclass(frozen=True)
class VerificationEntry:
    graph6: str
    degree: int
    gap: Fraction
    is_anchor: bool


@dataclass(frozen=True)
class VerificationReport:
    pattern: str
    parity: str
    entries: tuple
    skipped: tuple
    min_gap: Fraction

    def to_json_dict(self):
        return {
            "schema": "bound-verification/1",
            "pattern": self.pattern,
            "parity": self.parity,
            "count": len(self.entries),
            "skipped": list(self.skipped),
            "min_gap": f"{self.min_gap.numerator}/{self.min_gap.denominator}",
            "entries": [
                {
                    "graph": e.graph6,
                    "d": e.degree,
                    "gap": f"{e.gap.numerator}/{e.gap.denominator}",
                    "is_anchor": e.is_anchor,
                }
                for e in self.entries
            ],
        }


def verify_bound(cert, graphs):
    """Check the certificate against concrete regular graphs, exactly.

    Every graph must be regular (any degree; the polynomial knows d).
    Exact certificates hold for every regular target and are checked
    against all of them.  A non-exact bipartite-branch certificate only
    asserts its bound for bipartite targets, so non-bipartite graphs are
    recorded as skipped rather than checked.  Raises BoundViolation on
    the first negative gap; otherwise returns the per-graph report.
    """
    h = parse_graph6(cert.pattern)
    entries = []
    skipped = []
    for g in graphs:
        mg = metrics(g)
        if not mg.regular:
            raise ValueError(
                f"verification corpus contains a non-regular graph: "
                f"{write_graph6(g)}"
            )
        g6 = write_graph6(canonical_form(g))
        if cert.parity == "bipartite" and not cert.exact and not mg.bipartite:
            skipped.append(g6)
            continue
        d = mg.regularity
        gap = eval_poly_sum(cert.poly, g, d) - hm.inj_count(h, g)
        if gap < 0:
            raise BoundViolation(g6, gap)
        anchor = canonical_form(anchor_clique(cert.parity, d))
        entries.append(
            VerificationEntry(
                graph6=g6,
                degree=d,
                gap=gap,
                is_anchor=(canonical_form(g) == anchor),
            )
        )
    return VerificationReport(
        pattern=cert.pattern,
        parity=cert.parity,
        entries=tuple(entries),
        skipped=tuple(skipped),
        min_gap=min((e.gap for e in entries), default=Fraction(0)),
    )
