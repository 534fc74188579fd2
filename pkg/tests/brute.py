"""Exhaustive reference implementations; deliberately naive and independent of the package."""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx


def subsets(n, min_size=1):
    for r in range(min_size, n + 1):
        yield from itertools.combinations(range(n), r)


def weighted_edges(g):
    """(u, v, multiplicity) triples for a Graph or Multigraph."""
    return list(g.weighted_edges())


def induced(edges, vs):
    s = set(vs)
    return sum(k for u, v, k in edges if u in s and v in s)


def mad(g):
    edges = weighted_edges(g)
    return max(Fraction(2 * induced(edges, vs), len(vs)) for vs in subsets(g.vertex_count))


def ab_holds(g, a, b, min_vertices):
    edges = weighted_edges(g)
    return all(induced(edges, vs) <= a * len(vs) - b for vs in subsets(g.vertex_count, min_vertices))


def degeneracy(g):
    """max over subsets of min degree (counted with multiplicity)."""
    edges = weighted_edges(g)
    best = 0
    for vs in subsets(g.vertex_count):
        s = set(vs)
        deg = {v: 0 for v in s}
        for u, v, k in edges:
            if u in s and v in s:
                deg[u] += k
                deg[v] += k
        best = max(best, min(deg.values()))
    return best


def conflict_by_line_graph(g):
    """Pairs of edge ids at distance <= 1 in the line graph's square."""
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    for i, (u, v) in enumerate(g.edges):
        h.add_edge(u, v, id=i)
    lg = nx.line_graph(h)
    ident = {tuple(sorted(e)): h.edges[e]["id"] for e in h.edges}
    dist = dict(nx.all_pairs_shortest_path_length(lg, cutoff=2))
    out = set()
    for a, row in dist.items():
        for b, d in row.items():
            if 1 <= d <= 2:
                i, j = ident[tuple(sorted(a))], ident[tuple(sorted(b))]
                out.add((min(i, j), max(i, j)))
    return out


def chromatic_number(n, adjacent):
    """Exact chromatic number by dynamic programming over independent subsets."""
    if n == 0:
        return 0
    full = (1 << n) - 1
    nbr = [0] * n
    for i, j in adjacent:
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    indep = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        indep[s] = indep[rest] and not (nbr[low] & rest)
    best = [0] + [n + 1] * full
    for s in range(1, 1 << n):
        low = s & -s
        t = s
        while t:
            if t & low and indep[t]:
                best[s] = min(best[s], best[s & ~t] + 1)
            t = (t - 1) & s
    return best[full]


def strong_index(g):
    return chromatic_number(g.edge_count, conflict_by_line_graph(g))


def colorable(n, adjacent, k):
    """Plain backtracking in index order: can the graph be properly colored with k colors?"""
    nbrs = [[] for _ in range(n)]
    for i, j in adjacent:
        nbrs[max(i, j)].append(min(i, j))
    col = [-1] * n

    def place(v):
        if v == n:
            return True
        for c in range(min(k, max(col[:v], default=-1) + 2)):
            if all(col[w] != c for w in nbrs[v]):
                col[v] = c
                if place(v + 1):
                    return True
        col[v] = -1
        return False

    return place(0)


def is_class_one(g):
    lg = [(i, j) for i in range(g.edge_count) for j in range(i + 1, g.edge_count)
          if set(g.edges[i]) & set(g.edges[j])]
    return colorable(g.edge_count, lg, g.max_degree())

