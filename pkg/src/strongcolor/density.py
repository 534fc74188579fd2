"""Exact maximum average degree, hereditary (a, b)-sparsity and degeneracy.

The densest-subgraph work is done by a min-cut selection oracle: for a rational
``lam = p/q`` and a forced vertex set ``F`` it finds the largest vertex set
``S ⊇ F`` maximizing ``|E(S)| - lam*|S|`` (edges counted with multiplicity).
Capacities are scaled to integers so every verdict is exact.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

from .graph import Graph, InputError, Multigraph

AnyGraph = Union[Graph, Multigraph]


@dataclass(frozen=True)
class DensityReport:
    mad: Fraction
    witness: frozenset[int]


@dataclass(frozen=True)
class SparsityVerdict:
    a: Fraction
    b: Fraction
    min_vertices: int
    holds: bool
    violator: Optional[frozenset[int]] = None


@dataclass(frozen=True)
class DegeneracyReport:
    degeneracy: int
    ordering: tuple[int, ...]


def induced_edge_count(g: AnyGraph, vertices: Iterable[int]) -> int:
    s = set(vertices)
    return sum(k for u, v, k in g.weighted_edges() if u in s and v in s)


class _SelectionOracle:
    """Reusable network data for one graph; each query is one max-flow."""

    def __init__(self, g: AnyGraph):
        self.n = g.vertex_count
        wedges = list(g.weighted_edges())
        self.eu = np.array([u for u, _, _ in wedges], dtype=np.int64)
        self.ev = np.array([v for _, v, _ in wedges], dtype=np.int64)
        self.ew = np.array([k for _, _, k in wedges], dtype=np.int64)
        deg = np.zeros(self.n, dtype=np.int64)
        np.add.at(deg, self.eu, self.ew)
        np.add.at(deg, self.ev, self.ew)
        self.deg = deg
        self.g = g

    def best_superset(self, lam: Fraction, forced: Iterable[int] = ()) -> tuple[frozenset[int], Fraction]:
        """Largest maximizer of ``|E(S)| - lam*|S|`` over ``S ⊇ forced`` (``S`` may be empty)."""
        n = self.n
        p, q = lam.numerator, lam.denominator
        w = q * self.deg - 2 * p  # twice the scaled gain of each vertex
        forced = set(forced)
        src, snk = n, n + 1
        pos = np.maximum(w, 0)
        big = int(pos.sum() + 2 * q * self.ew.sum() + 1)
        s_cap = pos.copy()
        for v in forced:
            s_cap[v] = big
        t_cap = np.maximum(-w, 0)
        for v in forced:
            t_cap[v] = 0
        verts = np.arange(n)
        rows = np.concatenate([self.eu, self.ev, np.full(n, src), verts])
        cols = np.concatenate([self.ev, self.eu, verts, np.full(n, snk)])
        caps = np.concatenate([q * self.ew, q * self.ew, s_cap, t_cap])
        if big > np.iinfo(np.int32).max:
            raise OverflowError("capacities exceed 32-bit range")
        cap = csr_array((caps.astype(np.int32), (rows, cols)), shape=(n + 2, n + 2))
        cap.sum_duplicates()
        flow = maximum_flow(cap, src, snk).flow
        # residual capacity of arc (x, y) is cap[x, y] - flow[x, y]; the sink side of the
        # minimal cut is everything that can still reach the sink
        resid = (cap - flow).tocsr()
        resid.data = np.where(resid.data > 0, 1, 0)
        resid.eliminate_zeros()
        reach_t = breadth_first_order(resid.T.tocsr(), snk, directed=True, return_predecessors=False)
        sink_side = set(int(x) for x in reach_t)
        chosen = frozenset(v for v in range(n) if v not in sink_side)
        value = induced_edge_count(self.g, chosen) - lam * len(chosen)
        return chosen, value


def maximum_average_degree(g: AnyGraph) -> DensityReport:
    """Exact maximum average degree with a witness vertex set.

    Dinkelbach iteration over the selection oracle: start from the density of
    the whole graph and jump to the density of each improving set.
    """
    n = g.vertex_count
    if n == 0:
        raise InputError("maximum average degree of the empty graph is undefined")
    if g.edge_count == 0:
        return DensityReport(Fraction(0), frozenset([0]))
    oracle = _SelectionOracle(g)
    best = frozenset(range(n))
    lam = Fraction(g.edge_count, n)
    while True:
        cand, value = oracle.best_superset(lam)
        if value <= 0 or not cand:
            break
        best = cand
        lam = Fraction(induced_edge_count(g, cand), len(cand))
    return DensityReport(2 * lam, best)


def _default_min_vertices(b: Fraction) -> int:
    return 1 if b == 0 else 3


def is_ab_graph(
    g: AnyGraph,
    a: Union[int, Fraction],
    b: Union[int, Fraction],
    min_vertices: Optional[int] = None,
) -> SparsityVerdict:
    """Check ``|E(H)| <= a|V(H)| - b`` for every subgraph ``H`` with ``|V(H)| >= min_vertices``.

    Only induced subgraphs need checking. The search forces growing vertex sets
    into the selection oracle and prunes a branch once no superset can beat
    ``-b``; by supermodularity of the induced edge count any violator can be
    assumed to contain the oracle's maximal answer for its seed.
    """
    a, b = Fraction(a), Fraction(b)
    if a < 1 or b < 0:
        raise InputError("need a >= 1 and b >= 0")
    k = _default_min_vertices(b) if min_vertices is None else int(min_vertices)
    if k < 1:
        raise InputError("min_vertices must be positive")
    n = g.vertex_count

    def verdict(violator=None):
        return SparsityVerdict(a, b, k, violator is None, violator)

    if n < k:
        return verdict()
    if b > a * k:
        # every k-set already violates
        return verdict(frozenset(range(k)))

    oracle = _SelectionOracle(g)
    step = Fraction(1, a.denominator)  # granularity of |E(S)| - a|S|

    if b == 0:
        cand, value = oracle.best_superset(a)
        if value <= 0:
            return verdict()
        if len(cand) >= k:
            return verdict(cand)

    # a violator has at least one edge when b <= a*k, so seed with adjacent pairs
    seeds = sorted({(u, v) for u, v, _ in g.weighted_edges()})
    visited: set[frozenset[int]] = set()
    stack = [frozenset(s) for s in reversed(seeds)]
    while stack:
        forced = stack.pop()
        if forced in visited:
            continue
        visited.add(forced)
        best, value = oracle.best_superset(a, forced)
        if value <= -b:
            continue
        if len(best) >= k:
            return verdict(best)
        if value - step <= -b:
            continue
        for w in range(n - 1, -1, -1):
            if w not in best:
                stack.append(best | {w})
    return verdict()


def degeneracy_order(g: AnyGraph, multiplicity: bool = True) -> DegeneracyReport:
    """Peel minimum-degree vertices (smallest id on ties).

    With ``multiplicity`` the degree of a multigraph vertex counts parallel
    edges; otherwise the underlying simple graph is used.
    """
    n = g.vertex_count
    weight: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v, k in g.weighted_edges():
        k = k if multiplicity else 1
        weight[u][v] = weight[u].get(v, 0) + k
        weight[v][u] = weight[v].get(u, 0) + k
    deg = [sum(w.values()) for w in weight]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order: list[int] = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        k = max(k, d)
        for w, c in weight[v].items():
            if not removed[w]:
                deg[w] -= c
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyReport(k, tuple(order))
