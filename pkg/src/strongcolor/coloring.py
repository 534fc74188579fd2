"""Proper vertex and edge colorings."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from .density import degeneracy_order
from .graph import Graph, InputError, Multigraph

AnyGraph = Union[Graph, Multigraph]


class Status(str, Enum):
    FOUND = "found"
    IMPOSSIBLE = "impossible"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]

    @property
    def color_count(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    method: str = ""

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    @property
    def class_list(self) -> list[list[int]]:
        """Color classes (each a matching), ordered by color."""
        classes: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            classes.setdefault(c, []).append(e)
        return [classes[c] for c in sorted(classes)]


@dataclass(frozen=True)
class SearchResult:
    status: Status
    coloring: Optional[Union[VertexColoring, EdgeColoring]] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class NotBipartiteError(InputError):
    def __init__(self, cycle: list[int]):
        super().__init__(f"graph is not bipartite; odd cycle {cycle}")
        self.cycle = cycle


# -- vertex coloring ------------------------------------------------------

def greedy_vertex_color(g: AnyGraph, order: Sequence[int]) -> VertexColoring:
    """First-fit coloring in the reverse of ``order`` (a peeling order)."""
    n = g.vertex_count
    if sorted(order) != list(range(n)):
        raise InputError("order must be a permutation of the vertices")
    adj = g.simple_adjacency()
    colors = [-1] * n
    for v in reversed(order):
        taken = {colors[w] for w in adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return VertexColoring(tuple(colors))


def degeneracy_coloring(g: AnyGraph) -> VertexColoring:
    """Greedy coloring along a simple-graph degeneracy order (at most degeneracy+1 colors)."""
    return greedy_vertex_color(g, degeneracy_order(g, multiplicity=False).ordering)


class _Exhausted(Exception):
    pass


def _greedy_clique(adj: list[set[int]]) -> list[int]:
    best: list[int] = []
    for s in sorted(range(len(adj)), key=lambda v: (-len(adj[v]), v)):
        if len(adj[s]) + 1 <= len(best):
            break
        clique = [s]
        cand = set(adj[s])
        while cand:
            v = max(cand, key=lambda x: (len(adj[x] & cand), -x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_search(adj: list[set[int]], budget: int, node_limit: int) -> SearchResult:
    """Branch and bound: saturation-first vertex choice, seeded with a greedy clique."""
    n = len(adj)
    if n == 0:
        return SearchResult(Status.FOUND, VertexColoring(()), 0)
    clique = _greedy_clique(adj)
    if len(clique) > budget:
        return SearchResult(Status.IMPOSSIBLE, None, 0)
    colors = [-1] * n
    blocked = [[0] * budget for _ in range(n)]
    sat = [0] * n
    deg = [len(a) for a in adj]
    nodes = 0

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for w in adj[v]:
            if blocked[w][c] == 0:
                sat[w] += 1
            blocked[w][c] += 1

    def unassign(v: int, c: int) -> None:
        colors[v] = -1
        for w in adj[v]:
            blocked[w][c] -= 1
            if blocked[w][c] == 0:
                sat[w] -= 1

    for i, v in enumerate(clique):
        assign(v, i)

    def rec(used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise _Exhausted
        v, key = -1, None
        for x in range(n):
            if colors[x] == -1:
                k = (sat[x], deg[x], -x)
                if key is None or k > key:
                    v, key = x, k
        if v == -1:
            return True
        if sat[v] >= budget:
            return False
        row = blocked[v]
        for c in range(min(used + 1, budget)):
            if row[c] == 0:
                assign(v, c)
                if rec(max(used, c + 1)):
                    return True
                unassign(v, c)
        return False

    try:
        ok = rec(len(clique))
    except _Exhausted:
        return SearchResult(Status.EXHAUSTED, None, nodes)
    if ok:
        return SearchResult(Status.FOUND, VertexColoring(tuple(colors)), nodes)
    return SearchResult(Status.IMPOSSIBLE, None, nodes)


def exact_chromatic(g: AnyGraph, color_budget: int, node_limit: int = 1_000_000) -> SearchResult:
    """Find a proper coloring with at most ``color_budget`` colors, or prove none exists."""
    if color_budget < 1:
        raise InputError("color budget must be at least 1")
    return _dsatur_search(g.simple_adjacency(), color_budget, node_limit)


def chromatic_number(g: AnyGraph, node_limit: int = 1_000_000) -> tuple[Optional[int], Optional[VertexColoring]]:
    """Smallest feasible budget, scanning upward from the clique bound; ``(None, None)`` if exhausted."""
    adj = g.simple_adjacency()
    if not adj:
        return 0, VertexColoring(())
    k = max(1, len(_greedy_clique(adj)))
    while True:
        res = _dsatur_search(adj, k, node_limit)
        if res.status is Status.FOUND:
            return k, res.coloring
        if res.status is Status.EXHAUSTED:
            return None, None
        k += 1


# -- edge coloring --------------------------------------------------------

class _EdgeState:
    """Partial edge coloring with per-vertex color -> neighbor maps."""

    def __init__(self, g: Graph):
        self.g = g
        self.color = [-1] * g.edge_count
        self.at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]

    def set(self, e: int, c: int) -> None:
        u, v = self.g.edges[e]
        assert c not in self.at[u] and c not in self.at[v], "improper recoloring"
        self.color[e] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def clear(self, e: int) -> None:
        c = self.color[e]
        if c == -1:
            return
        u, v = self.g.edges[e]
        del self.at[u][c]
        del self.at[v][c]
        self.color[e] = -1

    def free(self, v: int, ncolors: int) -> int:
        for c in range(ncolors):
            if c not in self.at[v]:
                return c
        return -1

    def path(self, start: int, first: int, second: int) -> list[int]:
        """Edge ids of the maximal path from ``start`` alternating colors ``first``, ``second``."""
        edges = []
        x, col, other = start, first, second
        seen = {start}
        while col in self.at[x]:
            y = self.at[x][col]
            edges.append(self.g.edge_id(x, y))
            if y in seen:
                break
            seen.add(y)
            x, col, other = y, other, col
        return edges

    def swap(self, path: list[int], a: int, b: int) -> None:
        old = [self.color[e] for e in path]
        for e in path:
            self.clear(e)
        for e, c in zip(path, old):
            self.set(e, b if c == a else a)

    def result(self, method: str) -> EdgeColoring:
        return EdgeColoring(tuple(self.color), method)


def vizing_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max_degree+1 colors (Misra-Gries fan rotation).

    Edges are inserted in id order, anchored at their first endpoint; fans grow
    by the smallest eligible neighbor.
    """
    ncolors = g.max_degree() + 1
    st = _EdgeState(g)
    for e, (u, v) in enumerate(g.edges):
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for x in sorted(g.incident(u)):
                if x in in_fan:
                    continue
                cx = st.color[g.incident(u)[x]]
                if cx != -1 and cx not in st.at[last]:
                    nxt = x
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = st.free(u, ncolors)
        d = st.free(fan[-1], ncolors)
        st.swap(st.path(u, d, c), c, d)
        w = None
        for i, f in enumerate(fan):
            if i > 0:
                ci = st.color[g.incident(u)[f]]
                if ci == -1 or ci in st.at[fan[i - 1]]:
                    break
            if d not in st.at[f]:
                w = i
                break
        assert w is not None, "fan rotation failed"
        shifted = [st.color[g.incident(u)[fan[j + 1]]] for j in range(w)]
        for j in range(1, w + 1):
            st.clear(g.incident(u)[fan[j]])
        for j in range(w):
            st.set(g.incident(u)[fan[j]], shifted[j])
        st.set(g.incident(u)[fan[w]], d)
    return st.result("vizing")


def odd_cycle(g: Graph) -> Optional[list[int]]:
    """An odd cycle as a vertex list, or None when ``g`` is bipartite."""
    side = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    for root in g.vertices():
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    px, py = [x], [y]
                    while px[-1] != -1:
                        px.append(parent[px[-1]])
                    while py[-1] != -1:
                        py.append(parent[py[-1]])
                    px.pop()
                    py.pop()
                    common = set(px) & set(py)
                    lca = next(z for z in px if z in common)
                    left = px[: px.index(lca) + 1]
                    right = py[: py.index(lca)]
                    return left + right[::-1]
    return None


def is_bipartite(g: Graph) -> bool:
    return odd_cycle(g) is None


def bipartite_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a bipartite graph with exactly max_degree colors."""
    cycle = odd_cycle(g)
    if cycle is not None:
        raise NotBipartiteError(cycle)
    ncolors = g.max_degree()
    st = _EdgeState(g)
    for e, (u, v) in enumerate(g.edges):
        a = st.free(u, ncolors)
        b = st.free(v, ncolors)
        if a in st.at[v]:
            # the a/b path from v cannot reach u in a bipartite graph
            st.swap(st.path(v, a, b), a, b)
        st.set(e, a)
    return st.result("konig")


def _kempe_eliminate(g: Graph, st: _EdgeState, k: int, rng: random.Random, max_steps: int) -> bool:
    """Try to recolor every edge with a color >= k into 0..k-1 by Kempe swaps and a random walk."""
    pending = [e for e, c in enumerate(st.color) if c >= k]
    for e in pending:
        st.clear(e)
    steps = 0
    while pending:
        if steps >= max_steps:
            return False  # state is left partial; callers discard it
        steps += 1
        e = pending.pop(rng.randrange(len(pending)))
        u, v = g.edges[e]
        if rng.random() < 0.5:
            u, v = v, u
        free_u = [c for c in range(k) if c not in st.at[u]]
        free_v = [c for c in range(k) if c not in st.at[v]]
        common = [c for c in free_u if c not in st.at[v]]
        if common:
            st.set(e, rng.choice(common))
            continue
        done = False
        pairs = [(a, b) for a in free_u for b in free_v]
        rng.shuffle(pairs)
        for a, b in pairs:
            p = st.path(v, a, b)
            touched = {x for f in p for x in g.edges[f]}
            if u not in touched:
                st.swap(p, a, b)
                st.set(e, a)
                done = True
                break
        if done:
            continue
        # move the uncolored edge: take a color free at u from the edge holding it at v
        c = rng.choice(free_u)
        y = st.at[v][c]
        f = g.edge_id(v, y)
        st.clear(f)
        st.set(e, c)
        pending.append(f)
    return True


def edge_color_target(g: Graph, k: int, node_limit: int = 200_000, seed: int = 0) -> SearchResult:
    """Look for a proper edge coloring with at most ``k`` colors.

    Bipartite graphs go to the König routine; otherwise the Vizing coloring is
    repaired by randomized Kempe-chain moves, then an exact search over the
    line graph decides within ``node_limit`` nodes.
    """
    delta = g.max_degree()
    if k < delta:
        raise InputError(f"target {k} is below the maximum degree {delta}")
    if g.edge_count == 0:
        return SearchResult(Status.FOUND, EdgeColoring((), "empty"))
    if is_bipartite(g):
        return SearchResult(Status.FOUND, bipartite_edge_color(g))
    viz = vizing_edge_color(g)
    if viz.color_count <= k:
        return SearchResult(Status.FOUND, viz)
    st = _EdgeState(g)
    for e, c in enumerate(viz.colors):
        st.set(e, c)
    rng = random.Random(seed)
    if _kempe_eliminate(g, st, k, rng, max_steps=50 * g.edge_count + 1000):
        return SearchResult(Status.FOUND, st.result("kempe"))
    line = line_graph_adjacency(g)
    res = _dsatur_search(line, k, node_limit)
    if res.status is Status.FOUND:
        return SearchResult(Status.FOUND, EdgeColoring(res.coloring.colors, "exact"), res.nodes)
    return SearchResult(res.status, None, res.nodes)


def line_graph_adjacency(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.edge_count)]
    for v in g.vertices():
        inc = list(g.incident(v).values())
        for e in inc:
            adj[e].update(inc)
    for e in range(g.edge_count):
        adj[e].discard(e)
    return adj


def edge_color_best(g: Graph, node_limit: int = 200_000, seed: int = 0) -> EdgeColoring:
    """König when bipartite, else a max-degree coloring if the target search finds one, else Vizing."""
    if is_bipartite(g):
        return bipartite_edge_color(g)
    res = edge_color_target(g, g.max_degree(), node_limit, seed)
    if res.found:
        return res.coloring
    return vizing_edge_color(g)
