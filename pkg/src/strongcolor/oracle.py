"""Ground truth: conflict graphs, exact strong chromatic index and coloring verifiers.

The verifiers do not go through :func:`edges_conflict`; a strong color class
is checked directly as an induced matching (its endpoint set spans no other
edge), so pipeline bugs in the conflict relation cannot hide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .coloring import EdgeColoring, VertexColoring, chromatic_number
from .graph import Graph, edges_conflict


@dataclass(frozen=True)
class Violation:
    kind: str  # adjacent-same-color | conflict-same-color | uncolored | bad-class
    ids: tuple[int, ...]


def build_conflict_graph(g: Graph) -> Graph:
    """Graph on edge ids of ``g``; two ids are adjacent when the edges conflict."""
    m = g.edge_count
    return Graph(m, [(e, f) for e in range(m) for f in range(e + 1, m) if edges_conflict(g, e, f)])


def exact_strong_coloring(g: Graph, node_limit: int = 2_000_000) -> Optional[tuple[int, ...]]:
    """An optimal strong edge coloring, or None when the search budget runs out."""
    k, vc = chromatic_number(build_conflict_graph(g), node_limit)
    if k is None:
        return None
    return vc.colors


def exact_strong_index(g: Graph, node_limit: int = 2_000_000) -> Optional[int]:
    """Strong chromatic index of ``g``; None when the search budget runs out."""
    k, _ = chromatic_number(build_conflict_graph(g), node_limit)
    return k


def _colors_of(c) -> Sequence[Optional[int]]:
    return c.colors if hasattr(c, "colors") else c


def verify_strong(g: Graph, coloring) -> list[Violation]:
    """All uncolored edges and all same-colored pairs of edges at distance at most two."""
    colors = _colors_of(coloring)
    out: list[Violation] = []
    if len(colors) != g.edge_count:
        return [Violation("bad-class", (len(colors), g.edge_count))]
    classes: dict[int, list[int]] = {}
    for e, c in enumerate(colors):
        if c is None or c < 0:
            out.append(Violation("uncolored", (e,)))
        else:
            classes.setdefault(c, []).append(e)
    bad: set[tuple[int, int]] = set()
    for members in classes.values():
        owner: dict[int, list[int]] = {}
        for e in members:
            for x in g.edges[e]:
                owner.setdefault(x, []).append(e)
        for es in owner.values():
            for i, e in enumerate(es):
                for f in es[i + 1:]:
                    bad.add((min(e, f), max(e, f)))
        for x, y in g.edges:
            if x not in owner or y not in owner:
                continue
            for e in owner[x]:
                for f in owner[y]:
                    if e != f:
                        bad.add((min(e, f), max(e, f)))
    out.extend(Violation("conflict-same-color", p) for p in sorted(bad))
    return out


def verify_proper_edge(g: Graph, coloring: Union[EdgeColoring, Sequence[int]]) -> list[Violation]:
    colors = _colors_of(coloring)
    if len(colors) != g.edge_count:
        return [Violation("bad-class", (len(colors), g.edge_count))]
    out = [Violation("uncolored", (e,)) for e, c in enumerate(colors) if c is None or c < 0]
    for v in g.vertices():
        seen: dict[int, int] = {}
        for e in sorted(g.incident(v).values()):
            c = colors[e]
            if c is None or c < 0:
                continue
            if c in seen:
                out.append(Violation("adjacent-same-color", (seen[c], e)))
            else:
                seen[c] = e
    return out


def verify_proper_vertex(g, coloring: Union[VertexColoring, Sequence[int]]) -> list[Violation]:
    colors = _colors_of(coloring)
    if len(colors) != g.vertex_count:
        return [Violation("bad-class", (len(colors), g.vertex_count))]
    out = [Violation("uncolored", (v,)) for v, c in enumerate(colors) if c is None or c < 0]
    for u, v, _ in g.weighted_edges():
        if colors[u] is not None and colors[u] >= 0 and colors[u] == colors[v]:
            out.append(Violation("adjacent-same-color", (u, v)))
    return out
