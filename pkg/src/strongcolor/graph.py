"""Simple graphs, contracted multigraphs, matchings and the edge conflict relation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class InputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edge ids are positions in ``edges``; the endpoint order of each pair is kept
    as given so that serialization round-trips exactly.
    """

    __slots__ = ("vertex_count", "edges", "_adj", "_index")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise InputError("vertex count must be nonnegative")
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple((int(u), int(v)) for u, v in edges)
        adj: list[dict[int, int]] = [{} for _ in range(vertex_count)]
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge {eid} ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise InputError(f"edge {eid} is a loop at vertex {u}")
            key = _norm(u, v)
            if key in index:
                raise InputError(f"edge {eid} duplicates edge {index[key]} ({u}, {v})")
            index[key] = eid
            adj[u][v] = eid
            adj[v][u] = eid
        self._adj = adj
        self._index = index

    # -- basic queries -------------------------------------------------
    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def incident(self, v: int) -> dict[int, int]:
        """Map neighbor -> edge id for the edges at ``v``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_id(self, u: int, v: int) -> int:
        return self._index[_norm(u, v)]

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e]

    def weighted_edges(self) -> Iterator[tuple[int, int, int]]:
        for u, v in self.edges:
            yield u, v, 1

    def simple_adjacency(self) -> list[set[int]]:
        return [set(a) for a in self._adj]

    def _check_edge(self, e: int) -> None:
        if not (isinstance(e, int) and 0 <= e < len(self.edges)):
            raise InputError(f"invalid edge id {e!r}")

    # -- derived graphs ------------------------------------------------
    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph keeping the given edges, listed in increasing id order."""
        ids = sorted(set(edge_ids))
        for e in ids:
            self._check_edge(e)
        return Graph(self.vertex_count, [self.edges[e] for e in ids])

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        s = set(vertices)
        return sum(1 for u, v in self.edges if u in s and v in s)

    def without_vertex(self, u: int) -> tuple["Graph", list[int]]:
        """Delete the edges at ``u`` (vertex ids are kept); return the graph and kept edge ids."""
        kept = [e for e, (a, b) in enumerate(self.edges) if a != u and b != u]
        return Graph(self.vertex_count, [self.edges[e] for e in kept]), kept

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={len(self.edges)})"


@dataclass(frozen=True)
class Origin:
    """What a contracted vertex stands for: an original vertex or a contracted edge."""

    kind: str  # "vertex" or "edge"
    id: int


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph produced by contracting a matching.

    ``multiplicity`` maps normalized vertex pairs to positive counts. ``origin[x]``
    records what contracted vertex ``x`` came from and ``image[v]`` sends an
    original vertex to its contracted vertex.
    """

    vertex_count: int
    multiplicity: dict[tuple[int, int], int]
    origin: tuple[Origin, ...]
    image: tuple[int, ...]
    _adj: tuple[frozenset[int], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        for (u, v), k in self.multiplicity.items():
            if u == v:
                raise InputError("multigraph cannot contain loops")
            if k <= 0:
                raise InputError("multiplicities must be positive")
        if not self._adj:
            adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
            for u, v in self.multiplicity:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self.multiplicity.values())

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return sum(self.mult(v, w) for w in self._adj[v])

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get(_norm(u, v), 0)

    def weighted_edges(self) -> Iterator[tuple[int, int, int]]:
        for (u, v), k in sorted(self.multiplicity.items()):
            yield u, v, k

    def simple_adjacency(self) -> list[set[int]]:
        return [set(a) for a in self._adj]

    def underlying_graph(self) -> Graph:
        return Graph(self.vertex_count, sorted(self.multiplicity))

    def contracted_vertex(self, edge_id: int) -> int:
        """Contracted vertex that a matching edge collapsed into."""
        for x, o in enumerate(self.origin):
            if o.kind == "edge" and o.id == edge_id:
                return x
        raise InputError(f"edge {edge_id} was not contracted")


def is_matching(g: Graph, edge_ids: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in edge_ids:
        g._check_edge(e)
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def check_matching(g: Graph, edge_ids: Iterable[int]) -> frozenset[int]:
    ids = list(edge_ids)
    if len(set(ids)) != len(ids):
        raise InputError("matching lists an edge twice")
    if not is_matching(g, ids):
        raise InputError("edge set is not a matching")
    return frozenset(ids)


def edges_conflict(g: Graph, e: int, f: int) -> bool:
    """True iff edges ``e`` and ``f`` are within distance two of each other."""
    g._check_edge(e)
    g._check_edge(f)
    if e == f:
        raise InputError("edges_conflict needs two distinct edges")
    a, b = g.edges[e]
    c, d = g.edges[f]
    if {a, b} & {c, d}:
        return True
    adj = g._adj
    return c in adj[a] or d in adj[a] or c in adj[b] or d in adj[b]


def is_strong_matching(g: Graph, edge_ids: Iterable[int]) -> bool:
    ids = sorted(set(edge_ids))
    return all(not edges_conflict(g, e, f) for i, e in enumerate(ids) for f in ids[i + 1:])


def contract_matching(g: Graph, m: Iterable[int]) -> Multigraph:
    """Contract every edge of the matching ``m``.

    Contracted vertices are numbered by the smallest original vertex they contain.
    """
    matching = check_matching(g, m)
    partner = {}
    for e in matching:
        u, v = g.edges[e]
        partner[u] = (v, e)
        partner[v] = (u, e)
    image = [-1] * g.vertex_count
    origin: list[Origin] = []
    for v in g.vertices():
        if image[v] != -1:
            continue
        x = len(origin)
        image[v] = x
        if v in partner:
            w, e = partner[v]
            image[w] = x
            origin.append(Origin("edge", e))
        else:
            origin.append(Origin("vertex", v))
    mult: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges):
        if e in matching:
            continue
        key = _norm(image[u], image[v])
        mult[key] = mult.get(key, 0) + 1
    return Multigraph(len(origin), mult, tuple(origin), tuple(image))


@dataclass(frozen=True)
class Drawing:
    """Crossing pairs of a 1-planar drawing, as edge-id pairs."""

    crossing_pairs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "Drawing":
        return cls(tuple((int(i), int(j)) for i, j in pairs))

    def crossing_edges(self) -> set[int]:
        return {e for p in self.crossing_pairs for e in p}

    def validate(self, g: Graph) -> None:
        seen: dict[int, int] = {}
        for k, (i, j) in enumerate(self.crossing_pairs):
            for e in (i, j):
                if not (0 <= e < g.edge_count):
                    raise InputError(f"crossing pair {k} references invalid edge id {e}")
                if e in seen:
                    raise InputError(f"edge {e} appears in crossing pairs {seen[e]} and {k}")
                seen[e] = k
            if i == j:
                raise InputError(f"crossing pair {k} pairs edge {i} with itself")
            if set(g.edges[i]) & set(g.edges[j]):
                raise InputError(f"crossing pair {k}: edges {i} and {j} share an endpoint")


def split_edge_ids(g: Graph, d: Drawing) -> tuple[list[int], list[int]]:
    d.validate(g)
    crossing = d.crossing_edges()
    plain = [e for e in range(g.edge_count) if e not in crossing]
    return plain, sorted(crossing)


def split_by_drawing(g: Graph, d: Drawing) -> tuple[Graph, Graph]:
    """Return (non-crossing part, crossing part), both spanning all vertices.

    Each part lists its edges in increasing original edge id; use
    :func:`split_edge_ids` to map them back.
    """
    plain, crossing = split_edge_ids(g, d)
    return g.edge_subgraph(plain), g.edge_subgraph(crossing)
