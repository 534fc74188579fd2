"""Instance files, coloring files and instance generators.

Text format::

    # comment
    n m
    u v            (m lines, 0-based vertex ids)
    crossings k    (optional)
    i j            (k lines, edge ids of a crossing pair)

The JSON mirror is ``{"vertices": n, "edges": [[u, v], ...], "crossings": [[i, j], ...]}``.
"""

from __future__ import annotations

import itertools
import json
import random
from typing import Optional, Sequence

from .graph import Drawing, Graph, InputError
from .coloring import odd_cycle
from .density import is_ab_graph


class ParseError(InputError):
    """Malformed text; carries the 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InstanceError(InputError):
    """Well-formed text describing an invalid graph or drawing."""


Instance = tuple[Graph, Optional[Drawing]]


# -- text / json ---------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, body


def _ints(lineno: int, body: str, count: int, what: str) -> list[int]:
    fields = body.split()
    if len(fields) != count:
        col = len(body) - len(body.lstrip()) + 1
        raise ParseError(lineno, col, f"expected {count} fields for {what}, got {len(fields)}")
    out = []
    pos = 0
    for f in fields:
        pos = body.index(f, pos)
        try:
            value = int(f)
        except ValueError:
            raise ParseError(lineno, pos + 1, f"{f!r} is not an integer") from None
        if value < 0:
            raise ParseError(lineno, pos + 1, f"negative value {value}")
        out.append(value)
        pos += len(f)
    return out


def parse_instance(text: str, fmt: str = "auto") -> Instance:
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        return _parse_json(text)
    if fmt != "text":
        raise InputError(f"unknown format {fmt!r}")
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, 1, "empty instance")
    it = iter(lines)
    lineno, body = next(it)
    n, m = _ints(lineno, body, 2, "header 'n m'")
    edges = []
    edge_lines = []
    for _ in range(m):
        try:
            lineno, body = next(it)
        except StopIteration:
            raise ParseError(lines[-1][0] + 1, 1, f"expected {m} edge lines, got {len(edges)}") from None
        edges.append(tuple(_ints(lineno, body, 2, "edge 'u v'")))
        edge_lines.append(lineno)
    try:
        g = Graph(n, edges)
    except InputError as exc:
        raise InstanceError(str(exc)) from None
    drawing = None
    rest = list(it)
    if rest:
        lineno, body = rest[0]
        fields = body.split()
        if fields[0] != "crossings":
            raise ParseError(lineno, body.index(fields[0]) + 1, f"unexpected {fields[0]!r} after edge list")
        if len(fields) != 2:
            raise ParseError(lineno, 1, "expected 'crossings k'")
        k = _ints(lineno, fields[1], 1, "crossing count")[0]
        if len(rest) - 1 != k:
            raise ParseError(rest[-1][0], 1, f"expected {k} crossing lines, got {len(rest) - 1}")
        pairs = [tuple(_ints(ln, b, 2, "crossing 'i j'")) for ln, b in rest[1:]]
        drawing = Drawing.of(pairs)
        try:
            drawing.validate(g)
        except InputError as exc:
            raise InstanceError(str(exc)) from None
    return g, drawing


def _parse_json(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from None
    try:
        n = int(data["vertices"])
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
        pairs = data.get("crossings")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(1, 1, f"bad JSON instance: {exc}") from None
    try:
        g = Graph(n, edges)
        drawing = None if pairs is None else Drawing.of(pairs)
        if drawing is not None:
            drawing.validate(g)
    except InputError as exc:
        raise InstanceError(str(exc)) from None
    return g, drawing


def emit_instance(g: Graph, drawing: Optional[Drawing] = None, fmt: str = "text") -> str:
    if fmt == "json":
        data = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
        if drawing is not None:
            data["crossings"] = [list(p) for p in drawing.crossing_pairs]
        return json.dumps(data) + "\n"
    out = [f"{g.vertex_count} {g.edge_count}"]
    out += [f"{u} {v}" for u, v in g.edges]
    if drawing is not None:
        out.append(f"crossings {len(drawing.crossing_pairs)}")
        out += [f"{i} {j}" for i, j in drawing.crossing_pairs]
    return "\n".join(out) + "\n"


def parse_coloring(text: str, edge_count: int) -> list[Optional[int]]:
    """Read ``edge_id color`` lines; edges not listed stay None."""
    colors: list[Optional[int]] = [None] * edge_count
    for lineno, body in _content_lines(text):
        e, c = _ints(lineno, body, 2, "coloring 'edge color'")
        if e >= edge_count:
            raise InstanceError(f"line {lineno}: edge id {e} out of range")
        if colors[e] is not None:
            raise InstanceError(f"line {lineno}: edge {e} colored twice")
        colors[e] = c
    return colors


def emit_coloring(colors: Sequence[int]) -> str:
    return "".join(f"{e} {c}\n" for e, c in enumerate(colors))


# -- generators ----------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + inner + [(i, i + 5) for i in range(5)])


def cube_graph() -> Graph:
    return Graph(8, [(a, a ^ (1 << i)) for a in range(8) for i in range(3) if a < a ^ (1 << i)])


def random_simple(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p])


def h_delta(delta: int) -> Instance:
    """K5 on vertices 0..4 with ``delta - 4`` pendant vertices at each; K5 drawn with one crossing."""
    if delta < 4:
        raise InputError("H_delta needs delta >= 4")
    edges = list(itertools.combinations(range(5), 2))
    nxt = 5
    for v in range(5):
        for _ in range(delta - 4):
            edges.append((v, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    # K4 on 0,1,2,3 drawn with 3 inside triangle 012 and vertex 4 beyond side 01: only 34 crosses 01
    drawing = Drawing.of([(g.edge_id(0, 1), g.edge_id(3, 4))])
    return g, drawing


def _cube_faces() -> list[tuple[int, int, int, int]]:
    faces = []
    for axis in range(3):
        j, k = [i for i in range(3) if i != axis]
        for bit in (0, 1):
            base = bit << axis
            faces.append((base, base | 1 << j, base | 1 << j | 1 << k, base | 1 << k))
    return faces


def _pseudo_double_wheel(k: int) -> tuple[list[tuple[int, int]], list[tuple[int, int, int, int]], int]:
    """Even cycle 0..2k-1 with pole 2k on even and pole 2k+1 on odd cycle vertices."""
    if k < 3:
        raise InputError("pseudo double wheel needs k >= 3")
    n_cyc = 2 * k
    x, y = n_cyc, n_cyc + 1
    edges = [(i, (i + 1) % n_cyc) for i in range(n_cyc)]
    edges += [(x, i) for i in range(0, n_cyc, 2)]
    edges += [(y, i) for i in range(1, n_cyc, 2)]
    faces = []
    for i in range(0, n_cyc, 2):
        faces.append((x, i, (i + 1) % n_cyc, (i + 2) % n_cyc))
    for i in range(1, n_cyc, 2):
        faces.append((y, i, (i + 1) % n_cyc, (i + 2) % n_cyc))
    return edges, faces, n_cyc + 2


def quad_optimal(base: str = "cube", k: int = 3) -> Instance:
    """Optimal 1-planar graph: both diagonals added inside every face of a 3-connected quadrangulation."""
    if base == "cube":
        faces = _cube_faces()
        qedges = list(cube_graph().edges)
        n = 8
    elif base == "pdw":
        qedges, faces, n = _pseudo_double_wheel(k)
    else:
        raise InputError(f"unknown quadrangulation base {base!r}")
    edges = list(qedges)
    pairs = []
    for a, b, c, d in faces:
        edges += [(a, c), (b, d)]
        pairs.append((len(edges) - 2, len(edges) - 1))
    g = Graph(n, edges)
    return g, Drawing.of(pairs)


class _Triangulation:
    """Stacked triangulation grown by inserting a vertex into a random face."""

    def __init__(self):
        self.n = 4
        self.adj: list[set[int]] = [set(range(4)) - {i} for i in range(4)]
        self.faces: set[frozenset[int]] = {frozenset(f) for f in itertools.combinations(range(4), 3)}

    def grow(self, n: int, rng: random.Random, max_degree: int) -> None:
        attempts = 0
        while self.n < n:
            attempts += 1
            if attempts > 200 * n:
                raise InputError(f"cannot grow a planar graph to {n} vertices under max degree {max_degree}")
            face = rng.choice(sorted(tuple(sorted(f)) for f in self.faces))
            if any(len(self.adj[v]) >= max_degree for v in face):
                continue
            v = self.n
            self.n += 1
            self.adj.append(set(face))
            for w in face:
                self.adj[w].add(v)
            self.faces.remove(frozenset(face))
            for pair in itertools.combinations(face, 2):
                self.faces.add(frozenset((*pair, v)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]


def random_planar(n: int, seed: int, max_degree: int = 10**9) -> Graph:
    if n < 4:
        raise InputError("random planar graphs start from K4 (n >= 4)")
    rng = random.Random(seed)
    tri = _Triangulation()
    tri.grow(n, rng, max_degree)
    return Graph(tri.n, tri.edges())


def _add_crossings(n: int, seed: int, max_degree: int, crossings: Optional[int], independent: bool) -> Instance:
    """Planar triangulation plus diagonals drawn across pairs of adjacent triangles.

    Each used triangle hosts one diagonal, so every edge is crossed at most
    once. With ``independent`` the crossing pairs have disjoint endpoints.
    """
    rng = random.Random(seed)
    tri = _Triangulation()
    tri.grow(n, rng, max_degree)
    adj = tri.adj
    base = tri.edges()
    used_faces: set[frozenset[int]] = set()
    used_vertices: set[int] = set()
    extra: list[tuple[int, int]] = []
    crossed: list[tuple[int, int]] = []
    order = list(base)
    rng.shuffle(order)
    for u, v in order:
        if crossings is not None and len(extra) >= crossings:
            break
        sides = sorted((f for f in tri.faces if u in f and v in f), key=sorted)
        if len(sides) != 2 or any(f in used_faces for f in sides):
            continue
        (w,), (z,) = (tuple(f - {u, v}) for f in sides)
        if z in adj[w] or len(adj[w]) >= max_degree or len(adj[z]) >= max_degree:
            continue
        if independent and used_vertices & {u, v, w, z}:
            continue
        adj[w].add(z)
        adj[z].add(w)
        used_faces.update(sides)
        used_vertices.update((u, v, w, z))
        extra.append((min(w, z), max(w, z)))
        crossed.append((u, v))
    g = Graph(tri.n, base + extra)
    pairs = [(g.edge_id(*c), len(base) + i) for i, c in enumerate(crossed)]
    return g, Drawing.of(pairs)


def one_planar(n: int, seed: int, max_degree: int = 10**9, crossings: Optional[int] = None) -> Instance:
    return _add_crossings(n, seed, max_degree, crossings, independent=False)


def ic_planar(n: int, seed: int, max_degree: int = 10**9, crossings: Optional[int] = None) -> Instance:
    return _add_crossings(n, seed, max_degree, crossings, independent=True)


FAMILIES = (
    "h-delta", "quad-optimal", "ic-planar", "one-planar", "random-planar", "random-simple",
    "path", "cycle", "star", "complete", "complete-bipartite", "petersen", "cube",
)


def generate(family: str, params: Optional[dict] = None, seed: int = 0) -> Instance:
    """Build an instance of ``family`` and check the family's defining conditions."""
    p = dict(params or {})
    drawing: Optional[Drawing] = None
    try:
        if family == "h-delta":
            g, drawing = h_delta(int(p.get("delta", 5)))
            if g.edge_count != 5 * g.max_degree() - 10:
                raise AssertionError("H_delta edge count")
        elif family == "quad-optimal":
            g, drawing = quad_optimal(str(p.get("base", "cube")), int(p.get("k", 3)))
            _validate_optimal(g, drawing)
        elif family == "ic-planar":
            g, drawing = ic_planar(int(p.get("n", 20)), seed, int(p.get("max_degree", 10**9)),
                                   _opt_int(p.get("crossings")))
            from .strong import check_ic

            check_ic(g, drawing)
            _require_sparse(g, 4, 8)
        elif family == "one-planar":
            g, drawing = one_planar(int(p.get("n", 20)), seed, int(p.get("max_degree", 10**9)),
                                    _opt_int(p.get("crossings")))
            _require_sparse(g, 4, 8)
        elif family == "random-planar":
            g = random_planar(int(p.get("n", 20)), seed, int(p.get("max_degree", 10**9)))
            drawing = Drawing(())
            _require_sparse(g, 3, 6)
        elif family == "random-simple":
            g = random_simple(int(p.get("n", 10)), float(p.get("p", 0.3)), seed)
        elif family == "path":
            g = path_graph(int(p.get("n", 4)))
        elif family == "cycle":
            g = cycle_graph(int(p.get("n", 5)))
        elif family == "star":
            g = star_graph(int(p.get("n", 3)))
        elif family == "complete":
            g = complete_graph(int(p.get("n", 4)))
        elif family == "complete-bipartite":
            g = complete_bipartite(int(p.get("a", 3)), int(p.get("b", 3)))
        elif family == "petersen":
            g = petersen_graph()
        elif family == "cube":
            g = cube_graph()
        else:
            raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad parameters for {family}: {exc}") from None
    return g, drawing


def _opt_int(x) -> Optional[int]:
    return None if x is None else int(x)


def _require_sparse(g: Graph, a: int, b: int) -> None:
    if not is_ab_graph(g, a, b, 3).holds:
        raise AssertionError(f"generated graph violates {a}|V|-{b}")


def _validate_optimal(g: Graph, drawing: Drawing) -> None:
    if g.edge_count != 4 * g.vertex_count - 8:
        raise AssertionError("optimal 1-planar edge count")
    crossing = drawing.crossing_edges()
    plain = g.edge_subgraph(e for e in range(g.edge_count) if e not in crossing)
    cross = g.edge_subgraph(crossing)
    if odd_cycle(plain) is not None:
        raise AssertionError("quadrangulation is not bipartite")
    if any(plain.degree(v) != cross.degree(v) for v in g.vertices()):
        raise AssertionError("crossing / non-crossing degrees unbalanced")
