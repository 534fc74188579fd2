"""Strong edge colorings built from matching contractions.

Every pipeline here follows the same shape: split the edges into matchings
(a proper edge coloring), contract each matching, properly color the
contracted multigraph and lift the colors of contracted vertices back to the
matching edges. Edges whose contracted vertices got the same color form an
induced matching, so each class costs at most as many colors as the
contraction needed. Classes get disjoint color ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .coloring import (
    EdgeColoring,
    VertexColoring,
    bipartite_edge_color,
    degeneracy_coloring,
    edge_color_best,
    edge_color_target,
    exact_chromatic,
    is_bipartite,
    odd_cycle,
    vizing_edge_color,
)
from .density import degeneracy_order, is_ab_graph, maximum_average_degree
from .graph import (
    Drawing,
    Graph,
    InputError,
    Multigraph,
    check_matching,
    contract_matching,
    split_edge_ids,
)
from .oracle import exact_strong_coloring, verify_proper_vertex

METHODS = ("mad", "oneplanar", "split", "ic", "optimal", "greedy", "exact")


class NotOnePlanarError(InputError):
    """The input fails a necessary condition of 1-planarity."""


class PaletteExhausted(RuntimeError):
    """Vertex extension ran out of colors (only possible with a palette below 14*D)."""


@dataclass(frozen=True)
class StrongColoring:
    colors: tuple[int, ...]
    method: str
    certified_bound: Optional[Fraction] = None
    bound_formula: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    def class_sizes(self) -> list[int]:
        sizes: dict[int, int] = {}
        for c in self.colors:
            sizes[c] = sizes.get(c, 0) + 1
        return [sizes[c] for c in sorted(sizes)]


def _compact(colors: Sequence[int]) -> tuple[int, ...]:
    relabel = {c: i for i, c in enumerate(sorted(set(colors)))}
    return tuple(relabel[c] for c in colors)


# -- lifting -----------------------------------------------------------------

def partition_matching(
    g: Graph,
    m: Iterable[int],
    vc: VertexColoring,
    contraction: Optional[Multigraph] = None,
) -> list[frozenset[int]]:
    """Group matching edges by the color of their contracted vertex; empty groups are dropped."""
    m = check_matching(g, m)
    gm = contract_matching(g, m) if contraction is None else contraction
    if len(vc.colors) != gm.vertex_count:
        raise InputError("vertex coloring does not match the contraction")
    if verify_proper_vertex(gm, vc):
        raise InputError("vertex coloring of the contraction is not proper")
    groups: dict[int, set[int]] = {}
    for x, o in enumerate(gm.origin):
        if o.kind == "edge":
            groups.setdefault(vc.colors[x], set()).add(o.id)
    return [frozenset(groups[c]) for c in sorted(groups)]


def rho_upper(g: Graph, m: Iterable[int]) -> tuple[int, list[frozenset[int]]]:
    """Upper bound on the number of strong matchings needed to partition ``m``."""
    m = check_matching(g, m)
    if not m:
        return 0, []
    gm = contract_matching(g, m)
    parts = partition_matching(g, m, color_contracted_part(gm, degeneracy_coloring), gm)
    return len(parts), parts


def color_contracted_part(
    gm: Multigraph, color: Callable[[Graph], VertexColoring]
) -> VertexColoring:
    """Proper coloring of ``gm`` in which only the contracted-edge vertices share colors.

    Lifting reads the colors of contracted-edge vertices alone, so ``color``
    runs on the subgraph they induce; every other vertex gets a private color.
    """
    keep = [x for x, o in enumerate(gm.origin) if o.kind == "edge"]
    pos = {x: i for i, x in enumerate(keep)}
    sub = Graph(len(keep), [(pos[u], pos[v]) for u, v in gm.multiplicity if u in pos and v in pos])
    inner = color(sub).colors
    fresh = max(inner, default=-1) + 1
    colors = []
    for x in gm.vertices():
        if x in pos:
            colors.append(inner[pos[x]])
        else:
            colors.append(fresh)
            fresh += 1
    return VertexColoring(tuple(colors))


def _lift_classes(
    g: Graph,
    classes: Sequence[Sequence[int]],
    color_contraction: Callable[[Graph], VertexColoring],
) -> tuple[list[int], list[int]]:
    """Color every edge class through its contraction; returns edge colors and per-class counts."""
    colors = [-1] * g.edge_count
    counts = []
    offset = 0
    for cls in classes:
        gm = contract_matching(g, cls)
        parts = partition_matching(g, cls, color_contracted_part(gm, color_contraction), gm)
        for i, part in enumerate(parts):
            for e in part:
                colors[e] = offset + i
        offset += len(parts)
        counts.append(len(parts))
    return colors, counts


# -- general graphs ----------------------------------------------------------

def strong_color_greedy(g: Graph) -> StrongColoring:
    """First-fit over edge ids; at most 2*D*(D-1)+1 colors."""
    colors = [-1] * g.edge_count
    for e, (u, v) in enumerate(g.edges):
        taken = set()
        for x in (u, v):
            for y in [x, *g.incident(x)]:
                for f in g.incident(y).values():
                    if colors[f] != -1:
                        taken.add(colors[f])
        c = 0
        while c in taken:
            c += 1
        colors[e] = c
    d = g.max_degree()
    bound = 2 * d * (d - 1) + 1 if d else 0
    return StrongColoring(tuple(colors), "greedy", Fraction(bound), "2D(D-1)+1")


def _edge_coloring_for_mad(g: Graph, node_limit: int, seed: int) -> EdgeColoring:
    if is_bipartite(g):
        return bipartite_edge_color(g)
    delta = g.max_degree()
    if delta >= 2 * degeneracy_order(g).degeneracy:
        res = edge_color_target(g, delta, node_limit, seed)
        if res.found:
            return res.coloring
    return vizing_edge_color(g)


def strong_color_mad(g: Graph, node_limit: int = 200_000, seed: int = 0) -> StrongColoring:
    """Contract each class of a proper edge coloring and color it along a degeneracy order.

    Certifies ``(2*mad - 1) * k`` colors, ``k`` being the number of edge colors used.
    """
    if g.edge_count == 0:
        return StrongColoring((), "mad", Fraction(0), "(2*mad-1)*k", {"mad": "0", "edge_colors": 0})
    mad = maximum_average_degree(g).mad
    ec = _edge_coloring_for_mad(g, node_limit, seed)
    colors, counts = _lift_classes(g, ec.class_list, degeneracy_coloring)
    k = ec.color_count
    details = {
        "mad": str(mad),
        "edge_colors": k,
        "edge_method": ec.method,
        "per_class": counts,
    }
    return StrongColoring(_compact(colors), "mad", (2 * mad - 1) * k, "(2*mad-1)*k", details)


def strong_color_exact(g: Graph, node_limit: int = 2_000_000) -> Optional[StrongColoring]:
    """An optimal strong coloring, or None when the search budget runs out."""
    colors = exact_strong_coloring(g, node_limit)
    if colors is None:
        return None
    return StrongColoring(tuple(colors), "exact", Fraction(len(set(colors))), "exact")


# -- vertex extension (small maximum degree, 1-planar) -----------------------

@dataclass(frozen=True)
class Extension:
    colors: Optional[tuple[int, ...]]
    list_sizes: dict[int, int]

    @property
    def feasible(self) -> bool:
        return self.colors is not None


def extend_at_vertex(
    g: Graph,
    u: int,
    partial: Sequence[Optional[int]],
    palette_size: int,
    order: Optional[Sequence[int]] = None,
    validate: bool = True,
) -> Extension:
    """Color the edges at ``u`` given a strong coloring of every other edge of ``g``.

    The available list of ``u u_i`` is the palette minus the colors at the
    other neighbors ``u_j`` and minus the colors at the neighbors of ``u_i``
    other than ``u``. Neighbors are processed in ``order`` (default: by id),
    each taking the smallest listed color not yet used at ``u``.
    """
    colors = [(-1 if c is None else c) for c in partial]
    if len(colors) != g.edge_count:
        raise InputError("partial coloring has the wrong length")
    at_u = set(g.incident(u).values())
    if validate:
        for e, c in enumerate(colors):
            if e in at_u and c != -1:
                raise InputError(f"edge {e} at vertex {u} is already colored")
            if e not in at_u and c == -1:
                raise InputError(f"edge {e} away from vertex {u} is uncolored")
            if c >= palette_size:
                raise InputError(f"edge {e} uses color {c} outside the palette")
        from .oracle import verify_strong

        rest = [c if e not in at_u else 10**9 + e for e, c in enumerate(colors)]
        if verify_strong(g, rest):
            raise InputError("partial coloring is not strong")
    nbrs = list(order) if order is not None else g.neighbors(u)
    if sorted(nbrs) != g.neighbors(u):
        raise InputError("order must list the neighbors of u")

    def seen_at(w: int) -> set[int]:
        return {colors[f] for f in g.incident(w).values() if colors[f] != -1}

    at_nbr = {w: seen_at(w) for w in nbrs}
    lists: dict[int, set[int]] = {}
    for ui in nbrs:
        avail = set(range(palette_size))
        for uj in nbrs:
            if uj != ui:
                avail -= at_nbr[uj]
        for x in g.incident(ui):
            if x != u:
                avail -= seen_at(x)
        lists[ui] = avail
    sizes = {ui: len(lists[ui]) for ui in nbrs}
    used: set[int] = set()
    for ui in nbrs:
        avail = lists[ui] - used
        if not avail:
            return Extension(None, sizes)
        c = min(avail)
        used.add(c)
        colors[g.incident(u)[ui]] = c
    return Extension(tuple(colors), sizes)


def list_size_bounds(delta: int, palette: int) -> dict[str, int]:
    """Closed-form lower bounds on the lists in the two peeling cases.

    ``low_degree``: ``u`` has at most 6 neighbors. ``seven_first`` and
    ``seven_rest``: ``u`` has 7 neighbors and the first one has degree 7.
    """
    return {
        "low_degree": palette - 5 * (delta - 1) - (delta - 1) * delta,
        "seven_first": palette - 6 * (delta - 1) - 6 * delta,
        "seven_rest": palette - 6 - 5 * (delta - 1) - 8 * delta,
    }


def peel_and_extend(g: Graph, palette: int) -> tuple[list[int], dict]:
    """Delete low-degree vertices until at most ``palette`` edges remain, then reinsert them."""
    delta = g.max_degree()
    closed = list_size_bounds(delta, palette)
    alive = set(range(g.edge_count))
    deg = [g.degree(v) for v in g.vertices()]
    steps: list[tuple[int, str, Optional[int], frozenset[int]]] = []
    while len(alive) > palette:
        active = [v for v in g.vertices() if deg[v] > 0]
        s = min(deg[v] for v in active)
        live_nbrs = lambda v: [w for w, e in sorted(g.incident(v).items()) if e in alive]
        if s <= 6:
            u = min(v for v in active if deg[v] == s)
            case, first = "low_degree", None
        elif s == 7:
            pick = None
            for v in active:
                if deg[v] == 7:
                    mates = [w for w in live_nbrs(v) if deg[w] == 7]
                    if mates:
                        pick = (v, mates[0])
                        break
            if pick is None:
                raise NotOnePlanarError("minimum degree 7 without two adjacent 7-vertices")
            (u, first), case = pick, "seven"
        else:
            raise NotOnePlanarError(f"subgraph with minimum degree {s} > 7")
        edges_u = frozenset(e for e in g.incident(u).values() if e in alive)
        steps.append((u, case, first, frozenset(alive)))
        for e in edges_u:
            alive.discard(e)
            a, b = g.edges[e]
            deg[a] -= 1
            deg[b] -= 1

    base_ids = sorted(alive)
    base = strong_color_greedy(g.edge_subgraph(base_ids))
    colors = [-1] * g.edge_count
    for local, e in enumerate(base_ids):
        colors[e] = base.colors[local]
    stats = {name: {"min_list": None, "bound": b, "uses": 0} for name, b in closed.items()}

    def note(name: str, size: int) -> None:
        st = stats[name]
        st["uses"] += 1
        st["min_list"] = size if st["min_list"] is None else min(st["min_list"], size)
        if size < st["bound"]:
            raise AssertionError(f"list of size {size} below the {name} bound {st['bound']}")

    for u, case, first, ids in reversed(steps):
        ids = sorted(ids)
        h = g.edge_subgraph(ids)
        partial = [colors[e] for e in ids]
        nbrs = h.neighbors(u)
        order = nbrs if first is None else [first] + [w for w in nbrs if w != first]
        ext = extend_at_vertex(h, u, partial, palette, order, validate=False)
        if case == "low_degree":
            s = len(nbrs)
            exact_bound = palette - (s - 1) * (delta - 1) - (delta - 1) * delta
            for ui in nbrs:
                if ext.list_sizes[ui] < exact_bound:
                    raise AssertionError("list below the degree-specific bound")
                note("low_degree", ext.list_sizes[ui])
        else:
            note("seven_first", ext.list_sizes[first])
            for ui in nbrs:
                if ui != first:
                    note("seven_rest", ext.list_sizes[ui])
        if not ext.feasible:
            raise PaletteExhausted(f"extension at vertex {u} ran out of colors in a palette of {palette}")
        for local, e in enumerate(ids):
            colors[e] = ext.colors[local]
    return colors, {"peeled": len(steps), "base_edges": len(base_ids), "list_checks": stats}


# -- 1-planar graphs -----------------------------------------------------------

def _check_one_planar_density(g: Graph) -> None:
    verdict = is_ab_graph(g, 4, 8, 3)
    if not verdict.holds:
        raise NotOnePlanarError(
            f"vertex set {sorted(verdict.violator)} spans more than 4|V|-8 edges"
        )


def _contract_route(g: Graph, ec: EdgeColoring, cap: int) -> tuple[list[int], list[int]]:
    colors, counts = _lift_classes(g, ec.class_list, degeneracy_coloring)
    if max(counts, default=0) > cap:
        raise AssertionError(f"a contracted class needed more than {cap} colors")
    return colors, counts


def strong_color_oneplanar(
    g: Graph,
    drawing: Optional[Drawing] = None,
    node_limit: int = 200_000,
    seed: int = 0,
    palette: Optional[int] = None,
) -> StrongColoring:
    """Strong coloring of a 1-planar graph with at most 14*D colors.

    D <= 7: greedy. D in {8, 9}: peel vertices of degree <= 6 or adjacent
    7-vertices and reinsert them with palette 14*D. D >= 10: contract the
    classes of a D-edge-coloring (14*(D+1) if only a Vizing coloring is found).
    """
    if drawing is not None:
        drawing.validate(g)
    _check_one_planar_density(g)
    delta = g.max_degree()
    if delta <= 7:
        res = strong_color_greedy(g)
        return StrongColoring(res.colors, "oneplanar", res.certified_bound, "2D(D-1)+1<=14D", {"case": "greedy"})
    if delta <= 9:
        palette = 14 * delta if palette is None else palette
        colors, info = peel_and_extend(g, palette)
        info["case"] = "peeling"
        info["palette"] = palette
        formula = "14D" if palette == 14 * delta else "palette"
        return StrongColoring(_compact(colors), "oneplanar", Fraction(palette), formula, info)
    res = edge_color_target(g, delta, node_limit, seed)
    if res.found:
        ec, formula = res.coloring, "14D"
    else:
        ec, formula = vizing_edge_color(g), "14(D+1)"
    colors, counts = _contract_route(g, ec, 14)
    k = ec.color_count
    info = {"case": "contraction", "edge_colors": k, "edge_method": ec.method,
            "target_status": res.status.value, "per_class": counts}
    bound = 14 * (delta if res.found else delta + 1)
    return StrongColoring(_compact(colors), "oneplanar", Fraction(bound), formula, info)


def _six_color(gm: Graph, node_limit: int, fallbacks: list[int]) -> VertexColoring:
    res = exact_chromatic(gm, 6, node_limit)
    if res.found:
        return res.coloring
    fallbacks.append(gm.vertex_count)
    return degeneracy_coloring(gm)


def _split_route(
    g: Graph,
    plain_ids: list[int],
    ec_plain: EdgeColoring,
    cross_ids: list[int],
    ec_cross: EdgeColoring,
    node_limit: int,
) -> tuple[list[int], Fraction, str, dict]:
    classes1 = [[plain_ids[e] for e in cls] for cls in ec_plain.class_list]
    classes2 = [[cross_ids[e] for e in cls] for cls in ec_cross.class_list]
    fallbacks: list[int] = []
    colors1, counts1 = _lift_classes(g, classes1, lambda gm: _six_color(gm, node_limit, fallbacks))
    colors2, counts2 = _lift_classes(g, classes2, degeneracy_coloring)
    offset = sum(counts1)
    colors = [c1 if c1 != -1 else c2 + offset for c1, c2 in zip(colors1, colors2)]
    k1, k2 = ec_plain.color_count, ec_cross.color_count
    c1 = max([6, *counts1])
    c2 = max([14, *counts2])
    bound = Fraction(c1 * k1 + c2 * k2)
    formula = f"{c1}*chi'(H1)+{c2}*chi'(H2)"
    info = {
        "chi_h1": k1,
        "chi_h2": k2,
        "h1_method": ec_plain.method,
        "h2_method": ec_cross.method,
        "per_class_h1": counts1,
        "per_class_h2": counts2,
        "six_color_fallbacks": len(fallbacks),
        "split_bound": str(bound),
    }
    return colors, bound, formula, info


def _check_split_density(g: Graph, h1: Graph, h2: Graph) -> None:
    checks = [
        (h1, 3, 6, "non-crossing part is not planar-sparse (3|V|-6)"),
        (h2, 4, 8, "crossing part violates 4|V|-8"),
        (g, 4, 8, "graph violates 4|V|-8"),
    ]
    for h, a, b, msg in checks:
        verdict = is_ab_graph(h, a, b, 3)
        if not verdict.holds:
            raise NotOnePlanarError(f"{msg}: vertex set {sorted(verdict.violator)}")


def strong_color_split(
    g: Graph, drawing: Drawing, node_limit: int = 200_000, seed: int = 0
) -> StrongColoring:
    """Color non-crossing classes through 6-colored contractions and crossing classes through the 14-route."""
    plain, cross = split_edge_ids(g, drawing)
    h1, h2 = g.edge_subgraph(plain), g.edge_subgraph(cross)
    _check_split_density(g, h1, h2)
    ec1 = edge_color_best(h1, node_limit, seed)
    ec2 = edge_color_best(h2, node_limit, seed)
    colors, bound, formula, info = _split_route(g, plain, ec1, cross, ec2, node_limit)
    return StrongColoring(_compact(colors), "split-drawing", bound, formula, info)


def check_ic(g: Graph, drawing: Drawing) -> None:
    drawing.validate(g)
    owner: dict[int, int] = {}
    for k, (i, j) in enumerate(drawing.crossing_pairs):
        for x in (*g.edges[i], *g.edges[j]):
            if x in owner and owner[x] != k:
                raise InputError(f"vertex {x} is an endpoint of crossing pairs {owner[x]} and {k}")
            owner[x] = k


def strong_color_ic(
    g: Graph, drawing: Drawing, node_limit: int = 200_000, seed: int = 0
) -> StrongColoring:
    """IC-planar graphs: at most 6*D+20 colors."""
    check_ic(g, drawing)
    delta = g.max_degree()
    target = Fraction(6 * delta + 20)
    if delta <= 5:
        res = strong_color_greedy(g)
        return StrongColoring(res.colors, "ic-planar", target, "6D+20", {"case": "greedy"})
    res = strong_color_split(g, drawing, node_limit, seed)
    info = dict(res.details, case="split")
    if res.certified_bound <= target:
        return StrongColoring(res.colors, "ic-planar", target, "6D+20", info)
    return StrongColoring(res.colors, "ic-planar", res.certified_bound, res.bound_formula, info)


def check_optimal(g: Graph, drawing: Drawing) -> tuple[list[int], list[int]]:
    """Validate an optimal 1-planar instance; every failed condition is reported."""
    plain, cross = split_edge_ids(g, drawing)
    problems = []
    if g.edge_count != 4 * g.vertex_count - 8:
        problems.append(f"|E| = {g.edge_count} but 4|V|-8 = {4 * g.vertex_count - 8}")
    h1, h2 = g.edge_subgraph(plain), g.edge_subgraph(cross)
    cycle = odd_cycle(h1)
    if cycle is not None:
        problems.append(f"non-crossing part has odd cycle {cycle}")
    unbalanced = [v for v in g.vertices() if h1.degree(v) != h2.degree(v)]
    if unbalanced:
        problems.append(f"vertices {unbalanced} have unequal crossing and non-crossing degree")
    if problems:
        raise InputError("not an optimal 1-planar drawing: " + "; ".join(problems))
    return plain, cross


def strong_color_optimal(
    g: Graph, drawing: Drawing, node_limit: int = 200_000, seed: int = 0
) -> StrongColoring:
    """Optimal 1-planar graphs: at most 10*D+14 colors."""
    plain, cross = check_optimal(g, drawing)
    h1, h2 = g.edge_subgraph(plain), g.edge_subgraph(cross)
    _check_split_density(g, h1, h2)
    ec1 = bipartite_edge_color(h1)
    ec2 = vizing_edge_color(h2)
    colors, bound, formula, info = _split_route(g, plain, ec1, cross, ec2, node_limit)
    delta = g.max_degree()
    target = Fraction(10 * delta + 14)
    if bound <= target:
        bound, formula = target, "10D+14"
    return StrongColoring(_compact(colors), "optimal-1planar", bound, formula, info)


def strong_color(
    g: Graph,
    method: str,
    drawing: Optional[Drawing] = None,
    node_limit: int = 200_000,
    seed: int = 0,
    palette: Optional[int] = None,
) -> Optional[StrongColoring]:
    """Dispatch by method name; ``exact`` returns None when its search is exhausted."""
    if method == "mad":
        return strong_color_mad(g, node_limit, seed)
    if method == "greedy":
        return strong_color_greedy(g)
    if method == "exact":
        return strong_color_exact(g, node_limit)
    if method == "oneplanar":
        return strong_color_oneplanar(g, drawing, node_limit, seed, palette)
    if drawing is None:
        raise InputError(f"method {method!r} needs a drawing")
    if method == "split":
        return strong_color_split(g, drawing, node_limit, seed)
    if method == "ic":
        return strong_color_ic(g, drawing, node_limit, seed)
    if method == "optimal":
        return strong_color_optimal(g, drawing, node_limit, seed)
    raise InputError(f"unknown method {method!r}")
