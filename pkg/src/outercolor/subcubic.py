"""Constructive interval coloring for 2-connected outerplanar graphs
with maximum degree at most 3.

The recursion peels one reducible configuration at a time: an adjacent
degree-2 pair is cut out (reattaching or keeping the neighbor edge), or
a 3-2-3 triangle is contracted to a single vertex. Each unwind splices
colors for the removed edges using only the local palettes, and the full
validator re-checks the coloring after every splice, so a bug anywhere
surfaces at the exact recursion depth that introduced it. At most 4
colors are ever produced; graphs of even order with degree-3 vertices
get an exactly-3-color construction instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, check_interval_coloring
from .graphs import Edge, Graph, is_cycle_graph, make_graph, norm_edge
from .outerplanar import (
    OuterEmbedding,
    PairConfig,
    Rejection,
    TriangleConfig,
    find_reducible_config,
    recognize_outerplanar_2connected,
)
from .solver import find_interval_coloring


class ColoringPreconditionError(ValueError):
    """Input outside the algorithm's graph class."""


@dataclass(frozen=True)
class ReductionStep:
    """One recursion event, for traces.

    case is one of Case11, Case12, Case12OddCycle, Case2, Case2OddCycle,
    BaseSmall, BaseEvenCycle. removed lists the peeled vertices (u, v)
    or (u, v, w); attachments lists (x, y) for pairs or the external
    neighbors (a, b) for triangles; super_vertex is the contracted
    vertex id for Case2 variants.
    """

    case: str
    depth: int
    removed: tuple[int, ...] = ()
    attachments: tuple[int, ...] = ()
    super_vertex: int | None = None


def _assert_valid(g: Graph, col: EdgeColoring, where: str) -> EdgeColoring:
    bad = check_interval_coloring(g, col)
    if bad is not None:
        raise AssertionError(f"splice broke the coloring at {where}: {bad.describe()}")
    return col


def _coloring_of(assignment: dict[Edge, int]) -> EdgeColoring:
    return EdgeColoring(max(assignment.values()), assignment)


def _alternate_even_cycle(g: Graph) -> dict[Edge, int]:
    # walk the cycle from 0 toward its smaller neighbor, alternating 1, 2
    order = [0, min(g.neighbors(0))]
    while len(order) < g.n:
        a, b = g.neighbors(order[-1])
        order.append(a if a != order[-2] else b)
    colors = {}
    for i in range(g.n):
        e = norm_edge(order[i], order[(i + 1) % g.n])
        colors[e] = 1 + (i % 2)
    return colors


def _cycle_path_after_removing(g: Graph, x: int, y: int) -> list[int]:
    # g is a cycle containing edge xy; return the x..y walk avoiding xy
    first = next(w for w in g.neighbors(x) if w != y)
    walk = [x, first]
    while walk[-1] != y:
        a, b = g.neighbors(walk[-1])
        walk.append(a if a != walk[-2] else b)
    return walk


def _recurse_on(
    edges: list[Edge], depth: int, steps: list[ReductionStep]
) -> dict[Edge, int]:
    # compress the surviving vertex ids, solve, translate colors back
    verts = sorted({v for e in edges for v in e})
    to_new = {v: i for i, v in enumerate(verts)}
    sub = make_graph(len(verts), [(to_new[a], to_new[b]) for a, b in edges])
    col = _color_rec(sub, depth + 1, steps)
    return {
        norm_edge(verts[a], verts[b]): c for (a, b), c in col.assignment.items()
    }


def _splice_pair_new_edge(
    g: Graph, cfg: PairConfig, depth: int, steps: list[ReductionStep]
) -> EdgeColoring:
    # the pair's outside neighbors were not adjacent: recolor against the
    # shortcut edge xy, then pull its color onto ux and vy
    u, v, x, y = cfg.u, cfg.v, cfg.x, cfg.y
    steps.append(ReductionStep("Case11", depth, removed=(u, v), attachments=(x, y)))
    drop = {norm_edge(u, x), norm_edge(u, v), norm_edge(v, y)}
    sub_edges = [e for e in g.sorted_edges() if e not in drop] + [norm_edge(x, y)]
    assert len(sub_edges) <= g.m - 2, "reduction must shed at least two edges"
    colors = _recurse_on(sub_edges, depth, steps)
    axy = colors.pop(norm_edge(x, y))
    if axy == 1:
        colors[norm_edge(u, x)] = 1
        colors[norm_edge(v, y)] = 1
        colors[norm_edge(u, v)] = 2
    else:
        colors[norm_edge(u, x)] = axy
        colors[norm_edge(v, y)] = axy
        colors[norm_edge(u, v)] = axy - 1
    return _assert_valid(g, _coloring_of(colors), f"pair splice depth {depth}")


def _splice_pair_kept_edge(
    g: Graph, cfg: PairConfig, depth: int, steps: list[ReductionStep]
) -> EdgeColoring:
    # xy is an edge of G, so the reduced graph simply loses u and v
    u, v, x, y = cfg.u, cfg.v, cfg.x, cfg.y
    drop = {norm_edge(u, x), norm_edge(u, v), norm_edge(v, y)}
    sub_edges = [e for e in g.sorted_edges() if e not in drop]
    assert len(sub_edges) <= g.m - 2, "reduction must shed at least two edges"
    verts = sorted({w for e in sub_edges for w in e})
    to_new = {w: i for i, w in enumerate(verts)}
    sub = make_graph(len(verts), [(to_new[a], to_new[b]) for a, b in sub_edges])

    if is_cycle_graph(sub) and sub.n % 2 == 1:
        # cannot recurse into an odd cycle; color it directly: xy gets 3,
        # the rest of the cycle alternates 1, 2 from x, and the peeled
        # path climbs 2, 3, 4
        steps.append(
            ReductionStep("Case12OddCycle", depth, removed=(u, v), attachments=(x, y))
        )
        colors: dict[Edge, int] = {norm_edge(x, y): 3}
        walk = _cycle_path_after_removing(sub, to_new[x], to_new[y])
        for i, (a, b) in enumerate(zip(walk, walk[1:])):
            colors[norm_edge(verts[a], verts[b])] = 1 + (i % 2)
        colors[norm_edge(u, x)] = 2
        colors[norm_edge(u, v)] = 3
        colors[norm_edge(v, y)] = 4
        return _assert_valid(g, _coloring_of(colors), f"odd-cycle pair depth {depth}")

    steps.append(ReductionStep("Case12", depth, removed=(u, v), attachments=(x, y)))
    colors = _recurse_on(sub_edges, depth, steps)
    sx = {colors[norm_edge(x, w)] for w in g.neighbors(x) if norm_edge(x, w) in colors}
    sy = {colors[norm_edge(y, w)] for w in g.neighbors(y) if norm_edge(y, w) in colors}
    if not sx & sy:
        raise AssertionError(f"palettes at {x} and {y} lost their shared edge")
    if sx == sy:
        c = min(sx)
        if c == 1:
            colors[norm_edge(u, x)] = 3
            colors[norm_edge(v, y)] = 3
            colors[norm_edge(u, v)] = 2
        else:
            colors[norm_edge(u, x)] = c - 1
            colors[norm_edge(v, y)] = c - 1
            colors[norm_edge(u, v)] = c
    else:
        union = sorted(sx | sy)
        c = union[0]
        if len(union) != 3 or union != [c, c + 1, c + 2]:
            raise AssertionError(f"pair palettes {sx} {sy} are not a 3-run")
        if sx == {c, c + 1}:
            colors[norm_edge(u, x)] = c + 2
            colors[norm_edge(u, v)] = c + 1
            colors[norm_edge(v, y)] = c
        else:
            colors[norm_edge(u, x)] = c
            colors[norm_edge(u, v)] = c + 1
            colors[norm_edge(v, y)] = c + 2
    return _assert_valid(g, _coloring_of(colors), f"kept-edge pair depth {depth}")


def _splice_triangle(
    g: Graph, cfg: TriangleConfig, depth: int, steps: list[ReductionStep]
) -> EdgeColoring:
    u, v, w = cfg.u, cfg.v, cfg.w
    a = next(z for z in g.neighbors(u) if z not in (v, w))
    b = next(z for z in g.neighbors(w) if z not in (u, v))
    if a == b:
        # would make `a` a cut vertex, contradicting 2-connectedness
        # (the 5-edge diamond never reaches here: the small base case
        # catches it first)
        raise AssertionError(f"triangle {u},{v},{w} shares its external neighbor {a}")
    touched = {u, v, w}
    sub_edges = [e for e in g.sorted_edges() if not (set(e) & touched)]
    sub_edges += [norm_edge(u, a), norm_edge(u, b)]
    assert len(sub_edges) <= g.m - 2, "contraction must shed at least two edges"
    verts = sorted({z for e in sub_edges for z in e})
    to_new = {z: i for i, z in enumerate(verts)}
    sub = make_graph(len(verts), [(to_new[p], to_new[q]) for p, q in sub_edges])

    if is_cycle_graph(sub) and sub.n % 2 == 1:
        steps.append(
            ReductionStep(
                "Case2OddCycle", depth, removed=(u, v, w), attachments=(a, b),
                super_vertex=u,
            )
        )
        # the external u..w path gets 4 then alternates 3, 2 to end on 2;
        # its middle is the sub-cycle walk from a to b that avoids the
        # contracted vertex
        vstar = to_new[u]
        walk = [to_new[a], next(z for z in sub.neighbors(to_new[a]) if z != vstar)]
        while walk[-1] != to_new[b]:
            p, q = sub.neighbors(walk[-1])
            walk.append(p if p != walk[-2] else q)
        path = [u] + [verts[i] for i in walk] + [w]
        colors = {norm_edge(u, w): 3, norm_edge(u, v): 2, norm_edge(v, w): 1}
        for i, (p, q) in enumerate(zip(path, path[1:])):
            colors[norm_edge(p, q)] = 4 if i == 0 else (3 if i % 2 == 1 else 2)
        return _assert_valid(g, _coloring_of(colors), f"odd-cycle triangle depth {depth}")

    steps.append(
        ReductionStep("Case2", depth, removed=(u, v, w), attachments=(a, b), super_vertex=u)
    )
    colors = _recurse_on(sub_edges, depth, steps)
    p = colors[norm_edge(u, a)]
    q = colors.pop(norm_edge(u, b))
    colors[norm_edge(w, b)] = q
    c = min(p, q)
    if {p, q} != {c, c + 1}:
        raise AssertionError(f"contracted vertex palette {{{p}, {q}}} is not a 2-run")
    colors[norm_edge(u, w)] = 3 if c == 1 else c - 1
    # orientation of {c, c+1} over uv, vw: exactly one choice keeps the
    # palettes at u and w gap-free; try one, validate locally, else swap
    for uv_color, vw_color in ((c, c + 1), (c + 1, c)):
        colors[norm_edge(u, v)] = uv_color
        colors[norm_edge(v, w)] = vw_color
        pu = sorted((p, uv_color, colors[norm_edge(u, w)]))
        pw = sorted((q, vw_color, colors[norm_edge(u, w)]))
        if (
            len(set(pu)) == 3
            and len(set(pw)) == 3
            and pu[2] - pu[0] == 2
            and pw[2] - pw[0] == 2
        ):
            break
    else:
        raise AssertionError(f"no orientation of {{{c}, {c + 1}}} fits at {u}, {w}")
    return _assert_valid(g, _coloring_of(colors), f"triangle splice depth {depth}")


def _color_rec(g: Graph, depth: int, steps: list[ReductionStep]) -> EdgeColoring:
    if is_cycle_graph(g):
        if g.n % 2 == 1:
            raise AssertionError("recursion reached an odd cycle")
        steps.append(ReductionStep("BaseEvenCycle", depth))
        return _assert_valid(g, _coloring_of(_alternate_even_cycle(g)), "even cycle")
    if g.m <= 5:
        steps.append(ReductionStep("BaseSmall", depth))
        for t in range(g.max_degree, 5):
            col = find_interval_coloring(g, t)
            if col is not None:
                return _assert_valid(g, col, "small base case")
        raise AssertionError(f"no coloring with at most 4 colors at {g.m} edges")

    cfg = find_reducible_config(g)
    if isinstance(cfg, PairConfig):
        if g.has_edge(cfg.x, cfg.y):
            return _splice_pair_kept_edge(g, cfg, depth, steps)
        return _splice_pair_new_edge(g, cfg, depth, steps)
    return _splice_triangle(g, cfg, depth, steps)


def _check_preconditions(g: Graph) -> OuterEmbedding:
    emb = recognize_outerplanar_2connected(g)
    if isinstance(emb, Rejection):
        raise ColoringPreconditionError(
            f"not a 2-connected outerplanar graph: {emb.reason}"
        )
    if g.max_degree > 3:
        raise ColoringPreconditionError(f"max degree {g.max_degree} exceeds 3")
    if is_cycle_graph(g) and g.n % 2 == 1:
        raise ColoringPreconditionError("odd cycles have no interval coloring")
    return emb


def color_subcubic_le4_traced(g: Graph) -> tuple[EdgeColoring, tuple[ReductionStep, ...]]:
    """Interval coloring with at most 4 colors, plus the reduction trace."""
    _check_preconditions(g)
    steps: list[ReductionStep] = []
    col = _color_rec(g, 0, steps)
    if col.t > 4:
        raise AssertionError(f"construction used {col.t} colors")
    return col, tuple(steps)


def color_subcubic_le4(g: Graph) -> EdgeColoring:
    """Interval coloring of a 2-connected outerplanar graph with maximum
    degree at most 3 (and not an odd cycle), never exceeding 4 colors."""
    col, _ = color_subcubic_le4_traced(g)
    return col


def color_even_hamiltonian(g: Graph, emb: OuterEmbedding) -> EdgeColoring:
    """Exactly-3-color construction for even order and max degree 3:
    alternate 1, 2 around the outer cycle, give every chord color 3.

    Degree 3 means the chords form a matching, so each chord endpoint
    sees {1, 2, 3} and everything else sees {1, 2}.
    """
    if g.n % 2 != 0:
        raise ColoringPreconditionError("even order required")
    if g.max_degree != 3:
        raise ColoringPreconditionError("max degree must be exactly 3")
    colors: dict[Edge, int] = {}
    for i in range(g.n):
        e = norm_edge(emb.order[i], emb.order[(i + 1) % g.n])
        colors[e] = 1 + (i % 2)
    for e in emb.chords:
        colors[e] = 3
    return _assert_valid(g, _coloring_of(colors), "even hamiltonian construction")


def color_optimal_subcubic(g: Graph) -> tuple[int, EdgeColoring]:
    """Minimum-color interval coloring for max degree exactly 3: three
    colors at even order, four at odd.

    Odd order cannot do better: a 3-coloring would force the color-2
    edges to form a perfect matching, which odd order rules out.
    """
    emb = _check_preconditions(g)
    if g.max_degree != 3:
        raise ColoringPreconditionError(f"max degree must be 3, got {g.max_degree}")
    if g.n % 2 == 0:
        col = color_even_hamiltonian(g, emb)
        return 3, col
    col = color_subcubic_le4(g)
    if col.t != 4:
        raise AssertionError(f"odd-order construction used {col.t} colors, wanted 4")
    return 4, col
