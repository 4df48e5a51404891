"""Exhaustive search for interval colorings, exact width, certificates.

The backtracking solver is the package's ground truth: every construction
elsewhere is cross-checked against it on small instances. Non-colorability
is only ever certified by full exhaustion up to a sound upper bound on t,
by the odd-cycle chromatic index fact, or by the replayable parity
certificate for the triangle-with-even-paths family.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .coloring import EdgeColoring
from .graphs import Edge, Graph, GraphError, gen_triangle_graph, is_connected, norm_edge


# ---------------------------------------------------------------------------
# Outcomes and certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Colored:
    """An interval t-coloring was found; t is minimal when produced by width."""

    t: int
    coloring: EdgeColoring


@dataclass(frozen=True)
class ExhaustedAllT:
    """Every t from max degree to t_max was searched without success.

    reason says why t_max is a sound cap: "edge-count-bound" (all t colors
    must appear and each edge holds one color) or "triangle-free-bound"
    (triangle-free interval-colorable graphs satisfy t <= n - 1).
    """

    t_max: int
    reason: str


@dataclass(frozen=True)
class OddCycleCertificate:
    """Odd cycles need 3 proper colors but have max degree 2, so no
    interval coloring exists regardless of t."""

    n: int


@dataclass(frozen=True)
class ParityStep:
    """One forced deduction about edge color parities.

    kind "assume": the case hypothesis fixing `edges` to `parity`.
    kind "balance": at degree-4 vertex `at`, the two `using` edges share a
      known parity, and an interval of four consecutive colors holds
      exactly two of each parity, so the remaining two edges `edges` take
      the opposite one.
    kind "propagate": `path` is an even-length path of degree-2 interior
      vertices; each interior palette is {c, c+1}, one color of each
      parity, so the parity flips per interior vertex; an odd number of
      flips forces the last edge to `parity`, opposite the first edge.
    """

    kind: str
    parity: int
    edges: tuple[Edge, ...]
    at: int | None = None
    using: tuple[Edge, ...] = ()
    path: tuple[int, ...] = ()


@dataclass(frozen=True)
class ParityCase:
    assumed_parity: int
    steps: tuple[ParityStep, ...]
    conflict_edge: Edge


@dataclass(frozen=True)
class ParityCertificate:
    """Proof that the triangle-with-even-paths graph is not colorable.

    In any hypothetical interval coloring, two of the three triangle
    edges share a parity (pigeonhole) and meet at some triangle vertex.
    The certificate replays the forced-parity chain from one such vertex;
    the chain uses nothing about the three path lengths beyond their
    evenness, so it applies verbatim whichever vertex the pigeonhole
    picks. Both parity cases end in the recorded contradiction.
    """

    k: int
    l: int
    m: int
    vertex: str
    cases: tuple[ParityCase, ParityCase]


@dataclass(frozen=True)
class NotColorable:
    certificate: ExhaustedAllT | OddCycleCertificate | ParityCertificate


@dataclass(frozen=True)
class Inconclusive:
    """The time budget ran out while searching at bound_exhausted_at."""

    bound_exhausted_at: int


ColoringOutcome = Colored | NotColorable | Inconclusive


class BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# Prechecks and bounds
# ---------------------------------------------------------------------------

def _require_connected(g: Graph) -> None:
    if g.n == 0 or g.m == 0:
        raise GraphError("solver needs a nonempty connected graph")
    if not is_connected(g):
        raise GraphError("solver needs a connected graph")


def precheck(g: Graph) -> NotColorable | None:
    """Cheap non-colorability screen: odd cycles only.

    An interval-colorable graph has chromatic index equal to its max
    degree; odd cycles are the one such failure this package's graph
    families can produce.
    """
    _require_connected(g)
    if g.n % 2 == 1 and g.m == g.n and all(g.degree(v) == 2 for v in range(g.n)):
        return NotColorable(OddCycleCertificate(g.n))
    return None


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges:
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            return True
    return False


def color_bound(g: Graph) -> int:
    """Sound upper bound on t: |E| always (every color needs an edge),
    tightened to n - 1 for triangle-free graphs."""
    _require_connected(g)
    if has_triangle(g):
        return g.m
    return min(g.m, g.n - 1)


def _bfs_edge_order(g: Graph) -> list[Edge]:
    # keeps each new edge adjacent to already-colored ones, which makes
    # the palette pruning bite early
    order: list[Edge] = []
    seen_e: set[Edge] = set()
    visited = [False] * g.n
    queue = deque([0])
    visited[0] = True
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            e = norm_edge(u, v)
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            if not visited[v]:
                visited[v] = True
                queue.append(v)
    return order


# ---------------------------------------------------------------------------
# Backtracking search
# ---------------------------------------------------------------------------

def find_interval_coloring(
    g: Graph,
    t: int,
    require_palettes: dict[int, frozenset[int]] | None = None,
    deadline: float | None = None,
) -> EdgeColoring | None:
    """First interval t-coloring in deterministic search order, or None.

    Edges are tried in breadth-first order from vertex 0, colors
    ascending, so the result is reproducible. require_palettes pins the
    exact palette of chosen vertices (each set's size must equal the
    vertex degree); color-reversal symmetry breaking is disabled in that
    case because reversal does not preserve the pinned palettes.
    Raises BudgetExceeded when a deadline (time.monotonic seconds) passes.
    """
    _require_connected(g)
    if t < g.max_degree or t > g.m:
        return None
    if require_palettes:
        for v, pal in require_palettes.items():
            if len(pal) != g.degree(v):
                raise ValueError(
                    f"required palette for vertex {v} has size {len(pal)}, "
                    f"degree is {g.degree(v)}"
                )
            if min(pal) < 1 or max(pal) > t:
                return None

    edges = _bfs_edge_order(g)
    m = len(edges)
    degree = [g.degree(v) for v in range(g.n)]
    colored_at = [0] * g.n            # how many incident edges colored
    palette: list[set[int]] = [set() for _ in range(g.n)]
    lo = [0] * g.n
    hi = [0] * g.n
    assignment: dict[Edge, int] = {}
    color_use = [0] * (t + 1)
    distinct_used = 0
    required = require_palettes or {}

    # color-reversal symmetry: c -> t + 1 - c maps valid colorings to
    # valid colorings, so the first edge only needs the lower half
    first_cap = t if require_palettes else (t + 1) // 2

    node_budget = 1024  # deadline poll interval
    state = {"nodes": 0}

    def vertex_ok(v: int) -> bool:
        p_lo, p_hi = lo[v], hi[v]
        d = degree[v]
        # an interval of size d must fit over [p_lo, p_hi] inside [1, t]
        if p_hi - p_lo + 1 > d:
            return False
        if max(1, p_hi - d + 1) > min(p_lo, t - d + 1):
            return False
        if colored_at[v] == d and p_hi - p_lo + 1 != d:
            return False
        return True

    def place(idx: int) -> bool:
        nonlocal distinct_used
        if deadline is not None:
            state["nodes"] += 1
            if state["nodes"] % node_budget == 0 and time.monotonic() > deadline:
                raise BudgetExceeded
        if idx == m:
            return distinct_used == t
        # remaining edges must cover every color not yet used
        if t - distinct_used > m - idx:
            return False
        u, v = edges[idx]
        cap = first_cap if idx == 0 else t
        for c in range(1, cap + 1):
            if c in palette[u] or c in palette[v]:
                continue
            ru = required.get(u)
            if ru is not None and c not in ru:
                continue
            rv = required.get(v)
            if rv is not None and c not in rv:
                continue
            saved = []
            ok = True
            for w in (u, v):
                saved.append((lo[w], hi[w]))
                palette[w].add(c)
                colored_at[w] += 1
                if colored_at[w] == 1:
                    lo[w] = hi[w] = c
                else:
                    lo[w] = min(lo[w], c)
                    hi[w] = max(hi[w], c)
                if not vertex_ok(w):
                    ok = False
            color_use[c] += 1
            if color_use[c] == 1:
                distinct_used += 1
            if ok:
                assignment[edges[idx]] = c
                if place(idx + 1):
                    return True
                del assignment[edges[idx]]
            color_use[c] -= 1
            if color_use[c] == 0:
                distinct_used -= 1
            for w, (l0, h0) in zip((u, v), saved):
                palette[w].discard(c)
                colored_at[w] -= 1
                lo[w], hi[w] = l0, h0
        return False

    if place(0):
        return EdgeColoring(t, dict(assignment))
    return None


def width(g: Graph, budget_ms: int | None = None) -> ColoringOutcome:
    """Exact minimum number of colors, scanning every t up to the bound.

    Colorability is not monotone in t, so a miss at one t proves nothing
    about larger t; NotColorable therefore requires exhausting the whole
    range. A budget overrun yields Inconclusive naming the t in progress.
    """
    bad = precheck(g)
    if bad is not None:
        return bad
    bound = color_bound(g)
    reason = "triangle-free-bound" if not has_triangle(g) else "edge-count-bound"
    deadline = None
    if budget_ms is not None:
        deadline = time.monotonic() + budget_ms / 1000.0
    for t in range(g.max_degree, bound + 1):
        if deadline is not None and time.monotonic() > deadline:
            return Inconclusive(bound_exhausted_at=t)
        try:
            found = find_interval_coloring(g, t, deadline=deadline)
        except BudgetExceeded:
            return Inconclusive(bound_exhausted_at=t)
        if found is not None:
            return Colored(t, found)
    return NotColorable(ExhaustedAllT(t_max=bound, reason=reason))


# ---------------------------------------------------------------------------
# Parity certificate for the triangle-with-even-paths family
# ---------------------------------------------------------------------------

def _role_ids(labels: dict[int, str]) -> dict[str, int]:
    return {name: v for v, name in labels.items()}


def _path_between(g: Graph, start_edge_end: int, first: int) -> list[int]:
    # walk from triangle vertex start through degree-2 vertices to the
    # far triangle vertex; returns the full vertex sequence
    walk = [start_edge_end, first]
    while g.degree(walk[-1]) == 2:
        a, b = g.neighbors(walk[-1])
        walk.append(a if a != walk[-2] else b)
    return walk


def _build_case(g: Graph, a: int, b: int, c: int, p: int) -> ParityCase:
    """Forced-parity chain assuming the triangle edges at vertex a both
    have parity p. a, b, c are the triangle vertex ids."""
    ab, ac, bc = norm_edge(a, b), norm_edge(a, c), norm_edge(b, c)

    def path_from(src: int, dst: int) -> list[int]:
        first = next(
            w for w in g.neighbors(src)
            if g.degree(w) == 2 and _path_between(g, src, w)[-1] == dst
        )
        return _path_between(g, src, first)

    p_ab = path_from(a, b)
    p_ac = path_from(a, c)
    p_bc = path_from(b, c)

    def path_edges(walk: list[int]) -> list[Edge]:
        return [norm_edge(x, y) for x, y in zip(walk, walk[1:])]

    q = 1 - p
    steps = [
        ParityStep("assume", p, (ab, ac)),
        ParityStep("balance", q, (path_edges(p_ab)[0], path_edges(p_ac)[0]),
                   at=a, using=(ab, ac)),
        ParityStep("propagate", p, (path_edges(p_ab)[-1],), path=tuple(p_ab)),
        ParityStep("propagate", p, (path_edges(p_ac)[-1],), path=tuple(p_ac)),
        ParityStep("balance", q, (bc, path_edges(p_bc)[0]),
                   at=b, using=(ab, path_edges(p_ab)[-1])),
        ParityStep("propagate", p, (path_edges(p_bc)[-1],), path=tuple(p_bc)),
        ParityStep("balance", q, (bc, path_edges(p_bc)[-1]),
                   at=c, using=(ac, path_edges(p_ac)[-1])),
    ]
    return ParityCase(p, tuple(steps), conflict_edge=path_edges(p_bc)[-1])


def parity_obstruction(k: int, l: int, m: int, vertex: str = "x") -> ParityCertificate:
    """Certificate that the triangle graph admits no interval coloring.

    vertex picks which triangle corner anchors the chain; the chain only
    uses the evenness of the three paths, so any corner works, which is
    what makes the single recorded chain cover the pigeonhole's choice.
    """
    if vertex not in ("x", "y", "z"):
        raise ValueError(f"vertex must be x, y, or z, got {vertex!r}")
    g, labels = gen_triangle_graph(k, l, m)
    ids = _role_ids(labels)
    a = ids[vertex]
    b, c = sorted(set((ids["x"], ids["y"], ids["z"])) - {a})
    cases = (_build_case(g, a, b, c, 0), _build_case(g, a, b, c, 1))
    return ParityCertificate(k, l, m, vertex, cases)


def replay_parity_certificate(cert: ParityCertificate) -> bool:
    """Mechanically re-check every deduction in the certificate.

    Rebuilds the graph, then walks each case: assumptions introduce
    parities, balance steps must name a degree-4 vertex, two incident
    edges with equal known parity, and conclude the opposite parity on
    exactly the other two incident edges; propagate steps must walk a
    real even path of degree-2 interior vertices whose first edge parity
    is known. Every case must stay consistent until its final step and
    conflict there on the recorded edge. Returns True only if all of
    that holds.
    """
    g, _ = gen_triangle_graph(cert.k, cert.l, cert.m)

    def run_case(case: ParityCase) -> bool:
        known: dict[Edge, int] = {}

        def learn(e: Edge, p: int) -> bool:
            # False means contradiction with an earlier deduction
            if e in known and known[e] != p:
                return False
            known[e] = p
            return True

        last = len(case.steps) - 1
        for i, step in enumerate(case.steps):
            for e in step.edges + step.using:
                if e not in g.edges:
                    return False
            if step.kind == "assume":
                if step.parity != case.assumed_parity:
                    return False
                if not all(learn(e, step.parity) for e in step.edges):
                    return False
            elif step.kind == "balance":
                v = step.at
                if v is None or g.degree(v) != 4:
                    return False
                incident = {norm_edge(v, w) for w in g.neighbors(v)}
                if set(step.using) | set(step.edges) != incident:
                    return False
                if len(step.using) != 2 or len(step.edges) != 2:
                    return False
                ps = {known.get(e) for e in step.using}
                if ps != {1 - step.parity}:
                    return False
                conflicted = not all(learn(e, step.parity) for e in step.edges)
                if conflicted:
                    return i == last and cert_conflicts(case, step)
            elif step.kind == "propagate":
                walk = step.path
                if len(walk) < 3 or len(walk) % 2 != 1:
                    return False  # even edge count means odd vertex count
                pe = [norm_edge(x, y) for x, y in zip(walk, walk[1:])]
                if not all(e in g.edges for e in pe):
                    return False
                if not all(g.degree(v) == 2 for v in walk[1:-1]):
                    return False
                first_p = known.get(pe[0])
                if first_p is None:
                    return False
                flips = len(pe) - 1
                want = first_p if flips % 2 == 0 else 1 - first_p
                if step.parity != want or step.edges != (pe[-1],):
                    return False
                if not learn(pe[-1], want):
                    return i == last and cert_conflicts(case, step)
            else:
                return False
        # a case that completes without contradiction proves nothing
        return False

    def cert_conflicts(case: ParityCase, step: ParityStep) -> bool:
        return case.conflict_edge in step.edges

    return all(run_case(case) for case in cert.cases)
