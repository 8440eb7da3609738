"""Decision procedures for rainbow-free colourings and saturation verdicts.

The central search enumerates proper edge colourings of a graph as
restricted-growth assignments: edges are processed in a fixed breadth-first
order from a maximum-degree vertex, and an edge may take colour c only when
c is at most one more than the largest colour used so far.  This walks each
partition of the edge set into matchings exactly once, which removes colour
relabelling symmetry outright.  A branch is pruned as soon as the fully
coloured edges already contain a rainbow copy of the target pattern, since
such a copy persists in every extension.

Budgets are node counts on that search tree.  A search that runs out of
nodes reports Unknown, never a guess.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .canon import non_edge_orbit_representatives
from .colouring import EdgeColouring
from .graphs import Edge, Graph
from .patterns import PatternSpec, realize_pattern

DEFAULT_BUDGET = 100_000_000


class Status(str, Enum):
    ESTABLISHED = "established"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Embedding:
    """Injective map of pattern vertices into a host graph.

    `vertices[i]` is the image of pattern vertex i; `edge_image` is parallel
    to the pattern's edge list.
    """

    vertices: tuple[int, ...]
    edge_image: tuple[Edge, ...]

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edge_image": [[u, v] for u, v in self.edge_image],
        }


@dataclass(frozen=True)
class NonEdgeWitness:
    """A non-edge whose addition still admits a rainbow-free colouring."""

    edge: Edge
    colouring: EdgeColouring

    def to_json_dict(self) -> dict:
        return {"non_edge": list(self.edge), "colouring": self.colouring.to_json_dict()}


@dataclass(frozen=True)
class SearchVerdict:
    status: Status
    certificate: object | None
    nodes_explored: int
    budget: int | None
    note: str | None = None

    def to_json_dict(self) -> dict:
        cert: object | None
        if self.certificate is None:
            cert = None
        elif hasattr(self.certificate, "to_json_dict"):
            cert = self.certificate.to_json_dict()
        else:
            cert = self.certificate
        out = {
            "status": self.status.value,
            "certificate": cert,
            "nodes_explored": self.nodes_explored,
            "budget": self.budget,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CheckResult:
    """Boolean saturation verdict plus the witness that decided it."""

    holds: bool
    witness: object | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json_dict(self) -> dict:
        w: object | None
        if self.witness is None:
            w = None
        elif hasattr(self.witness, "to_json_dict"):
            w = self.witness.to_json_dict()
        else:
            w = list(self.witness)
        return {"holds": self.holds, "witness": w}


# -- pattern matching ---------------------------------------------------------


class _Matcher:
    """Backtracking embedder for one pattern graph.

    Precomputes a placement plan (each new pattern vertex is anchored to an
    already placed neighbour; fresh components restart unanchored) plus one
    anchored plan per directed pattern edge, used to look for copies through
    a specific host edge.
    """

    def __init__(self, pattern: Graph):
        self.pattern = pattern
        self.k = pattern.n
        self.edge_count = len(pattern.edges)
        self.full_plan = self._plan(seed=())
        self.anchored_plans = []
        for a, b in pattern.edges:
            self.anchored_plans.append(((a, b), self._plan(seed=(a, b))))
            self.anchored_plans.append(((b, a), self._plan(seed=(b, a))))

    def _plan(self, seed: tuple[int, ...]):
        placed = list(seed)
        placed_set = set(seed)
        steps = []
        while len(placed) < self.k:
            cands = []
            for x in range(self.k):
                if x in placed_set:
                    continue
                anchors = [y for y in self.pattern.neighbours(x) if y in placed_set]
                if anchors:
                    cands.append((len(anchors), x, anchors))
            if cands:
                cands.sort(key=lambda it: (-it[0], it[1]))
                _, x, anchors = cands[0]
                steps.append((x, anchors[0], tuple(anchors[1:])))
            else:
                x = min(v for v in range(self.k) if v not in placed_set)
                steps.append((x, None, ()))
            placed.append(x)
            placed_set.add(x)
        return tuple(steps)

    def _dfs(self, steps, idx, mapping, used, cmask, adj, ecol, n, rainbow):
        if idx == len(steps):
            return True
        hv, primary, others = steps[idx]
        if primary is None:
            for w in range(n):
                if used >> w & 1:
                    continue
                mapping[hv] = w
                if self._dfs(steps, idx + 1, mapping, used | (1 << w), cmask,
                             adj, ecol, n, rainbow):
                    return True
            mapping[hv] = -1
            return False
        base = mapping[primary]
        for w, cw in adj[base]:
            if used >> w & 1:
                continue
            if rainbow:
                if cmask >> cw & 1:
                    continue
                nmask = cmask | (1 << cw)
            else:
                nmask = cmask
            ok = True
            for q in others:
                cq = ecol[mapping[q]][w]
                if cq == 0:
                    ok = False
                    break
                if rainbow:
                    if nmask >> cq & 1:
                        ok = False
                        break
                    nmask |= 1 << cq
            if not ok:
                continue
            mapping[hv] = w
            if self._dfs(steps, idx + 1, mapping, used | (1 << w), nmask,
                         adj, ecol, n, rainbow):
                return True
        mapping[hv] = -1
        return False

    def exists_through(self, u, v, c_uv, adj, ecol, n) -> bool:
        """Rainbow copy among coloured edges that uses the edge (u, v)?"""
        for (a, b), steps in self.anchored_plans:
            mapping = [-1] * self.k
            mapping[a] = u
            mapping[b] = v
            if self._dfs(steps, 0, mapping, (1 << u) | (1 << v), 1 << c_uv,
                         adj, ecol, n, True):
                return True
        return False

    def find(self, host: Graph, colouring: EdgeColouring | None) -> Embedding | None:
        """Complete search; deterministic (first hit in the fixed scan order)."""
        n = host.n
        if self.k > n:
            return None
        ecol = [[0] * n for _ in range(n)]
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(host.edges):
            c = colouring.colours[i] if colouring is not None else 1
            ecol[u][v] = ecol[v][u] = c
            adj[u].append((v, c))
            adj[v].append((u, c))
        mapping = [-1] * self.k
        rainbow = colouring is not None
        if self._dfs(self.full_plan, 0, mapping, 0, 0, adj, ecol, n, rainbow):
            image = tuple(
                (min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
                for a, b in self.pattern.edges
            )
            return Embedding(tuple(mapping), image)
        return None


@lru_cache(maxsize=1024)
def _matcher_for(spec: PatternSpec) -> _Matcher:
    return _Matcher(realize_pattern(spec))


# -- the colouring search ------------------------------------------------------


def bfs_edge_order(g: Graph) -> tuple[Edge, ...]:
    """Edges ordered breadth-first from a maximum-degree vertex.

    Vertices are visited in BFS order (restarting per component at the
    unvisited vertex of largest degree); an edge is ranked by the BFS
    positions of its later, then earlier, endpoint.  This packs the edges
    around each vertex together, which tightens the matching constraints
    early in the search.
    """
    n = g.n
    if n == 0:
        return ()
    seen = [False] * n
    bfs: list[int] = []
    for start in sorted(range(n), key=lambda x: (-g.degree(x), x)):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            bfs.append(u)
            for w in g.neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    pos = {v: i for i, v in enumerate(bfs)}
    return tuple(
        sorted(
            g.edges,
            key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])),
        )
    )


class ColouringSearch:
    """Iterator over proper colourings of a graph, up to colour relabelling.

    With a pattern attached, branches whose coloured edges already contain a
    rainbow copy are pruned, so the iterator yields exactly the rainbow-free
    proper colourings.  `nodes_explored` counts colour assignments;
    `exhausted` reports whether the tree was fully walked.
    """

    def __init__(self, graph: Graph, pattern: PatternSpec | None,
                 budget: int | None = None):
        self.graph = graph
        self.budget = budget
        self.nodes_explored = 0
        self.exhausted = False
        self._order = bfs_edge_order(graph)
        pos = {e: i for i, e in enumerate(graph.edges)}
        self._out_slot = [pos[e] for e in self._order]
        self._matcher = _matcher_for(pattern) if pattern is not None else None

    def run(self):
        g = self.graph
        order = self._order
        m = len(order)
        n = g.n
        if m == 0:
            self.exhausted = True
            yield ()
            return
        matcher = self._matcher
        min_edges = matcher.edge_count if matcher else 0
        budget = self.budget
        out_slot = self._out_slot

        col = [0] * m
        maxu = [0] * (m + 1)
        assigned = [False] * m
        # usage[c] = bitmask of vertices already covered by colour c
        usage = [0] * (m + 2)
        ecol = [[0] * n for _ in range(n)]
        cadj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        ends = [(u, v, (1 << u) | (1 << v)) for u, v in order]

        i = 0
        while i >= 0:
            u, v, uvmask = ends[i]
            if assigned[i]:
                old = col[i]
                usage[old] ^= uvmask
                cadj[u].pop()
                cadj[v].pop()
                ecol[u][v] = ecol[v][u] = 0
                assigned[i] = False
            c = col[i] + 1
            limit = maxu[i] + 1
            while c <= limit and usage[c] & uvmask:
                c += 1
            if c > limit:
                col[i] = 0
                i -= 1
                continue
            if budget is not None and self.nodes_explored >= budget:
                return
            self.nodes_explored += 1
            col[i] = c
            usage[c] |= uvmask
            cadj[u].append((v, c))
            cadj[v].append((u, c))
            ecol[u][v] = ecol[v][u] = c
            assigned[i] = True
            if (
                matcher is not None
                and i + 1 >= min_edges
                and matcher.exists_through(u, v, c, cadj, ecol, n)
            ):
                continue
            if i + 1 == m:
                out = [0] * m
                for j in range(m):
                    out[out_slot[j]] = col[j]
                yield tuple(out)
                continue
            maxu[i + 1] = maxu[i] if c <= maxu[i] else c
            i += 1
        self.exhausted = True


def count_proper_colourings(g: Graph) -> int:
    """Number of partitions of E(g) into matchings."""
    search = ColouringSearch(g, None, None)
    return sum(1 for _ in search.run())


def enumerate_rainbow_free_colourings(g: Graph, pattern: PatternSpec):
    """All proper colourings of g without a rainbow copy, up to relabelling."""
    search = ColouringSearch(g, pattern, None)
    for colours in search.run():
        yield EdgeColouring(g, colours)


# -- public decision procedures ------------------------------------------------


def contains_copy(g: Graph, pattern: PatternSpec) -> Embedding | None:
    """Complete subgraph-isomorphism search for the pattern in g."""
    return _matcher_for(pattern).find(g, None)


def find_rainbow_copy(
    g: Graph, colouring: EdgeColouring, pattern: PatternSpec
) -> Embedding | None:
    """Complete search for a copy of the pattern whose edge colours are
    pairwise distinct.  The colouring need not be proper."""
    return _matcher_for(pattern).find(g, colouring)


def search_rainbow_free_colouring(
    g: Graph, pattern: PatternSpec, budget: int | None = DEFAULT_BUDGET
) -> SearchVerdict:
    """Look for a proper colouring of g with no rainbow copy of the pattern.

    Established carries the colouring found; Refuted means the exhaustive
    walk pruned every branch; Unknown means the node budget ran out.
    """
    search = ColouringSearch(g, pattern, budget)
    for colours in search.run():
        return SearchVerdict(
            Status.ESTABLISHED,
            EdgeColouring(g, colours),
            search.nodes_explored,
            budget,
        )
    if search.exhausted:
        return SearchVerdict(Status.REFUTED, None, search.nodes_explored, budget)
    return SearchVerdict(Status.UNKNOWN, None, search.nodes_explored, budget)


def forces_rainbow(
    g: Graph, pattern: PatternSpec, budget: int | None = DEFAULT_BUDGET
) -> SearchVerdict:
    """Does every proper colouring of g contain a rainbow copy?

    Negation wrapper around :func:`search_rainbow_free_colouring`; a
    counterexample colouring passes through as the Refuted certificate.
    """
    sub = search_rainbow_free_colouring(g, pattern, budget)
    if sub.status is Status.ESTABLISHED:
        return SearchVerdict(Status.REFUTED, sub.certificate, sub.nodes_explored, budget)
    if sub.status is Status.REFUTED:
        return SearchVerdict(Status.ESTABLISHED, None, sub.nodes_explored, budget)
    return SearchVerdict(Status.UNKNOWN, None, sub.nodes_explored, budget)


def _non_edge_reps(g: Graph, use_orbits: bool) -> list[Edge]:
    if use_orbits:
        return non_edge_orbit_representatives(g)
    return list(g.non_edges())


def is_saturated(g: Graph, pattern: PatternSpec, use_orbits: bool = True) -> CheckResult:
    """Pattern-free, and every single-edge addition creates a copy.

    Non-edges are checked one representative per automorphism orbit; the
    verdict is the same as checking all of them.
    """
    emb = contains_copy(g, pattern)
    if emb is not None:
        return CheckResult(False, emb)
    for e in _non_edge_reps(g, use_orbits):
        if contains_copy(g.add_edge(*e), pattern) is None:
            return CheckResult(False, e)
    return CheckResult(True, None)


def is_semi_saturated(
    g: Graph, pattern: PatternSpec, use_orbits: bool = True
) -> CheckResult:
    """Every single-edge addition creates a copy; g itself may contain one."""
    for e in _non_edge_reps(g, use_orbits):
        if contains_copy(g.add_edge(*e), pattern) is None:
            return CheckResult(False, e)
    return CheckResult(True, None)


def is_properly_rainbow_saturated(
    g: Graph,
    pattern: PatternSpec,
    budget: int | None = DEFAULT_BUDGET,
    use_orbits: bool = True,
) -> SearchVerdict:
    """Decide both defining conditions by exhaustive pruned search.

    Established: g has a rainbow-free proper colouring (the certificate) and
    for every non-edge orbit representative e, every proper colouring of g+e
    contains a rainbow copy.  Refuted carries either nothing (g itself has no
    rainbow-free colouring) or the offending non-edge with its rainbow-free
    colouring of g+e.  Unknown propagates from any sub-search; each
    sub-search gets the full node budget, and `nodes_explored` aggregates.

    When the pattern has more vertices than g, no edge addition can create a
    copy, so only complete graphs qualify; such verdicts are flagged with a
    "degenerate regime" note.
    """
    hg = realize_pattern(pattern)
    note = "degenerate regime" if g.n < hg.n else None
    base = search_rainbow_free_colouring(g, pattern, budget)
    total = base.nodes_explored
    if base.status is not Status.ESTABLISHED:
        return SearchVerdict(base.status, None, total, budget, note)
    saw_unknown = False
    for e in _non_edge_reps(g, use_orbits):
        sub = forces_rainbow(g.add_edge(*e), pattern, budget)
        total += sub.nodes_explored
        if sub.status is Status.REFUTED:
            cert = NonEdgeWitness(e, sub.certificate)
            return SearchVerdict(Status.REFUTED, cert, total, budget, note)
        if sub.status is Status.UNKNOWN:
            saw_unknown = True
    if saw_unknown:
        return SearchVerdict(Status.UNKNOWN, None, total, budget, note)
    return SearchVerdict(Status.ESTABLISHED, base.certificate, total, budget, note)
