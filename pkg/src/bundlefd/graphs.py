"""Simple undirected graphs with deletion subgraphs, exact distances, and
every connectivity notion the rest of the package builds on: vertex and
edge connectivity, mixed (vertex+edge) connectivity, and connectivity
pairs.

Design notes
------------
* Vertices are dense ints 0..n-1; edges are canonical (min, max) tuples.
* Graphs are immutable after construction and safe to share across
  threads or processes.
* K1 and all disconnected graphs have diameter INFINITE; kappa(K1) = 0.
* Connectivity is decided by subset enumeration up to a size cap
  (default 6), falling back to unit-capacity max-flow beyond it. Mixed
  connectivity is decided by exhaustive enumeration; the necessary
  condition p < kappa and p+q < lambda is only ever used to short-circuit
  a False answer, never to conclude True (knowing kappa and lambda is not
  enough to decide it).
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field

from ._bitgraph import (
    INFINITE,
    bits_without_edges,
    masked_diameter,
    masked_is_connected,
    reachable_set,
)
from ._enum import (
    DEFAULT_BUDGET,
    check_budget,
    colex_pairs,
    colex_subsets,
    subset_count,
)

DEFAULT_ENUMERATION_CAP = 6
# subset enumeration for connectivity switches to max-flow once a single
# size level would exceed this many connectivity checks
DEFAULT_ENUMERATION_WORK = 20_000


class InvalidFaultSetError(ValueError):
    """A fault set references elements that do not exist in the host graph."""


class EdgeListFormatError(ValueError):
    """Malformed edge-list or bundle text input; carries a line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "bits", "_hash", "_kappa", "_lambda")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edge_set = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            edge_set.add(canonical_edge(u, v))
        self.n = n
        self.edges = tuple(sorted(edge_set))
        bits = [0] * n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.bits = tuple(bits)
        self.adj = tuple(
            tuple(w for w in range(n) if (bits[v] >> w) & 1) for v in range(n)
        )
        self._hash = hash((n, self.edges))
        # lazily memoized connectivities (value-level, parameter-independent)
        self._kappa = None
        self._lambda = None

    # identity --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    # queries ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self.n

    def has_edge(self, u: int, v: int) -> bool:
        return (
            0 <= u < self.n and 0 <= v < self.n and bool((self.bits[u] >> v) & 1)
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not self.has_vertex(v):
            raise ValueError(f"unknown vertex {v}")
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def canonical_hash(self) -> str:
        """Short stable digest of (n, edge list), used in reports."""
        payload = f"{self.n};" + ",".join(f"{u}-{v}" for u, v in self.edges)
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class FaultSet:
    """A set of faulty vertices and faulty edges.

    An edge fault may share endpoints with a vertex fault; deleting such
    an edge is then a no-op, which is explicitly allowed.
    """

    vertex_faults: frozenset[int] = frozenset()
    edge_faults: frozenset[tuple[int, int]] = frozenset()

    @classmethod
    def of(cls, vertices=(), edges=()) -> "FaultSet":
        return cls(
            frozenset(vertices),
            frozenset(canonical_edge(u, v) for u, v in edges),
        )

    @property
    def size(self) -> int:
        return len(self.vertex_faults) + len(self.edge_faults)

    def validate_in(self, g: Graph) -> None:
        for v in self.vertex_faults:
            if not g.has_vertex(v):
                raise InvalidFaultSetError(f"faulty vertex {v} not in graph")
        for u, v in self.edge_faults:
            if not g.has_edge(u, v):
                raise InvalidFaultSetError(f"faulty edge ({u}, {v}) not in graph")

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_faults))

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edge_faults))


EMPTY_FAULTS = FaultSet()


@dataclass(frozen=True)
class PathSeq:
    """A path as its vertex sequence; edges are the consecutive pairs.

    All vertices are distinct (a path, not a walk); length is the edge
    count, so a single vertex is a path of length 0.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(canonical_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def reversed(self) -> "PathSeq":
        return PathSeq(tuple(reversed(self.vertices)))

    def validate(self, g: Graph) -> None:
        for v in self.vertices:
            if not g.has_vertex(v):
                raise ValueError(f"path vertex {v} not in graph")
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"path step ({u}, {v}) is not an edge")

    def avoids(self, faults: FaultSet) -> bool:
        return not (
            set(self.vertices) & faults.vertex_faults
            or set(self.edges) & faults.edge_faults
        )


# ---------------------------------------------------------------------
# deletion subgraphs and distances
# ---------------------------------------------------------------------


def delete_elements(g: Graph, faults: FaultSet) -> Graph:
    """Subgraph of (V, E minus edge faults) induced on V minus vertex
    faults; edges incident to deleted vertices vanish, g is unchanged.

    Graph ids stay dense, so survivors are relabeled by ascending
    original id; `surviving_vertices` gives the original ids in relabel
    order. An edge fault sharing an endpoint with a vertex fault is
    redundant but allowed.
    """
    faults.validate_in(g)
    survivors = [v for v in g.vertices() if v not in faults.vertex_faults]
    index = {v: i for i, v in enumerate(survivors)}
    kept = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index and (u, v) not in faults.edge_faults
    ]
    return Graph(len(survivors), kept)


def surviving_vertices(g: Graph, faults: FaultSet) -> tuple[int, ...]:
    """Original ids of the vertices kept by delete_elements, in the order
    they are relabeled (ascending)."""
    return tuple(v for v in g.vertices() if v not in faults.vertex_faults)


def distance(g: Graph, u: int, v: int):
    """Shortest-path length between u and v; INFINITE when unreachable."""
    if not g.has_vertex(u):
        raise ValueError(f"unknown vertex {u}")
    if not g.has_vertex(v):
        raise ValueError(f"unknown vertex {v}")
    if u == v:
        return 0
    alive = (1 << g.n) - 1
    seen = 1 << u
    frontier = [u]
    dist = 0
    while frontier:
        dist += 1
        nxt = 0
        for w in frontier:
            nxt |= g.bits[w]
        nxt &= alive & ~seen
        if (nxt >> v) & 1:
            return dist
        seen |= nxt
        frontier = []
        m = nxt
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            frontier.append(w)
    return INFINITE


def diameter(g: Graph):
    """Maximum pairwise distance; INFINITE for disconnected graphs, and
    for K1, which counts as disconnected."""
    if g.n == 0:
        return INFINITE
    return masked_diameter(list(g.bits), (1 << g.n) - 1)


def is_connected(g: Graph) -> bool:
    """Connectedness with the K1-is-disconnected convention."""
    if g.n == 0:
        return False
    return masked_is_connected(list(g.bits), (1 << g.n) - 1)


def shortest_path(g: Graph, u: int, v: int, *, forbidden_vertices=(),
                  forbidden_edges=()):
    """Deterministic BFS shortest path from u to v avoiding the given
    vertices and edges, or None if none exists. Neighbors are visited in
    ascending id order, so reported paths are reproducible.

    u and v must not themselves be forbidden.
    """
    blocked = set(forbidden_vertices)
    if u in blocked or v in blocked:
        raise ValueError("endpoint of a path search is forbidden")
    bad_edges = {canonical_edge(a, b) for a, b in forbidden_edges}
    if u == v:
        return PathSeq((u,))
    parent = {u: None}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in g.adj[w]:
            if x in parent or x in blocked:
                continue
            if bad_edges and canonical_edge(w, x) in bad_edges:
                continue
            parent[x] = w
            if x == v:
                out = [x]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                return PathSeq(tuple(reversed(out)))
            queue.append(x)
    return None


def minimum_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(len(g.adj[v]) for v in g.vertices())


# ---------------------------------------------------------------------
# vertex / edge connectivity
# ---------------------------------------------------------------------


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def vertex_connectivity(g: Graph, *, cap: int = DEFAULT_ENUMERATION_CAP,
                        work_limit: int = DEFAULT_ENUMERATION_WORK) -> int:
    """kappa(G): smallest number of vertices whose removal disconnects G.

    0 for disconnected graphs and K1; n-1 for complete graphs. Decided by
    colex subset enumeration for cut sizes up to `cap` (as long as a size
    level stays under `work_limit` checks), then by max-flow (Menger).
    """
    if g._kappa is not None:
        return g._kappa
    if not is_connected(g):
        kappa = 0
    elif is_complete(g):
        kappa = g.n - 1
    else:
        kappa = _kappa_by_enumeration(g, cap, work_limit)
        if kappa is None:
            kappa = _kappa_by_flow(g)
    g._kappa = kappa
    return kappa


def _kappa_by_enumeration(g: Graph, cap: int, work_limit: int):
    bits = list(g.bits)
    full = (1 << g.n) - 1
    top = min(cap, g.n - 2)
    for k in range(1, top + 1):
        if subset_count(g.n, k) > work_limit:
            return None
        for sub in colex_subsets(range(g.n), k):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if not masked_is_connected(bits, full & ~mask):
                return k
    if top == g.n - 2:
        # every meaningful size failed to cut a non-complete graph:
        # unreachable, kept as a guard for the complete-graph convention
        return g.n - 1
    return None


def min_vertex_cut(g: Graph, *, cap: int = DEFAULT_ENUMERATION_CAP,
                   work_limit: int = DEFAULT_ENUMERATION_WORK):
    """A minimum vertex cut as a frozenset, deterministic (colex-first at
    small sizes, fixed flow scan order beyond). None for complete or
    disconnected graphs, which have no cut."""
    if not is_connected(g) or is_complete(g):
        return None
    k = vertex_connectivity(g, cap=cap, work_limit=work_limit)
    if k <= cap and subset_count(g.n, k) <= work_limit:
        bits = list(g.bits)
        full = (1 << g.n) - 1
        for sub in colex_subsets(range(g.n), k):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if not masked_is_connected(bits, full & ~mask):
                return frozenset(sub)
    best = None
    for s in g.vertices():
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            cut = _vertex_cut_between(g, s, t)
            if best is None or len(cut) < len(best):
                best = cut
                if len(best) == k:
                    return frozenset(best)
    return frozenset(best) if best is not None else None


def edge_connectivity(g: Graph, *, cap: int = DEFAULT_ENUMERATION_CAP,
                      work_limit: int = DEFAULT_ENUMERATION_WORK) -> int:
    """lambda(G): smallest number of edges whose removal disconnects G.
    Satisfies kappa <= lambda <= min degree; 0 when g is disconnected."""
    if g._lambda is not None:
        return g._lambda
    if not is_connected(g):
        lam = 0
    else:
        lam = _lambda_by_enumeration(g, cap, work_limit)
        if lam is None:
            lam = _lambda_by_flow(g)
    g._lambda = lam
    return lam


def _lambda_by_enumeration(g: Graph, cap: int, work_limit: int):
    delta = minimum_degree(g)
    bits = list(g.bits)
    full = (1 << g.n) - 1
    top = min(cap, delta - 1)
    for k in range(1, top + 1):
        if subset_count(g.edge_count, k) > work_limit:
            return None
        for sub in colex_subsets(g.edges, k):
            if not masked_is_connected(bits_without_edges(bits, sub), full):
                return k
    if top == delta - 1:
        return delta
    return None


def min_edge_cut(g: Graph, *, cap: int = DEFAULT_ENUMERATION_CAP,
                 work_limit: int = DEFAULT_ENUMERATION_WORK):
    """A minimum edge cut as a frozenset of canonical edges; None when g
    is disconnected."""
    if not is_connected(g):
        return None
    k = edge_connectivity(g, cap=cap, work_limit=work_limit)
    if k <= cap and subset_count(g.edge_count, k) <= work_limit:
        bits = list(g.bits)
        full = (1 << g.n) - 1
        for sub in colex_subsets(g.edges, k):
            if not masked_is_connected(bits_without_edges(bits, sub), full):
                return frozenset(sub)
    best = None
    for t in range(1, g.n):
        cut = _edge_cut_between(g, 0, t)
        if best is None or len(cut) < len(best):
            best = cut
            if len(best) == k:
                break
    return frozenset(best) if best is not None else None


# --- unit-capacity max-flow (Edmonds-Karp) ----------------------------


def _max_flow(capacity: dict, source: int, sink: int) -> int:
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, cap in capacity[u].items():
                if cap > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return flow
        # unit capacities dominate every augmenting path
        bottleneck = None
        v = sink
        while parent[v] is not None:
            u = parent[v]
            c = capacity[u][v]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = u
        v = sink
        while parent[v] is not None:
            u = parent[v]
            capacity[u][v] -= bottleneck
            capacity[v].setdefault(u, 0)
            capacity[v][u] += bottleneck
            v = u
        flow += bottleneck


def _vertex_flow_network(g: Graph, s: int, t: int) -> dict:
    # split v into in=2v, out=2v+1; unit cap through interior vertices
    big = g.n + 1
    capacity: dict[int, dict[int, int]] = {2 * v: {} for v in g.vertices()}
    capacity.update({2 * v + 1: {} for v in g.vertices()})
    for v in g.vertices():
        capacity[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for u, v in g.edges:
        capacity[2 * u + 1][2 * v] = big
        capacity[2 * v + 1][2 * u] = big
    return capacity


def _vertex_cut_between(g: Graph, s: int, t: int) -> set[int]:
    capacity = _vertex_flow_network(g, s, t)
    _max_flow(capacity, 2 * s + 1, 2 * t)
    reach = {2 * s + 1}
    queue = deque([2 * s + 1])
    while queue:
        u = queue.popleft()
        for v, cap in capacity[u].items():
            if cap > 0 and v not in reach:
                reach.add(v)
                queue.append(v)
    return {v for v in g.vertices() if 2 * v in reach and 2 * v + 1 not in reach}


def _kappa_by_flow(g: Graph) -> int:
    best = g.n - 1
    for s in g.vertices():
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            capacity = _vertex_flow_network(g, s, t)
            best = min(best, _max_flow(capacity, 2 * s + 1, 2 * t))
    return best


def _edge_flow_network(g: Graph) -> dict:
    capacity: dict[int, dict[int, int]] = {v: {} for v in g.vertices()}
    for u, v in g.edges:
        capacity[u][v] = 1
        capacity[v][u] = 1
    return capacity


def _lambda_by_flow(g: Graph) -> int:
    best = None
    for t in range(1, g.n):
        value = _max_flow(_edge_flow_network(g), 0, t)
        if best is None or value < best:
            best = value
    return best


def _edge_cut_between(g: Graph, s: int, t: int) -> set[tuple[int, int]]:
    capacity = _edge_flow_network(g)
    _max_flow(capacity, s, t)
    reach = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v, cap in capacity[u].items():
            if cap > 0 and v not in reach:
                reach.add(v)
                queue.append(v)
    return {
        canonical_edge(u, v)
        for u, v in g.edges
        if (u in reach) != (v in reach)
    }


# ---------------------------------------------------------------------
# mixed connectivity
# ---------------------------------------------------------------------


def is_mixed_connected(g: Graph, p: int, q: int, *,
                       budget: int = DEFAULT_BUDGET) -> bool:
    """True iff g stays connected after removal of ANY p vertices and ANY
    q edges (both exact counts, edges may touch removed vertices).

    Ground truth is exhaustive enumeration. The conditions p < kappa and
    p+q < lambda are necessary but not sufficient, so they only
    short-circuit False.
    """
    if g.n == 1:
        raise ValueError("mixed connectivity of K1 is not defined")
    if p < 0 or q < 0:
        raise ValueError("fault counts must be non-negative")
    if not is_connected(g):
        return False
    if p == 0 and q == 0:
        return True
    if p >= vertex_connectivity(g):
        return False
    if p + q >= edge_connectivity(g):
        return False
    return find_mixed_disconnecting_pair(g, p, q, budget=budget) is None


def find_mixed_disconnecting_pair(g: Graph, p: int, q: int, *,
                                  budget: int = DEFAULT_BUDGET):
    """First (colex) pair of a p-vertex set and q-edge set whose removal
    disconnects g, or None. Exhaustive scan, budget-guarded."""
    check_budget(subset_count(g.n, p) * subset_count(g.edge_count, q), budget)
    bits = list(g.bits)
    full = (1 << g.n) - 1
    for x, y in colex_pairs(range(g.n), g.edges, p, q):
        mask = 0
        for v in x:
            mask |= 1 << v
        b = bits_without_edges(bits, y) if y else bits
        if not masked_is_connected(b, full & ~mask):
            return frozenset(x), frozenset(y)
    return None


def is_connectivity_pair(g: Graph, k: int, l: int, *,
                         budget: int = DEFAULT_BUDGET) -> bool:
    """(k, l) is a connectivity pair: some k vertices plus l edges
    disconnect g, but no smaller profile does. Decided as: g is
    (k, l-1)+connected (for l = 0, (k-1, l)+connected instead) and g is
    not (k, l)+connected."""
    if k < 0 or l < 0:
        raise ValueError("connectivity pair entries must be non-negative")
    if l == 0:
        if k == 0:
            return not is_connected(g)
        minimal = is_mixed_connected(g, k - 1, 0, budget=budget)
    else:
        minimal = is_mixed_connected(g, k, l - 1, budget=budget)
    return minimal and not is_mixed_connected(g, k, l, budget=budget)


# ---------------------------------------------------------------------
# named generators
# ---------------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_minus_edge(n: int) -> Graph:
    if n < 2:
        raise ValueError("K_n minus an edge needs at least 2 vertices")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, 1)]
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path graph needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("hypercube dimension must be non-negative")
    n = 1 << d
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    return Graph(n, edges)


def circulant(n: int, steps) -> Graph:
    if n < 3:
        raise ValueError("a circulant graph needs at least 3 vertices")
    steps = list(steps)
    if not steps:
        raise ValueError("circulant step list must be nonempty")
    if len(set(steps)) != len(steps):
        raise ValueError("circulant steps must be distinct")
    for s in steps:
        if not 1 <= s <= n // 2:
            raise ValueError(f"circulant step {s} out of range 1..{n // 2}")
    return Graph(n, [(v, (v + s) % n) for v in range(n) for s in steps])


_GENERATORS = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_minus_edge": (complete_minus_edge, 1),
    "path": (path_graph, 1),
    "hypercube": (hypercube, 1),
    "circulant": (circulant, None),
}


def generate(name: str, params) -> Graph:
    """Named generator dispatch: cycle, complete, complete_minus_edge,
    path, hypercube take one int; circulant takes n plus the steps."""
    if name not in _GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    fn, arity = _GENERATORS[name]
    params = list(params)
    if arity == 1:
        if len(params) != 1:
            raise ValueError(f"{name} takes exactly one parameter")
        return fn(params[0])
    if len(params) < 2:
        raise ValueError("circulant takes n followed by at least one step")
    return fn(params[0], params[1:])


# ---------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the "n <count>" + one "u v" per line format. Rejects
    self-loops, duplicates, out-of-range ids, and junk, with the
    offending line number."""
    lines = text.splitlines()
    header = None
    header_line = 0
    for i, raw in enumerate(lines, start=1):
        if raw.strip():
            header = raw.strip()
            header_line = i
            break
    if header is None:
        raise EdgeListFormatError(1, "missing 'n <count>' header")
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise EdgeListFormatError(header_line, "expected header 'n <count>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise EdgeListFormatError(header_line, f"bad vertex count {parts[1]!r}")
    if n < 0:
        raise EdgeListFormatError(header_line, "vertex count must be >= 0")
    edges = []
    seen = set()
    for i in range(header_line, len(lines)):
        raw = lines[i]
        lineno = i + 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListFormatError(lineno, f"expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(lineno, f"non-integer endpoint in {raw.strip()!r}")
        if u == v:
            raise EdgeListFormatError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(lineno, f"edge ({u}, {v}) out of range for n={n}")
        e = canonical_edge(u, v)
        if e in seen:
            raise EdgeListFormatError(lineno, f"duplicate edge ({u}, {v})")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)
