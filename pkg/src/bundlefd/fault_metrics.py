"""Exact vertex, edge, and mixed fault diameters by exhaustive fault-set
enumeration, with deterministic witnesses.

The value of an a-vertex (a-edge) fault diameter is the worst diameter
over all deletions of exactly a vertices (edges); the mixed variant
deletes exactly p vertices and q edges simultaneously. Values are
INFINITE as soon as the corresponding connectivity runs out; that case is
detected from the connectivity preconditions up front instead of by full
enumeration.

Determinism: fault subsets are scanned in colexicographic order and the
witness is the first subset attaining the maximum. Enumeration may stop
at the first disconnected subgraph, because INFINITE dominates the max
and the first one found in scan order is exactly the colex-first witness.
The scan itself is data-parallel over chunks with a commutative max
reduction (`workers`); the merged result is identical to the serial scan.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bitgraph import (
    INFINITE,
    bits_without_edges,
    build_union_table,
    eccentricity,
    patched_rows_for_edges,
    reachable_set,
    table_diameter,
)
from ._enum import (
    DEFAULT_BUDGET,
    check_budget,
    colex_pairs,
    colex_subsets,
    max_reduce,
    subset_count,
)
from .graphs import (
    FaultSet,
    Graph,
    delete_elements,
    diameter,
    edge_connectivity,
    is_connected,
    min_edge_cut,
    min_vertex_cut,
    vertex_connectivity,
)


@dataclass(frozen=True)
class FaultDiameterResult:
    """Fault-diameter value plus a recheckable witness.

    `witness` has exactly the requested fault cardinalities and satisfies
    diameter(delete_elements(g, witness)) == value; `witness_pair` is a
    vertex pair (original ids) realizing the value in that worst
    subgraph. Both are None only in the degenerate regime where no fault
    set of the requested size exists at all.
    """

    value: float
    witness: FaultSet | None
    witness_pair: tuple[int, int] | None


def _eval_pair(payload, item):
    bits, table, full = payload
    xs, ys = item
    mask = 0
    for v in xs:
        mask |= 1 << v
    if ys:
        pmask, rows = patched_rows_for_edges(bits, ys)
        return table_diameter(table, full & ~mask, pmask, rows)
    return table_diameter(table, full & ~mask)


def _enum_payload(g: Graph):
    bits = list(g.bits)
    return (bits, build_union_table(bits), (1 << g.n) - 1)


def _worst_pair(g: Graph, faults: FaultSet, value):
    """First (ascending) vertex pair realizing `value` in g minus faults."""
    bits = bits_without_edges(list(g.bits), faults.sorted_edges())
    alive = 0
    for v in g.vertices():
        if v not in faults.vertex_faults:
            alive |= 1 << v
    for u in g.vertices():
        if not (alive >> u) & 1:
            continue
        if value == INFINITE:
            reached = reachable_set(bits, alive, u)
            if reached != alive:
                missing = alive & ~reached
                v = (missing & -missing).bit_length() - 1
                return (u, v) if u < v else (v, u)
        else:
            ecc, _ = eccentricity(bits, alive, u)
            if ecc == value:
                seen = 1 << u
                frontier = seen
                for _ in range(value):
                    nxt = 0
                    f = frontier
                    while f:
                        w = (f & -f).bit_length() - 1
                        f &= f - 1
                        nxt |= bits[w]
                    frontier = nxt & alive & ~seen
                    seen |= frontier
                v = (frontier & -frontier).bit_length() - 1
                return (u, v) if u < v else (v, u)
    raise AssertionError("witness does not reproduce the claimed value")


def _two_component_reps(g: Graph, removed_vertices, removed_edges):
    """Smallest-id representatives of two different components after the
    removal; None if fewer than two components remain."""
    bits = bits_without_edges(list(g.bits), removed_edges)
    alive = 0
    for v in g.vertices():
        if v not in removed_vertices:
            alive |= 1 << v
    if alive == 0:
        return None
    first = (alive & -alive).bit_length() - 1
    reached = reachable_set(bits, alive, first)
    rest = alive & ~reached
    if not rest:
        return None
    return first, (rest & -rest).bit_length() - 1


def _pad_vertices(g: Graph, core, keep, count: int):
    """`core` extended to `count` vertices by ascending ids outside `keep`."""
    out = list(core)
    for v in g.vertices():
        if len(out) >= count:
            break
        if v not in core and v not in keep:
            out.append(v)
    if len(out) < count:
        raise AssertionError("cannot pad vertex witness")
    return frozenset(out)


def _pad_edges(g: Graph, core, count: int):
    out = list(core)
    for e in g.edges:
        if len(out) >= count:
            break
        if e not in core:
            out.append(e)
    if len(out) < count:
        raise AssertionError("cannot pad edge witness")
    return frozenset(out)


def _infinite_vertex_witness(g: Graph, a: int):
    """Fault set of exactly a vertices leaving g disconnected, plus a
    separated pair; exists whenever a <= n - 2 (otherwise the caller is in
    the no-meaningful-subgraph regime)."""
    if is_connected(g):
        cut = min_vertex_cut(g)
        reps = _two_component_reps(g, cut, ())
        core = set(cut)
    else:
        reps = _two_component_reps(g, set(), ())
        core = set()
    u, v = reps
    witness = FaultSet(vertex_faults=_pad_vertices(g, core, {u, v}, a))
    return witness, (u, v)


def _infinite_edge_witness(g: Graph, a: int):
    if is_connected(g):
        cut = min_edge_cut(g)
        reps = _two_component_reps(g, set(), cut)
        core = set(cut)
    else:
        reps = _two_component_reps(g, set(), ())
        core = set()
    witness = FaultSet(edge_faults=_pad_edges(g, core, a))
    return witness, reps


def vertex_fault_diameter(g: Graph, a: int, *, budget: int = DEFAULT_BUDGET,
                          workers: int = 1) -> FaultDiameterResult:
    """Worst diameter over deletion of any a vertices; INFINITE once a
    reaches the vertex connectivity (or leaves fewer than 2 vertices)."""
    if a < 0:
        raise ValueError("fault count must be non-negative")
    if a > g.n:
        return FaultDiameterResult(INFINITE, None, None)
    if a > g.n - 2:
        witness = FaultSet(vertex_faults=frozenset(range(a)))
        return FaultDiameterResult(INFINITE, witness, None)
    if a >= vertex_connectivity(g):
        witness, pair = _infinite_vertex_witness(g, a)
        return FaultDiameterResult(INFINITE, witness, pair)
    check_budget(subset_count(g.n, a), budget)
    payload = _enum_payload(g)
    items = ((x, ()) for x in colex_subsets(range(g.n), a))
    value, item = max_reduce(_eval_pair, payload, items, workers=workers)
    witness = FaultSet(vertex_faults=frozenset(item[0]))
    return FaultDiameterResult(value, witness, _worst_pair(g, witness, value))


def edge_fault_diameter(g: Graph, a: int, *, budget: int = DEFAULT_BUDGET,
                        workers: int = 1) -> FaultDiameterResult:
    """Worst diameter over deletion of any a edges; INFINITE once a
    reaches the edge connectivity."""
    if a < 0:
        raise ValueError("fault count must be non-negative")
    if a > g.edge_count:
        return FaultDiameterResult(INFINITE, None, None)
    if a >= edge_connectivity(g):
        witness, pair = _infinite_edge_witness(g, a)
        return FaultDiameterResult(INFINITE, witness, pair)
    check_budget(subset_count(g.edge_count, a), budget)
    payload = _enum_payload(g)
    items = (((), y) for y in colex_subsets(g.edges, a))
    value, item = max_reduce(_eval_pair, payload, items, workers=workers)
    witness = FaultSet(edge_faults=frozenset(item[1]))
    return FaultDiameterResult(value, witness, _worst_pair(g, witness, value))


def mixed_fault_diameter(g: Graph, p: int, q: int, *,
                         budget: int = DEFAULT_BUDGET,
                         workers: int = 1) -> FaultDiameterResult:
    """Worst diameter over deletion of any p vertices and q edges
    simultaneously. Deleted edges may share endpoints with deleted
    vertices (such pairs never raise the maximum, so allowing them is
    harmless). INFINITE exactly when g is not (p, q)+connected."""
    if p < 0 or q < 0:
        raise ValueError("fault counts must be non-negative")
    if p == 0 and q == 0:
        d = diameter(g)
        return FaultDiameterResult(
            d, FaultSet(), _worst_pair(g, FaultSet(), d) if g.n else None
        )
    if p > g.n or q > g.edge_count:
        return FaultDiameterResult(INFINITE, None, None)
    if p > g.n - 2:
        witness = FaultSet(
            vertex_faults=frozenset(range(p)),
            edge_faults=frozenset(g.edges[:q]),
        )
        return FaultDiameterResult(INFINITE, witness, None)
    if not is_connected(g) or p >= vertex_connectivity(g):
        # a connected graph has kappa >= 1, so p == 0 implies g was
        # already disconnected and the empty vertex set is a witness core
        if p == 0:
            pair = _two_component_reps(g, set(), ())
            vertex_part = frozenset()
        else:
            base, pair = _infinite_vertex_witness(g, p)
            vertex_part = base.vertex_faults
        witness = FaultSet(
            vertex_faults=vertex_part, edge_faults=_pad_edges(g, set(), q)
        )
        return FaultDiameterResult(INFINITE, witness, pair)
    if p + q >= edge_connectivity(g):
        from .graphs import find_mixed_disconnecting_pair

        found = find_mixed_disconnecting_pair(g, p, q, budget=budget)
        if found is None:
            raise AssertionError(
                "p+q >= edge connectivity but no disconnecting pair found"
            )
        witness = FaultSet(vertex_faults=found[0], edge_faults=found[1])
        return FaultDiameterResult(
            INFINITE, witness, _worst_pair(g, witness, INFINITE)
        )
    check_budget(subset_count(g.n, p) * subset_count(g.edge_count, q), budget)
    payload = _enum_payload(g)
    items = colex_pairs(range(g.n), g.edges, p, q)
    value, item = max_reduce(
        _eval_pair, payload, items, workers=workers, stop_at=INFINITE
    )
    witness = FaultSet(
        vertex_faults=frozenset(item[0]), edge_faults=frozenset(item[1])
    )
    return FaultDiameterResult(value, witness, _worst_pair(g, witness, value))


def two_stage_decomposition_check(g: Graph, a: int, b: int, *,
                                  budget: int = DEFAULT_BUDGET) -> bool:
    """Check both two-stage identities against the joint enumeration:

    * max of b-edge fault diameters over all a-vertex-deleted subgraphs
      equals the (a, b)-mixed fault diameter, and
    * max of a-vertex fault diameters over all b-edge-deleted subgraphs
      equals it too.

    The identities also hold when g is not (a, b)+connected (all three
    quantities become INFINITE), so no connectivity is required; a and b
    just have to be realizable set sizes.
    """
    if not 0 <= a <= g.n:
        raise ValueError(f"no {a}-vertex subsets in a graph on {g.n} vertices")
    if not 0 <= b <= g.edge_count:
        raise ValueError(f"no {b}-edge subsets in a graph with {g.edge_count} edges")
    check_budget(3 * subset_count(g.n, a) * subset_count(g.edge_count, b), budget)
    joint = mixed_fault_diameter(g, a, b, budget=budget).value

    stage_v = -1
    for x in colex_subsets(range(g.n), a):
        h = delete_elements(g, FaultSet(vertex_faults=frozenset(x)))
        stage_v = max(stage_v, edge_fault_diameter(h, b, budget=budget).value)

    stage_e = -1
    for y in colex_subsets(g.edges, b):
        h = delete_elements(g, FaultSet(edge_faults=frozenset(y)))
        stage_e = max(stage_e, vertex_fault_diameter(h, a, budget=budget).value)

    return stage_v == joint == stage_e
