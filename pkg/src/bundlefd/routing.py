"""Fault-avoiding routing on Cartesian graph bundles.

The two main bound theorems have constructive proofs; this module runs
those constructions as routing algorithms. Given the fault set, a source
and target, and bound certificates for the factor graphs, each router
returns a fault-avoiding path whose length is within the theorem bound,
together with a trace of the proof branch that produced it.

Branch vocabulary (shared by both routers):

* SAME_FIBRE_FEW_FAULTS    source and target share a fibre that has at
                           most `a` faults: route inside it.
* SAME_FIBRE_MANY_FAULTS   shared fibre too faulty: detour through a
                           clean neighboring fibre.
* XB_LARGE_LIFT_HITS_TARGET distinct fibres, enough faulty material
                           projects outside, and the lift of the chosen
                           base path ends exactly at the target
                           (subcases lift-clean / lift-shifted).
* XB_LARGE_LIFT_MISSES     the lift lands off the target; subcases
                           fibre-saturated, lift-avoids, mixed-subpath,
                           adjacent-endpoint.
* XB_SMALL                 little faulty material projects between the
                           endpoint fibres: detour through the second
                           vertex of a protected base path (subcases
                           nonadjacent-base / adjacent-base for vertex
                           faults, fibre-light / clean-neighbor-fibre for
                           edge faults).

Choices the proofs leave open are pinned for determinism: "an arbitrary
subset" is the colexicographically first one, "there exists a neighbor"
scans ascending ids and takes the first valid one, and sub-path searches
are BFS shortest paths. Every returned path is re-validated against the
fault set and the bound before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ._enum import DEFAULT_BUDGET
from .bundles import Bundle, invert_permutation, lift_path, transport
from .fault_metrics import mixed_fault_diameter, vertex_fault_diameter, \
    edge_fault_diameter
from .graphs import (
    FaultSet,
    PathSeq,
    canonical_edge,
    edge_connectivity,
    shortest_path,
    vertex_connectivity,
)


class HypothesesUnmetError(RuntimeError):
    """The theorem hypotheses do not hold, so the proof construction is
    refused; callers should fall back to `shortest_path_oracle`."""


class NoPathError(RuntimeError):
    """The faulted graph has no path between the endpoints at all."""


class RoutingDefectError(RuntimeError):
    """A proof-guaranteed step failed; indicates a bug, not a bad input."""


class Branch(str, Enum):
    SAME_FIBRE_FEW_FAULTS = "SAME_FIBRE_FEW_FAULTS"
    SAME_FIBRE_MANY_FAULTS = "SAME_FIBRE_MANY_FAULTS"
    XB_LARGE_LIFT_HITS_TARGET = "XB_LARGE_LIFT_HITS_TARGET"
    XB_LARGE_LIFT_MISSES = "XB_LARGE_LIFT_MISSES"
    XB_SMALL = "XB_SMALL"


@dataclass
class CaseTrace:
    """Which proof branch produced the route, with enough parameters to
    re-check the branch preconditions: the faulty base vertices (vertex
    theorem) or the degenerate/nondegenerate fault split (edge theorem),
    the chosen base path, the excluded set the branch carved out, and the
    pivotal vertex (total id for lift shifts, base id for fibre detours).
    """

    theorem: str
    branch: Branch
    subcase: str | None = None
    base_faulty: tuple = ()
    degenerate: tuple = ()
    nondegenerate: tuple = ()
    base_path: PathSeq | None = None
    chosen: int | None = None
    excluded: tuple = ()


@dataclass(frozen=True)
class VertexRouteCerts:
    """Fault-diameter certificates feeding the vertex router: the a- and
    b-vertex fault diameters of fibre and base, and their (a-1, 1) and
    (b-1, 1) mixed fault diameters."""

    fibre_vertex_fd: float
    base_vertex_fd: float
    fibre_mixed_fd: float
    base_mixed_fd: float


@dataclass(frozen=True)
class EdgeRouteCerts:
    """Edge-fault-diameter certificates for the edge router."""

    fibre_edge_fd: float
    base_edge_fd: float


def vertex_route_certificates(b: Bundle, a: int, bb: int, *,
                              budget: int = DEFAULT_BUDGET) -> VertexRouteCerts:
    return VertexRouteCerts(
        fibre_vertex_fd=vertex_fault_diameter(b.fibre, a, budget=budget).value,
        base_vertex_fd=vertex_fault_diameter(b.base, bb, budget=budget).value,
        fibre_mixed_fd=mixed_fault_diameter(b.fibre, a - 1, 1, budget=budget).value,
        base_mixed_fd=mixed_fault_diameter(b.base, bb - 1, 1, budget=budget).value,
    )


def edge_route_certificates(b: Bundle, a: int, bb: int, *,
                            budget: int = DEFAULT_BUDGET) -> EdgeRouteCerts:
    return EdgeRouteCerts(
        fibre_edge_fd=edge_fault_diameter(b.fibre, a, budget=budget).value,
        base_edge_fd=edge_fault_diameter(b.base, bb, budget=budget).value,
    )


def shortest_path_oracle(b: Bundle, faults: FaultSet, x: int, y: int) -> PathSeq:
    """Exact shortest fault-avoiding path in the total graph (BFS); the
    lower-bound oracle the routers are measured against."""
    faults.validate_in(b.total)
    for v in (x, y):
        if not b.total.has_vertex(v):
            raise ValueError(f"unknown total vertex {v}")
        if v in faults.vertex_faults:
            raise ValueError(f"endpoint {v} is itself faulty")
    path = shortest_path(
        b.total, x, y,
        forbidden_vertices=faults.vertex_faults,
        forbidden_edges=faults.edge_faults,
    )
    if path is None:
        raise NoPathError(f"no fault-avoiding path from {x} to {y}")
    return path


# --- shared helpers -----------------------------------------------------


def _finish(b: Bundle, faults: FaultSet, x: int, y: int, ids, bound,
            trace: CaseTrace):
    """Post-hoc defense: the proof steps above are trusted to be correct,
    but the assembled path is still re-validated in full."""
    try:
        path = PathSeq(tuple(ids))
        path.validate(b.total)
    except ValueError as exc:
        raise RoutingDefectError(f"assembled route is not a path: {exc}")
    if path.endpoints != (x, y):
        raise RoutingDefectError("assembled route has wrong endpoints")
    if not path.avoids(faults):
        raise RoutingDefectError("assembled route touches a fault")
    if path.length > bound:
        raise RoutingDefectError(
            f"route length {path.length} exceeds the bound {bound}"
        )
    return path, trace


def _fibre_ids(b: Bundle, base_vertex: int, coords) -> list[int]:
    return [b.vertex_id(base_vertex, f) for f in coords]


def _fibre_route(b: Bundle, base_vertex: int, f_from: int, f_to: int,
                 forbidden_coords=(), forbidden_edges=()):
    """Shortest path between fibre coordinates, as total-graph ids over
    the given base vertex; None when blocked."""
    p = shortest_path(b.fibre, f_from, f_to,
                      forbidden_vertices=forbidden_coords,
                      forbidden_edges=forbidden_edges)
    if p is None:
        return None
    return _fibre_ids(b, base_vertex, p.vertices)


def _require(value, message: str):
    if value is None:
        raise RoutingDefectError(message)
    return value


# --- vertex-fault router -------------------------------------------------


def route_vertex_faults(b: Bundle, faults: FaultSet, x: int, y: int,
                        a: int, bb: int,
                        certs: VertexRouteCerts) -> tuple[PathSeq, CaseTrace]:
    """Route x -> y around a+b+1 vertex faults within the improved bound
    D^V_a(F) + D^V_b(B), following the constructive proof case by case."""
    if a <= 0 or bb <= 0:
        raise ValueError("the vertex routing construction needs a > 0 and b > 0")
    if faults.edge_faults:
        raise ValueError("vertex routing takes a vertex-only fault set")
    faults.validate_in(b.total)
    X = faults.vertex_faults
    if len(X) != a + bb + 1:
        raise ValueError(f"expected exactly {a + bb + 1} faulty vertices, got {len(X)}")
    if x == y:
        raise ValueError("source and target must differ")
    if x in X or y in X:
        raise ValueError("source and target must be fault-free")

    failures = []
    if vertex_connectivity(b.fibre) < a + 1:
        failures.append(f"fibre is not {a + 1}-connected")
    if vertex_connectivity(b.base) < bb + 1:
        failures.append(f"base is not {bb + 1}-connected")
    if certs.fibre_mixed_fd > certs.fibre_vertex_fd:
        failures.append("fibre mixed fault diameter exceeds its vertex fault diameter")
    if certs.base_mixed_fd > certs.base_vertex_fd:
        failures.append("base mixed fault diameter exceeds its vertex fault diameter")
    if failures:
        raise HypothesesUnmetError("; ".join(failures))

    bound = certs.fibre_vertex_fd + certs.base_vertex_fd
    px, xf = b.coords(x)
    py, yf = b.coords(y)
    by_fibre: dict[int, set[int]] = {}
    for v in X:
        bv, fv = b.coords(v)
        by_fibre.setdefault(bv, set()).add(fv)

    if px == py:
        local = by_fibre.get(px, set())
        if len(local) <= a:
            ids = _require(
                _fibre_route(b, px, xf, yf, forbidden_coords=local),
                "fibre with <= a faults lost connectivity",
            )
            trace = CaseTrace("VFD", Branch.SAME_FIBRE_FEW_FAULTS,
                              base_faulty=tuple(sorted(by_fibre)))
            return _finish(b, faults, x, y, ids, bound, trace)
        # more than a faults inside: at most b remain outside, and the
        # base has at least b+1 neighbors, so a clean fibre exists
        v_base = next(
            (v for v in b.base.adj[px] if not by_fibre.get(v)), None
        )
        v_base = _require(v_base, "no clean neighboring fibre found")
        tw = b.twist(px, v_base)
        inner = _require(
            _fibre_route(b, v_base, tw[xf], tw[yf]),
            "clean fibre lost connectivity",
        )
        trace = CaseTrace("VFD", Branch.SAME_FIBRE_MANY_FAULTS,
                          base_faulty=tuple(sorted(by_fibre)), chosen=v_base)
        return _finish(b, faults, x, y, [x, *inner, y], bound, trace)

    x_base = tuple(sorted(v for v in by_fibre if v not in (px, py)))

    if len(x_base) >= bb:
        return _vfd_outside_heavy(b, faults, x, y, a, bb, bound,
                                  by_fibre, x_base)
    return _vfd_outside_light(b, faults, x, y, bound, by_fibre, x_base)


def _vfd_outside_heavy(b, faults, x, y, a, bb, bound, by_fibre, x_base):
    """|X_B| >= b: protect a b-subset of faulty base vertices, lift a base
    path, and repair inside the endpoint fibres if the lift is blocked."""
    X = faults.vertex_faults
    px, xf = b.coords(x)
    py, yf = b.coords(y)
    excluded = x_base[:bb]
    q = _require(
        shortest_path(b.base, px, py, forbidden_vertices=excluded),
        "base minus b vertices lost connectivity",
    )
    iso = transport(b, q.vertices)
    iso_inv = invert_permutation(iso)
    x_land = iso[xf]

    if x_land == yf:
        lift = lift_path(b, q, x)
        if lift.avoids(faults):
            trace = CaseTrace("VFD", Branch.XB_LARGE_LIFT_HITS_TARGET,
                              subcase="lift-clean",
                              base_faulty=x_base, base_path=q,
                              excluded=excluded)
            return _finish(b, faults, x, y, lift.vertices, bound, trace)
        for vf in b.fibre.adj[xf]:
            v_total = b.vertex_id(px, vf)
            lift_v = lift_path(b, q, v_total)
            if lift_v.avoids(faults):
                ids = [x, *lift_v.vertices, y]
                trace = CaseTrace("VFD", Branch.XB_LARGE_LIFT_HITS_TARGET,
                                  subcase="lift-shifted",
                                  base_faulty=x_base, base_path=q,
                                  chosen=v_total, excluded=excluded)
                return _finish(b, faults, x, y, ids, bound, trace)
        raise RoutingDefectError("no clean shifted lift although <= a blockers")

    fx_faults = by_fibre.get(px, set())
    fy_faults = by_fibre.get(py, set())

    if len(fx_faults) == a + 1 or len(fy_faults) == a + 1:
        # all faults over the base path sit in one endpoint fibre, so the
        # other endpoint fibre is clean and a walk there stays within the
        # plain fibre diameter; try lifting first (target fibre last) and
        # fall back to walking first when that order busts the bound
        trace = CaseTrace("VFD", Branch.XB_LARGE_LIFT_MISSES,
                          subcase="fibre-saturated", base_faulty=x_base,
                          base_path=q, excluded=excluded)
        lift = lift_path(b, q, x)
        if lift.avoids(faults):
            tail = _fibre_route(b, py, x_land, yf, forbidden_coords=fy_faults)
            if tail is not None and q.length + len(tail) - 1 <= bound:
                ids = [*lift.vertices, *tail[1:]]
                return _finish(b, faults, x, y, ids, bound, trace)
        wf = iso_inv[yf]
        head = _require(
            _fibre_route(b, px, xf, wf, forbidden_coords=fx_faults),
            "saturated-fibre fallback blocked in the source fibre",
        )
        lift_w = lift_path(b, q, b.vertex_id(px, wf))
        if not lift_w.avoids(faults):
            raise RoutingDefectError("saturated-fibre fallback lift is dirty")
        ids = [*head, *lift_w.vertices[1:]]
        return _finish(b, faults, x, y, ids, bound, trace)

    lift_x = lift_path(b, q, x)
    if lift_x.avoids(faults):
        tail = _require(
            _fibre_route(b, py, x_land, yf, forbidden_coords=fy_faults),
            "target fibre with <= a faults lost connectivity",
        )
        ids = [*lift_x.vertices, *tail[1:]]
        trace = CaseTrace("VFD", Branch.XB_LARGE_LIFT_MISSES,
                          subcase="lift-avoids", base_faulty=x_base,
                          base_path=q, excluded=excluded)
        return _finish(b, faults, x, y, ids, bound, trace)
    y_start = b.vertex_id(px, iso_inv[yf])
    lift_y = lift_path(b, q, y_start)
    if lift_y.avoids(faults):
        head = _require(
            _fibre_route(b, px, xf, iso_inv[yf], forbidden_coords=fx_faults),
            "source fibre with <= a faults lost connectivity",
        )
        ids = [*head, *lift_y.vertices[1:]]
        trace = CaseTrace("VFD", Branch.XB_LARGE_LIFT_MISSES,
                          subcase="lift-avoids", base_faulty=x_base,
                          base_path=q, excluded=excluded)
        return _finish(b, faults, x, y, ids, bound, trace)

    # both endpoint lifts blocked: mark target-fibre vertices whose lifts
    # are dirty (at most a-1 of them) and walk around them
    marked = set()
    for f in b.fibre.vertices():
        landing = iso[f]
        if landing in (x_land, yf):
            continue
        if not lift_path(b, q, b.vertex_id(px, f)).avoids(faults):
            marked.add(landing)
    if len(marked) > a - 1:
        raise RoutingDefectError("more dirty lifts than the proof allows")
    adjacent = b.fibre.has_edge(x_land, yf)
    forbidden_edges = [(x_land, yf)] if adjacent else []
    p = shortest_path(b.fibre, x_land, yf, forbidden_vertices=marked,
                      forbidden_edges=forbidden_edges)
    p = _require(p, "target fibre minus marked vertices lost connectivity")
    if p.length < 2:
        raise RoutingDefectError("repair path is too short to shift the lift")
    v1f = p.vertices[1]
    v0f = invert_permutation(iso)[v1f]
    if not b.fibre.has_edge(v0f, xf):
        raise RoutingDefectError("repair neighbor does not project back to x")
    lift_v = lift_path(b, q, b.vertex_id(px, v0f))
    if not lift_v.avoids(faults):
        raise RoutingDefectError("repair lift is dirty despite being unmarked")
    ids = [x, *lift_v.vertices, *_fibre_ids(b, py, p.vertices[2:])]
    trace = CaseTrace("VFD", Branch.XB_LARGE_LIFT_MISSES,
                      subcase="adjacent-endpoint" if adjacent else "mixed-subpath",
                      base_faulty=x_base, base_path=q,
                      chosen=b.vertex_id(px, v0f),
                      excluded=tuple(sorted(marked)))
    return _finish(b, faults, x, y, ids, bound, trace)


def _vfd_outside_light(b, faults, x, y, bound, by_fibre, x_base):
    """|X_B| < b: every faulty middle fibre can be avoided in the base, so
    go through a clean neighboring fibre and lift the rest of the way."""
    px, xf = b.coords(x)
    py, yf = b.coords(y)
    adjacent = b.base.has_edge(px, py)
    q = _require(
        shortest_path(b.base, px, py, forbidden_vertices=x_base,
                      forbidden_edges=[(px, py)] if adjacent else []),
        "base minus X_B (and the direct edge) lost connectivity",
    )
    if q.length < 2:
        raise RoutingDefectError("protected base path is too short")
    v_base = q.vertices[1]
    if by_fibre.get(v_base):
        raise RoutingDefectError("protected base path enters a faulty fibre")
    rest = PathSeq(q.vertices[1:])
    x2f = b.twist(px, v_base)[xf]
    y2f = invert_permutation(transport(b, rest.vertices))[yf]
    inner = _require(
        _fibre_route(b, v_base, x2f, y2f),
        "clean neighboring fibre lost connectivity",
    )
    tail = lift_path(b, rest, b.vertex_id(v_base, y2f))
    if not tail.avoids(faults):
        raise RoutingDefectError("tail lift is dirty despite clean projection")
    ids = [x, *inner, *tail.vertices[1:]]
    trace = CaseTrace("VFD", Branch.XB_SMALL,
                      subcase="adjacent-base" if adjacent else "nonadjacent-base",
                      base_faulty=x_base, base_path=q, chosen=v_base)
    return _finish(b, faults, x, y, ids, bound, trace)


# --- edge-fault router ----------------------------------------------------


def _split_edge_faults(b: Bundle, edges):
    """Split total-graph edge faults into per-fibre degenerate coordinate
    edges and nondegenerate faults keyed by base edge."""
    degenerate: dict[int, set] = {}
    nondegenerate: dict[tuple[int, int], set] = {}
    for u, v in edges:
        bu, fu = b.coords(u)
        bv, fv = b.coords(v)
        if bu == bv:
            degenerate.setdefault(bu, set()).add(canonical_edge(fu, fv))
        else:
            nondegenerate.setdefault(canonical_edge(bu, bv), set()).add(
                canonical_edge(u, v)
            )
    return degenerate, nondegenerate


def route_edge_faults(b: Bundle, faults: FaultSet, x: int, y: int,
                      a: int, bb: int,
                      certs: EdgeRouteCerts) -> tuple[PathSeq, CaseTrace]:
    """Route x -> y around a+b+1 edge faults within the improved bound
    D^E_a(F) + D^E_b(B), following the constructive proof case by case."""
    if a < 0 or bb < 0:
        raise ValueError("fault counts must be non-negative")
    if faults.vertex_faults:
        raise ValueError("edge routing takes an edge-only fault set")
    faults.validate_in(b.total)
    Y = faults.edge_faults
    if len(Y) != a + bb + 1:
        raise ValueError(f"expected exactly {a + bb + 1} faulty edges, got {len(Y)}")
    if x == y:
        raise ValueError("source and target must differ")

    failures = []
    if edge_connectivity(b.fibre) < a + 1:
        failures.append(f"fibre is not {a + 1}-edge connected")
    if edge_connectivity(b.base) < bb + 1:
        failures.append(f"base is not {bb + 1}-edge connected")
    if certs.fibre_edge_fd < 2:
        failures.append("fibre edge fault diameter is below 2")
    if certs.base_edge_fd < 2:
        failures.append("base edge fault diameter is below 2")
    if failures:
        raise HypothesesUnmetError("; ".join(failures))

    bound = certs.fibre_edge_fd + certs.base_edge_fd
    degenerate, nondegenerate = _split_edge_faults(b, Y)
    deg_tuple = tuple(sorted(e for s in degenerate.values() for e in s))
    nondeg_tuple = tuple(sorted(e for s in nondegenerate.values() for e in s))
    n_nondeg = sum(len(s) for s in nondegenerate.values())
    px, xf = b.coords(x)
    py, yf = b.coords(y)

    if px == py:
        local = degenerate.get(px, set())
        if len(local) <= a:
            ids = _require(
                _fibre_route(b, px, xf, yf, forbidden_edges=local),
                "fibre with <= a edge faults lost connectivity",
            )
            trace = CaseTrace("EFD", Branch.SAME_FIBRE_FEW_FAULTS,
                              degenerate=deg_tuple, nondegenerate=nondeg_tuple)
            return _finish(b, faults, x, y, ids, bound, trace)
        v_base = next(
            (
                v
                for v in b.base.adj[px]
                if not degenerate.get(v)
                and not nondegenerate.get(canonical_edge(px, v))
            ),
            None,
        )
        v_base = _require(v_base, "no clean neighboring fibre for edge detour")
        tw = b.twist(px, v_base)
        inner = _require(
            _fibre_route(b, v_base, tw[xf], tw[yf]),
            "clean fibre lost connectivity",
        )
        trace = CaseTrace("EFD", Branch.SAME_FIBRE_MANY_FAULTS,
                          degenerate=deg_tuple, nondegenerate=nondeg_tuple,
                          chosen=v_base)
        return _finish(b, faults, x, y, [x, *inner, y], bound, trace)

    if n_nondeg >= bb:
        return _efd_nondeg_heavy(b, faults, x, y, a, bb, bound,
                                 degenerate, nondegenerate,
                                 deg_tuple, nondeg_tuple)
    return _efd_nondeg_light(b, faults, x, y, a, bb, bound,
                             degenerate, nondegenerate,
                             deg_tuple, nondeg_tuple)


def _efd_nondeg_heavy(b, faults, x, y, a, bb, bound, degenerate,
                      nondegenerate, deg_tuple, nondeg_tuple):
    """|Y_N| >= b: avoid the projections of b nondegenerate faults in the
    base, lift, and repair inside the target fibre if needed."""
    px, xf = b.coords(x)
    py, yf = b.coords(y)
    excluded = nondeg_tuple[:bb]
    base_excl = set()
    for u, v in excluded:
        bu = b.coords(u)[0]
        bv = b.coords(v)[0]
        base_excl.add(canonical_edge(bu, bv))
    q = _require(
        shortest_path(b.base, px, py, forbidden_edges=base_excl),
        "base minus b edges lost connectivity",
    )
    iso = transport(b, q.vertices)
    iso_inv = invert_permutation(iso)
    x_land = iso[xf]

    if x_land == yf:
        lift = lift_path(b, q, x)
        if lift.avoids(faults):
            trace = CaseTrace("EFD", Branch.XB_LARGE_LIFT_HITS_TARGET,
                              subcase="lift-clean", degenerate=deg_tuple,
                              nondegenerate=nondeg_tuple, base_path=q,
                              excluded=excluded)
            return _finish(b, faults, x, y, lift.vertices, bound, trace)
        for sf in b.fibre.adj[xf]:
            s_total = b.vertex_id(px, sf)
            if canonical_edge(x, s_total) in faults.edge_faults:
                continue
            lift_s = lift_path(b, q, s_total)
            if not lift_s.avoids(faults):
                continue
            s_land = lift_s.vertices[-1]
            if canonical_edge(s_land, y) in faults.edge_faults:
                continue
            ids = [x, *lift_s.vertices, y]
            trace = CaseTrace("EFD", Branch.XB_LARGE_LIFT_HITS_TARGET,
                              subcase="lift-shifted", degenerate=deg_tuple,
                              nondegenerate=nondeg_tuple, base_path=q,
                              chosen=s_total, excluded=excluded)
            return _finish(b, faults, x, y, ids, bound, trace)
        raise RoutingDefectError("no clean shifted lift although <= a blockers")

    fx = degenerate.get(px, set())
    fy = degenerate.get(py, set())

    if len(fx) == a + 1 or len(fy) == a + 1:
        # one endpoint fibre holds every fault over the base path; walk in
        # the clean one: lift-first unless that busts the bound
        trace = CaseTrace("EFD", Branch.XB_LARGE_LIFT_MISSES,
                          subcase="fibre-saturated", degenerate=deg_tuple,
                          nondegenerate=nondeg_tuple, base_path=q,
                          excluded=excluded)
        lift = lift_path(b, q, x)
        if lift.avoids(faults):
            tail = _fibre_route(b, py, x_land, yf, forbidden_edges=fy)
            if tail is not None and q.length + len(tail) - 1 <= bound:
                ids = [*lift.vertices, *tail[1:]]
                return _finish(b, faults, x, y, ids, bound, trace)
        wf = iso_inv[yf]
        head = _require(
            _fibre_route(b, px, xf, wf, forbidden_edges=fx),
            "saturated-fibre fallback blocked in the source fibre",
        )
        lift_w = lift_path(b, q, b.vertex_id(px, wf))
        if not lift_w.avoids(faults):
            raise RoutingDefectError("saturated-fibre fallback lift is dirty")
        ids = [*head, *lift_w.vertices[1:]]
        return _finish(b, faults, x, y, ids, bound, trace)

    lift_x = lift_path(b, q, x)
    if lift_x.avoids(faults):
        tail = _require(
            _fibre_route(b, py, x_land, yf, forbidden_edges=fy),
            "target fibre with <= a edge faults lost connectivity",
        )
        ids = [*lift_x.vertices, *tail[1:]]
        trace = CaseTrace("EFD", Branch.XB_LARGE_LIFT_MISSES,
                          subcase="lift-avoids", degenerate=deg_tuple,
                          nondegenerate=nondeg_tuple, base_path=q,
                          excluded=excluded)
        return _finish(b, faults, x, y, ids, bound, trace)
    lift_y = lift_path(b, q, b.vertex_id(px, iso_inv[yf]))
    if lift_y.avoids(faults):
        head = _require(
            _fibre_route(b, px, xf, iso_inv[yf], forbidden_edges=fx),
            "source fibre with <= a edge faults lost connectivity",
        )
        ids = [*head, *lift_y.vertices[1:]]
        trace = CaseTrace("EFD", Branch.XB_LARGE_LIFT_MISSES,
                          subcase="lift-avoids", degenerate=deg_tuple,
                          nondegenerate=nondeg_tuple, base_path=q,
                          excluded=excluded)
        return _finish(b, faults, x, y, ids, bound, trace)

    # both endpoint lifts dirty: block target-fibre edges at the landing
    # vertex whose shifted lift (or its first step in the source fibre)
    # is dirty, then walk around them
    blocked = set(fy)
    for v1f in b.fibre.adj[x_land]:
        v0f = iso_inv[v1f]
        v0_total = b.vertex_id(px, v0f)
        dirty = (
            canonical_edge(x, v0_total) in faults.edge_faults
            or not lift_path(b, q, v0_total).avoids(faults)
        )
        if dirty:
            blocked.add(canonical_edge(x_land, v1f))
    p = shortest_path(b.fibre, x_land, yf, forbidden_edges=blocked)
    p = _require(p, "target fibre minus blocked edges lost connectivity")
    if p.length < 2:
        raise RoutingDefectError("repair path is too short to shift the lift")
    v1f = p.vertices[1]
    v0f = iso_inv[v1f]
    lift_v = lift_path(b, q, b.vertex_id(px, v0f))
    if not lift_v.avoids(faults):
        raise RoutingDefectError("repair lift is dirty despite being unblocked")
    ids = [x, *lift_v.vertices, *_fibre_ids(b, py, p.vertices[2:])]
    adjacent = b.fibre.has_edge(x_land, yf)
    trace = CaseTrace("EFD", Branch.XB_LARGE_LIFT_MISSES,
                      subcase="adjacent-endpoint" if adjacent else "mixed-subpath",
                      degenerate=deg_tuple, nondegenerate=nondeg_tuple,
                      base_path=q, chosen=b.vertex_id(px, v0f),
                      excluded=tuple(sorted(blocked - set(fy))))
    return _finish(b, faults, x, y, ids, bound, trace)


def _efd_nondeg_light(b, faults, x, y, a, bb, bound, degenerate,
                      nondegenerate, deg_tuple, nondeg_tuple):
    """|Y_N| < b: a base path avoiding every nondegenerate projection
    exists, so any lift of it is clean; route through whichever endpoint
    fibre is light, or through a degenerate-fault-free neighbor fibre."""
    px, xf = b.coords(x)
    py, yf = b.coords(y)
    base_excl = set(nondegenerate)
    q = _require(
        shortest_path(b.base, px, py, forbidden_edges=base_excl),
        "base minus |Y_N| < b edges lost connectivity",
    )
    iso = transport(b, q.vertices)
    fx = degenerate.get(px, set())
    fy = degenerate.get(py, set())

    if len(fy) <= a:
        lift = lift_path(b, q, x)
        if not lift.avoids(faults):
            raise RoutingDefectError("lift over a protected base path is dirty")
        tail = _require(
            _fibre_route(b, py, iso[xf], yf, forbidden_edges=fy),
            "light target fibre lost connectivity",
        )
        ids = [*lift.vertices, *tail[1:]]
        trace = CaseTrace("EFD", Branch.XB_SMALL, subcase="fibre-light",
                          degenerate=deg_tuple, nondegenerate=nondeg_tuple,
                          base_path=q)
        return _finish(b, faults, x, y, ids, bound, trace)
    if len(fx) <= a:
        wf = invert_permutation(iso)[yf]
        head = _require(
            _fibre_route(b, px, xf, wf, forbidden_edges=fx),
            "light source fibre lost connectivity",
        )
        lift = lift_path(b, q, b.vertex_id(px, wf))
        if not lift.avoids(faults):
            raise RoutingDefectError("lift over a protected base path is dirty")
        ids = [*head, *lift.vertices[1:]]
        trace = CaseTrace("EFD", Branch.XB_SMALL, subcase="fibre-light",
                          degenerate=deg_tuple, nondegenerate=nondeg_tuple,
                          base_path=q)
        return _finish(b, faults, x, y, ids, bound, trace)

    # both endpoint fibres heavy: every other fibre holds at most b-1
    # degenerate faults in total, so exclude the base edges from px into
    # dirty fibres (including py) and detour through the clean second
    # vertex of the new base path
    extra = {
        canonical_edge(px, v)
        for v in b.base.adj[px]
        if degenerate.get(v)
    }
    q2 = _require(
        shortest_path(b.base, px, py, forbidden_edges=base_excl | extra),
        "base minus dirty-neighbor edges lost connectivity",
    )
    if q2.length < 2:
        raise RoutingDefectError("protected base path is too short")
    v_base = q2.vertices[1]
    if degenerate.get(v_base):
        raise RoutingDefectError("protected base path enters a dirty fibre")
    rest = PathSeq(q2.vertices[1:])
    x2f = b.twist(px, v_base)[xf]
    y2f = invert_permutation(transport(b, rest.vertices))[yf]
    inner = _require(
        _fibre_route(b, v_base, x2f, y2f),
        "clean neighboring fibre lost connectivity",
    )
    tail = lift_path(b, rest, b.vertex_id(v_base, y2f))
    if not tail.avoids(faults):
        raise RoutingDefectError("tail lift is dirty despite clean projection")
    ids = [x, *inner, *tail.vertices[1:]]
    trace = CaseTrace("EFD", Branch.XB_SMALL, subcase="clean-neighbor-fibre",
                      degenerate=deg_tuple, nondegenerate=nondeg_tuple,
                      base_path=q2, chosen=v_base,
                      excluded=tuple(sorted(extra)))
    return _finish(b, faults, x, y, ids, bound, trace)
