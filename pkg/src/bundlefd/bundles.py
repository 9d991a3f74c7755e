"""Cartesian products and Cartesian graph bundles.

A bundle over base B with fibre F is the total graph on pairs
(base coord, fibre coord) whose intra-fibre ("degenerate") edges copy F
inside every fibre and whose cross ("nondegenerate") edges over a base
edge u-v connect (u, f) to (v, phi(f)) for the twist automorphism phi
attached to that base edge. Identity twists everywhere give exactly the
Cartesian product.

Twists live on directed base edges with enforced inverse consistency:
supplying phi for (u, v) implies phi^-1 for (v, u). Total-graph vertex
ids are base-major: id = base_coord * |V(F)| + fibre_coord.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations

from .graphs import Graph, PathSeq, canonical_edge, cycle, parse_edge_list

# --- fibre permutations ------------------------------------------------


def identity_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def invert_permutation(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def compose_permutations(p, q) -> tuple[int, ...]:
    """Permutation applying p first, then q."""
    return tuple(q[image] for image in p)


def is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def is_automorphism(g: Graph, p) -> bool:
    """p preserves adjacency in both directions."""
    if not is_permutation(p, g.n):
        return False
    mapped = {canonical_edge(p[u], p[v]) for u, v in g.edges}
    return mapped == set(g.edges)


def graph_automorphisms(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms by brute force; meant for small fibres/bases."""
    if g.n > 9:
        raise ValueError("brute-force automorphism search capped at 9 vertices")
    degrees = tuple(g.degree(v) for v in g.vertices())
    out = []
    for p in _permutations(range(g.n)):
        if any(degrees[v] != degrees[p[v]] for v in g.vertices()):
            continue
        if all(g.has_edge(p[u], p[v]) for u, v in g.edges):
            out.append(p)
    return tuple(out)


def cycle_rotation(n: int, k: int) -> tuple[int, ...]:
    return tuple((j + k) % n for j in range(n))


def cycle_reflection(n: int, k: int) -> tuple[int, ...]:
    return tuple((k - j) % n for j in range(n))


def dihedral_automorphisms(n: int) -> tuple[tuple[str, tuple[int, ...]], ...]:
    """The 2n automorphisms of the n-cycle as (name, permutation) pairs,
    rotations first, then reflections."""
    rows = [(f"rot{k}", cycle_rotation(n, k)) for k in range(n)]
    rows += [(f"ref{k}", cycle_reflection(n, k)) for k in range(n)]
    return tuple(rows)


# --- bundles ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Bundle:
    """A bundle record: factors, the complete directed twist map, and the
    total graph. `build_bundle` constructs consistent instances; records
    can also be assembled by hand and checked with `validate_bundle`."""

    base: Graph
    fibre: Graph
    twists: dict
    total: Graph

    @property
    def n_base(self) -> int:
        return self.base.n

    @property
    def n_fibre(self) -> int:
        return self.fibre.n

    def vertex_id(self, base_coord: int, fibre_coord: int) -> int:
        if not (0 <= base_coord < self.base.n and 0 <= fibre_coord < self.fibre.n):
            raise ValueError(f"coordinates ({base_coord}, {fibre_coord}) out of range")
        return base_coord * self.fibre.n + fibre_coord

    def coords(self, vid: int) -> tuple[int, int]:
        if not 0 <= vid < self.base.n * self.fibre.n:
            raise ValueError(f"unknown total vertex {vid}")
        return divmod(vid, self.fibre.n)

    def twist(self, u: int, v: int) -> tuple[int, ...]:
        """Twist applied when stepping across base edge u -> v."""
        try:
            return self.twists[(u, v)]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not a directed base edge") from None


def normalize_twists(base: Graph, fibre: Graph, twists=None) -> dict:
    """Complete directed twist map from a partial specification.

    Keys are directed base edges; a missing direction gets the inverse, a
    missing edge gets the identity. Every supplied permutation must be an
    automorphism of the fibre, and supplying both directions requires
    them to be mutually inverse.
    """
    supplied = {}
    for (u, v), perm in (twists or {}).items():
        if not base.has_edge(u, v):
            raise ValueError(f"twist key ({u}, {v}) is not a base edge")
        perm = tuple(perm)
        if not is_automorphism(fibre, perm):
            raise ValueError(
                f"twist on base edge ({u}, {v}) is not a fibre automorphism: {perm}"
            )
        supplied[(u, v)] = perm
    complete = {}
    ident = identity_permutation(fibre.n)
    for u, v in base.edges:
        fwd = supplied.get((u, v))
        back = supplied.get((v, u))
        if fwd is not None and back is not None:
            if compose_permutations(fwd, back) != ident:
                raise ValueError(
                    f"twists on ({u}, {v}) and ({v}, {u}) are not mutually inverse"
                )
        elif fwd is not None:
            back = invert_permutation(fwd)
        elif back is not None:
            fwd = invert_permutation(back)
        else:
            fwd = back = ident
        complete[(u, v)] = fwd
        complete[(v, u)] = back
    return complete


def _total_edges(base: Graph, fibre: Graph, twists: dict):
    nf = fibre.n
    edges = []
    for u in base.vertices():
        off = u * nf
        for f, g in fibre.edges:
            edges.append((off + f, off + g))
    for u, v in base.edges:
        phi = twists[(u, v)]
        for f in fibre.vertices():
            edges.append((u * nf + f, v * nf + phi[f]))
    return edges


def build_bundle(base: Graph, fibre: Graph, twists=None) -> Bundle:
    """Construct the total graph from base, fibre and (partial) twists."""
    if base.n == 0 or fibre.n == 0:
        raise ValueError("base and fibre must be nonempty")
    complete = normalize_twists(base, fibre, twists)
    total = Graph(base.n * fibre.n, _total_edges(base, fibre, complete))
    return Bundle(base=base, fibre=fibre, twists=complete, total=total)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product graph: (u1, v1) ~ (u2, v2) iff one coordinate is
    equal and the other moves along an edge. Encoded g1-major."""
    if g1.n == 0 or g2.n == 0:
        raise ValueError("product factors must be nonempty")
    n2 = g2.n
    edges = []
    for u in g1.vertices():
        off = u * n2
        for a, b in g2.edges:
            edges.append((off + a, off + b))
    for u, v in g1.edges:
        for w in g2.vertices():
            edges.append((u * n2 + w, v * n2 + w))
    return Graph(g1.n * g2.n, edges)


def product_bundle(base: Graph, fibre: Graph) -> Bundle:
    """The product as an identity-twist bundle (total == cartesian_product)."""
    return build_bundle(base, fibre, {})


def twisted_torus(n: int, twist) -> Bundle:
    """Cycle-over-cycle bundle with the given fibre automorphism on the
    single wraparound base edge (n-1, 0) and identities elsewhere."""
    twist = tuple(twist)
    return build_bundle(cycle(n), cycle(n), {(n - 1, 0): twist})


# --- projection, fibres, lifts ------------------------------------------


def projection(b: Bundle, elem):
    """Project a total-graph element to the base: a vertex to its base
    coordinate, a degenerate edge to a base vertex, a nondegenerate edge
    to a base edge."""
    if isinstance(elem, int):
        if not b.total.has_vertex(elem):
            raise ValueError(f"unknown total vertex {elem}")
        return b.coords(elem)[0]
    u, v = elem
    if not b.total.has_edge(u, v):
        raise ValueError(f"unknown total edge ({u}, {v})")
    bu, bv = b.coords(u)[0], b.coords(v)[0]
    return bu if bu == bv else canonical_edge(bu, bv)


def is_degenerate_edge(b: Bundle, edge) -> bool:
    return isinstance(projection(b, tuple(edge)), int)


def fibre_of(b: Bundle, base_vertex: int) -> Graph:
    """Induced subgraph of the total graph over one base vertex, relabeled
    by fibre coordinate (so a valid bundle returns a copy of the fibre)."""
    if not b.base.has_vertex(base_vertex):
        raise ValueError(f"unknown base vertex {base_vertex}")
    nf = b.fibre.n
    off = base_vertex * nf
    edges = [
        (f, g)
        for f in range(nf)
        for g in range(f + 1, nf)
        if b.total.has_edge(off + f, off + g)
    ]
    return Graph(nf, edges)


def transport(b: Bundle, base_walk) -> tuple[int, ...]:
    """Composed fibre permutation along a base walk (repeats allowed):
    the image of f is the fibre coordinate reached by lifting the walk
    from fibre coordinate f."""
    walk = list(base_walk)
    if not walk:
        raise ValueError("empty base walk")
    perm = identity_permutation(b.fibre.n)
    for u, v in zip(walk, walk[1:]):
        perm = compose_permutations(perm, b.twist(u, v))
    return perm


def lift_path(b: Bundle, q: PathSeq, x: int) -> PathSeq:
    """Lift of base path q to the total vertex x over its start.

    The lift starts at x, follows the unique nondegenerate edge over each
    base step, has the same length as q, and projects back onto q.
    """
    q.validate(b.base)
    bx, f = b.coords(x)
    if bx != q.vertices[0]:
        raise ValueError(
            f"lift start {x} lies over base vertex {bx}, not over {q.vertices[0]}"
        )
    out = [x]
    for u, v in zip(q.vertices, q.vertices[1:]):
        f = b.twist(u, v)[f]
        out.append(b.vertex_id(v, f))
    return PathSeq(tuple(out))


def lift_endpoint(b: Bundle, q: PathSeq, x: int) -> int:
    return lift_path(b, q, x).vertices[-1]


def validate_bundle(b: Bundle) -> bool:
    """Constructively check the bundle conditions from the twist data:
    every fibre is an exact copy of F, and the edges over every base edge
    are exactly the matching of the recorded twist (hence each edge
    preimage is F box K2). No general isomorphism search is involved."""
    base, fibre, total = b.base, b.fibre, b.total
    if total.n != base.n * fibre.n:
        return False
    for u, v in base.edges:
        fwd = b.twists.get((u, v))
        back = b.twists.get((v, u))
        if fwd is None or back is None:
            return False
        if not is_automorphism(fibre, fwd):
            return False
        if compose_permutations(fwd, back) != identity_permutation(fibre.n):
            return False
    if any(key not in {(u, v) for u, v in base.edges} | {(v, u) for u, v in base.edges}
           for key in b.twists):
        return False
    expected = Graph(total.n, _total_edges(base, fibre, b.twists))
    return expected.edges == total.edges


# --- bundle text format ---------------------------------------------------


def format_bundle(b: Bundle) -> str:
    """BASE / FIBRE / TWISTS sections; only non-identity twists are
    written, once per undirected edge in the u < v direction."""
    from .graphs import format_edge_list

    chunks = ["BASE\n", format_edge_list(b.base), "FIBRE\n", format_edge_list(b.fibre),
              "TWISTS\n"]
    ident = identity_permutation(b.fibre.n)
    for u, v in b.base.edges:
        perm = b.twists[(u, v)]
        if perm != ident:
            chunks.append(f"{u} {v} : " + " ".join(map(str, perm)) + "\n")
    return "".join(chunks)


def parse_bundle(text: str) -> Bundle:
    """Parse the BASE/FIBRE/TWISTS format. Base edges absent from TWISTS
    get the identity twist. Errors carry absolute line numbers."""
    from .graphs import EdgeListFormatError

    lines = text.splitlines()
    markers = {}
    for i, raw in enumerate(lines):
        word = raw.strip()
        if word in ("BASE", "FIBRE", "TWISTS"):
            if word in markers:
                raise EdgeListFormatError(i + 1, f"duplicate section {word}")
            markers[word] = i
    for needed in ("BASE", "FIBRE"):
        if needed not in markers:
            raise EdgeListFormatError(1, f"missing section {needed}")
    if not markers["BASE"] < markers["FIBRE"] < markers.get("TWISTS", len(lines)):
        raise EdgeListFormatError(1, "sections must appear as BASE, FIBRE, TWISTS")

    def section(start: int, end: int) -> tuple[str, int]:
        return "\n".join(lines[start + 1:end]), start + 1

    base_text, base_off = section(markers["BASE"], markers["FIBRE"])
    fibre_end = markers.get("TWISTS", len(lines))
    fibre_text, fibre_off = section(markers["FIBRE"], fibre_end)

    def parse_section(chunk: str, offset: int) -> Graph:
        try:
            return parse_edge_list(chunk)
        except EdgeListFormatError as exc:
            raise EdgeListFormatError(exc.line + offset, str(exc).split(": ", 1)[1])

    base = parse_section(base_text, base_off)
    fibre = parse_section(fibre_text, fibre_off)

    twists = {}
    if "TWISTS" in markers:
        for i in range(markers["TWISTS"] + 1, len(lines)):
            raw = lines[i]
            lineno = i + 1
            if not raw.strip():
                continue
            if ":" not in raw:
                raise EdgeListFormatError(lineno, "expected 'u v : p0 p1 ...'")
            head, _, tail = raw.partition(":")
            try:
                u, v = map(int, head.split())
                perm = tuple(map(int, tail.split()))
            except ValueError:
                raise EdgeListFormatError(lineno, f"bad twist line {raw.strip()!r}")
            if (u, v) in twists:
                raise EdgeListFormatError(lineno, f"duplicate twist for ({u}, {v})")
            twists[(u, v)] = perm
    try:
        return build_bundle(base, fibre, twists)
    except ValueError as exc:
        raise EdgeListFormatError(markers.get("TWISTS", 1) + 1, str(exc))
