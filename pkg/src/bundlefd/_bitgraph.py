"""Bitmask adjacency kernels shared by the enumeration-heavy modules.

Vertex sets are Python ints used as bitmasks; big-int boolean ops run at C
speed, which is what makes exhaustive fault-set enumeration practical on
desk-scale graphs (tens of vertices, tens of thousands of subgraphs).
"""

from __future__ import annotations

INFINITE = float("inf")


def bits_without_vertices(bits: list[int], removed: int) -> list[int]:
    """Adjacency rows with the `removed` bitmask cleared from every row."""
    keep = ~removed
    return [row & keep for row in bits]


def bits_without_edges(bits: list[int], edges) -> list[int]:
    """Copy of adjacency rows with the given (u, v) edges cleared."""
    out = list(bits)
    for u, v in edges:
        out[u] &= ~(1 << v)
        out[v] &= ~(1 << u)
    return out


def reachable_set(bits: list[int], alive: int, start: int) -> int:
    """Bitmask of vertices reachable from `start` inside the `alive` mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= bits[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def eccentricity(bits: list[int], alive: int, start: int):
    """(eccentricity, reached-mask) of `start` within the `alive` mask.

    Eccentricity counts BFS levels; the reached mask lets callers detect
    disconnection (reached != alive).
    """
    seen = 1 << start
    frontier = seen
    dist = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= bits[v]
        nxt &= alive & ~seen
        if not nxt:
            return dist, seen
        dist += 1
        seen |= nxt
        frontier = nxt


def masked_diameter(bits: list[int], alive: int):
    """Exact diameter of the subgraph induced on `alive`; INFINITE if it is
    disconnected or has fewer than two vertices (a single vertex counts as
    disconnected here)."""
    count = alive.bit_count()
    if count <= 1:
        return INFINITE
    first = (alive & -alive).bit_length() - 1
    best, seen = eccentricity(bits, alive, first)
    if seen != alive:
        return INFINITE
    rest = alive & ~(1 << first)
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        ecc, _ = eccentricity(bits, alive, v)
        if ecc > best:
            best = ecc
    return best


def masked_is_connected(bits: list[int], alive: int) -> bool:
    """True iff the subgraph induced on `alive` is connected (>= 2 vertices;
    the one-vertex graph is treated as disconnected)."""
    if alive.bit_count() <= 1:
        return False
    first = (alive & -alive).bit_length() - 1
    return reachable_set(bits, alive, first) == alive


# --- byte-table kernels ------------------------------------------------
#
# For enumeration workloads the neighbor union of a BFS frontier is taken
# per byte of the frontier mask through a precomputed table, instead of
# per set bit. The table depends only on the adjacency rows, so it is
# built once per graph and reused across all fault subsets; edge-deleted
# subsets patch the few affected rows on the side.


def build_union_table(bits) -> list[list[int]]:
    """table[i][b] = union of adjacency rows 8*i+j for the bits j of b."""
    n = len(bits)
    table = []
    for base in range(0, n, 8):
        row = [0] * 256
        for b in range(1, 256):
            low = b & -b
            j = base + low.bit_length() - 1
            row[b] = row[b ^ low] | (bits[j] if j < n else 0)
        table.append(row)
    return table


def patched_rows_for_edges(bits, edges):
    """(mask, rows) overriding adjacency for the endpoints of the removed
    edges; vertices outside the mask keep their table rows."""
    rows = {}
    mask = 0
    for u, v in edges:
        rows[u] = rows.get(u, bits[u]) & ~(1 << v)
        rows[v] = rows.get(v, bits[v]) & ~(1 << u)
        mask |= (1 << u) | (1 << v)
    return mask, rows


def table_eccentricity(table, alive: int, start: int,
                       patched_mask: int = 0, patched_rows=None):
    """(eccentricity, reached-mask) using the byte table, honoring patched
    rows for vertices in `patched_mask`."""
    seen = 1 << start
    frontier = seen
    dist = 0
    while True:
        union = 0
        clean = frontier & ~patched_mask
        idx = 0
        while clean:
            union |= table[idx][clean & 255]
            clean >>= 8
            idx += 1
        dirty = frontier & patched_mask
        while dirty:
            v = (dirty & -dirty).bit_length() - 1
            dirty &= dirty - 1
            union |= patched_rows[v]
        nxt = union & alive & ~seen
        if not nxt:
            return dist, seen
        dist += 1
        seen |= nxt
        frontier = nxt


def table_diameter(table, alive: int, patched_mask: int = 0,
                   patched_rows=None):
    """Exact diameter via the byte-table kernel; INFINITE when the induced
    subgraph is disconnected or smaller than two vertices."""
    if alive.bit_count() <= 1:
        return INFINITE
    first = (alive & -alive).bit_length() - 1
    best, seen = table_eccentricity(table, alive, first, patched_mask,
                                    patched_rows)
    if seen != alive:
        return INFINITE
    rest = alive & ~(1 << first)
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        ecc, _ = table_eccentricity(table, alive, v, patched_mask,
                                    patched_rows)
        if ecc > best:
            best = ecc
    return best


def table_is_connected(table, alive: int, patched_mask: int = 0,
                       patched_rows=None) -> bool:
    if alive.bit_count() <= 1:
        return False
    first = (alive & -alive).bit_length() - 1
    _, seen = table_eccentricity(table, alive, first, patched_mask,
                                 patched_rows)
    return seen == alive
