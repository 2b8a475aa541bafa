"""Independent brute-force oracles, quarantined from the production code.

These exist to check the main implementations from a different direction:
no memoized type aggregation, no constructive generation, no shared
predicates.  They are intentionally naive (explicit Mobius recursion over
all set partitions, literal flat-by-flat sums, full edge-subset scans with
self-contained cycle analysis) and are used only by tests and the hidden
`oracle` CLI subcommand.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from .exact import IntPoly, ResourceCapError
from .klcore import KlTable, kl_poly_braid

__all__ = [
    "graph_scan",
    "mobius_char_poly",
    "naive_is_cactus",
    "naive_husimi_type",
    "setpartition_Q_relation",
]

_MOBIUS_CAP = 6
_Q_CAP = 6
_SCAN_CAP = 6


def _set_partitions(items: tuple) -> Iterator[tuple[frozenset, ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        for i, block in enumerate(sub):
            yield sub[:i] + (block | {first},) + sub[i + 1:]
        yield sub + (frozenset({first}),)


def _refines(finer: tuple, coarser: tuple) -> bool:
    return all(
        any(block <= cblock for cblock in coarser) for block in finer
    )


def mobius_char_poly(n: int) -> IntPoly:
    """Characteristic polynomial of the partition lattice of [n] via the
    explicit Mobius recursion mu(0, F) = -sum_{G < F} mu(0, G)."""
    if not 1 <= n <= _MOBIUS_CAP:
        raise ResourceCapError(f"mobius_char_poly capped at {_MOBIUS_CAP}")
    partitions = list(_set_partitions(tuple(range(1, n + 1))))
    # sort coarsest-last so every strict refinement precedes its coarsening
    partitions.sort(key=len, reverse=True)
    mu: dict[tuple, int] = {}
    bottom = partitions[0]
    for p in partitions:
        if p == bottom:
            mu[p] = 1
            continue
        # strict refinements of p have strictly more blocks
        mu[p] = -sum(
            mu[q] for q in partitions
            if len(q) > len(p) and _refines(q, p)
        )
    coeffs = [0] * n
    for p in partitions:
        # corank of the flat: rank of B_n is n-1, rank of the flat n-|p|
        coeffs[len(p) - 1] += mu[p]
    return IntPoly(coeffs)


def setpartition_Q_relation(n: int, table: KlTable | None = None) -> IntPoly:
    """Q_{B_n} from the P/Q relation summed literally over every set
    partition of [n], with no aggregation by type."""
    if not 1 <= n <= _Q_CAP:
        raise ResourceCapError(f"setpartition_Q_relation capped at {_Q_CAP}")
    memo: dict[int, IntPoly] = {}

    def q(k: int) -> IntPoly:
        if k in memo:
            return memo[k]
        if k == 1:
            memo[1] = IntPoly.one()
            return memo[1]
        acc = kl_poly_braid(k, table)
        for p in _set_partitions(tuple(range(1, k + 1))):
            length = len(p)
            if length == 1 or length == k:
                continue
            prod = IntPoly.one()
            for block in p:
                prod = prod * kl_poly_braid(len(block), table)
            sign = -1 if (length - 1) % 2 else 1
            acc = acc + (prod * q(length)).scale(sign)
        memo[k] = acc if k % 2 == 0 else acc.scale(-1)
        return memo[k]

    return q(n)


# -- naive graph predicates (self-contained; no block decomposition) ------


def _all_cycles(vertices: list, edges: set) -> list[frozenset]:
    """Every cycle as a frozenset of its edges, by DFS from each least
    vertex."""
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    cycles: set[frozenset] = set()

    def walk(start: int, current: int, path: list[int]):
        for w in adj[current]:
            if w == start and len(path) >= 3:
                cyc = frozenset(
                    frozenset((path[i], path[(i + 1) % len(path)]))
                    for i in range(len(path))
                )
                cycles.add(cyc)
            elif w > start and w not in path:
                walk(start, w, path + [w])

    for s in vertices:
        walk(s, s, [s])
    return sorted(cycles, key=lambda c: sorted(map(sorted, c)))


def naive_is_cactus(vertices: list, edges: set) -> bool:
    """Literal reading: connected, every edge on exactly one cycle, every
    cycle a triangle."""
    if not _naive_connected(vertices, edges):
        return False
    cycles = _all_cycles(vertices, edges)
    if any(len(c) != 3 for c in cycles):
        return False
    for e in edges:
        if sum(1 for c in cycles if e in c) != 1:
            return False
    return True


def _naive_connected(vertices: list, edges: set) -> bool:
    if not vertices:
        return False
    seen = {vertices[0]}
    frontier = [vertices[0]]
    while frontier:
        v = frontier.pop()
        for e in edges:
            if v in e:
                (w,) = e - {v}
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return len(seen) == len(vertices)


def naive_husimi_type(vertices: list, edges: set) -> tuple | None:
    """Block-size multiplicities (n_2, n_3, ...) if the graph is Husimi,
    else None.  Blocks are found as classes of the 'share a cycle'
    relation on edges, bridges standing alone."""
    if not _naive_connected(vertices, edges):
        return None
    cycles = _all_cycles(vertices, edges)
    parent: dict[frozenset, frozenset] = {e: e for e in edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cyc in cycles:
        es = sorted(cyc, key=lambda e: sorted(e))
        root = find(es[0])
        for e in es[1:]:
            parent[find(e)] = root
    classes: dict[frozenset, set[frozenset]] = {}
    for e in edges:
        classes.setdefault(find(e), set()).add(e)
    sizes = []
    for es in classes.values():
        verts = set()
        for e in es:
            verts |= e
        k = len(verts)
        if len(es) != k * (k - 1) // 2:
            return None  # block is not complete
        sizes.append(k)
    if not sizes and len(vertices) > 1:
        return None
    counts = [0] * (max(sizes, default=2) - 1)
    for s in sizes:
        counts[s - 2] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def graph_scan(predicate: Callable, p: int) -> list[tuple]:
    """All simple graphs on [p] satisfying `predicate(vertices, edges)`,
    returned as sorted edge tuples."""
    if not 1 <= p <= _SCAN_CAP:
        raise ResourceCapError(f"graph_scan capped at p <= {_SCAN_CAP}")
    vertices = list(range(1, p + 1))
    pairs = [frozenset(e) for e in combinations(vertices, 2)]
    hits = []
    for mask in range(1 << len(pairs)):
        edges = {pr for i, pr in enumerate(pairs) if mask >> i & 1}
        if predicate(vertices, edges):
            hits.append(tuple(sorted(tuple(sorted(e)) for e in edges)))
    return sorted(hits)
