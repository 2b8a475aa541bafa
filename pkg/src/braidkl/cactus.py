"""Triangular cacti, deserts, rooted deserts, and Husimi graphs.

A triangular cactus is a connected graph in which every edge lies in a
unique cycle and every cycle is a triangle; equivalently, every block
(maximal 2-connected subgraph) is a K_3.  A Husimi graph is a connected
graph all of whose blocks are complete; its type records how many blocks
are K_i.  A desert is a disjoint union of triangular cacti; Des_m(n) /
RDes_m(n) live on the vertex set [2n-2] and have exactly 2m components.

Enumeration strategy: exhaustive edge-subset scan for up to 6 vertices,
constructive leaf-block attachment with canonical dedupe for 7 (2^21 edge
sets is feasible but too slow for a test suite).  Closed-form counts are
evaluated in Fraction, since factors like (2r-1)^(r-3) are fractional for
small r, and integrality is asserted at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator

from .exact import (
    ResourceCapError,
    as_integer,
    factorial,
    int_power,
    multinomial,
)

__all__ = [
    "HusimiType",
    "LabeledGraph",
    "RootedDesert",
    "blocks_of",
    "count_cacti_closed",
    "count_des1_closed",
    "count_husimi_closed",
    "count_rdes_closed",
    "des_convolution",
    "enumerate_cacti",
    "enumerate_deserts",
    "enumerate_husimi",
    "enumerate_rooted_deserts",
    "husimi_type",
    "is_husimi",
    "is_triangular_cactus",
]

Edge = FrozenSet[int]

SCAN_CAP = 6  # edge-subset scan bound
CONSTRUCT_CAP = 7  # constructive generation bound


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on labeled vertices."""

    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2 or not e <= self.vertices:
                raise ValueError(f"bad edge {set(e)}")

    @classmethod
    def build(cls, vertices: Iterable[int],
              edges: Iterable[Iterable[int]]) -> "LabeledGraph":
        return cls(frozenset(vertices), frozenset(frozenset(e) for e in edges))

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self) -> list[frozenset]:
        adj = self.adjacency()
        seen: set[int] = set()
        out = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def fingerprint(self) -> tuple:
        return (
            tuple(sorted(self.vertices)),
            tuple(sorted(tuple(sorted(e)) for e in self.edges)),
        )


@dataclass(frozen=True)
class RootedDesert:
    """Desert plus a choice of one root vertex per connected component."""

    graph: LabeledGraph
    roots: frozenset

    def fingerprint(self) -> tuple:
        return self.graph.fingerprint() + (tuple(sorted(self.roots)),)


def blocks_of(g: LabeledGraph) -> list[frozenset]:
    """Vertex sets of the blocks (maximal 2-connected subgraphs), via the
    standard DFS low-link cut-vertex analysis.  Isolated vertices give no
    blocks."""
    adj = g.adjacency()
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset] = []
    counter = [0]
    edge_stack: list[tuple[int, int]] = []

    def dfs(v: int, parent: int | None) -> None:
        index[v] = low[v] = counter[0]
        counter[0] += 1
        for w in sorted(adj[v]):
            if w == parent:
                continue
            if w not in index:
                edge_stack.append((v, w))
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    verts = set()
                    while True:
                        a, b = edge_stack.pop()
                        verts.update((a, b))
                        if (a, b) == (v, w):
                            break
                    blocks.append(frozenset(verts))
            elif index[w] < index[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], index[w])

    for v in sorted(g.vertices):
        if v not in index:
            dfs(v, None)
    return blocks


def is_triangular_cactus(g: LabeledGraph) -> bool:
    """Connected and every block is a triangle.  A single vertex counts
    (vacuously: no edges)."""
    if not g.vertices or not g.is_connected():
        return False
    blocks = blocks_of(g)
    if any(len(b) != 3 for b in blocks):
        return False
    # a 3-vertex block is a triangle only if it carries 3 edges
    return len(g.edges) == 3 * len(blocks)


def is_husimi(g: LabeledGraph) -> bool:
    """Connected with every block a complete graph."""
    if not g.vertices or not g.is_connected():
        return False
    edge_count = 0
    for b in blocks_of(g):
        k = len(b)
        if not all(frozenset(e) in g.edges for e in combinations(sorted(b), 2)):
            return False
        edge_count += k * (k - 1) // 2
    return edge_count == len(g.edges)


class HusimiType:
    """Block multiplicities (n_2, n_3, ...): n_i blocks isomorphic to K_i."""

    __slots__ = ("counts",)

    def __init__(self, counts: Iterable[int]):
        cs = list(counts)
        while cs and cs[-1] == 0:
            cs.pop()
        if any(c < 0 for c in cs):
            raise ValueError("negative block multiplicity")
        self.counts = tuple(cs)

    def n(self, i: int) -> int:
        """Multiplicity of K_i blocks (i >= 2)."""
        return self.counts[i - 2] if 0 <= i - 2 < len(self.counts) else 0

    def block_count(self) -> int:
        return sum(self.counts)

    def vertex_count(self) -> int:
        """Vertices of a connected Husimi graph of this type."""
        return 1 + sum((i - 1) * c for i, c in self.items())

    def feasible_on(self, p: int) -> bool:
        return p == self.vertex_count()

    def items(self) -> Iterator[tuple[int, int]]:
        return ((i + 2, c) for i, c in enumerate(self.counts))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HusimiType) and self.counts == other.counts

    def __hash__(self) -> int:
        return hash(self.counts)

    def __repr__(self) -> str:
        return f"HusimiType({list(self.counts)})"


def husimi_type(g: LabeledGraph) -> HusimiType:
    if not is_husimi(g):
        raise ValueError("not a Husimi graph")
    sizes = [len(b) for b in blocks_of(g)]
    counts = [0] * (max(sizes, default=2) - 1)
    for s in sizes:
        counts[s - 2] += 1
    return HusimiType(counts)


# -- enumeration ----------------------------------------------------------


def _edge_subset_scan(vertices: frozenset,
                      predicate) -> Iterator[LabeledGraph]:
    verts = sorted(vertices)
    pairs = [frozenset(e) for e in combinations(verts, 2)]
    for mask in range(1 << len(pairs)):
        g = LabeledGraph(vertices,
                         frozenset(p for i, p in enumerate(pairs)
                                   if mask >> i & 1))
        if predicate(g):
            yield g


@lru_cache(maxsize=None)
def _husimi_constructive(vertices: frozenset,
                         counts: tuple) -> tuple[LabeledGraph, ...]:
    """All Husimi graphs on exactly `vertices` of type `counts`, built by
    attaching a leaf block to every smaller graph and deduplicating."""
    typ = HusimiType(counts)
    if not typ.feasible_on(len(vertices)):
        return ()
    if len(vertices) == 1:
        return (LabeledGraph(vertices, frozenset()),)
    seen: dict[tuple, LabeledGraph] = {}
    for i, c in typ.items():
        if c == 0:
            continue
        smaller = list(typ.counts)
        smaller[i - 2] -= 1
        # the removed leaf block contributes i-1 non-cut vertices
        for outer in combinations(sorted(vertices), i - 1):
            rest = vertices - frozenset(outer)
            for attach in sorted(rest):
                for base in _husimi_constructive(rest, tuple(smaller)):
                    block = frozenset(outer) | {attach}
                    new_edges = frozenset(
                        frozenset(e) for e in combinations(sorted(block), 2)
                    )
                    g = LabeledGraph(vertices, base.edges | new_edges)
                    seen.setdefault(g.fingerprint(), g)
    return tuple(seen[fp] for fp in sorted(seen))


def enumerate_husimi(p: int, typ: HusimiType) -> list[LabeledGraph]:
    """All Husimi graphs of the given type on [p]."""
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if p > CONSTRUCT_CAP:
        raise ResourceCapError(f"Husimi enumeration capped at {CONSTRUCT_CAP}")
    vertices = frozenset(range(1, p + 1))
    if not typ.feasible_on(p):
        return []
    if p <= SCAN_CAP:
        return [
            g for g in _edge_subset_scan(vertices, is_husimi)
            if husimi_type(g) == typ
        ]
    return list(_husimi_constructive(vertices, typ.counts))


def count_husimi_closed(p: int, typ: HusimiType) -> int:
    """p! / prod_i [(i-1)!]^{n_i} n_i! * p^(sum n_i - 2), guarded by the
    feasibility condition p = 1 + sum (i-1) n_i (0 when infeasible)."""
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if not typ.feasible_on(p):
        return 0
    val = Fraction(factorial(p))
    for i, c in typ.items():
        val /= Fraction(factorial(i - 1)) ** c * factorial(c)
    val *= int_power(p, typ.block_count() - 2)
    return as_integer(val)


def _cactus_type(vcount: int) -> HusimiType:
    return HusimiType([0, (vcount - 1) // 2])


@lru_cache(maxsize=None)
def _cacti_on(vertices: frozenset) -> tuple[LabeledGraph, ...]:
    n = len(vertices)
    if n % 2 == 0:
        return ()
    if n == 1:
        return (LabeledGraph(vertices, frozenset()),)
    if n <= SCAN_CAP:
        return tuple(_edge_subset_scan(vertices, is_triangular_cactus))
    return _husimi_constructive(vertices, _cactus_type(n).counts)


def enumerate_cacti(vertices) -> list[LabeledGraph]:
    """All triangular cacti on exactly this vertex set (empty if |V| even)."""
    vertices = frozenset(vertices)
    if len(vertices) > CONSTRUCT_CAP:
        raise ResourceCapError(f"cactus enumeration capped at {CONSTRUCT_CAP}")
    if not vertices:
        raise ValueError("need a nonempty vertex set")
    return list(_cacti_on(vertices))


def count_cacti_closed(r: int) -> int:
    """|Delta(r)|: triangular cacti on 2r-1 labeled vertices,
    (2r-1)^(r-3) (2r-1)! / (2^(r-1) (r-1)!)."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    val = (
        int_power(2 * r - 1, r - 3)
        * factorial(2 * r - 1)
        / (Fraction(2) ** (r - 1) * factorial(r - 1))
    )
    return as_integer(val)


def _odd_partitions(items: list, blocks: int) -> Iterator[list[frozenset]]:
    """Set partitions of `items` into exactly `blocks` odd-size blocks."""
    if not items:
        if blocks == 0:
            yield []
        return
    if blocks <= 0 or len(items) < blocks:
        return
    first, rest = items[0], items[1:]
    # first's block: choose an even number of companions
    for extra in range(0, len(rest) + 1, 2):
        for companions in combinations(rest, extra):
            block = frozenset((first,) + companions)
            remaining = [x for x in rest if x not in block]
            for sub in _odd_partitions(remaining, blocks - 1):
                yield [block] + sub


def enumerate_deserts(n: int, m: int) -> list[LabeledGraph]:
    """Deserts on [2n-2] with exactly 2m components (disjoint unions of
    triangular cacti)."""
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2, m >= 1, got n={n}, m={m}")
    if 2 * n - 2 > CONSTRUCT_CAP:
        raise ResourceCapError("desert enumeration capped at "
                               f"{CONSTRUCT_CAP} vertices")
    vertices = frozenset(range(1, 2 * n - 1))
    out: list[LabeledGraph] = []
    for blocks in _odd_partitions(sorted(vertices), 2 * m):
        combos: list[list[LabeledGraph]] = [
            list(_cacti_on(b)) for b in blocks
        ]
        def build(idx: int, edges: frozenset):
            if idx == len(combos):
                out.append(LabeledGraph(vertices, edges))
                return
            for cactus in combos[idx]:
                build(idx + 1, edges | cactus.edges)
        build(0, frozenset())
    out.sort(key=lambda g: g.fingerprint())
    return out


def enumerate_rooted_deserts(n: int, m: int) -> list[RootedDesert]:
    """Rooted deserts: each desert with every choice of one root per
    component."""
    out: list[RootedDesert] = []
    for desert in enumerate_deserts(n, m):
        comps = desert.components()
        def choose(idx: int, roots: frozenset):
            if idx == len(comps):
                out.append(RootedDesert(desert, roots))
                return
            for r in sorted(comps[idx]):
                choose(idx + 1, roots | {r})
        choose(0, frozenset())
    out.sort(key=lambda d: d.fingerprint())
    return out


def count_rdes_closed(n: int, m: int) -> int:
    """|RDes_m(n)| = (n-1)^(n-m-2) (2n-2)! / (2 (2m-1)! (n-m-1)!)."""
    if n < 2 or not 1 <= m <= n - 1:
        raise ValueError(f"need n >= 2, 1 <= m <= n-1, got n={n}, m={m}")
    val = (
        int_power(n - 1, n - m - 2)
        * factorial(2 * n - 2)
        / Fraction(2 * factorial(2 * m - 1) * factorial(n - m - 1))
    )
    return as_integer(val)


def count_des1_closed(n: int) -> int:
    """|Des_1(n)| = (n+1)(n-1)^(n-5) (2n-2)! / (6 (n-2)!)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    val = (
        (n + 1)
        * int_power(n - 1, n - 5)
        * factorial(2 * n - 2)
        / Fraction(6 * factorial(n - 2))
    )
    return as_integer(val)


def _odd_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of `parts` odd positives summing to `total`."""
    if parts == 1:
        if total >= 1 and total % 2 == 1:
            yield (total,)
        return
    for first in range(1, total - (parts - 1) + 1, 2):
        for rest in _odd_compositions(total - first, parts - 1):
            yield (first,) + rest


def des_convolution(n: int, m: int) -> int:
    """|Des_m(n)| by the multinomial convolution of cactus counts over odd
    compositions of 2n-2 into 2m parts, divided by (2m)!."""
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2, m >= 1, got n={n}, m={m}")
    total = 0
    for comp in _odd_compositions(2 * n - 2, 2 * m):
        term = multinomial(2 * n - 2, comp)
        for part in comp:
            term *= count_cacti_closed((part + 1) // 2)
        total += term
    quotient = Fraction(total, factorial(2 * m))
    return as_integer(quotient)
