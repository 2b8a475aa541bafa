"""Small labeled matroids represented by their circuit sets.

Everything here reasons in circuits (3-circuits, chordless 4-circuits,
series/parallel/triangle extensions), which is how the simple quasi
series-parallel matroids are analyzed.  Ground sets are capped at 10
elements; the circuit axioms are checked exhaustively on construction,
which is cheap at that scale.

Matroid equality is equality of labeled circuit sets.  Isomorphism
(permutation search) is used only to identify the two excluded minors
U_{2,4} and M(K_4) on at most 6 elements.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import FrozenSet, Iterable

__all__ = [
    "GROUND_CAP",
    "LabeledMatroid",
    "chords_of",
    "circuits_of_size",
    "count_3circuits_through",
    "has_excluded_minor",
    "is_chordal",
    "is_chordless",
    "parallel_extension",
    "series_extension",
    "triangle_extension",
]

GROUND_CAP = 10

Circuit = FrozenSet[int]


def _minimal_sets(sets: Iterable[frozenset]) -> set[frozenset]:
    """Inclusion-minimal members (drops duplicates)."""
    pool = sorted(set(sets), key=len)
    out: list[frozenset] = []
    for s in pool:
        if not any(t <= s for t in out):
            out.append(s)
    return set(out)


class LabeledMatroid:
    """Matroid on a labeled ground set, given by its set of circuits."""

    __slots__ = ("ground", "circuits", "_rank")

    def __init__(self, ground: Iterable[int], circuits: Iterable[Iterable[int]],
                 validate: bool = True):
        self.ground: frozenset[int] = frozenset(ground)
        self.circuits: frozenset[Circuit] = frozenset(
            frozenset(c) for c in circuits
        )
        self._rank: int | None = None
        if len(self.ground) > GROUND_CAP:
            raise ValueError(f"ground set larger than cap {GROUND_CAP}")
        if validate:
            self._check_axioms()

    def _check_axioms(self) -> None:
        circuits = sorted(self.circuits, key=len)
        for c in circuits:
            if not c:
                raise ValueError("empty set cannot be a circuit")
            if not c <= self.ground:
                raise ValueError(f"circuit {set(c)} not inside ground set")
        for i, c1 in enumerate(circuits):
            for c2 in circuits[i + 1:]:
                if c1 <= c2:
                    raise ValueError(
                        f"circuits not an antichain: {set(c1)} <= {set(c2)}"
                    )
        # circuit elimination: C1 != C2, e in both -> some circuit inside
        # (C1 u C2) - e
        for i, c1 in enumerate(circuits):
            for c2 in circuits[i + 1:]:
                common = c1 & c2
                if not common:
                    continue
                union = c1 | c2
                for e in common:
                    rest = union - {e}
                    if not any(c3 <= rest for c3 in circuits):
                        raise ValueError(
                            f"circuit elimination fails for {set(c1)}, "
                            f"{set(c2)} at {e}"
                        )

    # -- basic queries ----------------------------------------------------

    def fingerprint(self) -> tuple:
        """Canonical hashable form: (sorted ground, sorted circuits)."""
        return (
            tuple(sorted(self.ground)),
            tuple(sorted(tuple(sorted(c)) for c in self.circuits)),
        )

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return not any(c <= s for c in self.circuits)

    def rank_of(self, subset: Iterable[int]) -> int:
        """Size of a maximal independent subset (greedy is exact in a matroid)."""
        s = frozenset(subset)
        if not s <= self.ground:
            raise ValueError(f"{set(s)} is not a subset of the ground set")
        indep: set[int] = set()
        for e in sorted(s):
            indep.add(e)
            if any(c <= indep for c in self.circuits):
                indep.discard(e)
        return len(indep)

    def rank(self) -> int:
        if self._rank is None:
            self._rank = self.rank_of(self.ground)
        return self._rank

    def is_simple(self) -> bool:
        return all(len(c) > 2 for c in self.circuits)

    def is_coloop(self, e: int) -> bool:
        return not any(e in c for c in self.circuits)

    def components(self) -> list[frozenset[int]]:
        """Connected components: classes of 'lie in a common circuit'."""
        parent = {e: e for e in self.ground}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuits:
            it = iter(c)
            first = find(next(it))
            for e in it:
                parent[find(e)] = first
        groups: dict[int, set[int]] = {}
        for e in self.ground:
            groups.setdefault(find(e), set()).add(e)
        return [frozenset(g) for g in groups.values()]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- minors and sums ---------------------------------------------------

    def delete(self, e: int) -> "LabeledMatroid":
        if e not in self.ground:
            raise ValueError(f"{e} not in ground set")
        return LabeledMatroid(
            self.ground - {e},
            (c for c in self.circuits if e not in c),
            validate=False,
        )

    def contract(self, e: int) -> "LabeledMatroid":
        """Circuits of M/e are the minimal nonempty sets C - {e}."""
        if e not in self.ground:
            raise ValueError(f"{e} not in ground set")
        stripped = (c - {e} for c in self.circuits)
        return LabeledMatroid(
            self.ground - {e},
            _minimal_sets(s for s in stripped if s),
            validate=False,
        )

    def delete_set(self, xs: Iterable[int]) -> "LabeledMatroid":
        m = self
        for e in xs:
            m = m.delete(e)
        return m

    def contract_set(self, xs: Iterable[int]) -> "LabeledMatroid":
        m = self
        for e in xs:
            m = m.contract(e)
        return m

    def direct_sum(self, other: "LabeledMatroid") -> "LabeledMatroid":
        if self.ground & other.ground:
            raise ValueError("direct sum needs disjoint ground sets")
        return LabeledMatroid(
            self.ground | other.ground,
            self.circuits | other.circuits,
            validate=False,
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabeledMatroid)
            and self.ground == other.ground
            and self.circuits == other.circuits
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.circuits))

    def __repr__(self) -> str:
        cs = sorted(tuple(sorted(c)) for c in self.circuits)
        return f"LabeledMatroid({sorted(self.ground)}, {cs})"


# -- chords --------------------------------------------------------------


def chords_of(m: LabeledMatroid, circuit: Iterable[int]) -> frozenset[int]:
    """Elements e outside the circuit C that split it: some S subset C has
    S + e and (C - S) + e both circuits."""
    c = frozenset(circuit)
    if c not in m.circuits:
        raise ValueError(f"{set(c)} is not a circuit")
    chords = set()
    elems = sorted(c)
    for e in m.ground - c:
        for r in range(1, len(elems)):
            found = False
            for s in combinations(elems, r):
                s1 = frozenset(s) | {e}
                s2 = (c - frozenset(s)) | {e}
                if s1 in m.circuits and s2 in m.circuits:
                    chords.add(e)
                    found = True
                    break
            if found:
                break
    return frozenset(chords)


def is_chordless(m: LabeledMatroid, circuit: Iterable[int]) -> bool:
    return not chords_of(m, circuit)


def is_chordal(m: LabeledMatroid) -> bool:
    """Simple matroid with no chordless circuits of size >= 4."""
    if not m.is_simple():
        return False
    return all(
        not is_chordless(m, c) for c in m.circuits if len(c) >= 4
    )


def circuits_of_size(m: LabeledMatroid, k: int) -> list[Circuit]:
    return sorted((c for c in m.circuits if len(c) == k),
                  key=lambda c: tuple(sorted(c)))


def count_3circuits_through(m: LabeledMatroid, e: int) -> int:
    if e not in m.ground:
        raise ValueError(f"{e} not in ground set")
    return sum(1 for c in m.circuits if len(c) == 3 and e in c)


# -- extensions ----------------------------------------------------------


def _fresh(m: LabeledMatroid, at: int, new: int) -> None:
    if at not in m.ground:
        raise ValueError(f"extension point {at} not in ground set")
    if new in m.ground:
        raise ValueError(f"label {new} already in ground set")


def parallel_extension(m: LabeledMatroid, at: int, new: int) -> LabeledMatroid:
    """Add `new` parallel to `at` (a clone: {at,new} becomes a 2-circuit)."""
    _fresh(m, at, new)
    circuits = set(m.circuits)
    circuits.add(frozenset({at, new}))
    for c in m.circuits:
        if at in c:
            circuits.add((c - {at}) | {new})
    return LabeledMatroid(m.ground | {new}, _minimal_sets(circuits))


def series_extension(m: LabeledMatroid, at: int, new: int) -> LabeledMatroid:
    """Coextension putting `new` in series with `at`: every circuit through
    `at` picks up `new`.  ({at,new} is a cocircuit whenever `at` was not a
    coloop.)"""
    _fresh(m, at, new)
    circuits = set()
    for c in m.circuits:
        circuits.add(c | {new} if at in c else c)
    return LabeledMatroid(m.ground | {new}, circuits)


def triangle_extension(m: LabeledMatroid, at: int,
                       new: tuple[int, int]) -> LabeledMatroid:
    """Parallel extension at `at` followed by a series split of the clone,
    creating the 3-circuit {at, e, f}.  Raises rank by 1, ground by 2."""
    e, f = new
    if e == f:
        raise ValueError("triangle extension needs two distinct new labels")
    return series_extension(parallel_extension(m, at, e), e, f)


# -- excluded minors -----------------------------------------------------

_U24_CIRCUITS_SIZES = (3, 3, 3, 3)
_MK4_CIRCUIT_SIZES = (3, 3, 3, 3, 4, 4, 4)

# M(K_4) on ground {0..5}: edges 0={1,2}, 1={1,3}, 2={1,4}, 3={2,3},
# 4={2,4}, 5={3,4} of the complete graph on 4 vertices.
_MK4_REFERENCE = frozenset(
    frozenset(c)
    for c in [
        (0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5),
        (0, 1, 4, 5), (0, 2, 3, 5), (1, 2, 3, 4),
    ]
)


def _is_u24(m: LabeledMatroid) -> bool:
    if len(m.ground) != 4:
        return False
    return m.circuits == frozenset(
        frozenset(c) for c in combinations(sorted(m.ground), 3)
    )


def _is_mk4(m: LabeledMatroid) -> bool:
    if len(m.ground) != 6:
        return False
    if tuple(sorted(len(c) for c in m.circuits)) != _MK4_CIRCUIT_SIZES:
        return False
    elems = sorted(m.ground)
    for perm in permutations(range(6)):
        relabel = dict(zip(elems, perm))
        mapped = frozenset(
            frozenset(relabel[e] for e in c) for c in m.circuits
        )
        if mapped == _MK4_REFERENCE:
            return True
    return False


def has_excluded_minor(m: LabeledMatroid) -> bool:
    """True iff some minor is isomorphic to U_{2,4} or M(K_4).

    Exhaustive scan over disjoint (contract set, delete set) pairs that
    leave 4 or 6 elements.
    """
    n = len(m.ground)
    elems = sorted(m.ground)
    for target, test in ((4, _is_u24), (6, _is_mk4)):
        drop = n - target
        if drop < 0:
            continue
        for c_size in range(drop + 1):
            for contract in combinations(elems, c_size):
                rest = [e for e in elems if e not in contract]
                for delete in combinations(rest, drop - c_size):
                    minor = m.contract_set(contract).delete_set(delete)
                    if test(minor):
                        return True
    return False
