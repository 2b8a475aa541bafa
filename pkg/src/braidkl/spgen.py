"""Exhaustive generation of labeled series-parallel matroids and of the
sets S(n, k) of simple quasi series-parallel matroids.

Connected series-parallel matroids on a label set E are generated bottom-up:
the single coloop for |E| = 1, and otherwise every series or parallel
extension (at every element, with every e in E as the new label) of every
connected matroid on E - {e}, deduplicated by circuit fingerprint.  The
dedupe silently resolves Whitney 2-isomorphism: two graph presentations of
the same matroid collapse to one circuit set.

Non-simple intermediates are required for completeness (a triangle
extension factors through a parallel pair), so they are kept in the pool
and filtered only at query time.  Series extension at a coloop yields a
disconnected matroid whose descendants stay disconnected, so those are
pruned immediately; this loses no connected matroid.

S(n, k) itself is assembled as direct sums: a set partition of [n] with a
connected simple series-parallel matroid on each block, block ranks summing
to k.  Components of a matroid are unique, so distinct assemblies give
distinct matroids and no dedupe is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exact import (
    IntPoly,
    ResourceCapError,
    as_integer,
    double_factorial,
    factorial,
    int_power,
)
from .matroid import (
    LabeledMatroid,
    count_3circuits_through,
    parallel_extension,
    series_extension,
)

__all__ = [
    "MAX_GROUND",
    "classify_by_m",
    "count_E",
    "count_E_closed",
    "count_S",
    "enumerate_S",
    "generate_connected_sp",
    "kl_coeffs_via_enumeration",
    "set_partitions",
]

MAX_GROUND = 9


@lru_cache(maxsize=None)
def _connected_pool(labels: frozenset) -> tuple[LabeledMatroid, ...]:
    if len(labels) == 1:
        return (LabeledMatroid(labels, []),)
    seen: dict[tuple, LabeledMatroid] = {}
    for new in sorted(labels):
        for base in _connected_pool(labels - {new}):
            for at in base.ground:
                exts = [parallel_extension(base, at, new)]
                if not base.is_coloop(at):  # series at a coloop disconnects
                    exts.append(series_extension(base, at, new))
                for m in exts:
                    fp = m.fingerprint()
                    if fp not in seen:
                        seen[fp] = m
    return tuple(seen[fp] for fp in sorted(seen))


def generate_connected_sp(labels) -> list[LabeledMatroid]:
    """All connected series-parallel matroids on exactly this label set,
    including non-simple ones."""
    labels = frozenset(labels)
    if not 1 <= len(labels) <= MAX_GROUND:
        raise ResourceCapError(
            f"connected-sp generation capped at {MAX_GROUND} labels, "
            f"got {len(labels)}"
        )
    return list(_connected_pool(labels))


@lru_cache(maxsize=None)
def _simple_connected_by_rank(labels: frozenset) -> dict:
    """rank -> tuple of simple connected sp matroids on exactly `labels`."""
    by_rank: dict[int, list[LabeledMatroid]] = {}
    for m in _connected_pool(labels):
        if m.is_simple():
            by_rank.setdefault(m.rank(), []).append(m)
    return {r: tuple(ms) for r, ms in by_rank.items()}


def set_partitions(items: list) -> Iterator[list[list]]:
    """All set partitions of `items` (blocks in insertion order)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
        yield [[first]] + sub


def enumerate_S(n: int, k: int) -> list[LabeledMatroid]:
    """All simple quasi series-parallel matroids of rank k on [n]."""
    if not 1 <= k <= n <= MAX_GROUND:
        raise ResourceCapError(f"enumerate_S needs 1 <= k <= n <= {MAX_GROUND}")
    out: list[LabeledMatroid] = []
    for partition in set_partitions(list(range(1, n + 1))):
        # simple connected sp of rank r on s elements needs s <= 2r - 1,
        # i.e. rank at least (s+1)/2, and rank at most s (s=1) / s-1 (s>=2)
        choices: list[list[tuple[int, LabeledMatroid]]] = []
        feasible = True
        for block in partition:
            by_rank = _simple_connected_by_rank(frozenset(block))
            opts = [(r, m) for r, ms in sorted(by_rank.items()) for m in ms]
            if not opts:
                feasible = False
                break
            choices.append(opts)
        if not feasible:
            continue
        assemblies: list[LabeledMatroid] = []

        def assemble(idx: int, budget: int, acc: LabeledMatroid | None):
            if idx == len(choices):
                if budget == 0 and acc is not None:
                    assemblies.append(acc)
                return
            remaining_min = sum(min(r for r, _ in c) for c in choices[idx:])
            remaining_max = sum(max(r for r, _ in c) for c in choices[idx:])
            if not remaining_min <= budget <= remaining_max:
                return
            for r, m in choices[idx]:
                if r > budget:
                    break
                assemble(idx + 1, budget - r,
                         m if acc is None else acc.direct_sum(m))

        assemble(0, k, None)
        out.extend(assemblies)
    out.sort(key=lambda m: m.fingerprint())
    return out


def count_S(n: int, k: int) -> int:
    return len(enumerate_S(n, k))


def count_E(n: int) -> int:
    """Connected members of S(2n-2, n): simple series-parallel matroids of
    rank n on [2n-2]."""
    if not 2 <= n <= 5:
        raise ResourceCapError(f"count_E supported for 2 <= n <= 5, got {n}")
    pool = _simple_connected_by_rank(frozenset(range(1, 2 * n - 1)))
    return len(pool.get(n, ()))


def count_E_closed(n: int) -> int:
    """Closed form for count_E:
    (2n-1)^(n-2) (2n-3)!! - (n-2)(n-1)^(n-5)(2n-1)!/(3 (n-2)!)
                          - (n+1)(n-1)^(n-3)(2n-3)!/(3 (n-1)!)."""
    if n < 2:
        raise ValueError(f"count_E_closed needs n >= 2, got {n}")
    val = (
        int_power(2 * n - 1, n - 2) * double_factorial(2 * n - 3)
        - (n - 2) * int_power(n - 1, n - 5) * factorial(2 * n - 1)
        / Fraction(3 * factorial(n - 2))
        - (n + 1) * int_power(n - 1, n - 3) * factorial(2 * n - 3)
        / Fraction(3 * factorial(n - 1))
    )
    return as_integer(val)


def classify_by_m(n: int) -> dict[int, list[LabeledMatroid]]:
    """Partition S(2n-1, n) by the number m of 3-circuits through the
    element 2n-1."""
    if n > 4:
        raise ResourceCapError(f"classify_by_m capped at n <= 4, got {n}")
    classes: dict[int, list[LabeledMatroid]] = {}
    for m in enumerate_S(2 * n - 1, n):
        classes.setdefault(
            count_3circuits_through(m, 2 * n - 1), []
        ).append(m)
    return dict(sorted(classes.items()))


def kl_coeffs_via_enumeration(n: int) -> IntPoly:
    """sum_i |S(n-1, n-1-i)| t^i: the combinatorial model for P_{B_n}."""
    if not 1 <= n <= MAX_GROUND:
        raise ResourceCapError(f"kl_coeffs_via_enumeration needs n <= {MAX_GROUND}")
    if n == 1:
        return IntPoly.one()
    coeffs = []
    for i in range((n - 2) // 2 + 1):  # deg P_{B_n} < (n-1)/2
        coeffs.append(count_S(n - 1, n - 1 - i))
    return IntPoly(coeffs)
