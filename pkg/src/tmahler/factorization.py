"""Representations of a rational as a product of coprime fraction parts.

A representation of r/s (in lowest terms) is a multiset of parts a/b with
prod a = r and prod b = s.  Every representation arises from a multiplicative
partition of r, a multiplicative partition of s, and a partial matching
between their blocks: a matched pair of blocks becomes the part a/b, an
unmatched numerator block becomes a/1, an unmatched denominator block 1/b.
Merging several blocks into one composite part is never needed, because the
merged part is already produced by a coarser partition.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import DomainError, EnumerationCapError
from .rational import ReducedRational, mahler_measure

LOG2 = math.log(2)

DEFAULT_REPRESENTATION_CAP = 10**6


class Part(NamedTuple):
    """One coprime fraction block a/b of a representation; never 1/1."""

    a: int
    b: int


# A representation is canonicalized as a descending-sorted tuple of parts so
# that multiset equality is plain tuple equality.
Representation = tuple[Part, ...]


def prime_factors(n: int) -> list[int]:
    """Prime factors of n >= 2 with multiplicity, ascending (trial division)."""
    if n < 2:
        raise DomainError("n must be >= 2")
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=65536)
def _divisors(n: int) -> tuple[int, ...]:
    """All divisors of n >= 1, descending."""
    out = {1}
    for p in prime_factors(n) if n > 1 else []:
        out |= {d * p for d in out}
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=65536)
def _partitions_capped(m: int, largest: int) -> tuple[tuple[int, ...], ...]:
    """Multiplicative partitions of m into factors in [2, largest], descending."""
    if m == 1:
        return ((),)
    out = []
    for d in _divisors(m):
        if d > largest:
            continue
        if d < 2:
            break
        for rest in _partitions_capped(m // d, d):
            out.append((d, *rest))
    return tuple(out)


@lru_cache(maxsize=4096)
def multiplicative_partitions(n: int) -> frozenset[tuple[int, ...]]:
    """All multisets of integers >= 2 with product n, as descending tuples.

    n = 1 yields exactly the empty product.
    """
    if n <= 0:
        raise DomainError("n must be positive")
    return frozenset(_partitions_capped(n, n))


def _partial_matchings(
    na: int, nb: int
) -> Iterator[tuple[tuple[int, int], ...]]:
    """All injective partial pairings between indices range(na) and range(nb)."""

    def go(i: int, used: frozenset[int]) -> Iterator[tuple[tuple[int, int], ...]]:
        if i == na:
            yield ()
            return
        for rest in go(i + 1, used):
            yield rest
        for j in range(nb):
            if j not in used:
                for rest in go(i + 1, used | {j}):
                    yield ((i, j), *rest)

    yield from go(0, frozenset())


def enumerate_representations(
    alpha: ReducedRational, cap: int = DEFAULT_REPRESENTATION_CAP
) -> frozenset[Representation]:
    """All representations of alpha as a multiset of coprime parts.

    +-1 has exactly one representation, the empty product.  Raises
    EnumerationCapError once more than `cap` distinct representations appear.
    """
    r = abs(alpha.numerator)
    s = alpha.denominator
    if r == 1 and s == 1:
        return frozenset({()})

    found: set[Representation] = set()
    for blocks_a in multiplicative_partitions(r):
        for blocks_b in multiplicative_partitions(s):
            for matching in _partial_matchings(len(blocks_a), len(blocks_b)):
                matched_a = {i for i, _ in matching}
                matched_b = {j for _, j in matching}
                parts = [Part(blocks_a[i], blocks_b[j]) for i, j in matching]
                parts += [
                    Part(a, 1)
                    for i, a in enumerate(blocks_a)
                    if i not in matched_a
                ]
                parts += [
                    Part(1, b)
                    for j, b in enumerate(blocks_b)
                    if j not in matched_b
                ]
                found.add(tuple(sorted(parts, reverse=True)))
                if len(found) > cap:
                    raise EnumerationCapError(cap, str(alpha))
    return frozenset(found)


def _best_matching_tuple(
    short: tuple[int, ...], long_: tuple[int, ...]
) -> tuple[int, ...]:
    """The one measure tuple of this partition pair that can be minimal.

    A maximal matching pairs every block of the shorter side with a distinct
    block of the longer side; a pair contributes max of the two, leftovers
    contribute themselves.  Pairing the blocks in descending order on both
    sides dominates every other maximal matching of the pair: a greedy
    exchange argument shows that diverting a short block s away from the
    largest free block w only ever replaces an entry by a larger one
    (if w >= s the entry w is kept either way; if w < s, replacing a
    smaller block than w leaves the larger w in the tuple).  Both sides are
    descending, so the greedy partner is always the head of the remainder.
    """
    merged = [max(s, w) for s, w in zip(short, long_)]
    merged.extend(long_[len(short) :])
    return tuple(sorted(merged, reverse=True))


def enumerate_measure_tuples(
    alpha: ReducedRational, cap: int = DEFAULT_REPRESENTATION_CAP
) -> frozenset[tuple[int, ...]]:
    """Measure tuples of every representation that can possibly be minimal.

    Adding a pair to a non-maximal matching replaces entries {a, b} by
    {max(a, b)}, a strict sub-multiset, which strictly dominates; and among
    the maximal matchings of a partition pair the descending greedy one
    dominates the rest (see _best_matching_tuple).  So one candidate per
    partition pair suffices: pruning this set gives the same minimal tuples
    as pruning the tuples of all representations, at a fraction of the
    enumeration cost.
    """
    r = abs(alpha.numerator)
    s = alpha.denominator
    if r == 1 and s == 1:
        return frozenset({()})

    found: set[tuple[int, ...]] = set()
    for blocks_a in multiplicative_partitions(r):
        for blocks_b in multiplicative_partitions(s):
            if len(blocks_a) <= len(blocks_b):
                short, long_ = blocks_a, blocks_b
            else:
                short, long_ = blocks_b, blocks_a
            found.add(_best_matching_tuple(short, long_))
            if len(found) > cap:
                raise EnumerationCapError(cap, str(alpha))
    return frozenset(found)


def part_count_bound(alpha: ReducedRational, T: float) -> int:
    """Bound on the number of nontrivial parts in any minimizing
    representation at t <= T: floor((M(alpha)/log 2)**T + 1)."""
    if alpha.is_unit:
        raise DomainError("part count bound is undefined for +-1")
    if T <= 0:
        raise DomainError("T must be positive")
    return math.floor((mahler_measure(alpha) / LOG2) ** T + 1)
