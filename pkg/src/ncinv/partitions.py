"""Set partitions of {1,...,n} and the noncrossing lattice NC(n).

Partitions are kept in canonical form: every block is a sorted tuple and the
blocks are listed in order of their minima.  Elements are 1-based, matching
the usual diagram labelling.  Everything in this module is exact integer
combinatorics on immutable values; all functions are pure and safe to call
concurrently.

A partition serialises to JSON as a list of blocks, e.g. ``[[1,5,6],[2,3],[4]]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb


def catalan(n: int) -> int:
    """The Catalan number C_n = binom(2n, n) / (n + 1).

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True, eq=False)
class SetPartition:
    """A partition of {1,...,n} into disjoint nonempty blocks.

    Blocks are canonicalised on construction (each block sorted, blocks
    ordered by minimum), so equality and hashing are structural.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ground set size must be nonnegative")
        raw = [tuple(sorted(block)) for block in self.blocks]
        if any(not block for block in raw):
            raise ValueError("blocks must be nonempty")
        raw.sort(key=lambda block: block[0])
        object.__setattr__(self, "blocks", tuple(raw))
        support = sorted(x for block in raw for x in block)
        if support != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition 1..{self.n}: {raw!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    @cached_property
    def block_index(self) -> dict[int, int]:
        """Element -> index of its block in the canonical block list."""
        return {x: i for i, block in enumerate(self.blocks) for x in block}

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self.block_index[x]]

    def same_block(self, x: int, y: int) -> bool:
        return self.block_index[x] == self.block_index[y]

    def to_json(self) -> list[list[int]]:
        return [list(block) for block in self.blocks]

    @classmethod
    def from_json(cls, data: list[list[int]]) -> "SetPartition":
        n = sum(len(block) for block in data)
        return cls(n, tuple(tuple(block) for block in data))


class PairPartition(SetPartition):
    """A set partition all of whose blocks are pairs (a perfect matching)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n % 2:
            raise ValueError("pair partitions need an even ground set")
        if any(len(block) != 2 for block in self.blocks):
            raise ValueError("all blocks of a pair partition must have size 2")

    @property
    def chords(self) -> tuple[tuple[int, ...], ...]:
        return self.blocks


@dataclass(frozen=True)
class IntervalPartition:
    """The partition of [k_1+...+k_m] into consecutive intervals of sizes k_i."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(k) for k in self.sizes)
        if any(k <= 0 for k in sizes):
            raise ValueError("interval sizes must be positive")
        object.__setattr__(self, "sizes", sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @cached_property
    def partition(self) -> SetPartition:
        blocks = []
        start = 1
        for k in self.sizes:
            blocks.append(tuple(range(start, start + k)))
            start += k
        return SetPartition(self.n, tuple(blocks))

    @cached_property
    def interval_of(self) -> dict[int, int]:
        """Element -> 0-based index of the interval containing it."""
        out: dict[int, int] = {}
        start = 1
        for i, k in enumerate(self.sizes):
            for x in range(start, start + k):
                out[x] = i
            start += k
        return out


def zero_partition(n: int) -> SetPartition:
    """The minimal element of NC(n): all blocks singletons."""
    return SetPartition(n, tuple((x,) for x in range(1, n + 1)))


def one_partition(n: int) -> SetPartition:
    """The maximal element of NC(n): a single block (empty when n = 0)."""
    if n == 0:
        return SetPartition(0, ())
    return SetPartition(n, (tuple(range(1, n + 1)),))


def kernel(values) -> SetPartition:
    """The partition of positions 1..len(values) by equal values.

    >>> kernel([7, 7, 9]).blocks
    ((1, 2), (3,))
    """
    items = list(values)
    groups: dict[object, list[int]] = {}
    for i, v in enumerate(items, start=1):
        groups.setdefault(v, []).append(i)
    return SetPartition(len(items), tuple(tuple(g) for g in groups.values()))


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no quadruple i < i' < j < j' has i ~ j and i' ~ j' in
    different blocks.

    Linear scan with a stack of open blocks: whenever a block is revisited it
    must be the innermost open one.
    """
    idx = p.block_index
    stack: list[int] = []
    for x in range(1, p.n + 1):
        bid = idx[x]
        block = p.blocks[bid]
        if x == block[0]:
            if x != block[-1]:
                stack.append(bid)
        else:
            if not stack or stack[-1] != bid:
                return False
            if x == block[-1]:
                stack.pop()
    return True


def crossing_count(p: SetPartition) -> int:
    """Number of quadruples i < i' < j < j' with i ~ j, i' ~ j', i not~ i'."""
    chords = [
        (a, b, bid)
        for bid, block in enumerate(p.blocks)
        for a, b in itertools.combinations(block, 2)
    ]
    count = 0
    for (a, b, ba), (c, d, bc) in itertools.combinations(chords, 2):
        if ba == bc:
            continue
        if a < c < b < d or c < a < d < b:
            count += 1
    return count


def _iter_nc_blocks(lo: int, hi: int, interval_of: dict[int, int] | None = None):
    """Yield canonical block tuples of all noncrossing partitions of [lo..hi].

    With ``interval_of`` given, only partitions whose blocks take at most one
    element from each interval are produced (pruned during the search).

    The block containing lo splits the rest into independent gaps; recursing
    over gaps and the tail visits each noncrossing partition exactly once,
    with the blocks already ordered by minimum.
    """
    if lo > hi:
        yield ()
        return

    def rec(last: int, block: list[int], intervals: set[int], acc: tuple):
        for tail in _iter_nc_blocks(last + 1, hi, interval_of):
            yield (tuple(block),) + acc + tail
        for x in range(last + 1, hi + 1):
            if interval_of is not None:
                iv = interval_of[x]
                if iv in intervals:
                    continue
            for gap in _iter_nc_blocks(last + 1, x - 1, interval_of):
                block.append(x)
                if interval_of is not None:
                    intervals.add(iv)
                yield from rec(x, block, intervals, acc + gap)
                block.pop()
                if interval_of is not None:
                    intervals.remove(iv)

    start_intervals = {interval_of[lo]} if interval_of is not None else set()
    yield from rec(lo, [lo], start_intervals, ())


def iter_nc_blocks(n: int, interval_of: dict[int, int] | None = None):
    """Raw enumeration of NC(n) as canonical block tuples (no wrapping)."""
    return _iter_nc_blocks(1, n, interval_of)


def enumerate_nc(n: int) -> list[SetPartition]:
    """All noncrossing partitions of [n] in lexicographic canonical order.

    >>> len(enumerate_nc(3))
    5
    """
    parts = [SetPartition(n, blocks) for blocks in _iter_nc_blocks(1, n)]
    parts.sort(key=lambda p: p.blocks)
    return parts


def _iter_nc_matchings(n: int, interval_size: int = 1):
    """Yield chord tuples of noncrossing perfect matchings of [n] with no
    chord inside one window of `interval_size` consecutive positions.

    Positions are scanned left to right; each either opens a new chord or
    closes the most recent open one (the stack discipline is exactly
    noncrossingness).  Closing against an opener from the current window is
    forbidden, which prunes non-partite branches immediately.
    """
    if n == 0:
        yield ()
        return
    if n % 2:
        return
    chords: list[tuple[int, int]] = []
    stack: list[int] = []

    def rec(t: int):
        if t > n:
            yield tuple(sorted(chords))
            return
        remaining_after = n - t
        if stack and (stack[-1] - 1) // interval_size != (t - 1) // interval_size:
            p = stack.pop()
            chords.append((p, t))
            yield from rec(t + 1)
            chords.pop()
            stack.append(p)
        if len(stack) + 1 <= remaining_after:
            stack.append(t)
            yield from rec(t + 1)
            stack.pop()

    yield from rec(1)


def enumerate_nc_pairings(n: int) -> list[PairPartition]:
    """All noncrossing perfect matchings of [n]; empty for odd n.

    >>> [p.blocks for p in enumerate_nc_pairings(4)]
    [((1, 2), (3, 4)), ((1, 4), (2, 3))]
    """
    return [PairPartition(n, ch) for ch in sorted(_iter_nc_matchings(n, 1))]


def is_m_partite(p: SetPartition, d: int) -> bool:
    """True iff every block takes at most one element from each of the
    consecutive intervals {kd+1,...,(k+1)d}."""
    if d == 0:
        if p.n != 0:
            raise ValueError("interval size 0 needs an empty ground set")
        return True
    if p.n % d:
        raise ValueError(f"ground set size {p.n} not divisible by interval size {d}")
    for block in p.blocks:
        intervals = [(x - 1) // d for x in block]
        if len(set(intervals)) != len(intervals):
            return False
    return True


def enumerate_m_partite_nc_pairings(m: int, d: int) -> list[PairPartition]:
    """All noncrossing pair partitions of [md] that are m-partite for
    interval size d; empty when md is odd."""
    n = m * d
    return [PairPartition(n, ch) for ch in sorted(_iter_nc_matchings(n, max(d, 1)))]


def count_m_partite_nc_pairings(m: int, d: int) -> int:
    """len(enumerate_m_partite_nc_pairings(m, d)) without materialising."""
    return sum(1 for _ in _iter_nc_matchings(m * d, max(d, 1)))


def leq(p: SetPartition, q: SetPartition) -> bool:
    """Refinement order: every block of p lies inside some block of q."""
    if p.n != q.n:
        raise ValueError("mismatched ground sets")
    qidx = q.block_index
    for block in p.blocks:
        target = qidx[block[0]]
        if any(qidx[x] != target for x in block):
            return False
    return True


def meet(p: SetPartition, q: SetPartition) -> SetPartition:
    """Common refinement: i ~ j iff i ~_p j and i ~_q j."""
    if p.n != q.n:
        raise ValueError("mismatched ground sets")
    pidx, qidx = p.block_index, q.block_index
    return kernel([(pidx[x], qidx[x]) for x in range(1, p.n + 1)])


def nc_moebius(p: SetPartition, q: SetPartition) -> int:
    """Moebius function of the interval [p, q] inside the lattice NC(n).

    Computed by the generic recursion mu(q,q)=1, mu(p,q) = -sum of mu(s,q)
    over p < s <= q; the closed form mu(0,1) = (-1)^(n-1) C_(n-1) is a test
    oracle, not the implementation.
    """
    if p.n != q.n:
        raise ValueError("mismatched ground sets")
    if not leq(p, q):
        raise ValueError("p must refine q")
    n = p.n
    interval = [
        s
        for s in (SetPartition(n, blocks) for blocks in _iter_nc_blocks(1, n))
        if leq(p, s) and leq(s, q)
    ]
    # Coarser partitions have fewer blocks, so computing mu(., q) in order of
    # increasing block count only ever looks at finished values.
    interval.sort(key=lambda s: len(s.blocks))
    mu: dict[SetPartition, int] = {}
    for s in interval:
        if s == q:
            mu[s] = 1
        else:
            mu[s] = -sum(mu[t] for t in interval if t in mu and t != s and leq(s, t))
    return mu[p]


def is_irreducible(p: SetPartition) -> bool:
    """True iff the leftmost and rightmost elements share a block."""
    if p.n == 0:
        return True
    return p.same_block(1, p.n)


def thicken(p: PairPartition, m: int, d: int) -> SetPartition:
    """Collapse an m-partite noncrossing pairing of [md] (d even) to a
    partition of [md/2] by identifying positions 2t-1, 2t with the point t;
    bundles of nested parallel chords then merge into single blocks.

    The result is m-partite without singletons for interval size d/2, and
    the map is a bijection onto such partitions (see ``unthicken``).
    """
    if d % 2:
        raise ValueError("interval size must be even to thicken")
    n = m * d
    if p.n != n:
        raise ValueError(f"expected a pairing of [{n}], got ground set {p.n}")
    if any(len(block) != 2 for block in p.blocks):
        raise ValueError("thicken needs a pair partition")
    if not is_noncrossing(p):
        raise ValueError("pairing must be noncrossing")
    if not is_m_partite(p, d):
        raise ValueError("pairing must be m-partite")
    half = n // 2
    parent = list(range(half + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in p.blocks:
        ra, rb = find((a + 1) // 2), find((b + 1) // 2)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for t in range(1, half + 1):
        groups.setdefault(find(t), []).append(t)
    return SetPartition(half, tuple(tuple(g) for g in groups.values()))


def unthicken(q: SetPartition, m: int, d: int) -> PairPartition:
    """Inverse of ``thicken``: each block {t_1 < ... < t_k} becomes the nested
    chord bundle {2t_1 - 1, 2t_k} and {2t_i, 2t_{i+1} - 1} for i < k."""
    if d % 2:
        raise ValueError("interval size must be even to unthicken")
    half = m * d // 2
    if q.n != half:
        raise ValueError(f"expected a partition of [{half}], got ground set {q.n}")
    if any(len(block) < 2 for block in q.blocks):
        raise ValueError("partition must have no singletons")
    if not is_noncrossing(q):
        raise ValueError("partition must be noncrossing")
    if d >= 2 and not is_m_partite(q, d // 2):
        raise ValueError("partition must be m-partite")
    chords: list[tuple[int, int]] = []
    for block in q.blocks:
        chords.append((2 * block[0] - 1, 2 * block[-1]))
        for t, t_next in zip(block, block[1:]):
            chords.append((2 * t, 2 * t_next - 1))
    return PairPartition(m * d, tuple(chords))
