"""Stable partitions of a graph: full census and type-targeted counting.

A stable partition splits the vertex set into blocks that each induce no
edge; its type is the block sizes sorted into a partition.  Counts here
feed both the monomial expansion and the rim hook coefficient formula, so
everything is memoized per graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContractViolation
from .graphs import Graph
from .partitions import Partition, partitions_of


@dataclass(frozen=True)
class StableCensus:
    """Counts of stable partitions of one graph, keyed by type."""

    n: int
    counts: dict[Partition, int]

    def count(self, lam: Partition) -> int:
        return self.counts.get(lam, 0)

    def to_json(self) -> dict:
        ordered = [lam for lam in partitions_of(self.n) if lam in self.counts]
        return {
            "n": self.n,
            "counts": [
                {"type": ",".join(map(str, lam)), "count": str(self.counts[lam])}
                for lam in ordered
            ],
        }


def _degree_order(g: Graph) -> tuple[list[int], list[int]]:
    """Vertices sorted by descending degree, plus adjacency masks in that order."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    masks = [0] * g.n
    for i, v in enumerate(order):
        m = 0
        for w in g.adj[v]:
            m |= 1 << pos[w]
        masks[i] = m
    return order, masks


@lru_cache(maxsize=None)
def stable_partition_census(g: Graph) -> StableCensus:
    """Enumerate every stable partition of g and tally the types."""
    if g.n == 0:
        raise ContractViolation("census needs at least one vertex")
    _, masks = _degree_order(g)
    n = g.n
    counts: Counter[tuple[int, ...]] = Counter()
    blocks: list[int] = []
    sizes: list[int] = []

    def assign(i: int) -> None:
        if i == n:
            counts[tuple(sorted(sizes, reverse=True))] += 1
            return
        bit = 1 << i
        nbrs = masks[i]
        for b in range(len(blocks)):
            if blocks[b] & nbrs == 0:
                blocks[b] |= bit
                sizes[b] += 1
                assign(i + 1)
                sizes[b] -= 1
                blocks[b] &= ~bit
        blocks.append(bit)
        sizes.append(1)
        assign(i + 1)
        blocks.pop()
        sizes.pop()

    assign(0)
    return StableCensus(n, {Partition(t): c for t, c in counts.items()})


def _count_by_type(g: Graph, lam: Partition, stop_at_first: bool) -> int:
    if lam.weight != g.n:
        raise ContractViolation(
            f"type weight {lam.weight} does not match vertex count {g.n}"
        )
    _, masks = _degree_order(g)
    n = g.n
    unopened = Counter(lam)
    open_caps: list[int] = []
    open_masks: list[int] = []
    found = 0

    def assign(i: int) -> bool:
        nonlocal found
        if i == n:
            found += 1
            return stop_at_first
        bit = 1 << i
        nbrs = masks[i]
        for b in range(len(open_caps)):
            if open_caps[b] > 0 and open_masks[b] & nbrs == 0:
                open_caps[b] -= 1
                open_masks[b] |= bit
                done = assign(i + 1)
                open_masks[b] &= ~bit
                open_caps[b] += 1
                if done:
                    return True
        # Open one new block per distinct unused size; same-size blocks are
        # interchangeable, so fixing the opening order counts each partition once.
        for size in list(unopened):
            if unopened[size] == 0:
                continue
            unopened[size] -= 1
            open_caps.append(size - 1)
            open_masks.append(bit)
            done = assign(i + 1)
            open_masks.pop()
            open_caps.pop()
            unopened[size] += 1
            if done:
                return True
        return False

    assign(0)
    return found


@lru_cache(maxsize=None)
def count_of_type(g: Graph, lam: Partition) -> int:
    """Number of stable partitions of g with the given type.

    Backtracks against the size budget directly; never builds the full census.
    """
    return _count_by_type(g, lam, stop_at_first=False)


@lru_cache(maxsize=None)
def has_stable_partition_of_type(g: Graph, lam: Partition) -> bool:
    """Existence version of count_of_type with early exit."""
    return _count_by_type(g, lam, stop_at_first=True) > 0


def _connected_subsets(adj: tuple[int, ...], start: int, size: int, allowed: int):
    """Yield vertex masks of connected size-'size' subsets of 'allowed' containing start.

    Include/exclude branching over the frontier keeps each subset unique.
    """
    start_bit = 1 << start

    def grow(cur: int, count: int, frontier: int, banned: int):
        if count == size:
            yield cur
            return
        f = frontier
        while f:
            u_bit = f & -f
            f &= f - 1
            u = u_bit.bit_length() - 1
            new_frontier = (frontier | (adj[u] & allowed)) & ~(cur | u_bit) & ~banned
            yield from grow(cur | u_bit, count + 1, new_frontier, banned)
            banned |= u_bit
            frontier &= ~u_bit

    yield from grow(start_bit, 1, adj[start] & allowed & ~start_bit, 0)


@lru_cache(maxsize=None)
def has_connected_partition_of_type(g: Graph, lam: Partition) -> bool:
    """Can V(g) be split into blocks of the given sizes, each inducing a connected subgraph?"""
    if lam.weight != g.n:
        raise ContractViolation(
            f"type weight {lam.weight} does not match vertex count {g.n}"
        )
    adj = g.adj_mask
    full = (1 << g.n) - 1

    def cover(remaining: int, sizes: tuple[int, ...]) -> bool:
        if not remaining:
            return True
        v = (remaining & -remaining).bit_length() - 1
        tried = set()
        for idx, s in enumerate(sizes):
            if s in tried:
                continue
            tried.add(s)
            rest = sizes[:idx] + sizes[idx + 1 :]
            for mask in _connected_subsets(adj, v, s, remaining):
                if cover(remaining & ~mask, rest):
                    return True
        return False

    return cover(full, tuple(lam))
