"""Special rim hook tabloids and the Kostka matrix with its inverse.

A special rim hook tabloid tiles a Young diagram with rim hooks that each
meet the first column.  Peeling the hook through the last row's first
column cell is always forced once its top row is chosen, which gives a
clean recursion: with rows counted from the longest row, choosing top row
r in a shape with l rows removes a hook of length shape[r-1] + l - r that
spans l - r + 1 rows and leaves shape[:r-1] plus the decremented tail.

The content lists hook lengths in peel order, and the sign of a tabloid is
(-1) raised to the number of hooks spanning an even number of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .errors import ContractViolation
from .partitions import Composition, Partition, sort_to_partition


@dataclass(frozen=True)
class SpecialTabloid:
    """One rim hook tiling: shape, hook lengths in peel order, rows spanned."""

    shape: Partition
    content: Composition
    row_spans: tuple[int, ...]

    @property
    def even_span_count(self) -> int:
        return sum(1 for s in self.row_spans if s % 2 == 0)

    @property
    def sign(self) -> int:
        return -1 if self.even_span_count % 2 else 1

    def to_json(self) -> dict:
        return {
            "shape": ",".join(map(str, self.shape)),
            "content": ",".join(map(str, self.content)),
            "row_spans": ",".join(map(str, self.row_spans)),
            "even_spans": self.even_span_count,
        }


@cache
def _tilings(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All (content, row_spans) pairs for a shape, via the peel recursion."""
    if not shape:
        return (((), ()),)
    out = []
    rows = len(shape)
    for r in range(1, rows + 1):
        hook = shape[r - 1] + rows - r
        span = rows - r + 1
        rest = shape[: r - 1] + tuple(p - 1 for p in shape[r:] if p > 1)
        for content, spans in _tilings(rest):
            out.append(((hook,) + content, (span,) + spans))
    return tuple(out)


@cache
def special_tabloids(shape: Partition) -> tuple[SpecialTabloid, ...]:
    """Every special rim hook tabloid of the shape, sorted by content."""
    raw = sorted(_tilings(tuple(shape)))
    return tuple(
        SpecialTabloid(shape, Composition(content), spans) for content, spans in raw
    )


def tabloid_for_content(shape: Partition, content: Composition) -> SpecialTabloid | None:
    """The unique tabloid with the given hook lengths in peel order, if any.

    Candidate hook lengths strictly decrease as the chosen top row moves
    down, so every peel step is forced and the whole walk is deterministic.
    """
    if shape.weight != sum(content):
        raise ContractViolation(
            f"content weight {sum(content)} does not match shape weight {shape.weight}"
        )
    cur = tuple(shape)
    spans = []
    for hook in content:
        rows = len(cur)
        if rows == 0:
            return None
        # hook length at top row r is cur[r-1] + rows - r
        r = next(
            (r for r in range(1, rows + 1) if cur[r - 1] + rows - r == hook), None
        )
        if r is None:
            return None
        spans.append(rows - r + 1)
        cur = cur[: r - 1] + tuple(p - 1 for p in cur[r:] if p > 1)
    if cur:
        return None
    return SpecialTabloid(shape, Composition(content), tuple(spans))


@cache
def _signed_content_counts(shape: Partition) -> dict[Partition, int]:
    """Sum of tabloid signs grouped by sorted content."""
    out: dict[Partition, int] = {}
    for tab in special_tabloids(shape):
        key = sort_to_partition(tab.content)
        out[key] = out.get(key, 0) + tab.sign
    return out


def inverse_kostka(mu: Partition, lam: Partition) -> int:
    """Coefficient of the Schur function s_lam in the monomial m_mu."""
    if mu.weight != lam.weight:
        raise ContractViolation(
            f"weights differ: {mu.weight} != {lam.weight}"
        )
    return _signed_content_counts(lam).get(mu, 0)


def _horizontal_strip_removals(shape: tuple[int, ...], size: int):
    """Yield shapes obtained by removing a horizontal strip of the given size."""

    def walk(i: int, remaining: int, acc: tuple[int, ...]):
        if i == len(shape):
            if remaining == 0:
                yield tuple(p for p in acc if p > 0)
            return
        below = shape[i + 1] if i + 1 < len(shape) else 0
        upper = shape[i] - below
        for take in range(min(upper, remaining), -1, -1):
            new_part = shape[i] - take
            if acc and acc[-1] < new_part:
                continue
            if new_part < below:
                continue
            yield from walk(i + 1, remaining - take, acc + (new_part,))

    yield from walk(0, size, ())


@cache
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if lam.weight != mu.weight:
        raise ContractViolation(
            f"weights differ: {lam.weight} != {mu.weight}"
        )

    @cache
    def count(shape: tuple[int, ...], letters: int) -> int:
        if letters == 0:
            return 1 if not shape else 0
        total = 0
        for smaller in _horizontal_strip_removals(shape, mu[letters - 1]):
            total += count(smaller, letters - 1)
        return total

    return count(tuple(lam), len(mu))
