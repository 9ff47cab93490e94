"""Simple undirected graphs: construction, named families, parsing, invariants.

Vertices are 0-based consecutive integers.  Graphs are immutable after
construction and hashable, so counting layers can memoize per graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContractViolation, FamilyError, GraphParseError
from .partitions import Composition


class Graph:
    """An immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "adj_mask", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ContractViolation(f"vertex count must be nonnegative: {n}")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractViolation(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ContractViolation(f"self loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(s) for s in adj)
        self.adj_mask = tuple(
            sum(1 << w for w in self.adj[v]) for v in range(n)
        )
        self._hash = hash((n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance, e.g. kind='fan', params=(4, 6)."""

    kind: str
    params: tuple[int, ...]


def path(n: int) -> Graph:
    """Path on n >= 1 vertices, edges i-(i+1)."""
    if n < 1:
        raise FamilyError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise FamilyError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise FamilyError(f"complete needs at least 1 vertex, got {n}")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"empty graph needs at least 1 vertex, got {n}")
    return Graph(n)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every cross edge; h is shifted by g.n."""
    off = g.n
    edges = list(g.edges)
    edges += [(u + off, v + off) for u, v in h.edges]
    edges += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def star(k: int) -> Graph:
    """Star with center 0 and k >= 1 leaves."""
    if k < 1:
        raise FamilyError(f"star needs at least 1 leaf, got {k}")
    return Graph(k + 1, ((0, i) for i in range(1, k + 1)))


def claw() -> Graph:
    """The star with three leaves."""
    return star(3)


def complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph; first class 0..m-1, second class m..m+n-1."""
    if m < 1 or n < 1:
        raise FamilyError(f"complete_bipartite needs positive sizes, got {m},{n}")
    return Graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def complete_tripartite(r: int, s: int, t: int) -> Graph:
    """Complete tripartite graph with classes of sizes r, s, t in label order."""
    if min(r, s, t) < 1:
        raise FamilyError(f"complete_tripartite needs positive sizes, got {r},{s},{t}")
    bounds = (0, r, r + s, r + s + t)
    edges = []
    for a in range(3):
        for b in range(a + 1, 3):
            edges += [
                (u, v)
                for u in range(bounds[a], bounds[a + 1])
                for v in range(bounds[b], bounds[b + 1])
            ]
    return Graph(r + s + t, edges)


def fan(m: int, n: int) -> Graph:
    """Join of m isolated vertices with a path on n vertices.

    The m independent vertices come first (0..m-1), then the path in order.
    """
    if m < 1 or n < 1:
        raise FamilyError(f"fan needs positive parameters, got {m},{n}")
    return join(empty_graph(m), path(n))


def wheel(n: int) -> Graph:
    """Wheel on n >= 4 vertices: hub 0 joined to a cycle on 1..n-1."""
    if n < 4:
        raise FamilyError(f"wheel needs at least 4 vertices, got {n}")
    return join(empty_graph(1), cycle(n - 1))


def windmill(n: int, d: int) -> Graph:
    """d copies of a complete graph on n vertices sharing vertex 0."""
    if n < 1 or d < 1:
        raise FamilyError(f"windmill needs positive parameters, got {n},{d}")
    edges = []
    nxt = 1
    for _ in range(d):
        blade = [0] + list(range(nxt, nxt + n - 1))
        nxt += n - 1
        edges += [(blade[i], blade[j]) for i in range(n) for j in range(i + 1, n)]
    return Graph(1 + d * (n - 1), edges)


def squid(m: int, legs: Iterable[int]) -> Graph:
    """An m-cycle with paths of the given edge lengths attached at cycle vertex 0.

    Simple graphs force m >= 3, and at least one leg of length >= 1 is required.
    """
    legs = tuple(legs)
    if m < 3:
        raise FamilyError(f"squid cycle length must be at least 3, got {m}")
    if not legs or any(l < 1 for l in legs):
        raise FamilyError(f"squid needs positive leg lengths, got {legs}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    nxt = m
    for l in legs:
        prev = 0
        for _ in range(l):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def spider(legs: Iterable[int]) -> Graph:
    """Paths of the given edge lengths joined at a common center vertex 0."""
    legs = tuple(legs)
    if not legs or any(l < 1 for l in legs):
        raise FamilyError(f"spider needs positive leg lengths, got {legs}")
    edges = []
    nxt = 1
    for l in legs:
        prev = 0
        for _ in range(l):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


_FAMILIES = {
    "path": (path, "path:n"),
    "cycle": (cycle, "cycle:n"),
    "complete": (complete, "complete:n"),
    "star": (star, "star:k"),
    "claw": (claw, "claw"),
    "complete_bipartite": (complete_bipartite, "complete_bipartite:m,n"),
    "complete_tripartite": (complete_tripartite, "complete_tripartite:r,s,t"),
    "fan": (fan, "fan:m,n"),
    "wheel": (wheel, "wheel:n"),
    "windmill": (windmill, "windmill:n,d"),
    "squid": (lambda m, *legs: squid(m, legs), "squid:m,l1,l2,..."),
    "spider": (lambda *legs: spider(legs), "spider:l1,l2,..."),
}


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph named by a FamilySpec."""
    if spec.kind not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise FamilyError(f"unknown family {spec.kind!r}; known kinds: {known}")
    builder, usage = _FAMILIES[spec.kind]
    try:
        return builder(*spec.params)
    except TypeError:
        raise FamilyError(
            f"wrong parameter count for {spec.kind!r}; usage: {usage}"
        ) from None


def parse_family(text: str) -> FamilySpec:
    """Parse 'kind:p1,p2,...' (a bare 'kind' means no parameters)."""
    body = text.strip()
    if body.startswith("family "):
        body = body[len("family "):].strip()
    kind, _, rest = body.partition(":")
    kind = kind.strip()
    if kind not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise FamilyError(f"unknown family {kind!r}; known kinds: {known}")
    params = []
    if rest.strip():
        for chunk in rest.split(","):
            chunk = chunk.strip()
            if not chunk.isdigit():
                raise FamilyError(f"bad family parameter {chunk!r} in {text!r}")
            params.append(int(chunk))
    return FamilySpec(kind, tuple(params))


def _parse_graph6(text: str) -> Graph:
    data = text.strip()
    raw = data.encode("ascii", errors="replace")
    if not raw:
        raise GraphParseError("empty graph6 input", 0)
    vals = []
    for i, b in enumerate(raw):
        if not (63 <= b <= 126):
            raise GraphParseError(f"byte {b} outside graph6 range", i)
        vals.append(b - 63)
    if vals[0] == 63:
        if len(vals) < 4:
            raise GraphParseError("truncated graph6 vertex count", len(raw))
        if vals[1] == 63:
            raise GraphParseError("graph6 inputs beyond 258047 vertices unsupported", 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        body_off = 4
    else:
        n = vals[0]
        body = vals[1:]
        body_off = 1
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise GraphParseError(
            f"graph6 needs {need} data bytes for n={n}, got {len(body)}", len(raw)
        )
    if len(body) > need:
        raise GraphParseError("trailing bytes after graph6 data", body_off + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] & (1 << (5 - k % 6)):
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _parse_edge_list(text: str) -> Graph:
    edges = []
    seen = -1
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped:
            toks = stripped.split()
            if len(toks) != 2:
                raise GraphParseError(
                    f"expected 'u v' per line, got {stripped!r}", offset
                )
            try:
                u, v = int(toks[0]), int(toks[1])
            except ValueError:
                raise GraphParseError(
                    f"non-integer vertex label in {stripped!r}", offset
                ) from None
            if u < 0 or v < 0 or u == v:
                raise GraphParseError(f"bad edge {u} {v}", offset)
            edges.append((u, v))
            seen = max(seen, u, v)
        offset += len(line)
    if not edges:
        raise GraphParseError("edge list is empty", 0)
    return Graph(seen + 1, edges)


def parse_graph(text: str, fmt: str = "family_dsl") -> Graph:
    """Parse a graph from text in one of: family_dsl, graph6, edge_list."""
    if fmt == "family_dsl":
        return build_family(parse_family(text))
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "edge_list":
        return _parse_edge_list(text)
    raise GraphParseError(f"unknown graph format {fmt!r}", 0)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ContractViolation("connectivity of the empty graph is undefined here")
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def component_orders(g: Graph, edge_subset: frozenset | None = None) -> Composition:
    """Sizes of connected components, using only edge_subset when given.

    Component sizes appear in order of their smallest vertex.
    """
    adj = [[] for _ in range(g.n)]
    for u, v in (g.edges if edge_subset is None else edge_subset):
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    sizes = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        size = 1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    size += 1
                    stack.append(w)
        sizes.append(size)
    return Composition(sizes)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The two color classes of a 2-coloring, or None if an odd cycle exists.

    Vertex 0's class comes first, which makes the answer canonical for
    connected graphs.
    """
    if g.n == 0:
        raise ContractViolation("bipartition of the empty graph is undefined here")
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    first = color[0]
    a = frozenset(v for v in range(g.n) if color[v] == first)
    b = frozenset(v for v in range(g.n) if color[v] != first)
    return a, b


def independence_number(g: Graph) -> int:
    """Exact maximum stable set size by branch and bound."""
    if g.n == 0:
        raise ContractViolation("independence number needs at least one vertex")
    adj = g.adj_mask
    full = (1 << g.n) - 1
    best = 0

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def grow(avail: int, size: int) -> None:
        nonlocal best
        if size + popcount(avail) <= best:
            return
        if not avail:
            best = max(best, size)
            return
        # Branch on a maximum-degree available vertex: exclude it or take it.
        v = max(
            (m for m in range(g.n) if avail >> m & 1),
            key=lambda m: popcount(adj[m] & avail),
        )
        take_bit = 1 << v
        grow(avail & ~take_bit & ~adj[v], size + 1)
        grow(avail & ~take_bit, size)

    grow(full, 0)
    return best


def chromatic_polynomial_at(g: Graph, k: int) -> int:
    """Number of proper colorings with k colors, by deletion and contraction.

    Memoizes on the labeled edge set within this call only.
    """
    if k < 0:
        raise ContractViolation(f"color count must be nonnegative: {k}")
    memo: dict[tuple[int, frozenset], int] = {}

    def count(n: int, edges: frozenset) -> int:
        if not edges:
            return k**n
        key = (n, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        u, v = min(edges)
        deleted = edges - {(u, v)}
        # Contract v into u, relabel w > v down by one, drop parallel copies.
        contracted = set()
        for a, b in deleted:
            a2 = u if a == v else (a - 1 if a > v else a)
            b2 = u if b == v else (b - 1 if b > v else b)
            if a2 != b2:
                contracted.add((a2, b2) if a2 < b2 else (b2, a2))
        out = count(n, deleted) - count(n - 1, frozenset(contracted))
        memo[key] = out
        return out

    return count(g.n, g.edges)
