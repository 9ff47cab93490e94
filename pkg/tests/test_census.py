from collections import Counter

from chromsym.census import (
    count_of_type,
    has_connected_partition_of_type,
    has_stable_partition_of_type,
    stable_partition_census,
)
from chromsym.graphs import Graph, bipartition, independence_number, parse_graph
from chromsym.partitions import Partition, partitions_of, sort_to_partition


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in _set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [first]] + partial[i + 1 :]
        yield [[first]] + partial


def _census_by_enumeration(g: Graph) -> Counter:
    counts = Counter()
    for blocks in _set_partitions(list(range(g.n))):
        stable = all(
            not (u in block and v in block) for u, v in g.edges for block in blocks
        )
        if stable:
            counts[sort_to_partition(tuple(len(b) for b in blocks))] += 1
    return counts


def test_census_matches_enumeration():
    specs = [
        "claw", "path:5", "cycle:5", "complete:5", "wheel:5",
        "complete_bipartite:2,3", "fan:2,3", "squid:3,1,1", "star:6",
    ]
    for spec in specs:
        g = parse_graph(spec, "family_dsl")
        expected = _census_by_enumeration(g)
        census = stable_partition_census(g)
        assert census.n == g.n
        assert dict(census.counts) == dict(expected), spec


def test_census_claw():
    census = stable_partition_census(parse_graph("claw", "family_dsl"))
    assert census.count(Partition((3, 1))) == 1
    assert census.count(Partition((2, 1, 1))) == 3
    assert census.count(Partition((1, 1, 1, 1))) == 1
    assert census.count(Partition((2, 2))) == 0
    assert census.count(Partition((4,))) == 0


def test_count_of_type_agrees_with_census():
    for spec in ["path:6", "cycle:6", "complete_bipartite:3,3", "wheel:6"]:
        g = parse_graph(spec, "family_dsl")
        census = stable_partition_census(g)
        for lam in partitions_of(g.n):
            assert count_of_type(g, lam) == census.count(lam), (spec, lam)
            assert has_stable_partition_of_type(g, lam) == (census.count(lam) > 0)


def test_complete_multipartite_counts():
    # In K_{s,s,s} the only stable partition of type (s,s,s) takes the
    # three sides themselves.
    for s in (1, 2, 3):
        g = parse_graph(f"complete_tripartite:{s},{s},{s}", "family_dsl")
        assert count_of_type(g, Partition((s,) * 3)) == 1
    g = parse_graph("complete_tripartite:3,3,4", "family_dsl")
    assert count_of_type(g, Partition((4, 3, 2, 1))) == 6


def test_stable_parts_bounded_by_independence_number():
    for spec in ["wheel:6", "fan:2,4", "complete_bipartite:2,4", "cycle:7"]:
        g = parse_graph(spec, "family_dsl")
        alpha = independence_number(g)
        for lam in stable_partition_census(g).counts:
            assert lam[0] <= alpha


def test_connected_bipartite_has_unique_stable_bipartition():
    # The two sides of a connected bipartite graph form a stable partition,
    # and in a complete bipartite graph no other two-block one exists.
    for spec in ["path:5", "cycle:6", "complete_bipartite:3,4", "star:5"]:
        g = parse_graph(spec, "family_dsl")
        two_block = {
            lam: count
            for lam, count in stable_partition_census(g).counts.items()
            if len(lam) == 2
        }
        a, b = bipartition(g)
        lam = sort_to_partition((len(a), len(b)))
        assert two_block.get(lam, 0) >= 1
        if spec == "complete_bipartite:3,4":
            assert two_block == {lam: 1}


def test_connected_partition_examples():
    p4 = parse_graph("path:4", "family_dsl")
    assert has_connected_partition_of_type(p4, Partition((2, 2)))
    assert has_connected_partition_of_type(p4, Partition((4,)))
    assert has_connected_partition_of_type(p4, Partition((3, 1)))
    claw = parse_graph("claw", "family_dsl")
    # Removing the centre strands the leaves: no two blocks of size 2.
    assert not has_connected_partition_of_type(claw, Partition((2, 2)))
    assert has_connected_partition_of_type(claw, Partition((2, 1, 1)))
    k4 = parse_graph("complete:4", "family_dsl")
    for lam in partitions_of(4):
        assert has_connected_partition_of_type(k4, lam)


def test_connected_partition_matches_enumeration():
    from itertools import combinations

    def brute(g: Graph, lam) -> bool:
        def parts_connected(blocks) -> bool:
            for block in blocks:
                seen = {min(block)}
                frontier = [min(block)]
                while frontier:
                    v = frontier.pop()
                    for w in g.adj[v]:
                        if w in block and w not in seen:
                            seen.add(w)
                            frontier.append(w)
                if seen != set(block):
                    return False
            return True

        def assign(rest, sizes):
            if not sizes:
                return not rest
            if not rest:
                return False
            anchor = min(rest)
            size = sizes[0]
            for others in combinations(sorted(rest - {anchor}), size - 1):
                block = {anchor, *others}
                if parts_connected([block]) and assign(rest - block, sizes[1:]):
                    return True
            return False

        return assign(frozenset(range(g.n)), list(lam))

    for spec in ["path:5", "claw", "cycle:5", "squid:3,1,1", "wheel:5"]:
        g = parse_graph(spec, "family_dsl")
        for lam in partitions_of(g.n):
            assert has_connected_partition_of_type(g, lam) == brute(g, lam), (
                spec,
                lam,
            )


def test_census_json():
    data = stable_partition_census(parse_graph("claw", "family_dsl")).to_json()
    assert data["n"] == 4
    assert data["counts"][0] == {"type": "3,1", "count": "1"}
    types = [row["type"] for row in data["counts"]]
    assert types == ["3,1", "2,1,1", "1,1,1,1"]
