import json
from itertools import product

import pytest

from chromsym.census import count_of_type
from chromsym.errors import EdgeCapacityError
from chromsym.expansions import (
    SymFuncExpansion,
    csf_elementary,
    csf_monomial,
    csf_power,
    csf_schur,
    e_to_s,
    evaluate_ones,
    format_expansion,
    m_to_s,
    schur_coefficient,
)
from chromsym.graphs import Graph, chromatic_polynomial_at, parse_graph
from chromsym.partitions import (
    Partition,
    multiplicity_factorial,
    partitions_of,
    sort_to_partition,
)
from chromsym.rimhooks import special_tabloids


def _colorings_with_class_sizes(g: Graph, lam) -> int:
    # Proper colorings using color i on exactly lam[i] vertices.
    hits = 0
    for kappa in product(range(len(lam)), repeat=g.n):
        if any(kappa[u] == kappa[v] for u, v in g.edges):
            continue
        sizes = tuple(kappa.count(i) for i in range(len(lam)))
        if sizes == tuple(lam):
            hits += 1
    return hits


def test_monomial_matches_coloring_enumeration():
    for spec in ["path:3", "claw", "cycle:3", "path:5", "cycle:5"]:
        g = parse_graph(spec, "family_dsl")
        exp = csf_monomial(g)
        assert exp.basis == "m"
        assert exp.degree == g.n
        for lam in partitions_of(g.n):
            assert exp.coefficient(lam) == _colorings_with_class_sizes(g, lam), (
                spec,
                lam,
            )


def test_monomial_known_values():
    p3 = csf_monomial(parse_graph("path:3", "family_dsl"))
    assert dict(p3.coefficients) == {(2, 1): 1, (1, 1, 1): 6}
    claw = csf_monomial(parse_graph("claw", "family_dsl"))
    assert dict(claw.coefficients) == {
        (3, 1): 1,
        (2, 1, 1): 6,
        (1, 1, 1, 1): 24,
    }


def test_power_known_values():
    p3 = csf_power(parse_graph("path:3", "family_dsl"))
    assert dict(p3.coefficients) == {(3,): 1, (2, 1): -2, (1, 1, 1): 1}
    k3 = csf_power(parse_graph("complete:3", "family_dsl"))
    assert dict(k3.coefficients) == {(3,): 2, (2, 1): -3, (1, 1, 1): 1}
    # Signs alternate with the number of edges chosen, so the top term of a
    # forest is (-1)^(n - length) on each type that appears.
    p5 = csf_power(parse_graph("path:5", "family_dsl"))
    for lam, coeff in p5.terms():
        assert coeff != 0
        assert (coeff > 0) == ((5 - len(lam)) % 2 == 0)


def test_power_edge_cap():
    g = parse_graph("claw", "family_dsl")
    with pytest.raises(EdgeCapacityError) as info:
        csf_power(g, edge_cap=2)
    assert "monomial" in str(info.value)
    # complete:8 has 28 edges, over the default cap.
    with pytest.raises(EdgeCapacityError):
        csf_power(parse_graph("complete:8", "family_dsl"))


def test_power_agrees_with_monomial_at_ones():
    for spec in ["claw", "cycle:5", "complete_bipartite:2,3"]:
        g = parse_graph(spec, "family_dsl")
        pexp = csf_power(g)
        mexp = csf_monomial(g)
        for k in range(0, 5):
            chrom = chromatic_polynomial_at(g, k)
            assert evaluate_ones(pexp, k) == chrom
            assert evaluate_ones(mexp, k) == chrom


def test_schur_coefficient_values():
    claw = parse_graph("claw", "family_dsl")
    assert schur_coefficient(claw, Partition((2, 2))) == -1
    assert schur_coefficient(claw, Partition((3, 1))) == 1
    assert schur_coefficient(claw, Partition((4,))) == 0
    k3 = parse_graph("complete:3", "family_dsl")
    assert schur_coefficient(k3, Partition((1, 1, 1))) == 6
    sq = parse_graph("squid:5,1,1,1", "family_dsl")
    assert schur_coefficient(sq, Partition((3, 3, 2))) == -8


def test_schur_full_expansion_claw():
    exp = csf_schur(parse_graph("claw", "family_dsl"))
    assert dict(exp.coefficients) == {
        (3, 1): 1,
        (2, 2): -1,
        (2, 1, 1): 5,
        (1, 1, 1, 1): 8,
    }
    assert exp.terms()[0] == ((3, 1), 1)


def test_schur_coefficient_filter_is_harmless():
    # Dropping the tabloid filters must not change any coefficient: the
    # skipped tabloids pair with stable partition counts of zero.
    for spec in ["claw", "squid:3,1,1", "cycle:5"]:
        g = parse_graph(spec, "family_dsl")
        for lam in partitions_of(g.n):
            unfiltered = 0
            for tab in special_tabloids(lam):
                mu = sort_to_partition(tab.content)
                unfiltered += (
                    tab.sign * multiplicity_factorial(mu) * count_of_type(g, mu)
                )
            assert unfiltered == schur_coefficient(g, lam), (spec, lam)


def test_dual_route_expansions_agree():
    for spec in ["claw", "path:5", "wheel:5", "complete_bipartite:2,3", "fan:2,3"]:
        g = parse_graph(spec, "family_dsl")
        schur = csf_schur(g)
        assert m_to_s(csf_monomial(g)).coefficients == schur.coefficients
        assert e_to_s(csf_elementary(g)).coefficients == schur.coefficients


def test_elementary_known_values():
    k3 = csf_elementary(parse_graph("complete:3", "family_dsl"))
    assert dict(k3.coefficients) == {(3,): 6}
    c5 = csf_elementary(parse_graph("cycle:5", "family_dsl"))
    assert all(coeff > 0 for _, coeff in c5.terms())


def test_evaluate_ones():
    p21 = SymFuncExpansion("p", 3, {Partition((2, 1)): 1})
    assert evaluate_ones(p21, 3) == 9
    m11 = SymFuncExpansion("m", 2, {Partition((1, 1)): 1})
    assert evaluate_ones(m11, 2) == 1
    assert evaluate_ones(m11, 3) == 3
    e2 = SymFuncExpansion("e", 2, {Partition((2,)): 1})
    assert evaluate_ones(e2, 3) == 3
    s21 = SymFuncExpansion("s", 3, {Partition((2, 1)): 1})
    assert evaluate_ones(s21, 3) == 8
    assert evaluate_ones(s21, 1) == 0


def test_evaluate_ones_matches_chromatic_polynomial():
    for spec in ["claw", "wheel:5", "fan:2,3"]:
        g = parse_graph(spec, "family_dsl")
        for exp in (csf_monomial(g), csf_schur(g), csf_elementary(g)):
            for k in range(0, 5):
                assert evaluate_ones(exp, k) == chromatic_polynomial_at(g, k)


def test_format_text():
    exp = csf_schur(parse_graph("claw", "family_dsl"))
    assert format_expansion(exp, "text") == "s_{31} - s_{2^2} + 5s_{21^2} + 8s_{1^4}"
    mono = csf_monomial(parse_graph("path:3", "family_dsl"))
    assert format_expansion(mono, "text") == "m_{21} + 6m_{1^3}"


def test_format_latex():
    exp = csf_schur(parse_graph("claw", "family_dsl"))
    assert (
        format_expansion(exp, "latex")
        == "X_G = s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}"
    )


def test_expansion_json_round_trip():
    exp = csf_schur(parse_graph("claw", "family_dsl"))
    data = exp.to_json("claw")
    assert data["graph"] == "claw"
    assert data["basis"] == "s"
    assert data["degree"] == 4
    assert data["terms"][0] == {"partition": "3,1", "coeff": "1"}
    assert data["terms"][1] == {"partition": "2,2", "coeff": "-1"}
    dumped = json.dumps(data, indent=2, sort_keys=False)
    assert json.dumps(json.loads(dumped), indent=2, sort_keys=False) == dumped
