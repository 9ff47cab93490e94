"""Chromatic symmetric function expansions in the m, p, s, and e bases.

Coefficients are exact Python integers throughout.  The Schur route sums
signed, multiplicity-weighted stable partition counts over special rim
hook tabloids; the monomial route reads the stable census directly; the
power sum route inclusion-excludes over edge subsets; the elementary
route solves a unitriangular Kostka system on top of the Schur output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from .census import count_of_type, stable_partition_census
from .errors import ContractViolation, EdgeCapacityError, InconsistentSolve
from .graphs import Graph, component_orders, independence_number
from .partitions import (
    Partition,
    conjugate,
    multiplicity_factorial,
    partitions_of,
    sort_to_partition,
    subscript,
)
from .rimhooks import inverse_kostka, kostka, special_tabloids

DEFAULT_EDGE_CAP = 24

BASIS_LETTERS = ("m", "p", "s", "e")


@dataclass(frozen=True)
class SymFuncExpansion:
    """A finite integer combination of basis elements of one degree."""

    basis: str
    degree: int
    coefficients: dict[Partition, int]

    def coefficient(self, lam: Partition) -> int:
        return self.coefficients.get(lam, 0)

    def terms(self) -> list[tuple[Partition, int]]:
        """Nonzero terms in reverse lexicographic partition order."""
        return [
            (lam, self.coefficients[lam])
            for lam in partitions_of(self.degree)
            if self.coefficients.get(lam, 0) != 0
        ]

    def to_json(self, graph_spec: str) -> dict:
        return {
            "graph": graph_spec,
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": ",".join(map(str, lam)), "coeff": str(c)}
                for lam, c in self.terms()
            ],
        }


def _make_expansion(basis: str, degree: int, coeffs: dict[Partition, int]) -> SymFuncExpansion:
    if basis not in BASIS_LETTERS:
        raise ContractViolation(f"unknown basis {basis!r}")
    return SymFuncExpansion(basis, degree, {l: c for l, c in coeffs.items() if c})


def format_expansion(exp: SymFuncExpansion, style: str = "text") -> str:
    """Render with subscript shorthand, e.g. 's_{31} - s_{2^2} + 5s_{21^2}'."""
    terms = exp.terms()
    if not terms:
        return "0"
    sep_plus, sep_minus = (" + ", " - ") if style == "text" else ("+", "-")
    pieces = []
    for i, (lam, c) in enumerate(terms):
        mag = abs(c)
        body = f"{'' if mag == 1 else mag}{exp.basis}_{{{subscript(lam)}}}"
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((sep_minus if c < 0 else sep_plus) + body)
    out = "".join(pieces)
    return f"X_G = {out}" if style == "latex" else out


def csf_monomial(g: Graph) -> SymFuncExpansion:
    """Monomial expansion: each stable partition type contributes its count
    times the product of factorials of its part multiplicities."""
    if g.n == 0:
        raise ContractViolation("expansion needs at least one vertex")
    census = stable_partition_census(g)
    coeffs = {
        lam: multiplicity_factorial(lam) * cnt for lam, cnt in census.counts.items()
    }
    return _make_expansion("m", g.n, coeffs)


def csf_power(g: Graph, edge_cap: int = DEFAULT_EDGE_CAP) -> SymFuncExpansion:
    """Power sum expansion by inclusion-exclusion over edge subsets.

    Cost is 2 ** |E|, so graphs past edge_cap are refused; the monomial
    route has no such limit.
    """
    if g.n == 0:
        raise ContractViolation("expansion needs at least one vertex")
    m = len(g.edges)
    if m > edge_cap:
        raise EdgeCapacityError(
            f"graph has {m} edges, above the cap of {edge_cap}; "
            "use the monomial basis route instead"
        )
    edges = sorted(g.edges)
    coeffs: dict[Partition, int] = {}
    for mask in range(1 << m):
        subset = frozenset(edges[i] for i in range(m) if mask >> i & 1)
        lam = sort_to_partition(component_orders(g, subset))
        sign = -1 if bin(mask).count("1") % 2 else 1
        coeffs[lam] = coeffs.get(lam, 0) + sign
    return _make_expansion("p", g.n, coeffs)


def _schur_coefficient_from(lam: Partition, alpha: int, lookup) -> int:
    """Signed tabloid sum; hook lengths above the independence number or
    contents longer than the shape cannot meet a stable partition."""
    total = 0
    for tab in special_tabloids(lam):
        if len(tab.content) > len(lam):
            continue
        if any(part > alpha for part in tab.content):
            continue
        kind = sort_to_partition(tab.content)
        cnt = lookup(kind)
        if cnt:
            total += tab.sign * multiplicity_factorial(kind) * cnt
    return total


def schur_coefficient(g: Graph, lam: Partition) -> int:
    """Coefficient of one Schur function in the chromatic symmetric function."""
    if lam.weight != g.n:
        raise ContractViolation(
            f"shape weight {lam.weight} does not match vertex count {g.n}"
        )
    alpha = independence_number(g)
    return _schur_coefficient_from(lam, alpha, lambda kind: count_of_type(g, kind))


def csf_schur(g: Graph) -> SymFuncExpansion:
    """Schur expansion over all shapes of the right degree.

    Builds the full stable census once and reuses it for every shape.
    """
    if g.n == 0:
        raise ContractViolation("expansion needs at least one vertex")
    census = stable_partition_census(g)
    alpha = independence_number(g)
    coeffs = {
        lam: _schur_coefficient_from(lam, alpha, census.count)
        for lam in partitions_of(g.n)
    }
    return _make_expansion("s", g.n, coeffs)


def m_to_s(exp: SymFuncExpansion) -> SymFuncExpansion:
    """Rewrite a monomial expansion in the Schur basis via the inverse Kostka
    matrix.  Kept separate from the tabloid route so the two can be compared."""
    if exp.basis != "m":
        raise ContractViolation(f"m_to_s needs a monomial expansion, got {exp.basis!r}")
    coeffs: dict[Partition, int] = {}
    for lam in partitions_of(exp.degree):
        total = 0
        for mu, c in exp.coefficients.items():
            total += c * inverse_kostka(mu, lam)
        if total:
            coeffs[lam] = total
    return _make_expansion("s", exp.degree, coeffs)


def csf_elementary(g: Graph) -> SymFuncExpansion:
    """Elementary expansion, solved from the Schur expansion.

    The Kostka matrix is unitriangular in dominance order, so scanning
    shapes from lexicographically smallest upward isolates one new
    unknown per step.  The solve is exact; a failed re-check means a bug.
    """
    schur = csf_schur(g)
    shapes = list(partitions_of(g.n))
    coeffs: dict[Partition, int] = {}
    for kappa in reversed(shapes):
        residual = schur.coefficient(conjugate(kappa))
        for mu, c in coeffs.items():
            if c:
                residual -= c * kostka(kappa, mu)
        if residual:
            coeffs[kappa] = residual
    for lam in shapes:
        check = sum(c * kostka(conjugate(lam), mu) for mu, c in coeffs.items())
        if check != schur.coefficient(lam):
            raise InconsistentSolve(
                f"elementary solve failed to reproduce the Schur coefficient at {lam}"
            )
    return _make_expansion("e", g.n, coeffs)


def e_to_s(exp: SymFuncExpansion) -> SymFuncExpansion:
    """Expand an elementary-basis expression in the Schur basis."""
    if exp.basis != "e":
        raise ContractViolation(f"e_to_s needs an elementary expansion, got {exp.basis!r}")
    coeffs: dict[Partition, int] = {}
    for lam in partitions_of(exp.degree):
        total = sum(
            c * kostka(conjugate(lam), mu) for mu, c in exp.coefficients.items()
        )
        if total:
            coeffs[lam] = total
    return _make_expansion("s", exp.degree, coeffs)


def _falling(k: int, length: int) -> int:
    out = 1
    for i in range(length):
        out *= k - i
    return out


@cache
def _schur_ones(lam: Partition, k: int) -> int:
    """Count semistandard tableaux with entries at most k by the hook content product."""
    num = 1
    den = 1
    conj = conjugate(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            num *= k + j - i
            den *= row - j + conj[j] - i - 1
    if num % den:
        raise InconsistentSolve(f"hook content product is not integral for {lam}")
    return num // den


def evaluate_ones(exp: SymFuncExpansion, k: int) -> int:
    """Evaluate at x_1 = ... = x_k = 1, all other variables 0.

    On a chromatic symmetric function this is the chromatic polynomial at k.
    """
    if k < 0:
        raise ContractViolation(f"variable count must be nonnegative: {k}")
    total = 0
    for lam, c in exp.coefficients.items():
        if exp.basis == "m":
            if len(lam) > k:
                continue
            val = _falling(k, len(lam)) // multiplicity_factorial(lam)
        elif exp.basis == "p":
            val = k ** len(lam)
        elif exp.basis == "e":
            val = math.prod(math.comb(k, part) for part in lam)
        else:
            val = _schur_ones(lam, k)
        total += c * val
    return total
