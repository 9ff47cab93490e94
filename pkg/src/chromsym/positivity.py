"""Schur and elementary positivity verdicts with machine-checkable certificates.

A positive answer always carries the full expansion.  Negative answers
carry the cheapest certificate found: an unbalanced bipartition, a
dominance gap in the stable partition types, a missing connected
partition type, or an explicit negative coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import (
    count_of_type,
    has_connected_partition_of_type,
    has_stable_partition_of_type,
)
from .errors import ContractViolation
from .expansions import (
    SymFuncExpansion,
    csf_elementary,
    csf_schur,
    schur_coefficient,
)
from .graphs import Graph, bipartition, is_connected
from .partitions import Partition, dominates, format_partition, partitions_of


@dataclass(frozen=True)
class FullExpansion:
    """Every coefficient of the expansion is nonnegative."""

    expansion: SymFuncExpansion

    def to_json(self) -> dict:
        return {
            "kind": "full_expansion",
            "basis": self.expansion.basis,
            "terms": [
                {"partition": format_partition(lam), "coeff": str(c)}
                for lam, c in self.expansion.terms()
            ],
        }


@dataclass(frozen=True)
class NegativeCoefficient:
    """One explicit negative coefficient in the named basis."""

    basis: str
    shape: Partition
    value: int

    def to_json(self) -> dict:
        return {
            "kind": "negative_coefficient",
            "basis": self.basis,
            "shape": format_partition(self.shape),
            "value": str(self.value),
        }


@dataclass(frozen=True)
class DominanceWitness:
    """A stable partition type lam exists while a dominated type mu does not."""

    lam: Partition
    mu: Partition

    def to_json(self) -> dict:
        return {
            "kind": "dominance_witness",
            "lambda": format_partition(self.lam),
            "mu": format_partition(self.mu),
        }


@dataclass(frozen=True)
class ConnectedPartitionGap:
    """No partition of the vertex set into connected blocks has this type."""

    lam: Partition

    def to_json(self) -> dict:
        return {"kind": "connected_partition_gap", "lambda": format_partition(self.lam)}


@dataclass(frozen=True)
class UnbalancedBipartition:
    """Connected bipartite graph whose side sizes differ by at least two."""

    side_sizes: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "kind": "unbalanced_bipartition",
            "sizes": [self.side_sizes[0], self.side_sizes[1]],
        }


Certificate = (
    FullExpansion
    | NegativeCoefficient
    | DominanceWitness
    | ConnectedPartitionGap
    | UnbalancedBipartition
)


@dataclass(frozen=True)
class PositivityVerdict:
    property: str
    answer: str
    certificate: Certificate

    @property
    def positive(self) -> bool:
        return self.answer == "positive"

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "answer": self.answer,
            "certificate": self.certificate.to_json(),
        }


def dominance_witness(g: Graph) -> DominanceWitness | None:
    """First (lam, mu) pair, scanning both in reverse lexicographic order,
    where a stable partition of type lam exists but none of the dominated
    type mu does.  Such a gap rules out Schur positivity."""
    if g.n == 0:
        raise ContractViolation("witness search needs at least one vertex")
    shapes = list(partitions_of(g.n))
    for lam in shapes:
        if not has_stable_partition_of_type(g, lam):
            continue
        for mu in shapes:
            if mu == lam or not dominates(lam, mu):
                continue
            if not has_stable_partition_of_type(g, mu):
                return DominanceWitness(lam, mu)
    return None


def wolfgang_witness(g: Graph) -> ConnectedPartitionGap | None:
    """First type, in reverse lexicographic order, with no connected
    partition.  Such a gap rules out elementary positivity of a connected
    graph."""
    if g.n == 0 or not is_connected(g):
        raise ContractViolation("connected partition witness needs a connected graph")
    for lam in partitions_of(g.n):
        if not has_connected_partition_of_type(g, lam):
            return ConnectedPartitionGap(lam)
    return None


def balanced_bipartition_test(g: Graph) -> UnbalancedBipartition | None:
    """Certificate when a connected bipartite graph has side sizes differing
    by at least two; such graphs are never Schur positive."""
    if g.n == 0 or not is_connected(g):
        raise ContractViolation("bipartition balance test needs a connected graph")
    parts = bipartition(g)
    if parts is None:
        return None
    a, b = len(parts[0]), len(parts[1])
    if abs(a - b) >= 2:
        return UnbalancedBipartition((a, b))
    return None


def _first_negative(exp: SymFuncExpansion) -> tuple[Partition, int] | None:
    for lam, c in exp.terms():
        if c < 0:
            return lam, c
    return None


def schur_positivity_verdict(g: Graph, strategy: str = "fast") -> PositivityVerdict:
    """Decide Schur positivity.

    The fast strategy tries the bipartition imbalance certificate, then a
    dominance witness, then scans coefficients shape by shape in reverse
    lexicographic order.  The exhaustive strategy computes the whole
    expansion first.  Both agree on the answer.
    """
    if strategy not in ("fast", "exhaustive"):
        raise ContractViolation(f"unknown strategy {strategy!r}")
    if g.n == 0:
        raise ContractViolation("verdict needs at least one vertex")
    if strategy == "fast":
        if is_connected(g):
            cert = balanced_bipartition_test(g)
            if cert is not None:
                return PositivityVerdict("schur_positive", "not_positive", cert)
        witness = dominance_witness(g)
        if witness is not None:
            return PositivityVerdict("schur_positive", "not_positive", witness)
        coeffs: dict[Partition, int] = {}
        for lam in partitions_of(g.n):
            c = schur_coefficient(g, lam)
            if c < 0:
                return PositivityVerdict(
                    "schur_positive",
                    "not_positive",
                    NegativeCoefficient("s", lam, c),
                )
            coeffs[lam] = c
        full = SymFuncExpansion("s", g.n, {l: c for l, c in coeffs.items() if c})
        return PositivityVerdict("schur_positive", "positive", FullExpansion(full))
    exp = csf_schur(g)
    neg = _first_negative(exp)
    if neg is not None:
        return PositivityVerdict(
            "schur_positive", "not_positive", NegativeCoefficient("s", *neg)
        )
    return PositivityVerdict("schur_positive", "positive", FullExpansion(exp))


def e_positivity_verdict(g: Graph) -> PositivityVerdict:
    """Decide elementary positivity.

    Connected graphs are screened for a missing connected partition type
    first; otherwise the elementary expansion itself decides.
    """
    if g.n == 0:
        raise ContractViolation("verdict needs at least one vertex")
    if is_connected(g):
        gap = wolfgang_witness(g)
        if gap is not None:
            return PositivityVerdict("e_positive", "not_positive", gap)
    exp = csf_elementary(g)
    neg = _first_negative(exp)
    if neg is not None:
        return PositivityVerdict(
            "e_positive", "not_positive", NegativeCoefficient("e", *neg)
        )
    return PositivityVerdict("e_positive", "positive", FullExpansion(exp))


def validate_certificate(g: Graph, verdict: PositivityVerdict) -> bool:
    """Re-check a verdict's certificate against the defining operations."""
    cert = verdict.certificate
    if isinstance(cert, FullExpansion):
        exp = cert.expansion
        if verdict.answer != "positive" or exp.degree != g.n:
            return False
        fresh = csf_schur(g) if exp.basis == "s" else csf_elementary(g)
        return fresh.coefficients == exp.coefficients and all(
            c > 0 for c in exp.coefficients.values()
        )
    if verdict.answer != "not_positive":
        return False
    if isinstance(cert, NegativeCoefficient):
        if cert.value >= 0:
            return False
        if cert.basis == "s":
            return schur_coefficient(g, cert.shape) == cert.value
        return csf_elementary(g).coefficient(cert.shape) == cert.value
    if isinstance(cert, DominanceWitness):
        return (
            cert.lam != cert.mu
            and dominates(cert.lam, cert.mu)
            and count_of_type(g, cert.lam) > 0
            and count_of_type(g, cert.mu) == 0
        )
    if isinstance(cert, ConnectedPartitionGap):
        return is_connected(g) and not has_connected_partition_of_type(g, cert.lam)
    if isinstance(cert, UnbalancedBipartition):
        parts = bipartition(g)
        if parts is None or not is_connected(g):
            return False
        sizes = (len(parts[0]), len(parts[1]))
        return sizes == cert.side_sizes and abs(sizes[0] - sizes[1]) >= 2
    return False
