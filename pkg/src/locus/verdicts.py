"""Verdicts and machine-checkable certificates.

A Verdict is Holds / Fails / Inconclusive plus a certificate object and the
finite set of primes the claim excludes.  Every Holds or Fails certificate
carries enough data to be re-verified without trusting the engine (see
locus.verify).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PerfectPowerMember:
    """Some element is r^n outright."""

    kind = "perfect_power_member"
    element: str
    root: str
    exponent: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "element": self.element, "root": self.root,
                "exponent": self.exponent}


@dataclass(frozen=True)
class WangException:
    """Singleton a = 2^(n/2) * b^n with 8 | n."""

    kind = "wang_exception"
    element: str
    b: str
    n: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "element": self.element, "b": self.b, "n": self.n}


@dataclass(frozen=True)
class ExceptionalFormCert:
    """Two-element template match for even n."""

    kind = "exceptional_form"
    case_tag: str
    pj: Optional[int]
    alpha1: str
    alpha2: str
    n: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "case_tag": self.case_tag, "pj": self.pj,
                "alpha1": self.alpha1, "alpha2": self.alpha2, "n": self.n}


@dataclass(frozen=True)
class HyperplaneCover:
    """The element exponent vectors mod q induce forms whose kernels cover F_q^s."""

    kind = "hyperplane_cover"
    q: int
    support: tuple[int, ...]
    coeffs: tuple[tuple[int, ...], ...]
    reduction: Optional[tuple[tuple[str, str], ...]] = None

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "q": self.q, "support": list(self.support),
               "coeffs": [list(c) for c in self.coeffs]}
        if self.reduction is not None:
            doc["reduction"] = [[a, b] for a, b in self.reduction]
        return doc


@dataclass(frozen=True)
class UncoveredPoint:
    """A point of F_q^s missed by every hyperplane; refutes the covering."""

    kind = "uncovered_point"
    q: int
    support: tuple[int, ...]
    coeffs: tuple[tuple[int, ...], ...]
    point: tuple[int, ...]
    reduction: Optional[tuple[tuple[str, str], ...]] = None
    counterexample_prime: Optional[int] = None

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "q": self.q, "support": list(self.support),
               "coeffs": [list(c) for c in self.coeffs], "point": list(self.point)}
        if self.reduction is not None:
            doc["reduction"] = [[a, b] for a, b in self.reduction]
        if self.counterexample_prime is not None:
            doc["counterexample_prime"] = self.counterexample_prime
        return doc


@dataclass(frozen=True)
class OddSubsetWitness:
    """Odd-cardinality subset whose product is a perfect square."""

    kind = "odd_subset_witness"
    indices: tuple[int, ...]  # 1-based into the deduplicated element list
    root: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices), "root": self.root}


@dataclass(frozen=True)
class ParityObstruction:
    """The all-ones functional lies in the row space of the square matrix,
    so no odd-cardinality kernel vector exists."""

    kind = "parity_obstruction"
    rows: tuple[str, ...]  # labels: "sign" or a support prime, XOR-ing to all-ones
    counterexample_prime: Optional[int] = None

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "rows": list(self.rows)}
        if self.counterexample_prime is not None:
            doc["counterexample_prime"] = self.counterexample_prime
        return doc


@dataclass(frozen=True)
class SkalbaWitness:
    """Exponent tuple admitting no subset pair with perfect-power ratio."""

    kind = "skalba_witness"
    c: tuple[int, ...]
    q: int
    m: int
    counterexample_prime: Optional[int] = None

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "c": list(self.c), "q": self.q, "m": self.m}
        if self.counterexample_prime is not None:
            doc["counterexample_prime"] = self.counterexample_prime
        return doc


@dataclass(frozen=True)
class OracleExhaustion:
    """Every exponent tuple admitted a satisfying subset pair."""

    kind = "oracle_exhaustion"
    q: int
    m: int
    tuples_checked: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": self.q, "m": self.m,
                "tuples_checked": self.tuples_checked}


@dataclass(frozen=True)
class ComponentFailure:
    """A necessary prime-power component of n already fails."""

    kind = "component_failure"
    q: int
    m: int
    inner: "Certificate"

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": self.q, "m": self.m,
                "inner": self.inner.to_json()}


@dataclass(frozen=True)
class LiftedFamily:
    """A = {x^e : x in B} and B holds for n/e, hence A holds for n."""

    kind = "lifted_family"
    exponent: int
    base_elements: tuple[str, ...]
    base_certificate: "Certificate"

    def to_json(self) -> dict:
        return {"kind": self.kind, "exponent": self.exponent,
                "base_elements": list(self.base_elements),
                "base_certificate": self.base_certificate.to_json()}


@dataclass(frozen=True)
class Evidence:
    """Sieve-backed evidence; carries a reason tag and optional scan data."""

    kind = "evidence"
    reason: str
    counterexample_prime: Optional[int] = None
    report: Optional[dict] = None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind, "reason": self.reason}
        if self.counterexample_prime is not None:
            doc["counterexample_prime"] = self.counterexample_prime
        if self.report is not None:
            doc["report"] = self.report
        return doc


Certificate = Union[
    PerfectPowerMember, WangException, ExceptionalFormCert, HyperplaneCover,
    UncoveredPoint, OddSubsetWitness, ParityObstruction, SkalbaWitness,
    OracleExhaustion, ComponentFailure, LiftedFamily, Evidence,
]


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Certificate
    excluded_primes: frozenset[int] = field(default_factory=frozenset)
    evidence: Optional[dict] = None  # optional attached sieve report

    def holds(self) -> bool:
        return self.status == HOLDS

    def fails(self) -> bool:
        return self.status == FAILS

    def with_excluded(self, primes) -> "Verdict":
        return Verdict(self.status, self.certificate,
                       self.excluded_primes | frozenset(primes), self.evidence)

    def with_evidence(self, report: dict) -> "Verdict":
        return Verdict(self.status, self.certificate, self.excluded_primes, report)

    def to_json(self, n: int, elements: list[str]) -> dict:
        doc = {
            "n": n,
            "elements": list(elements),
            "status": self.status,
            "certificate": self.certificate.to_json(),
            "excluded_primes": sorted(self.excluded_primes),
        }
        if self.evidence is not None:
            doc["evidence"] = self.evidence
        return doc
