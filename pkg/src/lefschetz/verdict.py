"""Shared result records for the rank oracle and the closed-form classifier."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class KernelWitness:
    """A monomial annihilated by a power of the sum of the variables.

    The monomial is nonzero in the algebra, the graded piece it lives in is
    no larger than the target piece, and multiplying by the given power of
    x + y sends it to zero. Together these certify a rank-deficient
    multiplication map, hence failure of the strong Lefschetz property.
    """

    monomial: tuple[int, ...]
    power: int
    target_degree: int

    @property
    def degree(self) -> int:
        return sum(self.monomial)


@dataclass(frozen=True)
class SlpVerdict:
    """Outcome of a strong-Lefschetz decision.

    ``method`` records the route taken ("oracle" for exact rank computation,
    "classification" for the closed-form criteria). A failing verdict from
    the oracle carries the first power whose multiplication map misses
    maximal rank; classification verdicts carry a human-readable condition
    tag instead. A positive verdict never carries failure evidence.
    """

    has_slp: bool
    method: str
    failing_exponent: int | None = None
    witness: KernelWitness | None = None
    condition: str | None = None

    def __post_init__(self) -> None:
        if self.method not in ("oracle", "classification"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.has_slp and (self.failing_exponent is not None or self.witness is not None):
            raise ValueError("a positive verdict cannot carry failure evidence")
