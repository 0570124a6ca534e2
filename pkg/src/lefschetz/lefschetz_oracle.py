"""Ground-truth Lefschetz decisions by exact rank computation.

The oracle multiplies out powers of the sum of the variables on monomial
bases and checks ranks over GF(p). Two reductions keep the work small, both
exact consequences of the symmetry of the Hilbert function:

* a power has maximal rank in every degree as soon as the maps from the
  low degrees (source degree at most (t - m)/2) are injective;
* in two variables only the powers a + b - 2c for 1 <= c < min(a, b) need
  testing, and in general only powers m with t - m even, since maximal rank
  at such an m forces it at m + 1.

For two-variable failures, :func:`kernel_witness` produces a concrete
monomial annihilated by an explicit power, re-verified by direct expansion
before it is returned.
"""

from __future__ import annotations

from .classifier import slp_step_check
from .graded_quotient import MonomialCI, hilbert_function, mult_matrix
from .prime_field import binomial_mod_p, rank
from .verdict import KernelWitness, SlpVerdict

__all__ = [
    "SlpVerdict",
    "KernelWitness",
    "max_rank_in_every_degree",
    "is_slp_oracle",
    "is_wlp_oracle",
    "kernel_witness",
]


def max_rank_in_every_degree(algebra: MonomialCI, power: int) -> bool:
    """Whether multiplication by (x1 + ... + xn)^power has maximal rank
    in every degree, decided by injectivity on the low-degree pieces."""
    if power < 1:
        raise ValueError("power must be at least 1")
    limit = (algebra.top_degree - power) // 2
    for i in range(limit + 1):
        gm = mult_matrix(algebra, power, i)
        if rank(gm.matrix, algebra.field) != hilbert_function(algebra, i):
            return False
    return True


def _candidate_powers(algebra: MonomialCI) -> list[int]:
    t = algebra.top_degree
    if algebra.num_variables == 2:
        a, b = algebra.exponents
        return [a + b - 2 * c for c in range(1, min(a, b))]
    return list(range(t, 0, -2))


def is_slp_oracle(algebra: MonomialCI) -> SlpVerdict:
    """Decide the strong Lefschetz property by rank computations.

    Powers are checked in descending order over the reduced candidate set;
    the first failure is recorded on the verdict.
    """
    for power in _candidate_powers(algebra):
        if not max_rank_in_every_degree(algebra, power):
            return SlpVerdict(False, "oracle", failing_exponent=power)
    return SlpVerdict(True, "oracle")


def is_wlp_oracle(algebra: MonomialCI) -> bool:
    """Decide the weak Lefschetz property: maximal rank for the first power."""
    return max_rank_in_every_degree(algebra, 1)


def _verify_witness(algebra: MonomialCI, monomial: tuple[int, int], power: int) -> None:
    # Defense in depth: a construction bug must surface as an error here,
    # never as a wrong report.
    field = algebra.field
    d1, d2 = algebra.exponents
    e1, e2 = monomial
    if e1 >= d1 or e2 >= d2:
        raise RuntimeError("witness construction produced a zero monomial")
    for j in range(power + 1):
        if binomial_mod_p(power, j, field) and e1 + j < d1 and e2 + power - j < d2:
            raise RuntimeError("witness construction produced a surviving term")
    deg = e1 + e2
    if hilbert_function(algebra, deg) > hilbert_function(algebra, deg + power):
        raise RuntimeError("witness target piece is smaller than the source piece")


def kernel_witness(algebra: MonomialCI) -> KernelWitness:
    """Monomial kernel witness for a two-variable algebra without the SLP.

    Scans levels upward for the first violated condition of the per-level
    check (ties broken in condition order 1, 2, 3, 4) and emits the matching
    monomial: with a = m*p^i + r and b = n*p^i + s,

      condition 1 -> x^r,   power (m + n) * p^i
      condition 2 -> y^s,   power (m + n) * p^i
      condition 3 -> x^r y^s, power (m + n - 1) * p^i
      condition 4 -> 1,     power (m + n + 1) * p^i

    The witness is re-verified by direct expansion before being returned.
    Raises ValueError if the algebra has the property or is not a
    two-variable one.
    """
    if algebra.num_variables != 2:
        raise ValueError("kernel witnesses are constructed for two variables only")
    a, b = algebra.exponents
    if a < 2 or b < 2:
        raise ValueError("algebra has the strong Lefschetz property; no witness exists")
    report = slp_step_check(algebra.field, a, b)
    if report.satisfied:
        raise ValueError("algebra has the strong Lefschetz property; no witness exists")
    level, cond = report.violations[0]
    step = algebra.field.p**level
    mq, r = divmod(a, step)
    nq, s = divmod(b, step)
    if cond == 1:
        monomial, power = (r, 0), (mq + nq) * step
    elif cond == 2:
        monomial, power = (0, s), (mq + nq) * step
    elif cond == 3:
        monomial, power = (r, s), (mq + nq - 1) * step
    else:
        monomial, power = (0, 0), (mq + nq + 1) * step
    _verify_witness(algebra, monomial, power)
    return KernelWitness(monomial=monomial, power=power, target_degree=sum(monomial) + power)
