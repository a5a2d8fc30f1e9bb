"""Brute-force ground truth for twin-goodness, k-goodness and unit sum numbers.

Everything here decides by exhaustive enumeration, independently of the
constructive module, so the two can be played against each other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Error
from .rings import (
    DEFAULT_EXHAUSTION_BOUND,
    Ring,
    elements,
    has_factor_Z2_or_Z3,
    unit_set,
    units,
)

OMEGA = "omega"
INFINITY = "infinity"


def twin_witness(ring: Ring, x, bound: int = DEFAULT_EXHAUSTION_BOUND):
    """First unit u in canonical order with x+u and x-u both units, or None."""
    x = ring.canon(x)
    uset = unit_set(ring, bound)
    for u in units(ring, bound):
        if ring.add(x, u) in uset and ring.sub(x, u) in uset:
            return u
    return None


def is_twin_good_ring(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND):
    """(True, None) if every element has a twin witness, else (False, x)
    for the first witnessless element in canonical order."""
    uset = unit_set(ring, bound)
    us = units(ring, bound)
    add, sub = ring.add, ring.sub
    for x in elements(ring, bound):
        if not any(add(x, u) in uset and sub(x, u) in uset for u in us):
            return False, x
    return True, None


def _sumsets_up_to(ring: Ring, k_max: int, bound: int) -> list[frozenset]:
    """[S_1, ..., S_k_max] where S_k is the k-fold sumset of the units."""
    us = units(ring, bound)
    add = ring.add
    out = [frozenset(us)]
    for _ in range(k_max - 1):
        out.append(frozenset(add(a, u) for a in out[-1] for u in us))
    return out


def is_k_good(ring: Ring, x, k: int, bound: int = DEFAULT_EXHAUSTION_BOUND) -> bool:
    """Is x a sum of exactly k units?"""
    if k < 1:
        raise ValueError("k must be >= 1")
    x = ring.canon(x)
    return x in _sumsets_up_to(ring, k, bound)[-1]


def k_good_ring(ring: Ring, k: int, bound: int = DEFAULT_EXHAUSTION_BOUND) -> bool:
    """Is every element a sum of exactly k units?"""
    if k < 1:
        raise ValueError("k must be >= 1")
    full = frozenset(elements(ring, bound))
    return _sumsets_up_to(ring, k, bound)[-1] == full


def unit_sum_number(ring: Ring, bound: int = DEFAULT_EXHAUSTION_BOUND):
    """Least uniform k such that the ring is k-good; "omega" when every
    element is some sum of units but no single k covers all of them;
    "infinity" when the units do not additively generate the ring.

    The even and odd sumset chains are monotone (u + (-u) = 0 sits in every
    S_2), so once both chains repeat nothing new can appear and the search
    terminates exactly.
    """
    full = frozenset(elements(ring, bound))
    us = units(ring, bound)
    add = ring.add
    sets = {1: frozenset(us)}
    union = set(sets[1])
    k = 1
    if sets[1] == full:
        return 1
    while True:
        k += 1
        nxt = frozenset(add(a, u) for a in sets[k - 1] for u in us)
        sets[k] = nxt
        union |= nxt
        if nxt == full:
            return k
        if k >= 4 and sets[k] == sets[k - 2] and sets[k - 1] == sets[k - 3]:
            return OMEGA if union == full else INFINITY
        if k > 2 * ring.order + 4:  # unreachable; guards against a logic bug
            raise AssertionError(f"sumset iteration failed to stabilize over {ring}")


@dataclass(frozen=True, eq=False)
class GoodnessReport:
    """Oracle verdicts for one ring, plus the factor-ring criterion check."""

    ring: Ring
    criterion_prediction: bool
    twin_good: bool | None = None
    twin_failure_witness: object = None
    k_good_status: dict = field(default_factory=dict)
    unit_sum_number: object = None
    agreement: bool | None = None
    error: str | None = None


def goodness_report(ring: Ring, k_max: int = 8, bound: int = DEFAULT_EXHAUSTION_BOUND) -> GoodnessReport:
    """Full exhaustive report; the agreement flag compares the oracle
    verdict with the no-factor-Z2-or-Z3 prediction."""
    prediction = not has_factor_Z2_or_Z3(ring)
    twin, witness = is_twin_good_ring(ring, bound)
    full = frozenset(elements(ring, bound))
    sums = _sumsets_up_to(ring, k_max, bound)
    k_map = {k: s == full for k, s in enumerate(sums, start=1)}
    usn = unit_sum_number(ring, bound)
    return GoodnessReport(
        ring=ring,
        criterion_prediction=prediction,
        twin_good=twin,
        twin_failure_witness=witness,
        k_good_status=k_map,
        unit_sum_number=usn,
        agreement=twin == prediction,
    )


def sweep(rings, k_max: int = 8, bound: int = DEFAULT_EXHAUSTION_BOUND) -> list[GoodnessReport]:
    """One report per ring, input order preserved; per-ring errors are
    recorded in the report rather than aborting the sweep."""
    out = []
    for ring in rings:
        try:
            out.append(goodness_report(ring, k_max, bound))
        except Error as exc:
            out.append(
                GoodnessReport(
                    ring=ring,
                    criterion_prediction=not has_factor_Z2_or_Z3(ring),
                    error=str(exc),
                )
            )
    return out
