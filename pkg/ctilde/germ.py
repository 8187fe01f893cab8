"""The germ P of positive divisors of the Coxeter element and its sigma-fixed part.

Elements are periodic permutations that are positive and self non-crossing
with total shift 0.  A product x·y is defined in the germ only when the
composed permutation is again an element and the reflection lengths add;
otherwise :func:`germ_product` returns ``None``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from ctilde.errors import (
    NotDivisibleError,
    NotInGermError,
    NotSigmaStableError,
    PeriodMismatchError,
)
from ctilde.noncrossing import (
    PeriodicPartition,
    common_refinement,
    element_of,
    enumerate_partitions,
    noncrossing_join,
    partition_of,
    refines,
    sigma_partition,
    validate,
)
from ctilde.periodic import (
    PeriodicPermutation,
    Strip,
    compose,
    cycle_decomposition,
    format_cycles,
    identity,
    inverse,
    parse_cycles,
    power,
    reflection_length_A,
    residue,
    sigma,
    total_shift,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GermElement:
    perm: PeriodicPermutation
    partition: PeriodicPartition
    length_A: int
    sigma_stable: bool

    @property
    def strip(self) -> Strip:
        return self.partition.strip

    @property
    def period(self) -> int:
        return self.perm.period

    @property
    def is_identity(self) -> bool:
        return self.perm.is_identity

    def __str__(self) -> str:
        return format_cycles(self.perm)


def default_strip(period: int) -> Strip:
    if period % 2:
        raise PeriodMismatchError(f"the C-tilde strip needs an even period, got {period}")
    return Strip.ctilde(period // 2)


def _check_member(w: PeriodicPermutation, strip: Strip) -> GermElement:
    if w.period != strip.period:
        raise PeriodMismatchError(f"permutation period {w.period} vs strip period {strip.period}")
    shift = total_shift(w)
    if shift:
        raise NotInGermError(f"{format_cycles(w)} has total shift {shift}", clause="total_shift")

    decomposition = cycle_decomposition(w)
    for entries, h in decomposition.infinite_cycles:
        sides = {strip.in_x(e) for e in entries}
        if h not in (1, -1) or sides != ({True} if h == 1 else {False}):
            raise NotInGermError(
                f"infinite cycle {entries}[{h}] must run ascending on X with shift 1 "
                "or descending on Xi with shift -1",
                clause="pseudo_cycle",
            )
    length = reflection_length_A(w)

    partition = validate(partition_of(w, strip))
    expected = element_of(partition)
    if expected != w:
        wrong = set(cycle_decomposition(w).finite_cycles) - set(
            cycle_decomposition(expected).finite_cycles
        )
        culprit = sorted(wrong)[0] if wrong else decomposition
        raise NotInGermError(
            f"cycle {culprit} is not positive: X entries must ascend, then Xi entries descend",
            clause="orientation",
        )
    stable = strip.is_ctilde and sigma(w) == w
    return GermElement(w, partition, length, stable)


def require_member(w: PeriodicPermutation, strip: Strip | None = None) -> GermElement:
    """Return *w* as a germ element, raising :class:`NotInGermError` otherwise."""
    return _check_member(w, strip or default_strip(w.period))


def membership(w: PeriodicPermutation, strip: Strip | None = None) -> GermElement | None:
    try:
        return require_member(w, strip)
    except NotInGermError as exc:
        logger.debug("not in germ (%s): %s", exc.clause, exc.detail)
        return None


def parse_element(text: str, strip: Strip) -> GermElement:
    return require_member(parse_cycles(text, strip.period), strip)


def from_partition(p: PeriodicPartition) -> GermElement:
    return require_member(element_of(validate(p)), p.strip)


def identity_element(strip: Strip) -> GermElement:
    return require_member(identity(strip.period), strip)


def coxeter(strip: Strip) -> GermElement:
    """The Garside element Δ = c of the strip."""
    return require_member(strip.coxeter_element(), strip)


def _same_strip(x: GermElement, y: GermElement) -> Strip:
    if x.strip != y.strip:
        raise PeriodMismatchError(f"elements live on different strips: {x.strip} vs {y.strip}")
    return x.strip


# ---------------------------------------------------------------------------
# Partial product and divisibility
# ---------------------------------------------------------------------------


def germ_product(x: GermElement, y: GermElement) -> GermElement | None:
    """x·y when it is defined in the germ, else ``None``."""
    strip = _same_strip(x, y)
    z = membership(compose(x.perm, y.perm), strip)
    if z is None or z.length_A != x.length_A + y.length_A:
        return None
    return z


def divides(x: GermElement, y: GermElement) -> bool:
    """Left divisibility x ≼ y, read off the partitions."""
    _same_strip(x, y)
    return refines(x.partition, y.partition)


def left_quotient(x: GermElement, y: GermElement) -> GermElement:
    """The element z with x·z = y."""
    if not divides(x, y):
        raise NotDivisibleError(f"{x} does not divide {y}")
    z = require_member(compose(inverse(x.perm), y.perm), y.strip)
    if x.length_A + z.length_A != y.length_A:
        raise NotDivisibleError(f"{x} does not divide {y} with lengths adding")
    return z


def right_complement(x: GermElement) -> GermElement:
    """x⁻¹c, so that x · right_complement(x) = c."""
    return require_member(compose(inverse(x.perm), x.strip.coxeter_element()), x.strip)


def left_complement(x: GermElement) -> GermElement:
    """c·x⁻¹, so that left_complement(x) · x = c."""
    return require_member(compose(x.strip.coxeter_element(), inverse(x.perm)), x.strip)


complement = right_complement


def _require_sigma_stable(*elements: GermElement) -> None:
    for x in elements:
        if not x.sigma_stable:
            raise NotSigmaStableError(f"{x} is not fixed by sigma")


def lcm(x: GermElement, y: GermElement) -> GermElement:
    """Least common right multiple in the sigma-fixed germ."""
    _require_sigma_stable(x, y)
    _same_strip(x, y)
    return from_partition(noncrossing_join(x.partition, y.partition))


def gcd(x: GermElement, y: GermElement) -> GermElement:
    """Greatest common left divisor in the sigma-fixed germ."""
    _require_sigma_stable(x, y)
    _same_strip(x, y)
    return from_partition(common_refinement(x.partition, y.partition))


# ---------------------------------------------------------------------------
# Reflection length in type C-tilde
# ---------------------------------------------------------------------------


def _cycle_class(entries: tuple[int, ...], period: int) -> frozenset[int]:
    offset = (min(entries) - 1) // period * period
    return frozenset(e - offset for e in entries)


def reflection_length_C(x: GermElement) -> int:
    """Reflection length of a sigma-fixed element as an element of W(C-tilde).

    A sigma-stable cycle of length 2k counts k, a cycle paired with its
    sigma-image (each of length k) counts k - 1 for the pair, and a
    sigma-stable pseudo-cycle supported on 2k residues counts k + 1.
    """
    _require_sigma_stable(x)
    n = x.period
    decomposition = cycle_decomposition(x.perm)
    classes = [_cycle_class(entries, n) for entries in decomposition.finite_cycles]
    seen: set[frozenset[int]] = set()
    total = 0
    for part in classes:
        if part in seen:
            continue
        image = _cycle_class(tuple(1 - e for e in part), n)
        seen.update({part, image})
        if image == part:
            total += len(part) // 2
        else:
            total += len(part) - 1
    if decomposition.infinite_cycles:
        support = {residue(e, n) for entries, _ in decomposition.infinite_cycles for e in entries}
        total += len(support) // 2 + 1
    return total


# ---------------------------------------------------------------------------
# Conjugation by powers of c
# ---------------------------------------------------------------------------


def conjugate_by_coxeter(x: GermElement, m: int) -> GermElement:
    """c^m · x · c^-m."""
    c = x.strip.coxeter_element()
    return require_member(compose(compose(power(c, m), x.perm), power(c, -m)), x.strip)


def garside_automorphism(x: GermElement) -> GermElement:
    """c⁻¹ · x · c."""
    return conjugate_by_coxeter(x, -1)


def sigma_element(x: GermElement) -> GermElement:
    return require_member(sigma(x.perm), x.strip)


# ---------------------------------------------------------------------------
# Bounded enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GermEnumeration:
    elements: tuple[GermElement, ...]
    window: int
    complete: bool

    def __iter__(self) -> Iterator[GermElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _is_sigma_stable(p: PeriodicPartition) -> bool:
    return sigma_partition(p) == p


def enumerate_elements(
    strip: Strip, window: int, sigma_stable: bool = False
) -> GermEnumeration:
    """Germ elements whose finite parts span fewer than window·N (never complete)."""
    partitions = enumerate_partitions(strip, window)
    elements = tuple(
        from_partition(p) for p in partitions if not sigma_stable or _is_sigma_stable(p)
    )
    logger.debug(
        "enumerated %d %selements at window %d",
        len(elements),
        "sigma-stable " if sigma_stable else "",
        window,
    )
    return GermEnumeration(elements, window, False)


def divisors(x: GermElement, window: int, sigma_stable: bool | None = None) -> GermEnumeration:
    """Left divisors of *x* inside the window; complete when x has no pseudo-cycle.

    By default sigma-fixed elements get their sigma-fixed divisors.
    """
    if sigma_stable is None:
        sigma_stable = x.sigma_stable
    partitions = enumerate_partitions(x.strip, window, within=x.partition)
    elements = tuple(
        from_partition(p) for p in partitions if not sigma_stable or _is_sigma_stable(p)
    )
    return GermEnumeration(elements, window, partitions.complete)
