"""Reduced reflection decompositions and the Hurwitz action on them."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from ctilde.errors import NotInGermError, WindowError
from ctilde.germ import GermElement, coxeter, membership, reflection_length_C
from ctilde.periodic import PeriodicPermutation, Strip, power
from ctilde.reflections import (
    CtildeReflection,
    atoms_dividing,
    conjugate,
    lift_pairs,
    quotient_by_reflection,
    reflection_product,
)
from ctilde.settings import DEFAULT_ORBIT_CAP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReflectionTuple:
    entries: tuple[CtildeReflection, ...]
    target: GermElement

    def __post_init__(self) -> None:
        if reflection_product(self.entries, self.target.period) != self.target.perm:
            raise ValueError(f"{self} does not multiply to {self.target}")

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + ", ".join(str(rho) for rho in self.entries) + "]"

    @property
    def is_reduced(self) -> bool:
        return len(self.entries) == reflection_length_C(self.target)

    def max_span(self) -> int:
        return max((rho.span for rho in self.entries), default=0)


def hurwitz_move(t: ReflectionTuple, i: int, direction: int = 1) -> ReflectionTuple:
    """Act on positions i, i+1 (1-based).

    direction +1: (gi, gi+1) -> (gi·gi+1·gi⁻¹, gi)
    direction -1: (gi, gi+1) -> (gi+1, gi+1⁻¹·gi·gi+1)
    """
    if not 1 <= i < len(t.entries):
        raise IndexError(f"move index {i} outside 1..{len(t.entries) - 1}")
    if direction not in (1, -1):
        raise ValueError(f"direction must be +1 or -1, got {direction}")
    entries = list(t.entries)
    g, h = entries[i - 1], entries[i]
    if direction == 1:
        entries[i - 1 : i + 1] = [conjugate(h, g.perm), g]
    else:
        entries[i - 1 : i + 1] = [h, conjugate(g, h.perm)]
    return ReflectionTuple(tuple(entries), t.target)


# ---------------------------------------------------------------------------
# Reduced decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionSet:
    tuples: tuple[ReflectionTuple, ...]
    window: int
    complete: bool

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)


def reduced_decompositions(w: GermElement, window: int) -> DecompositionSet:
    """Every way of peeling atoms off w, exhaustive when w has no pseudo-cycle."""
    memo: dict[GermElement, list[tuple[CtildeReflection, ...]]] = {}

    def peel(x: GermElement) -> list[tuple[CtildeReflection, ...]]:
        if x.is_identity:
            return [()]
        if x not in memo:
            found = []
            for rho in atoms_dividing(x, window):
                rest = quotient_by_reflection(rho, x)
                found.extend((rho,) + tail for tail in peel(rest))
            memo[x] = found
        return memo[x]

    tuples = tuple(ReflectionTuple(entries, w) for entries in peel(w))
    complete = w.partition.infinite_part is None
    logger.debug("%d reduced decompositions of %s (window %d)", len(tuples), w, window)
    return DecompositionSet(tuples, window, complete)


# ---------------------------------------------------------------------------
# Orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitReport:
    tuples: frozenset[tuple[CtildeReflection, ...]]
    cap: int
    truncated: bool

    def __len__(self) -> int:
        return len(self.tuples)


def orbit(t: ReflectionTuple, cap: int = DEFAULT_ORBIT_CAP, window: int | None = None) -> OrbitReport:
    """Breadth-first closure under Hurwitz moves.

    With *window*, tuples containing a reflection of span window·N or more are
    not explored.
    """
    limit = window * t.target.period if window is not None else None
    seen = {t.entries}
    queue = deque([t])
    truncated = False
    while queue:
        current = queue.popleft()
        for i in range(1, len(current.entries)):
            for direction in (1, -1):
                moved = hurwitz_move(current, i, direction)
                if moved.entries in seen:
                    continue
                if limit is not None and moved.max_span() >= limit:
                    continue
                if len(seen) >= cap:
                    truncated = True
                    continue
                seen.add(moved.entries)
                queue.append(moved)
    if truncated:
        logger.warning("Hurwitz orbit of %s truncated at %d tuples", t, cap)
    return OrbitReport(frozenset(seen), cap, truncated)


@dataclass(frozen=True)
class TransitivityReport:
    targets: int
    reached: int
    missing: tuple[tuple[CtildeReflection, ...], ...]
    window: int
    search_window: int
    truncated: bool

    @property
    def transitive(self) -> bool:
        return not self.missing


def transitive_within_window(
    w: GermElement,
    window: int,
    search_window: int,
    start: ReflectionTuple | None = None,
    cap: int = DEFAULT_ORBIT_CAP,
) -> TransitivityReport:
    """Are all window-K decompositions of w reachable from *start* inside the search window?"""
    if search_window < window:
        raise WindowError(f"search window {search_window} is smaller than window {window}")
    targets = reduced_decompositions(w, window)
    if not targets.tuples:
        return TransitivityReport(0, 0, (), window, search_window, False)
    start = start or targets.tuples[0]
    reached = orbit(start, cap, search_window)
    missing = tuple(t.entries for t in targets if t.entries not in reached.tuples)
    logger.debug(
        "transitivity for %s: %d of %d reached", w, len(targets) - len(missing), len(targets)
    )
    return TransitivityReport(
        len(targets), len(targets) - len(missing), missing, window, search_window, reached.truncated
    )


def rotate(t: ReflectionTuple) -> ReflectionTuple:
    """(ρ1, ..., ρm) -> (ρ2, ..., ρm, c⁻¹ρ1c) through the moves (1,-1), ..., (m-1,-1)."""
    if t.target != coxeter(t.target.strip):
        raise ValueError(f"rotation needs the Coxeter element as target, got {t.target}")
    for i in range(1, len(t.entries)):
        t = hurwitz_move(t, i, -1)
    return t


def lift_to_type_a(t: ReflectionTuple) -> list[PeriodicPermutation]:
    """Replace each reflection by its one or two transpositions."""
    return [tau for rho in t.entries for tau in lift_pairs(rho)]


# ---------------------------------------------------------------------------
# Conjugating reflections into the two type-C parabolic subgroups
# ---------------------------------------------------------------------------


def w_prime_reflections(n: int) -> frozenset[CtildeReflection]:
    """Reflections of the parabolic subgroup without σ0."""
    period = 2 * n
    found = {CtildeReflection.long(a, period + 1 - a, period) for a in range(1, n + 1)}
    for a in range(1, period + 1):
        for b in range(a + 1, period + 1):
            if a + b != period + 1:
                found.add(CtildeReflection.paired(a, b, period))
    return frozenset(found)


def w_double_prime_reflections(n: int) -> frozenset[CtildeReflection]:
    """Reflections of the parabolic subgroup without σn."""
    period = 2 * n
    found = {CtildeReflection.long(a, 1 - a, period) for a in range(1, n + 1)}
    for a in range(1 - n, n + 1):
        for b in range(a + 1, n + 1):
            if a + b != 1:
                found.add(CtildeReflection.paired(a, b, period))
    return frozenset(found)


@dataclass(frozen=True)
class Classification:
    """c^m · ρ · c^-m = target, with target in the named parabolic subgroup."""

    power: int
    target: CtildeReflection
    parabolic: str


def _coxeter_shift(x: int, m: int) -> int:
    return x + 2 * m if x % 2 else x - 2 * m


def classify_reflection(rho: CtildeReflection, n: int) -> Classification:
    period = 2 * n
    if rho.period != period:
        raise ValueError(f"{rho} has period {rho.period}, rank {n} needs {period}")
    if membership(rho.perm, Strip.ctilde(n)) is None:
        raise NotInGermError(f"{rho} does not divide c", clause="reflection")
    w_prime, w_double_prime = w_prime_reflections(n), w_double_prime_reflections(n)
    if rho in w_prime:
        return Classification(0, rho, "W'")
    if rho in w_double_prime:
        return Classification(0, rho, "W''")

    if rho.kind == "long":
        a, b = rho.a, rho.b
        odd = a if a % 2 else b
        kn = rho.k * n
        target_odd = kn if kn % 2 else kn + 1
        m = (target_odd - odd) // 2
        target = CtildeReflection.long(kn, kn + 1, period)
    else:
        pairs = rho.transpositions
        same = [p for p in pairs if p[0] % 2 == p[1] % 2 == 1]
        if same:
            a, b = same[0]
            m = (1 - a) // 2
            target = CtildeReflection.paired(1, b + 1 - a, period)
        else:
            a, b = next((p, q) if p % 2 else (q, p) for p, q in pairs[:1])
            total = a + b
            j = (total - 1) // 2
            odd_end = j if j % 2 else j + 1
            m = (odd_end - a) // 2
            target = CtildeReflection.paired(odd_end, total - odd_end, period)

    moved = CtildeReflection.through(
        _coxeter_shift(rho.a, m), _coxeter_shift(rho.b, m), period
    )
    c = coxeter(Strip.ctilde(n)).perm
    if moved != target or conjugate(rho, power(c, m)) != target:
        raise AssertionError(f"conjugating {rho} by c^{m} does not give {target}")
    parabolic = "W'" if target in w_prime else "W''" if target in w_double_prime else "?"
    if parabolic == "?":
        raise AssertionError(f"{target} lies in neither parabolic subgroup")
    return Classification(m, target, parabolic)


def end_generator_count(t: Iterable[CtildeReflection]) -> int:
    """How many reflections of the tuple are long, i.e. conjugate to σ0 or σn."""
    return sum(rho.kind == "long" for rho in t)
