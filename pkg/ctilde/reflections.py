"""Reflections of W(C-tilde) seen inside the 2n-periodic permutations.

A reflection is either *long*, a single sigma-stable transposition (a, b)
with a + b ≡ 1 (mod 2n), or *paired*, the product (a, b)(1-a, 1-b) of a
transposition and its sigma-image.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Literal

from ctilde.errors import CycleSyntaxError, NotDivisibleError, NotSigmaStableError, WindowError
from ctilde.germ import GermElement, divides, left_quotient, membership, require_member
from ctilde.periodic import (
    PeriodicPermutation,
    Strip,
    conjugate as conjugate_perm,
    cycle_decomposition,
    product,
    residue,
    transposition,
)

logger = logging.getLogger(__name__)

Kind = Literal["long", "paired"]


def _canonical_pair(a: int, b: int, period: int) -> tuple[int, int]:
    a, b = min(a, b), max(a, b)
    offset = (a - 1) // period * period
    return a - offset, b - offset


@dataclass(frozen=True, order=True)
class CtildeReflection:
    """Canonical form: each transposition translated so its smaller entry is in [1, N]."""

    period: int
    kind: Kind
    a: int
    b: int

    @classmethod
    def long(cls, a: int, b: int, period: int) -> "CtildeReflection":
        if (a + b - 1) % period:
            raise CycleSyntaxError(f"({a},{b}) is not sigma-stable: a + b must be 1 mod {period}")
        a, b = _canonical_pair(a, b, period)
        return cls(period, "long", a, b)

    @classmethod
    def paired(cls, a: int, b: int, period: int) -> "CtildeReflection":
        if (a - b) % period == 0:
            raise CycleSyntaxError(f"({a},{b}) has equal residues modulo {period}")
        if (a + b - 1) % period == 0:
            raise CycleSyntaxError(f"({a},{b}) is sigma-stable; use a long reflection")
        first = _canonical_pair(a, b, period)
        second = _canonical_pair(1 - a, 1 - b, period)
        a, b = min(first, second)
        return cls(period, "paired", a, b)

    @classmethod
    def through(cls, a: int, b: int, period: int) -> "CtildeReflection":
        """The reflection whose support contains the transposition (a, b)."""
        if (a + b - 1) % period == 0:
            return cls.long(a, b, period)
        return cls.paired(a, b, period)

    @classmethod
    def from_permutation(cls, w: PeriodicPermutation) -> "CtildeReflection | None":
        decomposition = cycle_decomposition(w)
        if decomposition.infinite_cycles:
            return None
        cycles = decomposition.finite_cycles
        if any(len(entries) != 2 for entries in cycles) or len(cycles) not in (1, 2):
            return None
        a, b = cycles[0]
        try:
            candidate = cls.through(a, b, w.period)
        except CycleSyntaxError:
            return None
        return candidate if candidate.perm == w else None

    @property
    def transpositions(self) -> tuple[tuple[int, int], ...]:
        if self.kind == "long":
            return ((self.a, self.b),)
        return ((self.a, self.b), _canonical_pair(1 - self.a, 1 - self.b, self.period))

    @property
    def k(self) -> int:
        """For a long reflection (a, 2kn+1-a), the integer k."""
        if self.kind != "long":
            raise ValueError("only long reflections carry k")
        return (self.a + self.b - 1) // self.period

    @property
    def span(self) -> int:
        return self.b - self.a

    @property
    def perm(self) -> PeriodicPermutation:
        return product(
            (transposition(a, b, self.period) for a, b in self.transpositions), self.period
        )

    def element(self) -> GermElement:
        return require_member(self.perm, Strip.ctilde(self.period // 2))

    def in_window(self, window: int) -> bool:
        return self.span < window * self.period

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.transpositions)


def conjugate(rho: CtildeReflection, w: PeriodicPermutation) -> CtildeReflection:
    """w·ρ·w⁻¹ for a sigma-commuting w."""
    image = CtildeReflection.from_permutation(conjugate_perm(w, rho.perm))
    if image is None:
        raise ValueError(f"conjugating {rho} does not give a C-tilde reflection")
    return image


def reflections_in_window(n: int, window: int) -> list[CtildeReflection]:
    """All reflections whose transpositions span fewer than window·2n."""
    if window < 1:
        raise WindowError(f"window must be at least 1, got {window}")
    period = 2 * n
    found = set()
    for a in range(1, period + 1):
        for b in range(a + 1, a + window * period):
            if (b - a) % period:
                found.add(CtildeReflection.through(a, b, period))
    return sorted(found)


def is_conjugate_to_end_generator(rho: CtildeReflection) -> str | None:
    """Which end generator ρ is conjugate to: ``"sigma_0"``, ``"sigma_n"`` or neither.

    Reflections conjugate in W(C-tilde) have the same image in the
    abelianization, where the classes of σ0, σn and σ1, ..., σ(n-1) differ.
    A long reflection (a, 2kn+1-a) is conjugate to (kn, kn+1): to σn for odd
    k and to σ0 = (0, 1) for even k.
    """
    if rho.kind == "paired":
        return None
    return "sigma_n" if rho.k % 2 else "sigma_0"


# ---------------------------------------------------------------------------
# Atoms below an element
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AtomList:
    atoms: tuple[CtildeReflection, ...]
    window: int
    complete: bool

    def __iter__(self) -> Iterator[CtildeReflection]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)


def _candidate_pairs(x: GermElement, window: int) -> Iterator[tuple[int, int]]:
    n = x.period
    for part in x.partition.finite_parts:
        ordered = sorted(part)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1 :]:
                yield u, v
    if x.partition.infinite_part is not None:
        residues = x.partition.infinite_part
        for u in sorted(residues):
            for v in range(u + 1, u + window * n):
                if residue(v, n) in residues and (v - u) % n:
                    yield u, v


def atoms_dividing(x: GermElement, window: int) -> AtomList:
    """Reflections dividing x.

    Pairs inside finite parts are all tried; pairs inside the infinite part are
    limited to spans below window·N, so the list is exhaustive exactly when x
    has no pseudo-cycle.
    """
    if not x.sigma_stable:
        raise NotSigmaStableError(f"{x} is not fixed by sigma")
    found = set()
    for u, v in _candidate_pairs(x, window):
        rho = CtildeReflection.through(u, v, x.period)
        element = membership(rho.perm, x.strip)
        if element is not None and divides(element, x):
            found.add(rho)
    complete = x.partition.infinite_part is None
    logger.debug("%d atoms divide %s (window %d, complete=%s)", len(found), x, window, complete)
    return AtomList(tuple(sorted(found)), window, complete)


def quotient_by_reflection(rho: CtildeReflection, u: GermElement) -> GermElement:
    """ρ·u for a reflection ρ dividing u; lowers the C-tilde length by one."""
    element = membership(rho.perm, u.strip)
    if element is None or not divides(element, u):
        raise NotDivisibleError(f"{rho} does not divide {u}")
    return left_quotient(element, u)


def reflection_product(reflections: tuple[CtildeReflection, ...], period: int) -> PeriodicPermutation:
    """Right-to-left product of reflections."""
    return product((rho.perm for rho in reflections), period)


def lift_pairs(rho: CtildeReflection) -> list[PeriodicPermutation]:
    """The one or two type-A transpositions making up ρ."""
    return [transposition(a, b, rho.period) for a, b in rho.transpositions]

