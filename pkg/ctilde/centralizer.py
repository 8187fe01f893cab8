"""Centralizers of powers of the Coxeter element.

The elements of the sigma-fixed germ commuting with c^h form a sub-germ with
the same Garside element.  It is compared against the dual germ of type C_d,
d = gcd(h, n), realised independently as d-periodic non-crossing permutations
of a single line.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import networkx as nx

from ctilde.errors import NotInGermError, PeriodMismatchError
from ctilde.germ import (
    GermElement,
    conjugate_by_coxeter,
    divides,
    enumerate_elements,
    germ_product,
)
from ctilde.noncrossing import (
    PeriodicPartition,
    element_of,
    enumerate_partitions,
    partition_of,
    refines,
    validate,
)
from ctilde.periodic import (
    PeriodicPermutation,
    Strip,
    compose,
    cycle_decomposition,
    format_cycles,
)

logger = logging.getLogger(__name__)


def is_fixed_by(x: GermElement, h: int) -> bool:
    """c^h · x · c^-h == x."""
    return conjugate_by_coxeter(x, h) == x


# ---------------------------------------------------------------------------
# The dual germ of type C_k on a single line
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TypeCGermElement:
    perm: PeriodicPermutation
    partition: PeriodicPartition
    length: int

    @property
    def rank(self) -> int:
        return self.perm.period

    @property
    def is_identity(self) -> bool:
        return self.perm.is_identity

    def __str__(self) -> str:
        return format_cycles(self.perm)


def _typec_length(w: PeriodicPermutation) -> int:
    decomposition = cycle_decomposition(w)
    return sum(len(entries) - 1 for entries in decomposition.finite_cycles) + sum(
        len(entries) for entries, _ in decomposition.infinite_cycles
    )


def typec_require(w: PeriodicPermutation) -> TypeCGermElement:
    """Ascending non-crossing cycles on one line, at most one of them infinite with shift 1."""
    strip = Strip.one_line(w.period)
    partition = validate(partition_of(w, strip))
    if element_of(partition) != w:
        raise NotInGermError(
            f"{format_cycles(w)} is not a positive non-crossing permutation of the line",
            clause="orientation",
        )
    return TypeCGermElement(w, partition, _typec_length(w))


def typec_membership(w: PeriodicPermutation) -> TypeCGermElement | None:
    try:
        return typec_require(w)
    except NotInGermError:
        return None


def typec_product(x: TypeCGermElement, y: TypeCGermElement) -> TypeCGermElement | None:
    if x.rank != y.rank:
        raise PeriodMismatchError(f"ranks differ: {x.rank} vs {y.rank}")
    z = typec_membership(compose(x.perm, y.perm))
    if z is None or z.length != x.length + y.length:
        return None
    return z


def typec_divides(x: TypeCGermElement, y: TypeCGermElement) -> bool:
    return refines(x.partition, y.partition)


def typec_germ(k: int) -> tuple[TypeCGermElement, ...]:
    """All divisors of the type-C_k Coxeter element (translation by one)."""
    if k < 1:
        raise ValueError(f"rank must be positive, got {k}")
    partitions = enumerate_partitions(Strip.one_line(k), window=1)
    return tuple(typec_require(element_of(p)) for p in partitions)


# ---------------------------------------------------------------------------
# Fixed sub-germs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FixedSubgerm:
    """Sigma-fixed elements commuting with c^h, listed within an offset window.

    Fixed elements only have one-sided finite parts, which always fit in one
    period, so the list is exhaustive for every window.
    """

    h: int
    n: int
    window: int
    elements: tuple[GermElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def product(self, x: GermElement, y: GermElement) -> GermElement | None:
        return germ_product(x, y)

    @property
    def atoms(self) -> tuple[GermElement, ...]:
        return _atoms(self.elements, divides)


def fixed_subgerm(h: int, n: int, window: int = 1) -> FixedSubgerm:
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    strip = Strip.ctilde(n)
    elements = tuple(
        x for x in enumerate_elements(strip, window, sigma_stable=True) if is_fixed_by(x, h)
    )
    logger.debug("c^%d fixes %d elements at rank %d (window %d)", h, len(elements), n, window)
    return FixedSubgerm(h, n, window, elements)


def iso_to_typeC(x: GermElement, n: int) -> TypeCGermElement:
    """Restrict x to X and reindex by 2k+1 -> k."""
    if x.period != 2 * n:
        raise PeriodMismatchError(f"{x} has period {x.period}, rank {n} needs {2 * n}")
    if not x.sigma_stable or not is_fixed_by(x, n):
        raise NotInGermError(f"{x} is not fixed by c^{n}", clause="fixed")
    images = tuple((x.perm(2 * k + 1) - 1) // 2 for k in range(1, n + 1))
    return typec_require(PeriodicPermutation(n, images))


# ---------------------------------------------------------------------------
# Comparing lattice shapes
# ---------------------------------------------------------------------------


def _atoms(elements, divides_fn) -> tuple:
    nontrivial = [x for x in elements if not x.is_identity]
    return tuple(
        x
        for x in nontrivial
        if not any(y != x and divides_fn(y, x) for y in nontrivial)
    )


def hasse_diagram(elements, divides_fn) -> nx.DiGraph:
    """Cover relations of the divisibility order."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    below = {
        (i, j)
        for i, x in enumerate(elements)
        for j, y in enumerate(elements)
        if i != j and divides_fn(x, y)
    }
    for i, j in below:
        if not any((i, k) in below and (k, j) in below for k in range(len(elements))):
            graph.add_edge(i, j)
    return graph


@dataclass(frozen=True)
class CentralizerReport:
    h: int
    n: int
    d: int
    window: int
    fixed_divisors: int
    fixed_atoms: int
    typec_divisors: int
    typec_atoms: int
    lattice_isomorphic: bool

    @property
    def matches(self) -> bool:
        return (
            self.fixed_divisors == self.typec_divisors
            and self.fixed_atoms == self.typec_atoms
            and self.lattice_isomorphic
        )


def verify_centralizer_type(h: int, n: int, window: int = 1) -> CentralizerReport:
    """Compare the c^h-fixed sub-germ with the dual germ of type C_gcd(h, n)."""
    d = math.gcd(h, n)
    fixed = fixed_subgerm(h, n, window)
    typec = typec_germ(d)
    isomorphic = nx.is_isomorphic(
        hasse_diagram(fixed.elements, divides), hasse_diagram(typec, typec_divides)
    )
    report = CentralizerReport(
        h=h,
        n=n,
        d=d,
        window=window,
        fixed_divisors=len(fixed),
        fixed_atoms=len(fixed.atoms),
        typec_divisors=len(typec),
        typec_atoms=len(_atoms(typec, typec_divides)),
        lattice_isomorphic=isomorphic,
    )
    logger.debug("centralizer of c^%d at rank %d: %s", h, n, report)
    return report
