"""Exact arithmetic of N-periodic permutations of the integers.

A permutation ``w`` is stored by its window ``(w(1), ..., w(N))``; the rule
``w(i + N) = w(i) + N`` extends it to all of Z.  Products are functional and
read right to left: ``compose(w, v)`` applies ``v`` first.

Cycle text format::

    (1,3,4,2)            finite cycle
    (1,3)[1](4,2)[-1]    two infinite cycles, the image of the last entry
                         is the first entry shifted by h periods
    ()                   identity

Juxtaposed cycles that are not disjoint are multiplied right to left.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ctilde.errors import CycleSyntaxError, NotInGermError, PeriodMismatchError

# ---------------------------------------------------------------------------
# Strips: the choice of the two boundary lines X and Xi
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Strip:
    """Residue classes mod *period* placed on the line X; the rest form Xi.

    Points of X are read ascending along one boundary of the strip and the
    points of Xi descending along the other.  A strip whose Xi is empty is a
    single line, which is how the finite type-C germ is modelled.
    """

    period: int
    x_residues: frozenset[int]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be positive, got {self.period}")
        bad = [r for r in self.x_residues if not 1 <= r <= self.period]
        if bad:
            raise ValueError(f"X residues must lie in [1, {self.period}]: {sorted(bad)}")
        if not self.x_residues:
            raise ValueError("X must contain at least one residue")

    @classmethod
    def ctilde(cls, n: int) -> "Strip":
        """X = odd integers, Xi = even integers, period 2n."""
        if n < 1:
            raise ValueError(f"rank must be positive, got {n}")
        return cls(2 * n, frozenset(range(1, 2 * n + 1, 2)))

    @classmethod
    def one_line(cls, period: int) -> "Strip":
        return cls(period, frozenset(range(1, period + 1)))

    @property
    def xi_residues(self) -> frozenset[int]:
        return frozenset(range(1, self.period + 1)) - self.x_residues

    @property
    def is_one_line(self) -> bool:
        return len(self.x_residues) == self.period

    @property
    def is_ctilde(self) -> bool:
        return self.period % 2 == 0 and self == Strip.ctilde(self.period // 2)

    def residue(self, i: int) -> int:
        return residue(i, self.period)

    def in_x(self, i: int) -> bool:
        return self.residue(i) in self.x_residues

    def boundary_key(self, i: int) -> tuple[int, int]:
        """Position of *i* on the strip boundary: X ascending, then Xi descending."""
        return (0, i) if self.in_x(i) else (1, -i)

    def coxeter_element(self) -> "PeriodicPermutation":
        """The map x_i -> x_{i+1} on X and xi_i -> xi_{i-1} on Xi."""
        images = []
        for i in range(1, self.period + 1):
            step = 1 if self.in_x(i) else -1
            j = i + step
            while self.in_x(j) != self.in_x(i):
                j += step
            images.append(j)
        return PeriodicPermutation(self.period, tuple(images))


def residue(i: int, period: int) -> int:
    """Representative of *i* modulo *period* in [1, period]."""
    return (i - 1) % period + 1


# ---------------------------------------------------------------------------
# Periodic permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicPermutation:
    period: int
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.window) != self.period:
            raise ValueError(
                f"window has {len(self.window)} images, period is {self.period}"
            )
        if sorted(residue(x, self.period) for x in self.window) != list(
            range(1, self.period + 1)
        ):
            raise ValueError(f"window {self.window} is not a bijection modulo {self.period}")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.period)
        return self.window[r] + q * self.period

    def __mul__(self, other: "PeriodicPermutation") -> "PeriodicPermutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_cycles(self)

    @property
    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.window, start=1))

    def support(self) -> frozenset[int]:
        """Residues moved by the permutation."""
        return frozenset(
            residue(i, self.period) for i, x in enumerate(self.window, start=1) if x != i
        )


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of a periodic permutation in canonical form.

    Finite cycles start at their minimal element, which lies in [1, N].
    Infinite cycles ``(entries, h)`` use the rotation with the fewest entries
    outside [1, N] (ties broken lexicographically), first entry in [1, N].
    """

    period: int
    finite_cycles: tuple[tuple[int, ...], ...]
    infinite_cycles: tuple[tuple[tuple[int, ...], int], ...]

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for entries in self.finite_cycles:
            yield entries, 0
        yield from self.infinite_cycles

    def __len__(self) -> int:
        return len(self.finite_cycles) + len(self.infinite_cycles)

    def __str__(self) -> str:
        if not len(self):
            return "()"
        return "".join(_format_cycle(entries, shift) for entries, shift in self)


def _check_periods(*perms: PeriodicPermutation) -> int:
    periods = {w.period for w in perms}
    if len(periods) != 1:
        raise PeriodMismatchError(f"periods differ: {sorted(periods)}")
    return periods.pop()


def identity(period: int) -> PeriodicPermutation:
    return PeriodicPermutation(period, tuple(range(1, period + 1)))


def compose(w: PeriodicPermutation, v: PeriodicPermutation) -> PeriodicPermutation:
    """Return w∘v, the permutation i -> w(v(i))."""
    period = _check_periods(w, v)
    return PeriodicPermutation(period, tuple(w(x) for x in v.window))


def product(perms: Iterable[PeriodicPermutation], period: int) -> PeriodicPermutation:
    """Right-to-left product of *perms* (the last factor is applied first)."""
    return functools.reduce(compose, perms, identity(period))


def inverse(w: PeriodicPermutation) -> PeriodicPermutation:
    n = w.period
    images = [0] * n
    for i, x in enumerate(w.window, start=1):
        q, r = divmod(x - 1, n)
        images[r] = i - q * n
    return PeriodicPermutation(n, tuple(images))


def power(w: PeriodicPermutation, m: int) -> PeriodicPermutation:
    base = w if m >= 0 else inverse(w)
    result = identity(w.period)
    for _ in range(abs(m)):
        result = compose(base, result)
    return result


def conjugate(g: PeriodicPermutation, w: PeriodicPermutation) -> PeriodicPermutation:
    """Return g∘w∘g⁻¹."""
    return compose(compose(g, w), inverse(g))


def cycle(entries: Sequence[int], period: int, shift: int = 0) -> PeriodicPermutation:
    """The periodic cycle a_1 -> a_2 -> ... -> a_k -> a_1 + shift·N."""
    if not entries:
        raise CycleSyntaxError("a cycle needs at least one entry")
    if len({residue(a, period) for a in entries}) != len(entries):
        raise CycleSyntaxError(
            f"cycle entries {tuple(entries)} are not distinct modulo {period}"
        )
    images = list(range(1, period + 1))
    for idx, a in enumerate(entries):
        b = entries[idx + 1] if idx + 1 < len(entries) else entries[0] + shift * period
        q, r = divmod(a - 1, period)
        images[r] = b - q * period
    return PeriodicPermutation(period, tuple(images))


def transposition(a: int, b: int, period: int) -> PeriodicPermutation:
    """The periodic transposition swapping a + jN and b + jN for every j."""
    return cycle((a, b), period)


def simple_reflection(i: int, period: int) -> PeriodicPermutation:
    """s_i = (i, i+1)."""
    return transposition(i, i + 1, period)


def from_cycles(decomposition: CycleDecomposition) -> PeriodicPermutation:
    return product(
        (cycle(entries, decomposition.period, shift) for entries, shift in decomposition),
        decomposition.period,
    )


def _canonical_finite(entries: list[int], period: int) -> tuple[int, ...]:
    j = entries.index(min(entries))
    rotated = entries[j:] + entries[:j]
    offset = (rotated[0] - 1) // period * period
    return tuple(e - offset for e in rotated)


def _canonical_infinite(entries: list[int], shift: int, period: int) -> tuple[int, ...]:
    candidates = []
    for j in range(len(entries)):
        rotated = entries[j:] + [e + shift * period for e in entries[:j]]
        offset = (rotated[0] - 1) // period * period
        rotated = [e - offset for e in rotated]
        outside = sum(not 1 <= e <= period for e in rotated)
        candidates.append((outside, tuple(rotated)))
    return min(candidates)[1]


def cycle_decomposition(w: PeriodicPermutation) -> CycleDecomposition:
    n = w.period
    seen: set[int] = set()
    finite: list[tuple[int, ...]] = []
    infinite: list[tuple[tuple[int, ...], int]] = []
    for start in range(1, n + 1):
        if start in seen or w(start) == start:
            continue
        entries = [start]
        seen.add(start)
        x = w(start)
        while (x - start) % n:
            entries.append(x)
            seen.add(residue(x, n))
            x = w(x)
        shift = (x - start) // n
        if shift == 0:
            finite.append(_canonical_finite(entries, n))
        else:
            infinite.append((_canonical_infinite(entries, shift, n), shift))
    finite.sort()
    infinite.sort(key=lambda item: (-item[1], item[0]))
    return CycleDecomposition(n, tuple(finite), tuple(infinite))


def total_shift(w: PeriodicPermutation) -> int:
    """(1/N)·Σ_{i=1..N} (w(i) − i); always an integer."""
    return sum(x - i for i, x in enumerate(w.window, start=1)) // w.period


def sigma(w: PeriodicPermutation) -> PeriodicPermutation:
    """Conjugate by the involution i -> 1 − i."""
    if w.period % 2:
        raise ValueError(f"sigma needs an even period, got {w.period}")
    return PeriodicPermutation(w.period, tuple(1 - w(1 - i) for i in range(1, w.period + 1)))


def coxeter_element(n: int) -> PeriodicPermutation:
    """c = s_2 s_4 ... s_2n s_1 s_3 ... s_{2n-1}: odd i -> i+2, even i -> i-2."""
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    period = 2 * n
    return PeriodicPermutation(
        period, tuple(i + 2 if i % 2 else i - 2 for i in range(1, period + 1))
    )


def reflection_length_A(w: PeriodicPermutation) -> int:
    """Reflection length in the affine symmetric group, for elements of the germ.

    A finite cycle of length h contributes h − 1; a pseudo-cycle whose two
    infinite cycles have lengths h and l contributes h + l.
    """
    return len(reflection_factorization(w))


# ---------------------------------------------------------------------------
# Shortest reflection factorizations of cycles and pseudo-cycles
# ---------------------------------------------------------------------------


def cycle_factorization(entries: Sequence[int], period: int) -> list[PeriodicPermutation]:
    """(a_1,...,a_h) = (a_1,a_2)(a_2,a_3)...(a_{h-1},a_h)."""
    return [transposition(a, b, period) for a, b in zip(entries, entries[1:])]


def pseudo_cycle_factorization(
    a_block: Sequence[int], alpha_block: Sequence[int], period: int
) -> list[PeriodicPermutation]:
    """Factor (a_1..a_h)[1](alpha_1..alpha_l)[-1] into h + l transpositions."""
    a_h, alpha_1 = a_block[-1], alpha_block[0]
    return (
        cycle_factorization(a_block, period)
        + [transposition(a_h, alpha_1, period), transposition(a_h, period + alpha_1, period)]
        + cycle_factorization(alpha_block, period)
    )


def reflection_factorization(w: PeriodicPermutation) -> list[PeriodicPermutation]:
    """A shortest product of transpositions equal to *w*, cycle by cycle.

    Only finite cycles and at most one pseudo-cycle are allowed.
    """
    decomposition = cycle_decomposition(w)
    shifts = sorted(shift for _, shift in decomposition.infinite_cycles)
    if shifts not in ([], [-1, 1]):
        raise NotInGermError(
            f"{decomposition} has infinite cycles with shifts {shifts}; "
            "only a single pseudo-cycle is allowed",
            clause="pseudo_cycle",
        )
    factors = []
    for entries in decomposition.finite_cycles:
        factors.extend(cycle_factorization(entries, w.period))
    if shifts:
        # infinite cycles are listed with the shift +1 cycle first
        (ascending, _), (descending, _) = decomposition.infinite_cycles
        factors.extend(pseudo_cycle_factorization(ascending, descending, w.period))
    return factors


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(\s*([^()\[\]]*?)\s*\)(?:\[\s*([+-]?\d+)\s*\])?")
_IDENTITY_SPELLINGS = {"", "()", "1", "id", "e"}


def _format_cycle(entries: Sequence[int], shift: int) -> str:
    body = "(" + ",".join(str(e) for e in entries) + ")"
    return body if shift == 0 else f"{body}[{shift}]"


def format_cycles(w: PeriodicPermutation) -> str:
    return str(cycle_decomposition(w))


def parse_cycles(text: str, period: int) -> PeriodicPermutation:
    """Parse cycle notation into a permutation of the given period."""
    compact = re.sub(r"\s+", "", text)
    if compact in _IDENTITY_SPELLINGS:
        return identity(period)
    factors = []
    position = 0
    for match in _CYCLE_RE.finditer(compact):
        if match.start() != position:
            raise CycleSyntaxError(f"unexpected text {compact[position:match.start()]!r}")
        position = match.end()
        body, shift = match.group(1), match.group(2)
        if not body:
            continue
        try:
            entries = [int(token) for token in body.split(",")]
        except ValueError as exc:
            raise CycleSyntaxError(f"bad cycle entries {body!r}") from exc
        factors.append(cycle(entries, period, int(shift) if shift else 0))
    if position != len(compact):
        raise CycleSyntaxError(f"unexpected text {compact[position:]!r}")
    return product(factors, period)
