"""Garside normal forms in the group generated by the sigma-fixed germ.

An element is written Δ^k · x1 ⋯ xm with every xi a proper, non-trivial
divisor of Δ = c and every adjacent pair left-weighted.  The normal form is
reached by local sliding: (x, y) becomes (x·t, t⁻¹·y) with t = gcd(x⁻¹Δ, y)
until no pair moves.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable

from ctilde.errors import WordSyntaxError
from ctilde.germ import (
    GermElement,
    conjugate_by_coxeter,
    coxeter,
    gcd,
    germ_product,
    left_complement,
    left_quotient,
    membership,
    parse_element,
    right_complement,
)
from ctilde.periodic import Strip, compose, transposition
from ctilde.reflections import (
    CtildeReflection,
    atoms_dividing,
    quotient_by_reflection,
    reflections_in_window,
)
from ctilde.settings import MAX_SLIDING_SWEEPS

logger = logging.getLogger(__name__)

Letter = tuple[int, int]


def _strip(n: int) -> Strip:
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    return Strip.ctilde(n)


def classical_generator(i: int, n: int) -> GermElement:
    """σ0 = (2n, 2n+1), σi = (i, i+1)(2n-i, 2n+1-i), σn = (n, n+1)."""
    strip = _strip(n)
    period = 2 * n
    if not 0 <= i <= n:
        raise WordSyntaxError(f"generator index {i} outside 0..{n}")
    if i == 0:
        perm = transposition(period, period + 1, period)
    elif i == n:
        perm = transposition(n, n + 1, period)
    else:
        perm = compose(
            transposition(i, i + 1, period), transposition(period - i, period + 1 - i, period)
        )
    element = membership(perm, strip)
    assert element is not None
    return element


def coxeter_word(n: int) -> tuple[Letter, ...]:
    """c = σ0 σ2 σ4 ... σ1 σ3 σ5 ...: even indices first."""
    evens = [(i, 1) for i in range(0, n + 1, 2)]
    odds = [(i, 1) for i in range(1, n + 1, 2)]
    return tuple(evens + odds)


def braid_relations(n: int) -> list[tuple[tuple[Letter, ...], tuple[Letter, ...]]]:
    """Braid relations of the C-tilde diagram: double bonds at both ends."""
    relations = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if j - i > 1:
                m = 2
            elif (i, j) in ((0, 1), (n - 1, n)):
                m = 4
            else:
                m = 3
            left = tuple((i if k % 2 == 0 else j, 1) for k in range(m))
            right = tuple((j if k % 2 == 0 else i, 1) for k in range(m))
            relations.append((left, right))
    return relations


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    n: int
    delta_power: int = 0
    body: tuple[GermElement, ...] = field(default_factory=tuple)

    @property
    def infimum(self) -> int:
        return self.delta_power

    @property
    def supremum(self) -> int:
        return self.delta_power + len(self.body)

    @property
    def canonical_length(self) -> int:
        return len(self.body)

    @property
    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.body

    def __str__(self) -> str:
        return format_normal_form(self)


def _left_weighted(factors: list[GermElement]) -> list[GermElement]:
    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        if sweeps > MAX_SLIDING_SWEEPS:
            raise RuntimeError(f"sliding did not stabilise after {MAX_SLIDING_SWEEPS} sweeps")
        for i in range(len(factors) - 1):
            x, y = factors[i], factors[i + 1]
            if y.is_identity:
                continue
            t = gcd(right_complement(x), y)
            if t.is_identity:
                continue
            head = germ_product(x, t)
            assert head is not None
            factors[i] = head
            factors[i + 1] = left_quotient(t, y)
            changed = True
    logger.debug("normal form reached after %d sliding sweep(s)", sweeps)
    return factors


def _normal_form(n: int, delta_power: int, factors: Iterable[GermElement]) -> GroupElement:
    delta = coxeter(_strip(n))
    factors = _left_weighted(list(factors))
    while factors and factors[0] == delta:
        factors.pop(0)
        delta_power += 1
    while factors and factors[-1].is_identity:
        factors.pop()
    return GroupElement(n, delta_power, tuple(factors))


def _twist(x: GermElement, power: int) -> GermElement:
    """φ^power(x) with φ(x) = Δ⁻¹xΔ, so that x·Δ^power = Δ^power·φ^power(x)."""
    return conjugate_by_coxeter(x, -power) if power else x


def identity(n: int) -> GroupElement:
    return GroupElement(n)


def delta(n: int, power: int = 1) -> GroupElement:
    return GroupElement(n, power)


def from_simple(x: GermElement, n: int) -> GroupElement:
    return _normal_form(n, 0, [x])


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.n != h.n:
        raise ValueError(f"ranks differ: {g.n} vs {h.n}")
    moved = [_twist(x, h.delta_power) for x in g.body]
    return _normal_form(g.n, g.delta_power + h.delta_power, moved + list(h.body))


def invert(g: GroupElement) -> GroupElement:
    """x⁻¹ = Δ⁻¹·(Δx⁻¹) for each factor, multiplied in reverse order."""
    result = delta(g.n, -g.delta_power)
    for x in g.body:
        result = multiply(_normal_form(g.n, -1, [left_complement(x)]), result)
    return result


def letter_element(index: int, exponent: int, n: int) -> GroupElement:
    generator = classical_generator(index, n)
    if exponent == 1:
        return from_simple(generator, n)
    return _normal_form(n, -1, [left_complement(generator)])


def normalize(word: Iterable[Letter], n: int) -> GroupElement:
    """Normal form of a word in σ0, ..., σn and their inverses."""
    result = identity(n)
    for index, exponent in word:
        result = multiply(result, letter_element(index, exponent, n))
    return result


def equals(first: Iterable[Letter], second: Iterable[Letter], n: int) -> bool:
    return normalize(first, n) == normalize(second, n)


def power(g: GroupElement, m: int) -> GroupElement:
    base = g if m >= 0 else invert(g)
    result = identity(g.n)
    for _ in range(abs(m)):
        result = multiply(result, base)
    return result


# ---------------------------------------------------------------------------
# Dual words: letters are reflections
# ---------------------------------------------------------------------------

DualLetter = tuple[CtildeReflection, int]


def normalize_dual(word: Iterable[DualLetter], n: int) -> GroupElement:
    result = identity(n)
    for rho, exponent in word:
        element = rho.element()
        piece = from_simple(element, n) if exponent == 1 else _normal_form(
            n, -1, [left_complement(element)]
        )
        result = multiply(result, piece)
    return result


def atom_word(x: GermElement, max_window: int = 4) -> list[CtildeReflection]:
    """Reflections ρ1, ..., ρm with x = ρ1 ⋯ ρm, each ρi the least atom available."""
    letters = []
    while not x.is_identity:
        for window in range(1, max_window + 1):
            atoms = atoms_dividing(x, window)
            if atoms.atoms:
                break
        else:
            raise RuntimeError(f"no atom of {x} found within window {max_window}")
        rho = atoms.atoms[0]
        letters.append(rho)
        x = quotient_by_reflection(rho, x)
    return letters


def word_of(g: GroupElement) -> list[DualLetter]:
    """A word in reflections and their inverses that normalizes back to g."""
    delta_letters = atom_word(coxeter(_strip(g.n)))
    if g.delta_power >= 0:
        word = [(rho, 1) for rho in delta_letters] * g.delta_power
    else:
        word = [(rho, -1) for rho in reversed(delta_letters)] * -g.delta_power
    for x in g.body:
        word.extend((rho, 1) for rho in atom_word(x))
    return word


# ---------------------------------------------------------------------------
# Dual presentation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualRelation:
    """r·t = (rtr)·r, valid whenever r·t divides c."""

    r: CtildeReflection
    t: CtildeReflection
    rtr: CtildeReflection
    product: GermElement

    def __str__(self) -> str:
        return f"{self.r}.{self.t} = {self.rtr}.{self.r}"


@dataclass(frozen=True)
class Presentation:
    n: int
    window: int
    generators: tuple[CtildeReflection, ...]
    relations: tuple[DualRelation, ...]
    truncated: bool = True


def emit_presentation(n: int, window: int) -> Presentation:
    """Dual relations among the reflections of the window that divide c."""
    strip = _strip(n)
    atoms = []
    for rho in reflections_in_window(n, window):
        element = membership(rho.perm, strip)
        if element is not None:
            atoms.append((rho, element))
    relations = []
    for r, r_el in atoms:
        for t, t_el in atoms:
            if r == t:
                continue
            rt = germ_product(r_el, t_el)
            if rt is None:
                continue
            rtr = CtildeReflection.from_permutation(compose(rt.perm, r.perm))
            assert rtr is not None
            relations.append(DualRelation(r, t, rtr, rt))
    logger.debug(
        "presentation n=%d window=%d: %d generators, %d relations",
        n,
        window,
        len(atoms),
        len(relations),
    )
    return Presentation(n, window, tuple(rho for rho, _ in atoms), tuple(relations))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_LETTER_RE = re.compile(r"s(\d+)(?:\^([+-]?1))?")


def parse_word(text: str, n: int) -> tuple[Letter, ...]:
    """Parse ``"s0 s1 s2^-1"`` into (index, exponent) letters."""
    letters = []
    for token in text.split():
        match = _LETTER_RE.fullmatch(token)
        if match is None:
            raise WordSyntaxError(f"bad letter {token!r}; expected s<i> or s<i>^-1")
        index = int(match.group(1))
        if index > n:
            raise WordSyntaxError(f"generator s{index} outside s0..s{n}")
        exponent = int(match.group(2)) if match.group(2) else 1
        letters.append((index, exponent))
    return tuple(letters)


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in word)


def format_normal_form(g: GroupElement) -> str:
    text = f"D^{g.delta_power} |"
    if g.body:
        text += " " + " . ".join(str(x) for x in g.body)
    return text


def parse_normal_form(text: str, n: int) -> GroupElement:
    head, bar, tail = text.partition("|")
    match = re.fullmatch(r"\s*D\^([+-]?\d+)\s*", head)
    if not bar or match is None:
        raise WordSyntaxError(f"expected 'D^k | g1 . g2 ...', got {text!r}")
    strip = _strip(n)
    factors = [parse_element(piece, strip) for piece in tail.split(".") if piece.strip()]
    return _normal_form(n, int(match.group(1)), factors)
