"""Periodic non-crossing partitions of a strip.

A part is a finite set of integers standing for all of its N-translates, or
the single infinite part, stored as a set of residues.  Crossing is decided on
the boundary of the strip: X read ascending, then Xi read descending, closed
up at both ends.  Two finite sets cross when they intersect or when their
points interleave on that circle.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from ctilde.errors import (
    NotInGermError,
    NotSigmaStableError,
    PartitionSyntaxError,
    PeriodMismatchError,
)
from ctilde.periodic import (
    PeriodicPermutation,
    Strip,
    cycle,
    cycle_decomposition,
    identity,
    product,
    residue,
)
from ctilde.settings import MAX_JOIN_PASSES

logger = logging.getLogger(__name__)

Part = frozenset[int]


@dataclass(frozen=True)
class PeriodicPartition:
    """Canonical periodic partition: singletons are implicit.

    Finite parts are translated so that their minimum lies in [1, N] and are
    sorted; the infinite part is a set of residues in [1, N] or ``None``.
    """

    strip: Strip
    finite_parts: tuple[Part, ...] = ()
    infinite_part: Part | None = None

    @classmethod
    def build(
        cls,
        strip: Strip,
        parts: Iterable[Iterable[int]] = (),
        infinite: Iterable[int] | None = None,
    ) -> "PeriodicPartition":
        n = strip.period
        finite = []
        for part in parts:
            part = frozenset(part)
            if len(part) < 2:
                continue
            offset = (min(part) - 1) // n * n
            finite.append(frozenset(x - offset for x in part))
        finite.sort(key=sorted)
        inf = frozenset(residue(r, n) for r in infinite) if infinite is not None else None
        if inf is not None and not inf:
            inf = None

        covered: list[int] = []
        for part in finite:
            covered.extend(residue(x, n) for x in part)
        covered.extend(inf or ())
        if len(covered) != len(set(covered)):
            raise NotInGermError(
                "parts overlap modulo the period: "
                + format_partition(cls(strip, tuple(finite), inf)),
                clause="overlap",
            )
        return cls(strip, tuple(finite), inf)

    @property
    def period(self) -> int:
        return self.strip.period

    @property
    def is_discrete(self) -> bool:
        return not self.finite_parts and self.infinite_part is None

    def __str__(self) -> str:
        return format_partition(self)


def _check_strips(p: PeriodicPartition, q: PeriodicPartition) -> Strip:
    if p.strip != q.strip:
        raise PeriodMismatchError(f"partitions live on different strips: {p.strip} vs {q.strip}")
    return p.strip


def _translate(part: Iterable[int], shift: int) -> frozenset[int]:
    return frozenset(x + shift for x in part)


# ---------------------------------------------------------------------------
# Crossing
# ---------------------------------------------------------------------------


def _materialize(residues: Iterable[int], lo: int, hi: int, period: int) -> set[int]:
    residues = set(residues)
    return {x for x in range(lo, hi + 1) if residue(x, period) in residues}


def _one_sided_opposite(a: Iterable[int], b: Iterable[int], strip: Strip) -> bool:
    a_x = {strip.in_x(r) for r in a}
    b_x = {strip.in_x(r) for r in b}
    return len(a_x) == 1 and len(b_x) == 1 and a_x != b_x


def sets_cross(
    a: Iterable[int],
    b: Iterable[int],
    strip: Strip,
    a_infinite: bool = False,
    b_infinite: bool = False,
) -> bool:
    """True when the two sets intersect or interleave on the strip boundary.

    Infinite sets are given by residues.  Two infinite sets cross unless one
    lies on X only and the other on Xi only.
    """
    a, b = frozenset(a), frozenset(b)
    n = strip.period
    if a_infinite and b_infinite:
        if {residue(r, n) for r in a} & {residue(r, n) for r in b}:
            return True
        return not _one_sided_opposite(a, b, strip)
    if a_infinite:
        a, b = b, a
        b_infinite = True
    if b_infinite:
        b = frozenset(_materialize(b, min(a) - n, max(a) + n, n))
    if a & b:
        return True
    labels = [
        label
        for _, label in sorted(
            [(strip.boundary_key(x), 0) for x in a] + [(strip.boundary_key(x), 1) for x in b]
        )
    ]
    changes = sum(labels[i] != labels[i - 1] for i in range(len(labels)))
    return changes >= 4


def _offset_range(a: frozenset[int], b: frozenset[int], period: int) -> range:
    """Offsets k for which b + kN overlaps the extent of a."""
    lo = -((max(b) - min(a)) // period)
    hi = (max(a) - min(b)) // period
    return range(lo, hi + 1)


def _near_offsets(a: frozenset[int], b: frozenset[int], period: int) -> range:
    """Offsets of b that overlap a or sit next to it."""
    span = _offset_range(a, b, period)
    return range(span.start - 1, span.stop + 1)


def crossing_offsets(a: Part, b: Part, strip: Strip) -> list[int]:
    """All k such that the finite sets a and b + kN cross."""
    return [
        k
        for k in _offset_range(a, b, strip.period)
        if sets_cross(a, _translate(b, k * strip.period), strip)
    ]


def _self_crossing(part: Part, strip: Strip) -> bool:
    return any(k != 0 for k in crossing_offsets(part, part, strip))


def crossing_pairs(p: PeriodicPartition) -> list[tuple[str, str]]:
    """Pairs of parts (in text form) that cross, including a part and its own translates."""
    strip = p.strip
    bad = []
    for i, a in enumerate(p.finite_parts):
        if _self_crossing(a, strip):
            bad.append((_format_part(a), _format_part(a)))
        for b in p.finite_parts[i + 1 :]:
            if crossing_offsets(a, b, strip):
                bad.append((_format_part(a), _format_part(b)))
        if p.infinite_part is not None and sets_cross(a, p.infinite_part, strip, b_infinite=True):
            bad.append((_format_part(a), "inf:" + _format_part(p.infinite_part)))
    return bad


def is_noncrossing(p: PeriodicPartition) -> bool:
    return not crossing_pairs(p)


def validate(p: PeriodicPartition) -> PeriodicPartition:
    """Check that *p* is the partition of some element of the germ."""
    bad = crossing_pairs(p)
    if bad:
        left, right = bad[0]
        raise NotInGermError(f"parts {left} and {right} cross", clause="crossing")
    inf = p.infinite_part
    if inf is not None and not p.strip.is_one_line:
        if not any(p.strip.in_x(r) for r in inf) or all(p.strip.in_x(r) for r in inf):
            raise NotInGermError(
                f"infinite part {_format_part(inf)} must meet both X and Xi",
                clause="infinite_part",
            )
    return p


def cycles_noncrossing(
    first: tuple[tuple[int, ...], int],
    second: tuple[tuple[int, ...], int],
    strip: Strip,
) -> bool:
    """Cycle-level non-crossing test for positive self non-crossing cycles.

    Cycles are ``(entries, shift)`` pairs.  A cycle meeting both lines may sit
    in the gap between another such cycle and its next translate; a one-sided
    cycle must fit in a single gap of the other cycle on its own line.  A
    cycle on X alone never crosses a cycle on Xi alone.
    """
    return _cycle_pair_ok(first, second, strip) or _cycle_pair_ok(second, first, strip)


def _split(entries: Iterable[int], strip: Strip) -> tuple[list[int], list[int]]:
    xs = sorted(e for e in entries if strip.in_x(e))
    xis = sorted(e for e in entries if not strip.in_x(e))
    return xs, xis


def _fits_in_gap(values: list[int], anchors: list[int], period: int) -> bool:
    """Some translate of *values* lies in one open gap of the sorted *anchors*."""
    for k in _near_offsets(frozenset(anchors), frozenset(values), period):
        moved = [v + k * period for v in values]
        lo, hi = min(moved), max(moved)
        for left, right in zip(anchors, anchors[1:]):
            if left < lo and hi < right:
                return True
    return False


def _cycle_pair_ok(
    a_cycle: tuple[tuple[int, ...], int],
    b_cycle: tuple[tuple[int, ...], int],
    strip: Strip,
) -> bool:
    n = strip.period
    (a_entries, a_shift), (b_entries, b_shift) = a_cycle, b_cycle
    ax, axi = _split(a_entries, strip)
    bx, bxi = _split(b_entries, strip)

    if (not axi and not bx) or (not ax and not bxi):
        return True
    if a_shift == 0 and b_shift == 0 and ax and axi and bx and bxi:
        for k in _near_offsets(frozenset(a_entries), frozenset(b_entries), n):
            moved_x = [b + k * n for b in bx]
            moved_xi = [b + k * n for b in bxi]
            if all(ax[-1] < b < ax[0] + n for b in moved_x) and all(
                axi[-1] < b < axi[0] + n for b in moved_xi
            ):
                return True
        return False
    if a_shift == 0 and b_shift == 0 and (not bx or not bxi):
        if bx:
            return not ax or _fits_in_gap(bx, ax + [ax[0] + n], n)
        return not axi or _fits_in_gap(bxi, [axi[-1] - n] + axi, n)
    if a_shift != 0 and b_shift == 0 and (not bx or not bxi):
        own = ax or axi
        other = bx or bxi
        points = _materialize(own, min(other) - n, max(other) + n, n)
        return not any(min(other) <= x <= max(other) for x in points)
    return False


# ---------------------------------------------------------------------------
# Partitions and permutations
# ---------------------------------------------------------------------------


def partition_of(w: PeriodicPermutation, strip: Strip) -> PeriodicPartition:
    """Finite orbits become parts; the infinite orbits merge into one part."""
    if w.period != strip.period:
        raise PeriodMismatchError(f"permutation period {w.period} vs strip period {strip.period}")
    decomposition = cycle_decomposition(w)
    infinite = {residue(e, w.period) for entries, _ in decomposition.infinite_cycles for e in entries}
    return PeriodicPartition.build(
        strip, decomposition.finite_cycles, infinite if infinite else None
    )


def element_of(p: PeriodicPartition) -> PeriodicPermutation:
    """The positive permutation whose orbits are the parts of *p*."""
    strip, n = p.strip, p.period
    factors = []
    for part in p.finite_parts:
        xs, xis = _split(part, strip)
        factors.append(cycle(xs + xis[::-1], n))
    if p.infinite_part is not None:
        xs, xis = _split(p.infinite_part, strip)
        if xs:
            factors.append(cycle(xs, n, 1))
        if xis:
            factors.append(cycle(xis[::-1], n, -1))
    return product(factors, n) if factors else identity(n)


# ---------------------------------------------------------------------------
# Order, meet and join
# ---------------------------------------------------------------------------


def _locator(p: PeriodicPartition) -> dict[int, tuple[int, int]]:
    """Residue -> (part index, representative); index -1 is the infinite part."""
    n = p.period
    table = {}
    for index, part in enumerate(p.finite_parts):
        for x in part:
            table[residue(x, n)] = (index, x)
    for r in p.infinite_part or ():
        table[r] = (-1, r)
    return table


def _locate(table: dict[int, tuple[int, int]], x: int, period: int) -> tuple[int, int]:
    """Key of the part containing x: (index, translation), or (-2, x) for a singleton."""
    found = table.get(residue(x, period))
    if found is None:
        return (-2, x)
    index, rep = found
    if index == -1:
        return (-1, 0)
    return (index, (x - rep) // period)


def refines(p: PeriodicPartition, q: PeriodicPartition) -> bool:
    """Every part of p lies inside a part of q."""
    strip = _check_strips(p, q)
    table = _locator(q)
    for part in p.finite_parts:
        keys = {_locate(table, x, strip.period) for x in part}
        if len(keys) != 1 or next(iter(keys))[0] == -2:
            return False
    if p.infinite_part is not None:
        if q.infinite_part is None or not p.infinite_part <= q.infinite_part:
            return False
    return True


def common_refinement(p: PeriodicPartition, q: PeriodicPartition) -> PeriodicPartition:
    """Coarsest partition refining both (pairwise intersections of parts)."""
    strip = _check_strips(p, q)
    n = strip.period
    table = _locator(q)
    parts: list[frozenset[int]] = []
    for part in p.finite_parts:
        blocks: dict[tuple[int, int], set[int]] = {}
        for x in part:
            blocks.setdefault(_locate(table, x, n), set()).add(x)
        parts.extend(frozenset(b) for b in blocks.values())
    if p.infinite_part is not None:
        for part in q.finite_parts:
            parts.append(frozenset(x for x in part if residue(x, n) in p.infinite_part))
    infinite = None
    if p.infinite_part is not None and q.infinite_part is not None:
        infinite = p.infinite_part & q.infinite_part
        if infinite and not strip.is_one_line and _one_sided(infinite, strip):
            raise NotSigmaStableError(
                f"infinite parts meet in {_format_part(infinite)}, which lies on one line only"
            )
    return PeriodicPartition.build(strip, parts, infinite)


def _one_sided(residues: Iterable[int], strip: Strip) -> bool:
    return len({strip.in_x(r) for r in residues}) == 1


def _merge_crossing(parts: list[Part], infinite: list[Part], strip: Strip) -> PeriodicPartition:
    """One closure pass over the crossing graph of the given parts."""
    n = strip.period
    graph = nx.Graph()
    nodes = [("f", i) for i in range(len(parts))] + [("i", i) for i in range(len(infinite))]
    graph.add_nodes_from(nodes)
    offsets: dict[tuple, set[int]] = {}

    for i, a in enumerate(parts):
        for j in range(i, len(parts)):
            ks = crossing_offsets(a, parts[j], strip)
            if i == j:
                ks = [k for k in ks if k != 0]
            if ks:
                graph.add_edge(("f", i), ("f", j))
                offsets.setdefault((("f", i), ("f", j)), set()).update(ks)
        for j, inf in enumerate(infinite):
            if sets_cross(a, inf, strip, b_infinite=True):
                graph.add_edge(("f", i), ("i", j))
    for i, j in itertools.combinations(range(len(infinite)), 2):
        if sets_cross(infinite[i], infinite[j], strip, a_infinite=True, b_infinite=True):
            graph.add_edge(("i", i), ("i", j))

    finite_result: list[frozenset[int]] = []
    infinite_result: set[int] = set()
    for component in nx.connected_components(graph):
        members = sorted(component)
        unbounded = any(kind == "i" for kind, _ in members)
        potential: dict[tuple, int] = {}
        if not unbounded:
            root = members[0]
            potential[root] = 0
            for u, v in nx.bfs_edges(graph, root):
                if (u, v) in offsets:
                    potential[v] = potential[u] + min(offsets[(u, v)])
                else:
                    potential[v] = potential[u] - min(offsets[(v, u)])
            for (u, v), ks in offsets.items():
                if u in potential and (len(ks) > 1 or potential[v] != potential[u] + next(iter(ks))):
                    unbounded = True
                    break
        if unbounded:
            for kind, index in members:
                source = infinite[index] if kind == "i" else parts[index]
                infinite_result.update(residue(x, n) for x in source)
        else:
            finite_result.append(
                frozenset(
                    x + potential[(kind, index)] * n for kind, index in members for x in parts[index]
                )
            )
    return PeriodicPartition.build(strip, finite_result, infinite_result or None)


def join_with_passes(
    p: PeriodicPartition, q: PeriodicPartition
) -> tuple[PeriodicPartition, int]:
    """Minimal non-crossing partition coarser than p and q, with the number of closure passes."""
    strip = _check_strips(p, q)
    parts = list(p.finite_parts) + list(q.finite_parts)
    infinite = [part for part in (p.infinite_part, q.infinite_part) if part is not None]
    passes = 0
    while True:
        passes += 1
        result = _merge_crossing(parts, infinite, strip)
        if is_noncrossing(result):
            break
        if passes >= MAX_JOIN_PASSES:
            raise RuntimeError(f"join did not stabilise after {passes} passes")
        parts = list(result.finite_parts)
        infinite = [result.infinite_part] if result.infinite_part is not None else []
    logger.debug("join of %s and %s: %s after %d pass(es)", p, q, result, passes)

    inf = result.infinite_part
    if inf is not None and not strip.is_one_line and _one_sided(inf, strip):
        raise NotSigmaStableError(
            f"join has an infinite part {_format_part(inf)} on one line only"
        )
    return result, passes


def noncrossing_join(p: PeriodicPartition, q: PeriodicPartition) -> PeriodicPartition:
    return join_with_passes(p, q)[0]


def sigma_partition(p: PeriodicPartition) -> PeriodicPartition:
    """Image of *p* under i -> 1 - i."""
    if not p.strip.is_ctilde:
        raise ValueError("sigma acts only on the strip X = odd, Xi = even")
    inf = None
    if p.infinite_part is not None:
        inf = {residue(1 - r, p.period) for r in p.infinite_part}
    return PeriodicPartition.build(
        p.strip, ({1 - x for x in part} for part in p.finite_parts), inf
    )


# ---------------------------------------------------------------------------
# Bounded enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionEnumeration:
    """Partitions found in an offset window, and whether the list is exhaustive."""

    partitions: tuple[PeriodicPartition, ...]
    window: int
    complete: bool

    def __iter__(self) -> Iterator[PeriodicPartition]:
        return iter(self.partitions)

    def __len__(self) -> int:
        return len(self.partitions)


def _infinite_choices(strip: Strip, within: PeriodicPartition | None) -> list[frozenset[int]]:
    pool = sorted(within.infinite_part) if within is not None and within.infinite_part else []
    if within is None:
        pool = list(range(1, strip.period + 1))
    choices = [frozenset()]
    for size in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            chosen = frozenset(combo)
            if strip.is_one_line or not _one_sided(chosen, strip):
                choices.append(chosen)
    return choices


def _candidate_positions(
    r: int,
    uncovered: set[int],
    strip: Strip,
    window: int,
    within_table: dict[int, tuple[int, int]] | None,
    within: PeriodicPartition | None,
) -> list[int]:
    n = strip.period
    span = window * n
    if within is None:
        pool = range(r - span + 1, r + span)
    else:
        index, rep = within_table.get(r, (-2, r))
        if index == -2:
            return []
        if index == -1:
            pool = range(r - span + 1, r + span)
            pool = [x for x in pool if residue(x, n) in within.infinite_part]
        else:
            pool = sorted(x + r - rep for x in within.finite_parts[index])
    return [x for x in pool if x != r and residue(x, n) in uncovered]


def _grow_parts(
    r: int,
    positions: list[int],
    strip: Strip,
    window: int,
    obstacles: list[Part],
    infinite: Part | None,
) -> Iterator[Part]:
    """Non-crossing parts containing r built from *positions*."""
    n = strip.period
    span = window * n

    def blocked(part: Part) -> bool:
        if _self_crossing(part, strip):
            return True
        if infinite and sets_cross(part, infinite, strip, b_infinite=True):
            return True
        return any(crossing_offsets(part, other, strip) for other in obstacles)

    def extend(part: frozenset[int], start: int) -> Iterator[Part]:
        residues = {residue(x, n) for x in part}
        for idx in range(start, len(positions)):
            x = positions[idx]
            if residue(x, n) in residues:
                continue
            grown = part | {x}
            if max(grown) - min(grown) >= span or blocked(grown):
                continue
            yield grown
            yield from extend(grown, idx + 1)

    yield from extend(frozenset({r}), 0)


def iter_partitions(
    strip: Strip, window: int, within: PeriodicPartition | None = None
) -> Iterator[PeriodicPartition]:
    n = strip.period
    within_table = _locator(within) if within is not None else None

    def backtrack(uncovered: set[int], chosen: list[Part], infinite: Part | None) -> Iterator[PeriodicPartition]:
        if not uncovered:
            yield PeriodicPartition.build(strip, chosen, infinite)
            return
        r = min(uncovered)
        rest = uncovered - {r}
        yield from backtrack(rest, chosen, infinite)
        positions = _candidate_positions(r, rest, strip, window, within_table, within)
        for part in _grow_parts(r, positions, strip, window, chosen, infinite):
            covered = {residue(x, n) for x in part}
            yield from backtrack(uncovered - covered, chosen + [part], infinite)

    for infinite in _infinite_choices(strip, within):
        uncovered = set(range(1, n + 1)) - infinite
        yield from backtrack(uncovered, [], infinite or None)


def enumerate_partitions(
    strip: Strip, window: int, within: PeriodicPartition | None = None
) -> PartitionEnumeration:
    """All valid non-crossing partitions whose finite parts span fewer than window·N.

    With *within* only refinements of it are listed; the list is then
    exhaustive when *within* has no infinite part and fits in the window.
    """
    if window < 1:
        raise ValueError(f"window must be at least 1, got {window}")
    partitions = tuple(iter_partitions(strip, window, within))
    complete = within is not None and within.infinite_part is None and all(
        max(part) - min(part) < window * strip.period for part in within.finite_parts
    )
    logger.debug(
        "enumerated %d partitions (period %d, window %d, complete=%s)",
        len(partitions),
        strip.period,
        window,
        complete,
    )
    return PartitionEnumeration(partitions, window, complete)


# ---------------------------------------------------------------------------
# Text format: "{1,2,3,4} {6,7} | inf:{1,4}"
# ---------------------------------------------------------------------------

_PART_RE = re.compile(r"\{([^{}]*)\}")


def _format_part(part: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(part)) + "}"


def format_partition(p: PeriodicPartition) -> str:
    text = " ".join(_format_part(part) for part in p.finite_parts) or "{}"
    if p.infinite_part is not None:
        text += " | inf:" + _format_part(p.infinite_part)
    return text


def _parse_set(body: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    try:
        return [int(token) for token in body.split(",")]
    except ValueError as exc:
        raise PartitionSyntaxError(f"bad part {{{body}}}") from exc


def parse_partition(text: str, strip: Strip) -> PeriodicPartition:
    finite_text, _, infinite_text = text.partition("|")
    parts = []
    leftover = _PART_RE.sub("", finite_text).strip()
    if leftover:
        raise PartitionSyntaxError(f"unexpected text {leftover!r}")
    for match in _PART_RE.finditer(finite_text):
        parts.append(_parse_set(match.group(1)))
    infinite = None
    if infinite_text.strip():
        match = re.fullmatch(r"\s*inf:\s*\{([^{}]*)\}\s*", infinite_text)
        if match is None:
            raise PartitionSyntaxError(f"bad infinite part {infinite_text.strip()!r}")
        infinite = _parse_set(match.group(1))
    return PeriodicPartition.build(strip, parts, infinite)
