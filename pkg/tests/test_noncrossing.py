import itertools

import pytest

from ctilde.errors import NotInGermError, PartitionSyntaxError, PeriodMismatchError
from ctilde.noncrossing import (
    PeriodicPartition,
    common_refinement,
    crossing_offsets,
    cycles_noncrossing,
    element_of,
    enumerate_partitions,
    format_partition,
    is_noncrossing,
    join_with_passes,
    noncrossing_join,
    parse_partition,
    partition_of,
    refines,
    sets_cross,
    sigma_partition,
    validate,
)
from ctilde.periodic import Strip, coxeter_element, identity, parse_cycles, residue

STRIP = Strip.ctilde(2)


def part(*parts, infinite=None):
    return PeriodicPartition.build(STRIP, parts, infinite)


def test_sets_cross_interleaving_on_one_line():
    assert sets_cross({1, 5}, {3, 7}, Strip.ctilde(4))


def test_sets_cross_nested_chords():
    assert not sets_cross({1, 2}, {3, 4}, STRIP)


def test_sets_cross_shared_point():
    assert sets_cross({1, 2}, {2, 3}, STRIP)


def test_infinite_parts_cross_when_mixed():
    assert sets_cross({1, 4}, {2, 3}, STRIP, a_infinite=True, b_infinite=True)


def test_infinite_parts_on_opposite_lines_do_not_cross():
    assert not sets_cross({1, 3}, {2, 4}, STRIP, a_infinite=True, b_infinite=True)


def test_build_canonicalises_parts():
    p = PeriodicPartition.build(STRIP, [[5, 6], [0, -1], [7]])
    assert p.finite_parts == (frozenset({1, 2}), frozenset({3, 4}))
    assert format_partition(p) == "{1,2} {3,4}"


def test_build_rejects_overlap():
    with pytest.raises(NotInGermError) as info:
        PeriodicPartition.build(STRIP, [[1, 2], [6, 7]])
    assert info.value.clause == "overlap"


def test_partition_of_coxeter_element():
    p = partition_of(coxeter_element(2), STRIP)
    assert p.finite_parts == ()
    assert p.infinite_part == frozenset({1, 2, 3, 4})


def test_partition_of_cycle_and_identity():
    assert partition_of(parse_cycles("(1,3,4,2)", 4), STRIP) == part({1, 2, 3, 4})
    assert partition_of(identity(4), STRIP).is_discrete


def test_element_of():
    assert element_of(part({1, 2, 3, 4})) == parse_cycles("(1,3,4,2)", 4)
    assert element_of(part()).is_identity
    assert element_of(part(infinite={1, 2, 3, 4})) == coxeter_element(2)


def test_element_of_figure_strip():
    strip = Strip(9, frozenset({5, 6, 7, 8, 9}))
    p = PeriodicPartition.build(strip, [[5, 7, 8, 3, 2]])
    assert element_of(p) == parse_cycles("(5,7,8,3,2)", 9)
    q = PeriodicPartition.build(strip, [], [2, 3, 5, 7, 8])
    assert element_of(q) == parse_cycles("(5,7,8)[1](3,2)[-1]", 9)


def test_refines():
    assert refines(part({2, 3}), part({1, 2, 3, 4}))
    p = part({1, 2, 3, 4})
    assert refines(p, p)
    assert not refines(part({1, 2, 3, 4}), part({2, 3}))
    assert not refines(part({1, 3}), part({1, 6}, {3, 4}))
    assert refines(part({1, 3}), part(infinite={1, 2, 3, 4}))


def test_refines_rejects_other_strip():
    with pytest.raises(PeriodMismatchError):
        refines(part(), PeriodicPartition.build(Strip.ctilde(3), []))


def test_common_refinement():
    meet = common_refinement(part({1, 2, 3, 4}), part({4, 5}, {2, 3}))
    assert meet == part({2, 3})
    p = part({1, 2}, {3, 4})
    assert common_refinement(p, p) == p
    assert common_refinement(p, part()).is_discrete


def test_join_chains_shared_points():
    assert noncrossing_join(part({1, 2}, {3, 4}), part({2, 3})) == part({1, 2, 3, 4})


def test_join_of_noncrossing_parts_is_union():
    p, passes = join_with_passes(part({4, 5}), part({2, 3}))
    assert p == part({4, 5}, {2, 3})
    assert passes == 1


def test_join_of_mixed_infinite_parts():
    joined = noncrossing_join(part(infinite={1, 4}), part(infinite={2, 3}))
    assert joined == part(infinite={1, 2, 3, 4})


def test_validate_reports_crossing():
    p = part({1, 4}, {2, 3})
    with pytest.raises(NotInGermError) as info:
        validate(p)
    assert info.value.clause == "crossing"
    assert not is_noncrossing(p)


def test_validate_reports_one_sided_infinite_part():
    with pytest.raises(NotInGermError) as info:
        validate(part(infinite={1, 3}))
    assert info.value.clause == "infinite_part"


def test_sigma_partition():
    assert sigma_partition(part({1, 2, 3, 4})) == part({1, 2, 3, 4})
    assert sigma_partition(part({2, 3})) == part({2, 3})
    assert sigma_partition(part({1, 3})) == part({2, 4})


CYCLE_SWEEPS = [(2, 2), (3, 1)]


def bounded_parts(n, window):
    strip = Strip.ctilde(n)
    return sorted(
        {block for p in enumerate_partitions(strip, window) for block in p.finite_parts},
        key=sorted,
    )


@pytest.mark.slow
@pytest.mark.parametrize("n, window", CYCLE_SWEEPS)
def test_cycles_noncrossing_agrees_with_sets_cross(n, window):
    strip = Strip.ctilde(n)
    compared = 0
    for a, b in itertools.combinations(bounded_parts(n, window), 2):
        if {residue(x, strip.period) for x in a} & {residue(x, strip.period) for x in b}:
            continue
        expected = not crossing_offsets(a, b, strip)
        first, second = (tuple(sorted(a)), 0), (tuple(sorted(b)), 0)
        assert cycles_noncrossing(first, second, strip) == expected, (first, second)
        compared += 1
    assert compared > 0


def test_parse_partition_round_trip():
    text = "{1,2} {3,4}"
    assert format_partition(parse_partition(text, STRIP)) == text
    c_text = "{} | inf:{1,2,3,4}"
    assert parse_partition(c_text, STRIP) == part(infinite={1, 2, 3, 4})
    assert format_partition(part(infinite={1, 2, 3, 4})) == c_text


@pytest.mark.parametrize("text", ["{1,2} x", "{1,a}", "{1,2} | {3}"])
def test_parse_partition_errors(text):
    with pytest.raises(PartitionSyntaxError):
        parse_partition(text, STRIP)


def test_enumeration_within_cycle_is_complete():
    found = enumerate_partitions(STRIP, window=1, within=part({1, 2, 3, 4}))
    assert found.complete
    assert part() in found.partitions
    assert part({1, 2, 3, 4}) in found.partitions
    assert all(refines(p, part({1, 2, 3, 4})) for p in found)


def test_enumeration_grows_with_window():
    small = enumerate_partitions(STRIP, window=1)
    large = enumerate_partitions(STRIP, window=2)
    assert not small.complete
    assert set(small.partitions) < set(large.partitions)
    assert all(is_noncrossing(p) for p in large)


def test_chord_between_lines_is_parallel_to_its_translates():
    assert is_noncrossing(part({1, 6}))


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_format_and_parse_every_enumerated_partition(n):
    strip = Strip.ctilde(n)
    for p in enumerate_partitions(strip, window=2):
        assert parse_partition(format_partition(p), strip) == p


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_join_of_sigma_stable_partitions(bounded_germ, n):
    partitions = [x.partition for x in bounded_germ(n).elements]
    for p, q in itertools.combinations(partitions, 2):
        joined, passes = join_with_passes(p, q)
        assert passes == 1, (str(p), str(q))
        assert is_noncrossing(joined)
        assert sigma_partition(joined) == joined
        assert refines(p, joined) and refines(q, joined)
        for upper in partitions:
            if refines(p, upper) and refines(q, upper):
                assert refines(joined, upper), (str(p), str(q), str(upper))
