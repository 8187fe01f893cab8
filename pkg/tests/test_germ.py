import itertools

import pytest

from ctilde.errors import NotDivisibleError, NotInGermError, NotSigmaStableError, PeriodMismatchError
from ctilde.germ import (
    conjugate_by_coxeter,
    coxeter,
    divides,
    divisors,
    from_partition,
    garside_automorphism,
    gcd,
    germ_product,
    identity_element,
    lcm,
    left_complement,
    left_quotient,
    membership,
    parse_element,
    reflection_length_C,
    require_member,
    right_complement,
    sigma_element,
)
from ctilde.noncrossing import PeriodicPartition
from ctilde.periodic import Strip, compose, inverse, parse_cycles


def test_cycle_is_sigma_stable_member(strip2):
    x = parse_element("(1,3,4,2)", strip2)
    assert x.sigma_stable
    assert x.length_A == 3
    assert reflection_length_C(x) == 2


def test_non_positive_cycle_is_rejected(strip2):
    assert membership(parse_cycles("(1,2,4,3)", 4), strip2) is None
    with pytest.raises(NotInGermError) as info:
        parse_element("(1,2,4,3)", strip2)
    assert info.value.clause == "orientation"


def test_total_shift_is_checked_first(strip2):
    with pytest.raises(NotInGermError) as info:
        parse_element("(1,3)[1]", strip2)
    assert info.value.clause == "total_shift"


def test_infinite_cycles_must_run_along_their_line(strip2):
    with pytest.raises(NotInGermError) as info:
        parse_element("(2,4)[1](3,1)[-1]", strip2)
    assert info.value.clause == "pseudo_cycle"


def test_period_mismatch(strip2):
    with pytest.raises(PeriodMismatchError):
        require_member(parse_cycles("(1,2)", 6), strip2)


def test_nine_periodic_examples():
    strip = Strip(9, frozenset({5, 6, 7, 8, 9}))
    cycle = parse_element("(5,7,8,3,2)", strip)
    pseudo = parse_element("(5,7,8)[1](3,2)[-1]", strip)
    assert cycle.length_A == 4
    assert pseudo.length_A == 5
    assert not cycle.sigma_stable


def test_product_defined_in_one_order_only(gens2):
    s1, s2 = gens2[1], gens2[2]
    assert str(germ_product(s2, s1)) == "(1,3,4,2)"
    assert germ_product(s1, s2) is None


def test_product_with_identity(gens2, strip2):
    e = identity_element(strip2)
    for x in gens2.values():
        assert germ_product(x, e) == x
        assert germ_product(e, x) == x


def test_product_must_add_lengths(gens2):
    s2 = gens2[2]
    assert germ_product(s2, s2) is None


def test_divides(gens2, c2):
    x = parse_element("(1,3,4,2)", c2.strip)
    assert divides(gens2[2], c2)
    assert divides(x, x)
    assert not divides(x, gens2[2])
    assert all(divides(s, c2) for s in gens2.values())


def test_left_quotient(gens2):
    x = parse_element("(1,3,4,2)", gens2[1].strip)
    assert left_quotient(gens2[2], x) == gens2[1]
    with pytest.raises(NotDivisibleError):
        left_quotient(x, gens2[2])


def test_complements(gens2, c2, strip2):
    e = identity_element(strip2)
    assert right_complement(c2).is_identity
    assert right_complement(e) == c2
    rest = right_complement(gens2[1])
    assert rest.length_A == 2
    assert germ_product(gens2[1], rest) == c2
    assert germ_product(left_complement(gens2[1]), gens2[1]) == c2


def test_lcm_and_gcd(gens2, strip2):
    cycle = parse_element("(1,3,4,2)", strip2)
    assert lcm(gens2[1], gens2[2]) == cycle
    assert gcd(cycle, parse_element("(2,3)(4,5)", strip2)) == gens2[2]
    assert lcm(cycle, identity_element(strip2)) == cycle


def test_gcd_with_garside_element(fixed_elements2, c2):
    for x in fixed_elements2:
        assert gcd(x, c2) == x
        assert lcm(x, c2) == c2


def test_lattice_operations_need_sigma_stable_inputs(strip2):
    x = parse_element("(1,2)", strip2)
    with pytest.raises(NotSigmaStableError):
        lcm(x, x)
    with pytest.raises(NotSigmaStableError):
        reflection_length_C(x)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_reflection_length_of_coxeter_element(n):
    c = coxeter(Strip.ctilde(n))
    assert reflection_length_C(c) == n + 1
    assert c.length_A == 2 * n


def test_reflection_length_of_atoms(strip2):
    assert reflection_length_C(parse_element("(1,4)", strip2)) == 1
    assert reflection_length_C(parse_element("(1,3)(0,-2)", strip2)) == 1
    assert reflection_length_C(identity_element(strip2)) == 0


def test_garside_automorphism(c2, gens2):
    assert garside_automorphism(c2) == c2
    for x in gens2.values():
        assert conjugate_by_coxeter(garside_automorphism(x), 1) == x
    assert conjugate_by_coxeter(gens2[0], 0) == gens2[0]


def test_sigma_element(strip2):
    x = parse_element("(1,3)", strip2)
    assert sigma_element(x) == parse_element("(2,4)", strip2)


def test_divisors_of_cycle_are_complete(strip2):
    found = divisors(parse_element("(1,3,4,2)", strip2), window=1)
    assert found.complete
    assert len(found) == 6


def test_from_partition(strip2):
    p = PeriodicPartition.build(strip2, [[1, 2, 3, 4]])
    assert str(from_partition(p)) == "(1,3,4,2)"


def divides_in_ctilde(x, y):
    """x⁻¹y is a sigma-fixed germ element and the C-tilde reflection lengths add."""
    z = membership(compose(inverse(x.perm), y.perm), y.strip)
    if z is None or not z.sigma_stable:
        return False
    return reflection_length_C(x) + reflection_length_C(z) == reflection_length_C(y)


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_refinement_order_is_ctilde_divisibility(bounded_germ, n):
    germ = bounded_germ(n)
    for x, y in itertools.product(germ.elements, repeat=2):
        assert divides(x, y) == divides_in_ctilde(x, y), (str(x), str(y))


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_divisibility_matches_factor_existence(bounded_germ, n):
    germ = bounded_germ(n)
    multiples = {(x, xy) for (x, _), xy in germ.products.items()}
    for x, y in itertools.product(germ.elements, repeat=2):
        if (x, y) in multiples:
            assert divides(x, y)
        if divides(x, y):
            z = left_quotient(x, y)
            assert germ_product(x, z) == y
            if y.partition.infinite_part is None:
                assert (x, y) in multiples


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_products_are_associative(bounded_germ, n):
    germ = bounded_germ(n)
    for (x, y), xy in germ.products.items():
        for z, xy_z in germ.by_left.get(xy, ()):
            yz = germ_product(y, z)
            assert yz is not None
            assert germ_product(x, yz) == xy_z
    for (y, z), yz in germ.products.items():
        for x, x_yz in germ.by_right.get(yz, ()):
            xy = germ_product(x, y)
            assert xy is not None
            assert germ_product(xy, z) == x_yz


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_products_cancel_and_add_lengths(bounded_germ, n):
    germ = bounded_germ(n)
    left_factor = {}
    right_factor = {}
    for (x, y), xy in germ.products.items():
        assert left_factor.setdefault((x, xy), y) == y
        assert right_factor.setdefault((y, xy), x) == x
        assert xy.length_A == x.length_A + y.length_A
        assert reflection_length_C(xy) == reflection_length_C(x) + reflection_length_C(y)


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_coxeter_element_is_a_two_sided_multiple(bounded_germ, n):
    c = coxeter(Strip.ctilde(n))
    for x in bounded_germ(n).elements:
        assert germ_product(x, right_complement(x)) == c
        assert germ_product(left_complement(x), x) == c


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_lcm_is_least(bounded_germ, n):
    germ = bounded_germ(n)
    for x, y in itertools.combinations(germ.elements, 2):
        m = lcm(x, y)
        assert divides(x, m) and divides(y, m)
        assert m == lcm(y, x)
        assert all(divides(m, u) for u in germ.above[x] & germ.above[y])
        assert gcd(x, m) == x


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_gcd_is_greatest(bounded_germ, n):
    germ = bounded_germ(n)
    for x, y in itertools.combinations(germ.elements, 2):
        d = gcd(x, y)
        assert divides(d, x) and divides(d, y)
        assert d == gcd(y, x)
        assert all(divides(v, d) for v in germ.below[x] & germ.below[y])
        assert lcm(x, d) == x
