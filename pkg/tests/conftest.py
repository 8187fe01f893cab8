import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

import pytest

from ctilde.germ import GermElement, coxeter, divides, enumerate_elements, germ_product, parse_element
from ctilde.periodic import Strip


@pytest.fixture
def strip2():
    return Strip.ctilde(2)


@pytest.fixture
def c2(strip2):
    return coxeter(strip2)


@pytest.fixture
def gens2(strip2):
    """σ0, σ1, σ2 at rank 2."""
    return {
        0: parse_element("(4,5)", strip2),
        1: parse_element("(1,2)(3,4)", strip2),
        2: parse_element("(2,3)", strip2),
    }


@pytest.fixture(scope="session")
def fixed_elements2():
    """Sigma-fixed germ elements at rank 2 inside the first offset window."""
    return enumerate_elements(Strip.ctilde(2), window=1, sigma_stable=True).elements


@dataclass
class BoundedGerm:
    """Sigma-fixed elements of one window with every defined product among them."""

    n: int
    elements: tuple[GermElement, ...]
    products: dict[tuple[GermElement, GermElement], GermElement]

    @cached_property
    def above(self) -> dict[GermElement, frozenset[GermElement]]:
        return {
            x: frozenset(y for y in self.elements if divides(x, y)) for x in self.elements
        }

    @cached_property
    def below(self) -> dict[GermElement, frozenset[GermElement]]:
        found = defaultdict(set)
        for x, ys in self.above.items():
            for y in ys:
                found[y].add(x)
        return {y: frozenset(found[y]) for y in self.elements}

    @cached_property
    def by_left(self) -> dict[GermElement, list[tuple[GermElement, GermElement]]]:
        """x -> [(y, x·y)]."""
        found = defaultdict(list)
        for (x, y), xy in self.products.items():
            found[x].append((y, xy))
        return found

    @cached_property
    def by_right(self) -> dict[GermElement, list[tuple[GermElement, GermElement]]]:
        """y -> [(x, x·y)]."""
        found = defaultdict(list)
        for (x, y), xy in self.products.items():
            found[y].append((x, xy))
        return found


@pytest.fixture(scope="session")
def bounded_germ():
    """Rank -> BoundedGerm over the sigma-fixed elements of window 2, built once per session."""
    cache: dict[int, BoundedGerm] = {}

    def build(n: int) -> BoundedGerm:
        if n not in cache:
            strip = Strip.ctilde(n)
            elements = enumerate_elements(strip, window=2, sigma_stable=True).elements
            bound = coxeter(strip).length_A
            products = {}
            for x, y in itertools.product(elements, repeat=2):
                if x.length_A + y.length_A > bound:
                    continue
                xy = germ_product(x, y)
                if xy is not None:
                    products[x, y] = xy
            cache[n] = BoundedGerm(n, elements, products)
        return cache[n]

    return build
