import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hiddenshift import (
    ResourceCeilingError,
    brute_count,
    gcd_count,
    iter_solutions,
    map_to_doubled,
    map_to_power_of_two,
    map_to_raised_exponent,
    max_orthogonal_count,
    solves,
)


def inner(u, y, q):
    return sum(a * b for a, b in zip(u, y)) % 2**q


def test_brute_count_examples():
    assert brute_count((2,), 4) == 2
    assert sorted(iter_solutions((2,), 4)) == [(0,), (8,)]
    assert brute_count((3, 5), 4) == 16
    assert brute_count((0, 0), 4) == 256


def test_gcd_count_examples():
    assert gcd_count((2, 2), 4) == 32
    assert gcd_count((0, 0), 4) == 256
    assert gcd_count((0, 0, 0), 4) == 16**3
    assert gcd_count((6,), 4) == 2 == brute_count((6,), 4)


def test_count_input_validation():
    with pytest.raises(ValueError):
        brute_count((16,), 4)
    with pytest.raises(ValueError):
        brute_count((), 4)
    with pytest.raises(ValueError):
        gcd_count((1,), 0)
    with pytest.raises(ResourceCeilingError):
        brute_count((1, 1), 16, max_enum=1000)


def test_max_orthogonal_count_values():
    assert max_orthogonal_count(1, 1) == 2
    assert max_orthogonal_count(2, 1) == 32
    assert max_orthogonal_count(3, 1) == 512
    assert max_orthogonal_count(2, 2) == 1024
    assert max_orthogonal_count(3, 1) == brute_count((2, 2, 2), 4)


@given(st.lists(st.integers(0, 15), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_gcd_matches_enumeration(u):
    assert gcd_count(u, 4) == brute_count(u, 4)


def test_solutions_iterator_agrees_with_predicate():
    sols = set(iter_solutions((2, 3), 4))
    assert len(sols) == brute_count((2, 3), 4)
    for y in itertools.product(range(16), repeat=2):
        assert (y in sols) == solves(y, (2, 3), 4)


def test_doubling_map_examples():
    # even first coordinate halves; odd rounds up and borrows from the
    # partner carrying the equal shift entry
    assert map_to_doubled((6, 10), (1, 1), 0, 4) == (3, 10)
    assert map_to_doubled((5, 11), (1, 1), 0, 4) == (3, 10)


def test_doubling_map_transports_and_preserves():
    q = 4
    for a in (1, 2, 3, 5):
        u = (a, a)
        u2 = ((2 * a) % 16, a)
        for y in iter_solutions(u, q):
            y2 = map_to_doubled(y, u, 0, q)
            assert solves(y2, u2, q)
            assert inner(u, y, q) == inner(u2, y2, q)
        assert brute_count(u, q) <= brute_count(u2, q)


def test_doubling_map_requires_equal_partner():
    with pytest.raises(ValueError):
        map_to_doubled((0, 0), (1, 2), 0, 4)
    with pytest.raises(ValueError):
        map_to_doubled((1, 1), (1, 1), 0, 4)  # not a solution
    with pytest.raises(ValueError):
        map_to_doubled((0, 0), (1, 1), 5, 4)  # index out of range


def test_raised_exponent_map_example():
    assert map_to_raised_exponent((2, 3), (2, 4), 4) == (1, 3)


def test_raised_exponent_map_injective_and_preserving():
    q = 4
    pairs = [(a, b) for a in (1, 2, 4, 8) for b in (1, 2, 4, 8) if a != b]
    for u in pairs:
        exps = sorted((c.bit_length() - 1, i) for i, c in enumerate(u))
        (t1, i1), (t2, _) = exps
        target = list(u)
        target[i1] = 2**t2
        target = tuple(target)
        images = []
        for y in iter_solutions(u, q):
            y2 = map_to_raised_exponent(y, u, q)
            images.append(y2)
            assert solves(y2, target, q)
            assert inner(u, y, q) == inner(target, y2, q)
        assert len(set(images)) == len(images)
        assert brute_count(u, q) <= brute_count(target, q)


def test_raised_exponent_map_tie_is_identity():
    # equal smallest exponents: scaling step is 2^0, a no-op
    assert map_to_raised_exponent((2, 14), (2, 2), 4) == (2, 14)


def test_raised_exponent_map_validation():
    with pytest.raises(ValueError):
        map_to_raised_exponent((0,), (2,), 4)  # needs two coordinates
    with pytest.raises(ValueError):
        map_to_raised_exponent((0, 0), (3, 2), 4)  # 3 is not a power of two
    with pytest.raises(ValueError):
        map_to_raised_exponent((1, 1), (2, 4), 4)  # not a solution


def test_odd_factor_map_bijective():
    q = 4
    cases = [((6,), 0), ((3, 5), 0), ((12, 1), 0), ((7, 2), 0), ((5, 8), 0)]
    for u, j in cases:
        uj = u[j]
        t = (uj & -uj).bit_length() - 1
        target = list(u)
        target[j] = 2**t
        target = tuple(target)
        sols = list(iter_solutions(u, q))
        images = [map_to_power_of_two(y, u, j, q) for y in sols]
        assert len(set(images)) == len(sols)
        assert set(images) == set(iter_solutions(target, q))
        for y, y2 in zip(sols, images):
            assert inner(u, y, q) == inner(target, y2, q)


def test_odd_factor_map_composes_to_all_ones():
    # normalize both coordinates of (3, 5): counts match at every stage
    q = 4
    step1 = [map_to_power_of_two(y, (3, 5), 0, q) for y in iter_solutions((3, 5), q)]
    assert set(step1) == set(iter_solutions((1, 5), q))
    step2 = [map_to_power_of_two(y, (1, 5), 1, q) for y in step1]
    assert set(step2) == set(iter_solutions((1, 1), q))
    assert len(step2) == brute_count((3, 5), q) == brute_count((1, 1), q) == 16


def test_odd_factor_map_validation():
    with pytest.raises(ValueError):
        map_to_power_of_two((0,), (4,), 0, 4)  # already a power of two
    with pytest.raises(ValueError):
        map_to_power_of_two((0,), (0,), 0, 4)  # zero coordinate
    with pytest.raises(ValueError):
        map_to_power_of_two((1,), (6,), 0, 4)  # not a solution
