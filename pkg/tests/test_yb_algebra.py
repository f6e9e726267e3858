import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ybx.element import AlgebraElement
from ybx.ncpoly import Alphabet
from ybx.quadratic_set import flip_solution, identity_map, make_permutation_solution
from ybx.yb_algebra import (OrbitCapExceeded, Provenance, annihilates_positive_part, annihilator_basis,
                            annihilator_membership, annihilator_slice_dimension, cancellativity_report,
                            canonical_presentation, center_dimension, free_module_check, monoid_equal,
                            normal_form_closed, orbit_of, orbit_partition, orbit_relations,
                            presentations_equivalent, random_element, right_cancellation_witness)

CYCLE = make_permutation_solution([2, 3, 1])


def test_orbit_relations_three_cycle():
    pres = orbit_relations(CYCLE)
    assert pres.provenance is Provenance.ORBIT_FORM
    assert "1*x2.x1 + -1*x1.x1" in pres.texts()


def test_orbit_relations_trivial_cases():
    assert orbit_relations(identity_map(3)).relations == ()
    assert orbit_relations(flip_solution(2)).texts() == ["1*x2.x1 + -1*x1.x2"]


def test_canonical_presentation():
    assert canonical_presentation(2).texts() == ["1*x2.x1 + -1*x1.x1", "1*x2.x2 + -1*x1.x2"]
    assert len(canonical_presentation(3).relations) == 6
    assert canonical_presentation(1).relations == ()


def test_presentations_equivalent_for_all_permutations():
    for n in range(2, 5):
        canon = canonical_presentation(n)
        for f in itertools.permutations(range(1, n + 1)):
            assert presentations_equivalent(orbit_relations(make_permutation_solution(f)), canon, 4)
    assert presentations_equivalent(canonical_presentation(3), canonical_presentation(3), 3)
    assert not presentations_equivalent(canonical_presentation(2), orbit_relations(flip_solution(2)), 4)


def test_normal_form_closed():
    assert normal_form_closed((2, 1, 0, 1)) == (0, 0, 0, 1)
    assert normal_form_closed((0, 0, 0)) == (0, 0, 0)
    assert normal_form_closed((2,)) == (2,)


def test_monoid_equality():
    assert monoid_equal((1, 2), (0, 2), CYCLE)
    assert monoid_equal((2, 1, 0), (2, 1, 0), CYCLE)
    assert not monoid_equal((0, 1), (0, 2), CYCLE)
    assert not monoid_equal((0,), (0, 0), CYCLE)


def test_orbit_cap():
    with pytest.raises(OrbitCapExceeded):
        orbit_of((0,) * 6, make_permutation_solution([1, 2, 3]), max_orbit=10)


def test_orbit_partition_matches_closed_normal_form():
    s = make_permutation_solution([3, 1, 2])
    for m in (2, 3):
        blocks = orbit_partition(s, m)
        assert len(blocks) == 3
        for block in blocks:
            assert len({normal_form_closed(w) for w in block}) == 1


def test_cancellativity():
    left, cex = cancellativity_report(CYCLE, 4)
    assert left and cex is not None
    a, b, u = cex
    assert a != b
    assert cancellativity_report(make_permutation_solution([1]), 4) == (True, None)


def test_right_cancellation_witness():
    a, b, x = right_cancellation_witness(3, 2, 2)
    assert (a, b, x) == ((0, 0), (0, 1), (2,))
    ea, eb, ex = (AlgebraElement.from_word(3, w) for w in (a, b, x))
    assert ea != eb and ea * ex == eb * ex


def test_left_cancellation_on_degree_two():
    for f in itertools.permutations(range(1, 4)):
        s = make_permutation_solution(f)
        for x, y, z in itertools.product(range(3), repeat=3):
            if y != z:
                assert not monoid_equal((x, y), (x, z), s)


def test_center_is_trivial():
    for n in (2, 3, 4):
        assert center_dimension(n, 5) == 0


def test_annihilator_examples():
    x1, x2 = AlgebraElement.gen(3, 0), AlgebraElement.gen(3, 1)
    assert annihilator_membership(x1 - x2)
    assert not annihilator_membership(x1)
    a = AlgebraElement(3, 0, {(2, 1): 1, (2, 2): -2, (2, 0): 1})
    assert annihilator_membership(a) and annihilates_positive_part(a, 6)


def test_annihilator_basis():
    basis = annihilator_basis(3, 1)
    assert [str(e) for e in basis] == ["1*x1 + -1*x2", "1*x2 + -1*x3"]
    for e in annihilator_basis(3, 4):
        assert (e * e).is_zero()
    for d in range(1, 6):
        assert annihilator_slice_dimension(3, d) == 2


def test_free_module_over_x1():
    for n in (2, 3, 5):
        assert free_module_check(n, 6)


def test_element_product_closed_form():
    x, y = AlgebraElement.gen(2, 0), AlgebraElement.gen(2, 1)
    assert x * y == AlgebraElement.basis(2, 2, 1)
    one = AlgebraElement.one(2)
    assert one * (x + y) == x + y
    assert AlgebraElement.basis(3, 2, 1) * AlgebraElement.basis(3, 3, 2) == AlgebraElement.basis(3, 5, 2)


def test_element_product_matches_groebner_reduction():
    n = 3
    G = canonical_presentation(n).groebner(8)
    X = Alphabet.generators("x", n)
    rng = random.Random(11)
    for _ in range(30):
        a, b = random_element(n, 3, rng, constant=True), random_element(n, 3, rng, constant=True)
        expected = G.reduce(a.to_poly(X) * b.to_poly(X))
        assert (a * b).to_poly(X) == expected


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_slice_sum_criterion(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    a = random_element(n, 3, rng, in_annihilator=rng.random() < 0.5)
    assert annihilator_membership(a) == annihilates_positive_part(a, 6)
