import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ybx.braided_monoid import (NormalizedBraiding, closed_form_agreement, d_veronese_solution,
                                extended_left_action, extended_right_action, m3_identity_check,
                                monomial_veronese_order, nor_isomorphism_check, permutation_veronese_matches,
                                rho_closed_form, rho_power_check, rho_square_witness, veronese_permutation,
                                ybe_on_normal_words)
from ybx.quadratic_set import identity_map, make_permutation_solution

CYCLE = make_permutation_solution([2, 3, 1])


def test_left_action_of_words():
    # f^2 applied letterwise: x3 -> x2, x1 -> x3
    assert extended_left_action((0, 1), (2, 0), CYCLE) == (1, 2)
    assert extended_left_action((), (2, 1), CYCLE) == (2, 1)
    for d in range(1, 5):
        for q in range(3):
            assert extended_left_action((1,) * d, (q,), CYCLE) == (veronese_permutation((1, 2, 0), d)[q],)


def test_right_action_of_words():
    assert extended_right_action((2,), (0, 1, 2), CYCLE) == (2,)
    assert extended_right_action((0, 1), (), CYCLE) == (0, 1)
    br = NormalizedBraiding(CYCLE, 4)
    assert br.nor(extended_right_action((0, 1), (0, 2), CYCLE)) == (0, 2)


def test_rho_examples():
    br = NormalizedBraiding(CYCLE, 5)
    assert br((0, 1), (0, 0, 2)) == ((0, 0, 1), (0, 2))
    for x, y in itertools.product(range(3), repeat=2):
        u, v = CYCLE(x, y)
        assert br((x,), (y,)) == ((u,), (v,))


def test_rho_closed_form_agrees():
    for f in itertools.permutations(range(1, 5)):
        br = NormalizedBraiding(make_permutation_solution(f), 4)
        assert closed_form_agreement(br, 4) == []
    assert rho_closed_form((0, 1), (0, 0, 2), (1, 2, 0)) == ((0, 0, 1), (0, 2))


def test_rho_powers():
    br = NormalizedBraiding(CYCLE, 5)
    assert rho_power_check(br, 5) == (True, False)
    assert rho_power_check(br, 5, equal_degree=True) == (True, True)
    assert rho_square_witness(br, 5) is not None


def test_rho_powers_single_generator():
    # with one generator, rho swaps the two lengths, so rho^2 = rho fails when they differ
    br = NormalizedBraiding(make_permutation_solution([1]), 5)
    assert rho_power_check(br, 5) == (True, False)
    assert rho_power_check(br, 5, equal_degree=True) == (True, True)


def test_braided_monoid_identities():
    br = NormalizedBraiding(CYCLE, 5)
    assert m3_identity_check(br, 5) == []
    assert nor_isomorphism_check(CYCLE, 2)
    assert ybe_on_normal_words(CYCLE, 3)


def test_veronese_solutions():
    ver = d_veronese_solution(CYCLE, 2)
    assert ver.perm == (2, 0, 1)
    assert d_veronese_solution(CYCLE, 1) == CYCLE
    ident = d_veronese_solution(make_permutation_solution([1, 2, 3]), 3)
    assert ident.perm == (0, 1, 2)
    with pytest.raises(ValueError):
        d_veronese_solution(CYCLE, 0)


def test_monomial_veronese_order():
    assert monomial_veronese_order(make_permutation_solution([1, 2, 3, 4]), 3) == 4
    assert monomial_veronese_order(CYCLE, 0) == 1
    assert monomial_veronese_order(identity_map(2), 2) == 4


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(4))), st.integers(1, 4))
def test_veronese_solution_is_power_permutation(f, d):
    assert permutation_veronese_matches(tuple(f), d)
