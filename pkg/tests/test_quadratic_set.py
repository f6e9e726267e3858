import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ybx.quadratic_set import (PermutationSolutionSpec, SolutionError, SolutionTable, braid_witness,
                               check_braid, check_idempotent, check_nondegenerate,
                               enumerate_idempotent_lnd_solutions, flip_solution, identity_map,
                               make_permutation_solution, permutation_classes, recover_permutation,
                               solution_from_json, solutions_isomorphic)


def test_permutation_solution_tables():
    s = make_permutation_solution(PermutationSolutionSpec(3, (2, 3, 1)))
    assert s(0, 0) == (1, 0)
    assert make_permutation_solution([1, 2])(0, 1) == (1, 1)
    assert make_permutation_solution([1])(0, 0) == (0, 0)


def test_permutation_spec_rejects_non_bijection():
    with pytest.raises(SolutionError):
        make_permutation_solution([1, 1, 2])


def test_every_small_permutation_solution_is_braided_idempotent():
    for n in range(1, 6):
        for f in itertools.permutations(range(1, n + 1)):
            s = make_permutation_solution(f)
            assert check_braid(s) and check_idempotent(s)
            assert recover_permutation(s) == tuple(v - 1 for v in f)


def test_flip_and_identity():
    assert check_braid(flip_solution(3))
    assert not check_idempotent(flip_solution(2))
    assert check_idempotent(identity_map(3))
    assert check_nondegenerate(flip_solution(3)) == (True, True)


def test_nondegeneracy_of_permutation_solutions():
    assert check_nondegenerate(make_permutation_solution([2, 1, 3])) == (True, False)
    assert check_nondegenerate(make_permutation_solution([1])) == (True, True)


def test_random_non_solution_is_rejected():
    rng = random.Random(3)
    pairs = [(a, b) for a in range(2) for b in range(2)]
    while True:
        s = SolutionTable(2, [[rng.choice(pairs) for _ in range(2)] for _ in range(2)])
        if braid_witness(s) is not None:
            break
    assert not check_braid(s)
    triple = braid_witness(s)
    assert len(triple) == 3


def test_isomorphism_by_conjugation():
    rng = random.Random(5)
    f = [2, 3, 1, 4]
    for _ in range(5):
        g = list(range(4))
        rng.shuffle(g)
        ginv = [g.index(i) for i in range(4)]
        conj = [g[f[ginv[i]] - 1] + 1 for i in range(4)]
        phi = solutions_isomorphic(make_permutation_solution(f), make_permutation_solution(conj))
        assert phi is not None


def test_isomorphism_negative_and_reflexive():
    assert solutions_isomorphic(make_permutation_solution([1, 2]), flip_solution(2)) is None
    s = make_permutation_solution([2, 1])
    assert solutions_isomorphic(s, s) is not None


def test_enumeration_n2():
    sols = enumerate_idempotent_lnd_solutions(2)
    perms = {s.perm for s in sols if s.perm is not None}
    assert perms == {(0, 1), (1, 0)}
    assert all(check_braid(s) and check_idempotent(s) and check_nondegenerate(s)[0] for s in sols)
    assert len(sols) == 4


def test_enumeration_n3_counts():
    sols = enumerate_idempotent_lnd_solutions(3)
    assert len(sols) == 12
    assert sum(s.perm is not None for s in sols) == 6
    assert len(enumerate_idempotent_lnd_solutions(3, up_to_isomorphism=True)) == 5


def test_permutation_class_counts():
    assert [len(permutation_classes(n)) for n in (1, 2, 3, 4)] == [1, 2, 3, 5]


def test_json_round_trip():
    s = make_permutation_solution([2, 3, 1])
    assert solution_from_json(s.to_json()) == s
    t = flip_solution(2)
    assert solution_from_json(t.to_json()) == t
    with pytest.raises(SolutionError):
        solution_from_json({"n": 2})


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(1, 6))))
def test_permutation_solution_properties(f):
    s = make_permutation_solution(f)
    assert check_braid(s)
    assert check_idempotent(s)
    assert check_nondegenerate(s) == (True, False)
