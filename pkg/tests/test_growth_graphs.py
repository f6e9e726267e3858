import itertools

import pytest

from ybx.growth_graphs import (DirectedGraph, GraphError, classify_max_monomial, complete_to_acyclic_tournament,
                               dim_a2_bounds_check, gk_dimension, global_dimension, graph_of_normal_words,
                               graph_of_obstructions, hilbert_after_bound, monomial_algebra_graph)
from ybx.ncpoly import Alphabet, free_basis
from ybx.quadratic_set import enumerate_idempotent_lnd_solutions, make_permutation_solution
from ybx.yb_algebra import canonical_presentation


def star(n):
    G = canonical_presentation(n).groebner(3)
    return graph_of_normal_words(G), graph_of_obstructions(G)


def test_normal_word_graph_is_star_with_loop():
    for n in (2, 3, 5):
        gN, gW = star(n)
        assert gN.edges == {("x1", f"x{j}") for j in range(1, n + 1)}
        assert gW == gN.complement()
        assert ("x2", "x2") in gW.edges


def test_free_algebra_graph():
    g = graph_of_normal_words(free_basis(Alphabet.generators("x", 2), 3))
    assert len(g.edges) == 4
    assert gk_dimension(g).kind == "exponential"
    assert gk_dimension(g).validates(g)


def test_gk_dimension_of_star():
    for n in range(2, 7):
        gN, _ = star(n)
        res = gk_dimension(gN)
        assert str(res) == "Polynomial(1)" and res.validates(gN)


def test_gk_dimension_acyclic_is_zero():
    g = DirectedGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert str(gk_dimension(g)) == "Polynomial(0)"


def test_gk_dimension_two_cycle_chain():
    g = DirectedGraph("ab", [("a", "a"), ("a", "b"), ("b", "b")])
    res = gk_dimension(g)
    assert str(res) == "Polynomial(2)" and res.validates(g)


def test_global_dimension():
    for n in range(2, 7):
        _, gW = star(n)
        res = global_dimension(gW)
        assert str(res) == "Infinite" and res.validates(gW)
    _, commutative = monomial_algebra_graph(4, [(j, i) for j in range(4) for i in range(j)])
    res = global_dimension(commutative)
    assert str(res) == "Finite(4)" and res.validates(commutative)
    assert str(global_dimension(DirectedGraph(["x1", "x2"], []))) == "Finite(1)"


def test_path_counts_equal_hilbert_function():
    for n in range(2, 5):
        gN, _ = star(n)
        assert [gN.count_paths(k) for k in range(6)] == [n] * 6


def test_complete_to_acyclic_tournament():
    t = complete_to_acyclic_tournament(DirectedGraph("abc", []))
    assert t.is_tournament() and t.is_acyclic() and len(t.edges) == 3
    already = DirectedGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert complete_to_acyclic_tournament(already) == already
    path = DirectedGraph("abc", [("a", "b"), ("b", "c")])
    assert complete_to_acyclic_tournament(path).edges == path.edges | {("a", "c")}
    with pytest.raises(GraphError):
        complete_to_acyclic_tournament(DirectedGraph("ab", [("a", "b"), ("b", "a")]))


def test_classify_max_monomial():
    gN, _ = star(2)
    assert classify_max_monomial(gN, "x1")
    gN3, _ = star(3)
    assert not classify_max_monomial(gN3, "x1")
    t = DirectedGraph("abc", [("a", "a"), ("a", "b"), ("b", "c"), ("a", "c")])
    assert classify_max_monomial(t, "a")
    two_loops = DirectedGraph("ab", [("a", "a"), ("b", "b"), ("a", "b")])
    assert not classify_max_monomial(two_loops, "a")


def test_dim_a2_bounds():
    for n in (1, 2, 3, 4):
        for f in itertools.permutations(range(1, n + 1)):
            rep = dim_a2_bounds_check(make_permutation_solution(f))
            assert (rep.dim_a2, rep.lower, rep.within) == (n, n, True)
    rep = dim_a2_bounds_check(make_permutation_solution([1]))
    assert (rep.dim_a2, rep.lower, rep.upper, rep.within) == (1, 1, 1, True)
    for s in enumerate_idempotent_lnd_solutions(2):
        assert dim_a2_bounds_check(s).dim_a2 == 2


def test_hilbert_after_bound_for_enumerated_solutions():
    for s in enumerate_idempotent_lnd_solutions(3):
        h = hilbert_after_bound(s, 5)
        assert h[0] == 1 and h[1] == 3


def test_dot_output():
    gN, _ = star(2)
    dot = gN.to_dot("GammaN")
    assert dot.startswith("digraph GammaN {") and '"x1" -> "x2";' in dot
