import itertools
import random
from fractions import Fraction

import pytest
import sympy

from ybx import diffcalc as dc
from ybx.element import AlgebraElement

X = AlgebraElement.gen(2, 0)
Y = AlgebraElement.gen(2, 1)
EXAMPLE = dc.FamilyParams(1, 0, 1, 0)


def dx(i):
    return dc.OmegaOneElement.dx(2, i)


@pytest.fixture(scope="module")
def rep():
    return dc.family_rep(EXAMPLE)


def test_family_params_reject_char_two():
    with pytest.raises(dc.CalculusError):
        dc.FamilyParams(1, 0, 1, 0, characteristic=2)
    assert dc.FamilyParams.parse("1, 0, 1/2, 0").lam == Fraction(1, 2)


def test_example_bimodule_relations(rep):
    assert rep.right_gen(dx(0), 0) == dc.OmegaOneElement([X, X])
    assert rep.right_gen(dx(1), 0) == dc.OmegaOneElement([X.scale(2) - Y, X])
    assert rep.right_gen(dx(0), 1) == dc.OmegaOneElement([Y, Y.scale(2) - X])
    assert rep.right_gen(dx(1), 1) == dc.OmegaOneElement([Y, Y])


def test_compact_formula_matches_explicit_matrices():
    rng = random.Random(2)
    for p in [EXAMPLE, dc.FamilyParams(0, 0, 0, 0)] + [dc.random_params(rng) for _ in range(5)]:
        assert dc.family_rep(p).matrices == dc.family_rep_from_entries(p).matrices


def test_commutation_rep_checks(rep):
    assert dc.check_commutation_rep(rep)
    assert dc.check_commutation_rep(dc.family_rep(dc.FamilyParams(0, 0, 0, 0)))
    assert dc.check_commutation_rep(dc.family_rep(dc.FamilyParams(0, 1, 0, 1)))
    zero = dc.CommutationRep(2, [[[AlgebraElement.zero(2)] * 2] * 2] * 2)
    kinds = {bad[0] for bad in dc.commutation_failures(zero, dc.canonical_presentation(2))}
    assert kinds == {"rho2"}


def test_family_equations_hold_universally():
    rng = random.Random(7)
    assert dc.verify_family_equations(EXAMPLE)
    assert dc.verify_family_equations(dc.FamilyParams(0, 0, 0, 0))
    assert all(dc.verify_family_equations(dc.random_params(rng)) for _ in range(50))
    sym = dc.FamilyParams.symbolic()
    assert dc.verify_family_equations(sym)
    assert dc.check_commutation_rep(dc.family_rep(sym))


def test_symmetric_family():
    rng = random.Random(4)
    for _ in range(10):
        p = dc.random_params(rng)
        q = dc.FamilyParams(p.alpha, 1 - p.alpha, p.lam, 1 - p.lam)
        assert dc.is_symmetric_family(q)
        assert dc.is_symmetric_family(p) == (p.beta == 1 - p.alpha and p.mu == 1 - p.lam)


def test_differential_examples(rep):
    assert dc.differential(AlgebraElement.one(2), rep).is_zero()
    assert dc.differential(X * X, rep) == dc.OmegaOneElement([X.scale(2), X])
    assert dc.differential(Y * X, rep) == dc.differential(X * X, rep)
    assert dc.differential(Y * Y, rep) == dc.OmegaOneElement([Y, Y.scale(2)])
    assert dc.well_definedness_failures(rep) == []


def test_partials(rep):
    y2, x2 = Y * Y, X * X
    assert dc.partials(Y * y2, rep) == [y2.scale(3), y2.scale(5) - x2]
    for i, j in itertools.product(range(2), repeat=2):
        expected = AlgebraElement.one(2) if i == j else AlgebraElement.zero(2)
        assert dc.partials(AlgebraElement.gen(2, j), rep)[i] == expected


def test_cross_partials_match_closed_formula(rep):
    for m in range(2, 9):
        for i in range(2):
            assert dc.partials(dc.power(1 - i, m), rep)[i] == dc.closed_cross_partial(i, m)


def test_diagonal_partial_discrepancy_is_reported(rep):
    rows = dc.diagonal_partial_report(rep, 8)
    assert not any(r["matches_reference"] for r in rows)
    assert all(r["matches_exponent_m_minus_2"] for r in rows)


def test_twisted_leibniz(rep):
    rng = random.Random(9)
    from ybx.yb_algebra import random_element
    for _ in range(40):
        a = random_element(2, 3, rng, constant=True)
        b = random_element(2, 3, rng, constant=True)
        assert dc.twisted_leibniz_holds(a, b, rep)


def test_connectedness(rep):
    assert dc.connectedness_check(rep, 10)
    assert dc.differential(AlgebraElement(2, 5), rep).is_zero()
    assert dc.differential(X - Y, rep) == dx(0) - dx(1)


def test_iterated_relation_and_right_annihilation(rep):
    for m in range(2, 9):
        for i in range(2):
            assert dc.iterated_relation(m, i, rep) == dc.iterated_relation_expected(m)
    assert dc.right_annihilation_holds(rep, 6)


def test_no_degree_lowering_derivation():
    assert all(dc.no_degree_lowering_derivation(n) for n in range(2, 6))


def test_omega_max_degree_two():
    rels = dc.omega_max_degree2(EXAMPLE)
    assert len(rels) == 2
    assert dc.solve_example_wedges(rels) == {"dx^dy": "-2*xx", "dy^dx": "-2*yy"}
    assert dc.wedge_relations_equivalent(rels, dc.closed_omega_pair(EXAMPLE))
    sym = dc.FamilyParams.symbolic()
    assert dc.wedge_relations_equivalent(dc.omega_max_degree2(sym), dc.closed_omega_pair(sym))
    subs = {s: v for s, v in zip(sym.as_tuple(), (1, 0, 1, 0))}
    special = [{k: sympy.sympify(c).subs(subs) for k, c in r.items()} for r in dc.closed_omega_pair(sym)]
    assert dc.wedge_relations_equivalent(special, rels)


def monoid_example():
    F = Fraction
    return dc.MonoidCalculusData(2, [F(1), F(0)], [[F(2), F(1)], [F(2), F(-1)]], [F(1), F(0)], F(1))


def test_monoid_graded_example():
    calc = dc.monoid_graded_calculus(monoid_example())
    assert calc.e == [[1, 1], [1, -1]]
    assert calc.gamma == [[Fraction(3, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(3, 2)]]
    assert calc.generic
    cert = dc.monoid_calculus_certificate(monoid_example())
    assert cert.passed
    assert all(r["grade_ok"] for r in cert.witness["relations"])


def test_monoid_graded_left_annihilation():
    calc = dc.monoid_graded_calculus(monoid_example())
    z = X - Y
    form = dc.graded_dx(calc, 1).right_gen(0).right_gen(1)
    assert form.left(z).is_zero()
    assert not form.is_zero()


def test_monoid_graded_dependent_vectors():
    F = Fraction
    data = dc.MonoidCalculusData(2, [F(1), F(0)], [[F(2), F(1)], [F(2), F(-1)]], [F(0), F(1)], F(1))
    with pytest.raises(dc.CalculusError):
        dc.monoid_graded_calculus(data)
    bad_mu = dc.MonoidCalculusData(2, [F(1), F(0)], [[F(2), F(1)], [F(3), F(-1)]], [F(1), F(0)], F(1))
    with pytest.raises(dc.CalculusError):
        dc.monoid_graded_calculus(bad_mu)


def test_frt_relations_n2():
    B = dc.frt_bialgebra(2)
    expected = {r.monic() for r in dc.frt_n2_relations()}
    assert set(B.relations) == expected
    assert set(B.relations) == {r.monic() for r in dc.frt_identity_relations(2)}
    assert all(r.is_homogeneous() and r.degree == 2 for r in B.relations)


def test_frt_coalgebra_and_rmatrix():
    B = dc.frt_bialgebra(3)
    assert B.coproduct(0, 2) == [(dc._t(3, 0, a), dc._t(3, a, 2)) for a in range(3)]
    assert [B.counit(i, j) for i in range(2) for j in range(2)] == [1, 0, 0, 1]
    f = (1, 2, 0)
    R = dc.r_matrix(f)
    for a, i, b, j in itertools.product(range(3), repeat=4):
        assert R(a, i, b, j) == (1 if f[j] == b and j == a else 0)


def test_comodule_algebra():
    assert dc.verify_comodule_algebra(2, 4).passed
    assert dc.verify_comodule_algebra(3, 3).passed
    assert dc.verify_comodule_algebra(3, 3, f=(1, 2, 0)).passed


def test_covariance(rep):
    assert not dc.covariance_condition_check(EXAMPLE)
    rng = random.Random(1)
    assert not any(dc.covariance_condition_check(dc.random_params(rng)) for _ in range(5))
    zero = dc.CommutationRep(2, [[[AlgebraElement.zero(2)] * 2] * 2] * 2)
    assert dc.covariance_condition_check(zero)


def test_fermionic_algebra():
    lam = dc.fermionic_algebra(2)
    assert {r.to_text() for r in lam.relations} == {"1*th1.th1", "1*th2.th2"}
    assert lam.psi(0, 1) == {(1, 1): -1}
    cyc = dc.fermionic_algebra(3, (1, 2, 0))
    assert {r.to_text() for r in cyc.relations} == {"1*th2.th1", "1*th3.th2", "1*th1.th3"}
    for n in range(1, 5):
        for f in itertools.permutations(range(n)):
            assert dc.fermionic_consistency(n, f).passed


def test_rho_of_word_is_matrix_product(rep):
    w = (1, 0, 1)
    M = rep.rho_word(w)
    b = AlgebraElement.from_word(2, w)
    got = rep.rho_of(b)
    assert all(got[i][k] == M[i][k] for i in range(2) for k in range(2))
