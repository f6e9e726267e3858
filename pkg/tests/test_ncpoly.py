from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ybx.ncpoly import (Alphabet, AlphabetMismatch, DegreeBoundError, InhomogeneousError, Letter, ModP,
                        NcPolynomial, Ordering, bullet_multiply, buchberger, deg_lex_compare, free_basis,
                        hilbert_function, is_groebner, normal_form, normal_words)
from ybx.yb_algebra import canonical_presentation

X2 = Alphabet.generators("x", 2)
X3 = Alphabet.generators("x", 3)


def P(alphabet, text):
    return NcPolynomial.parse(alphabet, text)


def test_deg_lex_compare():
    assert deg_lex_compare((0, 1), (1, 0)) is Ordering.LESS
    assert deg_lex_compare((2,), (0, 0)) is Ordering.LESS
    assert deg_lex_compare((1, 2), (1, 2)) is Ordering.EQUAL


def test_deg_lex_rejects_mixed_alphabets():
    with pytest.raises(AlphabetMismatch):
        deg_lex_compare((Letter("x", 1),), (Letter("y", 1),))


def test_terms_are_sorted_and_zero_dropped():
    p = NcPolynomial(X2, {(0, 0): 1, (1, 0): 2, (0, 1): 0})
    assert p.lm == (1, 0)
    assert p.lc == 2
    assert list(p.words()) == [(1, 0), (0, 0)]
    assert (p - p).is_zero()


def test_parse_round_trip():
    p = P(X3, "1*x2.x1 + -1*x1.x1")
    assert NcPolynomial.parse(X3, p.to_text()) == p
    assert NcPolynomial.zero(X3).to_text() == "0"


def test_normal_form_examples():
    G = canonical_presentation(3).groebner(4)
    assert normal_form(P(X3, "1*x2.x1"), G) == P(X3, "1*x1.x1")
    normal = P(X3, "1*x1.x3")
    assert normal_form(normal, G) == normal
    assert normal_form(P(X3, "1*x3.x2.x1"), G) == P(X3, "1*x1.x1.x1")


def test_normal_form_respects_bound():
    G = canonical_presentation(2).groebner(2)
    with pytest.raises(DegreeBoundError):
        normal_form(P(X2, "1*x2.x2.x2"), G)


def test_buchberger_canonical_n3():
    rels = [P(X3, t) for t in ("1*x1.x1 + -1*x2.x1", "1*x2.x2 + -1*x3.x2", "1*x3.x3 + -1*x1.x3",
                               "1*x1.x2 + -1*x3.x2", "1*x2.x3 + -1*x1.x3", "1*x3.x1 + -1*x2.x1")]
    G = buchberger(rels, 4)
    assert set(G.texts()) == {
        "1*x2.x1 + -1*x1.x1", "1*x3.x1 + -1*x1.x1", "1*x2.x2 + -1*x1.x2",
        "1*x3.x2 + -1*x1.x2", "1*x2.x3 + -1*x1.x3", "1*x3.x3 + -1*x1.x3",
    }
    assert G.certified and G.complete_flag


def test_buchberger_empty_relations_is_free():
    G = buchberger([], 3, alphabet=X2)
    assert G.rules == ()
    assert len(normal_words(G, 3)) == 8


def test_buchberger_commutative_plane():
    G = buchberger([P(X2, "1*x2.x1 + -1*x1.x2")], 5)
    assert G.texts() == ["1*x2.x1 + -1*x1.x2"]
    assert hilbert_function(G, 5) == [1, 2, 3, 4, 5, 6]


def test_buchberger_input_validation():
    with pytest.raises(InhomogeneousError):
        buchberger([P(X2, "1*x2.x1 + -1*x1")], 3)
    with pytest.raises(DegreeBoundError):
        buchberger([P(X2, "1*x2.x1.x1 + -1*x1.x1.x1")], 2)
    with pytest.raises(AlphabetMismatch):
        buchberger([P(X2, "1*x2.x1 + -1*x1.x1"), P(X3, "1*x3.x1 + -1*x1.x1")], 3)


def test_is_groebner():
    assert is_groebner(list(canonical_presentation(4).relations))
    assert is_groebner([P(X2, "1*x1.x2 + -1*x2.x1")])
    assert not is_groebner([P(X2, "1*x2.x2 + -1*x1.x2"), P(X2, "1*x2.x1 + -1*x2.x2")])


def test_normal_words_and_hilbert():
    G = canonical_presentation(3).groebner(4)
    assert normal_words(G, 2) == [(0, 0), (0, 1), (0, 2)]
    assert normal_words(G, 0) == [()]
    assert hilbert_function(G, 4) == [1, 3, 3, 3, 3]
    assert hilbert_function(free_basis(X2, 4), 4) == [1, 2, 4, 8, 16]


def test_bullet_multiply():
    G = canonical_presentation(3).groebner(4)
    assert bullet_multiply(P(X3, "1*x1.x2"), P(X3, "1*x1.x3"), G) == P(X3, "1*x1.x1.x1.x3")
    assert bullet_multiply(P(X3, "1*x2"), P(X3, "1*x3"), G) == P(X3, "1*x1.x3")
    one = NcPolynomial.monomial(X3, ())
    v = P(X3, "1*x3.x2")
    assert bullet_multiply(one, v, G) == normal_form(v, G)


def test_modp_field():
    a = ModP(Fraction(1, 2), 7)
    assert a * 2 == ModP(1, 7)
    assert (a - a) == 0
    with pytest.raises(ZeroDivisionError):
        ModP(Fraction(1, 7), 7)


def test_groebner_over_prime_field_matches_rationals():
    rels = [r.map_coefficients(lambda c: ModP(c, 101)) for r in canonical_presentation(3).relations]
    G = buchberger(rels, 4)
    assert hilbert_function(G, 4) == [1, 3, 3, 3, 3]


words3 = st.lists(st.integers(0, 2), min_size=1, max_size=6).map(tuple)


@settings(max_examples=60, deadline=None)
@given(words3, words3)
def test_reduction_is_multiplicative(u, v):
    G = canonical_presentation(3).groebner(12)
    lhs = G.reduce(NcPolynomial.monomial(X3, u + v))
    rhs = G.reduce(G.reduce(NcPolynomial.monomial(X3, u)) * G.reduce(NcPolynomial.monomial(X3, v)))
    assert lhs == rhs
    (w, c), = lhs.items()
    assert c == 1 and w == (0,) * (len(w) - 1) + (v[-1],)
