"""The Yang-Baxter algebra A(k,X,r) and monoid S(X,r) of a finite solution."""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .element import AlgebraElement
from .linalg import nullspace, rank
from .ncpoly import Alphabet, GroebnerBasis, NcPolynomial, buchberger, deg_lex_key, normal_words
from .quadratic_set import SolutionTable


class Provenance(enum.Enum):
    ORBIT_FORM = "orbit_form"
    CANONICAL_FORM = "canonical_form"
    OTHER = "other"


class OrbitCapExceeded(RuntimeError):
    """Raised when a monoid word comparison explores more states than allowed."""


@dataclass(frozen=True)
class PresentationIdeal:
    n: int
    relations: tuple
    provenance: Provenance
    alphabet: Alphabet

    def texts(self) -> list:
        return [r.to_text() for r in self.relations]

    def groebner(self, bound: int) -> GroebnerBasis:
        return buchberger(list(self.relations), bound, alphabet=self.alphabet)


def x_alphabet(n: int) -> Alphabet:
    return Alphabet.generators("x", n)


def orbit_relations(s: SolutionTable, alphabet: Alphabet | None = None) -> PresentationIdeal:
    alphabet = alphabet or x_alphabet(s.n)
    seen = {}
    for x in range(s.n):
        for y in range(s.n):
            img = s(x, y)
            if img == (x, y):
                continue
            hi, lo = sorted([(x, y), img], key=deg_lex_key, reverse=True)
            seen[(hi, lo)] = NcPolynomial.binomial(alphabet, hi, lo)
    rels = tuple(seen[k] for k in sorted(seen, key=lambda k: (deg_lex_key(k[0]), deg_lex_key(k[1]))))
    return PresentationIdeal(s.n, rels, Provenance.ORBIT_FORM, alphabet)


def canonical_presentation(n: int, alphabet: Alphabet | None = None) -> PresentationIdeal:
    alphabet = alphabet or x_alphabet(n)
    rels = tuple(NcPolynomial.binomial(alphabet, (j, p), (0, p))
                 for p in range(n) for j in range(1, n))
    rels = tuple(sorted(rels, key=lambda r: deg_lex_key(r.lm)))
    return PresentationIdeal(n, rels, Provenance.CANONICAL_FORM, alphabet)


def presentations_equivalent(p1: PresentationIdeal, p2: PresentationIdeal, bound: int) -> bool:
    if p1.alphabet != p2.alphabet:
        return False
    g1, g2 = p1.groebner(bound), p2.groebner(bound)
    return (all(g2.reduce(r).is_zero() for r in p1.relations)
            and all(g1.reduce(r).is_zero() for r in p2.relations))


def normal_form_closed(w: Sequence[int]) -> tuple:
    w = tuple(w)
    if not w:
        raise ValueError("empty word has no closed normal form here")
    return (0,) * (len(w) - 1) + (w[-1],)


def _preimages(s: SolutionTable) -> dict:
    pre: dict = {}
    for x in range(s.n):
        for y in range(s.n):
            pre.setdefault(s(x, y), []).append((x, y))
    return pre


def orbit_of(w: Sequence[int], s: SolutionTable, max_orbit: int = 100000) -> set:
    """Class of ``w`` in S(X,r): connected component under the maps r^{i,i+1}
    taken in both directions (they need not be invertible)."""
    w = tuple(w)
    pre = _preimages(s)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for i in range(len(u) - 1):
            pair = (u[i], u[i + 1])
            for a, b in [s(*pair)] + pre.get(pair, []):
                v = u[:i] + (a, b) + u[i + 2:]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > max_orbit:
                        raise OrbitCapExceeded(f"orbit of {w} exceeds {max_orbit} words")
                    queue.append(v)
    return seen


def monoid_equal(w1: Sequence[int], w2: Sequence[int], s: SolutionTable, max_orbit: int = 100000) -> bool:
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != len(w2):
        return False
    if w1 == w2:
        return True
    return w2 in orbit_of(w1, s, max_orbit)


def orbit_partition(s: SolutionTable, m: int) -> list:
    """Blocks of X^m under D_m(r), each sorted, blocks sorted by first word."""
    import itertools

    remaining = set(itertools.product(range(s.n), repeat=m))
    blocks = []
    while remaining:
        w = min(remaining)
        block = orbit_of(w, s)
        remaining -= block
        blocks.append(sorted(block))
    return sorted(blocks)


def cancellativity_report(s: SolutionTable, degree: int) -> tuple:
    """(left_cancellative, right counterexample (a, b, u) or None) on normal
    monomials of total degree <= ``degree``; normal forms come from the
    orbit presentation's Groebner basis."""
    G = orbit_relations(s).groebner(max(degree, 2))
    words = {d: normal_words(G, d) for d in range(degree + 1)}

    def nf(w):
        red = G.reduce_word(w)
        return tuple(sorted(red.items()))

    left_ok = True
    right_cex = None
    for du in range(1, degree):
        for da in range(1, degree - du + 1):
            for u in words[du]:
                seen_left: dict = {}
                seen_right: dict = {}
                for a in words[da]:
                    kl, kr = nf(u + a), nf(a + u)
                    if kl in seen_left:
                        left_ok = False
                    seen_left[kl] = a
                    if kr in seen_right and right_cex is None:
                        right_cex = (seen_right[kr], a, u)
                    seen_right.setdefault(kr, a)
    return left_ok, right_cex


def right_cancellation_witness(n: int, d: int, q: int) -> tuple:
    """(a, b, x_q) with a = x1^d, b = x1^(d-1) x2 and a x_q = b x_q in A(k,n)."""
    if n < 2 or d < 1:
        raise ValueError("needs n >= 2 and d >= 1")
    a = (0,) * d
    b = (0,) * (d - 1) + (1,)
    return a, b, (q,)


def center_dimension(n: int, max_degree: int) -> int:
    """Dimension of the positive-degree elements of degree <= max_degree
    commuting with x1 and x2 (0 means the centre is the field there)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    total = 0
    for d in range(1, max_degree + 1):
        basis = [AlgebraElement.basis(n, d, p) for p in range(n)]
        rows = []
        for j in (0, 1):
            x = AlgebraElement.gen(n, j)
            comms = [e * x - x * e for e in basis]
            for q in range(n):
                rows.append([c.coeffs.get((d + 1, q), Fraction(0)) for c in comms])
        total += len(nullspace(rows))
    return total


def annihilator_membership(a: AlgebraElement) -> bool:
    if a.constant != 0:
        return False
    return all(a.slice_sum(d) == 0 for d in {d for d, _ in a.coeffs})


def annihilates_positive_part(a: AlgebraElement, bound: int) -> bool:
    """a.b = 0 for every basis element b of A^+ with deg(a) + deg(b) <= bound."""
    top = max(a.degrees(), default=0)
    for m in range(1, max(bound - top, 1) + 1):
        for q in range(a.n):
            if (a * AlgebraElement.basis(a.n, m, q)):
                return False
    return True


def annihilator_basis(n: int, d_max: int) -> list:
    out = []
    for k in range(d_max):
        for i in range(n - 1):
            out.append(AlgebraElement(n, 0, {(k + 1, i): 1, (k + 1, i + 1): -1}))
    return out


def annihilator_slice_dimension(n: int, d: int) -> int:
    """Dimension of the degree-d part of Ann(A^+): kernel of b -> (b.x_q)_q on A_d."""
    basis = [AlgebraElement.basis(n, d, p) for p in range(n)]
    rows = []
    for q in range(n):
        images = [e * AlgebraElement.gen(n, q) for e in basis]
        for t in range(n):
            rows.append([img.coeffs.get((d + 1, t), Fraction(0)) for img in images])
    return len(nullspace(rows))


def random_element(n: int, max_degree: int, rng: random.Random, *, in_annihilator: bool = False,
                   constant: bool = False) -> AlgebraElement:
    coeffs = {}
    for d in range(1, max_degree + 1):
        vals = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        if in_annihilator:
            vals[-1] -= sum(vals)
        for q, c in enumerate(vals):
            coeffs[(d, q)] = c
    c0 = Fraction(rng.randint(-3, 3)) if constant and not in_annihilator else 0
    return AlgebraElement(n, c0, coeffs)


def free_module_check(n: int, d_max: int, G: GroebnerBasis | None = None) -> bool:
    """A is free over k[x1] on {1, x2, ..., xn}: in each degree 1..d_max the
    elements x1^d and x1^(d-1)x_j (j >= 2), normalised via the Groebner basis,
    form a basis of A_d."""
    G = G or canonical_presentation(n).groebner(d_max)
    alphabet = G.alphabet
    for d in range(1, d_max + 1):
        basis = normal_words(G, d)
        index = {w: i for i, w in enumerate(basis)}
        gens = [(0,) * d] + [(0,) * (d - 1) + (j,) for j in range(1, n)]
        rows = []
        for w in gens:
            red = G.reduce(NcPolynomial.monomial(alphabet, w))
            row = [Fraction(0)] * len(basis)
            for u, c in red.items():
                row[index[u]] = c
            rows.append(row)
        if len(basis) != n or rank(rows) != n:
            return False
    return True
