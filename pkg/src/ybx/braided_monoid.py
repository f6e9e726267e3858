"""Actions of a solution extended to words, the normalised braiding rho on
normal words, and the d-Veronese solutions (N_d, rho_d)."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .ncpoly import GroebnerBasis, normal_words
from .quadratic_set import SolutionTable, make_permutation_solution
from .yb_algebra import orbit_relations


class ExtendedActions:
    """Left action ^a b and right action a^b of words on words.

    ^{a1...ap} b = ^{a1}(^{a2...ap} b), and a single letter c acts on
    b = b1...bq by sliding through it left to right.  The right action is
    the mirror image: a^{u v} = (a^u)^v, with a letter y sliding right to left.
    """

    def __init__(self, s: SolutionTable):
        self.s = s
        self.left = lru_cache(maxsize=None)(self._left)
        self.right = lru_cache(maxsize=None)(self._right)

    def _letter_left(self, c: int, b: tuple) -> tuple:
        out = []
        for x in b:
            y, c = self.s(c, x)
            out.append(y)
        return tuple(out)

    def _letter_right(self, a: tuple, y: int) -> tuple:
        out = [0] * len(a)
        for i in range(len(a) - 1, -1, -1):
            y, out[i] = self.s(a[i], y)
        return tuple(out)

    def _left(self, a: tuple, b: tuple) -> tuple:
        for c in reversed(a):
            b = self._letter_left(c, b)
        return b

    def _right(self, a: tuple, b: tuple) -> tuple:
        for y in b:
            a = self._letter_right(a, y)
        return a


def extended_left_action(a: Sequence[int], b: Sequence[int], s: SolutionTable) -> tuple:
    return ExtendedActions(s).left(tuple(a), tuple(b))


def extended_right_action(a: Sequence[int], b: Sequence[int], s: SolutionTable) -> tuple:
    return ExtendedActions(s).right(tuple(a), tuple(b))


class NormalizedBraiding:
    """rho(a, b) = (Nor(^a b), Nor(a^b)) on normal words of the orbit presentation."""

    def __init__(self, s: SolutionTable, degree_bound: int):
        self.s = s
        self.actions = ExtendedActions(s)
        self.G: GroebnerBasis = orbit_relations(s).groebner(max(degree_bound, 2))
        self.degree_bound = degree_bound

    def nor(self, w: tuple) -> tuple:
        if len(w) <= 1:
            return tuple(w)
        red = self.G.reduce_word(w)
        if len(red) != 1:
            raise ValueError(f"normal form of {w} is not a single word")
        (u, c), = red.items()
        if c != 1:
            raise ValueError(f"normal form of {w} has coefficient {c}")
        return u

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> tuple:
        a, b = tuple(a), tuple(b)
        return self.nor(self.actions.left(a, b)), self.nor(self.actions.right(a, b))

    def normal_words(self, d: int) -> list:
        return normal_words(self.G, d)


def rho(a: Sequence[int], b: Sequence[int], braiding: NormalizedBraiding) -> tuple:
    return braiding(a, b)


def rho_closed_form(a: Sequence[int], b: Sequence[int], f: Sequence[int]) -> tuple:
    """rho(x1^(d-1)x_p, x1^(m-1)x_q) = (x1^(m-1) f^d(x_q), x1^(d-1) x_q), 0-based f."""
    d, m = len(a), len(b)
    fq = b[-1]
    for _ in range(d):
        fq = f[fq]
    return (0,) * (m - 1) + (fq,), (0,) * (d - 1) + (b[-1],)


def _normal_pairs(braiding: NormalizedBraiding, max_deg: int, equal_degree: bool = False):
    words = {d: braiding.normal_words(d) for d in range(1, max_deg + 1)}
    for d in words:
        for m in words:
            if equal_degree and d != m:
                continue
            for a in words[d]:
                for b in words[m]:
                    yield a, b


def rho_power_check(braiding: NormalizedBraiding, max_deg: int, equal_degree: bool = False) -> tuple:
    """(rho^3 == rho, rho^2 == rho) over pairs of normal words of length <= max_deg."""
    cube, square = True, True
    for a, b in _normal_pairs(braiding, max_deg, equal_degree):
        r1 = braiding(a, b)
        r2 = braiding(*r1)
        r3 = braiding(*r2)
        cube &= r3 == r1
        square &= r2 == r1
    return cube, square


def rho_square_witness(braiding: NormalizedBraiding, max_deg: int):
    for a, b in _normal_pairs(braiding, max_deg):
        r1 = braiding(a, b)
        if braiding(*r1) != r1:
            return a, b
    return None


def closed_form_agreement(braiding: NormalizedBraiding, max_deg: int) -> list:
    """Pairs where the word-level rho and the permutation closed form differ."""
    f = braiding.s.perm
    if f is None:
        raise ValueError("closed form needs a permutation solution")
    bad = []
    for a, b in _normal_pairs(braiding, max_deg):
        if braiding(a, b) != rho_closed_form(a, b, f):
            bad.append((a, b))
    return bad


def d_veronese_solution(s: SolutionTable, d: int) -> SolutionTable:
    """(N_d, rho_d) as a table on the deg-lex enumeration of N_d."""
    if d < 1:
        raise ValueError("d must be positive")
    braiding = NormalizedBraiding(s, d)
    Nd = braiding.normal_words(d)
    index = {w: i for i, w in enumerate(Nd)}
    table = [[None] * len(Nd) for _ in Nd]
    for a, b in itertools.product(Nd, repeat=2):
        u, v = braiding(a, b)
        table[index[a]][index[b]] = (index[u], index[v])
    out = SolutionTable(len(Nd), table)
    if s.perm is not None:
        from .quadratic_set import recover_permutation

        out.perm = recover_permutation(out)
    return out


def veronese_permutation(f: Sequence[int], d: int) -> tuple:
    """F(w_q) = w_{f^d(q)} on N_d, 0-based."""
    out = []
    for q in range(len(f)):
        for _ in range(d):
            q = f[q]
        out.append(q)
    return tuple(out)


def monomial_veronese_order(s: SolutionTable, d: int) -> int:
    if d == 0:
        return 1
    G = orbit_relations(s).groebner(max(d, 2))
    return len(normal_words(G, d))


def m3_identity_check(braiding: NormalizedBraiding, max_total: int) -> list:
    """Pairs of normal words with Nor(^a b . a^b) != Nor(a b)."""
    bad = []
    for d in range(1, max_total):
        for m in range(1, max_total - d + 1):
            for a in braiding.normal_words(d):
                for b in braiding.normal_words(m):
                    u, v = braiding.actions.left(a, b), braiding.actions.right(a, b)
                    if braiding.nor(u + v) != braiding.nor(a + b):
                        bad.append((a, b))
    return bad


def ybe_on_normal_words(s: SolutionTable, d: int) -> bool:
    from .quadratic_set import check_braid

    return check_braid(d_veronese_solution(s, d))


def nor_isomorphism_check(s: SolutionTable, d: int) -> bool:
    """(Nor(^u v), Nor(u^v)) = rho_d(Nor u, Nor v) for all words u, v of length d."""
    braiding = NormalizedBraiding(s, d)
    words = list(itertools.product(range(s.n), repeat=d))
    for u in words:
        for v in words:
            lhs = (braiding.nor(braiding.actions.left(u, v)), braiding.nor(braiding.actions.right(u, v)))
            if lhs != braiding(braiding.nor(u), braiding.nor(v)):
                return False
    return True


def permutation_veronese_matches(f: Sequence[int], d: int) -> bool:
    """d_veronese_solution(r_f, d) equals r_{f^d} under the w-relabelling."""
    s = make_permutation_solution([x + 1 for x in f])
    ver = d_veronese_solution(s, d)
    expected = make_permutation_solution([x + 1 for x in veronese_permutation(tuple(f), d)])
    return ver == expected
