"""First order differential calculi on A(k,n), the FRT bialgebra of r_f and
the fermionic algebra.

A calculus is given by commutation matrices rho^j (entries in A) with
dx_i . x_j = sum_k rho^j[i][k] dx_k.  One-forms are stored in the left basis
{dx_i}.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .element import AlgebraElement, _is_zero, _simplify
from .linalg import nullspace, rank, solve
from .ncpoly import Alphabet, NcPolynomial, buchberger
from .quadratic_set import make_permutation_solution
from .reports import Certificate
from .yb_algebra import PresentationIdeal, canonical_presentation, orbit_relations


class CalculusError(ValueError):
    pass


# ---------------------------------------------------------------- one-forms

class OmegaOneElement:
    """sum_i a_i dx_i with a_i in A(k,n)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[AlgebraElement]):
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, n: int) -> "OmegaOneElement":
        return cls([AlgebraElement.zero(n)] * n)

    @classmethod
    def dx(cls, n: int, i: int) -> "OmegaOneElement":
        return cls([AlgebraElement.one(n) if k == i else AlgebraElement.zero(n) for k in range(n)])

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "OmegaOneElement") -> "OmegaOneElement":
        return OmegaOneElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "OmegaOneElement") -> "OmegaOneElement":
        return OmegaOneElement([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "OmegaOneElement":
        return OmegaOneElement([-a for a in self.coeffs])

    def left(self, a: AlgebraElement) -> "OmegaOneElement":
        return OmegaOneElement([a * c for c in self.coeffs])

    def scale(self, s) -> "OmegaOneElement":
        return OmegaOneElement([c.scale(s) for c in self.coeffs])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, OmegaOneElement) and (self - other).is_zero()

    def __str__(self) -> str:
        return " + ".join(f"({c})d{k + 1}" for k, c in enumerate(self.coeffs) if not c.is_zero()) or "0"

    __repr__ = __str__


# ------------------------------------------------------ commutation matrices

def _mat_mul(P, Q):
    n = len(P)
    return [[sum((P[i][l] * Q[l][k] for l in range(n)), AlgebraElement.zero(P[0][0].n)) for k in range(n)]
            for i in range(n)]


def _identity(n):
    return [[AlgebraElement.one(n) if i == k else AlgebraElement.zero(n) for k in range(n)] for i in range(n)]


class CommutationRep:
    """matrices[j][i][k] = rho^j_{ik}, the image of x_{j+1}."""

    def __init__(self, n: int, matrices):
        self.n = n
        self.matrices = tuple(tuple(tuple(row) for row in M) for M in matrices)
        if len(self.matrices) != n or any(len(M) != n or any(len(r) != n for r in M) for M in self.matrices):
            raise CalculusError("need n matrices of size n x n")
        self._word_cache: dict = {}

    def rho_word(self, w: Sequence[int]):
        w = tuple(w)
        hit = self._word_cache.get(w)
        if hit is None:
            M = _identity(self.n)
            for j in w:
                M = _mat_mul(M, self.matrices[j])
            hit = self._word_cache[w] = M
        return hit

    def rho_of(self, b: AlgebraElement):
        """The matrix rho(b) in M_n(A)."""
        n = self.n
        out = [[AlgebraElement(n, b.constant if i == k else 0) for k in range(n)] for i in range(n)]
        for (d, q), c in b.coeffs.items():
            M = self.rho_word((0,) * (d - 1) + (q,))
            out = [[out[i][k] + M[i][k].scale(c) for k in range(n)] for i in range(n)]
        return out

    def right_gen(self, w: OmegaOneElement, j: int) -> OmegaOneElement:
        n = self.n
        M = self.matrices[j]
        return OmegaOneElement([sum((w.coeffs[i] * M[i][k] for i in range(n)), AlgebraElement.zero(n))
                                for k in range(n)])

    def right(self, w: OmegaOneElement, b: AlgebraElement) -> OmegaOneElement:
        """The bimodule product w . b."""
        out = w.scale(b.constant) if not _is_zero(b.constant) else OmegaOneElement.zero(self.n)
        for (d, q), c in b.coeffs.items():
            t = w
            for j in (0,) * (d - 1) + (q,):
                t = self.right_gen(t, j)
            out = out + t.scale(c)
        return out

    def substitute(self, mapping) -> "CommutationRep":
        return CommutationRep(self.n, [[[e.substitute(mapping) for e in row] for row in M] for M in self.matrices])


@dataclass(frozen=True)
class FamilyParams:
    alpha: object
    beta: object
    lam: object
    mu: object
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic == 2:
            raise CalculusError("the family needs a field of characteristic other than 2")
        for name in ("alpha", "beta", "lam", "mu"):
            v = getattr(self, name)
            if isinstance(v, (int, str)):
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def symbolic(cls) -> "FamilyParams":
        a, b, l, m = sympy.symbols("alpha beta lambda mu")
        return cls(a, b, l, m)

    @classmethod
    def parse(cls, text: str) -> "FamilyParams":
        parts = [Fraction(p.strip()) for p in text.split(",")]
        if len(parts) != 4:
            raise CalculusError("expected four parameters a,b,l,m")
        return cls(*parts)

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.lam, self.mu)


def _lin(n: int, cx, cy) -> AlgebraElement:
    return AlgebraElement(n, 0, {(1, 0): cx, (1, 1): cy})


def family_entries(p: FamilyParams) -> dict:
    """e, f, g, h and z = x - y for the degree-one ansatz."""
    one = 1
    return {
        "e": _lin(2, p.alpha, one - p.alpha),
        "f": _lin(2, p.lam, one - p.lam),
        "g": _lin(2, p.mu, one - p.mu),
        "h": _lin(2, p.beta, one - p.beta),
        "z": _lin(2, 1, -1),
    }


def family_rep(p: FamilyParams) -> CommutationRep:
    y = AlgebraElement.gen(2, 1)
    z = _lin(2, 1, -1)
    C = [[p.alpha, p.lam], [p.mu, p.beta]]
    eps = [[0, 1], [-1, 0]]
    mats = [[[y + z.scale(eps[i][j] * (1 if i == k else 0) + C[i][k]) for k in range(2)] for j in range(2)]
            for i in range(2)]
    return CommutationRep(2, mats)


def family_rep_from_entries(p: FamilyParams) -> CommutationRep:
    """The same matrices assembled from e, f, g, h in the explicit 2 x 2 shape."""
    E = family_entries(p)
    e, f, g, h, z = E["e"], E["f"], E["g"], E["h"], E["z"]
    return CommutationRep(2, [[[e, f], [e + z, f]], [[g, h - z], [g, h]]])


def verify_family_equations(p: FamilyParams) -> bool:
    E = family_entries(p)
    e, f, g, h, z = E["e"], E["f"], E["g"], E["h"], E["z"]
    s = e - g + f - h + z
    exprs = [
        s * f,
        s * g,
        f * h - h * h + z * h + (e - g) * (h - z),
        g * e - e * e - z * e + (h - f) * (e + z),
    ]
    return all(x.is_zero() for x in exprs)


def _relation_terms(rel: NcPolynomial):
    for w, c in rel.items():
        if len(w) != 2:
            raise CalculusError("commutation checks need quadratic relations")
        yield w[0], w[1], c


def commutation_failures(rep: CommutationRep, presentation: PresentationIdeal) -> list:
    n = rep.n
    bad = []
    for rel in presentation.relations:
        terms = list(_relation_terms(rel))
        total = [[AlgebraElement.zero(n) for _ in range(n)] for _ in range(n)]
        for i, j, c in terms:
            prod = _mat_mul(rep.matrices[i], rep.matrices[j])
            total = [[total[a][b] + prod[a][b].scale(c) for b in range(n)] for a in range(n)]
        if any(not e.is_zero() for row in total for e in row):
            bad.append(("rho1", rel.to_text()))
        for k in range(n):
            acc = AlgebraElement.zero(n)
            for i, j, c in terms:
                acc = acc + rep.matrices[j][i][k].scale(c)
                if j == k:
                    acc = acc + AlgebraElement.gen(n, i).scale(c)
            if not acc.is_zero():
                bad.append(("rho2", rel.to_text(), k))
    return bad


def check_commutation_rep(rep: CommutationRep, presentation: PresentationIdeal | None = None) -> bool:
    presentation = presentation or canonical_presentation(rep.n)
    return not commutation_failures(rep, presentation)


# ------------------------------------------------------------- differential

def differential_of_word(w: Sequence[int], rep: CommutationRep) -> OmegaOneElement:
    n = rep.n
    out = OmegaOneElement.zero(n)
    prefix: tuple = ()
    for c in w:
        out = rep.right_gen(out, c) + OmegaOneElement.dx(n, c).left(AlgebraElement.from_word(n, prefix))
        prefix = prefix + (c,)
    return out


def differential(a: AlgebraElement, rep: CommutationRep) -> OmegaOneElement:
    out = OmegaOneElement.zero(rep.n)
    for (d, q), c in a.coeffs.items():
        out = out + differential_of_word((0,) * (d - 1) + (q,), rep).scale(c)
    return out


def partials(a: AlgebraElement, rep: CommutationRep) -> list:
    return list(differential(a, rep).coeffs)


def well_definedness_failures(rep: CommutationRep, presentation: PresentationIdeal | None = None) -> list:
    """Relations whose two sides have different differentials, computed word by word."""
    presentation = presentation or canonical_presentation(rep.n)
    bad = []
    for rel in presentation.relations:
        total = OmegaOneElement.zero(rep.n)
        for w, c in rel.items():
            total = total + differential_of_word(w, rep).scale(c)
        if not total.is_zero():
            bad.append(rel.to_text())
    return bad


def twisted_leibniz_holds(a: AlgebraElement, b: AlgebraElement, rep: CommutationRep) -> bool:
    n = rep.n
    da, db = partials(a, rep), partials(b, rep)
    lhs = partials(a * b, rep)
    R = rep.rho_of(b)
    for i in range(n):
        rhs = a * db[i]
        for j in range(n):
            rhs = rhs + da[j] * R[j][i]
        if not (lhs[i] - rhs).is_zero():
            return False
    return True


def connectedness_check(rep: CommutationRep, D: int) -> bool:
    """ker d on the span of degrees 0..D is the constants."""
    n = rep.n
    for d in range(1, D + 1):
        cols = [differential(AlgebraElement.basis(n, d, q), rep) for q in range(n)]
        coords = [(k, 0, 0) for k in range(n)] if d == 1 else [(k, d - 1, q) for k in range(n) for q in range(n)]
        rows = []
        for k, e, q in coords:
            row = []
            for w in cols:
                c = w.coeffs[k]
                row.append(c.constant if e == 0 else c.coeffs.get((e, q), Fraction(0)))
            rows.append(row)
        if rank(rows) != n:
            return False
    return True


def iterated_relation(m: int, i: int, rep: CommutationRep) -> OmegaOneElement:
    return rep.right(OmegaOneElement.dx(rep.n, i), AlgebraElement.x1_power(rep.n, m))


def iterated_relation_expected(m: int) -> OmegaOneElement:
    xm, ym = AlgebraElement.basis(2, m, 0), AlgebraElement.basis(2, m, 1)
    k = Fraction(2) ** (m - 2)
    return OmegaOneElement([(xm.scale(3) - ym).scale(k), xm.scale(2 * k)])


def power(i: int, m: int) -> AlgebraElement:
    """x_i^m in A(k,2), i.e. x1^(m-1) x_i in normal form."""
    return AlgebraElement.basis(2, m, i)


def reference_diagonal_partial(i: int, m: int) -> AlgebraElement:
    other = 1 - i
    return power(i, m - 1).scale(3 * 2 ** (m - 1) - 1) - power(other, m - 1).scale(Fraction(2) ** (m - 2) - 1)


def corrected_diagonal_partial(i: int, m: int) -> AlgebraElement:
    """The diagonal formula with exponent m-2 in the first coefficient."""
    other = 1 - i
    return power(i, m - 1).scale(3 * Fraction(2) ** (m - 2) - 1) - power(other, m - 1).scale(Fraction(2) ** (m - 2) - 1)


def closed_cross_partial(i: int, m: int) -> AlgebraElement:
    other = 1 - i
    return power(other, m - 1).scale(2 ** (m - 1) - 1)


def diagonal_partial_report(rep: CommutationRep, m_max: int = 8) -> list:
    rows = []
    for m in range(2, m_max + 1):
        for i in range(2):
            computed = partials(power(i, m), rep)[i]
            rows.append({
                "m": m, "i": i + 1,
                "computed": str(computed),
                "reference": str(reference_diagonal_partial(i, m)),
                "matches_reference": computed == reference_diagonal_partial(i, m),
                "matches_exponent_m_minus_2": computed == corrected_diagonal_partial(i, m),
            })
    return rows


def right_annihilation_holds(rep: CommutationRep, max_degree: int) -> bool:
    """(dx - dy) . a = 0 for every basis element a of degree 2..max_degree."""
    w = OmegaOneElement.dx(2, 0) - OmegaOneElement.dx(2, 1)
    for d in range(2, max_degree + 1):
        for q in range(2):
            if not rep.right(w, AlgebraElement.basis(2, d, q)).is_zero():
                return False
    return True


def is_symmetric_family(p: FamilyParams) -> bool:
    """Bimodule relations invariant under swapping x and y."""
    rep = family_rep(p)

    def swap(a: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(2, a.constant, {(d, 1 - q): c for (d, q), c in a.coeffs.items()})

    for i, j in itertools.product(range(2), repeat=2):
        for k in range(2):
            if not (swap(rep.matrices[j][i][k]) - rep.matrices[1 - j][1 - i][1 - k]).is_zero():
                return False
    return True


def no_degree_lowering_derivation(n: int) -> bool:
    """D(x_i) = alpha_i constant and D compatible with the relations forces alpha = 0."""
    rows = []
    for rel in canonical_presentation(n).relations:
        # D(x_a x_b) = alpha_a x_b + alpha_b x_a, coordinates in A_1
        coords = [[Fraction(0)] * n for _ in range(n)]
        for w, c in rel.items():
            a, b = w
            coords[b][a] += c
            coords[a][b] += c
        rows.extend(coords)
    return len(nullspace(rows)) == 0


# --------------------------------------------------------- Omega_max degree 2

def omega_max_degree2(p_or_rep) -> list:
    """Wedge relations {(m, k): coeff} from d applied to each bimodule relation."""
    rep = p_or_rep if isinstance(p_or_rep, CommutationRep) else family_rep(p_or_rep)
    n = rep.n
    rels = []
    for i, j in itertools.product(range(n), repeat=2):
        rel: dict = {(i, j): 1}
        for k in range(n):
            entry = rep.matrices[j][i][k]
            if not _is_zero(entry.constant) or any(d != 1 for d, _ in entry.coeffs):
                raise CalculusError("wedge relations need degree-one entries")
            for (_, m), c in entry.coeffs.items():
                rel[(m, k)] = rel.get((m, k), 0) + c
        rel = {key: _simplify(c) for key, c in rel.items() if not _is_zero(c)}
        rels.append(rel)
    out = []
    for rel in rels:
        if not any(_same_up_to_scalar(rel, r) for r in out):
            out.append(rel)
    return out


def _same_up_to_scalar(a: dict, b: dict) -> bool:
    if set(a) != set(b):
        return False
    key = next(iter(a))
    ratio = sympy.nsimplify(a[key]) / sympy.nsimplify(b[key])
    return all(sympy.simplify(sympy.nsimplify(a[k]) - ratio * sympy.nsimplify(b[k])) == 0 for k in a)


def wedge_text(rel: dict) -> str:
    names = "xy"
    return " + ".join(f"({c})d{names[m]}^d{names[k]}" for (m, k), c in sorted(rel.items())) + " = 0"


def closed_omega_pair(p: FamilyParams) -> list:
    a, b, l, m = p.as_tuple()
    one = 1
    return [
        {(0, 1): l, (1, 0): one - a, (0, 0): a + 1, (1, 1): one - l},
        {(0, 1): b, (1, 0): one - m, (0, 0): m, (1, 1): 2 - b},
    ]


def wedge_relations_equivalent(r1: list, r2: list) -> bool:
    """Same row space over the field (works with symbolic coefficients)."""
    keys = sorted({k for r in r1 + r2 for k in r})
    M1 = sympy.Matrix([[sympy.nsimplify(r.get(k, 0)) for k in keys] for r in r1])
    M2 = sympy.Matrix([[sympy.nsimplify(r.get(k, 0)) for k in keys] for r in r2])
    both = M1.col_join(M2)
    r = M1.rank(simplify=True)
    return r == M2.rank(simplify=True) == both.rank(simplify=True)


def solve_example_wedges(rels: list) -> dict:
    """Express dx^dy and dy^dx through dx^dx and dy^dy."""
    a, b, c, d = sympy.symbols("xx xy yx yy")
    sym = {(0, 0): a, (0, 1): b, (1, 0): c, (1, 1): d}
    eqs = [sum(sympy.nsimplify(v) * sym[k] for k, v in r.items()) for r in rels]
    sol = sympy.solve(eqs, [b, c], dict=True)
    if not sol:
        return {}
    return {"dx^dy": str(sol[0][b]), "dy^dx": str(sol[0][c])}


# ------------------------------------------------------ monoid graded calculus

@dataclass
class MonoidCalculusData:
    n: int
    xi: list
    u: list
    theta: list
    mu: Fraction

    @classmethod
    def from_json(cls, data: dict) -> "MonoidCalculusData":
        F = lambda v: [Fraction(str(x)) for x in v]
        return cls(int(data["n"]), F(data["xi"]), [F(r) for r in data["u"]], F(data["theta"]),
                   Fraction(str(data["mu"])))


@dataclass
class MonoidCalculus:
    data: MonoidCalculusData
    e: list
    gamma: list
    v: list
    generic: bool
    relations: list = field(default_factory=list)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def monoid_graded_calculus(data: MonoidCalculusData) -> MonoidCalculus:
    n = data.n
    for i, ui in enumerate(data.u):
        if _dot(ui, data.xi) != 1 + data.mu:
            raise CalculusError(f"u_{i + 1} . xi differs from 1 + mu")
    if len({tuple(ui) for ui in data.u}) != n:
        raise CalculusError("the row vectors u_i must be distinct")
    tx = _dot(data.theta, data.xi)
    e = [[tx * a - b for a, b in zip(ui, data.theta)] for ui in data.u]
    if rank(e) != n:
        raise CalculusError("the vectors e_i are linearly dependent")
    # gamma row i: coordinates of e_k . rho_i in the e-basis, checked for every k
    E_T = [[e[j][c] for j in range(n)] for c in range(n)]
    gamma = []
    for i in range(n):
        row = None
        for k in range(n):
            target = [_dot(e[k], data.xi) * c for c in data.u[i]]
            sol = solve(E_T, target)
            if sol is None:
                raise CalculusError("e_k . rho_i outside the span of the e_j")
            if row is not None and sol != row:
                raise CalculusError("e_k . rho_i depends on k")
            row = sol
        gamma.append(row)
    v = [[sum((gamma[i][j] * e[j][c] for j in range(n) if j != i), Fraction(0)) for c in range(n)]
         for i in range(n)]
    generic = all(any(c != 0 for c in vi) for vi in v)
    return MonoidCalculus(data, e, gamma, v, generic)


class GradedForm:
    """Element of A (x) V written as sum_j a_j e_j."""

    def __init__(self, calc: MonoidCalculus, coeffs):
        self.calc = calc
        self.coeffs = tuple(coeffs)

    def right_gen(self, i: int) -> "GradedForm":
        n = self.calc.data.n
        x = AlgebraElement.gen(n, i)
        g = self.calc.gamma[i]
        total = sum((c for c in self.coeffs), AlgebraElement.zero(n)) * x
        # every e_k . x_i = x_i sum_j gamma_ij e_j, independent of k
        return GradedForm(self.calc, [total.scale(g[j]) for j in range(n)])

    def left(self, a: AlgebraElement) -> "GradedForm":
        return GradedForm(self.calc, [a * c for c in self.coeffs])

    def __add__(self, o):
        return GradedForm(self.calc, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __sub__(self, o):
        return GradedForm(self.calc, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def graded_dx(calc: MonoidCalculus, i: int) -> GradedForm:
    n = calc.data.n
    return GradedForm(calc, [AlgebraElement.gen(n, i) if j == i else AlgebraElement.zero(n) for j in range(n)])


def monoid_calculus_certificate(data: MonoidCalculusData) -> Certificate:
    calc = monoid_graded_calculus(data)
    n = data.n
    failures = []
    relations = []
    for k, i in itertools.product(range(n), repeat=2):
        lhs = graded_dx(calc, k).right_gen(i)
        xi = AlgebraElement.gen(n, i)
        xi2 = xi * xi
        rhs = graded_dx(calc, i).left(xi.scale(calc.gamma[i][i]))
        # x_i^2 v_i in the e-basis
        vcoords = [calc.gamma[i][j] if j != i else Fraction(0) for j in range(n)]
        rhs = rhs + GradedForm(calc, [xi2.scale(c) for c in vcoords])
        if not (lhs - rhs).is_zero():
            failures.append({"k": k + 1, "i": i + 1})
        grades = {tuple(sorted(c.coeffs)) for c in lhs.coeffs + rhs.coeffs if not c.is_zero()}
        grade_ok = grades <= {(((2, i),))}
        if not grade_ok:
            failures.append({"grade": [k + 1, i + 1]})
        relations.append({"k": k + 1, "i": i + 1, "gamma_ii": calc.gamma[i][i], "grade_ok": grade_ok})
    # z_ij from the left kills a d b for basis words a, b of low degree
    for i, j in itertools.combinations(range(n), 2):
        z = AlgebraElement.gen(n, i) - AlgebraElement.gen(n, j)
        for q, d in itertools.product(range(n), range(1, 4)):
            form = graded_dx(calc, q)
            for _ in range(d - 1):
                form = form.right_gen(0)
            for a_deg in range(0, 2):
                a = AlgebraElement.basis(n, a_deg, 0) if a_deg else AlgebraElement.one(n)
                if not form.left(a).left(z).is_zero():
                    failures.append({"annihilation": [i + 1, j + 1]})
    return Certificate(
        theorem="monoid-graded first order calculus",
        parameters={"n": n, "xi": data.xi, "u": data.u, "theta": data.theta, "mu": data.mu},
        status="pass" if not failures else "fail",
        witness={"e": calc.e, "gamma": calc.gamma, "v": calc.v, "generic": calc.generic,
                 "relations": relations},
        counterexample=failures or None,
        degree_bound=3,
    )


# ------------------------------------------------------------------- FRT

def t_alphabet(n: int) -> Alphabet:
    return Alphabet([f"t{i + 1}_{j + 1}" for i in range(n) for j in range(n)], ["t"] * (n * n))


def _t(n: int, i: int, j: int) -> int:
    return i * n + j


def r_matrix(f: Sequence[int]):
    """R[a][i][b][j] = f_{jb} delta_{ja} for a 0-based permutation f."""
    return lambda a, i, b, j: 1 if (j == a and f[j] == b) else 0


@dataclass(frozen=True)
class FrtBialgebra:
    n: int
    f: tuple
    alphabet: Alphabet
    relations: tuple

    def coproduct(self, i: int, j: int) -> list:
        """Delta(t^i_j) as a list of (left generator, right generator) pairs."""
        return [(_t(self.n, i, a), _t(self.n, a, j)) for a in range(self.n)]

    def counit(self, i: int, j: int) -> int:
        return 1 if i == j else 0


def frt_relations_from_rmatrix(f: Sequence[int]) -> list:
    """sum_ab R^i_a^k_b t^a_j t^b_l - sum_ab t^k_b t^i_a R^a_j^b_l, straight from R."""
    n = len(f)
    T = t_alphabet(n)
    R = r_matrix(f)
    out = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        terms: dict = {}
        for a, b in itertools.product(range(n), repeat=2):
            c = R(i, a, k, b)
            if c:
                w = (_t(n, a, j), _t(n, b, l))
                terms[w] = terms.get(w, 0) + c
            c = R(a, j, b, l)
            if c:
                w = (_t(n, k, b), _t(n, i, a))
                terms[w] = terms.get(w, 0) - c
        poly = NcPolynomial(T, terms)
        if not poly.is_zero():
            out.append(poly)
    return out


def frt_relations_transposed(f: Sequence[int]) -> list:
    """f_{ki}(sum_a t^a_j) t^k_l - sum_b t^k_b f_{lb} t^i_l, with the f index transposed."""
    n = len(f)
    T = t_alphabet(n)
    out = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        terms: dict = {}
        if f[k] == i:
            for a in range(n):
                w = (_t(n, a, j), _t(n, k, l))
                terms[w] = terms.get(w, 0) + 1
        w = (_t(n, k, f[l]), _t(n, i, l))
        terms[w] = terms.get(w, 0) - 1
        poly = NcPolynomial(T, terms)
        if not poly.is_zero():
            out.append(poly)
    return out


def _dedupe(polys) -> tuple:
    seen = {}
    for p in polys:
        p = p.monic()
        seen.setdefault(p, None)
    return tuple(sorted(seen, key=lambda p: (p.lm, p.to_text())))


def frt_bialgebra(n: int, f: Sequence[int] | None = None) -> FrtBialgebra:
    f = tuple(f) if f is not None else tuple(range(n))
    return FrtBialgebra(n, f, t_alphabet(n), _dedupe(frt_relations_from_rmatrix(f)))


def frt_identity_relations(n: int) -> list:
    """delta_ki (sum_a t^a_j) t^i_l - t^k_l t^i_l for f = id."""
    T = t_alphabet(n)
    out = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        terms: dict = {}
        if k == i:
            for a in range(n):
                w = (_t(n, a, j), _t(n, i, l))
                terms[w] = terms.get(w, 0) + 1
        w = (_t(n, k, l), _t(n, i, l))
        terms[w] = terms.get(w, 0) - 1
        poly = NcPolynomial(T, terms)
        if not poly.is_zero():
            out.append(poly)
    return out


def frt_n2_relations() -> list:
    """t^{i'}_l t^i_l = 0 and (t^i_l)^2 = (sum_a t^a_{l'}) t^i_l for n = 2."""
    T = t_alphabet(2)
    out = []
    for i, l in itertools.product(range(2), repeat=2):
        out.append(NcPolynomial(T, {(_t(2, 1 - i, l), _t(2, i, l)): 1}))
        terms = {(_t(2, i, l), _t(2, i, l)): 1}
        for a in range(2):
            w = (_t(2, a, 1 - l), _t(2, i, l))
            terms[w] = terms.get(w, 0) - 1
        out.append(NcPolynomial(T, terms))
    return out


def _combined_algebra(n: int, f: Sequence[int], t_relations, D: int):
    X = Alphabet.generators("x", n)
    T = t_alphabet(n)
    XT = X + T
    rels = [r.substitute(XT, {i: (i,) for i in range(n)})
            for r in orbit_relations(make_permutation_solution([v + 1 for v in f]), X).relations]
    rels += [r.substitute(XT, {g: (n + g,) for g in range(n * n)}) for r in t_relations]
    rels += [NcPolynomial.binomial(XT, (n + g, i), (i, n + g)) for g in range(n * n) for i in range(n)]
    return XT, buchberger(rels, D, alphabet=XT)


def coaction_failures(n: int, f: Sequence[int], t_relations, D: int) -> list:
    f = tuple(f)
    XT, G = _combined_algebra(n, f, t_relations, D)
    X = Alphabet.generators("x", n)
    bad = []
    for rel in orbit_relations(make_permutation_solution([v + 1 for v in f]), X).relations:
        terms: dict = {}
        for (i, j), c in rel.items():
            for a, b in itertools.product(range(n), repeat=2):
                w = (a, n + _t(n, a, i), b, n + _t(n, b, j))
                terms[w] = terms.get(w, 0) + c
        img = G.reduce(NcPolynomial(XT, terms))
        if not img.is_zero():
            bad.append({"relation": rel.to_text(), "image": img.to_text()})
    return bad


def verify_comodule_algebra(n: int, D: int, f: Sequence[int] | None = None) -> Certificate:
    f = tuple(f) if f is not None else tuple(range(n))
    B = frt_bialgebra(n, f)
    bad = coaction_failures(n, f, B.relations, D)
    # counit on the t-factors sends x_i to x_i
    counit_ok = all(sum(B.counit(a, i) for a in range(n) if a == i) == 1 for i in range(n))
    return Certificate(
        theorem="A(k,X,r_f) is a comodule algebra under the FRT bialgebra",
        parameters={"n": n, "f": [v + 1 for v in f], "D": D},
        status="pass" if not bad and counit_ok else "fail",
        witness={"frt_relation_count": len(B.relations), "counit_ok": counit_ok},
        counterexample=bad or None,
        degree_bound=D,
    )


def covariance_failures(rep: CommutationRep) -> list:
    """Components (i, j, k, l) of the covariance condition that fail in B(k,n)."""
    n = rep.n
    B = frt_bialgebra(n)
    G = buchberger(list(B.relations), 2, alphabet=B.alphabet)

    def coeff(j, m, i, k):
        # rho^j_{mik}: coefficient of x_m in the (i,k) entry of rho(x_j)
        entry = rep.matrices[j][i][k]
        return entry.coeffs.get((1, m), 0)

    bad = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        terms: dict = {}
        for a, b in itertools.product(range(n), repeat=2):
            c = coeff(b, k, a, i)
            if not _is_zero(c):
                w = (_t(n, a, j), _t(n, b, l))
                terms[w] = terms.get(w, 0) + c
            c = coeff(l, b, j, a)
            if not _is_zero(c):
                w = (_t(n, k, b), _t(n, i, a))
                terms[w] = terms.get(w, 0) - c
        diff = G.reduce(NcPolynomial(B.alphabet, terms))
        if not diff.is_zero():
            bad.append((i + 1, j + 1, k + 1, l + 1))
    return bad


def covariance_condition_check(p_or_rep) -> bool:
    rep = p_or_rep if isinstance(p_or_rep, CommutationRep) else family_rep(p_or_rep)
    return not covariance_failures(rep)


def random_params(rng: random.Random) -> FamilyParams:
    return FamilyParams(*(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(4)))


# --------------------------------------------------------------- fermionic

def theta_alphabet(n: int) -> Alphabet:
    return Alphabet([f"th{i + 1}" for i in range(n)], ["th"] * n)


@dataclass(frozen=True)
class FermionicAlgebra:
    n: int
    f: tuple
    alphabet: Alphabet
    relations: tuple

    def psi(self, i: int, j: int) -> dict:
        """Psi(th_i (x) th_j) = -sum_ab th_b (x) th_a R^a_i^b_j."""
        R = r_matrix(self.f)
        out: dict = {}
        for a, b in itertools.product(range(self.n), repeat=2):
            c = R(a, i, b, j)
            if c:
                out[(b, a)] = out.get((b, a), 0) - c
        return {k: v for k, v in out.items() if v}


def fermionic_algebra(n: int, f: Sequence[int] | None = None) -> FermionicAlgebra:
    f = tuple(f) if f is not None else tuple(range(n))
    L = theta_alphabet(n)
    R = r_matrix(f)
    rels = []
    for i, j in itertools.product(range(n), repeat=2):
        terms: dict = {}
        for a, b in itertools.product(range(n), repeat=2):
            c = R(a, i, b, j)
            if c:
                terms[(b, a)] = terms.get((b, a), 0) + c
        poly = NcPolynomial(L, terms)
        if not poly.is_zero():
            rels.append(poly)
    return FermionicAlgebra(n, f, L, _dedupe(rels))


def minus_psi_idempotent(A: FermionicAlgebra) -> bool:
    n = A.n
    idx = {p: k for k, p in enumerate(itertools.product(range(n), repeat=2))}
    M = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for (i, j), col in idx.items():
        for (b, a), c in A.psi(i, j).items():
            M[idx[(b, a)]][col] = -Fraction(c)
    S = [[sum(M[r][t] * M[t][c] for t in range(n * n)) for c in range(n * n)] for r in range(n * n)]
    return S == M


def braided_coproduct_failures(A: FermionicAlgebra) -> list:
    """sum_ab Delta(th_b th_a) R^a_i^b_j reduced in each tensor factor."""
    n = A.n
    G = buchberger(list(A.relations), 2, alphabet=A.alphabet) if A.relations else None
    R = r_matrix(A.f)

    def nf(w):
        if G is None or len(w) < 2:
            return {w: 1}
        return G.reduce_word(w)

    bad = []
    for i, j in itertools.product(range(n), repeat=2):
        total: dict = {}

        def add(left, right, c):
            for u, cu in nf(left).items():
                for v, cv in nf(right).items():
                    key = (u, v)
                    total[key] = total.get(key, 0) + c * cu * cv

        for a, b in itertools.product(range(n), repeat=2):
            c = R(a, i, b, j)
            if not c:
                continue
            add((b, a), (), c)
            add((), (b, a), c)
            add((b,), (a,), c)
            for (p, q), cp in A.psi(b, a).items():
                add((p,), (q,), c * cp)
        nonzero = {k: v for k, v in total.items() if v != 0}
        if nonzero:
            bad.append({"i": i + 1, "j": j + 1, "remainder": str(nonzero)})
    return bad


def fermionic_consistency(n: int, f: Sequence[int] | None = None) -> Certificate:
    A = fermionic_algebra(n, f)
    idem = minus_psi_idempotent(A)
    bad = braided_coproduct_failures(A)
    return Certificate(
        theorem="fermionic algebra: -Psi idempotent and braided coproduct consistent",
        parameters={"n": n, "f": [v + 1 for v in A.f]},
        status="pass" if idem and not bad else "fail",
        witness={"relations": [r.to_text() for r in A.relations], "minus_psi_idempotent": idem},
        counterexample=bad or None,
        degree_bound=2,
    )
