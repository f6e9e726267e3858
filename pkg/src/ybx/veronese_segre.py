"""Veronese subalgebras and Segre products of the algebras A(k,n)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import rank
from .ncpoly import Alphabet, GroebnerBasis, NcPolynomial, buchberger, is_groebner, normal_words
from .quadratic_set import SolutionTable, make_permutation_solution
from .reports import Certificate
from .yb_algebra import canonical_presentation


@dataclass(frozen=True)
class VeroneseData:
    n: int
    d: int
    alphabet: Alphabet
    relations: tuple
    section: tuple  # section[i] = x-word of w_{i+1}


def veronese_presentation(n: int, d: int) -> VeroneseData:
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    w = Alphabet.generators("w", n) if d > 1 else Alphabet.generators("x", n)
    rels = canonical_presentation(n, w).relations
    section = tuple((0,) * (d - 1) + (q,) for q in range(n))
    return VeroneseData(n, d, w, rels, section)


def verify_veronese_embedding(n: int, d: int, D: int) -> Certificate:
    data = veronese_presentation(n, d)
    x = Alphabet.generators("x", n)
    GA = canonical_presentation(n, x).groebner(max(2 * d, D * d, 2))
    GW = buchberger(list(data.relations), max(D, 2), alphabet=data.alphabet)
    images = {i: data.section[i] for i in range(n)}
    failures = []
    for rel in data.relations:
        img = GA.reduce(rel.substitute(x, images))
        if not img.is_zero():
            failures.append({"relation": rel.to_text(), "image": img.to_text()})
    dims = []
    for s in range(1, D + 1):
        w_words = normal_words(GW, s)
        a_words = normal_words(GA, s * d)
        image_basis = set()
        for u in w_words:
            red = GA.reduce_word(tuple(y for i in u for y in images[i]))
            image_basis.update(red)
        dims.append([s, len(w_words), len(a_words)])
        if len(w_words) != len(a_words):
            failures.append({"degree": s, "w_dim": len(w_words), "A_dim": len(a_words)})
        if image_basis != set(a_words):
            failures.append({"degree": s, "image_basis_mismatch": True})
    witness = {
        "relations": [r.to_text() for r in data.relations],
        "section": [x.word_text(w) for w in data.section],
        "dimensions": dims,
        "is_groebner": is_groebner(list(data.relations)) if n > 1 else True,
    }
    if not witness["is_groebner"]:
        failures.append({"is_groebner": False})
    return Certificate(
        theorem="Veronese subalgebra presentation and injective Veronese map",
        parameters={"n": n, "d": d, "D": D},
        status="pass" if not failures else "fail",
        witness=witness,
        counterexample=failures or None,
        degree_bound=D,
    )


def pair_index(i: int, a: int, n: int) -> int:
    """Position of (x_i, y_a) in the lexicographic enumeration, 0-based."""
    return i * n + a


def cartesian_product_solution(sX: SolutionTable, sY: SolutionTable) -> SolutionTable:
    m, n = sX.n, sY.n
    table = [[None] * (m * n) for _ in range(m * n)]
    for (j, b), (i, a) in itertools.product(itertools.product(range(m), range(n)), repeat=2):
        lx, rx = sX(j, i)
        ly, ry = sY(b, a)
        table[pair_index(j, b, n)][pair_index(i, a, n)] = (pair_index(lx, ly, n), pair_index(rx, ry, n))
    out = SolutionTable(m * n, table)
    if sX.perm is not None and sY.perm is not None:
        out.perm = tuple(pair_index(sX.perm[i], sY.perm[a], n) for i in range(m) for a in range(n))
    return out


@dataclass(frozen=True)
class SegreData:
    m: int
    n: int
    alphabet: Alphabet
    relations: tuple  # F_{jb,ia} = w_jb w_ia - w_11 w_ia
    alternate: tuple  # f_{jb,ia} = w_jb w_ia - Psi(w_ia) w_ia
    psi: tuple  # 0-based permutation of W, also called Phi for the product solution
    f: tuple = field(default=())
    phi: tuple = field(default=())


def segre_alphabet(m: int, n: int, prefix: str = "w") -> Alphabet:
    names = [f"{prefix}{i + 1}{a + 1}" if max(m, n) < 10 else f"{prefix}{i + 1}_{a + 1}"
             for i in range(m) for a in range(n)]
    return Alphabet(names, [prefix] * (m * n))


def segre_presentation(m: int, n: int, f: Sequence[int] | None = None,
                       phi: Sequence[int] | None = None) -> SegreData:
    f = tuple(f) if f is not None else tuple(range(m))
    phi = tuple(phi) if phi is not None else tuple(range(n))
    W = segre_alphabet(m, n)
    k = m * n
    psi = tuple(pair_index(f[i], phi[a], n) for i in range(m) for a in range(n))
    rels = [NcPolynomial.binomial(W, (jb, ia), (0, ia)) for jb in range(1, k) for ia in range(k)]
    alt = [NcPolynomial.binomial(W, (jb, ia), (psi[ia], ia))
           for jb in range(k) for ia in range(k) if jb != psi[ia]]
    return SegreData(m, n, W, tuple(rels), tuple(alt), psi, f, phi)


def _tensor_basis(m: int, n: int, D: int, f=None, phi=None, prefix: str = "y"):
    """Combined algebra A(k,m) (x) A(k,n) on x- and y-letters with y x = x y."""
    x = Alphabet.generators("x", m)
    y = Alphabet.generators(prefix, n)
    xy = x + y
    rels = [r.substitute(xy, {i: (i,) for i in range(m)}) for r in canonical_presentation(m, x).relations]
    rels += [r.substitute(xy, {a: (m + a,) for a in range(n)}) for r in canonical_presentation(n, y).relations]
    rels += [NcPolynomial.binomial(xy, (m + a, i), (i, m + a)) for i in range(m) for a in range(n)]
    return xy, buchberger(rels, D, alphabet=xy)


def _segre_image(w: Sequence[int], m: int, n: int) -> tuple:
    out = []
    for g in w:
        i, a = divmod(g, n)
        out.extend((i, m + a))
    return tuple(out)


def _image_dimension(G: GroebnerBasis, words, m: int, n: int) -> int:
    vecs = []
    cols: dict = {}
    for w in words:
        red = G.reduce_word(_segre_image(w, m, n))
        vecs.append(red)
        for u in red:
            cols.setdefault(u, len(cols))
    if not vecs:
        return 0
    rows = []
    for red in vecs:
        row = [Fraction(0)] * len(cols)
        for u, c in red.items():
            row[cols[u]] = c
        rows.append(row)
    return rank(rows)


def verify_segre_product(m: int, n: int, D: int, f=None, phi=None) -> Certificate:
    data = segre_presentation(m, n, f, phi)
    k = m * n
    xy, GT = _tensor_basis(m, n, 2 * max(D, 2))
    GA = canonical_presentation(m).groebner(max(D, 2))
    GB = canonical_presentation(n).groebner(max(D, 2))
    GW = buchberger(list(data.relations), max(D, 2), alphabet=data.alphabet)
    failures = []
    for rel in data.relations + data.alternate:
        img = NcPolynomial(xy, {_segre_image(w, m, n): c for w, c in rel.items()})
        if not GT.reduce(img).is_zero():
            failures.append({"relation": rel.to_text()})
    rows = []
    for s in range(1, D + 1):
        hA, hB = len(normal_words(GA, s)), len(normal_words(GB, s))
        hW = len(normal_words(GW, s))
        hAB = _image_dimension(GT, itertools.product(range(k), repeat=s), m, n)
        rows.append({"s": s, "h_A": hA, "h_B": hB, "h_W": hW, "h_AoB": hAB})
        if not (hA * hB == hAB == hW == k):
            failures.append({"degree": s, "dims": rows[-1]})
    groebner_ok = is_groebner(list(data.relations)) if k > 1 else True
    mutual = all(GW.reduce(r).is_zero() for r in data.alternate)
    GAlt = buchberger(list(data.alternate), max(D, 2), alphabet=data.alphabet) if data.alternate else None
    mutual_back = all(GAlt.reduce(r).is_zero() for r in data.relations) if GAlt else not data.relations
    if not groebner_ok:
        failures.append({"is_groebner": False})
    if not (mutual and mutual_back):
        failures.append({"mutual_reduction": False})
    if len(data.relations) != k * (k - 1):
        failures.append({"relation_count": len(data.relations)})
    return Certificate(
        theorem="Segre product presentation and Hilbert multiplicativity",
        parameters={"m": m, "n": n, "D": D, "f": [v + 1 for v in data.f], "phi": [v + 1 for v in data.phi]},
        status="pass" if not failures else "fail",
        witness={"relation_count": len(data.relations), "is_groebner": groebner_ok,
                 "mutual_reduction": mutual and mutual_back, "dimensions": rows,
                 "Psi": [v + 1 for v in data.psi]},
        counterexample=failures or None,
        degree_bound=D,
    )


def verify_segre_map(m: int, n: int, D: int) -> Certificate:
    """The map z_ia -> x_i (x) y_a from A_Z (canonical on mn letters) onto A o B."""
    k = m * n
    Z = segre_alphabet(m, n, "z")
    gammas = canonical_presentation(k, Z).relations
    GZ = buchberger(list(gammas), max(D, 2), alphabet=Z)
    xy, GT = _tensor_basis(m, n, 2 * max(D, 2))
    failures = []
    for g in gammas:
        img = NcPolynomial(xy, {_segre_image(w, m, n): c for w, c in g.items()})
        if not GT.reduce(img).is_zero():
            failures.append({"relation": g.to_text()})
    rows = []
    for s in range(1, D + 1):
        nz = normal_words(GZ, s)
        img_dim = _image_dimension(GT, nz, m, n)
        full_dim = _image_dimension(GT, itertools.product(range(k), repeat=s), m, n)
        rows.append({"s": s, "A_Z": len(nz), "image_of_normal_words": img_dim, "AoB": full_dim})
        if not (len(nz) == img_dim == full_dim == k):
            failures.append({"degree": s, "dims": rows[-1]})
    return Certificate(
        theorem="Segre map is an isomorphism of graded algebras",
        parameters={"m": m, "n": n, "D": D},
        status="pass" if not failures else "fail",
        witness={"gamma_count": len(gammas), "dimensions": rows},
        counterexample=failures or None,
        degree_bound=D,
    )


def segre_matches_canonical(m: int, n: int) -> bool:
    """Segre relations are the canonical relations on mn letters after w_ia -> x_{(i-1)n+a}."""
    data = segre_presentation(m, n)
    x = Alphabet.generators("x", m * n)
    relabelled = {r.substitute(x, {g: (g,) for g in range(m * n)}) for r in data.relations}
    return relabelled == set(canonical_presentation(m * n, x).relations)


def veronese_matches_canonical(n: int, d: int) -> bool:
    data = veronese_presentation(n, d)
    x = Alphabet.generators("x", n)
    relabelled = {r.substitute(x, {g: (g,) for g in range(n)}) for r in data.relations}
    return relabelled == set(canonical_presentation(n, x).relations)


def product_is_permutation_solution(f: Sequence[int], phi: Sequence[int]) -> bool:
    """cartesian product of r_f and r_phi equals r_{f x phi} (1-based inputs)."""
    sX, sY = make_permutation_solution(f), make_permutation_solution(phi)
    prod = cartesian_product_solution(sX, sY)
    expected = make_permutation_solution([v + 1 for v in prod.perm])
    return prod == expected
