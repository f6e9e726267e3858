"""The acceptance matrix: one certificate-producing check per criterion."""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb

from . import diffcalc as dc
from .braided_monoid import (NormalizedBraiding, closed_form_agreement, d_veronese_solution,
                             permutation_veronese_matches, rho_power_check, rho_square_witness,
                             veronese_permutation)
from .element import AlgebraElement
from .growth_graphs import (dim_a2_bounds_check, global_dimension, gk_dimension, graph_of_normal_words,
                            graph_of_obstructions)
from .linalg import rank
from .ncpoly import is_groebner, normal_words
from .quadratic_set import (enumerate_idempotent_lnd_solutions, make_permutation_solution,
                            permutation_classes)
from .reports import Certificate
from .veronese_segre import verify_segre_map, verify_segre_product, verify_veronese_embedding
from .yb_algebra import (annihilates_positive_part, annihilator_basis, annihilator_membership,
                         cancellativity_report, canonical_presentation, center_dimension,
                         free_module_check, orbit_relations, random_element, right_cancellation_witness)


def _cert(theorem: str, params: dict, failures: list, witness=None, D=None) -> Certificate:
    return Certificate(theorem, params, "fail" if failures else "pass", witness,
                       failures or None, D)


def _perms(n: int):
    return [list(p) for p in itertools.permutations(range(1, n + 1))]


def canonical_groebner(seed: int = 0) -> Certificate:
    failures = []
    start = time.perf_counter()
    checked = 0
    for n in range(2, 6):
        target = set(canonical_presentation(n).relations)
        for f in _perms(n):
            G = orbit_relations(make_permutation_solution(f)).groebner(4)
            checked += 1
            if len(G.rules) != n * (n - 1) or set(G.rules) != target:
                failures.append({"n": n, "f": f, "rules": G.texts()})
        if not is_groebner(list(target)):
            failures.append({"n": n, "is_groebner": False})
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        failures.append({"runtime_s": round(elapsed, 2)})
    return _cert("canonical Groebner basis of A(k,X,r_f)", {"n": [2, 5]}, failures,
                 {"permutations_checked": checked}, 4)


def hilbert_series(seed: int = 0) -> Certificate:
    failures = []
    rows = {}
    for n in range(2, 7):
        G = canonical_presentation(n).groebner(10)
        by_words = [len(normal_words(G, d)) for d in range(1, 11)]
        gN = graph_of_normal_words(G)
        by_paths = [gN.count_paths(d - 1) for d in range(1, 11)]
        rows[n] = by_words
        if by_words != [n] * 10 or by_paths != by_words:
            failures.append({"n": n, "words": by_words, "paths": by_paths})
    return _cert("Hilbert series n/(1-t) - (n-1)", {"d": [1, 10]}, failures, rows, 10)


def growth_and_global_dimension(seed: int = 0) -> Certificate:
    failures = []
    out = {}
    for n in range(2, 7):
        G = canonical_presentation(n).groebner(8)
        gN, gW = graph_of_normal_words(G), graph_of_obstructions(G)
        gk, gl = gk_dimension(gN), global_dimension(gW)
        out[n] = {"gk": str(gk), "gldim": str(gl)}
        if not (gk.kind == "polynomial" and gk.degree == 1 and gk.validates(gN)):
            failures.append({"n": n, "gk": str(gk)})
        if not (gl.kind == "infinite" and gl.validates(gW)):
            failures.append({"n": n, "gldim": str(gl)})
        if not free_module_check(n, 8, G):
            failures.append({"n": n, "free_module": False})
    return _cert("GK dimension 1, infinite global dimension, free over k[x1]", {"n": [2, 6]},
                 failures, out, 8)


def dim_a2_bounds(seed: int = 0) -> Certificate:
    failures = []
    witness = {}
    for n in (2, 3):
        sols = enumerate_idempotent_lnd_solutions(n)
        at_lower = []
        for s in sols:
            rep = dim_a2_bounds_check(s)
            if not rep.within:
                failures.append({"n": n, "table": s.encoding(), "dim_a2": rep.dim_a2})
            if s.perm is not None and rep.dim_a2 != n:
                failures.append({"n": n, "permutation": [v + 1 for v in s.perm], "dim_a2": rep.dim_a2})
            if rep.dim_a2 == n:
                at_lower.append(s.perm is not None)
        witness[n] = {
            "solutions": len(sols),
            "permutation_type": sum(s.perm is not None for s in sols),
            "attaining_lower_bound": len(at_lower),
            "attaining_lower_bound_non_permutation": at_lower.count(False),
            "upper": comb(n, 2) + 1,
        }
    return _cert("n <= dim A_2 <= C(n,2)+1", {"n": [2, 3]}, failures, witness, 3)


def isomorphism_classes(seed: int = 0) -> Certificate:
    counts = [len(permutation_classes(n)) for n in (2, 3, 4)]
    failures = [] if counts == [2, 3, 5] else [{"counts": counts}]
    return _cert("permutation solutions up to isomorphism", {"n": [2, 3, 4]}, failures,
                 {"counts": counts, "expected": [2, 3, 5]})


def monoid_structure(seed: int = 0) -> Certificate:
    failures = []
    for n in (2, 3):
        for f in _perms(n):
            left_ok, cex = cancellativity_report(make_permutation_solution(f), 5)
            if not left_ok:
                failures.append({"f": f, "left_cancellative": False})
            if n >= 2 and cex is None:
                failures.append({"f": f, "right_counterexample": None})
    for n in range(2, 5):
        for d in range(1, 4):
            for q in range(n):
                a, b, x = right_cancellation_witness(n, d, q)
                ea, eb, ex = (AlgebraElement.from_word(n, w) for w in (a, b, x))
                if ea == eb or ea * ex != eb * ex:
                    failures.append({"n": n, "d": d, "q": q})
        if center_dimension(n, 5) != 0:
            failures.append({"n": n, "center": "nontrivial"})
    return _cert("left cancellative, not right cancellative, trivial centre", {"degree": 5},
                 failures, {"right_witness_n2_d2": right_cancellation_witness(2, 2, 0)}, 5)


def annihilator(seed: int = 0) -> Certificate:
    rng = random.Random(seed)
    failures = []
    members = 0
    for k in range(500):
        n = rng.randint(2, 4)
        a = random_element(n, 3, rng, in_annihilator=k % 2 == 0, constant=k % 5 == 1)
        member = annihilator_membership(a)
        members += member
        if member != annihilates_positive_part(a, 6):
            failures.append({"element": str(a)})
    n, top = 3, 8
    basis = annihilator_basis(n, top)
    rows = [[e.coeffs.get((d, q), Fraction(0)) for d in range(1, top + 1) for q in range(n)] for e in basis]
    if rank(rows) != len(basis):
        failures.append({"basis_independent": False})
    for e in basis:
        if not annihilates_positive_part(e, top + 2):
            failures.append({"basis_element": str(e)})
    for e1, e2 in itertools.product(basis, repeat=2):
        if not (e1 * e2).is_zero():
            failures.append({"product": [str(e1), str(e2)]})
            break
    return _cert("annihilator of A^+ and Ann.Ann = 0", {"samples": 500, "seed": seed}, failures,
                 {"members_sampled": members, "basis_size": len(basis)}, 8)


def braided_monoid(seed: int = 0) -> Certificate:
    failures = []
    witnesses = {}
    for n in range(1, 5):
        for f in _perms(n):
            br = NormalizedBraiding(make_permutation_solution(f), 5)
            cube, square = rho_power_check(br, 5)
            if not cube:
                failures.append({"f": f, "rho_cube": False})
            bad = closed_form_agreement(br, 5)
            if bad:
                failures.append({"f": f, "closed_form_mismatch": bad[:3]})
            if n >= 2:
                w = rho_square_witness(br, 5)
                if w is None or square:
                    failures.append({"f": f, "rho_square_witness": None})
                elif n not in witnesses:
                    witnesses[n] = {"a": br.G.alphabet.word_text(w[0]), "b": br.G.alphabet.word_text(w[1])}
    return _cert("rho^3 = rho on normal words, rho^2 != rho", {"n": [1, 4], "max_length": 5},
                 failures, witnesses, 5)


def veronese(seed: int = 0) -> Certificate:
    failures = []
    for n in range(1, 5):
        for d in range(1, 4):
            cert = verify_veronese_embedding(n, d, 4)
            if not cert.passed:
                failures.append({"n": n, "d": d, "embedding": cert.counterexample})
            for f in itertools.permutations(range(n)):
                if not permutation_veronese_matches(f, d):
                    failures.append({"n": n, "d": d, "f": [v + 1 for v in f]})
    sample = d_veronese_solution(make_permutation_solution([2, 3, 1]), 2)
    return _cert("Veronese presentation, Veronese map and (N_d, rho_d) = r_{f^d}", {"n": [1, 4], "d": [1, 3]},
                 failures, {"f=[2,3,1],d=2": [v + 1 for v in sample.perm],
                            "expected": [v + 1 for v in veronese_permutation((1, 2, 0), 2)]}, 4)


def segre(seed: int = 0) -> Certificate:
    failures = []
    dims = {}
    for m, n in ((2, 2), (2, 3)):
        prod = verify_segre_product(m, n, 4)
        smap = verify_segre_map(m, n, 4)
        dims[f"{m}x{n}"] = prod.witness["dimensions"]
        if not prod.passed:
            failures.append({"m": m, "n": n, "product": prod.counterexample})
        if not smap.passed:
            failures.append({"m": m, "n": n, "map": smap.counterexample})
        if prod.witness["relation_count"] != m * n * (m * n - 1):
            failures.append({"m": m, "n": n, "relation_count": prod.witness["relation_count"]})
    return _cert("Segre product presentation and Segre map", {"pairs": [[2, 2], [2, 3]]}, failures, dims, 4)


def calculus_family(seed: int = 0) -> Certificate:
    rng = random.Random(seed)
    failures = []
    sym = dc.FamilyParams.symbolic()
    if not dc.verify_family_equations(sym) or not dc.check_commutation_rep(dc.family_rep(sym)):
        failures.append({"symbolic_family": False})
    for _ in range(50):
        p = dc.random_params(rng)
        if not dc.verify_family_equations(p):
            failures.append({"params": p.as_tuple()})
    if not dc.wedge_relations_equivalent(dc.omega_max_degree2(sym), dc.closed_omega_pair(sym)):
        failures.append({"omega2_general": False})

    p = dc.FamilyParams(1, 0, 1, 0)
    rep = dc.family_rep(p)
    if dc.well_definedness_failures(rep):
        failures.append({"well_defined": False})
    if not dc.connectedness_check(rep, 10):
        failures.append({"connected": False})
    for m in range(2, 9):
        for i in range(2):
            if dc.iterated_relation(m, i, rep) != dc.iterated_relation_expected(m):
                failures.append({"iterated": [m, i + 1]})
    wedges = dc.solve_example_wedges(dc.omega_max_degree2(p))
    if wedges != {"dx^dy": "-2*xx", "dy^dx": "-2*yy"}:
        failures.append({"omega2": wedges})
    for m in range(2, 9):
        for i in range(2):
            if dc.partials(dc.power(1 - i, m), rep)[i] != dc.closed_cross_partial(i, m):
                failures.append({"cross_partial": [m, i + 1]})
    x, y = AlgebraElement.gen(2, 0), AlgebraElement.gen(2, 1)
    oracle_ok = (dc.partials(x * x, rep)[0] == x.scale(2)
                 and dc.partials(y * y * y, rep)[1] == (y * y).scale(5) - x * x)
    if not oracle_ok:
        failures.append({"oracle_partials": False})
    report = dc.diagonal_partial_report(rep, 8)
    reference_mismatch = [r["m"] for r in report if not r["matches_reference"]]
    if not reference_mismatch:
        failures.append({"diagonal_discrepancy_detected": False})
    if not all(r["matches_exponent_m_minus_2"] for r in report):
        failures.append({"diagonal_oracle": False})
    for _ in range(200):
        a = random_element(2, 2, rng, constant=True)
        b = random_element(2, 2, rng, constant=True)
        if not dc.twisted_leibniz_holds(a, b, rep):
            failures.append({"leibniz": [str(a), str(b)]})
            break
    return _cert("four-parameter calculus family on A(k,2)", {"example": [1, 0, 1, 0], "seed": seed}, failures,
                 {"omega2": wedges,
                  "diagonal_partial": {"reference_formula_mismatch_at_m": sorted(set(reference_mismatch)),
                                       "d_x(x^2)": str(dc.partials(x * x, rep)[0]),
                                       "d_y(y^3)": str(dc.partials(y * y * y, rep)[1])}}, 10)


def frt_covariance_fermionic(seed: int = 0) -> Certificate:
    rng = random.Random(seed)
    failures = []
    for n in (2, 3):
        cert = dc.verify_comodule_algebra(n, 4)
        if not cert.passed:
            failures.append({"comodule": n, "detail": cert.counterexample})
    if dc.covariance_condition_check(dc.FamilyParams(1, 0, 1, 0)):
        failures.append({"covariant": [1, 0, 1, 0]})
    for _ in range(20):
        p = dc.random_params(rng)
        if dc.covariance_condition_check(p):
            failures.append({"covariant": [str(v) for v in p.as_tuple()]})
    fermionic = 0
    for n in range(1, 5):
        for f in itertools.permutations(range(n)):
            fermionic += 1
            cert = dc.fermionic_consistency(n, f)
            if not cert.passed:
                failures.append({"fermionic": [v + 1 for v in f], "detail": cert.counterexample})
    return _cert("FRT coaction, covariance, fermionic algebra", {"seed": seed}, failures,
                 {"fermionic_cases": fermionic}, 4)


CRITERIA = (
    ("1-canonical-groebner", canonical_groebner),
    ("2-hilbert-series", hilbert_series),
    ("3-growth-global-dimension", growth_and_global_dimension),
    ("4-dim-a2-bounds", dim_a2_bounds),
    ("5-isomorphism-classes", isomorphism_classes),
    ("6-monoid-structure", monoid_structure),
    ("7-annihilator", annihilator),
    ("8-braided-monoid", braided_monoid),
    ("9-veronese", veronese),
    ("10-segre", segre),
    ("11-calculus-family", calculus_family),
    ("12-frt-covariance-fermionic", frt_covariance_fermionic),
)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("YBX_THREADS", "4")))
    except ValueError:
        return 1


def run_all(seed: int = 0, names=None) -> dict:
    """Run the selected criteria concurrently; results keyed in criterion order."""
    chosen = [(k, fn) for k, fn in CRITERIA if names is None or k in names]
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        futures = [(k, pool.submit(fn, seed)) for k, fn in chosen]
        return {k: fut.result() for k, fut in futures}
