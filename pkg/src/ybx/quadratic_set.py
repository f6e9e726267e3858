"""Finite quadratic sets (X, r) with X = {0, ..., n-1} internally.

All input and output uses 1-based labels; tables are 0-based inside.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class SolutionError(ValueError):
    pass


@dataclass(frozen=True)
class PermutationSolutionSpec:
    n: int
    f: tuple  # one-line notation, 1-based

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if sorted(self.f) != list(range(1, self.n + 1)):
            raise SolutionError(f"not a permutation of 1..{self.n}: {list(self.f)}")


class SolutionTable:
    """r(x, y) = (L[x][y], R[y][x]) stored as a full n x n table."""

    __slots__ = ("n", "table", "L", "R", "perm")

    def __init__(self, n: int, table: Sequence[Sequence[Sequence[int]]], perm: tuple | None = None):
        self.n = n
        rows = tuple(tuple((int(p[0]), int(p[1])) for p in row) for row in table)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise SolutionError("table must be n x n")
        for row in rows:
            for a, b in row:
                if not (0 <= a < n and 0 <= b < n):
                    raise SolutionError("table entry outside X")
        self.table = rows
        self.L = tuple(tuple(rows[x][y][0] for y in range(n)) for x in range(n))
        self.R = tuple(tuple(rows[x][y][1] for x in range(n)) for y in range(n))
        # 0-based f when built from a permutation, else None
        self.perm = perm

    def __call__(self, x: int, y: int) -> tuple:
        return self.table[x][y]

    def left(self, x: int, y: int) -> int:
        return self.table[x][y][0]

    def right(self, x: int, y: int) -> int:
        return self.table[x][y][1]

    def __eq__(self, other) -> bool:
        return isinstance(other, SolutionTable) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        if self.perm is not None:
            return f"SolutionTable(n={self.n}, f={[p + 1 for p in self.perm]})"
        return f"SolutionTable(n={self.n}, table={self.to_json()['r']})"

    def encoding(self) -> tuple:
        return tuple(v for row in self.table for p in row for v in p)

    def to_json(self) -> dict:
        if self.perm is not None:
            return {"n": self.n, "kind": "permutation", "f": [p + 1 for p in self.perm]}
        return {"n": self.n, "kind": "table",
                "r": [[[a + 1, b + 1] for a, b in row] for row in self.table]}


def make_permutation_solution(spec: PermutationSolutionSpec | Sequence[int]) -> SolutionTable:
    if not isinstance(spec, PermutationSolutionSpec):
        spec = PermutationSolutionSpec(len(spec), tuple(spec))
    f = tuple(v - 1 for v in spec.f)
    n = spec.n
    return SolutionTable(n, [[(f[y], y) for y in range(n)] for _ in range(n)], perm=f)


def flip_solution(n: int) -> SolutionTable:
    return SolutionTable(n, [[(y, x) for y in range(n)] for x in range(n)])


def identity_map(n: int) -> SolutionTable:
    return SolutionTable(n, [[(x, y) for y in range(n)] for x in range(n)])


def solution_from_json(data) -> SolutionTable:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "kind" not in data:
        raise SolutionError("solution JSON needs 'n' and 'kind'")
    n = int(data["n"])
    if data["kind"] == "permutation":
        return make_permutation_solution(PermutationSolutionSpec(n, tuple(data["f"])))
    if data["kind"] == "table":
        r = data["r"]
        return SolutionTable(n, [[(p[0] - 1, p[1] - 1) for p in row] for row in r])
    raise SolutionError(f"unknown solution kind {data['kind']!r}")


def _braid_conditions(s: SolutionTable) -> tuple | None:
    """First triple violating l1, r1 or lr3; None when all hold."""
    L, n = s.left, s.n
    R = s.right
    for x, y, z in itertools.product(range(n), repeat=3):
        xy_l, xy_r = L(x, y), R(x, y)
        if L(x, L(y, z)) != L(xy_l, L(xy_r, z)):
            return ("l1", (x, y, z))
        yz_l, yz_r = L(y, z), R(y, z)
        if R(R(x, y), z) != R(R(x, yz_l), yz_r):
            return ("r1", (x, y, z))
        if R(xy_l, L(xy_r, z)) != L(R(x, yz_l), yz_r):
            return ("lr3", (x, y, z))
    return None


def _braid_direct(s: SolutionTable) -> tuple | None:
    n = s.n

    def r12(t):
        a, b = s(t[0], t[1])
        return (a, b, t[2])

    def r23(t):
        b, c = s(t[1], t[2])
        return (t[0], b, c)

    for t in itertools.product(range(n), repeat=3):
        if r12(r23(r12(t))) != r23(r12(r23(t))):
            return t
    return None


def braid_witness(s: SolutionTable) -> tuple | None:
    """A triple (0-based) where the braid relation fails, or None."""
    return _braid_direct(s)


def check_braid(s: SolutionTable) -> bool:
    direct = _braid_direct(s) is None
    via_conditions = _braid_conditions(s) is None
    if direct != via_conditions:
        raise AssertionError(f"braid formulations disagree on {s!r}")
    return direct


def check_idempotent(s: SolutionTable) -> bool:
    return all(s(*s(x, y)) == s(x, y) for x in range(s.n) for y in range(s.n))


def check_nondegenerate(s: SolutionTable) -> tuple:
    full = set(range(s.n))
    left = all(set(row) == full for row in s.L)
    right = all(set(row) == full for row in s.R)
    return left, right


def recover_permutation(s: SolutionTable) -> tuple | None:
    """If x^y = y for all x, y and the left action is constant in x and bijective,
    return the 0-based permutation f with r = r_f."""
    n = s.n
    if any(s.right(x, y) != y for x in range(n) for y in range(n)):
        return None
    first = s.L[0]
    if any(s.L[x] != first for x in range(n)):
        return None
    if sorted(first) != list(range(n)):
        return None
    return tuple(first)


def _cycle_type(perm: Sequence[int]) -> tuple:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        k, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def _signature(s: SolutionTable, x: int) -> tuple:
    n = s.n
    fixed = sum(1 for y in range(n) if s(x, y) == (x, y))
    def shape(row):
        if sorted(row) == list(range(n)):
            return ("perm", _cycle_type(row))
        return ("map", tuple(sorted(Counter(row).values())))

    return (shape(s.L[x]), shape(s.R[x]), fixed)


def solutions_isomorphic(s1: SolutionTable, s2: SolutionTable) -> tuple | None:
    """Backtracking search for phi with (phi x phi) r1 = r2 (phi x phi).
    Returns phi as a 0-based tuple, or None."""
    if s1.n != s2.n:
        raise SolutionError("size mismatch")
    n = s1.n
    sig1 = [_signature(s1, x) for x in range(n)]
    sig2 = [_signature(s2, x) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    phi: dict = {}
    used: set = set()

    def consistent() -> bool:
        for x in phi:
            for y in phi:
                a, b = s1(x, y)
                a2, b2 = s2(phi[x], phi[y])
                if a in phi and phi[a] != a2:
                    return False
                if b in phi and phi[b] != b2:
                    return False
        return True

    def search(x: int) -> bool:
        if x == n:
            return True
        for cand in range(n):
            if cand in used or sig2[cand] != sig1[x]:
                continue
            phi[x] = cand
            used.add(cand)
            if consistent() and search(x + 1):
                return True
            del phi[x]
            used.discard(cand)
        return False

    if search(0):
        return tuple(phi[x] for x in range(n))
    return None


def _all_maps_n2() -> Iterable[SolutionTable]:
    pairs = [(a, b) for a in range(2) for b in range(2)]
    for choice in itertools.product(pairs, repeat=4):
        yield SolutionTable(2, [[choice[0], choice[1]], [choice[2], choice[3]]])


def _lnd_idempotent_candidates(n: int) -> Iterable[SolutionTable]:
    # with every L_x a permutation, idempotency forces x^y = L_a^{-1}(a), a = L_x(y)
    perms = list(itertools.permutations(range(n)))
    inverses = {p: tuple(sorted(range(n), key=lambda i: p[i])) for p in perms}
    for Ls in itertools.product(perms, repeat=n):
        table = []
        for x in range(n):
            row = []
            for y in range(n):
                a = Ls[x][y]
                row.append((a, inverses[Ls[a]][a]))
            table.append(row)
        yield SolutionTable(n, table)


def enumerate_idempotent_lnd_solutions(n: int, up_to_isomorphism: bool = False) -> list:
    if n == 1:
        found = [identity_map(1)]
    elif n == 2:
        found = [s for s in _all_maps_n2()
                 if check_nondegenerate(s)[0] and check_idempotent(s) and check_braid(s)]
    elif n in (3, 4):
        found = [s for s in _lnd_idempotent_candidates(n)
                 if check_idempotent(s) and check_braid(s)]
    else:
        raise SolutionError(f"exhaustive enumeration not supported for n={n}")
    for s in found:
        f = recover_permutation(s)
        if f is not None:
            s.perm = f
    found.sort(key=SolutionTable.encoding)
    if not up_to_isomorphism:
        return found
    reps: list = []
    for s in found:
        if not any(solutions_isomorphic(s, t) is not None for t in reps):
            reps.append(s)
    return reps


def permutation_classes(n: int) -> list:
    """Isomorphism classes of permutation solutions r_f, f in Sym(n)."""
    reps: list = []
    for f in itertools.permutations(range(1, n + 1)):
        s = make_permutation_solution(f)
        if not any(solutions_isomorphic(s, t) is not None for t in reps):
            reps.append(s)
    return reps
