"""Free associative algebra over Q with deg-lex order and a truncated
noncommutative Groebner basis engine.

Words are tuples of 0-based letter positions inside an ``Alphabet``.
Printing uses 1-based generator names such as ``x1.x2.x3``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

Word = tuple  # tuple[int, ...]


class AlphabetMismatch(ValueError):
    pass


class DegreeBoundError(ValueError):
    pass


class InhomogeneousError(ValueError):
    pass


class Letter(NamedTuple):
    alphabet_id: str
    index: int  # 1-based


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Alphabet:
    """Ordered finite set of generator names. Position in ``names`` is the order."""

    __slots__ = ("names", "tags", "_pos")

    def __init__(self, names: Sequence[str], tags: Sequence[str] | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.tags = tuple(tags) if tags is not None else tuple("" for _ in self.names)
        self._pos = {nm: i for i, nm in enumerate(self.names)}

    @classmethod
    def generators(cls, prefix: str, n: int) -> "Alphabet":
        return cls([f"{prefix}{i}" for i in range(1, n + 1)], [prefix] * n)

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)})"

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.names + other.names, self.tags + other.tags)

    def letter(self, pos: int) -> Letter:
        tag = self.tags[pos]
        # index within the sub-alphabet carrying the same tag
        idx = sum(1 for t in self.tags[:pos] if t == tag) + 1
        return Letter(tag, idx)

    def pos(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise AlphabetMismatch(f"unknown generator {name!r}") from None

    def word(self, *names: str) -> Word:
        return tuple(self.pos(nm) for nm in names)

    def word_text(self, w: Word) -> str:
        if not w:
            return "1"
        return ".".join(self.names[i] for i in w)

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text == "1":
            return ()
        return tuple(self.pos(part) for part in text.split("."))


def deg_lex_key(w: Word):
    return (len(w), w)


def deg_lex_compare(u: Sequence, v: Sequence) -> Ordering:
    """Compare two words; elements are either ints or ``Letter`` values."""
    ids = {x.alphabet_id for x in (*u, *v) if isinstance(x, Letter)}
    if len(ids) > 1:
        raise AlphabetMismatch(f"words over different alphabets: {sorted(ids)}")
    ku = (len(u), tuple(x.index if isinstance(x, Letter) else x for x in u))
    kv = (len(v), tuple(x.index if isinstance(x, Letter) else x for x in v))
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


class ModP:
    """Element of the prime field F_p, used for cross-check runs."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        if isinstance(v, Fraction):
            num = v.numerator % p
            den = v.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {p}")
            v = num * pow(den, -1, p)
        self.v = int(v) % p
        self.p = p

    def _lift(self, o) -> "ModP":
        return o if isinstance(o, ModP) else ModP(o, self.p)

    def __add__(self, o):
        return ModP(self.v + self._lift(o).v, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return ModP(self.v - self._lift(o).v, self.p)

    def __rsub__(self, o):
        return ModP(self._lift(o).v - self.v, self.p)

    def __mul__(self, o):
        return ModP(self.v * self._lift(o).v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return ModP(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __eq__(self, o) -> bool:
        if isinstance(o, ModP):
            return self.v == o.v and self.p == o.p
        if isinstance(o, (int, Fraction)):
            return self == ModP(o, self.p)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.v, self.p))

    def __str__(self) -> str:
        return str(self.v)

    __repr__ = __str__


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


class NcPolynomial:
    """Immutable finite linear combination of words with nonzero coefficients."""

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                w = tuple(w)
                if isinstance(c, int):
                    c = Fraction(c)
                acc[w] = acc.get(w, 0) + c
        n = len(alphabet)
        for w in acc:
            if any(not 0 <= i < n for i in w):
                raise AlphabetMismatch(f"letter index outside alphabet of size {n}")
        self._terms = {w: acc[w] for w in sorted(acc, key=deg_lex_key, reverse=True) if acc[w] != 0}
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, alphabet: Alphabet, w: Word, c=1) -> "NcPolynomial":
        return cls(alphabet, {tuple(w): c})

    @classmethod
    def binomial(cls, alphabet: Alphabet, u: Word, v: Word) -> "NcPolynomial":
        return cls(alphabet, {tuple(u): 1, tuple(v): -1})

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPolynomial":
        return cls(alphabet)

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "NcPolynomial":
        text = text.strip()
        if text == "0":
            return cls(alphabet)
        terms = []
        for chunk in text.split(" + "):
            coeff, _, word = chunk.strip().partition("*")
            terms.append((alphabet.parse_word(word), Fraction(coeff)))
        return cls(alphabet, terms)

    # basic access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self) -> list:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def lm(self) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return next(iter(self._terms))

    @property
    def lc(self):
        return self._terms[self.lm]

    @property
    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def coefficient(self, w: Word):
        return self._terms.get(tuple(w), 0)

    def monic(self) -> "NcPolynomial":
        if not self._terms:
            return self
        lc = self.lc
        return NcPolynomial(self.alphabet, {w: c / lc for w, c in self._terms.items()})

    def map_coefficients(self, fn) -> "NcPolynomial":
        return NcPolynomial(self.alphabet, {w: fn(c) for w, c in self._terms.items()})

    def substitute(self, target: Alphabet, images: dict) -> "NcPolynomial":
        """Letter-wise substitution; ``images`` maps letter position to a word."""
        out: dict = {}
        for w, c in self._terms.items():
            img = tuple(x for i in w for x in images[i])
            out[img] = out.get(img, 0) + c
        return NcPolynomial(target, out)

    # arithmetic
    def _check(self, other: "NcPolynomial") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("polynomials over different alphabets")

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        self._check(other)
        return NcPolynomial(self.alphabet, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "NcPolynomial":
        if isinstance(other, NcPolynomial):
            self._check(other)
            out: dict = {}
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    out[u + v] = out.get(u + v, 0) + a * b
            return NcPolynomial(self.alphabet, out)
        return NcPolynomial(self.alphabet, {w: c * other for w, c in self._terms.items()})

    def __rmul__(self, scalar) -> "NcPolynomial":
        return NcPolynomial(self.alphabet, {w: scalar * c for w, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, tuple(self._terms.items())))
        return self._hash

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{_fmt_coeff(c)}*{self.alphabet.word_text(w)}" for w, c in self._terms.items())

    __str__ = to_text

    def __repr__(self) -> str:
        return f"NcPolynomial({self.to_text()!r})"


class _Reducer:
    """Leftmost rewriting with per-word memoisation.

    A rule is stored as LM -> list of (word, coeff) giving LM modulo the ideal.
    """

    def __init__(self):
        self.rules: dict = {}
        self.lengths: list = []
        self.memo: dict = {}

    def add(self, poly: NcPolynomial) -> None:
        poly = poly.monic()
        lm = poly.lm
        self.rules[lm] = [(w, -c) for w, c in poly.items() if w != lm]
        self.lengths = sorted({len(w) for w in self.rules})
        k = len(lm)
        self.memo = {w: v for w, v in self.memo.items() if len(w) < k}

    def find(self, w: Word):
        rules = self.rules
        for i in range(len(w)):
            for L in self.lengths:
                if i + L > len(w):
                    break
                sub = w[i:i + L]
                if sub in rules:
                    return i, L, rules[sub]
        return None

    def word_nf(self, w: Word) -> dict:
        hit = self.memo.get(w)
        if hit is not None:
            return hit
        found = self.find(w)
        if found is None:
            res = {w: 1}
        else:
            i, L, tail = found
            a, b = w[:i], w[i + L:]
            res = {}
            for t, c in tail:
                for u, e in self.word_nf(a + t + b).items():
                    val = res.get(u, 0) + c * e
                    if val == 0:
                        res.pop(u, None)
                    else:
                        res[u] = val
        self.memo[w] = res
        return res

    def nf_terms(self, terms) -> dict:
        out: dict = {}
        for w, c in terms:
            for u, e in self.word_nf(w).items():
                val = out.get(u, 0) + c * e
                if val == 0:
                    out.pop(u, None)
                else:
                    out[u] = val
        return out

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None


class GroebnerBasis:
    """Reduced Groebner basis truncated at ``degree_bound``.

    ``complete_flag`` is true when the last degree processed added no rule;
    ``certified`` is true when every overlap of the final rules has degree
    within the bound, so the rules form a Groebner basis in every degree.
    """

    def __init__(self, alphabet: Alphabet, rules: Iterable[NcPolynomial], degree_bound: int,
                 complete_flag: bool = True):
        self.alphabet = alphabet
        self.rules = tuple(sorted((r.monic() for r in rules), key=lambda r: deg_lex_key(r.lm)))
        self.degree_bound = degree_bound
        self.complete_flag = complete_flag
        self._red = _Reducer()
        for r in self.rules:
            self._red.add(r)

    @property
    def obstructions(self) -> frozenset:
        return frozenset(r.lm for r in self.rules)

    @property
    def certified(self) -> bool:
        return all(len(w) <= self.degree_bound for w, _, _ in _overlaps([r.lm for r in self.rules]))

    def reduce(self, f: NcPolynomial) -> NcPolynomial:
        if f.alphabet != self.alphabet:
            raise AlphabetMismatch("polynomial and basis use different alphabets")
        return NcPolynomial(self.alphabet, self._red.nf_terms(f.items()))

    def reduce_word(self, w: Word) -> dict:
        return dict(self._red.word_nf(tuple(w)))

    def is_normal(self, w: Word) -> bool:
        return self._red.is_normal(tuple(w))

    def texts(self) -> list:
        return [r.to_text() for r in self.rules]

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.rules)} rules, bound={self.degree_bound}, complete={self.complete_flag})"


def _overlaps(lms: Sequence[Word]) -> Iterator[tuple]:
    """Yield (overlap word, index g, index h) with a proper suffix of lms[g]
    equal to a proper prefix of lms[h]."""
    by_prefix: dict = {}
    for j, v in enumerate(lms):
        for k in range(1, len(v)):
            by_prefix.setdefault(v[:k], []).append(j)
    for i, u in enumerate(lms):
        for k in range(1, len(u)):
            for j in by_prefix.get(u[len(u) - k:], ()):
                v = lms[j]
                if k < len(v):
                    yield u + v[k:], i, j


def _echelon(vectors: list) -> list:
    """Reduced row echelon form of sparse vectors (dict word -> coeff),
    pivots taken at the deg-lex largest word. Returns monic rows."""
    pivots: dict = {}
    for vec in vectors:
        v = dict(vec)
        while v:
            lead = max(v, key=deg_lex_key)
            row = pivots.get(lead)
            if row is None:
                lc = v[lead]
                pivots[lead] = {w: c / lc for w, c in v.items()}
                break
            c = v[lead]
            for w, e in row.items():
                val = v.get(w, 0) - c * e
                if val == 0:
                    v.pop(w, None)
                else:
                    v[w] = val
    order = sorted(pivots, key=deg_lex_key)
    for i, p in enumerate(order):
        row = pivots[p]
        for q in order[:i]:
            c = row.get(q)
            if c:
                for w, e in pivots[q].items():
                    val = row.get(w, 0) - c * e
                    if val == 0:
                        row.pop(w, None)
                    else:
                        row[w] = val
    return [pivots[p] for p in order]


def buchberger(relations: Sequence[NcPolynomial], degree_bound: int,
               alphabet: Alphabet | None = None) -> GroebnerBasis:
    """Homogeneous completion, one degree at a time, up to ``degree_bound``."""
    rels = [r for r in relations if not r.is_zero()]
    if alphabet is None:
        if not relations:
            raise ValueError("alphabet required when there are no relations")
        alphabet = relations[0].alphabet
    if len(alphabet) == 0:
        raise ValueError("empty alphabet")
    for r in rels:
        if r.alphabet != alphabet:
            raise AlphabetMismatch("relations over different alphabets")
        if not r.is_homogeneous():
            raise InhomogeneousError(f"inhomogeneous relation {r}")
        if r.degree < 2:
            raise InhomogeneousError(f"relation of degree < 2: {r}")
    top = max((r.degree for r in rels), default=2)
    if degree_bound < top:
        raise DegreeBoundError(f"degree bound {degree_bound} below relation degree {top}")

    by_degree: dict = {}
    for r in rels:
        by_degree.setdefault(r.degree, []).append(r)

    red = _Reducer()
    rules: list = []
    added_at_bound = False
    for d in range(2, degree_bound + 1):
        pending = [red.nf_terms(r.items()) for r in by_degree.get(d, [])]
        lms = [r.lm for r in rules]
        for w, i, j in _overlaps(lms):
            if len(w) != d:
                continue
            u, v = lms[i], lms[j]
            left = [(t + w[len(u):], c) for t, c in red.rules[u]]
            right = [(w[:len(w) - len(v)] + t, c) for t, c in red.rules[v]]
            s = red.nf_terms(left)
            for t, c in red.nf_terms(right).items():
                val = s.get(t, 0) - c
                if val == 0:
                    s.pop(t, None)
                else:
                    s[t] = val
            pending.append(s)
        new_rows = _echelon([p for p in pending if p])
        for row in new_rows:
            poly = NcPolynomial(alphabet, row)
            rules.append(poly)
            red.add(poly)
        if d == degree_bound:
            added_at_bound = bool(new_rows)
    return GroebnerBasis(alphabet, rules, degree_bound, complete_flag=not added_at_bound)


def is_groebner(relations: Sequence[NcPolynomial]) -> bool:
    """True iff every degree-3 ambiguity of the quadratic relations resolves."""
    rels = [r.monic() for r in relations if not r.is_zero()]
    for r in rels:
        if r.degree != 2 or not r.is_homogeneous():
            raise InhomogeneousError(f"non-quadratic relation {r}")
    red = _Reducer()
    duplicates = []
    for r in rels:
        if r.lm in red.rules:
            duplicates.append(r)
        else:
            red.add(r)
    # equal leading monomials form an inclusion ambiguity
    for r in duplicates:
        if red.nf_terms(r.items()):
            return False
    lms = list(red.rules)
    for w, i, j in _overlaps(lms):
        u, v = lms[i], lms[j]
        left = red.nf_terms((t + w[len(u):], c) for t, c in red.rules[u])
        right = red.nf_terms((w[:len(w) - len(v)] + t, c) for t, c in red.rules[v])
        if left != right:
            return False
    return True


def normal_form(f: NcPolynomial, G: GroebnerBasis) -> NcPolynomial:
    if f.degree > G.degree_bound:
        raise DegreeBoundError(f"degree {f.degree} exceeds bound {G.degree_bound}")
    return G.reduce(f)


def bullet_multiply(u: NcPolynomial, v: NcPolynomial, G: GroebnerBasis) -> NcPolynomial:
    return normal_form(u * v, G)


def iter_normal_words(G: GroebnerBasis, d: int) -> Iterator[Word]:
    n = len(G.alphabet)
    obs = G.obstructions
    lengths = sorted({len(w) for w in obs})

    def extend(prefix: Word):
        if len(prefix) == d:
            yield prefix
            return
        for c in range(n):
            w = prefix + (c,)
            if any(L <= len(w) and w[len(w) - L:] in obs for L in lengths):
                continue
            yield from extend(w)

    yield from extend(())


def normal_words(G: GroebnerBasis, d: int) -> list:
    if d > G.degree_bound:
        raise DegreeBoundError(f"degree {d} exceeds bound {G.degree_bound}")
    return list(iter_normal_words(G, d))


def hilbert_function(G: GroebnerBasis, d_max: int) -> list:
    if d_max > G.degree_bound:
        raise DegreeBoundError(f"degree {d_max} exceeds bound {G.degree_bound}")
    return [sum(1 for _ in iter_normal_words(G, d)) for d in range(d_max + 1)]


def free_basis(alphabet: Alphabet, degree_bound: int) -> GroebnerBasis:
    """The empty basis: every word is normal."""
    return GroebnerBasis(alphabet, [], degree_bound, complete_flag=True)
