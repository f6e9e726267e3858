"""Elements of A(k,n) in the normal basis {1} u {x1^(d-1) x_q}.

Coefficients may be Fractions, ModP values or sympy expressions; anything
supporting +, -, * works.  ``(d, q)`` keys use 0-based q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .ncpoly import Alphabet, NcPolynomial


def _simplify(c):
    expand = getattr(c, "expand", None)
    return expand() if expand is not None else c


def _is_zero(c) -> bool:
    return _simplify(c) == 0


class AlgebraElement:
    """Immutable element of A(k,n); product uses (x1^(d-1)x_p)(x1^(m-1)x_q) = x1^(d+m-1)x_q."""

    __slots__ = ("n", "constant", "coeffs")

    def __init__(self, n: int, constant=0, coeffs=None):
        self.n = n
        c0 = _simplify(constant)
        self.constant = Fraction(c0) if isinstance(c0, int) else c0
        acc: dict = {}
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        for (d, q), c in items:
            if d < 1 or not 0 <= q < n:
                raise ValueError(f"bad basis index {(d, q)} for n={n}")
            acc[(d, q)] = acc.get((d, q), 0) + c
        out = {}
        for key in sorted(acc):
            c = _simplify(acc[key])
            if c != 0:
                out[key] = Fraction(c) if isinstance(c, int) else c
        self.coeffs = out

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, 1)

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def gen(cls, n: int, q: int, c=1) -> "AlgebraElement":
        """The generator x_{q+1}."""
        return cls(n, 0, {(1, q): c})

    @classmethod
    def basis(cls, n: int, d: int, q: int, c=1) -> "AlgebraElement":
        """x1^(d-1) x_{q+1}, or the unit when d = 0."""
        if d == 0:
            return cls(n, c)
        return cls(n, 0, {(d, q): c})

    @classmethod
    def x1_power(cls, n: int, k: int, c=1) -> "AlgebraElement":
        return cls.basis(n, k, 0, c)

    @classmethod
    def from_word(cls, n: int, w: Iterable[int], c=1) -> "AlgebraElement":
        w = tuple(w)
        if not w:
            return cls(n, c)
        return cls(n, 0, {(len(w), w[-1]): c})

    @classmethod
    def from_poly(cls, n: int, f: NcPolynomial) -> "AlgebraElement":
        out = cls(n)
        for w, c in f.items():
            out = out + cls.from_word(n, w, c)
        return out

    def to_poly(self, alphabet: Alphabet | None = None) -> NcPolynomial:
        alphabet = alphabet or Alphabet.generators("x", self.n)
        terms = {(): self.constant} if not _is_zero(self.constant) else {}
        for (d, q), c in self.coeffs.items():
            terms[(0,) * (d - 1) + (q,)] = c
        return NcPolynomial(alphabet, terms)

    def is_zero(self) -> bool:
        return _is_zero(self.constant) and not self.coeffs

    def __bool__(self) -> bool:
        return not self.is_zero()

    def degrees(self) -> set:
        out = {d for d, _ in self.coeffs}
        if not _is_zero(self.constant):
            out.add(0)
        return out

    def slice(self, d: int) -> dict:
        return {q: c for (e, q), c in self.coeffs.items() if e == d}

    def slice_sum(self, d: int):
        return sum(self.slice(d).values(), 0)

    def homogeneous_part(self, d: int) -> "AlgebraElement":
        if d == 0:
            return AlgebraElement(self.n, self.constant)
        return AlgebraElement(self.n, 0, {(d, q): c for q, c in self.slice(d).items()})

    def _check(self, other: "AlgebraElement") -> None:
        if other.n != self.n:
            raise ValueError("elements of algebras with different n")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return AlgebraElement(self.n, self.constant + other, self.coeffs)
        self._check(other)
        return AlgebraElement(self.n, self.constant + other.constant,
                              list(self.coeffs.items()) + list(other.coeffs.items()))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.n, -self.constant, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "AlgebraElement":
        return AlgebraElement(self.n, s * self.constant, {k: s * c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        # constant parts
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + self.constant * c
        for k, c in self.coeffs.items():
            out[k] = out.get(k, 0) + c * other.constant
        # positive parts: only the coefficient sum of each left slice matters
        left_sums: dict = {}
        for (d, _), c in self.coeffs.items():
            left_sums[d] = left_sums.get(d, 0) + c
        for d, s in left_sums.items():
            for (m, q), c in other.coeffs.items():
                out[(d + m, q)] = out.get((d + m, q), 0) + s * c
        return AlgebraElement(self.n, self.constant * other.constant, out)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __pow__(self, k: int):
        out = AlgebraElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement(self.n, other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.n, str(self)))

    def substitute(self, mapping) -> "AlgebraElement":
        """Apply ``mapping`` to every coefficient (e.g. sympy ``subs``)."""
        return AlgebraElement(self.n, mapping(self.constant), {k: mapping(c) for k, c in self.coeffs.items()})

    def __str__(self) -> str:
        parts = []
        if not _is_zero(self.constant):
            parts.append(f"{self.constant}")
        for (d, q), c in self.coeffs.items():
            mono = ".".join(["x1"] * (d - 1) + [f"x{q + 1}"])
            parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__
