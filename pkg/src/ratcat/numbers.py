"""Closed-form counting for rational Catalan combinatorics.

Every count here is an integer theorem, so the formulas are evaluated with
Python integers and the final division is checked for exactness.  The
q-analogs use a small dense integer polynomial type, and evaluation at
roots of unity is done by reduction modulo cyclotomic polynomials so that
cyclic sieving verdicts never depend on floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from math import comb, factorial, gcd
from typing import Iterable, Sequence

from .errors import InternalError, PreconditionError

__all__ = [
    "CoprimePair",
    "IntPoly",
    "NonInteger",
    "rational_catalan",
    "derived_catalan",
    "derivation_chain",
    "narayana",
    "kreweras",
    "kirkman",
    "run_types",
    "q_integer",
    "q_binomial",
    "q_rational_catalan",
    "cyclotomic",
    "eval_at_root_of_unity",
]


@dataclass(frozen=True, order=True)
class CoprimePair:
    """Coprime positive integers ``a != b``; identifies the rational x = a/(b-a)."""

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
            raise PreconditionError(f"need positive integers, got ({a!r}, {b!r})")
        if gcd(a, b) != 1:
            raise PreconditionError(f"({a}, {b}) is not a coprime pair")
        if a == b:
            raise PreconditionError(f"({a}, {b}) has a == b")

    @classmethod
    def of(cls, pair: "CoprimePair | Sequence[int]") -> "CoprimePair":
        if isinstance(pair, cls):
            return pair
        a, b = pair
        return cls(a, b)

    def swapped(self) -> "CoprimePair":
        return CoprimePair(self.b, self.a)

    def __iter__(self):
        yield self.a
        yield self.b

    def __str__(self):
        return f"({self.a},{self.b})"


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"{what}: {num}/{den} is not an integer")
    return q


def rational_catalan(pair) -> int:
    """Cat(a,b) = (a+b-1)! / (a! b!)."""
    a, b = CoprimePair.of(pair)
    return _exact_div(factorial(a + b - 1), factorial(a) * factorial(b), "Cat")


def derived_catalan(pair) -> int:
    """Cat'(a,b) = C(b,a)/b for a < b, C(a,b)/a for b < a."""
    a, b = CoprimePair.of(pair)
    lo, hi = min(a, b), max(a, b)
    return _exact_div(comb(hi, lo), hi, "Cat'")


def derivation_chain(pair) -> list[tuple[CoprimePair, int]]:
    """Iterate (a, b) -> sorted(b - a, a) until the smaller entry reaches 1.

    Each entry carries its rational Catalan number, so for (5, 8) the values
    read 99, 7, 2, 1.
    """
    p = CoprimePair.of(pair)
    if p.a > p.b:
        raise PreconditionError(f"derivation_chain expects a < b, got {p}")
    chain = [(p, rational_catalan(p))]
    while p.a > 1:
        lo, hi = sorted((p.b - p.a, p.a))
        p = CoprimePair(lo, hi)
        chain.append((p, rational_catalan(p)))
    return chain


def _check_index(pair: CoprimePair, i: int, name: str):
    if not 1 <= i <= pair.a:
        raise PreconditionError(f"{name}: index {i} outside 1..{pair.a}")


def narayana(pair, i: int) -> int:
    """Nar(a,b;i) = C(a,i) C(b-1,i-1) / a: paths with i nontrivial vertical runs."""
    p = CoprimePair.of(pair)
    _check_index(p, i, "narayana")
    return _exact_div(comb(p.a, i) * comb(p.b - 1, i - 1), p.a, "Nar")


def kirkman(pair, i: int) -> int:
    """Kirk(a,b;i) = C(a,i) C(b+i-1,i-1) / a: faces of Ass(a,b) with i-1 diagonals."""
    p = CoprimePair.of(pair)
    _check_index(p, i, "kirkman")
    return _exact_div(comb(p.a, i) * comb(p.b + i - 1, i - 1), p.a, "Kirk")


def _check_run_type(pair: CoprimePair, r: Sequence[int]):
    if len(r) != pair.a + 1 or any(x < 0 for x in r):
        raise PreconditionError(f"run type must be {pair.a + 1} nonnegative integers, got {tuple(r)}")
    if sum(r) != pair.b or sum(j * x for j, x in enumerate(r)) != pair.a:
        raise PreconditionError(
            f"run type {tuple(r)} needs sum r_j = {pair.b} and sum j*r_j = {pair.a}"
        )


def kreweras(pair, r: Sequence[int]) -> int:
    """Krew(a,b;r) = (b-1)! / prod r_j!: paths with r_j vertical runs of length j."""
    p = CoprimePair.of(pair)
    r = tuple(r)
    _check_run_type(p, r)
    den = 1
    for x in r:
        den *= factorial(x)
    return _exact_div(factorial(p.b - 1), den, "Krew")


def run_types(pair) -> Iterable[tuple[int, ...]]:
    """All vectors (r_0..r_a) with sum r_j = b and sum j r_j = a.

    These are the partitions of a into at most b parts, padded with zeros.
    """
    p = CoprimePair.of(pair)
    a, b = p.a, p.b

    def parts(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for k in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - k, k):
                yield (k,) + rest

    for lam in parts(a, a):
        if len(lam) > b:
            continue
        r = [0] * (a + 1)
        for k in lam:
            r[k] += 1
        r[0] = b - len(lam)
        yield tuple(r)


class IntPoly:
    """Dense univariate polynomial in q with integer coefficients.

    ``coeffs[k]`` is the coefficient of q**k; trailing zeros are stripped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(x - y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self):
        return IntPoly(-x for x in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(x * other for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        out = IntPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Euclidean division by a polynomial with leading coefficient +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise PreconditionError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] * lead
            if c:
                quot[k] = c
                for j, y in enumerate(divisor.coeffs):
                    rem[k + j] -= c * y
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InternalError(f"{self} is not divisible by {divisor}")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def fold(self, m: int) -> "IntPoly":
        """Reduce exponents modulo m (i.e. reduce modulo q^m - 1)."""
        out = [0] * m
        for k, c in enumerate(self.coeffs):
            out[k % m] += c
        return IntPoly(out)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


def q_integer(m: int) -> IntPoly:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise PreconditionError("q_integer needs m >= 0")
    return IntPoly([1] * m)


def q_binomial(m: int, k: int) -> IntPoly:
    """Gaussian binomial [m choose k]_q built as a running product of exact quotients."""
    if not 0 <= k <= m:
        raise PreconditionError(f"q_binomial needs 0 <= k <= m, got m={m}, k={k}")
    k = min(k, m - k)
    out = IntPoly.const(1)
    # [m-k+i]_q / [i]_q partial products are Gaussian binomials, so each division is exact
    for i in range(1, k + 1):
        out = (out * q_integer(m - k + i)).exact_div(q_integer(i))
    return out


def q_rational_catalan(pair) -> IntPoly:
    """X(q) = [a+b choose a]_q / [a+b]_q."""
    a, b = CoprimePair.of(pair)
    return q_binomial(a + b, a).exact_div(q_integer(a + b))


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """The k-th cyclotomic polynomial, from q^k - 1 divided by the proper divisors' factors."""
    if k < 1:
        raise PreconditionError("cyclotomic needs k >= 1")
    out = IntPoly.monomial(k) - IntPoly.const(1)
    for d in range(1, k):
        if k % d == 0:
            out = out.exact_div(cyclotomic(d))
    return out


@dataclass(frozen=True)
class NonInteger:
    """Value of f at a root of unity that is not a rational integer.

    ``remainder`` is f reduced modulo the cyclotomic polynomial of order ``order``.
    """

    remainder: IntPoly
    order: int

    def __str__(self):
        return f"non-integer ({self.remainder} mod Phi_{self.order})"


def eval_at_root_of_unity(f: IntPoly, m: int, d: int) -> "int | NonInteger":
    """Evaluate f at omega**d, omega a primitive m-th root of unity, exactly."""
    if m < 1 or not 0 <= d < m:
        raise PreconditionError(f"need m >= 1 and 0 <= d < m, got m={m}, d={d}")
    order = m // gcd(m, d)
    g = f.fold(m)
    _, rem = g.divmod(cyclotomic(order))
    if rem.is_constant():
        return rem.constant_term()
    return NonInteger(rem, order)
