import cmath
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratcat import numbers
from ratcat.errors import InternalError, PreconditionError
from ratcat.numbers import CoprimePair, IntPoly, NonInteger


def coprime_pairs(max_sum):
    return [(a, s - a) for s in range(3, max_sum + 1) for a in range(1, s) if gcd(a, s - a) == 1 and a != s - a]


def lattice_catalan(a, b):
    """Brute-force count of words with all interior points strictly above the diagonal."""
    n = 0
    for norths in combinations(range(a + b), a):
        x = y = 0
        ok = True
        for t in range(a + b - 1):
            if t in norths:
                y += 1
            else:
                x += 1
            if b * y <= a * x:
                ok = False
                break
        n += ok
    return n


def pascal_q_binomial(m, k):
    """Gaussian binomial via [m,k] = [m-1,k-1] + q^k [m-1,k], as a coefficient list."""
    if k < 0 or k > m:
        return [0]
    if k == 0 or k == m:
        return [1]
    left = pascal_q_binomial(m - 1, k - 1)
    right = [0] * k + pascal_q_binomial(m - 1, k)
    out = [0] * max(len(left), len(right))
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i] += c
    return out


class TestCoprimePair:
    def test_rejects_non_coprime(self):
        with pytest.raises(PreconditionError):
            CoprimePair(4, 6)

    def test_rejects_equal_and_nonpositive(self):
        with pytest.raises(PreconditionError):
            CoprimePair(1, 1)
        with pytest.raises(PreconditionError):
            CoprimePair(0, 3)

    def test_str_and_swap(self):
        p = CoprimePair(5, 8)
        assert str(p) == "(5,8)"
        assert tuple(p.swapped()) == (8, 5)


@pytest.mark.parametrize("pair,value", [((5, 8), 99), ((1, 7), 1), ((3, 4), 5), ((2, 3), 2)])
def test_rational_catalan_values(pair, value):
    assert numbers.rational_catalan(pair) == value


@pytest.mark.parametrize("pair", coprime_pairs(12))
def test_rational_catalan_matches_lattice_count(pair):
    assert numbers.rational_catalan(pair) == lattice_catalan(*pair)


def test_rational_catalan_symmetric_and_classical():
    for a, b in coprime_pairs(16):
        assert numbers.rational_catalan((a, b)) == numbers.rational_catalan((b, a))
    for n in range(1, 11):
        assert numbers.rational_catalan((n, n + 1)) == comb(2 * n, n) // (n + 1)


def test_rational_catalan_rejects_non_coprime():
    with pytest.raises(PreconditionError):
        numbers.rational_catalan((4, 6))


@pytest.mark.parametrize("pair,value", [((5, 8), 7), ((3, 5), 2), ((1, 2), 1), ((8, 5), 7)])
def test_derived_catalan(pair, value):
    assert numbers.derived_catalan(pair) == value


def test_derived_catalan_duality():
    for a, b in coprime_pairs(20):
        if a < b:
            assert numbers.derived_catalan((a, b)) == numbers.derived_catalan((b - a, b))


@pytest.mark.parametrize(
    "pair,chain",
    [((5, 8), [((5, 8), 99), ((3, 5), 7), ((2, 3), 2), ((1, 2), 1)]), ((1, 2), [((1, 2), 1)]), ((2, 3), [((2, 3), 2), ((1, 2), 1)])],
)
def test_derivation_chain(pair, chain):
    got = [(tuple(p), v) for p, v in numbers.derivation_chain(pair)]
    assert got == chain


def test_narayana_and_kirkman_values():
    assert numbers.narayana((3, 5), 2) == 4
    assert numbers.narayana((5, 8), 3) == 42
    assert numbers.kirkman((3, 5), 2) == 6
    assert numbers.kirkman((3, 5), 3) == 7
    for a, b in coprime_pairs(10):
        assert numbers.narayana((a, b), 1) == 1
        assert numbers.kirkman((a, b), 1) == 1


def test_index_out_of_range():
    with pytest.raises(PreconditionError):
        numbers.narayana((3, 5), 0)
    with pytest.raises(PreconditionError):
        numbers.kirkman((3, 5), 4)


def test_kreweras_values():
    assert numbers.kreweras((5, 8), (5, 1, 2, 0, 0, 0)) == 21
    assert numbers.kreweras((3, 5), (4, 0, 0, 1)) == 1
    assert sum(numbers.kreweras((3, 5), r) for r in numbers.run_types((3, 5))) == 7
    with pytest.raises(PreconditionError):
        numbers.kreweras((3, 5), (4, 1, 0, 0))


@pytest.mark.parametrize("pair", [p for p in coprime_pairs(15) if p[0] < p[1]])
def test_refinement_sums(pair):
    a, _ = pair
    cat = numbers.rational_catalan(pair)
    assert sum(numbers.narayana(pair, i) for i in range(1, a + 1)) == cat
    assert sum(numbers.kreweras(pair, r) for r in numbers.run_types(pair)) == cat
    alt = sum((-1) ** (i + 1) * numbers.kirkman(pair, i) for i in range(1, a + 1))
    assert alt == (-1) ** (a + 1) * numbers.derived_catalan(pair)


def test_run_types_are_valid_and_complete():
    a, b = 4, 7
    types = list(numbers.run_types((a, b)))
    assert len(types) == len(set(types))
    for r in types:
        assert sum(r) == b and sum(j * rj for j, rj in enumerate(r)) == a
    # every multiset of b nonnegative run lengths summing to a appears once
    brute = set()
    for cuts in combinations(range(a + b - 1), b - 1):
        bounds = (-1,) + cuts + (a + b - 1,)
        parts = [bounds[i + 1] - bounds[i] - 1 for i in range(b)]
        brute.add(tuple(parts.count(j) for j in range(a + 1)))
    assert set(types) == brute


class TestIntPoly:
    def test_normalization_and_str(self):
        assert IntPoly([1, 0, 1, 0, 0]).coeffs == (1, 0, 1)
        assert str(IntPoly([1, 0, 1])) == "1 + q^2"
        assert IntPoly().is_zero() and IntPoly().degree == -1

    def test_arithmetic(self):
        p = IntPoly([1, 1])
        assert p * p == IntPoly([1, 2, 1])
        assert p**3 == IntPoly([1, 3, 3, 1])
        assert (p * p) - p == IntPoly([0, 1, 1])
        q, r = IntPoly([1, 2, 1]).divmod(p)
        assert q == p and r.is_zero()

    def test_exact_div_raises_on_remainder(self):
        with pytest.raises(InternalError):
            IntPoly([1, 0, 1]).exact_div(IntPoly([1, 1]))

    @given(st.lists(st.integers(-20, 20), max_size=8), st.lists(st.integers(-20, 20), max_size=8))
    def test_mul_divides_back(self, c1, c2):
        f = IntPoly(c1)
        g = IntPoly(c2 + [1])  # monic divisor
        assert (f * g).exact_div(g) == f

    @given(st.lists(st.integers(-9, 9), max_size=10), st.integers(-3, 3))
    def test_evaluation_is_a_ring_map(self, c, x):
        f = IntPoly(c)
        g = IntPoly([2, -1, 1])
        assert (f * g)(x) == f(x) * g(x)
        assert (f + g)(x) == f(x) + g(x)


@pytest.mark.parametrize(
    "m,k,coeffs", [(2, 1, (1, 1)), (4, 2, (1, 1, 2, 1, 1)), (5, 0, (1,)), (5, 5, (1,))]
)
def test_q_binomial_examples(m, k, coeffs):
    assert numbers.q_binomial(m, k).coeffs == coeffs


@pytest.mark.parametrize("m", range(0, 11))
def test_q_binomial_matches_pascal_recursion(m):
    for k in range(m + 1):
        f = numbers.q_binomial(m, k)
        assert list(f.coeffs) == pascal_q_binomial(m, k)
        assert f(1) == comb(m, k)


def test_q_binomial_range():
    with pytest.raises(PreconditionError):
        numbers.q_binomial(3, 4)


def test_q_rational_catalan():
    assert numbers.q_rational_catalan((2, 3)).coeffs == (1, 0, 1)
    assert numbers.q_rational_catalan((1, 6)).coeffs == (1,)
    for a, b in coprime_pairs(14):
        X = numbers.q_rational_catalan((a, b))
        assert X(1) == numbers.rational_catalan((a, b))
        # palindromic of degree (a-1)(b-1)
        assert X.degree == (a - 1) * (b - 1)
        assert X.coeffs == tuple(reversed(X.coeffs))


def test_cyclotomic():
    assert numbers.cyclotomic(1).coeffs == (-1, 1)
    assert numbers.cyclotomic(4).coeffs == (1, 0, 1)
    assert numbers.cyclotomic(6).coeffs == (1, -1, 1)
    # product over divisors of n gives q^n - 1
    for n in range(1, 16):
        prod = IntPoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * numbers.cyclotomic(d)
        assert prod == IntPoly([-1] + [0] * (n - 1) + [1])


def test_eval_at_root_of_unity_examples():
    f = IntPoly([1, 0, 1])
    assert numbers.eval_at_root_of_unity(f, 4, 1) == 0
    assert numbers.eval_at_root_of_unity(f, 4, 2) == 2
    assert numbers.eval_at_root_of_unity(f, 4, 0) == 2
    assert isinstance(numbers.eval_at_root_of_unity(IntPoly([0, 1]), 4, 1), NonInteger)


@settings(max_examples=200)
@given(st.lists(st.integers(-5, 5), max_size=12), st.integers(1, 12), st.data())
def test_eval_at_root_of_unity_matches_complex_oracle(c, m, data):
    d = data.draw(st.integers(0, m - 1))
    f = IntPoly(c)
    z = cmath.exp(2j * cmath.pi * d / m)
    numeric = sum(ci * z**i for i, ci in enumerate(f.coeffs))
    got = numbers.eval_at_root_of_unity(f, m, d)
    if isinstance(got, NonInteger):
        near = round(numeric.real)
        assert abs(numeric.imag) > 1e-7 or abs(numeric.real - near) > 1e-7
    else:
        assert abs(numeric - got) < 1e-7


def test_eval_d_zero_is_value_at_one():
    f = numbers.q_rational_catalan((3, 5))
    for m in range(1, 9):
        assert numbers.eval_at_root_of_unity(f, m, 0) == f(1)


def test_exact_formulas_against_fractions():
    # Cat(a,b) = (a+b-1)! / (a! b!) computed independently with Fractions
    for a, b in coprime_pairs(14):
        assert numbers.rational_catalan((a, b)) == Fraction(factorial(a + b - 1), factorial(a) * factorial(b))
