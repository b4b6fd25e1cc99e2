import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hallgroups.arith import (
    Factorization,
    PrimeSet,
    cyclotomic_eval,
    divisors,
    epsilon,
    factorial_primes,
    factorize,
    floor_div,
    gcd,
    is_prime,
    is_prime_power,
    mobius,
    pi_part,
    prime_divisors,
    primes_up_to,
)


@pytest.mark.parametrize("n, expected", [
    (1, {}),
    (5040, {2: 4, 3: 2, 5: 1, 7: 1}),
    (2016, {2: 5, 3: 2, 7: 1}),
])
def test_factorize_examples(n, expected):
    assert factorize(n).as_dict() == expected


@pytest.mark.parametrize("n, expected", [(1, ()), (120, (2, 3, 5)), (480, (2, 3, 5))])
def test_prime_divisors(n, expected):
    assert prime_divisors(n).primes == expected


@pytest.mark.parametrize("n, pi, expected", [
    (720, [2, 3], 144),
    (5040, [], 1),
    (120, [2, 3, 5], 120),
])
def test_pi_part(n, pi, expected):
    assert pi_part(n, pi) == expected


def test_gcd_and_floor():
    assert gcd(12, 10) == 2
    assert gcd(6, 8 - 1) == 1
    assert gcd(462, 4) == 2
    assert gcd(0, 9) == 9
    with pytest.raises(ValueError):
        gcd(0, 0)
    assert [floor_div(7, 3), floor_div(11, 3), floor_div(6, 3)] == [2, 3, 2]


@pytest.mark.parametrize("k, q, expected", [(1, 7, 6), (4, 3, 10), (6, 5, 21)])
def test_cyclotomic_examples(k, q, expected):
    assert cyclotomic_eval(k, q) == expected


def test_epsilon():
    assert [epsilon(5), epsilon(7), epsilon(9)] == [1, -1, 1]
    with pytest.raises(ValueError):
        epsilon(8)


def test_is_prime_power():
    assert is_prime_power(8) == (2, 3)
    assert is_prime_power(12) is None
    assert is_prime_power(121) == (11, 2)
    assert is_prime_power(1) is None


def test_large_factorization_against_sympy():
    # Pollard rho territory: products of two primes above the trial-division bound
    for n in [1000003 * 1000033, 2**61 - 1, (2**31 - 1) * (2**17 - 1) * 1000003,
              13**20 - 1, 2**64 + 1]:
        assert factorize(n).as_dict() == sympy.factorint(n)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**12))
def test_factorize_matches_sympy(n):
    assert factorize(n).as_dict() == sympy.factorint(n)


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.integers(min_value=2, max_value=60))
def test_cyclotomic_matches_sympy(k, q):
    x = sympy.Symbol("x")
    assert cyclotomic_eval(k, q) == int(sympy.cyclotomic_poly(k, x).subs(x, q))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**8), st.data())
def test_pi_part_splits(n, data):
    ps = prime_divisors(n)
    pi = PrimeSet(data.draw(st.lists(st.sampled_from(ps.primes), unique=True)) if ps else [])
    a, b = pi_part(n, pi), pi_part(n, ps - pi)
    assert a * b == n
    assert prime_divisors(a) <= pi
    assert math.gcd(a, b) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**6))
def test_mobius_and_divisors(n):
    assert divisors(n) == sorted(sympy.divisors(n))
    assert mobius(n) == int(sympy.mobius(n))
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_factorization_algebra():
    a, b = factorize(360), factorize(84)
    assert (a * b).value == 360 * 84
    assert (a * b / b) == a
    assert Factorization.from_dict({2: 3, 5: 1}).value == 40
    assert a.exponent(2) == 3 and a.exponent(7) == 0
    with pytest.raises(ValueError):
        b / a


def test_primeset_behaviour():
    s = PrimeSet([5, 2, 3, 2])
    assert s.primes == (2, 3, 5) and len(s) == 3
    assert str(s) == "{2,3,5}" and str(PrimeSet()) == "{}"
    assert PrimeSet.of(2, 3) < s and s <= s and not s < s
    assert s & [3, 7] == PrimeSet.of(3)
    assert s | [7] == PrimeSet.of(2, 3, 5, 7)
    assert s - [2] == PrimeSet.of(3, 5)
    assert s == PrimeSet((3, 2, 5)) and hash(s) == hash(PrimeSet.of(2, 3, 5))
    subs = list(s.subsets())
    assert len(subs) == 8 and subs[0] == PrimeSet() and subs[-1] == s
    with pytest.raises(ValueError):
        PrimeSet([4])
    with pytest.raises(AttributeError):
        s.primes = ()


def test_primes_helpers():
    assert primes_up_to(30) == list(sympy.primerange(2, 31))
    assert factorial_primes(7) == PrimeSet.of(2, 3, 5, 7)
    assert factorial_primes(1) == PrimeSet()
