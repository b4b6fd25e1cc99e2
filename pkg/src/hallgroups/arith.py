"""Exact integer, prime-set and cyclotomic arithmetic.

All integers are Python ints (arbitrary precision); orders of exceptional
groups overflow 64 bits long before anything else gets interesting.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic for n < 3.3e24; beyond that it is a strong probable-prime
    test, which is more than the catalog ever needs.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeSet:
    """A finite set of primes kept as a sorted tuple.

    Behaves like a frozenset for ``&``, ``|``, ``-``, ``<=``, ``in`` and
    iteration, but always iterates in ascending order so that output built
    from it is deterministic.
    """

    __slots__ = ("primes",)

    def __init__(self, primes: Iterable[int] = ()):
        ps = tuple(sorted(set(int(p) for p in primes)))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(primes)

    @classmethod
    def _trusted(cls, primes: Iterable[int]) -> "PrimeSet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "primes", tuple(sorted(set(primes))))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("PrimeSet is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __hash__(self) -> int:
        return hash(self.primes)

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimeSet):
            return self.primes == other.primes
        if isinstance(other, (set, frozenset)):
            return set(self.primes) == other
        return NotImplemented

    def __lt__(self, other: "PrimeSet") -> bool:
        # proper subset, matching frozenset semantics
        return self <= other and self != other

    def __le__(self, other: "PrimeSet") -> bool:
        o = other.primes if isinstance(other, PrimeSet) else other
        return set(self.primes).issubset(o)

    def __ge__(self, other: "PrimeSet") -> bool:
        return PrimeSet._coerce(other) <= self

    def __gt__(self, other: "PrimeSet") -> bool:
        return PrimeSet._coerce(other) < self

    def __and__(self, other) -> "PrimeSet":
        o = set(PrimeSet._coerce(other).primes)
        return PrimeSet._trusted(p for p in self.primes if p in o)

    def __or__(self, other) -> "PrimeSet":
        return PrimeSet._trusted(self.primes + PrimeSet._coerce(other).primes)

    def __sub__(self, other) -> "PrimeSet":
        o = set(PrimeSet._coerce(other).primes)
        return PrimeSet._trusted(p for p in self.primes if p not in o)

    def __bool__(self) -> bool:
        return bool(self.primes)

    def __repr__(self) -> str:
        return "PrimeSet({%s})" % ", ".join(map(str, self.primes))

    def __str__(self) -> str:
        return "{%s}" % ",".join(map(str, self.primes))

    @staticmethod
    def _coerce(x) -> "PrimeSet":
        return x if isinstance(x, PrimeSet) else PrimeSet(x)

    def subsets(self) -> Iterator["PrimeSet"]:
        """All 2^k subsets, ordered by size then lexicographically."""
        from itertools import combinations

        for k in range(len(self.primes) + 1):
            for combo in combinations(self.primes, k):
                yield PrimeSet._trusted(combo)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p, e), ...)`` with p strictly increasing."""

    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def primes(self) -> PrimeSet:
        return PrimeSet._trusted(p for p, _ in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def exponent(self, p: int) -> int:
        for r, e in self.pairs:
            if r == p:
                return e
        return 0

    def __mul__(self, other: "Factorization") -> "Factorization":
        d = self.as_dict()
        for p, e in other.pairs:
            d[p] = d.get(p, 0) + e
        return Factorization.from_dict(d)

    def __truediv__(self, other: "Factorization") -> "Factorization":
        d = self.as_dict()
        for p, e in other.pairs:
            if d.get(p, 0) < e:
                raise ValueError("division is not exact")
            d[p] -= e
        return Factorization.from_dict(d)

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "Factorization":
        return cls(tuple(sorted((p, e) for p, e in d.items() if e)))

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of the composite odd n (Brent's variant)."""
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def _wheel() -> Iterator[int]:
    yield from (2, 3, 5)
    gaps = (4, 2, 4, 2, 4, 6, 2, 6)
    k, i = 7, 0
    while True:
        yield k
        k += gaps[i]
        i = (i + 1) % 8


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Exact factorization: 2-3-5 wheel trial division to 10^6, then rho."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    for d in _wheel():
        if d * d > n or d > _TRIAL_LIMIT:
            break
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    if n > 1:
        _factor_into(n, out)
    return Factorization.from_dict(out)


def prime_divisors(n: int) -> PrimeSet:
    return factorize(n).primes


def pi_part(n: int, pi: Iterable[int]) -> int:
    """Largest divisor of n whose prime divisors all lie in pi."""
    if n < 1:
        raise ValueError("pi_part needs n >= 1")
    out = 1
    for p in pi:
        while n % p == 0:
            n //= p
            out *= p
    return out


def gcd(*args: int) -> int:
    if all(a == 0 for a in args):
        raise ValueError("gcd of all zeros is undefined")
    return math.gcd(*args)


def floor_div(a: int, b: int) -> int:
    if b < 1:
        raise ValueError("floor_div needs a positive divisor")
    return a // b


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.pairs):
        return 0
    return -1 if len(f.pairs) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).pairs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def cyclotomic_eval(k: int, q: int) -> int:
    """Phi_k(q) from the Moebius product over the divisors of k."""
    if k < 1 or q < 2:
        raise ValueError("cyclotomic_eval needs k >= 1 and q >= 2")
    num, den = 1, 1
    for d in divisors(k):
        mu = mobius(k // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def epsilon(q: int) -> int:
    """(-1)^((q-1)/2) for odd q; +1 exactly when q = 1 mod 4."""
    if q % 2 == 0:
        raise ValueError(f"epsilon is undefined for even q={q}")
    return 1 if q % 4 == 1 else -1


def is_prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    f = factorize(q)
    if len(f.pairs) != 1:
        return None
    return f.pairs[0]


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def factorial_primes(n: int) -> PrimeSet:
    """pi(n!) without forming n!."""
    return PrimeSet._trusted(primes_up_to(n))
