"""Finite simple groups named by family and parameters, with exact orders.

Orders are kept as a q-power times a list of ``q^d - 1`` / ``q^d + 1`` terms
divided by the order of the centre, and each term is factored through its
cyclotomic pieces. That keeps the factorization cheap even for E8(q).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import (
    Factorization,
    PrimeSet,
    cyclotomic_eval,
    divisors,
    factorize,
    gcd,
    is_prime_power,
)

FAMILIES = (
    "Alt", "Lin", "Uni", "OrthOdd", "Symp", "OrthPlus", "OrthMinus",
    "G2", "E6", "TwE6", "E7", "E8", "Sporadic",
)

# Lie label used in docs and verbose output; type A keeps Table-style n = rank + 1.
LIE_LABEL = {
    "Lin": "A_{n-1}(q)", "Uni": "2A_{n-1}(q)", "OrthOdd": "B_n(q)",
    "Symp": "C_n(q)", "OrthPlus": "D_n(q)", "OrthMinus": "2D_n(q)",
    "G2": "G_2(q)", "E6": "E_6(q)", "TwE6": "2E_6(q)", "E7": "E_7(q)",
    "E8": "E_8(q)",
}

SPORADIC_ORDERS = {
    "M11": 7920,
    "M22": 443520,
    "M23": 10200960,
    "M24": 244823040,
    "J1": 175560,
    "J4": 86775571046077562880,
}

_TAGS = {
    "alt": "Alt", "lin": "Lin", "uni": "Uni", "orthB": "OrthOdd",
    "symp": "Symp", "orthDp": "OrthPlus", "orthDm": "OrthMinus",
    "g2": "G2", "e6": "E6", "2e6": "TwE6", "e7": "E7", "e8": "E8",
    "sporadic": "Sporadic",
}
_TAG_OF = {v: k for k, v in _TAGS.items()}


class SpecError(ValueError):
    """Unparseable or non-simple group spec."""


@dataclass(frozen=True)
class SimpleGroupSpec:
    family: str
    n: int | None = None
    q: int | None = None
    name: str | None = None

    @property
    def p(self) -> int:
        return is_prime_power(self.q)[0]

    @property
    def alpha(self) -> int:
        return is_prime_power(self.q)[1]

    def __str__(self) -> str:
        tag = _TAG_OF[self.family]
        if self.family == "Sporadic":
            return f"{tag}:{self.name}"
        if self.family == "Alt":
            return f"{tag}:{self.n}"
        if self.family in ("G2", "E6", "TwE6", "E7", "E8"):
            return f"{tag}:{self.q}"
        return f"{tag}:{self.n},{self.q}"


@dataclass(frozen=True)
class GroupOrder:
    value: int
    factorization: Factorization = field(repr=False)

    @property
    def primes(self) -> PrimeSet:
        return self.factorization.primes


def parse_spec(text: str) -> SimpleGroupSpec:
    """Parse ``tag:args`` per the shared CLI grammar, then validate."""
    m = re.fullmatch(r"\s*([A-Za-z0-9]+):([A-Za-z0-9,\s]+?)\s*", text)
    if not m:
        raise SpecError(f"cannot parse group spec {text!r} (expected tag:args)")
    tag, args = m.group(1), m.group(2)
    if tag not in _TAGS:
        raise SpecError(f"unknown group tag {tag!r} at position 0")
    family = _TAGS[tag]
    if family == "Sporadic":
        return validate(SimpleGroupSpec("Sporadic", name=args.strip().upper()))
    try:
        nums = [int(a) for a in args.split(",")]
    except ValueError:
        raise SpecError(f"non-integer argument in {text!r} at position {len(tag) + 1}")
    if family == "Alt":
        if len(nums) != 1:
            raise SpecError("alt takes one argument")
        return validate(SimpleGroupSpec("Alt", n=nums[0]))
    if family in ("G2", "E6", "TwE6", "E7", "E8"):
        if len(nums) != 1:
            raise SpecError(f"{tag} takes one argument q")
        return validate(SimpleGroupSpec(family, q=nums[0]))
    if len(nums) != 2:
        raise SpecError(f"{tag} takes two arguments n,q")
    return validate(SimpleGroupSpec(family, n=nums[0], q=nums[1]))


def validate(spec: SimpleGroupSpec) -> SimpleGroupSpec:
    """Return spec unchanged if it names a simple group, else raise SpecError."""
    f, n, q = spec.family, spec.n, spec.q
    if f not in FAMILIES:
        raise SpecError(f"unknown family {f!r}")
    if f == "Sporadic":
        if spec.name not in SPORADIC_ORDERS:
            raise SpecError(f"unsupported sporadic group {spec.name!r}")
        return spec
    if f == "Alt":
        if n is None or n < 5:
            raise SpecError(f"Alt(n) needs n >= 5, got {n}")
        return spec
    if q is None or is_prime_power(q) is None:
        raise SpecError(f"q={q} is not a prime power")
    if f == "Lin":
        if n < 2:
            raise SpecError("Lin(n,q) needs n >= 2")
        if n == 2 and q < 4:
            raise SpecError(f"Lin(2,{q}) is solvable")
    elif f == "Uni":
        if n < 3:
            raise SpecError("Uni(n,q) needs n >= 3")
        if (n, q) == (3, 2):
            raise SpecError("Uni(3,2) is solvable (order 72)")
    elif f in ("OrthOdd", "Symp"):
        if n < 2:
            raise SpecError(f"{f}(n,q) needs n >= 2")
        if (n, q) == (2, 2):
            raise SpecError(f"{f}(2,2) is not simple")
    elif f in ("OrthPlus", "OrthMinus"):
        if n < 4:
            raise SpecError(f"{f}(n,q) needs n >= 4")
    elif f == "G2":
        if q < 3:
            raise SpecError("G2(q) needs q >= 3")
    return spec


@lru_cache(maxsize=None)
def _cyclotomic_factorization(k: int, q: int) -> Factorization:
    return factorize(cyclotomic_eval(k, q))


def _minus_one(q: int, d: int) -> Factorization:
    # q^d - 1 = prod_{k | d} Phi_k(q)
    out = Factorization()
    for k in divisors(d):
        out = out * _cyclotomic_factorization(k, q)
    return out


def _plus_one(q: int, d: int) -> Factorization:
    # q^d + 1 = prod over k | 2d with k not dividing d
    out = Factorization()
    for k in divisors(2 * d):
        if d % k:
            out = out * _cyclotomic_factorization(k, q)
    return out


def order_terms(spec: SimpleGroupSpec) -> tuple[int, list[tuple[int, int]], int]:
    """(q-exponent, [(d, sign)], centre) with |S| = q^e * prod(q^d + sign) / centre.

    sign is -1 for a ``q^d - 1`` term and +1 for ``q^d + 1``.
    """
    f, n, q = spec.family, spec.n, spec.q
    if f == "Lin":
        return n * (n - 1) // 2, [(i, -1) for i in range(2, n + 1)], gcd(n, q - 1)
    if f == "Uni":
        terms = [(i, -1 if i % 2 == 0 else 1) for i in range(2, n + 1)]
        return n * (n - 1) // 2, terms, gcd(n, q + 1)
    if f in ("OrthOdd", "Symp"):
        return n * n, [(2 * i, -1) for i in range(1, n + 1)], gcd(2, q - 1)
    if f == "OrthPlus":
        terms = [(n, -1)] + [(2 * i, -1) for i in range(1, n)]
        return n * (n - 1), terms, gcd(4, q**n - 1)
    if f == "OrthMinus":
        terms = [(n, 1)] + [(2 * i, -1) for i in range(1, n)]
        return n * (n - 1), terms, gcd(4, q**n + 1)
    if f == "G2":
        return 6, [(6, -1), (2, -1)], 1
    if f == "E6":
        return 36, [(d, -1) for d in (12, 9, 8, 6, 5, 2)], gcd(3, q - 1)
    if f == "TwE6":
        return 36, [(12, -1), (9, 1), (8, -1), (6, -1), (5, 1), (2, -1)], gcd(3, q + 1)
    if f == "E7":
        return 63, [(d, -1) for d in (2, 6, 8, 10, 12, 14, 18)], gcd(2, q - 1)
    if f == "E8":
        return 120, [(d, -1) for d in (2, 8, 12, 14, 18, 20, 24, 30)], 1
    raise ValueError(f"no Lie-type order formula for {f}")


@lru_cache(maxsize=None)
def order(spec: SimpleGroupSpec) -> GroupOrder:
    """Exact order of the simple group named by a validated spec."""
    if spec.family == "Sporadic":
        v = SPORADIC_ORDERS[spec.name]
        return GroupOrder(v, factorize(v))
    if spec.family == "Alt":
        f = Factorization()
        for k in range(2, spec.n + 1):
            f = f * factorize(k)
        f = f / factorize(2)
        return GroupOrder(f.value, f)
    e, terms, centre = order_terms(spec)
    p, a = spec.p, spec.alpha
    f = Factorization(((p, e * a),))
    for d, sign in terms:
        f = f * (_minus_one(spec.q, d) if sign < 0 else _plus_one(spec.q, d))
    f = f / factorize(centre)
    return GroupOrder(f.value, f)


def prime_set(spec: SimpleGroupSpec) -> PrimeSet:
    return order(spec).primes


def order_pi_part(spec: SimpleGroupSpec, pi) -> int:
    f = order(spec).factorization
    out = 1
    for p in pi:
        out *= p ** f.exponent(p)
    return out


def order_formula_value(spec: SimpleGroupSpec) -> int:
    """Direct evaluation of the order formula, independent of factorization."""
    e, terms, centre = order_terms(spec)
    v = spec.q**e
    for d, sign in terms:
        v *= spec.q**d + sign
    assert v % centre == 0
    return v // centre


def sweep_specs(family: str, n_range=None, q_max: int = 9):
    """Yield every valid spec of a Lie family with n in n_range and q <= q_max."""
    qs = [q for q in range(2, q_max + 1) if is_prime_power(q)]
    ns = list(n_range) if n_range is not None else [None]
    for n in ns:
        for q in qs:
            try:
                yield validate(SimpleGroupSpec(family, n=n, q=q))
            except SpecError:
                continue


def sporadic_specs():
    return [SimpleGroupSpec("Sporadic", name=k) for k in SPORADIC_ORDERS]


__all__ = [
    "SimpleGroupSpec", "GroupOrder", "SpecError", "parse_spec", "validate",
    "order", "prime_set", "order_pi_part", "order_formula_value",
    "sweep_specs", "sporadic_specs",
]
