"""Small finite fields F_{p^a} and matrices over them.

Field elements are ints 0..q-1 whose base-p digits are the coefficients of
a polynomial of degree < a (constant term first), reduced modulo the least
monic irreducible of degree a. Least means smallest base-p encoding of the
non-leading coefficients. Arithmetic goes through precomputed q x q tables.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from ..arith import is_prime_power


def _poly_mulmod(a, b, modulus, p):
    """a*b mod (monic) modulus; coefficient lists, constant term first."""
    deg = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for k in range(len(out) - 1, deg - 1, -1):
        c = out[k]
        if c:
            for j in range(deg + 1):
                out[k - deg + j] = (out[k - deg + j] - c * modulus[j]) % p
    return (out + [0] * deg)[:deg]


def _has_root_or_factor(poly, p) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = list(poly)
            for k in range(deg, d - 1, -1):
                c = rem[k]
                if c:
                    for j in range(d + 1):
                        rem[k - d + j] = (rem[k - d + j] - c * divisor[j]) % p
            if not any(rem[:d]):
                return True
    return False


def least_irreducible(p: int, a: int) -> list[int]:
    for code in range(p**a):
        low = [(code // p**i) % p for i in range(a)]
        poly = low + [1]
        if a == 1 or not _has_root_or_factor(poly, p):
            return poly
    raise ArithmeticError("no irreducible polynomial found")


class FiniteField:
    def __init__(self, q: int):
        pp = is_prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        self.q, (self.p, self.a) = q, pp
        p, a = self.p, self.a
        self.modulus = least_irreducible(p, a)
        coeffs = [[(x // p**i) % p for i in range(a)] for x in range(q)]
        weights = [p**i for i in range(a)]
        enc = lambda c: sum(ci * w for ci, w in zip(c, weights))  # noqa: E731
        self.add_table = np.array(
            [[enc([(x + y) % p for x, y in zip(cx, cy)]) for cy in coeffs] for cx in coeffs],
            dtype=np.int64)
        if a == 1:
            self.mul_table = np.array([[(x * y) % p for y in range(q)] for x in range(q)],
                                      dtype=np.int64)
        else:
            self.mul_table = np.array(
                [[enc(_poly_mulmod(cx, cy, self.modulus, p)) for cy in coeffs] for cx in coeffs],
                dtype=np.int64)
        self.neg_table = np.array([enc([(-c) % p for c in cx]) for cx in coeffs], dtype=np.int64)
        self.inv_table = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            self.inv_table[x] = int(np.flatnonzero(self.mul_table[x] == 1)[0])
        self.primitive = self._find_primitive()

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def add(self, x, y):
        return self.add_table[x, y]

    def sub(self, x, y):
        return self.add_table[x, self.neg_table[y]]

    def mul(self, x, y):
        return self.mul_table[x, y]

    def neg(self, x):
        return self.neg_table[x]

    def inv(self, x):
        if np.any(np.asarray(x) == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[x]

    def power(self, x: int, k: int) -> int:
        out, base = 1, int(x)
        while k:
            if k & 1:
                out = int(self.mul_table[out, base])
            base = int(self.mul_table[base, base])
            k >>= 1
        return out

    def mult_order(self, x: int) -> int:
        k, y = 1, int(x)
        while y != 1:
            y = int(self.mul_table[y, x])
            k += 1
        return k

    def _find_primitive(self) -> int:
        for x in range(1, self.q):
            if self.mult_order(x) == self.q - 1:
                return x
        raise ArithmeticError("no primitive element")

    def frobenius_power(self, k: int) -> np.ndarray:
        """Table of x -> x^(p^k)."""
        e = self.p**k
        return np.array([self.power(x, e) for x in range(self.q)], dtype=np.int64)

    def prime_field_basis(self) -> list[int]:
        return [self.p**i for i in range(self.a)]  # the monomials 1, t, ..., t^(a-1)


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    return FiniteField(q)


# --- matrices: tuples of row tuples of field codes ---------------------------


def mat_mul(F: FiniteField, A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            s = 0
            for t in range(m):
                s = int(F.add_table[s, F.mul_table[A[i][t], B[t][j]]])
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def det(F: FiniteField, A) -> int:
    n = len(A)
    if n == 1:
        return A[0][0]
    total = 0
    for j in range(n):
        minor = tuple(tuple(r[c] for c in range(n) if c != j) for r in A[1:])
        term = int(F.mul_table[A[0][j], det(F, minor)])
        if j % 2:
            term = int(F.neg_table[term])
        total = int(F.add_table[total, term])
    return total


def identity(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def all_vectors(F: FiniteField, n: int) -> np.ndarray:
    """Every vector of F^n, row i encoding i in base q (first coordinate fastest)."""
    idx = np.arange(F.q**n)
    return np.stack([(idx // F.q**i) % F.q for i in range(n)], axis=1)


def vector_codes(F: FiniteField, V: np.ndarray) -> np.ndarray:
    return sum(V[:, i] * F.q**i for i in range(V.shape[1]))


def act_on_vectors(F: FiniteField, A, V: np.ndarray) -> np.ndarray:
    """Row vectors V times matrix A."""
    n = len(A)
    out = np.zeros_like(V)
    for j in range(n):
        col = np.zeros(len(V), dtype=np.int64)
        for i in range(n):
            col = F.add_table[col, F.mul_table[V[:, i], A[i][j]]]
        out[:, j] = col
    return out


def normalize_projective(F: FiniteField, V: np.ndarray) -> np.ndarray:
    """Scale each nonzero row so its first nonzero coordinate is 1."""
    V = V.copy()
    lead = np.zeros(len(V), dtype=np.int64)
    found = np.zeros(len(V), dtype=bool)
    for i in range(V.shape[1]):
        pick = (~found) & (V[:, i] != 0)
        lead[pick] = V[pick, i]
        found |= pick
    if not found.all():
        raise ValueError("zero vector has no projective point")
    scale = F.inv_table[lead]
    for i in range(V.shape[1]):
        V[:, i] = F.mul_table[V[:, i], scale]
    return V
