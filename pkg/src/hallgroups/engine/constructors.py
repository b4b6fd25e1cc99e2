"""Concrete groups for brute force: symmetric, alternating, dihedral, M11 and
small matrix groups (GL_2, SL_2, GU_2, PSL_2, PGL_2, PSL_3, PSU_3).

Linear groups act on nonzero vectors, projective ones on projective points;
either way the result is a FiniteGroup of permutations.
"""
from __future__ import annotations

import math
import re
from functools import lru_cache
from itertools import product

import numpy as np

from ..arith import is_prime_power
from .fields import (
    GF,
    act_on_vectors,
    all_vectors,
    det,
    identity,
    normalize_projective,
    vector_codes,
)
from .group import DEFAULT_CAP, CapExceeded, FiniteGroup, closure


def cycle_perm(n: int, *cycles) -> list[int]:
    p = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            p[x] = cyc[(i + 1) % len(cyc)]
    return p


def _check_cap(order: int, what: str, cap: int) -> None:
    if order > cap:
        raise CapExceeded(f"{what} (order {order})", cap)


def sym(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _check_cap(math.factorial(n), f"Sym({n})", cap)
    if n < 2:
        return closure([], degree=max(n, 1), name=f"Sym{n}")
    gens = [cycle_perm(n, (0, 1)), cycle_perm(n, tuple(range(n)))]
    return closure(gens, degree=n, cap=cap, name=f"Sym{n}")


def alt(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _check_cap(max(math.factorial(n) // 2, 1), f"Alt({n})", cap)
    if n < 3:
        return closure([], degree=max(n, 1), name=f"Alt{n}")
    long = tuple(range(n)) if n % 2 else tuple(range(1, n))
    gens = [cycle_perm(n, (0, 1, 2)), cycle_perm(n, long)]
    return closure(gens, degree=n, cap=cap, name=f"Alt{n}")


def dihedral(m: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Dihedral group of order 2m."""
    if m == 1:
        return closure([[1, 0]], name="D2")
    if m == 2:
        return closure([[1, 0, 3, 2], [2, 3, 0, 1]], name="D4")
    rot = [(i + 1) % m for i in range(m)]
    ref = [(-i) % m for i in range(m)]
    return closure([rot, ref], degree=m, cap=cap, name=f"D{2 * m}")


def cyclic(m: int) -> FiniteGroup:
    return closure([[(i + 1) % m for i in range(m)]], degree=m, name=f"C{m}")


def m11(cap: int = DEFAULT_CAP) -> FiniteGroup:
    a = cycle_perm(11, tuple(range(11)))
    b = cycle_perm(11, (2, 6, 10, 7), (3, 9, 4, 5))
    return closure([a, b], degree=11, cap=cap, name="M11")


def direct_product(*groups: FiniteGroup, name: str = "") -> FiniteGroup:
    """Direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens, shift = [], 0
    for G in groups:
        for g in G.gens:
            p = list(range(degree))
            for i, x in enumerate(G.perms[g]):
                p[shift + i] = shift + int(x)
            gens.append(p)
        shift += G.degree
    return closure(gens, degree=degree, name=name or "x".join(G.name for G in groups))


def point_stabilizer(G: FiniteGroup, point: int = 0) -> np.ndarray:
    return np.flatnonzero(G.perms[:, point] == point)


# --- matrix groups -----------------------------------------------------------


def _sl_generators(F, n):
    """Elementary transvections I + lam*E_ij, lam over an F_p-basis of F."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for lam in F.prime_field_basis():
                m = [list(r) for r in identity(n)]
                m[i][j] = lam
                gens.append(tuple(tuple(r) for r in m))
    return gens


class _Action:
    """Permutation action of matrices on vectors or projective points."""

    def __init__(self, F, n, projective=False, points=None):
        self.F, self.n, self.projective = F, n, projective
        if points is None:
            V = all_vectors(F, n)[1:]
            if projective:
                V = np.unique(normalize_projective(F, V), axis=0)
        else:
            V = points
        self.points = V
        codes = vector_codes(F, V)
        self.lookup = np.full(F.q**n, -1, dtype=np.int64)
        self.lookup[codes] = np.arange(len(V))

    def perm(self, A) -> np.ndarray:
        W = act_on_vectors(self.F, A, self.points)
        if self.projective:
            W = normalize_projective(self.F, W)
        idx = self.lookup[vector_codes(self.F, W)]
        if (idx < 0).any():
            raise ValueError("point set is not invariant under the matrix")
        return idx


def _require_q(q: int) -> None:
    if is_prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")


def gl2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _require_q(q)
    _check_cap(q * (q * q - 1) * (q - 1), f"GL2({q})", cap)
    F = GF(q)
    act = _Action(F, 2)
    mats = _sl_generators(F, 2) + [((F.primitive, 0), (0, 1))]
    return closure([act.perm(A) for A in mats], cap=cap, name=f"GL2({q})")


def sl2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _require_q(q)
    _check_cap(q * (q * q - 1), f"SL2({q})", cap)
    F = GF(q)
    act = _Action(F, 2)
    return closure([act.perm(A) for A in _sl_generators(F, 2)], cap=cap, name=f"SL2({q})")


def psl2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _require_q(q)
    F = GF(q)
    act = _Action(F, 2, projective=True)
    return closure([act.perm(A) for A in _sl_generators(F, 2)], cap=cap, name=f"PSL2({q})")


def pgl2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _require_q(q)
    F = GF(q)
    act = _Action(F, 2, projective=True)
    mats = _sl_generators(F, 2) + [((F.primitive, 0), (0, 1))]
    return closure([act.perm(A) for A in mats], cap=cap, name=f"PGL2({q})")


def psl3(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _require_q(q)
    order = q**3 * (q**2 - 1) * (q**3 - 1) // math.gcd(3, q - 1)
    _check_cap(order, f"PSL3({q})", cap)
    F = GF(q)
    act = _Action(F, 3, projective=True)
    return closure([act.perm(A) for A in _sl_generators(F, 3)], cap=cap, name=f"PSL3({q})")


def _unitary_rows(F, n, conj):
    """Vectors of hermitian norm 1 and the pairwise form matrix."""
    V = all_vectors(F, n)[1:]
    form = np.zeros((len(V), len(V)), dtype=np.int64)
    for t in range(n):
        form = F.add_table[form, F.mul_table[V[:, t][:, None], conj[V[:, t]][None, :]]]
    norm1 = np.flatnonzero(np.diag(form) == 1)
    return V[norm1], form[np.ix_(norm1, norm1)]


def _unitary_matrices(q: int, n: int, special: bool):
    F = GF(q * q)
    conj = F.frobenius_power(F.a // 2)  # x -> x^q
    R, form = _unitary_rows(F, n, conj)
    orth = form == 0
    mats = []

    def extend(rows):
        if len(rows) == n:
            A = tuple(tuple(int(x) for x in R[r]) for r in rows)
            if not special or det(F, A) == 1:
                mats.append(A)
            return
        cand = np.ones(len(R), dtype=bool)
        for r in rows:
            cand &= orth[r]
        for r in np.flatnonzero(cand):
            extend(rows + [int(r)])

    extend([])
    return F, R, mats


def _from_matrices(F, mats, act, name, cap) -> FiniteGroup:
    perms = np.unique(np.stack([act.perm(A) for A in mats]), axis=0)
    _check_cap(len(perms), name, cap)
    G = FiniteGroup(perms, name=name)
    G.gens = G.from_elements(np.arange(G.order)).gens
    return G


def gu2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """GU_2(q) inside GL_2(q^2), preserving x1*y1^q + x2*y2^q; acts on norm-1 vectors."""
    _require_q(q)
    _check_cap(q * (q * q - 1) * (q + 1), f"GU2({q})", cap)
    F, R, mats = _unitary_matrices(q, 2, special=False)
    return _from_matrices(F, mats, _Action(F, 2, points=R), f"GU2({q})", cap)


def psu3(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _require_q(q)
    _check_cap(q**3 * (q**2 - 1) * (q**3 + 1), f"SU3({q})", cap)
    F, _, mats = _unitary_matrices(q, 3, special=True)
    return _from_matrices(F, mats, _Action(F, 3, projective=True), f"PSU3({q})", cap)


# --- spec strings ------------------------------------------------------------

_BUILDERS = {
    "sym": sym, "alt": alt, "dih": dihedral, "dihedral": dihedral,
    "gl2": gl2, "sl2": sl2, "gu2": gu2, "psl2": psl2, "pgl2": pgl2,
    "psl3": psl3, "psu3": psu3, "cyc": cyclic,
}


@lru_cache(maxsize=64)
def build(text: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a concrete group from ``sym:6``, ``sl2:7``, ``m11``, ``lin:2,11`` ...

    Catalog specs are accepted where a construction exists: ``alt:n``,
    ``lin:2,q``, ``lin:3,q``, ``uni:3,q`` and ``sporadic:M11``.
    """
    t = text.strip()
    if t.lower() in ("m11", "sporadic:m11"):
        return m11(cap)
    m = re.fullmatch(r"([A-Za-z0-9]+):(\d+)(?:,(\d+))?", t)
    if not m:
        raise ValueError(f"cannot build a concrete group from {text!r}")
    tag, a, b = m.group(1), int(m.group(2)), m.group(3)
    if tag == "lin" and b is not None:
        n, q = a, int(b)
        if n == 2:
            return psl2(q, cap)
        if n == 3:
            return psl3(q, cap)
        raise ValueError(f"no construction for lin:{n},{q}")
    if tag == "uni" and b is not None and a == 3:
        return psu3(int(b), cap)
    if tag in _BUILDERS and b is None:
        return _BUILDERS[tag](a, cap=cap) if tag != "cyc" else cyclic(a)
    raise ValueError(f"cannot build a concrete group from {text!r}")
