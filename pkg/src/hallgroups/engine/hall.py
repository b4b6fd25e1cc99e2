"""Sylow and Hall subgroup search, conjugacy of subgroups, exhaustive lattices."""
from __future__ import annotations

from collections import Counter

import numpy as np

from ..arith import PrimeSet, factorize, pi_part, prime_divisors
from .group import FiniteGroup, Subgroup


def _prime_power_base(n: int) -> int | None:
    if n <= 1:
        return None
    f = factorize(int(n))
    return f.pairs[0][0] if len(f.pairs) == 1 else None


def normalizer(G: FiniteGroup, H: Subgroup) -> np.ndarray:
    """Indices g with H^g = H."""
    g = np.arange(G.order, dtype=np.int64)
    ok = np.ones(G.order, dtype=bool)
    for h in H.gens:
        ok &= H.mask[G.conj(h, g)]
    return np.flatnonzero(ok)


def conjugate(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    elems = np.sort(G.conj(H.elements, g))
    return Subgroup(G, elems, tuple(int(x) for x in G.conj(list(H.gens), g)) if H.gens else ())


def orbit_lengths(G: FiniteGroup, H: Subgroup) -> tuple[int, ...]:
    d = G.degree
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in H.gens:
        for i, j in enumerate(G.perms[g]):
            a, b = find(i), find(int(j))
            if a != b:
                parent[a] = b
    return tuple(sorted(Counter(find(i) for i in range(d)).values()))


def invariant(G: FiniteGroup, H: Subgroup) -> tuple:
    """Cheap conjugacy invariant used to bucket candidates before exact tests."""
    hist = tuple(sorted(Counter(G.element_orders[H.elements].tolist()).items()))
    return H.order, hist, orbit_lengths(G, H)


def are_conjugate(G: FiniteGroup, H1: Subgroup, H2: Subgroup) -> bool:
    if H1.order != H2.order:
        return False
    if H1 == H2:
        return True
    if invariant(G, H1) != invariant(G, H2):
        return False
    g = np.arange(G.order, dtype=np.int64)
    ok = np.ones(G.order, dtype=bool)
    for h in H1.gens:
        cand = np.flatnonzero(ok)
        ok[cand] = H2.mask[G.conj(h, cand)]
        if not ok.any():
            return False
    return bool(ok.any())


def conjugacy_class(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    """All distinct conjugates of H, one per right coset of its normalizer."""
    N = normalizer(G, H)
    todo = np.ones(G.order, dtype=bool)
    out = []
    for g in range(G.order):
        if not todo[g]:
            continue
        todo[G.mul(N, g)] = False  # the coset N*g gives the same conjugate
        out.append(conjugate(G, H, g))
    return out


class ClassCollector:
    """Keeps one representative per conjugacy class of subgroups."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.buckets: dict[tuple, list[Subgroup]] = {}
        self.reps: list[Subgroup] = []

    def add(self, H: Subgroup) -> bool:
        key = invariant(self.G, H)
        bucket = self.buckets.setdefault(key, [])
        for K in bucket:
            if are_conjugate(self.G, K, H):
                return False
        bucket.append(H)
        self.reps.append(H)
        return True


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown from an element of maximal p-power order.

    A non-Sylow p-subgroup K always has a p-element of N_G(K) outside K, and
    adjoining it keeps a p-group, so each step is one closure.
    """
    target = pi_part(G.order, [p])
    if target == 1:
        return G.trivial
    orders = G.element_orders
    is_p = np.array([_prime_power_base(o) == p for o in range(orders.max() + 1)])
    p_elems = np.flatnonzero(is_p[orders])
    start = int(p_elems[np.argmax(orders[p_elems])])
    K = G.closure([start])
    while K.order < target:
        N = normalizer(G, K)
        cand = N[is_p[orders[N]] & ~K.mask[N]]
        L = G.extend(K, int(cand[0]), cutoff=target)
        assert L is not None and target % L.order == 0
        K = L
    return K


def _double_coset(G: FiniteGroup, K: Subgroup, x: int) -> np.ndarray:
    kx = G.mul(K.elements, x)
    return G.mul(np.repeat(kx, K.order), np.tile(K.elements, K.order))


def hall_subgroups(G: FiniteGroup, pi) -> list[Subgroup]:
    """One representative of every conjugacy class of Hall pi-subgroups of G.

    Grows subgroups from a Sylow p-subgroup (p in pi with the largest p-part)
    by adjoining one pi-element of prime-power order at a time, keeping only
    closures whose order divides |G|_pi, and deduplicating by conjugacy at
    every level. Empty iff G has no Hall pi-subgroup.
    """
    pi = PrimeSet(pi)
    n = G.order
    m = pi_part(n, pi)
    if m == 1:
        return [G.trivial]
    if m == n:
        return [G.whole]
    present = [p for p in pi if n % p == 0]
    p = max(present, key=lambda r: (pi_part(n, [r]), -r))
    P = sylow(G, p)
    if P.order == m:
        return [P]
    orders = G.element_orders
    max_order = int(orders.max())
    good = np.zeros(max_order + 1, dtype=bool)
    for o in range(2, max_order + 1):
        r = _prime_power_base(o)
        good[o] = r is not None and r in pi and m % o == 0
    cand = np.flatnonzero(good[orders])

    found = ClassCollector(G)
    frontier = [P]
    while frontier:
        nxt = ClassCollector(G)
        for K in frontier:
            todo = np.zeros(n, dtype=bool)
            todo[cand] = True
            todo[K.elements] = False
            for x in cand:
                if not todo[x]:
                    continue
                todo[_double_coset(G, K, int(x))] = False  # <K, kxk'> = <K, x>
                L = G.extend(K, int(x), cutoff=m)
                if L is None or m % L.order:
                    continue
                (found if L.order == m else nxt).add(L)
        frontier = nxt.reps
    return sorted(found.reps, key=lambda H: H.elements.tolist())


def is_hall(G: FiniteGroup, H: Subgroup, pi) -> bool:
    pi = PrimeSet(pi)
    index = G.order // H.order
    return prime_divisors(H.order) <= pi and all(index % p for p in pi)


def cyclic_generators(G: FiniteGroup) -> list[int]:
    """One generator for each cyclic subgroup (besides the trivial one)."""
    seen = np.zeros(G.order, dtype=bool)
    seen[G.identity] = True
    out = []
    for x in np.argsort(-G.element_orders, kind="stable"):
        x = int(x)
        if seen[x]:
            continue
        C = G.closure([x])
        o = C.order
        # generators of <x> are the powers x^k with gcd(k, o) = 1
        cur, k = x, 1
        for k in range(1, o + 1):
            if np.gcd(k, o) == 1:
                seen[cur] = True
            cur = int(G.mul(cur, x)[0])
        out.append(x)
    return sorted(out)


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of G, by cyclic extension from the trivial group."""
    gens = cyclic_generators(G)
    seen = {G.trivial.key(): G.trivial}
    layer = [G.trivial]
    while layer:
        nxt = []
        for H in layer:
            for x in gens:
                if x in H:
                    continue
                L = G.extend(H, x)
                k = L.key()
                if k not in seen:
                    seen[k] = L
                    nxt.append(L)
        layer = nxt
    return sorted(seen.values(), key=lambda H: (H.order, H.elements.tolist()))


def subgroup_classes(G: FiniteGroup, subgroups) -> list[list[Subgroup]]:
    """Partition subgroups into G-conjugacy classes (exact, set based)."""
    by_key = {H.key(): H for H in subgroups}
    done: set[bytes] = set()
    classes = []
    for H in subgroups:
        if H.key() in done:
            continue
        cls = conjugacy_class(G, H)
        for C in cls:
            done.add(C.key())
        classes.append([by_key.get(C.key(), C) for C in cls])
    return classes


def hall_classes_exhaustive(G: FiniteGroup, pi, subgroups=None) -> list[list[Subgroup]]:
    """Hall pi-subgroup classes read off the full subgroup lattice."""
    m = pi_part(G.order, PrimeSet(pi))
    subs = all_subgroups(G) if subgroups is None else subgroups
    return subgroup_classes(G, [H for H in subs if H.order == m])
