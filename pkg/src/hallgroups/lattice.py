"""The family Pi(G) of prime sets admitting Hall subgroups, and checks on it.

Meet closure of Pi(G) is the statement E_pi1 & E_pi2 <= E_(pi1 & pi2); a
finite meet-semilattice with a top element is a lattice, but its join is in
general not the set union.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .arith import PrimeSet, pi_part, prime_divisors
from .engine.group import FiniteGroup, Subgroup
from .engine.hall import conjugacy_class, hall_subgroups
from .engine.structure import is_solvable

_HALL_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, dict]" = weakref.WeakKeyDictionary()


def group_primes(G: FiniteGroup) -> PrimeSet:
    return prime_divisors(G.order)


def hall_cached(G: FiniteGroup, pi) -> list[Subgroup]:
    """hall_subgroups memoised per group on tau = pi & pi(G)."""
    tau = PrimeSet(pi) & group_primes(G)
    cache = _HALL_CACHE.setdefault(G, {})
    if tau not in cache:
        cache[tau] = hall_subgroups(G, tau)
    return cache[tau]


@dataclass(frozen=True)
class PiFamily:
    base: PrimeSet
    members: frozenset = field(default_factory=frozenset)

    def __contains__(self, pi) -> bool:
        return (PrimeSet(pi) & self.base) in self.members

    def sorted_members(self) -> list[PrimeSet]:
        return sorted(self.members, key=lambda s: (len(s), s.primes))

    def as_lists(self) -> list[list[int]]:
        return [list(s.primes) for s in self.sorted_members()]

    def upper_bounds(self, a, b) -> list[PrimeSet]:
        u = (PrimeSet(a) | PrimeSet(b)) & self.base
        return [s for s in self.members if u <= s]

    def join(self, a, b) -> PrimeSet | None:
        """Least member containing a and b, or None if there is no unique one."""
        ups = self.upper_bounds(a, b)
        least = [s for s in ups if all(s <= t for t in ups)]
        return least[0] if len(least) == 1 else None

    def meet(self, a, b) -> PrimeSet:
        return PrimeSet(a) & PrimeSet(b) & self.base

    def covers(self) -> list[tuple[PrimeSet, PrimeSet]]:
        """Covering pairs (lower, upper) of the Hasse diagram."""
        ms = self.sorted_members()
        out = []
        for a in ms:
            for b in ms:
                if a < b and not any(a < c < b for c in ms):
                    out.append((a, b))
        return out


def pi_family(G: FiniteGroup) -> PiFamily:
    base = group_primes(G)
    members = frozenset(t for t in base.subsets() if hall_cached(G, t))
    return PiFamily(base, members)


@dataclass(frozen=True)
class Check:
    holds: bool
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.holds


def is_meet_closed(F: PiFamily) -> Check:
    for a, b in combinations(F.sorted_members(), 2):
        if (a & b) not in F.members:
            return Check(False, (a, b))
    return Check(True)


def is_lattice(F: PiFamily) -> Check:
    """Meet closure plus a unique least upper bound for every pair."""
    if F.base not in F.members or PrimeSet() not in F.members:
        return Check(False, ("missing bottom or top",))
    mc = is_meet_closed(F)
    if not mc:
        return mc
    for a, b in combinations(F.sorted_members(), 2):
        if F.join(a, b) is None:
            return Check(False, (a, b))
    return Check(True)


VACUOUS, VERIFIED, COUNTEREXAMPLE = "vacuous", "verified", "COUNTEREXAMPLE"


def theorem1_check(G: FiniteGroup, pi, l: int, strict_l: bool = True) -> str:
    """Hall rho-subgroups for every l-subset rho of pi force a solvable Hall pi-subgroup."""
    pi = PrimeSet(pi)
    k = len(pi)
    if k < 3:
        raise ValueError("theorem1_check needs |pi| >= 3")
    upper = k - 1 if strict_l else k
    if not 2 <= l <= upper:
        raise ValueError(f"l={l} outside 2..{upper}")
    for rho in combinations(pi.primes, l):
        if not hall_cached(G, rho):
            return VACUOUS
    if any(is_solvable(H) for H in hall_cached(G, pi)):
        return VERIFIED
    return COUNTEREXAMPLE


@dataclass(frozen=True)
class IntersectionReport:
    exists_pair: bool
    pairs_checked: int
    witnesses: tuple[tuple[int, int], ...] = ()
    sizes: tuple[int, int] = (0, 0)


def _class_union(G: FiniteGroup, reps) -> list[Subgroup]:
    out = []
    for H in reps:
        out.extend(conjugacy_class(G, H))
    return out


def intersection_witness(G: FiniteGroup, pi1, pi2, max_witnesses: int = 5) -> IntersectionReport:
    """Is some Hall pi1 & pi2 subgroup an intersection H1 & H2 of Hall pi1-, pi2-subgroups?

    Ranges over every member of every class on both sides.
    """
    pi1, pi2 = PrimeSet(pi1), PrimeSet(pi2)
    A = _class_union(G, hall_cached(G, pi1))
    B = _class_union(G, hall_cached(G, pi2))
    if not A or not B:
        raise ValueError("both prime sets must belong to Pi(G)")
    target = pi_part(G.order, pi1 & pi2)
    ma = np.stack([H.mask for H in A]).astype(np.int32)
    mb = np.stack([H.mask for H in B]).astype(np.int32)
    counts = ma @ mb.T
    hits = np.argwhere(counts == target)
    wit = tuple((int(i), int(j)) for i, j in hits[:max_witnesses])
    return IntersectionReport(bool(len(hits)), counts.size, wit, (len(A), len(B)))
