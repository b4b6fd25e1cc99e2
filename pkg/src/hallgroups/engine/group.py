"""Fully enumerated permutation groups and their subgroups.

Every concrete group (matrix groups included) is carried as a permutation
group. Composition is left to right: ``(x*y)[i] = y[x[i]]``.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from . import kernels

DEFAULT_CAP = 100_000


class CapExceeded(RuntimeError):
    """Raised instead of enumerating a group larger than the cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the enumeration cap of {cap} elements")
        self.cap = cap


def _choose_base(perms: np.ndarray) -> list[int]:
    n, d = perms.shape
    base: list[int] = []
    codes = np.zeros(n, dtype=np.int64)
    distinct = 1
    for i in range(d):
        if distinct == n:
            break
        _, new = np.unique(codes * d + perms[:, i], return_inverse=True)
        k = int(new.max()) + 1
        if k > distinct:
            base.append(i)
            codes, distinct = new.astype(np.int64).ravel(), k
    if distinct != n:
        raise ValueError("permutation rows are not distinct")
    return base


class FiniteGroup:
    """A finite permutation group with every element enumerated.

    Elements are numbered by the lexicographic order of their base images;
    ``perms[i]`` is element i. ``gens`` holds generator indices.
    """

    def __init__(self, perms, gens=(), name: str = ""):
        perms = np.ascontiguousarray(perms, dtype=np.uint16)
        if perms.ndim != 2:
            raise ValueError("perms must be a 2-d array")
        self.name = name
        d = perms.shape[1]
        base = _choose_base(perms)
        if len(base) * np.log2(max(d, 2)) >= 62:
            raise ValueError("base images do not fit an int64 key")
        weights = np.array([d ** (len(base) - 1 - j) for j in range(len(base))], dtype=np.int64)
        keys = perms[:, base].astype(np.int64) @ weights
        order = np.argsort(keys, kind="stable")
        self.perms = np.ascontiguousarray(perms[order])
        self.keys = np.ascontiguousarray(keys[order])
        self.base = np.ascontiguousarray(base, dtype=np.intp)
        self.weights = weights
        self.identity = self.index_of(np.arange(d))
        self.gens = tuple(sorted({self.index_of(g) for g in gens} - {self.identity}))

    # -- element level ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.keys)

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name or '?'} order={self.order} degree={self.degree}>"

    def index_of(self, perm) -> int:
        perm = np.asarray(perm)
        key = int(perm[self.base].astype(np.int64) @ self.weights)
        i = int(np.searchsorted(self.keys, key))
        if i >= self.order or self.keys[i] != key or not np.array_equal(self.perms[i], perm):
            raise KeyError("permutation is not an element of this group")
        return i

    def mul(self, a, b) -> np.ndarray:
        """Indices of a*b elementwise, numpy broadcasting; scalars give shape (1,)."""
        a = np.atleast_1d(np.asarray(a, dtype=np.int64))
        b = np.atleast_1d(np.asarray(b, dtype=np.int64))
        a, b = np.broadcast_arrays(a, b)
        out = kernels.products(self.perms, self.base, self.weights, self.keys,
                               np.ascontiguousarray(a.ravel()), np.ascontiguousarray(b.ravel()))
        return np.asarray(out).reshape(a.shape)

    @cached_property
    def inverse(self) -> np.ndarray:
        n, d = self.perms.shape
        inv = np.empty_like(self.perms)
        inv[np.arange(n)[:, None], self.perms] = np.arange(d, dtype=np.uint16)
        key = inv[:, self.base].astype(np.int64) @ self.weights
        return np.searchsorted(self.keys, key)

    def conj(self, x, g) -> np.ndarray:
        """g^-1 x g for broadcast arrays x, g."""
        g = np.asarray(g, dtype=np.int64)
        return self.mul(self.mul(self.inverse[g], x), g)

    @cached_property
    def element_orders(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)
        orders = np.ones(self.order, dtype=np.int64)
        cur = idx.copy()
        alive = cur != self.identity
        k = 1
        while alive.any():
            k += 1
            live = np.flatnonzero(alive)
            cur[live] = self.mul(cur[live], idx[live])
            done = live[cur[live] == self.identity]
            orders[done] = k
            alive[done] = False
        return orders

    # -- subgroups ----------------------------------------------------------

    def closure(self, gens, seed=None, cutoff: int | None = None) -> "Subgroup | None":
        """<seed, gens> as a Subgroup, or None once it would exceed cutoff."""
        gens = tuple(int(g) for g in gens)
        if seed is None:
            seed = np.array([self.identity], dtype=np.int64)
        cutoff = self.order if cutoff is None else cutoff
        elems = kernels.closure(self.perms, self.base, self.weights, self.keys,
                                np.asarray(gens, dtype=np.int64),
                                np.ascontiguousarray(seed, dtype=np.int64), int(cutoff))
        if elems is None:
            return None
        return Subgroup(self, elems, tuple(g for g in gens if g != self.identity))

    def subgroup(self, gens) -> "Subgroup":
        return self.closure(gens)

    def extend(self, K: "Subgroup", x, cutoff: int | None = None) -> "Subgroup | None":
        return self.closure(K.gens + (int(x),), seed=K.elements, cutoff=cutoff)

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, np.arange(self.order, dtype=np.int64), self.gens)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, np.array([self.identity], dtype=np.int64), ())

    def from_elements(self, elems) -> "Subgroup":
        """Subgroup from a closed element set; generators are chosen greedily."""
        elems = np.unique(np.asarray(elems, dtype=np.int64))
        gens: list[int] = []
        H = self.trivial
        orders = self.element_orders
        for x in sorted(elems.tolist(), key=lambda e: (-orders[e], e)):
            if H.order == len(elems):
                break
            if x not in H:
                H = self.extend(H, x)
                gens.append(x)
        if H.order != len(elems):
            raise ValueError("element set is not closed")
        return H


class Subgroup:
    """Subgroup of an enumerated group: sorted element indices plus generators."""

    __slots__ = ("group", "elements", "gens", "_mask", "__weakref__")

    def __init__(self, group: FiniteGroup, elements, gens=()):
        self.group = group
        self.elements = np.asarray(elements, dtype=np.int64)
        self.gens = tuple(int(g) for g in gens)
        self._mask = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(self.group.order, dtype=bool)
            m[self.elements] = True
            self._mask = m
        return self._mask

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def contains_all(self, xs) -> bool:
        return bool(self.mask[np.asarray(xs, dtype=np.int64)].all())

    def key(self) -> bytes:
        return self.elements.tobytes()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.group is self.group
                and np.array_equal(other.elements, self.elements))

    def __hash__(self) -> int:
        return hash((id(self.group), self.key()))

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.group.name or 'G'}>"

    def perms(self) -> np.ndarray:
        return self.group.perms[self.elements]

    def intersection(self, other: "Subgroup") -> np.ndarray:
        return self.elements[other.mask[self.elements]]


def closure(gens, degree: int | None = None, cap: int = DEFAULT_CAP, name: str = "") -> FiniteGroup:
    """Enumerate <gens> for permutations given as image sequences (BFS)."""
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    ident = np.arange(degree, dtype=np.uint16)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    gens16 = [g.astype(np.uint16) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens16:
                y = g[x]
                k = y.tobytes()
                if k not in seen:
                    seen[k] = y
                    if len(seen) > cap:
                        raise CapExceeded(f"closure of {name or 'generators'}", cap)
                    nxt.append(y)
        frontier = nxt
    return FiniteGroup(np.stack(list(seen.values())), gens16, name=name)


def check_perm(p) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
