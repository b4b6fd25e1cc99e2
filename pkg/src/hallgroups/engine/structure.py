"""Derived series, solvability and a fingerprint-based type identification."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

import numpy as np

from .group import FiniteGroup, Subgroup


def _as_subgroup(H) -> Subgroup:
    return H.whole if isinstance(H, FiniteGroup) else H


def commutator(G: FiniteGroup, a, b):
    """a^-1 b^-1 a b, vectorised."""
    inv = G.inverse
    return G.mul(G.mul(inv[a], inv[b]), G.mul(a, b))


def normal_closure(G: FiniteGroup, H: Subgroup, gens) -> Subgroup:
    """Smallest subgroup normal in H containing gens."""
    N = G.closure(gens)
    changed = True
    while changed:
        changed = False
        for n in list(N.gens):
            for h in H.gens:
                c = int(G.conj(n, h)[0])
                if c not in N:
                    N = G.extend(N, c)
                    changed = True
    return N


def derived_subgroup(H) -> Subgroup:
    H = _as_subgroup(H)
    G = H.group
    gens = H.gens
    comms = {int(commutator(G, a, b)[0]) for i, a in enumerate(gens) for b in gens[i + 1:]}
    comms.discard(G.identity)
    return normal_closure(G, H, sorted(comms))


def derived_series(H) -> list[Subgroup]:
    H = _as_subgroup(H)
    series = [H]
    while series[-1].order > 1:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            break
        series.append(D)
    return series


def is_solvable(H) -> bool:
    return derived_series(H)[-1].order == 1


def is_abelian(H) -> bool:
    H = _as_subgroup(H)
    G, gens = H.group, H.gens
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if G.mul(a, b)[0] != G.mul(b, a)[0]:
                return False
    return True


def center_order(H) -> int:
    H = _as_subgroup(H)
    G = H.group
    ok = np.ones(H.order, dtype=bool)
    for g in H.gens:
        ok &= G.mul(H.elements, g) == G.mul(g, H.elements)
    return int(ok.sum())


@dataclass(frozen=True)
class TypeDescriptor:
    order: int
    abelian: bool
    solvable: bool
    derived_length: int | None
    exponent: int
    order_histogram: tuple[tuple[int, int], ...]
    center: int
    derived_orders: tuple[int, ...]
    tag: str | None = None

    def fingerprint(self) -> tuple:
        return (self.order, self.abelian, self.solvable, self.derived_length, self.exponent,
                self.order_histogram, self.center, self.derived_orders)


def describe(H) -> TypeDescriptor:
    H = _as_subgroup(H)
    G = H.group
    series = derived_series(H)
    solvable = series[-1].order == 1
    orders = G.element_orders[H.elements]
    hist = tuple(sorted(Counter(orders.tolist()).items()))
    return TypeDescriptor(
        order=H.order,
        abelian=is_abelian(H),
        solvable=solvable,
        derived_length=len(series) - 1 if solvable else None,
        exponent=lcm(*orders.tolist()),
        order_histogram=hist,
        center=center_order(H),
        derived_orders=tuple(S.order for S in series),
    )


def _references():
    from . import constructors as c
    from .hall import sylow

    def m10():
        M = c.m11()
        return M.from_elements(c.point_stabilizer(M, 0))

    def sym_x_sym(a, b):
        return lambda: c.direct_product(c.sym(a), c.sym(b))

    return {
        "C2": lambda: c.cyclic(2), "C3": lambda: c.cyclic(3), "C4": lambda: c.cyclic(4),
        "C6": lambda: c.cyclic(6), "V4": lambda: c.dihedral(2),
        "Sym3": lambda: c.sym(3), "D8": lambda: c.dihedral(4), "D12": lambda: c.dihedral(6),
        "Q8": lambda: sylow(c.sl2(3), 2),
        "Alt4": lambda: c.alt(4), "Sym4": lambda: c.sym(4), "SL2(3)": lambda: c.sl2(3),
        "GL2(3)": lambda: c.gl2(3), "Alt5": lambda: c.alt(5), "Sym5": lambda: c.sym(5),
        "SL2(5)": lambda: c.sl2(5), "PSL2(7)": lambda: c.psl2(7), "Alt6": lambda: c.alt(6),
        "Sym6": lambda: c.sym(6), "M10": m10, "PGL2(9)": lambda: c.pgl2(9),
        "Sym3xSym3": sym_x_sym(3, 3), "Sym4xSym2": sym_x_sym(4, 2),
        "Sym4xSym3": sym_x_sym(4, 3), "Sym5xSym2": sym_x_sym(5, 2),
        "Alt7": lambda: c.alt(7), "Sym7": lambda: c.sym(7),
    }


@lru_cache(maxsize=1)
def reference_fingerprints() -> dict[tuple, str]:
    table: dict[tuple, str] = {}
    for name, make in _references().items():
        fp = describe(make()).fingerprint()
        if fp in table:
            raise RuntimeError(f"fingerprint collision: {name} vs {table[fp]}")
        table[fp] = name
    return table


def identify_type(H) -> TypeDescriptor:
    """Descriptor plus an isomorphism tag when the fingerprint is in the table.

    The fingerprint (order, element-order histogram, centre, derived series
    orders) is a heuristic separator; it is exact on the reference list.
    """
    d = describe(H)
    tag = reference_fingerprints().get(d.fingerprint())
    if tag is None and d.abelian and len(d.order_histogram) and d.exponent == d.order:
        tag = f"C{d.order}"
    return TypeDescriptor(**{**d.__dict__, "tag": tag})
