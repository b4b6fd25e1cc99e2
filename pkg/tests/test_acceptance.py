"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""
import math
import random
import time
from itertools import combinations

import numpy as np

from hallgroups.arith import (
    PrimeSet,
    cyclotomic_eval,
    divisors,
    epsilon,
    factorize,
    pi_part,
    prime_divisors,
)
from hallgroups.catalog import parse_spec, prime_set
from hallgroups.classifier import (
    e_pi_ns,
    hall_gl2,
    hall_sl2,
    hall_sym_exists,
    row_meet_check,
    table1_rows,
)
from hallgroups.engine import build
from hallgroups.engine.hall import all_subgroups, conjugacy_class, hall_classes_exhaustive
from hallgroups.engine.structure import identify_type, is_solvable
from hallgroups.lattice import (
    COUNTEREXAMPLE,
    hall_cached,
    intersection_witness,
    is_lattice,
    is_meet_closed,
    pi_family,
    theorem1_check,
)
from hallgroups.verify import BATTERY, RANGE_ROW_SPECS, meet_sweep_specs

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_sym7_example():
    t0 = time.perf_counter()
    S6, S7 = build("sym:6"), build("sym:7")
    no_s6 = hall_cached(S6, [2, 3]) == []
    h235 = hall_cached(S7, [2, 3, 5])
    fix = len(h235) == 1 and all(
        (C.perms() == np.arange(7)[None, :]).all(axis=0).any()
        for C in conjugacy_class(S7, h235[0]))
    h23 = hall_cached(S7, [2, 3])
    one144 = len(h23) == 1 and h23[0].order == 144
    no_pair = not intersection_witness(S7, [2, 3, 5], [2, 3]).exists_pair
    dt = time.perf_counter() - t0
    report(1, "Sym6/Sym7 Hall subgroups, exact", no_s6 and fix and one144 and no_pair and dt <= 300,
           f"{dt:.1f}s, Sym7 Hall {{2,3}} type {identify_type(h23[0]).tag if h23 else None}")


def test_criterion_2_meet_closed_battery():
    t0 = time.perf_counter()
    bad = [name for name in BATTERY if not is_meet_closed(pi_family(build(name)))]
    dt = time.perf_counter() - t0
    report(2, f"Pi(G) meet-closed on {len(BATTERY)} groups", not bad and dt <= 900,
           f"{dt:.1f}s" + (f", failures {bad}" if bad else ""))


def test_criterion_3_lattice_battery():
    bad = [name for name in BATTERY if not is_lattice(pi_family(build(name)))]
    join = pi_family(build("alt:5")).join([2], [5])
    report(3, "Pi(G) is a lattice; join({2},{5}) in Pi(Alt5) = {2,3,5}",
           not bad and join == PrimeSet.of(2, 3, 5), f"join={join}")


def test_criterion_4_solvable_hall_sweep():
    checks, bad = 0, []
    for name in BATTERY:
        G = build(name)
        base = prime_divisors(G.order)
        for k in range(3, len(base) + 1):
            for pi in combinations(base.primes, k):
                for l in range(2, k):
                    checks += 1
                    if theorem1_check(G, pi, l) == COUNTEREXAMPLE:
                        bad.append((name, pi, l))
    report(4, "no COUNTEREXAMPLE in the solvable-Hall sweep", not bad,
           f"{checks} checks" + (f", {bad}" if bad else ""))


def _pis_23(order, char):
    avail = prime_divisors(order) - PrimeSet.of(char)
    rest = (avail - PrimeSet.of(2, 3)).primes
    if not PrimeSet.of(2, 3) <= avail:
        return []
    return [PrimeSet((2, 3) + extra) for k in range(len(rest) + 1)
            for extra in combinations(rest, k)]


def test_criterion_5_lemma_agreement():
    cases, bad = 0, []

    def check(label, verdict, G, pi):
        nonlocal cases
        cases += 1
        if verdict != bool(hall_cached(G, pi)):
            bad.append(f"{label} {pi}")

    for q in (5, 7, 9, 11, 13):
        G = build(f"sl2:{q}")
        for pi in _pis_23(G.order, factorize(q).pairs[0][0]):
            check(f"sl2:{q}", hall_sl2(q, pi).exists, G, pi)
    for q in (5, 7):
        G = build(f"gl2:{q}")
        for pi in _pis_23(G.order, q):
            check(f"gl2:{q}", hall_gl2(1, q, pi).exists, G, pi)
    for q in (3, 5):
        G = build(f"gu2:{q}")
        for pi in _pis_23(G.order, q):
            check(f"gu2:{q}", hall_gl2(-1, q, pi).exists, G, pi)
    for n in range(3, 9):
        G = build(f"sym:{n}")
        for pi in prime_divisors(G.order).subsets():
            check(f"sym:{n}", hall_sym_exists(n, pi), G, pi)
    report(5, "lemma oracles agree with brute force", not bad,
           f"{cases} cases, {len(bad)} disagreements" + (f": {bad}" if bad else ""))


def test_criterion_6_psl2_11_spot_checks():
    S, G = parse_spec("lin:2,11"), build("psl2:11")
    d = e_pi_ns(S, [2, 3, 5])
    h = hall_cached(G, [2, 3, 5])
    first = (d.in_e_ns and [m.row for m in d.rows] == ["LIN8"]
             and any(H.order == 60 and not is_solvable(H) and identify_type(H).tag == "Alt5"
                     for H in h))
    d2 = e_pi_ns(S, [2, 3])
    h2 = hall_cached(G, [2, 3])
    second = not d2.in_e_ns and h2 and all(H.order == 12 and is_solvable(H) for H in h2)
    report(6, "PSL2(11): LIN8 with Alt5 for {2,3,5}; none for {2,3}", bool(first and second),
           f"order-12 types {[identify_type(H).tag for H in h2]}")


def _meet_sweep(specs):
    pairs, bad = 0, []
    for S in specs:
        subsets = list(prime_set(S).subsets())
        fired = {pi: {m.row for m in table1_rows(S, pi)} for pi in subsets}
        for a, b in combinations(subsets, 2):
            if fired[a] & fired[b]:
                pairs += 1
                if not row_meet_check(S, a, b).holds:
                    bad.append((str(S), str(a), str(b)))
    return pairs, bad


def test_criterion_7_row_meet_sweep():
    t0 = time.perf_counter()
    specs = meet_sweep_specs()
    pairs, bad = _meet_sweep(specs)
    # inside the mandated ranges no row fires for two different sets, so the
    # range rows are exercised on larger q where q -+ 1 has a prime above n
    extra_pairs, extra_bad = _meet_sweep([parse_spec(s) for s in RANGE_ROW_SPECS])
    dt = time.perf_counter() - t0
    report(7, f"row meet closure over {len(specs)} groups plus {len(RANGE_ROW_SPECS)} range-row groups",
           not bad and not extra_bad and extra_pairs > 0 and dt <= 300,
           f"{pairs} + {extra_pairs} sharing pairs, {dt:.1f}s" + (f", {bad + extra_bad}" if bad or extra_bad else ""))


def test_criterion_8_arithmetic():
    ident = all(
        math.prod(cyclotomic_eval(d, q) for d in divisors(k)) == q**k - 1
        for k in range(1, 31) for q in range(2, 18))
    rng = random.Random(1)
    rt = True
    for _ in range(5000):
        n = rng.randint(1, 10**9)
        ps = prime_divisors(n)
        pi = PrimeSet(p for p in ps if rng.random() < 0.5)
        rt &= pi_part(n, pi) * pi_part(n, ps - pi) == n and factorize(n).value == n
    eps = all((epsilon(q) == 1) == (q % 4 == 1) for q in range(3, 10001, 2))
    report(8, "cyclotomic identity, pi-part round trips, epsilon law", ident and rt and eps)


def test_criterion_9_engine_completeness():
    checked, bad = [], []
    for name in BATTERY:
        G = build(name)
        if G.order > 400:
            continue
        checked.append(name)
        subs = all_subgroups(G)
        for pi in prime_divisors(G.order).subsets():
            fast = sorted(H.order for H in hall_cached(G, pi))
            slow = sorted(c[0].order for c in hall_classes_exhaustive(G, pi, subs))
            if fast != slow:
                bad.append((name, str(pi)))
    report(9, "Hall search matches exhaustive lattice for |G| <= 400", not bad,
           f"{len(checked)} groups")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
