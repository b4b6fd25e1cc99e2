"""Arithmetic oracle for Hall subgroups of simple groups and their small relatives.

Decides existence of Hall pi-subgroups of GL_2(q), GU_2(q), SL_2(q) and Sym_n,
and membership of a simple group S in E^ns_pi (a non-solvable Hall
pi-subgroup exists) by matching (S, pi) against the table of non-solvable
proper Hall subgroups, row by row.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .arith import (
    PrimeSet,
    cyclotomic_eval,
    epsilon,
    factorial_primes,
    gcd,
    is_prime,
    is_prime_power,
    pi_part,
    prime_divisors,
)
from .catalog import SimpleGroupSpec, order_pi_part, prime_set

P23 = PrimeSet.of(2, 3)
P235 = PrimeSet.of(2, 3, 5)
P2357 = PrimeSet.of(2, 3, 5, 7)
P237 = PrimeSet.of(2, 3, 7)


@dataclass(frozen=True)
class ClassifierConfig:
    """Switches for readings the printed statements leave ambiguous.

    eta_adjust: use q - eps*eta (rather than q - eps) as the torus in the
        unitary dihedral case of hall_gl2.
    floor_variant: "n3" uses Sym_[n/3] in LIN10/UNI2, "n2" uses Sym_[n/2].
    """

    eta_adjust: bool = False
    floor_variant: str = "n3"

    def __post_init__(self):
        if self.floor_variant not in ("n3", "n2"):
            raise ValueError("floor_variant must be 'n3' or 'n2'")


DEFAULT_CONFIG = ClassifierConfig()


class PreconditionError(ValueError):
    """Lemma hypotheses not met (distinct from a negative verdict)."""


@dataclass(frozen=True)
class SmallHallCase:
    exists: bool
    cases: tuple[str, ...] = ()
    single_class: bool | None = None

    @property
    def verdict(self) -> str:
        return "exists" if self.exists else "not_exists"


@dataclass(frozen=True)
class RowMatch:
    row: str
    aut_invariant: bool
    tau: PrimeSet


@dataclass(frozen=True)
class NsDecision:
    in_e_ns: bool
    reason: str  # "pi_group" | "rows" | "guard_failed" | "no_row"
    rows: tuple[RowMatch, ...] = ()
    guard: str | None = None
    trace: tuple[tuple[str, bool], ...] = field(default=(), compare=False)

    @property
    def aut_invariant(self) -> bool:
        return any(r.aut_invariant for r in self.rows)


# ---------------------------------------------------------------------------
# Lemmas for GL_2^eta(q), SL_2(q), Sym_n


def _odd_char_checks(q: int, pi: PrimeSet) -> int:
    pp = is_prime_power(q)
    if pp is None:
        raise PreconditionError(f"q={q} is not a prime power")
    p = pp[0]
    if p == 2:
        raise PreconditionError("q must be odd")
    if 2 not in pi or 3 not in pi:
        raise PreconditionError("pi must contain 2 and 3")
    if p in pi:
        raise PreconditionError(f"characteristic {p} must not lie in pi")
    return p


def gl2_order(eta: int, q: int) -> int:
    return q * (q * q - 1) * (q - eta)


def hall_gl2(eta: int, q: int, pi, config: ClassifierConfig = DEFAULT_CONFIG) -> SmallHallCase:
    """Hall pi-subgroups of GL_2(q) (eta=+1) or GU_2(q) (eta=-1).

    Cases: "dihedral" (projective image inside D_{2(q-eps)}) and "sym4"
    (projective image Sym_4, needs (q^2-1)_{2,3} = 24).
    """
    pi = PrimeSet(pi)
    if eta not in (1, -1):
        raise PreconditionError("eta must be +1 or -1")
    _odd_char_checks(q, pi)
    tau = pi & prime_divisors(gl2_order(eta, q))
    eps = epsilon(q)
    torus = q - eps * eta if (config.eta_adjust and eta == -1) else q - eps
    cases = []
    if tau <= prime_divisors(torus):
        cases.append("dihedral")
    if tau == P23 and pi_part(q * q - 1, P23) == 24:
        cases.append("sym4")
    return SmallHallCase(bool(cases), tuple(cases), len(cases) == 1 if cases else None)


def hall_sl2(q: int, pi) -> SmallHallCase:
    """Hall pi-subgroups of SL_2(q) for odd q."""
    pi = PrimeSet(pi)
    pp = is_prime_power(q)
    if pp is None:
        raise PreconditionError(f"q={q} is not a prime power")
    g_primes = prime_divisors(q * (q * q - 1))
    tau = pi & g_primes
    if len(tau) <= 1:
        return SmallHallCase(True, ("sylow",), None)
    if tau == g_primes:
        return SmallHallCase(True, ("whole",), True)
    _odd_char_checks(q, pi)
    cases = []
    if tau <= prime_divisors(q - epsilon(q)):
        cases.append("dihedral")
    if tau == P23 and pi_part(q * q - 1, P23) in (24, 48):
        cases.append("altsym4")
    if tau == P235 and pi_part(q * q - 1, P235) == 120:
        cases.append("alt5")
    single = True if cases == ["dihedral"] else None
    return SmallHallCase(bool(cases), tuple(cases), single)


def hall_sym_exists(n: int, pi) -> bool:
    """Does Sym_n have a Hall pi-subgroup?"""
    whole = factorial_primes(n)
    tau = PrimeSet(pi) & whole
    if len(tau) <= 1 or tau == whole:
        return True
    if n >= 2 and is_prime(n) and tau == factorial_primes(n - 1):
        return True
    return n in (7, 8) and tau == P23


def sym_ns(n: int, pi) -> bool:
    """Does Sym_n have a non-solvable Hall pi-subgroup?"""
    if n < 5:
        return False
    whole = factorial_primes(n)
    tau = PrimeSet(pi) & whole
    if tau == whole:
        return True
    return n >= 7 and is_prime(n) and tau == factorial_primes(n - 1)


def solvability_guards(spec: SimpleGroupSpec, pi) -> str | None:
    """Name of the failed guard, or None when Table 1 must be consulted."""
    pi = PrimeSet(pi)
    if prime_set(spec) <= pi:
        return None
    if 2 not in pi:
        return "2 not in pi (odd-order Hall subgroups are solvable)"
    if 3 not in pi:
        return "3 not in pi (Hall subgroup of a simple group is solvable)"
    return None


# ---------------------------------------------------------------------------
# Table rows

Row = tuple[str, bool, Callable[[SimpleGroupSpec, PrimeSet, PrimeSet, ClassifierConfig], bool]]


def _pi_of(*values: int) -> PrimeSet:
    out = PrimeSet()
    for v in values:
        out = out | prime_divisors(v)
    return out


def _phi_complement(spec: SimpleGroupSpec, ks) -> PrimeSet:
    q = spec.q
    return prime_set(spec) - _pi_of(*(cyclotomic_eval(k, q) for k in ks))


def _range(tau: PrimeSet, low: PrimeSet, high: PrimeSet) -> bool:
    return low <= tau and tau <= high


def _eps(q: int) -> int | None:
    return epsilon(q) if q % 2 else None


def _sym_part_ok(spec, pi, tau, torus: int) -> bool:
    # every r in (pi cap pi(n!)) \ pi(torus) has |S|_r = (n!)_r
    n = spec.n
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    for r in (pi & factorial_primes(n)) - prime_divisors(torus):
        if order_pi_part(spec, [r]) != pi_part(fact, [r]):
            return False
    return True


def _lin9(s, pi, tau, cfg):
    q = s.q
    return (s.p not in pi and gcd(12, q - 1) == 12 and sym_ns(s.n, pi)
            and _sym_part_ok(s, pi, tau, q - 1)
            and _range(tau, P23, prime_divisors(q - 1) | factorial_primes(s.n)))


def _uni1(s, pi, tau, cfg):
    q = s.q
    return (s.p not in pi and gcd(12, q + 1) == 12 and sym_ns(s.n, pi)
            and _sym_part_ok(s, pi, tau, q + 1)
            and _range(tau, P23, prime_divisors(q + 1) | factorial_primes(s.n)))


def _floor_n(s, cfg) -> int:
    return s.n // 3 if cfg.floor_variant == "n3" else s.n // 2


def _gl2_exists(eta, q, pi, cfg) -> bool:
    try:
        return hall_gl2(eta, q, pi, cfg).exists
    except PreconditionError:
        return False


def _lin10(s, pi, tau, cfg):
    q = s.q
    return (gcd(3, q + 1) == 3 and _range(tau, P23, prime_divisors(q * q - 1))
            and _gl2_exists(1, q, pi, cfg) and sym_ns(_floor_n(s, cfg), pi))


def _uni2(s, pi, tau, cfg):
    q = s.q
    return (gcd(3, q - 1) == 3 and _range(tau, P23, prime_divisors(q * q - 1))
            and _gl2_exists(-1, q, pi, cfg) and sym_ns(_floor_n(s, cfg), pi))


def _eps_rows(sym_degree: Callable[[SimpleGroupSpec], int], eps_power: int | None):
    """BN1 / DN2 / DN3 / TDN2 / TDN3 shaped rows."""

    def pred(s, pi, tau, cfg):
        e = _eps(s.q)
        if e is None:
            return False
        if eps_power is not None and e**s.n != eps_power:
            return False
        return (gcd(12, s.q - e) == 12 and sym_ns(sym_degree(s), pi)
                and _range(tau, P23, prime_divisors(s.q - e)))

    return pred


def _exact(target: PrimeSet, extra: Callable = lambda s, pi: True):
    return lambda s, pi, tau, cfg: tau == target and extra(s, pi)


def _cn1(s, pi, tau, cfg):
    if not _range(tau, P23, prime_divisors(s.q * s.q - 1)):
        return False
    try:
        sl = hall_sl2(s.q, pi)
    except PreconditionError:
        return False
    if not (sl.exists and hall_sym_exists(s.n, pi)):
        return False
    return "alt5" in sl.cases or sym_ns(s.n, pi)


def _dn1(s, pi, tau, cfg):
    n, q = s.n, s.q
    fermat = is_prime(n) and (n - 1) & (n - 2) == 0  # n = 2^k + 1
    if not (s.p == 2 and fermat and gcd(n, q - 1) == 1):
        return False
    return tau == prime_set(s) - _pi_of((q**n - 1) // (q - 1), q ** (n - 1) + 1)


def _tdn1(s, pi, tau, cfg):
    n, q = s.n, s.q
    mersenne = is_prime(n - 1) and n & (n - 1) == 0  # n - 1 = 2^k - 1
    if not (s.p == 2 and mersenne and gcd(n - 1, q - 1) == 1):
        return False
    return tau == prime_set(s) - _pi_of((q ** (n - 1) - 1) // (q - 1), q**n + 1)


def _lin_phi(n_req, coprime, ks, q_gt2=False):
    """LIN1..LIN7: conditions on (n, q) and tau = pi(S) minus pi(prod Phi_k(q))."""

    def pred(s, pi, tau, cfg):
        if n_req == "odd prime":
            if not (s.n % 2 and is_prime(s.n)):
                return False
            kk = (s.n,)
        else:
            if s.n != n_req:
                return False
            kk = ks
        if q_gt2 and s.q <= 2:
            return False
        for modulus, shift in coprime(s):
            if gcd(modulus, s.q + shift) != 1:
                return False
        return tau == _phi_complement(s, kk)

    return pred


def _pipart_exact(target: int):
    return lambda s, pi: s.p not in pi and order_pi_part(s, pi) == target


def _g2(s, pi, tau, cfg):
    q = s.q
    return (tau == P237 and pi_part(q * q - 1, P237) == 24
            and pi_part(q**4 + q**2 + 1, [7]) == 7)


def _lin8(s, pi, tau, cfg):
    return s.n == 2 and tau == P235 and pi_part(s.q**2 - 1, P235) == 120


def _lin11(s, pi, tau, cfg):
    q = s.q
    return (s.n == 4 and tau == P235 and gcd(8, q - 5) == 8
            and pi_part(q + 1, [3]) == 3 and pi_part(q * q + 1, [5]) == 5)


def _uni3(s, pi, tau, cfg):
    q = s.q
    return (s.n == 4 and tau == P235 and gcd(8, q + 5) == 8
            and pi_part(q - 1, [3]) == 3 and pi_part(q * q + 1, [5]) == 5)


def _exceptional_eps(s, pi, tau, cfg):
    e = _eps(s.q)
    return e is not None and _range(tau, P2357, prime_divisors(s.q - e))


def _alt(s, pi, tau, cfg):
    return s.n >= 7 and is_prime(s.n) and tau == factorial_primes(s.n - 1)


ROWS: dict[str, list[Row]] = {
    "Alt": [("ALT", False, _alt)],
    "Lin": [
        ("LIN1", False, _lin_phi("odd prime", lambda s: [(s.n, -1)], None)),
        ("LIN2", False, _lin_phi(4, lambda s: [(6, -1)], (3, 4), q_gt2=True)),
        ("LIN3", False, _lin_phi(5, lambda s: [(10, -1)], (4, 5))),
        ("LIN4", False, _lin_phi(5, lambda s: [(30, -1)], (3, 4, 5), q_gt2=True)),
        ("LIN5", False, _lin_phi(7, lambda s: [(35, -1), (3, 1)], (5, 6, 7))),
        ("LIN6", False, _lin_phi(8, lambda s: [(70, -1), (3, 1)], (4, 5, 6, 7))),
        ("LIN7", False, _lin_phi(11, lambda s: [(462, -1), (5, 1)], (7, 8, 9, 10, 11))),
        ("LIN8", False, _lin8),
        ("LIN9", True, _lin9),
        ("LIN10", False, _lin10),
        ("LIN11", False, _lin11),
    ],
    "Uni": [
        ("UNI1", True, _uni1),
        ("UNI2", False, _uni2),
        ("UNI3", False, _uni3),
    ],
    "OrthOdd": [
        ("BN1", True, _eps_rows(lambda s: s.n, None)),
        ("BN2", False, lambda s, pi, tau, cfg: s.n == 3
         and _exact(P2357, _pipart_exact(2**9 * 3**4 * 5 * 7))(s, pi, tau, cfg)),
        ("BN3", False, lambda s, pi, tau, cfg: s.n == 4
         and _exact(P2357, _pipart_exact(2**14 * 3**5 * 5**2 * 7))(s, pi, tau, cfg)),
    ],
    "Symp": [("CN1", False, _cn1)],
    "OrthPlus": [
        ("DN1", False, _dn1),
        ("DN2", True, _eps_rows(lambda s: s.n, 1)),
        ("DN3", True, _eps_rows(lambda s: s.n - 1, -1)),
        ("DN4", False, lambda s, pi, tau, cfg: s.n == 4
         and _exact(P2357, _pipart_exact(2**13 * 3**5 * 5**2 * 7))(s, pi, tau, cfg)),
    ],
    "OrthMinus": [
        ("TDN1", False, _tdn1),
        ("TDN2", True, _eps_rows(lambda s: s.n, -1)),
        ("TDN3", True, _eps_rows(lambda s: s.n - 1, 1)),
    ],
    "G2": [("G2R", True, _g2)],
    "E6": [("E6R", True, lambda s, pi, tau, cfg: _range(tau, P235, prime_divisors(s.q - 1)))],
    "TwE6": [("TE6R", True, lambda s, pi, tau, cfg: _range(tau, P235, prime_divisors(s.q + 1)))],
    "E7": [("E7R", True, _exceptional_eps)],
    "E8": [("E8R", True, _exceptional_eps)],
}

SPORADIC_TAUS = {
    "M11": [P235],
    "M22": [P235],
    "M23": [P235, P2357, PrimeSet.of(2, 3, 5, 7, 11)],
    "M24": [P235],
    "J1": [P235],
    "J4": [P235],
}


def rows_for(spec: SimpleGroupSpec) -> list[Row]:
    if spec.family == "Sporadic":
        out = []
        for i, target in enumerate(SPORADIC_TAUS[spec.name]):
            out.append((f"SPOR({spec.name},{i + 1})", False,
                        (lambda t: lambda s, pi, tau, cfg: tau == t)(target)))
        return out
    return ROWS[spec.family]


ALL_ROW_IDS = tuple(
    [rid for fam in ROWS.values() for rid, _, _ in fam]
    + [f"SPOR({name},{i + 1})" for name, ts in SPORADIC_TAUS.items() for i in range(len(ts))]
)
PLUS_ROWS = frozenset(rid for fam in ROWS.values() for rid, plus, _ in fam if plus)


def row_fires(spec: SimpleGroupSpec, pi, row_id: str, config: ClassifierConfig = DEFAULT_CONFIG) -> bool:
    pi = PrimeSet(pi)
    tau = pi & prime_set(spec)
    for rid, _, pred in rows_for(spec):
        if rid == row_id:
            return bool(pred(spec, pi, tau, config))
    raise KeyError(f"row {row_id} does not apply to {spec}")


def table1_rows(spec: SimpleGroupSpec, pi, config: ClassifierConfig = DEFAULT_CONFIG,
                trace: list | None = None) -> list[RowMatch]:
    """Every table row whose conditions hold for (spec, pi)."""
    pi = PrimeSet(pi)
    tau = pi & prime_set(spec)
    out = []
    for rid, plus, pred in rows_for(spec):
        ok = bool(pred(spec, pi, tau, config))
        if trace is not None:
            trace.append((rid, ok))
        if ok:
            out.append(RowMatch(rid, plus, tau))
    return out


def e_pi_ns(spec: SimpleGroupSpec, pi, config: ClassifierConfig = DEFAULT_CONFIG) -> NsDecision:
    """Does the simple group have a non-solvable Hall pi-subgroup?"""
    pi = PrimeSet(pi)
    if prime_set(spec) <= pi:
        return NsDecision(True, "pi_group")
    guard = solvability_guards(spec, pi)
    if guard is not None:
        return NsDecision(False, "guard_failed", guard=guard)
    trace: list = []
    rows = table1_rows(spec, pi, config, trace)
    if rows:
        return NsDecision(True, "rows", tuple(rows), trace=tuple(trace))
    return NsDecision(False, "no_row", trace=tuple(trace))


@dataclass(frozen=True)
class MeetCheck:
    holds: bool
    common_rows: tuple[str, ...]
    witness: str | None = None


def row_meet_check(spec: SimpleGroupSpec, pi1, pi2, config: ClassifierConfig = DEFAULT_CONFIG) -> MeetCheck:
    """Rows shared by pi1 and pi2 must also fire for their intersection."""
    pi1, pi2 = PrimeSet(pi1), PrimeSet(pi2)
    r1 = {m.row for m in table1_rows(spec, pi1, config)}
    r2 = {m.row for m in table1_rows(spec, pi2, config)}
    common = sorted(r1 & r2, key=ALL_ROW_IDS.index)
    if not common:
        raise PreconditionError("no common row for pi1 and pi2")
    meet = pi1 & pi2
    for rid in common:
        if not row_fires(spec, meet, rid, config):
            return MeetCheck(False, tuple(common), f"{rid} fails for {meet}")
    return MeetCheck(True, tuple(common))
