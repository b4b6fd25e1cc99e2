import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hallgroups.arith import PrimeSet, is_prime_power, pi_part
from hallgroups.catalog import (
    SimpleGroupSpec,
    SpecError,
    order,
    order_formula_value,
    order_pi_part,
    parse_spec,
    prime_set,
    sporadic_specs,
    sweep_specs,
)

# Orders as listed in the ATLAS of finite groups.
ATLAS_ORDERS = {
    "alt:5": 60,
    "lin:2,8": 504,
    "lin:2,11": 660,
    "lin:2,16": 4080,
    "lin:3,3": 5616,
    "lin:3,4": 20160,
    "lin:4,3": 6065280,
    "lin:5,2": 9999360,
    "uni:3,3": 6048,
    "uni:3,5": 126000,
    "uni:4,2": 25920,
    "uni:5,2": 13685760,
    "symp:2,3": 25920,
    "symp:3,2": 1451520,
    "orthB:3,3": 4585351680,
    "orthDp:4,2": 174182400,
    "orthDm:4,2": 197406720,
    "g2:3": 4245696,
    "g2:4": 251596800,
    "e6:2": 214841575522005575270400,
    "2e6:2": 76532479683774853939200,
    "e7:2": 7997476042075799759100487262680802918400,
    "e8:2": 337804753143634806261388190614085595079991692242467651576160959909068800000,
    "sporadic:M11": 7920,
    "sporadic:M24": 244823040,
    "sporadic:J4": 86775571046077562880,
}


@pytest.mark.parametrize("text, expected", sorted(ATLAS_ORDERS.items()))
def test_known_orders(text, expected):
    spec = parse_spec(text)
    assert order(spec).value == expected
    assert order(spec).factorization.value == expected


def test_m11_order_by_enumeration():
    from hallgroups.engine import m11

    assert m11().order == order(parse_spec("sporadic:M11")).value == 2**4 * 3**2 * 5 * 11


@pytest.mark.parametrize("text, engine_spec", [
    ("lin:2,7", "psl2:7"), ("lin:2,11", "psl2:11"), ("lin:2,13", "psl2:13"),
    ("lin:2,9", "psl2:9"), ("lin:3,3", "psl3:3"), ("alt:6", "alt:6"), ("alt:7", "alt:7"),
    ("uni:3,3", "uni:3,3"),
])
def test_catalog_agrees_with_engine(text, engine_spec):
    from hallgroups.engine import build

    assert build(engine_spec).order == order(parse_spec(text)).value


@pytest.mark.parametrize("text, primes", [
    ("alt:7", (2, 3, 5, 7)),
    ("lin:2,11", (2, 3, 5, 11)),
])
def test_prime_set(text, primes):
    assert prime_set(parse_spec(text)).primes == primes


def test_g2_prime_set_matches_formula():
    q = 5
    direct = q**6 * (q**6 - 1) * (q**2 - 1)
    assert prime_set(parse_spec("g2:5")) == PrimeSet(sympy.factorint(direct))


def test_order_pi_part():
    assert order_pi_part(parse_spec("alt:7"), [2, 3]) == 72
    assert order_pi_part(parse_spec("lin:2,11"), [2, 3, 5]) == 60
    assert order_pi_part(parse_spec("lin:2,11"), []) == 1


def test_orthodd_pi_part_target():
    # smallest odd q with |B_3(q)|_{2,3,5,7} = 2^9 3^4 5 7; checked against sympy
    target = 2**9 * 3**4 * 5 * 7
    hits = [q for q in range(3, 300, 2) if is_prime_power(q)
            and order_pi_part(SimpleGroupSpec("OrthOdd", 3, q), [2, 3, 5, 7]) == target]
    assert hits == [173, 277, 283]
    q = 173
    direct = q**9 * (q**2 - 1) * (q**4 - 1) * (q**6 - 1) // 2
    f = sympy.factorint(direct)
    assert 2 ** f[2] * 3 ** f[3] * 5 ** f[5] * 7 ** f[7] == target


@pytest.mark.parametrize("text", ["lin:2,3", "lin:2,2", "uni:3,2", "symp:2,2", "orthB:2,2",
                                  "alt:4", "g2:2", "lin:3,6", "orthDp:3,5", "sporadic:HS"])
def test_rejected_specs(text):
    with pytest.raises(SpecError):
        parse_spec(text)


@pytest.mark.parametrize("text", ["foo:3", "lin:2", "lin:2,x", "alt", "e8:2,2", ""])
def test_unparseable_specs(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_unknown_tag_reports_position():
    with pytest.raises(SpecError, match="position 0"):
        parse_spec("foo:3")


def test_accepted_specs_round_trip():
    for text in ["lin:2,4", "alt:5", "uni:3,3", "orthDm:4,2", "2e6:2", "sporadic:J1"]:
        assert str(parse_spec(text)) == text


def test_uni32_is_solvable_by_brute_force():
    from hallgroups.engine import psu3
    from hallgroups.engine.structure import is_solvable

    G = psu3(2)
    assert G.order == 72 and is_solvable(G)


def _all_specs():
    out = list(sweep_specs("Lin", range(2, 9), q_max=16))
    out += list(sweep_specs("Uni", range(3, 8), q_max=9))
    out += list(sweep_specs("OrthOdd", range(2, 6), q_max=9))
    out += list(sweep_specs("Symp", range(2, 6), q_max=9))
    out += list(sweep_specs("OrthPlus", range(4, 7), q_max=9))
    out += list(sweep_specs("OrthMinus", range(4, 7), q_max=9))
    for fam in ("G2", "E6", "TwE6", "E7", "E8"):
        out += list(sweep_specs(fam, q_max=9))
    return out + sporadic_specs()


def test_factorized_order_equals_formula():
    for spec in _all_specs():
        if spec.family == "Sporadic":
            continue
        assert order(spec).value == order_formula_value(spec), spec


def test_factorization_against_sympy_on_moderate_orders():
    for spec in _all_specs():
        v = order(spec).value
        if v < 10**30:
            assert order(spec).factorization.as_dict() == sympy.factorint(v), spec


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=12), st.integers(min_value=2, max_value=200))
def test_lin_order_property(n, q):
    if is_prime_power(q) is None or (n == 2 and q < 4):
        return
    s = SimpleGroupSpec("Lin", n, q)
    o = order(s)
    assert o.value == order_formula_value(s)
    assert pi_part(o.value, o.primes) == o.value
    assert s.p in o.primes
