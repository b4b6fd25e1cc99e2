"""Command-line entry point.

    hallgroups classify lin:2,11 --pi 2,3,5
    hallgroups lattice alt:5 --format dot
    hallgroups verify theorem2
    hallgroups compare sl2 --q-max 13

Exit status: 0 answered or passed, 1 verification failure, 2 usage or
validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .arith import PrimeSet, is_prime, is_prime_power
from .catalog import SpecError, parse_spec
from .classifier import (
    ClassifierConfig,
    PreconditionError,
    e_pi_ns,
    hall_gl2,
    hall_sl2,
    hall_sym_exists,
    sym_ns,
)
from .engine import build
from .engine.group import DEFAULT_CAP, CapExceeded
from .lattice import pi_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FORMATS = {"text": "text", "json": "json", "structured": "json", "dot": "dot", "graph": "dot"}
LEMMA_TAGS = ("gl2", "gu2", "sl2", "sym")
COMPARE_DEFAULTS = {
    "sl2": (5, 7, 9, 11, 13),
    "gl2": (5, 7),
    "gu2": (3, 5, 7),
    "sym": (3, 4, 5, 6, 7, 8),
}


class UsageError(Exception):
    pass


def parse_pi(text: str) -> PrimeSet:
    parts = [t.strip() for t in text.split(",") if t.strip()]
    primes = []
    pos = 0
    for t in parts:
        pos = text.index(t, pos)
        if not t.isdigit() or not is_prime(int(t)):
            raise UsageError(f"--pi: {t!r} at position {pos} is not a prime")
        primes.append(int(t))
    return PrimeSet(primes)


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected on or off")
    return text == "on"


def _format(text: str) -> str:
    if text not in FORMATS:
        raise argparse.ArgumentTypeError(f"format must be one of {', '.join(FORMATS)}")
    return FORMATS[text]


def _config(args) -> ClassifierConfig:
    return ClassifierConfig(eta_adjust=args.eta_adjust, floor_variant=args.floor_variant)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _timed(args, result: dict, start: float) -> dict:
    if not args.no_timing:
        result["duration_s"] = f"{time.perf_counter() - start:.3f}"
    return result


# --- classify ----------------------------------------------------------------


def _lemma_case(tag: str, x: int, pi: PrimeSet, config) -> dict:
    if tag == "sym":
        return {"lemma": "sym", "exists": hall_sym_exists(x, pi), "non_solvable": sym_ns(x, pi)}
    if is_prime_power(x) is None:
        raise UsageError(f"q={x} is not a prime power")
    res = hall_sl2(x, pi) if tag == "sl2" else hall_gl2(1 if tag == "gl2" else -1, x, pi, config)
    return {"lemma": tag, "exists": res.exists, "cases": list(res.cases),
            "single_class": res.single_class}


def cmd_classify(args) -> tuple[int, dict]:
    pi = parse_pi(args.pi)
    tag, _, rest = args.spec.partition(":")
    out = {"command": "classify", "group": args.spec, "pi": list(pi.primes)}
    if tag in LEMMA_TAGS:
        if not rest.isdigit():
            raise UsageError(f"{tag} takes one integer argument")
        try:
            out.update(_lemma_case(tag, int(rest), pi, _config(args)))
        except PreconditionError as e:
            raise UsageError(f"precondition: {e}")
        return EXIT_OK, out
    d = e_pi_ns(parse_spec(args.spec), pi, _config(args))
    out.update({
        "in_e_ns": d.in_e_ns,
        "reason": d.reason,
        "guard": d.guard,
        "rows": [{"row": m.row, "plus": m.aut_invariant, "tau": list(m.tau.primes)} for m in d.rows],
    })
    if args.verbose:
        out["trace"] = [[rid, ok] for rid, ok in d.trace]
    return EXIT_OK, out


def _classify_text(out: dict) -> str:
    lines = [f"{out['group']}  pi={PrimeSet(out['pi'])}"]
    if "lemma" in out:
        lines.append(f"  Hall pi-subgroup exists: {'yes' if out['exists'] else 'no'}")
        if out["lemma"] == "sym":
            lines.append(f"  non-solvable: {'yes' if out['non_solvable'] else 'no'}")
        else:
            lines.append(f"  cases: {', '.join(out['cases']) or '-'}")
            if out["single_class"] is not None:
                lines.append(f"  single class: {'yes' if out['single_class'] else 'no'}")
        return "\n".join(lines)
    lines.append(f"  in E^ns: {'yes' if out['in_e_ns'] else 'no'} ({out['reason']})")
    if out["guard"]:
        lines.append(f"  guard: {out['guard']}")
    for r in out["rows"]:
        lines.append(f"  row {r['row']}{' +' if r['plus'] else ''}  tau={PrimeSet(r['tau'])}")
    for rid, ok in out.get("trace", []):
        lines.append(f"    {rid:<14} {'true' if ok else 'false'}")
    return "\n".join(lines)


# --- lattice -----------------------------------------------------------------


def _label(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def cmd_lattice(args) -> tuple[int, dict]:
    G = build(args.spec, cap=args.cap)
    F = pi_family(G)
    out = {
        "command": "lattice",
        "group": args.spec,
        "order": G.order,
        "primes": list(F.base.primes),
        "members": F.as_lists(),
        "covers": [[list(a.primes), list(b.primes)] for a, b in F.covers()],
    }
    return EXIT_OK, out


def _lattice_text(out: dict) -> str:
    lines = [f"Pi({out['group']}), |G| = {out['order']}: {len(out['members'])} member sets"]
    lines += [f"  {_label(m)}" for m in out["members"]]
    return "\n".join(lines)


def lattice_dot(out: dict) -> str:
    lines = ["digraph Pi {", "  rankdir=BT;"]
    for m in out["members"]:
        lines.append(f'  "{_label(m)}";')
    for a, b in out["covers"]:
        lines.append(f'  "{_label(a)}" -> "{_label(b)}";')
    lines.append("}")
    return "\n".join(lines)


# --- verify / compare --------------------------------------------------------


def cmd_verify(args) -> tuple[int, dict]:
    from . import verify

    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    opts = {"q_max": args.q_max, "config": _config(args), "strict_l": args.strict_l}
    reports = [verify.SUITES[n](opts) for n in names]
    out = {
        "command": "verify",
        "suite": args.suite,
        "passed": all(r.passed for r in reports),
        "reports": [{
            "suite": r.name,
            "passed": r.passed,
            "lines": [{"label": x.label, "ok": x.ok, "detail": x.detail} for x in r.lines],
            "counterexamples": r.counterexamples,
        } for r in reports],
    }
    return (EXIT_OK if out["passed"] else EXIT_FAIL), out


def _verify_text(out: dict) -> str:
    lines = []
    for rep in out["reports"]:
        lines.append(f"[{rep['suite']}] {'PASS' if rep['passed'] else 'FAIL'}")
        for x in rep["lines"]:
            tail = f"  ({x['detail']})" if x["detail"] else ""
            lines.append(f"  {'PASS' if x['ok'] else 'FAIL'} {x['label']}{tail}")
        for c in rep["counterexamples"]:
            lines.append(f"  counterexample: {c}")
    return "\n".join(lines)


def cmd_compare(args) -> tuple[int, dict]:
    from . import verify

    if args.values:
        values = [int(v) for v in args.values.split(",")]
    else:
        values = [v for v in COMPARE_DEFAULTS[args.family]
                  if args.family == "sym" or v <= args.q_max]
    rows = verify.oracle_compare(args.family, values, _config(args))
    out = {
        "command": "compare",
        "family": args.family,
        "values": values,
        "rows": [{"group": r.group, "pi": list(r.pi.primes), "oracle": r.oracle,
                  "engine": r.engine, "agree": r.agree} for r in rows],
        "disagreements": sum(not r.agree for r in rows),
    }
    return (EXIT_OK if out["disagreements"] == 0 else EXIT_FAIL), out


def _compare_text(out: dict) -> str:
    lines = [f"{'group':<10} {'pi':<14} {'oracle':<7} {'engine':<7} agree"]
    for r in out["rows"]:
        lines.append(f"{r['group']:<10} {_label(r['pi']):<14} {str(r['oracle']):<7} "
                     f"{str(r['engine']):<7} {'yes' if r['agree'] else 'NO'}")
    lines.append(f"{len(out['rows'])} cases, {out['disagreements']} disagreements")
    return "\n".join(lines)


# --- driver ------------------------------------------------------------------

COMMANDS = {
    "classify": (cmd_classify, _classify_text),
    "lattice": (cmd_lattice, _lattice_text),
    "verify": (cmd_verify, _verify_text),
    "compare": (cmd_compare, _compare_text),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", type=_format, default="text",
                        help="text, json (alias structured) or dot (alias graph)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest group to enumerate")
    common.add_argument("--q-max", type=int, default=13)
    common.add_argument("--eta-adjust", type=_on_off, default=False, metavar="on|off",
                        help="use q - eps*eta for the unitary torus")
    common.add_argument("--floor-variant", choices=("n3", "n2"), default="n3")
    common.add_argument("--strict-l", type=_on_off, default=True, metavar="on|off",
                        help="l ranges over 2..|pi|-1 (on) or 2..|pi| (off)")
    common.add_argument("--no-timing", action="store_true", help="omit the duration field")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="hallgroups", description="Hall subgroups of finite groups.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="decide non-solvable Hall pi-subgroups")
    c.add_argument("spec")
    c.add_argument("--pi", required=True)

    lat = sub.add_parser("lattice", parents=[common], help="the family Pi(G) of a concrete group")
    lat.add_argument("spec")

    from .verify import SUITES

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])

    cmp = sub.add_parser("compare", parents=[common], help="oracle vs engine sweep")
    cmp.add_argument("family", choices=sorted(COMPARE_DEFAULTS))
    cmp.add_argument("--values", help="comma-separated q (or n for sym)")
    return p


def render(command: str, out: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(out)
    if fmt == "dot":
        if command != "lattice":
            raise UsageError("dot output is only available for lattice")
        return lattice_dot(out)
    return COMMANDS[command][1](out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    run, _ = COMMANDS[args.command]
    start = time.perf_counter()
    try:
        code, out = run(args)
        _timed(args, out, start)
        print(render(args.command, out, args.format))
    except (UsageError, SpecError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
