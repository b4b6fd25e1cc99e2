import json
import subprocess
import sys

import pytest

from hallgroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_lin2_11(capsys):
    code, out, _ = run(capsys, "classify", "lin:2,11", "--pi", "2,3,5")
    assert code == 0 and "in E^ns: yes" in out and "row LIN8" in out


def test_classify_alt7(capsys):
    code, out, _ = run(capsys, "classify", "alt:7", "--pi", "2,3,5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["in_e_ns"] and [r["row"] for r in data["rows"]] == ["ALT"]


def test_classify_pi_group(capsys):
    code, out, _ = run(capsys, "classify", "alt:5", "--pi", "2,3,5", "--format", "structured")
    assert code == 0 and json.loads(out)["reason"] == "pi_group"


def test_classify_plus_mark(capsys):
    code, out, _ = run(capsys, "classify", "g2:5", "--pi", "2,3,7")
    assert code == 0 and "row G2R +" in out


def test_classify_lemma_cases(capsys):
    code, out, _ = run(capsys, "classify", "sl2:11", "--pi", "2,3,5", "--format", "json",
                       "--no-timing")
    assert json.loads(out) == {
        "cases": ["alt5"], "command": "classify", "exists": True, "group": "sl2:11",
        "lemma": "sl2", "pi": [2, 3, 5], "single_class": None,
    }
    code, out, _ = run(capsys, "classify", "gu2:7", "--pi", "2,3", "--eta-adjust", "on")
    assert code == 0 and "exists: yes" in out
    code, out, _ = run(capsys, "classify", "sym:6", "--pi", "2,3")
    assert code == 0 and "exists: no" in out


def test_classify_verbose_trace(capsys):
    code, out, _ = run(capsys, "classify", "lin:2,11", "--pi", "2,3", "--verbose")
    assert code == 0 and "LIN8" in out and "false" in out


def test_floor_variant_flag(capsys):
    _, out3, _ = run(capsys, "classify", "lin:10,59", "--pi", "2,3,5")
    _, out2, _ = run(capsys, "classify", "lin:10,59", "--pi", "2,3,5", "--floor-variant", "n2")
    assert "LIN10" not in out3 and "row LIN10" in out2


@pytest.mark.parametrize("argv", [
    ["classify", "foo:3", "--pi", "2"],
    ["classify", "lin:2,3", "--pi", "2,3"],
    ["classify", "lin:2,11", "--pi", "2,4"],
    ["classify", "gl2:8", "--pi", "2,3"],
    ["classify", "lin:2,11"],
    ["lattice", "sym:9"],
    ["lattice", "sym:5", "--cap", "10"],
    ["verify", "nonsense"],
    ["classify", "lin:2,11", "--pi", "2,3", "--format", "dot"],
    ["classify", "lin:2,11", "--pi", "2,3", "--eta-adjust", "maybe"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_lattice_text(capsys):
    code, out, _ = run(capsys, "lattice", "alt:5", "--format", "text")
    assert code == 0 and "6 member sets" in out


def test_lattice_structured_and_dot(capsys):
    code, out, _ = run(capsys, "lattice", "sym:6", "--format", "json", "--no-timing")
    data = json.loads(out)
    assert [2, 3] not in data["members"] and [2, 3, 5] in data["members"]
    code, out, _ = run(capsys, "lattice", "sym:3", "--format", "dot")
    assert out.startswith("digraph") and '"{2,3}"' in out and '"{2}" -> "{2,3}"' in out
    assert out.count("->") == 4


def test_structured_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "lattice", "psl2:7", "--format", "json", "--no-timing")
    _, b, _ = run(capsys, "lattice", "psl2:7", "--format", "json", "--no-timing")
    assert a == b and "duration_s" not in a
    _, c, _ = run(capsys, "lattice", "psl2:7", "--format", "json")
    assert "duration_s" in c


def test_verify_sym7(capsys):
    code, out, _ = run(capsys, "verify", "sym7-example")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 5


def test_verify_lemmas_q_max(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--q-max", "7", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]


def test_verify_failure_exit_1(capsys):
    # the eta-adjusted reading disagrees with brute force on GU_2(7)
    code, out, _ = run(capsys, "verify", "lemmas", "--eta-adjust", "on")
    assert code == 1 and "counterexample" in out and "gu2:7" in out


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "sl2", "--format", "json", "--no-timing")
    data = json.loads(out)
    assert code == 0 and data["disagreements"] == 0 and data["values"] == [5, 7, 9, 11, 13]
    code, out, _ = run(capsys, "compare", "gu2", "--values", "7", "--eta-adjust", "on")
    assert code == 1 and "1 disagreements" in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "hallgroups.cli", "classify", "lin:2,11",
                        "--pi", "2,3,5"], capture_output=True, text=True)
    assert r.returncode == 0 and "LIN8" in r.stdout
