import json
import subprocess
import sys

import pytest

from cliffordinv.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN_CODE, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_molien_example(capsys):
    code, out = run(capsys, "group", "molien", "--kind", "real", "--m", "1", "--order", "10")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["molien"] == ["1", "0", "1", "0", "1", "0", "1", "0", "2", "0", "2"]
    assert doc["schema_version"] == 1


def test_runge_example(capsys):
    code, out = run(capsys, "verify", "runge", "--length", "8", "--genus", "1")
    assert code == EXIT_OK
    assert json.loads(out)["invariant_dim"] == "2"


def test_balanced_lattice_example(capsys):
    code, out = run(capsys, "lattice", "build", "--m", "1", "--balanced")
    assert code == EXIT_OK
    assert json.loads(out)["gram_text"] == [["2", "√2"], ["√2", "2"]]


def test_output_is_deterministic(capsys):
    argv = ("design-test", "--m", "2", "--max-degree", "8", "--point-mode", "random", "--seed", "3")
    assert run(capsys, *argv) == run(capsys, *argv)
    a = run(capsys, "verify", "averaging-theorem", "--code", "1^6", "--genus", "2")
    b = run(capsys, "verify", "averaging-theorem", "--code", "1^6", "--genus", "2")
    assert a == b and a[0] == EXIT_OK


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out = run(capsys, "hm", "--genus", "2", "--output", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["equals_cwe_H8"] is True


def test_text_format(capsys):
    code, out = run(capsys, "shadow", "--code", "H8", "--format", "text")
    assert code == EXIT_OK
    assert "hwe: x^8 + 14*x^4*y^4 + y^8" in out


def test_verification_failure_exit_code(capsys):
    # negative controls: E(2) does not span the matrix ring; the octagon has strength 7, not 3
    assert run(capsys, "verify", "span-order", "--kind", "extraspecial", "--m", "2")[0] == EXIT_FAIL
    assert run(capsys, "design-test", "--m", "1", "--expect-strength", "3")[0] == EXIT_FAIL
    assert run(capsys, "design-test", "--m", "1", "--expect-strength", "7")[0] == EXIT_OK


def test_unknown_code(capsys):
    assert run(capsys, "cwe", "--code", "no-such-code")[0] == EXIT_UNKNOWN_CODE


def test_budget(capsys):
    assert run(capsys, "verify", "harmonic8", "--genus", "3")[0] == EXIT_BUDGET


def test_usage_errors(capsys):
    assert run(capsys, "verify", "span-order", "--m", "1")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["group", "order", "--kind", "nonsense"])
    assert exc.value.code == EXIT_USAGE


def test_codes_enumerate(capsys):
    code, out = run(capsys, "codes", "enumerate", "--length", "8")
    assert json.loads(out)["count"] == "2"
    code, out = run(capsys, "codes", "enumerate", "--length", "8", "--doubly-even")
    assert json.loads(out)["count"] == "1"
    code, out = run(capsys, "codes", "enumerate", "--length", "4", "--p", "3")
    assert json.loads(out)["classes"][0]["weight_distribution"] == ["1", "0", "0", "8", "0"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "averaging-lemma", "--code", "1^4", "--genus", "2"],
        ["verify", "parabolic-basis", "--length", "8", "--genus", "2"],
        ["verify", "harmonic8", "--genus", "1"],
        ["verify", "tensor", "--m", "2"],
        ["verify", "automorphism", "--m", "2", "--variant", "complex"],
        ["verify", "span-order", "--m", "2"],
        ["verify", "averaging-theorem", "--code", "golay12", "--p", "3", "--variant", "odd_p"],
        ["group", "closure", "--kind", "real", "--m", "1"],
        ["group", "order", "--kind", "odd_p", "--m", "1", "--p", "3"],
        ["cwe", "--code", "tetracode", "--genus", "1"],
        ["lattice", "build", "--m", "3", "--primed"],
    ],
)
def test_subcommands_succeed(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_OK, out
    assert json.loads(out)["ok"] is True


def test_selftest_subset(capsys):
    code, out = run(capsys, "selftest", "--criteria", "5,9", "--format", "text")
    assert code == EXIT_OK
    assert out.count("[PASS]") == 6


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cliffordinv", "hm", "--genus", "1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["term_count"] == "16"
