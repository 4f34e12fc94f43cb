"""Command-line surface: dispatch, exit codes, artifacts, determinism."""

import json

import pytest

from ortholeg.cli import main


def run(tmp_path, *argv):
    out = tmp_path / "artifact.out"
    code = main([*argv, "--output", str(out)])
    return code, out.read_text() if out.exists() else ""


def test_verify_identities_ledger(tmp_path):
    code, text = run(tmp_path, "verify-identities", "--n-max", "3")
    assert code == 0
    lines = [json.loads(line) for line in text.strip().splitlines()]
    assert all(entry["status"] == "pass" for entry in lines)
    identities = {entry["identity"] for entry in lines}
    assert "legendre-christoffel-darboux" in identities
    assert "fejer-riesz" in identities
    assert "pfd-plus" in identities
    assert "weighted-orthogonality" in identities
    assert {e["k"] for e in lines if e["identity"] == "pfd-minus" and e["n"] == 3} == {0, 1, 2, 3}


def test_verify_theorem(tmp_path):
    code, text = run(tmp_path, "verify-theorem", "--n", "10", "--tol", "1e-10")
    assert code == 0
    payload = json.loads(text)
    assert payload["status"] == "pass"
    assert payload["max_offdiag"] < 1e-10
    assert payload["max_diag_dev"] < 1e-10
    assert len(payload["gram"]) == 11


def test_moments_payload(tmp_path):
    code, text = run(tmp_path, "moments", "--n", "1")
    assert code == 0
    payload = json.loads(text)
    assert payload["k0"] == "2"
    assert payload["others"] == "0"


def test_factor_payload(tmp_path):
    code, text = run(tmp_path, "factor", "--n", "2")
    assert code == 0
    payload = json.loads(text)
    assert payload["f"] == {"0": "3/8", "2": "3/4", "4": "15/8"}
    assert payload["g"] == {"0": "15/8", "2": "3/4", "4": "3/8"}
    assert all(c["status"] == "pass" for c in payload["certificates"])


def test_roots_payload(tmp_path):
    code, text = run(tmp_path, "roots", "--n", "4")
    assert code == 0
    payload = json.loads(text)
    assert payload["status"] == "pass"
    assert len(payload["roots"]) == 8
    assert all(r["modulus"] < 1 for r in payload["roots"])


def test_gram_csv(tmp_path):
    code, text = run(tmp_path, "gram", "--n", "2", "--count", "100", "--seed", "5", "--format", "csv")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "g0,g1,g2"
    assert len(lines) == 4


def test_sample_csv_and_json(tmp_path):
    code, text = run(tmp_path, "sample", "--count", "5", "--seed", "3", "--format", "csv")
    assert code == 0
    assert text.startswith("x\n")
    code, text = run(tmp_path, "sample", "--count", "5", "--seed", "3")
    payload = json.loads(text)
    assert payload["count"] == 5 and len(payload["points"]) == 5


def test_fit_json(tmp_path):
    code, text = run(tmp_path, "fit", "--n", "4", "--count", "200", "--seed", "1")
    assert code == 0
    payload = json.loads(text)
    assert payload["target"] == "exp(x)"
    assert len(payload["coefficients"]) == 5
    assert payload["residual_rms"] >= 0


def test_invalid_configuration_exits_two(tmp_path):
    assert main(["moments", "--n", "0"]) == 2
    assert main(["verify-identities", "--n-max", "0"]) == 2
    assert main(["sample", "--count", "0"]) == 2
    assert main(["verify-theorem", "--n", "2", "--tol", "-1"]) == 2


def test_unknown_command_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_missing_required_flag_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["verify-theorem"])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("verify-identities", "--n-max", "2"),
        ("verify-theorem", "--n", "3"),
        ("factor", "--n", "3"),
        ("roots", "--n", "3"),
        ("moments", "--n", "2"),
        ("gram", "--n", "2", "--count", "150", "--seed", "6"),
        ("sample", "--count", "25", "--seed", "2"),
        ("fit", "--n", "3", "--count", "80", "--seed", "4"),
    ],
)
def test_byte_identical_reruns(tmp_path, argv):
    first = tmp_path / "first.out"
    second = tmp_path / "second.out"
    assert main([*argv, "--output", str(first)]) == 0
    assert main([*argv, "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_stdout_when_no_output(capsys):
    assert main(["moments", "--n", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["k0"] == "2"


@pytest.mark.parametrize(
    "argv",
    [
        ("verify-identities", "--n-max", "2"),
        ("verify-theorem", "--n", "2"),
        ("factor", "--n", "2"),
        ("roots", "--n", "2"),
        ("moments", "--n", "2"),
        ("gram", "--n", "2", "--count", "50"),
        ("sample", "--count", "5"),
        ("fit", "--n", "2", "--count", "50"),
    ],
)
def test_text_format_renders(tmp_path, argv):
    code, text = run(tmp_path, *argv, "--format", "text")
    assert code == 0
    assert text.endswith("\n")


def test_verify_theorem_csv(tmp_path):
    code, text = run(tmp_path, "verify-theorem", "--n", "2", "--format", "csv")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "g0,g1,g2"
    assert len(lines) == 4


def test_fit_csv_predictions(tmp_path):
    code, text = run(tmp_path, "fit", "--n", "2", "--count", "60", "--format", "csv")
    assert code == 0
    assert text.startswith("x,prediction\n")
