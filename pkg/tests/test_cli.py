import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from irredcert.cli import run

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("IRREDCERT_UPDATE_GOLDEN") == "1"


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _golden(name, text):
    path = GOLDEN / name
    if UPDATE:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")


def test_certify_and_verify(tmp_path, capsys):
    cert = tmp_path / "a.ipcert.json"
    code, out, _ = _run(capsys, "certify", "z^2 + z + 1", "--out", str(cert))
    assert code == 0
    assert "[PASS] window" in out
    obj = json.loads(cert.read_text())
    assert (obj["arithmetic"]["n"], obj["arithmetic"]["p"]) == ("3", "13")
    code, out, _ = _run(capsys, "verify", str(cert))
    assert code == 0 and out.strip().endswith("PASS")

    obj["arithmetic"]["k"] = "2"
    bad = tmp_path / "tampered.ipcert.json"
    bad.write_text(json.dumps(obj))
    assert _run(capsys, "verify", str(bad))[0] == 1

    broken = tmp_path / "broken.ipcert.json"
    broken.write_text('{"format": 1')
    assert _run(capsys, "verify", str(broken))[0] == 2
    assert _run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 2


def test_certify_exit_codes(capsys):
    assert _run(capsys, "certify", "z^2 - 1", "--n-max", "40")[0] == 1
    code, _, err = _run(capsys, "certify", "z^2 +* 1")
    assert code == 2 and "position" in err
    assert _run(capsys, "certify", "2*z^2 + 4")[0] == 2
    assert _run(capsys, "certify", "z + 1")[0] == 2
    assert _run(capsys, "certify", "z^2+z+1", "--j", "1")[0] == 2


def test_certify_explicit_annulus(capsys):
    code, out, _ = _run(capsys, "certify", "6 + z + 512*z^2 - z^3", "--theorems", "t2",
                        "--j", "2", "--alpha", "1/2", "--beta", "4", "--json")
    assert code == 0
    dom = json.loads(out)["certificate"]["dominance"]
    assert dom["alpha"] == {"num": "1", "den": "2"} and dom["j"] == "2"
    code, out, _ = _run(capsys, "certify", "6 + z + 512*z^2 - z^3", "--theorems", "t2",
                        "--j", "2", "--alpha", "0.5", "--beta", "4.0", "--json")
    assert code == 0 and json.loads(out)["certificate"]["dominance"]["alpha"]["den"] == "2"


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["certify", "z^2+1", "--bogus"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_factor(capsys):
    code, out, _ = _run(capsys, "factor", "z^4+4")
    assert code == 0
    assert "(2 - 2*z + z^2)" in out and "(2 + 2*z + z^2)" in out
    assert _run(capsys, "factor", "z^7 + 1")[0] == 3
    assert _run(capsys, "factor", "z^7 + 1", "--max-degree", "7")[0] == 0


def test_gen_and_theorem_a(capsys):
    code, out, _ = _run(capsys, "gen", "F3", "--p", "2", "--m", "2", "--k", "4", "--d", "1")
    assert code == 0 and out.splitlines()[0] == "-4 + z + 4*z^2"
    code, _, err = _run(capsys, "gen", "F1", "--p", "2", "--ell", "2", "--m", "3", "--k", "5", "--d", "1")
    assert code == 2 and "gcd(p, ell)" in err
    assert _run(capsys, "gen", "F6", "--p", "5", "--m", "3")[0] == 2
    assert _run(capsys, "validate-theorem-a", "--m", "7")[0] == 0
    assert _run(capsys, "validate-theorem-a", "--m", "1")[0] == 2


def test_roots_table(capsys):
    code, out, _ = _run(capsys, "roots", "z^2 - z - 1")
    assert code == 0 and "1.61803398874989" in out


def test_scan_corpus(capsys, tmp_path):
    out_file = tmp_path / "s.json"
    code, out, _ = _run(capsys, "scan-corpus", "--degree", "2", "--coeff-bound", "2", "--out", str(out_file))
    assert code == 0 and "disagreements: 0" in out
    assert json.loads(out_file.read_text())["counts"]["total"] == 82


@pytest.mark.parametrize(
    "name, argv",
    [
        ("certify_z2_z_1.json", ["certify", "z^2 + z + 1", "--json"]),
        ("certify_no_witness.json", ["certify", "z^2 - 1", "--n-max", "20", "--json"]),
        ("factor_z4_4.json", ["factor", "z^4+4", "--json"]),
        ("gen_f3.json", ["gen", "F3", "--p", "2", "--m", "2", "--k", "4", "--d", "1", "--json"]),
        ("gen_f1_ell2.json", ["gen", "F1", "--p", "3", "--ell", "2", "--m", "3", "--k", "5", "--d", "1", "--json"]),
        ("theorem_a_m3.json", ["validate-theorem-a", "--m", "3", "--json"]),
        ("roots_golden.json", ["roots", "z^2 - z - 1", "--json"]),
        ("scan_deg2_b2.json", ["scan-corpus", "--degree", "2", "--coeff-bound", "2", "--json"]),
    ],
)
def test_json_golden(name, argv, capsys):
    _, out, _ = _run(capsys, *argv)
    json.loads(out)
    _golden(name, out)


def test_verify_json_golden(tmp_path, capsys):
    cert = tmp_path / "c.ipcert.json"
    _run(capsys, "certify", "-4 + z + 4*z^2", "--out", str(cert))
    _, out, _ = _run(capsys, "verify", str(cert), "--json")
    _golden("verify_f3.json", out)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "irredcert", "factor", "z^2-1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "(-1 + z)" in res.stdout
