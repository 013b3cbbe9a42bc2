import json
import subprocess
import sys

import pytest

from lltschur.cli import main
from lltschur.llt import PIECES, Component, ShapeTuple
from lltschur.symfunc import FundVector, MonomialVector, SchurVector, TwoSchurVector

N6_LINES = [
    "k[1,1,1,1,1,1] + (q^4 + 2q^3)*k[2,1,1,1,1] + (2q^6 + q^5)*k[2,2,1,1] + q^7*k[2,2,2]",
    "k[1,1,1,1,1,1] + 3q^3*k[2,1,1,1,1] + 3q^5*k[2,2,1,1] + q^6*k[2,2,2]",
    "k[1,1,1,1,1,1] + (2q^3 + q^2)*k[2,1,1,1,1] + (q^5 + 2q^4)*k[2,2,1,1] + q^5*k[2,2,2]",
]


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_unicellular_example(capsys):
    code, out, _ = run(capsys, "unicellular", "--n", "6", "--lambda", "1,1|2,1|3,1", "--basis", "two-schur")
    assert code == 0
    assert out.splitlines() == N6_LINES


def test_kschur_and_hl(capsys):
    assert run(capsys, "kschur", "--lambda", "2", "--basis", "schur")[1].strip() == "s[2]"
    code, out, _ = run(capsys, "hall-littlewood", "--lambda", "1,1", "--basis", "schur")
    assert code == 0 and out.strip() == "s[1,1] + q*s[2]"
    assert run(capsys, "kschur", "--lambda", "2,1,1,0", "--basis", "two-schur")[1].strip() == "k[2,1,1]"


def test_llt_q_one(capsys):
    code, out, _ = run(capsys, "llt", "--tuple", "HV", "--basis", "schur", "--q", "1")
    assert code == 0
    assert "q=1 check: equal" in out


def test_llt_from_shape_file(capsys, tmp_path):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps(ShapeTuple((Component.skew([2, 1]), PIECES["0"])).to_json()))
    code, out, _ = run(capsys, "llt", "--shape", str(path), "--basis", "schur", "--q", "1")
    assert code == 0 and "equal" in out


@pytest.mark.parametrize("basis,cls", [
    ("schur", SchurVector), ("two-schur", TwoSchurVector),
    ("fundamental", FundVector), ("monomial", MonomialVector),
])
def test_json_round_trip(capsys, basis, cls):
    code, out, _ = run(capsys, "unicellular", "--n", "4", "--lambda", "1", "--basis", basis, "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["lambda"] == [1]
    v = cls.from_json(rec["expansion"])
    assert json.loads(json.dumps(v.to_json())) == rec["expansion"]


def test_exit_codes(capsys):
    assert run(capsys, "unicellular", "--n", "12", "--lambda", "1")[0] == 3
    assert run(capsys, "llt", "--tuple", "HHHHHH", "--max-n", "10")[0] == 3
    assert run(capsys, "llt", "--tuple", "HV", "--basis", "two-schur")[0] == 1
    assert run(capsys, "unicellular", "--n", "3", "--lambda", "3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["unicellular", "--n", "3", "--lambda", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["llt", "--tuple", "HQ"])
    assert exc.value.code == 2


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "domino", "--max-n", "6", "--format", "json", "--jobs", "1")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) >= {"theorem", "cases", "failures", "elapsed_ms"}
    assert rep["theorem"] == "domino" and rep["failures"] == [] and rep["cases"] > 0


def test_cor71_reports_printed_variant(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "cor71", "--max-n", "4", "--jobs", "1")
    assert code == 0
    assert "corrected" in out and "printed l_2" in out


def test_output_is_reproducible():
    cmd = [sys.executable, "-m", "lltschur", "verify", "--theorem", "haiman2", "--max-n", "6",
           "--samples", "50", "--no-timing", "--format", "json", "--jobs", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd[:-1] + ["1"], capture_output=True, check=True).stdout
    assert a == b
