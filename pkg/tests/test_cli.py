import io
import json
import subprocess
import sys

import pytest

from liemodels.cli import run
from catalog_docs import BUILDS


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_witt():
    assert call("witt", "--n", "3", "--r", "3") == (0, "3 3 8\n")
    code, text = call("witt", "--n", "4", "--r", "4", "--hall")
    assert code == 0 and "agrees" in text


def test_holonomy():
    code, text = call("holonomy", "--a1", "5", "--a2", "-4")
    assert code == 0
    assert "roots c^2: 1 accepted, 4 accepted" in text
    assert "trivial c: -2, -1, 1, 2" in text


def test_classify():
    code, text = call("classify", "--n", "3", "--r", "3")
    assert code == 0
    for g in ("(3,6,14)", "(3,6,11)", "(3,6,9)"):
        assert g in text
    assert call("classify", "--n", "4", "--r", "3")[0] == 3


def test_equivariant_json():
    code, text = call("equivariant", "--v1", "R3", "--v2", "s", "--w", "R3", "--group", "O3")
    doc = json.loads(text)
    assert code == 0 and doc["dimension"] == doc["predicted"] == 1
    assert len(doc["basis"][0]) == 3 and len(doc["basis"][0][0]) == 3 and len(doc["basis"][0][0][0]) == 5


@pytest.mark.parametrize("argv", BUILDS, ids=[" ".join(a) for a in BUILDS])
def test_build_verify_and_roundtrip(tmp_path, argv):
    f = tmp_path / "doc.json"
    assert call("build", *argv, "-o", str(f))[0] == 0
    first = f.read_bytes()
    code, text = call("verify", "jacobi", str(f))
    assert code == 0, text
    # re-export from the loaded document
    from liemodels.serialize import algebra_to_doc, dumps, loads
    g, subs, family = loads(first.decode())
    assert dumps(algebra_to_doc(g, subs, family)).encode() == first


def test_mutated_document_fails(tmp_path):
    f = tmp_path / "c.json"
    call("build", "c33", "--a1", "5", "--a2", "-4", "-o", str(f))
    doc = json.loads(f.read_text())
    doc["brackets"][0]["terms"][0]["c"] = "2"
    f.write_text(json.dumps(doc, indent=2) + "\n")
    code, text = call("verify", "jacobi", str(f))
    assert code == 1
    assert "FAILED" in text and "(x1, x2, y1)" in text


def test_iso_export_and_verify(tmp_path):
    m, s, t = (str(tmp_path / n) for n in ("m.json", "s.json", "t.json"))
    assert call("iso", "a33_to_g2c", "--kappa", "1", "-o", m, "--source-out", s, "--target-out", t)[0] == 0
    assert call("verify", "iso", "--map", m, "--from", s, "--to", t)[0] == 0
    doc = json.loads(open(m).read())
    doc["matrix"][0][0] = "7"
    open(m, "w").write(json.dumps(doc))
    code, text = call("verify", "iso", "--map", m, "--from", s, "--to", t)
    assert code == 1 and "FAILED" in text


def test_growth_and_killing(tmp_path):
    f = str(tmp_path / "a.json")
    call("build", "a33", "--kappa", "-1", "-o", f)
    assert call("growth", f) == (0, "(3,6,11)\n")
    assert call("growth", f, "--p", "nope")[0] == 2
    code, text = call("killing", f)
    assert code == 0 and "(8,6,0)" in text


def test_killing_of_gaussian_document_is_unsupported(tmp_path):
    f = str(tmp_path / "c.json")
    call("build", "so_complex", "-o", f)
    assert call("killing", f)[0] == 3


@pytest.mark.parametrize("argv, code", [
    (["build", "c33", "--a1", "1.5", "--a2", "0"], 2),
    (["build", "a33"], 2),
    (["build", "nope"], 2),
    (["verify", "jacobi", "/nonexistent.json"], 2),
    (["build", "table1", "--case", "a2_pos", "--a1", "2", "--a2", "1"], 3),
    (["iso", "lemma_bk", "--a1", "1", "--a2", "-1"], 3),
    (["iso", "lemma_exceptional", "--a1", "1", "--a2", "-1/4"], 3),
    ([], 2),
])
def test_exit_codes(argv, code, capsys):
    assert call(*argv)[0] == code
    if code == 3:
        assert "unsupported" in capsys.readouterr().err


def test_rigidity_a33():
    code, text = call("rigidity", "--kind", "a33")
    assert code == 0 and "E3: earlier" in text


def test_rigidity_f33():
    code, text = call("rigidity", "--kind", "f33")
    assert code == 0
    assert "all coefficients zero" in text and "dim 17, growth (3,6,14)" in text


def test_list():
    code, text = call("list")
    assert code == 0 and "table3 --case exceptional" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "liemodels.cli", "witt", "--n", "3", "--r", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3 3 8\n"
