from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from weiljet.cli import SAMPLES, run, sample
from weiljet.errors import SchemaError
from weiljet.jets import SECOND, JetCandidate, SectionJet, from_section_jet
from weiljet.poly import parse_poly
from weiljet.jets.io import candidate_from_json, candidate_to_json, load, tower_from_json, tower_to_json

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).parent / "golden"
SAMPLE_DIR = ROOT / "samples"


def run_json(*argv):
    code, text = run([*argv, "--json"])
    doc = json.loads(text)
    doc.pop("timing")
    return code, doc


def golden(name):
    return json.loads((GOLDEN / name).read_text())


@pytest.mark.parametrize("expr,name", [("D{3}_2", "qcr_D3_2.json"), ("D(2)", "qcr_D2_paren.json")])
def test_qcr_matches_golden(expr, name):
    code, doc = run_json("qcr", expr)
    assert code == 0
    assert doc == golden(name)


@pytest.mark.parametrize("stem,code", [("holonomic-d2", 0), ("semi-holonomic-d2", 1)])
def test_check_jet_matches_golden(stem, code):
    got, doc = run_json("check-jet", str(SAMPLE_DIR / f"{stem}.json"), "--tangential")
    assert got == code
    assert doc == golden(f"check_{stem}.json")


def test_semi_holonomic_sample_fails_only_last_product():
    code, doc = run_json("check-jet", str(SAMPLE_DIR / "semi-holonomic-d2.json"), "--tangential")
    failed = [e["name"] for e in doc["entries"] if e["verdict"] == "fail"]
    assert failed == ["order 2: last-product compatibility"]
    # the non-tangential check does not see it
    assert run(["check-jet", str(SAMPLE_DIR / "semi-holonomic-d2.json")])[0] == 0


def test_output_is_deterministic():
    a = run_json("qcr", "D{3;(1,3),(2,3)}")
    b = run_json("qcr", "D{3;(1,3),(2,3)}")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_text_rendering():
    code, text = run(["qcr", "D{3}_2"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "standard representation of D{3}_2"
    assert "  pieces: 3" in lines and "  overlaps: 3" in lines
    assert any(line.startswith("  verdict: LIMIT") for line in lines)
    assert "overall: PASS" in lines


@pytest.mark.parametrize("bad", ["D_2x", "D{3", "E(2)"])
def test_qcr_bad_expression_exits_2(bad):
    code, text = run(["qcr", bad])
    assert code == 2 and text.startswith("error:")


def test_verify_identities_single_suite():
    code, doc = run_json("verify-identities", "--only", "limits", "--n", "2")
    assert code == 0
    names = [e["name"] for e in doc["entries"]]
    assert all(n.startswith("limits: ") for n in names)
    assert "limits: symmetric equalizer n=3" in names


def test_verify_identities_all_suites_pass():
    code, doc = run_json("verify-identities")
    assert code == 0
    prefixes = {e["name"].split(":")[0] for e in doc["entries"]}
    assert prefixes == {"simplicial", "limits", "inclusions", "qcr"}


@pytest.mark.parametrize("n", ["-1", "6"])
def test_verify_identities_cap_exits_3(n):
    assert run(["verify-identities", "--n", n])[0] == 3


def test_check_tower_classification():
    code, doc = run_json("check-jet", str(SAMPLE_DIR / "holonomic-tower.json"))
    assert code == 0
    assert doc["result"] == {"classification": "holonomic"}


def test_phi_from_tower(tmp_path):
    out = tmp_path / "image.json"
    code, text = run(["transmogrify", str(SAMPLE_DIR / "holonomic-tower.json"), "--map", "phi",
                      "--output", str(out)])
    assert code == 0
    image = candidate_from_json(json.loads(out.read_text()))
    assert image == candidate_from_json(sample("holonomic-d2"))


def test_phi_rejects_candidate_file():
    code, text = run(["transmogrify", str(SAMPLE_DIR / "holonomic-d2.json"), "--map", "phi"])
    assert code == 2 and "tower" in text


def test_phi_of_perturbed_tower_reports_and_stops(tmp_path):
    t = tower_from_json(sample("holonomic-tower")).with_entry(2, 1, 1, 1)
    path = tmp_path / "semi.json"
    path.write_text(json.dumps(tower_to_json(t)))
    code, doc = run_json("transmogrify", str(path), "--map", "phi")
    assert code == 1
    assert "result" not in doc
    failed = [e["name"] for e in doc["entries"] if e["verdict"] == "fail"]
    assert failed == ["input: level 2: holonomy composites agree"]


def test_psi_from_cube_jet(tmp_path):
    out = tmp_path / "line.json"
    code, doc = run_json("transmogrify", str(SAMPLE_DIR / "holonomic-d3.json"), "--map", "psi",
                         "--output", str(out))
    assert code == 0
    names = [e["name"] for e in doc["entries"]]
    assert names[:2] == ["image is symmetric", "k! rule agrees with elimination"]
    image = candidate_from_json(json.loads(out.read_text()))
    assert image.approach == "third" and image.n == 3


def test_psi_of_semi_holonomic_sample_is_symmetric_but_not_tangential(tmp_path):
    code, doc = run_json("transmogrify", str(SAMPLE_DIR / "semi-holonomic-d2.json"), "--map", "psi")
    assert code == 1
    failed = [e["name"] for e in doc["entries"] if e["verdict"] == "fail"]
    assert failed == ["image: order 2: simple polynomial d^2", "image: order 2: simple polynomial d + d^2"]


def test_psi_of_asymmetric_candidate_fails(tmp_path):
    c = JetCandidate(SECOND, 2, [0], [0], {(0, ((0, 1),)): parse_poly("g1_10")})
    path = tmp_path / "asym.json"
    path.write_text(json.dumps(candidate_to_json(c)))
    code, doc = run_json("transmogrify", str(path), "--map", "psi")
    assert code == 1
    assert [e["verdict"] for e in doc["entries"]] == ["fail"]
    assert doc["entries"][0]["name"] == "image is symmetric"
    assert "result" not in doc


def test_missing_file_and_bad_json(tmp_path):
    assert run(["check-jet", str(tmp_path / "nope.json")])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, text = run(["check-jet", str(bad)])
    assert code == 2 and "invalid JSON" in text


@pytest.mark.parametrize("name", SAMPLES)
def test_sample_files_are_current(name):
    code, text = run(["sample", name])
    assert code == 0
    assert json.loads(text) == json.loads((SAMPLE_DIR / f"{name}.json").read_text())


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "weiljet.cli", "qcr", "D(3)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "overall: PASS" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "weiljet.cli", "qcr", "D{"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr.startswith("error:")


# -- file format ----------------------------------------------------------------


def test_candidate_round_trip_symbolic():
    c = from_section_jet(SectionJet.symbolic(2, 2, 2), SECOND, 2)
    assert candidate_from_json(candidate_to_json(c)) == c


def test_tower_round_trip():
    t = tower_from_json(sample("holonomic-tower"))
    assert tower_from_json(tower_to_json(t)) == t
    assert load(tower_to_json(t)) == t


def _jet():
    return sample("holonomic-d2")


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(schema="other"),
        lambda d: d.update(version=2),
        lambda d: d.update(approach="fourth"),
        lambda d: d.update(n=7),
        lambda d: d.update(n=True),
        lambda d: d.pop("base"),
        lambda d: d["body"][0].update(fiber=2),
        lambda d: d["body"][0].update(monomial="X1^2"),
        lambda d: d["body"][0].update(monomial="2*X1"),
        lambda d: d["body"][0].update(value="g1_1 +"),
        lambda d: d["body"].append(dict(d["body"][0])),
        lambda d: d.update(base=[1.5, 2]),
    ],
)
def test_bad_candidate_files_raise_schema_error(mutate):
    d = _jet()
    mutate(d)
    with pytest.raises(SchemaError):
        candidate_from_json(d)


def test_bad_tower_files_raise_schema_error():
    d = sample("holonomic-tower")
    d["levels"][0] = [["1"]]
    with pytest.raises(SchemaError):
        tower_from_json(d)
    d = sample("holonomic-tower")
    d["levels"] = [d["levels"][0]] * 4
    with pytest.raises(SchemaError):
        tower_from_json(d)
    with pytest.raises(SchemaError):
        load([1, 2])


def test_qcr_over_cap_exits_3():
    code, text = run(["qcr", "D{7}_3"])
    assert code == 3 and "cap" in text
