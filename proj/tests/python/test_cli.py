import json
import os
import subprocess

import pytest

CLI = os.environ.get("PELLFRIEZE_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="PELLFRIEZE_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def write_dissection(tmp_path, name, n, arcs):
    path = tmp_path / name
    path.write_text(json.dumps({"n": n, "arcs": arcs}))
    return str(path)


def test_frieze_text(tmp_path):
    path = write_dissection(tmp_path, "pent.json", 5, [[0, 3]])
    result = run("frieze", path, "--verify")
    assert result.returncode == 0
    assert "f(2,4) = 1+√2" in result.stdout
    assert "ptolemy-closure: ok" in result.stdout


def test_frieze_json(tmp_path):
    path = write_dissection(tmp_path, "pent.json", 5, [[0, 3]])
    result = run("frieze", path, "--format", "json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["n"] == 5
    assert doc["weights"]["2,4"] == "1+√2"


def test_check_ten_gon(tmp_path):
    path = write_dissection(tmp_path, "ten.json", 10, [[1, 9], [2, 8], [4, 8], [5, 7]])
    result = run("check", path)
    assert result.returncode == 0
    verdict = json.loads(result.stdout)
    assert verdict == {
        "n": 10,
        "unitary": True,
        "unitary_witnesses_count": 2,
        "tower_decomposable": True,
        "decompositions": 2,
        "type": 3,
        "separated": False,
    }


def test_check_square():
    # The empty square dissection is the Euclidean frieze L_4.
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "sq.json")
        with open(path, "w") as f:
            json.dump({"n": 4, "arcs": []}, f)
        verdict = json.loads(run("check", path).stdout)
    assert verdict["unitary"] is False
    assert verdict["tower_decomposable"] is False


def test_check_tower(tmp_path):
    # A 3-tower on a 9-gon: fan triangulation from the roof is unitary.
    path = write_dissection(tmp_path, "tower.json", 9, [[1, 8], [2, 7], [3, 6]])
    verdict = json.loads(run("check", path).stdout)
    assert verdict["unitary"] is True
    assert verdict["tower_decomposable"] is True
    assert verdict["type"] == 2
    assert verdict["decompositions"] == 1


def test_exit_codes(tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    assert run("frieze", str(bad_json)).returncode == 2

    crossing = write_dissection(tmp_path, "crossing.json", 5, [[0, 2], [1, 3]])
    assert run("frieze", crossing).returncode == 3

    hexagon = write_dissection(tmp_path, "hex.json", 6, [])  # face size 6
    assert run("frieze", hexagon).returncode == 3

    assert run("scan", "--n", "oops").returncode == 2


def test_scan_deterministic_across_workers(tmp_path):
    outputs = []
    for workers in ("1", "2", "8"):
        out = tmp_path / f"scan{workers}.json"
        result = run("scan", "--n", "5..8", "--workers", workers, "-o", str(out))
        assert result.returncode == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    reports = json.loads(outputs[0])["reports"]
    assert [r["n"] for r in reports] == [5, 6, 7, 8]
    assert all(r["counterexamples"] == [] for r in reports)


def test_scan_four_angulations(tmp_path):
    result = run("scan", "--n", "4..10", "--four-angulations")
    assert result.returncode == 0
    reports = json.loads(result.stdout)["reports"]
    assert all(r["unitary"] == 0 for r in reports)
    assert sum(r["examined"] for r in reports) > 0


def test_scan_lemma56():
    result = run("scan", "--n", "5..8", "--lemma56")
    assert result.returncode == 0
    reports = json.loads(result.stdout)["lemma56_reports"]
    assert all(r["violations"] == [] for r in reports)


def test_render(tmp_path):
    path = write_dissection(tmp_path, "ten.json", 10, [[1, 9], [2, 8], [4, 8], [5, 7]])
    result = run("render", path)
    assert result.returncode == 0
    assert result.stdout.count('class="chord"') == 4

    overlay = run("render", path, "--overlay-units")
    assert 'class="overlay"' in overlay.stdout


def test_sequences_table():
    result = run("sequences", "--max", "5")
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0].split() == ["n", "s_n", "d_n", "l_n", "a_n", "b_n", "Q_n"]
    assert lines[-1].split() == ["5", "41", "29√2", "41+29√2", "41", "29", "29"]
