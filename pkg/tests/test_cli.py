"""End-to-end tests of the command-line interface via subprocess."""

import csv
import io
import json
import os
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from lsqmc.discrepancy import star_disc_1d, star_disc_2d
from lsqmc.quadfield import make_params
from lsqmc.sequence import sequence_prefix
from lsqmc.square import vdc_set


def run_cli(*args, env_extra=None):
    env = os.environ.copy()
    env.update(env_extra or {})
    return subprocess.run([sys.executable, "-m", "lsqmc", *args],
                          capture_output=True, env=env)


def test_gen_csv_values():
    r = run_cli("gen", "--params", "1,1", "-N", "3")
    assert r.returncode == 0
    text = r.stdout.decode("utf-8")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["i", "x"]
    pts = sequence_prefix(make_params(1, 1), 3)
    for i, row in enumerate(rows[1:]):
        assert row == [str(i), format(float(pts[i]), ".12g")]


def test_csv_uses_crlf_rows():
    r = run_cli("gen", "--params", "2,1", "-N", "2")
    assert b"\r\n" in r.stdout


def test_csv_round_trip():
    # every float field re-parses and re-formats to the same text
    r = run_cli("vdc", "--params", "1,3", "-N", "20")
    rows = list(csv.reader(io.StringIO(r.stdout.decode("utf-8"))))
    for row in rows[1:]:
        for field in row[1:]:
            assert format(float(field), ".12g") == field


def test_determinism_byte_identical():
    for args in [("disc2d", "--params", "1,1", "-N", "64"),
                 ("scan", "--params", "1,2", "--kind", "seq",
                  "--grid", "10,30"),
                 ("halton", "--p1", "1,1", "--p2", "4,1", "-N", "40",
                  "--format", "svg")]:
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.returncode == 0
        assert a.stdout == b.stdout


def test_disc1d_json_report():
    r = run_cli("disc1d", "--params", "1,1", "-N", "1")
    obj = json.loads(r.stdout)
    assert obj["value"] == 1.0
    assert obj["n_points"] == 1
    assert obj["method"] == "formula"
    assert obj["mode"] == "star"
    assert set(obj["witness"]) == {"lower", "upper", "lower_open", "upper_open"}


def test_disc1d_matches_library():
    r = run_cli("disc1d", "--params", "2,1", "-N", "55", "--mode", "star")
    obj = json.loads(r.stdout)
    ref = star_disc_1d(sequence_prefix(make_params(2, 1), 55)).value
    assert obj["value"] == float(format(ref, ".12g"))


def test_disc2d_matches_library():
    r = run_cli("disc2d", "--params", "1,1", "-N", "89")
    obj = json.loads(r.stdout)
    ref = star_disc_2d(vdc_set(make_params(1, 1), 89)).value
    assert obj["value"] == float(format(ref, ".12g"))
    assert obj["construction"] == "vdc"
    assert obj["method"] == "grid_scan"


def test_resonance_json():
    r = run_cli("resonance", "--p1", "1,1", "--p2", "4,1")
    obj = json.loads(r.stdout)
    assert obj == {"command": "resonance", "related": True, "p": 3, "q": 1,
                   "field_match": True, "count_relation": 3}


def test_svg_structure(tmp_path):
    out = tmp_path / "pts.svg"
    r = run_cli("halton", "--p1", "1,1", "--p2", "4,1", "-N", "25",
                "--format", "svg", "--grid", "-o", str(out))
    assert r.returncode == 0
    root = ET.parse(out).getroot()
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert root.get("width") == "600" and root.get("height") == "600"
    assert root.get("viewBox") == "0 0 600 600"
    assert root.get("version") == "1.1"
    circles = [e for e in root.iter()
               if e.tag == "{http://www.w3.org/2000/svg}circle"]
    assert len(circles) == 25
    assert all(c.get("r") == "1" for c in circles)
    lines = [e for e in root.iter()
             if e.tag == "{http://www.w3.org/2000/svg}line"]
    assert len(lines) == 18
    plain = run_cli("vdc", "--params", "1,1", "-N", "5", "--format", "svg")
    assert b"<line" not in plain.stdout


def test_output_file_matches_stdout(tmp_path):
    out = tmp_path / "pts.csv"
    to_file = run_cli("gen", "--params", "1,2", "-N", "12", "-o", str(out))
    assert to_file.returncode == 0 and to_file.stdout == b""
    piped = run_cli("gen", "--params", "1,2", "-N", "12")
    assert out.read_bytes().replace(b"\r\n", b"\n") == \
        piped.stdout.replace(b"\r\n", b"\n")


def test_scan_partition_kind():
    r = run_cli("scan", "--params", "1,1", "--kind", "partition",
                "--grid", "3,5", "--mode", "extreme")
    rows = list(csv.reader(io.StringIO(r.stdout.decode("utf-8"))))
    assert rows[0][:4] == ["kind", "size", "n_points", "value"]
    assert rows[1][0] == "partition"
    assert [row[2] for row in rows[1:]] == ["5", "13"]   # t_3, t_5


def test_exit_code_invalid_params():
    for args in [("gen", "--params", "0,1", "-N", "3"),
                 ("gen", "--params", "1", "-N", "3"),
                 ("gen", "--params", "a,b", "-N", "3"),
                 ("disc2d", "--params", "1,1", "--p1", "1,1",
                  "--p2", "2,1", "-N", "4"),
                 ("disc2d", "-N", "4"),
                 ("scan", "--params", "1,1", "--kind", "seq", "--grid", "0"),
                 ("gen", "-N", "3")]:
        r = run_cli(*args)
        assert r.returncode == 1, args
        assert r.stderr


def test_exit_code_resource_guard():
    r = run_cli("partition", "--params", "1,1", "-n", "60")
    assert r.returncode == 2
    assert b"cap" in r.stderr


def test_interval_cap_env_override():
    # t_9 = 89 for (1,1): a cap of 89 admits level 9, 88 blocks it
    ok = run_cli("partition", "--params", "1,1", "-n", "9",
                 env_extra={"LSQMC_MAX_INTERVALS": "89"})
    assert ok.returncode == 0
    blocked = run_cli("partition", "--params", "1,1", "-n", "9",
                      env_extra={"LSQMC_MAX_INTERVALS": "88"})
    assert blocked.returncode == 2
    bad = run_cli("partition", "--params", "1,1", "-n", "2",
                  env_extra={"LSQMC_MAX_INTERVALS": "many"})
    assert bad.returncode == 1
