import json
import subprocess
import sys

import pytest

from qkernel.cli import Command, parse, run


def invoke(*args):
    proc = subprocess.run([sys.executable, "-m", "qkernel.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_parse_enumerate():
    cmd = parse(["enumerate", "--model", "A", "--terms", "11", "--method", "fast"])
    assert isinstance(cmd, Command)
    assert cmd.verb == "enumerate"
    assert [m.value for m in cmd.models] == ["A"]
    assert cmd.options["terms"] == 11 and cmd.options["method"] == "fast"


def test_parse_kappa():
    cmd = parse(["kappa", "--model", "C", "--digits", "12"])
    assert cmd.verb == "kappa"
    assert cmd.options["digits"] == 12


def test_parse_rejects_unknown_model():
    with pytest.raises(SystemExit) as exc:
        parse(["enumerate", "--model", "Z"])
    assert exc.value.code == 2


def test_parse_rejects_unknown_verb():
    with pytest.raises(SystemExit) as exc:
        parse(["frobnicate"])
    assert exc.value.code == 2


def test_enumerate_prints_reference_row():
    rc, out, _ = invoke("enumerate", "--model", "B", "--terms", "11", "--method", "naive")
    assert rc == 0
    assert out.strip() == "B: 1, 2, 6, 20, 70, 254, 942, 3550, 13532, 52030, 201386"


def test_enumerate_json_schema_and_strings():
    rc, out, _ = invoke("enumerate", "--model", "C", "--terms", "30", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    terms = payload["sequences"][0]["terms"]
    assert all(isinstance(t, str) for t in terms)
    # counts cross 2^64 before n=30 for model C: string emission is load-bearing
    assert int(terms[29]) > 2 ** 64


def test_enumerate_seed_check():
    rc, out, _ = invoke("enumerate", "--model", "D", "--terms", "35",
                        "--method", "fast", "--seed-check")
    assert rc == 0


def test_enumerate_deterministic():
    args = ("enumerate", "--model", "all", "--terms", "12", "--format", "csv")
    rc1, out1, _ = invoke(*args)
    rc2, out2, _ = invoke(*args)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_kappa_text_output():
    rc, out, _ = invoke("kappa", "--model", "A", "--digits", "10")
    assert rc == 0
    assert out.startswith("kappa_A = 0.173178883")


def test_kappa_json_includes_interval_for_e():
    rc, out, _ = invoke("kappa", "--model", "E", "--digits", "8", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    entry = payload["constants"][0]
    assert entry["model"] == "E"
    assert entry["bracket"] == ["122/525", "7/10"]


def test_verify_exits_zero():
    rc, out, _ = invoke("verify", "--model", "all", "--terms", "40")
    assert rc == 0
    assert out.count("OK") == 5


def test_singularities_csv(tmp_path):
    out_file = tmp_path / "c.csv"
    rc, out, _ = invoke("singularities", "--model", "C", "--n", "2", "--plane", "t",
                        "--format", "csv", "--output", str(out_file))
    assert rc == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "re,im,n,family,plane"
    assert any(line.startswith("-0.25") for line in lines[1:])


def test_singularities_svg_and_plot(tmp_path):
    svg = tmp_path / "d.svg"
    png = tmp_path / "d.png"
    rc, out, _ = invoke("singularities", "--model", "D", "--n", "2", "--family", "1",
                        "--format", "svg", "--output", str(svg), "--plot", str(png))
    assert rc == 0
    assert svg.read_text().startswith("<svg")
    assert png.stat().st_size > 1000


def test_precision_env_override(tmp_path, monkeypatch):
    proc = subprocess.run(
        [sys.executable, "-m", "qkernel.cli", "kappa", "--model", "B", "--digits", "8"],
        capture_output=True, text=True,
        env={"PATH": "/usr/bin:/bin", "QKERNEL_PRECISION_BITS": "192"})
    assert proc.returncode == 0
    proc = subprocess.run(
        [sys.executable, "-m", "qkernel.cli", "kappa", "--model", "B"],
        capture_output=True, text=True,
        env={"PATH": "/usr/bin:/bin", "QKERNEL_PRECISION_BITS": "garbage"})
    assert proc.returncode != 0


def test_run_returns_exit_code_directly(capsys):
    rc = run(parse(["enumerate", "--model", "A", "--terms", "5"]))
    assert rc == 0
    out = capsys.readouterr().out
    assert out.strip() == "A: 1, 1, 3, 7, 21"


def test_bench_runs(capsys):
    rc = run(parse(["bench", "--model", "A", "--sizes", "30,60", "--methods", "fast"]))
    assert rc == 0
    out = capsys.readouterr().out
    assert "seconds" in out and "fast" in out
