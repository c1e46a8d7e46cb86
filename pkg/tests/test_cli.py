import json

import pytest

from semidec.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_writes_monoid(tmp_path, capsys):
    out = tmp_path / "m.json"
    code, stdout, _ = run(["family", "--kind", "T", "--n", "2", "--ring", "zp:3", "--out", str(out)], capsys)
    assert code == 0
    assert "order=27" in stdout
    payload = json.loads(out.read_text())
    assert payload["size"] == 27
    assert len(payload["elements"]) == 27
    assert "table" in payload


def test_analyze_reports(tmp_path, capsys):
    mon = tmp_path / "m.json"
    run(["family", "--kind", "T", "--n", "2", "--ring", "zp:2", "--out", str(mon)], capsys)
    rep = tmp_path / "rep.json"
    dot = tmp_path / "j.dot"
    code, stdout, _ = run(["analyze", str(mon), "--out", str(rep), "--dot", str(dot)], capsys)
    assert code == 0
    payload = json.loads(rep.read_text())
    assert payload["greens"]["j_classes"] == 5
    assert payload["depth"]["depth"] == 1
    assert dot.read_text().startswith("digraph")


def test_decompose_field_prints_group_length(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    plan = tmp_path / "plan.json"
    code, stdout, _ = run(
        ["decompose", "--pipeline", "field", "--n", "2", "--ring", "zp:2",
         "--cert", str(cert), "--plan", str(plan)],
        capsys,
    )
    assert code == 0
    assert "group_length=1" in stdout
    bundle = json.loads(cert.read_text())
    assert bundle["plan"]["group_length"] == 1
    assert len(bundle["certificates"]) >= 10


def test_verify_bundle_ok_and_corrupted(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(["decompose", "--pipeline", "ring", "--n", "2", "--ring", "zp:2", "--cert", str(cert)], capsys)
    code, stdout, _ = run(["verify", str(cert)], capsys)
    assert code == 0
    assert "verified" in stdout

    bundle = json.loads(cert.read_text())
    target = bundle["certificates"][0]
    target["pairs"][0][1], target["pairs"][1][1] = target["pairs"][1][1], target["pairs"][0][1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(bundle))
    code, stdout, _ = run(["verify", str(bad)], capsys)
    assert code == 1
    assert "NotFunctional" in stdout


def test_search_not_found(tmp_path, capsys):
    u1_file = tmp_path / "u1.json"
    c2_file = tmp_path / "c2.json"
    run(["family", "--kind", "U1", "--n", "1", "--ring", "zp:2", "--out", str(u1_file)], capsys)
    from semidec.families import transformation_closure
    from semidec.monoid import to_json

    c2_file.write_text(json.dumps(to_json(transformation_closure([(1, 0)], label="C_2"))))
    code, stdout, _ = run(["search", "--source", str(u1_file), "--target", str(c2_file)], capsys)
    assert code == 1
    assert "NotFound" in stdout
    code, stdout, _ = run(["search", "--source", str(c2_file), "--target", str(c2_file)], capsys)
    assert code == 0
    assert "found" in stdout


def test_export_formats(tmp_path, capsys):
    plan = tmp_path / "plan.json"
    run(["decompose", "--pipeline", "field", "--n", "2", "--ring", "zp:2", "--plan", str(plan)], capsys)
    code, stdout, _ = run(["export", str(plan), "--format", "text"], capsys)
    assert code == 0
    assert "group_length=1" in stdout
    assert "aperiodic" in stdout
    # dot export needs a depth report, not a plan
    code, _, stderr = run(["export", str(plan), "--format", "dot"], capsys)
    assert code == 1
    assert "UnsupportedFormat" in stderr


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["decompose", "--pipeline", "nonsense", "--n", "2", "--ring", "zp:2"])
    assert err.value.code == 2


def test_env_limit(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SEMIDEC_LIMIT", "4")
    code, _, stderr = run(["family", "--kind", "T", "--n", "2", "--ring", "zp:3", "--out", str(tmp_path / "x.json")], capsys)
    assert code == 1
    assert "SizeLimitExceeded" in stderr


def test_fresh_process_decompose_then_verify(tmp_path):
    import subprocess
    import sys

    cert = tmp_path / "cert.json"
    proc = subprocess.run(
        [sys.executable, "-m", "semidec.cli", "decompose", "--pipeline", "ring",
         "--n", "2", "--ring", "zp:2", "--cert", str(cert)],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    proc = subprocess.run(
        [sys.executable, "-m", "semidec.cli", "verify", str(cert)],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    assert "verified" in proc.stdout


def test_analyze_highlights_all_essential_classes(tmp_path, capsys):
    mon = tmp_path / "m.json"
    run(["family", "--kind", "T", "--n", "2", "--ring", "zp:3", "--out", str(mon)], capsys)
    dot = tmp_path / "j.dot"
    run(["analyze", str(mon), "--dot", str(dot)], capsys)
    # units class plus the two rank-one classes with non-trivial subgroups
    assert dot.read_text().count("peripheries=2") == 3
