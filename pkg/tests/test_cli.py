import json
import os
import subprocess
import sys

import pytest

from trabound.cli import EXIT_CONFIG, EXIT_DOMAIN, EXIT_NO_RESULT, EXIT_OK, main
from trabound.cli.config import RunConfig, load_config, shipped_configs
from trabound.cli.output import read_csv_provenance


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_shipped_configs_load():
    names = shipped_configs()
    assert {"table3", "fig1", "poschl_teller", "pt_sweep", "potential27"} <= set(names)
    for n in names:
        cfg = load_config(n)
        assert RunConfig.from_dict(cfg.to_dict()) == cfg


def test_gamma_text_and_json(capsys):
    code, out, _ = run(capsys, "gamma", "--d", "3", "--m", "0")
    assert code == EXIT_OK
    assert out.startswith("gamma = 1.18442654397")
    code, out, _ = run(capsys, "gamma", "--d", "3", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == "trabound.gamma/1"
    assert data["gamma"] == pytest.approx(1.1844265439779909, abs=1e-12)


def test_gamma_supercritical_is_domain_error(capsys):
    code, _, err = run(capsys, "gamma", "--d", "1e6")
    assert code == EXIT_DOMAIN
    assert "Supercritical" in err


def test_spectrum_table3_csv(capsys, tmp_path):
    path = tmp_path / "t3.csv"
    code, _, _ = run(capsys, "spectrum", "-c", "table3", "-o", str(path))
    assert code == EXIT_OK
    text = path.read_text()
    prov = read_csv_provenance(text)
    assert prov["config"]["problem"]["kind"] == "Multipole"
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    assert lines[0].split(",") == ["k", "E", "z", "N", "residual"]
    assert len(lines) == 11
    assert float(lines[1].split(",")[1]) == pytest.approx(-0.2732415781254263, rel=1e-12)


def test_spectrum_is_deterministic(capsys, tmp_path):
    path = tmp_path / "a.json"
    texts = []
    for _ in range(2):
        assert run(capsys, "spectrum", "-c", "poschl_teller", "--format", "json", "-o", str(path))[0] == 0
        texts.append(path.read_text())
    assert texts[0] == texts[1]
    data = json.loads(texts[0])
    assert data["schema"] == "trabound.spectrum/1"
    assert len(data["levels"]) == 11
    assert {"E_exact", "abs_error"} <= set(data["levels"][0])


def test_set_override(capsys):
    code, out, _ = run(capsys, "spectrum", "-c", "table3", "--set", "solver.max_levels=3", "-o", "-")
    assert code == EXIT_OK
    rows = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(rows) == 4


def test_config_round_trip_file(capsys, tmp_path):
    cfg = load_config("potential27").with_overrides(["problem.D=99", "output.format=json"])
    path = tmp_path / "p27.json"
    path.write_text(json.dumps(cfg.to_dict()))
    assert load_config(str(path)) == cfg
    code, out, _ = run(capsys, "spectrum", "-c", str(path), "-o", "-")
    assert code == EXIT_OK
    assert len(json.loads(out)["levels"]) == 4


@pytest.mark.parametrize(
    "content, needle",
    [
        ("{not json", "invalid JSON"),
        ('{"problem": {"kind": "Nope"}}', "problem.kind"),
        ('{"problem": {"kind": "Multipole", "Z": "two", "d": 3, "q": 5, "m": 0, "eta": 0.5}}', "problem.Z"),
        ('{"problem": {"kind": "PoschlTeller", "rho": 1, "V0": 3.7, "V1": 0.5}, "solver": {"grid_points": 5}}', "grid_points"),
        ('{"problem": {"kind": "PoschlTeller", "rho": 1, "V0": 3.7, "V1": 0.5}, "extra": 1}', "extra"),
    ],
)
def test_malformed_config(capsys, tmp_path, content, needle):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, _, err = run(capsys, "spectrum", "-c", str(path))
    assert code == EXIT_CONFIG
    assert needle in err


def test_missing_config(capsys):
    assert run(capsys, "spectrum", "-c", "no_such_config")[0] == EXIT_CONFIG


def test_bad_arguments_exit_config(capsys):
    with pytest.raises(SystemExit) as info:
        main(["spectrum"])
    assert info.value.code == EXIT_CONFIG
    assert run(capsys, "catalog", "--format", "xml")[0] == EXIT_CONFIG
    assert run(capsys, "verify", "nothing")[0] == EXIT_CONFIG
    assert run(capsys, "spectrum", "-c", "table3", "--set", "novalue")[0] == EXIT_CONFIG


def test_favard_violation_is_domain_error(capsys):
    code, _, err = run(capsys, "spectrum", "-c", "poschl_teller", "--set", "problem.nu=-60")
    assert code == EXIT_DOMAIN
    assert "FavardError" in err


def test_level_out_of_range_exits_no_result(capsys):
    code, _, err = run(capsys, "wavefunction", "-c", "poschl_teller", "--levels", "99", "-o", "-")
    assert code == EXIT_NO_RESULT
    assert "k=99" in err


def test_wavefunction_writes_sidecar(capsys, tmp_path):
    path = tmp_path / "pt.csv"
    code, _, _ = run(
        capsys, "wavefunction", "-c", "poschl_teller", "--levels", "0,1",
        "--set", "output.oracle=false", "--set", "output.grid_points=201", "-o", str(path),
    )
    assert code == EXIT_OK
    header = [l for l in path.read_text().splitlines() if not l.startswith("#")][0].split(",")
    assert header == ["x", "psi_0", "psi_0_exact", "psi_1", "psi_1_exact"]
    side = json.loads((tmp_path / "pt.overlaps.json").read_text())
    assert side["schema"] == "trabound.overlaps/1"
    assert [lv["k"] for lv in side["levels"]] == [0, 1]
    assert abs(side["levels"][0]["overlap_exact"]) > 0.999


def test_catalog_rows(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "csv")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 36
    code, out, _ = run(capsys, "catalog")
    assert len(json.loads(out)["rows"]) == 35


def test_verify_catalog_passes(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "catalog", "--report", str(report))
    assert code == EXIT_OK
    assert "3/3 checks passed" in out
    assert json.loads(report.read_text())["passed"] is True


def test_verify_polys_passes(capsys):
    code, out, _ = run(capsys, "verify", "polys", "--draws", "4")
    assert code == EXIT_OK
    assert "FAIL" not in out


def test_verify_detects_seeded_bug(capsys, monkeypatch):
    from trabound.polynomials import families

    real = families.rbessel_coefficients

    def broken(mu, n):
        a, b, c = real(mu, n)
        return a, b * 1.001, c

    monkeypatch.setattr(families, "rbessel_coefficients", broken)
    code, out, _ = run(capsys, "verify", "polys", "--draws", "4")
    assert code != EXIT_OK
    assert "FAIL" in out


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "trabound", "gamma", "--d", "0", "--m", "2"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.startswith("gamma = 2.0")
