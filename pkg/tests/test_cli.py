import json
import math
import os
import re
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "etherdrift.cli"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("ETHERDRIFT_PROFILE", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CLI + list(args), capture_output=True, text=True, env=env)


def stderr_error(proc):
    payload = json.loads(proc.stderr)
    assert set(payload) == {"error", "message"}
    return payload


def test_usage_errors_exit_1():
    assert run_cli().returncode == 1
    assert run_cli("nosuch").returncode == 1
    assert run_cli("speed", "--mode", "einstein", "--n", "abc").returncode == 1
    assert run_cli("speed", "--mode", "einstein", "--n", "1.5",
                   "--bogus", "1").returncode == 1


def test_help_and_version_exit_0():
    assert run_cli("--help").returncode == 0
    proc = run_cli("--version")
    assert proc.returncode == 0
    assert re.fullmatch(r"etherdrift 0\.1\.0 profile=paper constants=sha256:[0-9a-f]{12}\n",
                        proc.stdout)


def test_version_reflects_env_profile():
    proc = run_cli("--version", env_extra={"ETHERDRIFT_PROFILE": "modern"})
    assert "profile=modern" in proc.stdout


def test_domain_error_exit_2_names_offender():
    proc = run_cli("sensitivity", "--L-m", "1", "--n1", "0.5", "--n2", "1.0001",
                   "--u-mps", "1e3", "--lambda-nm", "633", "--resolution", "1e-3")
    assert proc.returncode == 2
    assert proc.stdout == ""
    payload = stderr_error(proc)
    assert payload["error"] == "DomainError"
    assert "n1" in payload["message"]


def test_speed_golden_values():
    proc = run_cli("speed", "--mode", "einstein", "--n", "1.5", "--u-mps", "1e3")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["units"] == "m/s"
    # (c/1.5 - 1e3)/(1 - 1e3/(1.5 c)), 50-digit arithmetic
    assert out["v"] == pytest.approx(199861083.10987569, rel=1e-14)

    out = json.loads(run_cli("speed", "--mode", "fresnel", "--n", "1.33",
                             "--u-mps", "10").stdout)
    assert out["v"] == pytest.approx(225407867.50466392, rel=1e-14)

    out = json.loads(run_cli("speed", "--mode", "tangherlini", "--n", "1.5",
                             "--u", "1e3").stdout)
    assert out["v"] == pytest.approx(199860638.66889042, rel=1e-14)

    out = json.loads(run_cli("speed", "--mode", "effective", "--n", "1.0003",
                             "--u-mps", "3e4", "--ef", "6.1e-3").stdout)
    assert out["v"] == pytest.approx(299702547.34557986, rel=1e-14)


def test_speed_output_is_byte_deterministic():
    args = ("speed", "--mode", "einstein", "--n", "1.5", "--u-mps", "1e3")
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_sensitivity_golden_and_wavelength_alias():
    base = ("sensitivity", "--L-m", "1", "--n1", "1.0006", "--n2", "1.0001",
            "--u-mps", "1e3", "--resolution", "1e-3")
    nm = json.loads(run_cli(*base, "--lambda-nm", "633").stdout)
    assert nm["u_min_mps"] == pytest.approx(94.851115066726646, rel=1e-12)
    assert nm["improvement_factor"] == pytest.approx(299.89738536030, rel=1e-12)
    meters = json.loads(run_cli(*base, "--lambda", "633e-9").stdout)
    assert meters["u_min_mps"] == pytest.approx(nm["u_min_mps"], rel=1e-12)


def test_sensitivity_wavelength_flag_conflicts():
    base = ("sensitivity", "--L-m", "1", "--n1", "1.0006", "--n2", "1.0001",
            "--u-mps", "1e3", "--resolution", "1e-3")
    both = run_cli(*base, "--lambda-nm", "633", "--lambda", "633e-9")
    assert both.returncode == 2
    assert "only one" in stderr_error(both)["message"]
    neither = run_cli(*base)
    assert neither.returncode == 2
    assert "wavelength" in stderr_error(neither)["message"]


def test_fringe_csv_shape_and_determinism():
    args = ("fringe", "--L-m", "1", "--n1", "1.0006", "--n2", "1.0001",
            "--u-mps", "1e3", "--lambda-nm", "633", "--steps", "4")
    proc = run_cli(*args)
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "theta_deg,delay_exact_s,delay_first_order_s,fringes"
    assert len(lines) == 5
    assert [line.split(",")[0] for line in lines[1:]] == ["0", "90", "180", "270"]
    delay0 = float(lines[1].split(",")[1])
    # L(1/w1 - 1/w2) at theta = 0, 50-digit arithmetic
    assert delay0 == pytest.approx(1.6678316064227491e-12, rel=5e-12)
    assert proc.stdout == run_cli(*args).stdout


def test_fringe_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "fringe.json"
    cfg.write_text(json.dumps({"L_m": 1.0, "n1": 1.0006, "n2": 1.0001,
                               "u_mps": 1000.0, "lambda_nm": 633.0, "steps": 2}))
    from_file = run_cli("fringe", "--config", str(cfg))
    assert from_file.returncode == 0
    assert len(from_file.stdout.splitlines()) == 3

    overridden = run_cli("fringe", "--config", str(cfg), "--u-mps", "0")
    rows = overridden.stdout.splitlines()[1:]
    assert len({row.split(",")[1] for row in rows}) == 1


def test_fringe_config_file_errors(tmp_path):
    bad_key = tmp_path / "bad_key.json"
    bad_key.write_text(json.dumps({"L_m": 1.0, "n1": 1.0006, "n2": 1.0001,
                                   "u_mps": 1e3, "lambda_nm": 633.0, "phase": 1}))
    proc = run_cli("fringe", "--config", str(bad_key))
    assert proc.returncode == 2
    assert "phase" in stderr_error(proc)["message"]

    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"L_m": 1.0, "n1": 1.0006, "n2": 1.0001,
                                   "u_mps": 1e3}))
    proc = run_cli("fringe", "--config", str(missing))
    assert proc.returncode == 2
    assert "lambda_nm" in stderr_error(proc)["message"]

    malformed = tmp_path / "malformed.json"
    malformed.write_text("{not json")
    proc = run_cli("fringe", "--config", str(malformed))
    assert proc.returncode == 2
    assert "malformed JSON" in stderr_error(proc)["message"]

    proc = run_cli("fringe", "--config", str(tmp_path / "absent.json"))
    assert proc.returncode == 2
    assert "cannot read" in stderr_error(proc)["message"]


def test_abphase_uniform_inline():
    proc = run_cli("abphase",
                   "--field", '{"kind": "uniform_q", "params": {"q": [0.3, -0.2, 0.5]}}',
                   "--path", "[[0, 0, 0], [2, 0, 0]]")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["phase_rad"] == pytest.approx(0.6, rel=1e-12)


def test_abphase_solenoid_loop_is_pi():
    # one flux quantum (paper profile rounding) through a unit square loop
    proc = run_cli("abphase",
                   "--field", '{"kind": "solenoid", "params": {"flux_wb": 2.067e-15}}',
                   "--path", "[[1,-1,0],[1,1,0],[-1,1,0],[-1,-1,0],[1,-1,0]]")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["phase_rad"] == pytest.approx(math.pi, rel=1e-9)


def test_abphase_field_file_and_errors(tmp_path):
    field_file = tmp_path / "field.json"
    field_file.write_text('{"kind": "uniform_q", "params": {"q": [1.0, 0.0, 0.0]}}')
    proc = run_cli("abphase", "--field", str(field_file),
                   "--path", "[[0,0,0],[3,0,0]]")
    assert json.loads(proc.stdout)["phase_rad"] == pytest.approx(3.0, rel=1e-12)

    proc = run_cli("abphase", "--field", '{"kind": "vortex", "params": {}}',
                   "--path", "[[0,0,0],[1,0,0]]")
    assert proc.returncode == 2
    assert "vortex" in stderr_error(proc)["message"]

    proc = run_cli("abphase",
                   "--field", '{"kind": "solenoid", "params": {"flux_wb": 1.0}}',
                   "--path", "[[-1,0,0],[1,0,0]]")
    assert proc.returncode == 2
    assert stderr_error(proc)["error"] == "SingularPathError"

    proc = run_cli("abphase", "--field", '{"kind": "uniform_q", "params": {"q": [0,0,0]}}',
                   "--path", "[[0,0],[1,0]]")
    assert proc.returncode == 2


def test_proca_bound_profiles():
    args = ("proca", "bound", "--V-volts", "1e7", "--tau-s", "0.05",
            "--R-cm", "27", "--epsilon", "1e-4")
    paper = json.loads(run_cli(*args).stdout)
    # (R/2) sqrt(pi V tau/(eps Phi0)) in cm, 50-digit arithmetic
    assert paper["m_gamma_inv_cm"] == pytest.approx(3.7215466620391035e13, rel=1e-12)
    assert paper["m_ph_g"] == pytest.approx(9.4521801315228174e-52, rel=1e-12)

    modern = json.loads(run_cli("--profile", "modern", *args).stdout)
    assert modern["m_gamma_inv_cm"] == pytest.approx(3.7207962345167440e13, rel=1e-12)

    via_env = json.loads(run_cli(*args, env_extra={"ETHERDRIFT_PROFILE": "modern"}).stdout)
    assert via_env["m_gamma_inv_cm"] == modern["m_gamma_inv_cm"]

    flag_wins = json.loads(run_cli("--profile", "paper", *args,
                                   env_extra={"ETHERDRIFT_PROFILE": "modern"}).stdout)
    assert flag_wins["m_gamma_inv_cm"] == paper["m_gamma_inv_cm"]


def test_proca_phase_closes_on_resolution():
    proc = run_cli("proca", "phase", "--V-volts", "1e7", "--tau-s", "0.05",
                   "--R-cm", "27", "--m-gamma-inv-cm", "3.7215466620391035e13")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["delta_phi_rad"] == pytest.approx(1e-4, rel=1e-9)


def test_proca_potential_csv():
    proc = run_cli("proca", "potential", "--V-volts", "1e7", "--R-cm", "10",
                   "--m-gamma-inv-cm", "100", "--steps", "5")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "rho_m,phi_exact_V,phi_expansion_V"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    # V / I0(0.1) on the axis, 50-digit arithmetic
    assert float(first[1]) == pytest.approx(9975046.7926775686, rel=1e-12)
    last = lines[-1].split(",")
    assert float(last[0]) == pytest.approx(0.1, rel=1e-15)
    assert float(last[1]) == 1e7


def test_bounds_json_and_text():
    proc = run_cli("bounds")
    entries = json.loads(proc.stdout)
    assert [e["source"] for e in entries] == [
        "Williams-Faller-Hill", "Luo et al.", "Boulware-Deser", "Spavieri-Rodriguez"]
    assert entries[0]["m_gamma_inv_cm"] == 3.0e9

    text = run_cli("bounds", "--format", "text").stdout
    lines = text.splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("source")
    column = lines[0].index("m_gamma_inv_cm")
    for line in lines[1:]:
        assert line[column] not in (" ",)


def test_pmomentum_inline_geometry():
    proc = run_cli("pmomentum", "--geometry",
                   '{"a_cm": 1.0, "B_gauss": 100.0, "d_cm": 3.0, "q_esu": 1.0}')
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    # q B a^2/(2 d c_cgs), 50-digit arithmetic
    assert out["analytic"][1] == pytest.approx(5.5594015866358675e-10, rel=1e-12)
    assert out["rel_error"] <= 5e-3
    rels = [level["rel_error"] for level in out["levels"]]
    assert len(rels) == 3
    assert rels[0] > rels[1] > rels[2]


def test_pmomentum_geometry_errors():
    proc = run_cli("pmomentum", "--geometry", '{"a_cm": 1.0, "B_gauss": 100.0}')
    assert proc.returncode == 2
    assert "d_cm" in stderr_error(proc)["message"]

    proc = run_cli("pmomentum", "--geometry",
                   '{"a_cm": 1.0, "B_gauss": 100.0, "d_cm": 3.0, "q_esu": 1.0, "R": 2}')
    assert proc.returncode == 2
    assert "'R'" in stderr_error(proc)["message"]


def test_constants_dump():
    si = json.loads(run_cli("constants").stdout)
    by_name = {row["name"]: row for row in si}
    assert by_name["c"]["value"] == 299792458.0
    assert by_name["c"]["profile"] == "paper"
    assert by_name["flux_quantum"]["value"] == 2.067e-15

    gauss = json.loads(run_cli("--profile", "modern", "constants",
                               "--system", "gaussian").stdout)
    by_name = {row["name"]: row for row in gauss}
    assert by_name["e_charge"]["value"] == pytest.approx(4.8032047125702637e-10, rel=1e-12)
    assert by_name["e_charge"]["profile"] == "modern"
