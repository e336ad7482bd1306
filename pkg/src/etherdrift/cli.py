"""Command-line front end.

Parses subcommands plus optional JSON config payloads, dispatches to the
computation modules, and emits deterministic JSON/CSV: floats always carry
17 significant digits, dict key order is fixed in code, and repeated runs
are byte-identical.  Exit codes: 0 success, 1 usage, 2 domain or
computation error (reported as a single JSON line on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .abphase import Path, field_from_dict, phase_line_integral
from .errors import EtherdriftError, InputError
from .fieldmomentum import (SolenoidChargeGeometry, analytic_solenoid_momentum,
                            convergence_study, integrate_field_momentum)
from .interferometer import (InterferometerConfig, angle_scan,
                             improvement_factor, min_detectable_u)
from .kinematics import (CompositionLaw, effective_fresnel_speed,
                         einstein_composed_speed, fresnel_speed,
                         tangherlini_composed_speed)
from .proca import (ProcaCylinderConfig, bounds_registry,
                    cylinder_potential_exact, cylinder_potential_expansion,
                    invert_bound, mass_phase_correction)
from .units import UnitSystem, get_constants, inverse_length_to_mass


# ---------------------------------------------------------------------------
# deterministic serialization

def format_float(value: float) -> str:
    return format(float(value), ".17g")


def _json_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ",".join(_json_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_json_value(v)}"
                              for k, v in value.items()) + "}"
    if value is None:
        return "null"
    raise InputError(f"cannot serialize {type(value).__name__} to JSON")


def render_json(obj) -> str:
    return _json_value(obj) + "\n"


def _cell(value) -> str:
    if isinstance(value, (bool, str)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format_float(value)


def render_csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# config plumbing

@dataclass
class RunConfig:
    subcommand: str
    params: dict
    constants_profile: str
    output_format: str


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage problems with exit code 1.

    Flag abbreviation is disabled: a prefix like --lambda must never silently
    bind to --lambda-nm, because the two differ in unit.
    """

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _version_line() -> str:
    constants = get_constants(None)
    return (f"etherdrift {__version__} profile={constants.profile} "
            f"constants=sha256:{constants.fingerprint()}")


# schema entry: key -> (kind, default); default None means required
_FRINGE_SCHEMA = {
    "L_m": ("number", None),
    "n1": ("number", None),
    "n2": ("number", None),
    "ef": ("number", 0.0),
    "u_mps": ("number", None),
    "lambda_nm": ("number", None),
    "composition": ("string", "einstein"),
    "steps": ("integer", 32),
}

_GEOMETRY_SCHEMA = {
    "a_cm": ("number", None),
    "B_gauss": ("number", None),
    "d_cm": ("number", None),
    "q_esu": ("number", None),
    "lambda_cm": ("number", "omit"),
    "grid": ("intlist", "omit"),
}


def _check_kind(key, value, kind):
    if kind == "number":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InputError(f"config key {key!r} must be a number, got {value!r}")
        return float(value)
    if kind == "integer":
        if isinstance(value, bool) or not isinstance(value, int):
            raise InputError(f"config key {key!r} must be an integer, got {value!r}")
        return value
    if kind == "string":
        if not isinstance(value, str):
            raise InputError(f"config key {key!r} must be a string, got {value!r}")
        return value
    if kind == "intlist":
        if (not isinstance(value, list) or len(value) != 3
                or any(isinstance(v, bool) or not isinstance(v, int) for v in value)):
            raise InputError(f"config key {key!r} must be a list of 3 integers, got {value!r}")
        return value
    raise InputError(f"unhandled schema kind {kind!r}")


def _apply_schema(values: dict, schema: dict, origin: str) -> dict:
    unknown = set(values) - set(schema)
    if unknown:
        raise InputError(f"unknown key {sorted(unknown)[0]!r} in {origin}")
    out = {}
    for key, (kind, default) in schema.items():
        if key in values:
            out[key] = _check_kind(key, values[key], kind)
        elif default is None:
            raise InputError(f"missing required key {key!r} in {origin}")
        elif default != "omit":
            out[key] = default
    return out


def _parse_json_text(text: str, origin: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {origin}: {exc}") from None


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return _parse_json_text(text, path)


def _load_payload(spec: str, what: str):
    """Inline JSON if the value looks like JSON, otherwise a file path."""
    stripped = spec.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return _parse_json_text(spec, f"inline {what}")
    return _load_json_file(spec)


def _composition(name: str) -> CompositionLaw:
    try:
        return CompositionLaw(name)
    except ValueError:
        raise InputError(
            f"composition must be 'einstein' or 'tangherlini', got {name!r}") from None


# ---------------------------------------------------------------------------
# parser construction

def _build_parser() -> _Parser:
    parser = _Parser(prog="etherdrift",
                     description="Light in moving media, drift interferometry, "
                                 "AB phases and photon-mass bounds.")
    parser.add_argument("--version", action="version", version=_version_line())
    parser.add_argument("--profile", choices=["modern", "paper"], default=None,
                        help="constants profile (default: ETHERDRIFT_PROFILE or 'paper')")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    speed = sub.add_parser("speed", help="light speed in a moving medium")
    speed.add_argument("--mode", required=True,
                       choices=["fresnel", "effective", "einstein", "tangherlini"])
    speed.add_argument("--n", type=float, required=True, help="refractive index")
    speed.add_argument("--u-mps", "--u", dest="u_mps", type=float, default=0.0,
                       help="medium speed, m/s")
    speed.add_argument("--ef", type=float, default=1.0, help="drag effectiveness")

    fringe = sub.add_parser("fringe", help="orientation scan of the two-arm device (CSV)")
    fringe.add_argument("--config", metavar="FILE", default=None,
                        help="JSON config; flags override file values")
    fringe.add_argument("--L-m", "--L", dest="L_m", type=float, default=None)
    fringe.add_argument("--n1", type=float, default=None)
    fringe.add_argument("--n2", type=float, default=None)
    fringe.add_argument("--ef", type=float, default=None)
    fringe.add_argument("--u-mps", "--u", dest="u_mps", type=float, default=None)
    fringe.add_argument("--lambda-nm", dest="lambda_nm", type=float, default=None)
    fringe.add_argument("--lambda", dest="lambda_m", type=float, default=None,
                        help="wavelength in meters (alternative to --lambda-nm)")
    fringe.add_argument("--composition", choices=["einstein", "tangherlini"], default=None)
    fringe.add_argument("--steps", type=int, default=None)

    sens = sub.add_parser("sensitivity", help="drift detectability of a configuration")
    sens.add_argument("--L-m", "--L", dest="L_m", type=float, required=True)
    sens.add_argument("--n1", type=float, required=True)
    sens.add_argument("--n2", type=float, required=True)
    sens.add_argument("--u-mps", "--u", dest="u_mps", type=float, required=True)
    sens.add_argument("--lambda-nm", dest="lambda_nm", type=float, default=None)
    sens.add_argument("--lambda", dest="lambda_m", type=float, default=None,
                      help="wavelength in meters (alternative to --lambda-nm)")
    sens.add_argument("--resolution", type=float, required=True,
                      help="smallest detectable fringe shift")
    sens.add_argument("--ef", type=float, default=0.0)

    ab = sub.add_parser("abphase", help="phase line integral of an interaction field")
    ab.add_argument("--field", required=True,
                    help="field spec: inline JSON {kind, params} or a file path")
    ab.add_argument("--path", required=True,
                    help="path vertices: inline JSON [[x,y,z],...] (m) or a file path")
    ab.add_argument("--rtol", type=float, default=1e-10)

    proca = sub.add_parser("proca", help="massive-photon cylinder computations")
    proca_sub = proca.add_subparsers(dest="action", required=True, metavar="action")
    pb = proca_sub.add_parser("bound", help="Compton-range bound from a cylinder setup")
    pb.add_argument("--V-volts", "--V", dest="V_volts", type=float, required=True)
    pb.add_argument("--tau-s", "--tau", dest="tau_s", type=float, required=True)
    pb.add_argument("--R-cm", dest="R_cm", type=float, required=True)
    pb.add_argument("--epsilon", type=float, required=True)
    pp = proca_sub.add_parser("potential", help="interior potential profile (CSV)")
    pp.add_argument("--V-volts", "--V", dest="V_volts", type=float, required=True)
    pp.add_argument("--R-cm", dest="R_cm", type=float, required=True)
    pp.add_argument("--m-gamma-inv-cm", dest="m_gamma_inv_cm", type=float, required=True)
    pp.add_argument("--steps", type=int, default=50)
    pp.add_argument("--variant", choices=["quarter", "half"], default="quarter")
    ph = proca_sub.add_parser("phase", help="mass-induced scalar phase correction")
    ph.add_argument("--V-volts", "--V", dest="V_volts", type=float, required=True)
    ph.add_argument("--tau-s", "--tau", dest="tau_s", type=float, required=True)
    ph.add_argument("--R-cm", dest="R_cm", type=float, required=True)
    ph.add_argument("--rho-cm", dest="rho_cm", type=float, default=0.0)
    ph.add_argument("--m-gamma-inv-cm", dest="m_gamma_inv_cm", type=float, required=True)

    bounds = sub.add_parser("bounds", help="published photon-mass bound registry")
    bounds.add_argument("--format", choices=["json", "text"], default="json")

    pm = sub.add_parser("pmomentum", help="field momentum of charge + solenoid")
    pm.add_argument("--geometry", required=True,
                    help="geometry: inline JSON or a file path "
                         "{a_cm, B_gauss, d_cm, q_esu, lambda_cm?, grid?}")
    pm.add_argument("--levels", type=int, default=3)

    consts = sub.add_parser("constants", help="dump the active constants profile")
    consts.add_argument("--system", choices=["si", "gaussian"], default="si")

    return parser


def _fringe_params(ns) -> dict:
    values = {}
    if ns.config is not None:
        payload = _load_json_file(ns.config)
        if not isinstance(payload, dict):
            raise InputError(f"config file {ns.config} must hold a JSON object")
        values.update(payload)
    if ns.lambda_m is not None:
        if ns.lambda_nm is not None:
            raise InputError("give only one of --lambda-nm and --lambda")
        values["lambda_nm"] = ns.lambda_m * 1e9
    for key in ("L_m", "n1", "n2", "ef", "u_mps", "lambda_nm", "composition", "steps"):
        flag = getattr(ns, key, None)
        if flag is not None:
            values[key] = flag
    params = _apply_schema(values, _FRINGE_SCHEMA, "fringe config")
    _composition(params["composition"])
    return params


def parse_config(argv) -> RunConfig:
    """Parse the argument list (plus any referenced config files) to a RunConfig."""
    ns = _build_parser().parse_args(argv)
    profile = ns.profile if ns.profile is not None else \
        os.environ.get("ETHERDRIFT_PROFILE", "paper")
    output_format = "json"
    if ns.subcommand == "speed":
        params = {"mode": ns.mode, "n": ns.n, "u_mps": ns.u_mps, "ef": ns.ef}
    elif ns.subcommand == "fringe":
        params = _fringe_params(ns)
        output_format = "csv"
    elif ns.subcommand == "sensitivity":
        if ns.lambda_nm is not None and ns.lambda_m is not None:
            raise InputError("give only one of --lambda-nm and --lambda")
        if ns.lambda_nm is not None:
            lambda_nm = ns.lambda_nm
        elif ns.lambda_m is not None:
            lambda_nm = ns.lambda_m * 1e9
        else:
            raise InputError("a wavelength is required: --lambda-nm or --lambda")
        params = {"L_m": ns.L_m, "n1": ns.n1, "n2": ns.n2, "u_mps": ns.u_mps,
                  "lambda_nm": lambda_nm, "resolution": ns.resolution, "ef": ns.ef}
    elif ns.subcommand == "abphase":
        params = {"field": _load_payload(ns.field, "field spec"),
                  "path": _load_payload(ns.path, "path"),
                  "rtol": ns.rtol}
    elif ns.subcommand == "proca":
        params = {"action": ns.action}
        if ns.action == "bound":
            params.update(V_volts=ns.V_volts, tau_s=ns.tau_s, R_cm=ns.R_cm,
                          epsilon=ns.epsilon)
        elif ns.action == "potential":
            params.update(V_volts=ns.V_volts, R_cm=ns.R_cm,
                          m_gamma_inv_cm=ns.m_gamma_inv_cm, steps=ns.steps,
                          variant=ns.variant)
        else:
            params.update(V_volts=ns.V_volts, tau_s=ns.tau_s, R_cm=ns.R_cm,
                          rho_cm=ns.rho_cm, m_gamma_inv_cm=ns.m_gamma_inv_cm)
        if ns.action == "potential":
            output_format = "csv"
    elif ns.subcommand == "bounds":
        params = {}
        output_format = ns.format
    elif ns.subcommand == "pmomentum":
        payload = _load_payload(ns.geometry, "geometry")
        if not isinstance(payload, dict):
            raise InputError("geometry must be a JSON object")
        params = {"geometry": _apply_schema(payload, _GEOMETRY_SCHEMA, "geometry"),
                  "levels": ns.levels}
    else:
        params = {"system": ns.system}
    return RunConfig(ns.subcommand, params, profile, output_format)


# ---------------------------------------------------------------------------
# subcommand runners

def _run_speed(params, constants, fmt):
    mode = params["mode"]
    n, u, ef = params["n"], params["u_mps"], params["ef"]
    if mode == "fresnel":
        v = fresnel_speed(n, u, constants)
    elif mode == "effective":
        v = effective_fresnel_speed(n, u, ef, constants)
    elif mode == "einstein":
        v = einstein_composed_speed(n, u, constants)
    else:
        v = tangherlini_composed_speed(n, u, constants)
    return render_json({"mode": mode, "n": n, "u": u, "e_f": ef, "v": v,
                        "units": "m/s"})


def _interferometer_config(params) -> InterferometerConfig:
    return InterferometerConfig.from_indices(
        params["L_m"], params["n1"], params["n2"], params["u_mps"],
        params["lambda_nm"] * 1e-9,
        _composition(params.get("composition", "einstein")), params["ef"])


def _run_fringe(params, constants, fmt):
    config = _interferometer_config(params)
    rows = angle_scan(config, params["steps"], constants)
    return render_csv(("theta_deg", "delay_exact_s", "delay_first_order_s", "fringes"),
                      rows)


def _run_sensitivity(params, constants, fmt):
    config = _interferometer_config(params)
    u_min = min_detectable_u(config, params["resolution"], constants)
    factor = improvement_factor(params["u_mps"], params["n1"], params["n2"], constants)
    return render_json({"u_min_mps": u_min, "improvement_factor": factor})


def _run_abphase(params, constants, fmt):
    field = field_from_dict(params["field"])
    try:
        path = Path(np.asarray(params["path"], dtype=float))
    except (TypeError, ValueError):
        raise InputError("path must be an array of [x, y, z] vertices") from None
    phase = phase_line_integral(field, path, params["rtol"])
    return render_json({"phase_rad": phase})


def _run_proca(params, constants, fmt):
    action = params["action"]
    if action == "bound":
        cfg = ProcaCylinderConfig(R=params["R_cm"] / 100.0, V=params["V_volts"],
                                  tau=params["tau_s"], rho=0.0,
                                  epsilon=params["epsilon"])
        inv_cm = invert_bound(cfg, constants)
        return render_json({"m_gamma_inv_cm": inv_cm,
                            "m_ph_g": inverse_length_to_mass(inv_cm, constants)})
    if action == "potential":
        steps = params["steps"]
        if steps < 2:
            raise InputError(f"potential profile needs at least 2 steps, got {steps}")
        # tau is irrelevant to the radial profile; any positive value works
        cfg = ProcaCylinderConfig(R=params["R_cm"] / 100.0, V=params["V_volts"], tau=1.0)
        m_gamma = 100.0 / params["m_gamma_inv_cm"]
        rows = []
        for i in range(steps):
            rho = cfg.R * i / (steps - 1)
            rows.append((rho,
                         cylinder_potential_exact(rho, cfg, m_gamma),
                         cylinder_potential_expansion(rho, cfg, m_gamma,
                                                      params["variant"])))
        return render_csv(("rho_m", "phi_exact_V", "phi_expansion_V"), rows)
    cfg = ProcaCylinderConfig(R=params["R_cm"] / 100.0, V=params["V_volts"],
                              tau=params["tau_s"], rho=params["rho_cm"] / 100.0)
    m_gamma = 100.0 / params["m_gamma_inv_cm"]
    return render_json({"delta_phi_rad": mass_phase_correction(cfg, m_gamma,
                                                               None, constants)})


def _run_bounds(params, constants, fmt):
    entries = [{"source": b.source, "m_gamma_inv_cm": b.m_gamma_inv_cm,
                "m_ph_g": b.m_ph_g} for b in bounds_registry()]
    if fmt == "json":
        return render_json(entries)
    header = ("source", "m_gamma_inv_cm", "m_ph_g")
    table = [[e["source"], format_float(e["m_gamma_inv_cm"]), format_float(e["m_ph_g"])]
             for e in entries]
    widths = [max(len(header[i]), max(len(row[i]) for row in table))
              for i in range(3)]
    lines = ["  ".join(header[i].ljust(widths[i]) for i in range(3)).rstrip()]
    for row in table:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(3)).rstrip())
    return "\n".join(lines) + "\n"


def _run_pmomentum(params, constants, fmt):
    g = params["geometry"]
    kwargs = {}
    if "lambda_cm" in g:
        kwargs["truncation_halflength"] = g["lambda_cm"]
    if "grid" in g:
        kwargs["grid"] = tuple(g["grid"])
    geom = SolenoidChargeGeometry(g["a_cm"], g["B_gauss"], g["d_cm"], g["q_esu"],
                                  **kwargs)
    result = integrate_field_momentum(geom)
    analytic = analytic_solenoid_momentum(geom)
    rel_error = float(np.linalg.norm(result.P_e - analytic)
                      / np.linalg.norm(analytic))
    levels = [{"lambda_cm": row.half_length_cm, "grid": list(row.grid),
               "P_mag": row.p_magnitude, "rel_error": row.rel_error}
              for row in convergence_study(geom, params["levels"])]
    return render_json({"P_e": list(result.P_e), "analytic": list(analytic),
                        "rel_error": rel_error, "levels": levels})


def _run_constants(params, constants, fmt):
    return render_json(constants.table(UnitSystem(params["system"])))


_RUNNERS = {
    "speed": _run_speed,
    "fringe": _run_fringe,
    "sensitivity": _run_sensitivity,
    "abphase": _run_abphase,
    "proca": _run_proca,
    "bounds": _run_bounds,
    "pmomentum": _run_pmomentum,
    "constants": _run_constants,
}


def run(config: RunConfig) -> str:
    """Execute a parsed RunConfig and return the rendered output."""
    constants = get_constants(config.constants_profile)
    return _RUNNERS[config.subcommand](config.params, constants, config.output_format)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_config(argv)
        output = run(config)
    except SystemExit as exc:  # argparse help/version/usage paths
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    except EtherdriftError as exc:
        sys.stderr.write(render_json({"error": type(exc).__name__,
                                      "message": str(exc)}))
        return 2
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
