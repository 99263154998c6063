"""Command-line interface: physics queries, field solves, verification, CSV.

Subcommands
-----------
force      plate force at a separation/area
q-sweep    q versus separation (optionally versus v/c as well)
find-zero  separation where q changes sign (repulsive model)
solve      closed-form field on a grid, long-format CSV
verify     closed-form vs finite-difference cross-check
figures    canned parameter studies (ids 2a, 2b, 3a, 3b, 4a, 4b)

Exit codes: 0 success, 2 invalid input, 3 bracket failure, 4 accuracy
failure, 5 verification failure.

Values are printed with the fixed ``%.12e`` format so repeated runs are
byte-identical; every CSV starts with ``#`` metadata lines recording the
tool version, the fully resolved configuration and the provenance of the
numbers.  A config file (INI-style ``key = value`` tables) can seed any
setting; explicit command-line flags override it.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import math
import sys
from dataclasses import dataclass, fields as dataclass_fields
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .errors import (
    AccuracyError,
    BracketError,
    CasimirKGError,
    ConfigurationError,
    DomainError,
    GridError,
    UnsupportedModelError,
    VerificationFailure,
)
from .fdm import FdmGrid, compare_fields, fdm_solve
from .physics import (
    CasimirModel,
    PhysicalConstants,
    ReducedParams,
    casimir_force,
    casimir_potential,
    find_sign_change,
    pulse_regime_ok,
    q_at_separation,
    q_parameter,
    relaxation_time,
    to_dimensionless,
)
from .solver import Field2D, InitialCondition, QuadratureSpec, solve_grid

FLOAT_FORMAT = "%.12e"

_CONFIG_SECTIONS = {
    "constants": ("mass", "hbar", "c"),
    "casimir": ("sign", "effective_area_nm2"),
    "kinematics": ("v_over_c",),
    "solver": (
        "length_scale_nm",
        "d_nm",
        "q_override",
        "ic",
        "quad_method",
        "quad_abs_tol",
        "quad_rel_tol",
        "quad_max_subdivisions",
    ),
    "grid": ("x_min", "x_max", "x_count", "t_max", "t_count"),
    "fdm": ("cfl", "nx"),
    "output": ("path",),
}


@dataclass
class RunConfig:
    """Fully resolved run settings (defaults < config file < CLI flags)."""

    mass: float = PhysicalConstants().mass
    hbar: float = PhysicalConstants().hbar
    c: float = PhysicalConstants().c
    sign: int = 1
    effective_area_nm2: float = 1.0
    v_over_c: float = 0.01
    length_scale_nm: float = 1.0
    d_nm: float = 0.759554
    q_override: Optional[float] = None
    ic: str = "gaussian"
    quad_method: str = "adaptive-simpson"
    quad_abs_tol: float = 1e-10
    quad_rel_tol: float = 1e-10
    quad_max_subdivisions: int = 2**20
    x_min: float = -6.0
    x_max: float = 6.0
    x_count: int = 81
    t_max: float = 2.0
    t_count: int = 11
    cfl: float = 0.5
    nx: int = 1001
    path: str = "-"
    d_nm_explicit: bool = False
    q_override_explicit: bool = False

    def __post_init__(self):
        if not (0.0 < self.v_over_c < 1.0):
            raise ConfigurationError(
                f"v_over_c must lie in (0, 1), got {self.v_over_c!r}"
            )
        for name in ("x_count", "t_count", "nx"):
            if getattr(self, name) < 1:
                raise ConfigurationError(f"{name} must be >= 1")
        if self.d_nm_explicit and self.q_override_explicit:
            raise ConfigurationError(
                "exactly one of d_nm / q_override may supply q; both were given"
            )

    @property
    def constants(self) -> PhysicalConstants:
        return PhysicalConstants(hbar=self.hbar, c=self.c, mass=self.mass)

    @property
    def model(self) -> CasimirModel:
        return CasimirModel(sign=self.sign, effective_area=self.effective_area_nm2 * 1e-18)

    @property
    def velocity(self) -> float:
        return self.v_over_c * self.c

    @property
    def length_scale(self) -> float:
        return self.length_scale_nm * 1e-9

    @property
    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(
            method=self.quad_method,
            abs_tol=self.quad_abs_tol,
            rel_tol=self.quad_rel_tol,
            max_subdivisions=self.quad_max_subdivisions,
        )

    def reduced_params(self) -> ReducedParams:
        """q from the physics chain at d_nm, unless q_override is set."""
        if self.q_override_explicit and self.q_override is not None:
            return ReducedParams.from_q_dimless(
                self.q_override, velocity=self.velocity, length_scale=self.length_scale
            )
        q_phys = q_at_separation(
            self.d_nm * 1e-9, self.model, self.velocity, self.constants
        )
        return to_dimensionless(q_phys, self.velocity, self.length_scale)

    def initial_condition(self) -> InitialCondition:
        return parse_ic(self.ic)

    def metadata_items(self):
        """Deterministic (key, value) pairs for CSV headers."""
        skip = {"d_nm_explicit", "q_override_explicit"}
        for f in dataclass_fields(self):
            if f.name in skip:
                continue
            value = getattr(self, f.name)
            if value is None:
                rendered = "none"
            elif isinstance(value, bool):
                rendered = str(value).lower()
            elif isinstance(value, float):
                rendered = FLOAT_FORMAT % value
            else:
                rendered = str(value)
            yield f.name, rendered


def parse_ic(spec: str) -> InitialCondition:
    """Parse an initial-condition spec string.

    ``gaussian`` | ``bump:CENTER:HALF_WIDTH`` | ``tabulated:PATH`` where
    PATH holds two comma-separated columns x,f (one sample per line,
    ``#`` comments allowed).
    """
    parts = spec.split(":")
    kind = parts[0]
    if kind == "gaussian":
        if len(parts) != 1:
            raise DomainError("gaussian initial condition takes no parameters")
        return InitialCondition.gaussian()
    if kind == "bump":
        if len(parts) != 3:
            raise DomainError("bump spec must be bump:CENTER:HALF_WIDTH")
        try:
            center, half_width = float(parts[1]), float(parts[2])
        except ValueError as exc:
            raise DomainError(f"bad bump parameters in {spec!r}") from exc
        return InitialCondition.bump(center, half_width)
    if kind == "tabulated":
        if len(parts) < 2:
            raise DomainError("tabulated spec must be tabulated:PATH")
        path = Path(":".join(parts[1:]))
        if not path.exists():
            raise DomainError(f"tabulated sample file not found: {path}")
        xs, fs = [], []
        for line in path.read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cells = line.split(",")
            if len(cells) != 2:
                raise DomainError(f"tabulated file needs 2 columns, got {line!r}")
            xs.append(float(cells[0]))
            fs.append(float(cells[1]))
        return InitialCondition.tabulated(xs, fs)
    raise DomainError(f"unknown initial condition {spec!r}")


def load_config_file(path: str) -> dict:
    """Read the INI-style config into a flat {key: raw-string} dict."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigurationError(f"config file not found: {path}")
    flat = {}
    for section, keys in _CONFIG_SECTIONS.items():
        if not parser.has_section(section):
            continue
        for key, raw in parser.items(section):
            if key not in keys:
                raise ConfigurationError(
                    f"unknown config key [{section}] {key}"
                )
            flat[key] = raw
    return flat


_FIELD_PARSERS = {
    "mass": float, "hbar": float, "c": float,
    "sign": int, "effective_area_nm2": float,
    "v_over_c": float, "length_scale_nm": float,
    "d_nm": float, "q_override": float, "ic": str,
    "quad_method": str, "quad_abs_tol": float, "quad_rel_tol": float,
    "quad_max_subdivisions": int,
    "x_min": float, "x_max": float, "x_count": int,
    "t_max": float, "t_count": int,
    "cfl": float, "nx": int, "path": str,
}


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, optional config file, then explicit CLI flags."""
    values: dict = {}
    if getattr(args, "config", None):
        raw = load_config_file(args.config)
        for key, text in raw.items():
            try:
                values[key] = _FIELD_PARSERS[key](text)
            except ValueError as exc:
                raise ConfigurationError(f"bad value for config key {key}: {text!r}") from exc
    for key in _FIELD_PARSERS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if getattr(args, "out", None):
        values["path"] = args.out
    values["d_nm_explicit"] = "d_nm" in values
    values["q_override_explicit"] = "q_override" in values
    try:
        return RunConfig(**values)
    except TypeError as exc:
        raise ConfigurationError(str(exc)) from exc


# ---------------------------------------------------------------------------
# CSV emission
# ---------------------------------------------------------------------------


def _fmt(value: float) -> str:
    return FLOAT_FORMAT % value


def _write_csv(out_path: str, header_lines, columns, rows, quiet: bool):
    buffer = io.StringIO()
    for line in header_lines:
        buffer.write(f"# {line}\n")
    buffer.write(",".join(columns) + "\n")
    for row in rows:
        buffer.write(",".join(_fmt(v) for v in row) + "\n")
    text = buffer.getvalue()
    if out_path == "-":
        sys.stdout.write(text)
    else:
        path = Path(out_path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="")
        if not quiet:
            print(f"wrote {path}", file=sys.stderr)


def _header(command: str, cfg: Optional[RunConfig], provenance: str, extra=()):
    lines = [f"casimirkg {__version__}", f"command: {command}", f"provenance: {provenance}"]
    for key, value in extra:
        lines.append(f"{key}: {value}")
    if cfg is not None:
        for key, value in cfg.metadata_items():
            lines.append(f"config {key}: {value}")
    return lines


def read_csv(path) -> tuple[dict, list, np.ndarray]:
    """Parse a CSV produced by this tool.

    Returns ``(metadata, column_names, value_rows)``; metadata maps the
    ``#``-header keys (minus the leading marker) to their string values.
    """
    meta: dict = {}
    names: list = []
    rows: list = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    key, _, value = body.partition(":")
                    meta[key.strip()] = value.strip()
                else:
                    meta[body] = ""
                continue
            cells = next(csv.reader([line]))
            if not names:
                names = cells
            else:
                rows.append([float(c) for c in cells])
    return meta, names, np.asarray(rows, dtype=float)


def _field_rows(field: Field2D):
    for i, t in enumerate(field.ts):
        for j, x in enumerate(field.xs):
            yield (t, x, field.values[i, j])


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_force(args) -> int:
    cfg = resolve_config(args)
    force = casimir_force(args.d_nm * 1e-9, args.area_m2, cfg.constants)
    _write_csv(
        cfg.path,
        _header("force", None, "closed-form"),
        ("d_nm", "area_m2", "force_N"),
        [(args.d_nm, args.area_m2, force)],
        args.quiet,
    )
    return 0


def cmd_qsweep(args) -> int:
    cfg = resolve_config(args)
    if args.d_min_nm <= 0 or args.d_max_nm <= args.d_min_nm or args.d_count < 2:
        raise DomainError(
            "q-sweep needs 0 < d_min_nm < d_max_nm and d_count >= 2"
        )
    ds = np.linspace(args.d_min_nm, args.d_max_nm, args.d_count)
    two_dim = args.v_count is not None
    if two_dim:
        if args.v_min is None or args.v_max is None or args.v_count < 2:
            raise DomainError("2D sweep needs --v-min, --v-max and --v-count >= 2")
        if not (0.0 < args.v_min < args.v_max < 1.0):
            raise DomainError("need 0 < v_min < v_max < 1 (fractions of c)")
        vs = np.linspace(args.v_min, args.v_max, args.v_count)
    else:
        vs = np.array([cfg.v_over_c])
    length2 = cfg.length_scale * cfg.length_scale
    rows = []
    for d in ds:  # d outer, v inner: deterministic ordering
        for v in vs:
            q_phys = q_at_separation(
                d * 1e-9, cfg.model, v * cfg.c, cfg.constants
            )
            if two_dim:
                rows.append((d, v, q_phys, q_phys * length2))
            else:
                rows.append((d, q_phys, q_phys * length2))
    columns = (
        ("d_nm", "v_over_c", "q_m^-2", "q_dimless")
        if two_dim
        else ("d_nm", "q_m^-2", "q_dimless")
    )
    _write_csv(cfg.path, _header("q-sweep", cfg, "closed-form"), columns, rows, args.quiet)
    return 0


def cmd_findzero(args) -> int:
    cfg = resolve_config(args)
    d_lo = args.d_lo_nm * 1e-9
    d_hi = args.d_hi_nm * 1e-9
    d_star = find_sign_change(
        cfg.model,
        cfg.velocity,
        cfg.constants,
        d_lo=d_lo,
        d_hi=d_hi,
        tol=args.tol_nm * 1e-9,
    )
    q_lo = q_at_separation(d_lo, cfg.model, cfg.velocity, cfg.constants)
    q_hi = q_at_separation(d_hi, cfg.model, cfg.velocity, cfg.constants)
    _write_csv(
        cfg.path,
        _header("find-zero", cfg, "closed-form"),
        ("d_star_nm", "q_at_d_lo_m^-2", "q_at_d_hi_m^-2"),
        [(d_star * 1e9, q_lo, q_hi)],
        args.quiet,
    )
    return 0


def _warn_pulse_regime(args, cfg: RunConfig):
    if getattr(args, "pulse_duration_s", None) is None:
        return
    tau = relaxation_time(cfg.velocity, cfg.constants)
    if not pulse_regime_ok(args.pulse_duration_s, tau) and not args.quiet:
        print(
            f"warning: pulse duration {args.pulse_duration_s:g} s exceeds "
            f"0.1 * tau (tau = {tau:g} s); the undamped approximation may be poor",
            file=sys.stderr,
        )


def _solve_field(cfg: RunConfig) -> tuple[Field2D, ReducedParams]:
    params = cfg.reduced_params()
    xs = np.linspace(cfg.x_min, cfg.x_max, cfg.x_count)
    ts = np.linspace(0.0, cfg.t_max, cfg.t_count)
    field = solve_grid(xs, ts, params, cfg.initial_condition(), cfg.quadrature)
    return field, params


def cmd_solve(args) -> int:
    cfg = resolve_config(args)
    _warn_pulse_regime(args, cfg)
    field, params = _solve_field(cfg)
    tau = relaxation_time(cfg.velocity, cfg.constants)
    extra = (
        ("q_dimless", _fmt(params.q_dimless)),
        ("q_phys_m^-2", _fmt(params.q_phys)),
        ("tau_s", _fmt(tau)),
    )
    _write_csv(
        cfg.path,
        _header("solve", cfg, "closed-form", extra),
        ("t", "x", "u"),
        _field_rows(field),
        args.quiet,
    )
    return 0


def _verify_norms(cfg: RunConfig):
    """Closed form vs FDM on a deterministic probe subgrid."""
    params = cfg.reduced_params()
    grid = FdmGrid.from_cfl(cfg.x_min, cfg.x_max, cfg.nx, cfg.t_max, cfg.cfl)
    ic = cfg.initial_condition()
    numeric = fdm_solve(params.q_dimless, ic, grid)
    x_step = max(1, (grid.nx - 1) // 40)
    x_idx = np.arange(0, grid.nx, x_step)
    t_idx = sorted({max(1, round(k * grid.nt / 4)) for k in range(1, 5)})
    probe_xs = numeric.xs[x_idx]
    probe_ts = numeric.ts[t_idx]
    closed = solve_grid(probe_xs, probe_ts, params, ic, cfg.quadrature)
    restricted = Field2D(
        xs=probe_xs,
        ts=probe_ts,
        values=numeric.values[np.ix_(t_idx, x_idx)],
        q_dimless=params.q_dimless,
        provenance="fdm",
    )
    return compare_fields(closed, restricted), params


def cmd_verify(args) -> int:
    cfg = resolve_config(args)
    _warn_pulse_regime(args, cfg)
    norms, params = _verify_norms(cfg)
    passed = norms.rel_max_abs <= args.bound
    rows = [
        ("max_abs", norms.max_abs),
        ("rel_max_abs", norms.rel_max_abs),
        ("rms", norms.rms),
        ("bound", args.bound),
    ]
    extra = (
        ("q_dimless", _fmt(params.q_dimless)),
        ("result", "pass" if passed else "FAIL"),
    )
    buffer = io.StringIO()
    for line in _header("verify", cfg, "closed-form vs fdm", extra):
        buffer.write(f"# {line}\n")
    buffer.write("metric,value\n")
    for name, value in rows:
        buffer.write(f"{name},{_fmt(value)}\n")
    if cfg.path == "-":
        sys.stdout.write(buffer.getvalue())
    else:
        Path(cfg.path).write_text(buffer.getvalue(), encoding="utf-8", newline="")
        if not args.quiet:
            print(f"wrote {cfg.path}", file=sys.stderr)
    if not passed:
        raise VerificationFailure(
            f"rel_max_abs {norms.rel_max_abs:.6e} exceeds bound {args.bound:.6e}"
        )
    return 0


# Canned parameter studies.  Studies 3a/3b sample the q = 0 degeneracy:
# under the default calibration the nominal separation 0.759554 nm does
# not give q = 0 exactly, so both branches are sampled at q = +-1e-10
# (J0 branch / I0 branch) with the nominal separation kept as metadata.
_FIGURE_IDS = ("2a", "2b", "3a", "3b", "4a", "4b")
_DEGENERACY_Q = 1e-10
_FIGURE_D_NM = {"3a": 0.759554, "3b": 0.759554, "4a": 0.720, "4b": 0.760}


def _figure_field_config(fig: str) -> RunConfig:
    kwargs = dict(d_nm=_FIGURE_D_NM[fig], d_nm_explicit=True)
    if fig == "3a":
        kwargs = dict(q_override=_DEGENERACY_Q, q_override_explicit=True,
                      d_nm=_FIGURE_D_NM[fig])
    elif fig == "3b":
        kwargs = dict(q_override=-_DEGENERACY_Q, q_override_explicit=True,
                      d_nm=_FIGURE_D_NM[fig])
    return RunConfig(**kwargs)


def cmd_figures(args) -> int:
    which = args.which
    if which not in _FIGURE_IDS:
        raise DomainError(f"unknown figure id {which!r}; choose from {_FIGURE_IDS}")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = str(out_dir / f"figure_{which}.csv")
    quiet = args.quiet
    if which == "2a":
        cfg = RunConfig()
        ds = np.linspace(0.5, 1.0, 101)
        vs = np.linspace(0.005, 0.02, 16)
        length2 = cfg.length_scale * cfg.length_scale
        rows = []
        for d in ds:
            for v in vs:
                q_phys = q_at_separation(d * 1e-9, cfg.model, v * cfg.c, cfg.constants)
                rows.append((d, v, q_phys, q_phys * length2))
        _write_csv(
            out_path,
            _header("figures 2a", cfg, "closed-form"),
            ("d_nm", "v_over_c", "q_m^-2", "q_dimless"),
            rows,
            quiet,
        )
        return 0
    if which == "2b":
        cfg = RunConfig()
        ds = np.linspace(0.5, 1.0, 501)
        rows = [
            (d, q_at_separation(d * 1e-9, cfg.model, cfg.velocity, cfg.constants))
            for d in ds
        ]
        _write_csv(
            out_path,
            _header("figures 2b", cfg, "closed-form"),
            ("d_nm", "q_m^-2"),
            rows,
            quiet,
        )
        return 0
    cfg = _figure_field_config(which)
    field, params = _solve_field(cfg)
    extra = (
        ("q_dimless", _fmt(params.q_dimless)),
        ("nominal_d_nm", _fmt(_FIGURE_D_NM[which])),
    )
    _write_csv(
        out_path,
        _header(f"figures {which}", cfg, "closed-form", extra),
        ("t", "x", "u"),
        _field_rows(field),
        quiet,
    )
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _add_config_flags(parser: argparse.ArgumentParser, include=()):
    groups = {
        "constants": (("--mass", "mass", float), ("--hbar", "hbar", float), ("--c", "c", float)),
        "casimir": (("--sign", "sign", int), ("--effective-area-nm2", "effective_area_nm2", float)),
        "kinematics": (("--v-over-c", "v_over_c", float),),
        "solver": (
            ("--length-scale-nm", "length_scale_nm", float),
            ("--d-nm", "d_nm", float),
            ("--q-override", "q_override", float),
            ("--ic", "ic", str),
            ("--quad-method", "quad_method", str),
            ("--quad-abs-tol", "quad_abs_tol", float),
            ("--quad-rel-tol", "quad_rel_tol", float),
            ("--quad-max-subdivisions", "quad_max_subdivisions", int),
        ),
        "grid": (
            ("--x-min", "x_min", float),
            ("--x-max", "x_max", float),
            ("--x-count", "x_count", int),
            ("--t-max", "t_max", float),
            ("--t-count", "t_count", int),
        ),
        "fdm": (("--cfl", "cfl", float), ("--nx", "nx", int)),
    }
    for group in include:
        for flag, dest, typ in groups[group]:
            parser.add_argument(flag, dest=dest, type=typ, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimirkg",
        description="Klein-Gordon thermal-wave solver with a plate Casimir potential",
    )
    parser.add_argument("--config", default=None, help="INI config file")
    parser.add_argument("--out", default=None, help="output path ('-' for stdout)")
    parser.add_argument("--quiet", action="store_true", help="suppress notes on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("force", help="plate force at a separation")
    p.add_argument("--d-nm", dest="d_nm", type=float, required=True)
    p.add_argument("--area-m2", dest="area_m2", type=float, required=True)
    _add_config_flags(p, include=("constants",))
    p.set_defaults(func=cmd_force)

    p = sub.add_parser("q-sweep", help="q versus separation (and optionally v/c)")
    p.add_argument("--d-min-nm", type=float, required=True, dest="d_min_nm")
    p.add_argument("--d-max-nm", type=float, required=True, dest="d_max_nm")
    p.add_argument("--d-count", type=int, default=101, dest="d_count")
    p.add_argument("--v-min", type=float, default=None, dest="v_min")
    p.add_argument("--v-max", type=float, default=None, dest="v_max")
    p.add_argument("--v-count", type=int, default=None, dest="v_count")
    _add_config_flags(p, include=("constants", "casimir", "kinematics", "solver"))
    p.set_defaults(func=cmd_qsweep)

    p = sub.add_parser("find-zero", help="separation where q changes sign")
    p.add_argument("--d-lo-nm", type=float, default=0.1, dest="d_lo_nm")
    p.add_argument("--d-hi-nm", type=float, default=10.0, dest="d_hi_nm")
    p.add_argument("--tol-nm", type=float, default=1e-4, dest="tol_nm")
    _add_config_flags(p, include=("constants", "casimir", "kinematics"))
    p.set_defaults(func=cmd_findzero)

    p = sub.add_parser("solve", help="closed-form field on a grid")
    p.add_argument("--pulse-duration-s", type=float, default=None, dest="pulse_duration_s")
    _add_config_flags(
        p, include=("constants", "casimir", "kinematics", "solver", "grid")
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="closed form vs finite differences")
    p.add_argument("--bound", type=float, default=1e-3)
    p.add_argument("--pulse-duration-s", type=float, default=None, dest="pulse_duration_s")
    _add_config_flags(
        p, include=("constants", "casimir", "kinematics", "solver", "grid", "fdm")
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", help="emit a canned parameter-study CSV")
    p.add_argument("which", choices=_FIGURE_IDS)
    p.add_argument("--out-dir", default="figures", dest="out_dir")
    p.set_defaults(func=cmd_figures)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ConfigurationError, GridError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BracketError, UnsupportedModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AccuracyError as exc:
        detail = ""
        if exc.value is not None:
            detail = f" (best estimate {exc.value!r}, est_error {exc.est_error!r})"
        print(f"accuracy error: {exc}{detail}", file=sys.stderr)
        return 4
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 5
    except CasimirKGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
