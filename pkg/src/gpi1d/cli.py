"""Command-line interface: conversions, spectra, scattering, Berry phase, bands.

Every task prints a machine-readable table to stdout (JSON by default, CSV on
request) and diagnostics to stderr.  A plain key = value config file can seed
any option; explicit flags override the file.  Exit codes: 0 success,
2 invalid configuration, 3 degenerate parametrization.

Complex values serialize as two-element [re, im] arrays in JSON and as paired
*_re / *_im columns in CSV; CSV carries the summary as leading '# key = value'
comment lines so both formats encode identical values.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import berry as berry_mod
from . import lattice as lattice_mod
from . import spectral
from .errors import DegenerateParametrization, GpiError
from .params import (CarreauParams, ChernoffHughesParams, CouplingScheme,
                     GreekParams, HalflineParams, InverseParams, SebaParams,
                     TransferParams, carreau_to_halfline,
                     chernoff_hughes_to_greek, classify_symmetries,
                     greek_to_halfline, greek_to_inverse, greek_to_transfer,
                     inverse_to_greek, is_decoupled, seba_to_halfline,
                     transfer_to_greek, transfer_to_halfline)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3

_SCHEME_FIELDS = {
    "greek": ("alpha", "beta", "gamma_re", "gamma_im"),
    "halfline": ("a", "b", "c_re", "c_im"),
    "inverse": ("inv_a", "inv_b", "inv_c_re", "inv_c_im"),
    "transfer": ("omega_re", "omega_im", "ta", "tb", "tc", "td"),
    "carreau": ("alpha_c", "beta_c", "rho_c", "theta_c"),
    "seba": ("alpha_s", "beta_s", "gamma_s", "delta_s"),
    "chernoff-hughes": ("r", "z_re", "z_im"),
}


class ConfigError(Exception):
    pass


def _load_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, value = line.split("=", 1)
                out[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    return out


def _merge_config(args: argparse.Namespace, config: dict[str, str]) -> None:
    # flags override the file: fill only options the command line left at None
    for key, raw in config.items():
        if key in ("task", "command"):
            continue
        if not hasattr(args, key):
            raise ConfigError(f"unknown config key {key!r}")
        if getattr(args, key) is None:
            setattr(args, key, raw)


def _as_float(name: str, value) -> float:
    if value is None:
        raise ConfigError(f"missing required numeric option {name!r}")
    try:
        out = float(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"option {name!r}: not a number: {value!r}") from exc
    if not math.isfinite(out):
        raise ConfigError(f"option {name!r} must be finite, got {out!r}")
    return out


def _as_int(name: str, value) -> int:
    out = _as_float(name, value)
    if out != int(out):
        raise ConfigError(f"option {name!r} must be an integer, got {value!r}")
    return int(out)


def _build_scheme(args: argparse.Namespace) -> CouplingScheme:
    kind = args.scheme
    if kind is None:
        raise ConfigError("no parametrization given (use --scheme)")
    if kind not in _SCHEME_FIELDS:
        raise ConfigError(f"unknown scheme {kind!r}; choose from {sorted(_SCHEME_FIELDS)}")
    vals = {name: _as_float(name, getattr(args, name)) for name in _SCHEME_FIELDS[kind]}
    try:
        if kind == "greek":
            return CouplingScheme.from_greek(GreekParams(
                vals["alpha"], vals["beta"], complex(vals["gamma_re"], vals["gamma_im"])))
        if kind == "halfline":
            return CouplingScheme.from_halfline(HalflineParams(
                vals["a"], vals["b"], complex(vals["c_re"], vals["c_im"])))
        if kind == "inverse":
            gr = inverse_to_greek(InverseParams(
                vals["inv_a"], vals["inv_b"], complex(vals["inv_c_re"], vals["inv_c_im"])))
            return CouplingScheme.from_greek(gr)
        if kind == "transfer":
            t = TransferParams(complex(vals["omega_re"], vals["omega_im"]),
                               vals["ta"], vals["tb"], vals["tc"], vals["td"])
            try:
                return CouplingScheme.from_greek(transfer_to_greek(t))
            except DegenerateParametrization:
                return CouplingScheme.from_halfline(transfer_to_halfline(t))
        if kind == "carreau":
            return CouplingScheme.from_halfline(carreau_to_halfline(CarreauParams(
                vals["alpha_c"], vals["beta_c"], vals["rho_c"], vals["theta_c"])))
        if kind == "seba":
            return CouplingScheme.from_halfline(seba_to_halfline(SebaParams(
                vals["alpha_s"], vals["beta_s"], vals["gamma_s"], vals["delta_s"])))
        return CouplingScheme.from_greek(chernoff_hughes_to_greek(ChernoffHughesParams(
            vals["r"], complex(vals["z_re"], vals["z_im"]))))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _c(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


# ---------------------------------------------------------------------------
# Tasks: each returns (summary: dict, header: list[str], rows: list[list[float|str]])
# ---------------------------------------------------------------------------

def _task_convert(scheme: CouplingScheme, args) -> tuple[dict, list, list]:
    flags = classify_symmetries(scheme)
    summary: dict = {
        "task": "convert",
        "decoupled": is_decoupled(scheme),
        "time_reversal": flags.time_reversal,
        "space_reflection": flags.space_reflection,
        "quasifree": flags.quasifree,
    }
    rows: list[list] = []
    if scheme.is_separated:
        sep = scheme.separated
        summary["right"] = f"{sep.right.kind}({sep.right.slope:g})"
        summary["left"] = f"{sep.left.kind}({sep.left.slope:g})"
        return summary, ["form", "field", "value_re", "value_im"], rows
    g = scheme.greek
    summary["det"] = g.det
    rows += [["greek", "alpha", g.alpha, 0.0], ["greek", "beta", g.beta, 0.0],
             ["greek", "gamma", g.gamma.real, g.gamma.imag]]
    for form, conv, fields in (
            ("halfline", greek_to_halfline, ("a", "b", "c")),
            ("inverse", greek_to_inverse, ("A", "B", "C")),
            ("transfer", greek_to_transfer, ("omega", "ta", "tb", "tc", "td"))):
        try:
            rec = conv(g)
        except DegenerateParametrization as exc:
            print(f"note: {form} form not available: {exc}", file=sys.stderr)
            continue
        for name in fields:
            val = complex(getattr(rec, name))
            rows.append([form, name, val.real, val.imag])
    return summary, ["form", "field", "value_re", "value_im"], rows


def _task_bound_states(scheme: CouplingScheme, args) -> tuple[dict, list, list]:
    points = spectral.point_spectrum(scheme)
    summary = {"task": "bound-states",
               "n_bound": sum(p.kind is spectral.PointKind.BOUND for p in points)}
    rows = []
    for p in points:
        mu = p.mu if p.mu is not None else 0.0j
        nu = p.nu if p.nu is not None else 0.0j
        rows.append([p.kind.value, p.kappa, p.energy,
                     mu.real, mu.imag, nu.real, nu.imag])
    return summary, ["kind", "kappa", "energy", "mu_re", "mu_im", "nu_re", "nu_im"], rows


def _task_scatter(scheme: CouplingScheme, args) -> tuple[dict, list, list]:
    kmin = _as_float("kmin", args.kmin)
    kmax = _as_float("kmax", args.kmax)
    steps = _as_int("steps", args.steps)
    if not (0 < kmin <= kmax) or steps < 1:
        raise ConfigError("need 0 < kmin <= kmax and steps >= 1")
    rows = []
    for j in range(steps):
        k = kmin if steps == 1 else kmin + (kmax - kmin) * j / (steps - 1)
        amp = spectral.s_matrix(scheme, k)
        rows.append([k, amp.r.real, amp.r.imag, amp.t.real, amp.t.imag, amp.unitarity])
    summary = {"task": "scatter", "kmin": kmin, "kmax": kmax, "steps": steps}
    return summary, ["k", "r_re", "r_im", "t_re", "t_im", "unitarity"], rows


def _task_berry(args) -> tuple[dict, list, list]:
    loop = berry_mod.ParameterLoop(
        a=_as_float("a", args.a),
        c_mod=_as_float("cmod", args.cmod),
        samples=_as_int("samples", args.samples),
        branch=args.branch or "plus")
    result = berry_mod.berry_phase_discrete(loop)
    summary = {"task": "berry", "phase": result.phase, "samples": loop.samples,
               "branch": loop.branch, "kappa": loop.kappa}
    rows = [[j, 2.0 * math.pi * j / loop.samples, w.real, w.imag]
            for j, w in enumerate(result.per_step_overlaps)]
    return summary, ["step", "xi", "overlap_re", "overlap_im"], rows


def _task_bands(scheme: CouplingScheme, args) -> tuple[dict, list, list]:
    ell = _as_float("ell", args.ell)
    m_max = _as_int("mmax", args.mmax)
    spec = lattice_mod.LatticeSpec(scheme, ell)
    bands, gaps = lattice_mod.band_structure(spec, m_max)
    rows: list[list] = []
    for b in bands:
        rows.append(["band", b.m, b.e_lo, b.e_hi, b.width])
    for gp in gaps:
        rows.append(["gap", gp.m, gp.e_lo, gp.e_hi, gp.width])
    summary: dict = {"task": "bands", "ell": ell, "m_max": m_max,
                     "n_bands": len(bands), "n_gaps": len(gaps)}
    fit = args.fit_range
    if fit is None and len(bands) >= 6:
        hi = bands[-1].m - 1
        fit = f"{max(bands[0].m, hi - 20)}:{hi}"
    if fit is not None:
        try:
            lo_s, hi_s = str(fit).replace(",", ":").split(":")
            m_range = (int(lo_s), int(hi_s))
        except ValueError as exc:
            raise ConfigError(f"--fit-range must be 'lo:hi', got {fit!r}") from exc
        report = lattice_mod.asymptotic_regime(spec, m_range)
        summary.update({
            "regime": report.regime.value,
            "fit_range": list(m_range),
            "relative_error": report.relative_error,
        })
        for key, val in sorted(report.predicted.items()):
            summary[f"predicted_{key}"] = val
        for key, val in sorted(report.measured.items()):
            summary[f"measured_{key}"] = val
    return summary, ["type", "m", "e_lo", "e_hi", "width"], rows


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _emit(summary: dict, header: list, rows: list, fmt: str) -> str:
    if fmt == "json":
        payload = {"summary": summary,
                   "columns": header,
                   "rows": [list(r) for r in rows]}
        return json.dumps(payload, indent=2, sort_keys=False, default=_json_default) + "\n"
    buf = io.StringIO()
    for key, val in summary.items():
        buf.write(f"# {key} = {_scalar_str(val)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_scalar_str(v) for v in row])
    return buf.getvalue()


def _scalar_str(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_default(v):
    if isinstance(v, complex):
        return _c(v)
    raise TypeError(f"not serializable: {v!r}")


# ---------------------------------------------------------------------------
# Argument parsing and entry point
# ---------------------------------------------------------------------------

def _add_scheme_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", choices=sorted(_SCHEME_FIELDS), default=None,
                        help="input parametrization")
    for fields in _SCHEME_FIELDS.values():
        for name in fields:
            flag = "--" + name.replace("_", "-")
            if flag not in parser._option_string_actions:
                parser.add_argument(flag, default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpi1d",
        description="Point couplings on the line: conversions, spectra, scattering, "
                    "Berry phase, Kronig-Penney bands.")
    sub = parser.add_subparsers(dest="task", required=True)

    def common(p: argparse.ArgumentParser, scheme: bool = True) -> None:
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--config", default=None, help="key = value file; flags override")
        if scheme:
            _add_scheme_options(p)

    common(sub.add_parser("convert", help="all representable parametrizations"))
    common(sub.add_parser("bound-states", help="roots of the spectral denominator"))
    p = sub.add_parser("scatter", help="reflection/transmission over a k grid")
    common(p)
    p.add_argument("--kmin", default=None)
    p.add_argument("--kmax", default=None)
    p.add_argument("--steps", default=None)
    p = sub.add_parser("berry", help="discrete Berry phase of a coupling loop")
    common(p, scheme=False)
    p.add_argument("--a", default=None)
    p.add_argument("--cmod", default=None)
    p.add_argument("--samples", default=None)
    p.add_argument("--branch", choices=("plus", "minus"), default=None)
    p = sub.add_parser("bands", help="band/gap intervals and regime report")
    common(p)
    p.add_argument("--ell", default=None)
    p.add_argument("--mmax", default=None)
    p.add_argument("--fit-range", dest="fit_range", default=None,
                   help="band index range 'lo:hi' for the asymptotic fit")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config is not None:
            _merge_config(args, _load_config(args.config))
        fmt = args.format or "json"
        if fmt not in ("json", "csv"):
            raise ConfigError(f"unknown format {fmt!r}")
        if args.task == "berry":
            summary, header, rows = _task_berry(args)
        else:
            scheme = _build_scheme(args)
            if args.task == "convert":
                summary, header, rows = _task_convert(scheme, args)
            elif args.task == "bound-states":
                summary, header, rows = _task_bound_states(scheme, args)
            elif args.task == "scatter":
                summary, header, rows = _task_scatter(scheme, args)
            else:
                summary, header, rows = _task_bands(scheme, args)
        sys.stdout.write(_emit(summary, header, rows, fmt))
        return EXIT_OK
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateParametrization as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except GpiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
