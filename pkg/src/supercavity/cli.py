"""Command-line front end writing deterministic CSV.

Examples
--------
::

    supercavity spectrum --preset fig3 --config node-antinode -o fig3.csv
    supercavity flow --preset fig4 --config antinode-node
    supercavity modes --preset fig4 --config node-antinode
    supercavity singlemode-compare --preset fig6
    supercavity spectrum --config-file run.cfg --gamma 0

Configuration files are flat ``key = value`` text with ``#`` comments.
Keys are the long flag names with underscores, e.g. ``n_cavities = 31``
or ``atom_sites = 8, 12``.  Flags override file values, which override
the preset.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import presets
from .flow import photon_flow
from .model import DomainError, ModelParams, Role, classify_site, sc_mode_energy, wavevector
from .modes import Which, localized_mode_analytic, numerical_mode
from .numerics import SingularMatrixError
from .scattering import solve_scattering, sweep_spectrum
from .singlemode import compare_near_resonance

COMMANDS = ("spectrum", "flow", "modes", "singlemode-compare")
FLUX_TOL = 1e-9

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _as_bool(token: str) -> bool:
    t = token.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(token)


def _as_sites(token: str):
    parts = token.replace(",", " ").split()
    if len(parts) != 2:
        raise ValueError(token)
    return tuple(int(p) for p in parts)


def _as_optional_float(token: str):
    return None if token.strip().lower() in ("", "none") else float(token)


# key -> converter for both config files and flags
KEYS = {
    "n_cavities": int,
    "omega_c": float,
    "omega_a": float,
    "xi": float,
    "eta": float,
    "eta_right": _as_optional_float,
    "omega_rabi": float,
    "gamma": float,
    "atom_sites": _as_sites,
    "allow_off_band": _as_bool,
    "resonant_mode": int,
    "delta_min": float,
    "delta_max": float,
    "points": int,
    "delta": float,
    "decaying": _as_bool,
    "output_path": str,
    "preset": str,
    "configuration": str,
    "source": str,
}
PARAM_KEYS = ("n_cavities", "omega_c", "omega_a", "xi", "eta", "eta_right",
              "omega_rabi", "gamma", "atom_sites", "allow_off_band")
REQUIRED = ("n_cavities", "eta", "omega_rabi", "atom_sites", "resonant_mode")


@dataclass(frozen=True)
class ExperimentConfig:
    command: str
    params: ModelParams
    resonant_mode: int
    delta_min: float
    delta_max: float
    points: int
    delta: float = 0.0
    decaying: bool = True
    output_path: str = "-"
    source: str = "auto"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not self.delta_min < self.delta_max:
            raise UsageError(f"delta_min ({self.delta_min}) must be < delta_max ({self.delta_max})")
        if self.points < 2:
            raise UsageError(f"points must be >= 2, got {self.points}")
        if self.source not in ("auto", "analytic", "numeric"):
            raise UsageError(f"source must be auto, analytic or numeric, got {self.source!r}")

    @property
    def deltas(self) -> np.ndarray:
        return np.linspace(self.delta_min, self.delta_max, self.points)


def read_config_file(text: str) -> Dict[str, object]:
    values: Dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key] = _convert(key, value)
    return values


def _convert(key: str, token: str):
    if key not in KEYS:
        raise UsageError(f"unknown key {key!r}")
    try:
        return KEYS[key](token)
    except ValueError:
        raise UsageError(f"malformed value for {key}: {token!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercavity",
        description="Single-photon scattering through a coupled-cavity super cavity with two atoms.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--preset", choices=sorted(presets.PRESETS))
    parser.add_argument("--config", dest="configuration", choices=sorted(presets.CONFIGURATIONS),
                        help="atom configuration relative to the resonant mode")
    parser.add_argument("--config-file", help="flat key = value configuration file")
    parser.add_argument("-o", "--output", dest="output_path", help="CSV path ('-' for stdout)")
    for key in KEYS:
        if key in ("preset", "configuration", "output_path", "decaying", "allow_off_band"):
            continue
        parser.add_argument("--" + key.replace("_", "-"), dest=key, metavar=key.upper())
    parser.add_argument("--decaying", dest="decaying", action="store_const", const="true")
    parser.add_argument("--no-decaying", dest="decaying", action="store_const", const="false")
    parser.add_argument("--allow-off-band", dest="allow_off_band", action="store_const", const="true")
    return parser


def parse_config(argv: Sequence[str]) -> ExperimentConfig:
    """Parse flags (and an optional config file) into an :class:`ExperimentConfig`."""
    ns = build_parser().parse_args(list(argv))
    file_values: Dict[str, object] = {}
    if ns.config_file:
        try:
            with open(ns.config_file, encoding="utf-8") as fh:
                file_values = read_config_file(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from None
    flag_values = {
        k: _convert(k, v) for k, v in vars(ns).items()
        if k in KEYS and v is not None and k not in ("preset", "configuration")
    }
    for k in ("preset", "configuration"):
        if getattr(ns, k) is not None:
            flag_values[k] = getattr(ns, k)

    merged = {**file_values, **flag_values}
    values: Dict[str, object] = {}
    preset = merged.get("preset")
    if preset is not None:
        if preset not in presets.PRESETS:
            raise UsageError(f"unknown preset {preset!r}")
        configuration = merged.get("configuration", "node-antinode")
        if configuration not in presets.CONFIGURATIONS:
            raise UsageError(f"unknown configuration {configuration!r}")
        dmin, dmax, pts = presets.PRESETS[preset]["window"]
        values.update(
            n_cavities=presets.N_CAVITIES, xi=1.0, omega_c=0.0, eta=presets.ETA,
            omega_rabi=presets.OMEGA_RABI, gamma=presets.PRESETS[preset]["gamma"],
            atom_sites=presets.CONFIGURATIONS[configuration],
            resonant_mode=presets.RESONANT_MODE, delta_min=dmin, delta_max=dmax, points=pts,
        )
    elif "configuration" in merged:
        raise UsageError("--config needs a preset (or give atom_sites explicitly)")
    values.update({k: v for k, v in merged.items() if k not in ("preset", "configuration")})

    missing = [k for k in REQUIRED if k not in values]
    if missing:
        raise UsageError("missing configuration: " + ", ".join(missing) + " (or use --preset)")

    pkw = {k: values[k] for k in PARAM_KEYS if k in values}
    mode = values["resonant_mode"]
    try:
        if "omega_a" not in pkw:
            params = ModelParams.resonant(mode=mode, **pkw)
        else:
            params = ModelParams(**pkw)
        sc_mode_energy(params, mode)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    return ExperimentConfig(
        command=ns.command,
        params=params,
        resonant_mode=mode,
        delta_min=values.get("delta_min", -0.05),
        delta_max=values.get("delta_max", 0.05),
        points=values.get("points", 2001),
        delta=values.get("delta", 0.0),
        decaying=values.get("decaying", True),
        output_path=values.get("output_path", "-"),
        source=values.get("source", "auto"),
    )


def _fmt(x) -> str:
    return repr(float(x))


class NumericalFailure(RuntimeError):
    pass


def _spectrum(cfg: ExperimentConfig):
    records = sweep_spectrum(cfg.params, cfg.resonant_mode, cfg.deltas, cfg.decaying)
    rows = [[_fmt(r.delta), _fmt(r.k), _fmt(r.R), _fmt(r.T), _fmt(r.L), _fmt(r.flow_check)]
            for r in records]
    bad = [r for r in records if not r.ok or not r.flow_check <= FLUX_TOL]
    failure = None
    if bad:
        first = bad[0]
        why = first.error or f"flux residual {first.flow_check:.3e} exceeds {FLUX_TOL}"
        failure = f"{len(bad)} failing point(s); first at delta={first.delta!r}: {why}"
    return ["delta", "k", "R", "T", "L", "flow_check"], rows, failure


def _solve_at(cfg: ExperimentConfig):
    _, e_n = sc_mode_energy(cfg.params, cfg.resonant_mode)
    try:
        k = wavevector(cfg.params, e_n + cfg.delta)
        return solve_scattering(cfg.params, k, cfg.decaying)
    except (DomainError, SingularMatrixError) as exc:
        raise NumericalFailure(f"delta={cfg.delta!r}: {exc}") from None


def _flow(cfg: ExperimentConfig):
    profile = photon_flow(_solve_at(cfg))
    return ["site", "J"], [[str(j), _fmt(v)] for j, v in profile.rows()], None


def _modes(cfg: ExperimentConfig):
    p, mode = cfg.params, cfg.resonant_mode
    node = [w for w, s in zip(Which, p.atom_sites)
            if classify_site(s, mode, p.n_cavities).tag is Role.NODE]
    source = cfg.source
    if source == "auto":
        source = "analytic" if node else "numeric"
    if source == "analytic":
        if not node:
            raise NumericalFailure(f"no atom sits at a node of mode {mode}")
        m = localized_mode_analytic(p, mode, node[0])
    else:
        m = numerical_mode(p, mode, cfg.decaying)
    rows = [[str(i + 1), _fmt(abs(a) ** 2), _fmt(a.real), _fmt(a.imag)]
            for i, a in enumerate(m.amplitudes)]
    return ["site", "weight", "real", "imag"], rows, None


def _singlemode(cfg: ExperimentConfig):
    try:
        triples = compare_near_resonance(cfg.params, cfg.resonant_mode, cfg.deltas)
    except (DomainError, SingularMatrixError) as exc:
        raise NumericalFailure(str(exc)) from None
    return ["delta", "R_exact", "R_single_mode"], [[_fmt(v) for v in t] for t in triples], None


HANDLERS = {"spectrum": _spectrum, "flow": _flow, "modes": _modes, "singlemode-compare": _singlemode}


def render_csv(header: List[str], rows: List[List[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def run(cfg: ExperimentConfig, stdout=None, stderr=None) -> int:
    """Execute one configured command; returns the process exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        header, rows, failure = HANDLERS[cfg.command](cfg)
    except (NumericalFailure, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NUMERIC
    text = render_csv(header, rows)
    if cfg.output_path in ("", "-"):
        stdout.write(text)
    else:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    if failure:
        print(f"error: {failure}", file=stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"supercavity: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
