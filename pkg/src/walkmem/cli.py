"""Command-line front end: run storage experiments, emit CSV/JSON artifacts.

Subcommands
-----------
evolve      position distribution of a stored qubit after t steps (CSV)
memory      one store/retrieve cycle with full state report (JSON)
sweep       retrieved P(|0>) over a grid of input qubits (CSV)
eavesdrop   capture probability and guess fidelity vs window width (CSV)
ensemble    localization and fidelity statistics over disorder seeds (JSON)
verify      dense-matrix differential suite (prints verdicts, optional JSON)

Angles on the command line are multiples of pi by default — ``--theta 1/6``
means pi/6 — because the interesting storage times are exact rational
multiples of pi over theta.  Pass ``--radians`` to switch every angle
flag to raw radians.

Every artifact embeds the tool version and the fully resolved
configuration (as a ``# config:`` comment in CSV, a ``"config"`` field
in JSON).  Re-running with ``--config`` pointing at an emitted artifact
— or at a bare JSON config — reproduces the data bytes exactly; the
output path is not part of the config, so replays can write anywhere.
Numbers are written in shortest round-trip form.  Exit codes: 0 success,
2 bad usage/config, 3 simulation error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from . import __version__
from .analysis import ensemble_stats, eavesdrop_curve
from .memory import MemoryConfig, probability_sweep, store_retrieve
from .oracle import verification_suite
from .qubit import Qubit, apply, hadamard
from .walk import evolve, make_schedule, position_distribution

__all__ = ["main"]


class ConfigError(Exception):
    """Bad or inconsistent configuration (maps to exit code 2)."""


# ---------------------------------------------------------------------------
# value parsing


def parse_angle(text: str, radians: bool = False) -> float:
    """'1/6' -> pi/6 (or 1/6 rad with radians=True); plain decimals too."""
    try:
        if radians:
            return float(text)
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise ConfigError(f"cannot parse angle {text!r}: {err}") from None
    return math.pi * frac.numerator / frac.denominator


def parse_int_list(text: str) -> list[int]:
    """'0,3,6' -> [0, 3, 6]; 'lo:hi' -> inclusive range."""
    try:
        if ":" in text:
            lo, hi = (int(part) for part in text.split(":"))
            if hi < lo:
                raise ValueError("range upper end below lower end")
            return list(range(lo, hi + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        raise ConfigError(f"cannot parse integer list {text!r}: {err}") from None


def parse_grid(text: str, radians: bool = False) -> tuple[float, float, int]:
    """'start:stop:count' with start/stop as angles -> (start, stop, count)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must look like start:stop:count, got {text!r}")
    start = parse_angle(parts[0], radians)
    stop = parse_angle(parts[1], radians)
    try:
        count = int(parts[2])
    except ValueError as err:
        raise ConfigError(f"bad grid point count in {text!r}: {err}") from None
    if count < 1:
        raise ConfigError("grid needs at least one point")
    return start, stop, count


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as err:
        raise ConfigError(f"cannot parse amplitude {text!r}: {err}") from None


# ---------------------------------------------------------------------------
# config resolution (flags override file; file may be a previous artifact)


def load_config_file(path: str) -> dict[str, Any]:
    """Read a config from a JSON file or a previously emitted artifact."""
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise ConfigError(f"cannot read config {path!r}: {err}") from None

    if text.lstrip().startswith("#"):  # CSV artifact: find the config comment
        for line in text.splitlines():
            if line.startswith("# config: "):
                return json.loads(line[len("# config: "):])
        raise ConfigError(f"{path!r} has no '# config:' line")

    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(f"{path!r} is not valid JSON: {err}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path!r} must hold a JSON object")
    if "command" in data:
        return data
    if isinstance(data.get("config"), dict):  # emitted JSON report
        return data["config"]
    raise ConfigError(f"{path!r} contains neither a config nor an artifact")


def _merge(args: argparse.Namespace, key: str, file_cfg: dict[str, Any], default: Any = None) -> Any:
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in file_cfg:
        return file_cfg[key]
    return default


def _resolve_qubit(args: argparse.Namespace, file_cfg: dict[str, Any]) -> tuple[complex, complex]:
    """Canonical (alpha, beta); flags beat file; default is |0>."""
    angle_flags = args.delta is not None or args.eta is not None
    amp_flags = getattr(args, "alpha", None) is not None or getattr(args, "beta", None) is not None
    if angle_flags and amp_flags:
        raise ConfigError("give the input as --delta/--eta or --alpha/--beta, not both")
    if angle_flags:
        delta = parse_angle(args.delta, args.radians) if args.delta is not None else 0.0
        eta = parse_angle(args.eta, args.radians) if args.eta is not None else 0.0
        q = Qubit.from_angles(delta, eta)
        return q.alpha, q.beta
    if amp_flags:
        a = parse_complex(args.alpha) if args.alpha is not None else 0j
        b = parse_complex(args.beta) if args.beta is not None else 0j
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        if norm == 0.0:
            raise ConfigError("input amplitudes cannot both be zero")
        return a / norm, b / norm
    if "alpha" in file_cfg and "beta" in file_cfg:
        return complex(*file_cfg["alpha"]), complex(*file_cfg["beta"])
    return 1 + 0j, 0j


def _resolve_schedule(args: argparse.Namespace, file_cfg: dict[str, Any]) -> dict[str, Any]:
    kind = _merge(args, "schedule", file_cfg, "constant")
    steps = _merge(args, "steps", file_cfg)
    if steps is None:
        raise ConfigError("--steps is required")
    if steps < 0:
        raise ConfigError(f"--steps must be >= 0, got {steps}")
    entry: dict[str, Any] = {"schedule": kind, "steps": int(steps)}
    if kind == "constant":
        theta = getattr(args, "theta", None)
        if theta is not None:
            entry["theta"] = parse_angle(theta, args.radians)
        elif "theta" in file_cfg:
            entry["theta"] = float(file_cfg["theta"])
        else:
            raise ConfigError("constant schedules need --theta")
    elif kind == "temporal-disorder":
        seed = _merge(args, "seed", file_cfg)
        if seed is None:
            raise ConfigError("temporal-disorder schedules need --seed")
        entry["seed"] = int(seed)
    else:
        raise ConfigError(f"unknown schedule kind {kind!r}")
    return entry


def _schedule_from_config(cfg: dict[str, Any]) -> CoinSchedule:
    return make_schedule(
        cfg["schedule"], cfg["steps"], theta=cfg.get("theta"), seed=cfg.get("seed")
    )


def _qubit_from_config(cfg: dict[str, Any]) -> Qubit:
    return Qubit(complex(*cfg["alpha"]), complex(*cfg["beta"]))


def _memory_options(args: argparse.Namespace, file_cfg: dict[str, Any]) -> dict[str, Any]:
    encoding = _merge(args, "encoding", file_cfg, "none")
    correction = _merge(args, "phase_correction", file_cfg, False)
    if correction and encoding != "hadamard":
        raise ConfigError("--phase-correction requires --encoding hadamard")
    return {"encoding": encoding, "phase_correction": bool(correction)}


# ---------------------------------------------------------------------------
# serialization


def _fmt(value: Any) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, newline="\n")


def render_csv(columns: Sequence[str], rows: Sequence[Sequence[Any]], config: dict[str, Any]) -> str:
    lines = [
        f"# walkmem {__version__}",
        "# config: " + json.dumps(config, sort_keys=True, separators=(",", ":")),
        ",".join(columns),
    ]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(payload: dict[str, Any], config: dict[str, Any]) -> str:
    body = {"tool": "walkmem", "version": __version__, "config": config}
    body.update(payload)
    return json.dumps(body, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_evolve(args: argparse.Namespace, file_cfg: dict[str, Any]) -> int:
    alpha, beta = _resolve_qubit(args, file_cfg)
    config = {"command": "evolve", "alpha": _pair(alpha), "beta": _pair(beta)}
    config.update(_resolve_schedule(args, file_cfg))

    state = evolve(_qubit_from_config(config), _schedule_from_config(config))
    sites, probs = position_distribution(state).support()
    rows = list(zip(sites, probs))
    _emit(render_csv(("j", "probability"), rows, config), args.output)
    return 0


def cmd_memory(args: argparse.Namespace, file_cfg: dict[str, Any]) -> int:
    alpha, beta = _resolve_qubit(args, file_cfg)
    config = {"command": "memory", "alpha": _pair(alpha), "beta": _pair(beta)}
    config.update(_resolve_schedule(args, file_cfg))
    config.update(_memory_options(args, file_cfg))

    schedule = _schedule_from_config(config)
    cfg = MemoryConfig(
        schedule=schedule,
        encoding=config["encoding"],
        phase_correction=config["phase_correction"],
    )
    q = _qubit_from_config(config)
    record = store_retrieve(q, cfg)
    payload = {
        "input": {"alpha": _pair(q.alpha), "beta": _pair(q.beta)},
        "schedule": {k: config[k] for k in ("schedule", "steps", "theta", "seed") if k in config},
        "theta_sum": record.theta_sum,
        "retrieved": {
            "alpha": _pair(record.retrieved.alpha),
            "beta": _pair(record.retrieved.beta),
        },
        "final": {"alpha": _pair(record.final.alpha), "beta": _pair(record.final.beta)},
        "final_probabilities": list(record.final.probabilities()),
        "fidelity": record.fidelity_to_input,
    }
    _emit(render_json(payload, config), args.output)
    return 0


def cmd_sweep(args: argparse.Namespace, file_cfg: dict[str, Any]) -> int:
    if args.theta is not None:
        theta = parse_angle(args.theta, args.radians)
    elif "theta" in file_cfg:
        theta = float(file_cfg["theta"])
    else:
        raise ConfigError("sweep needs --theta")

    times = parse_int_list(args.times) if args.times is not None else file_cfg.get("times")
    if not times:
        raise ConfigError("sweep needs --times")
    if any(t < 0 for t in times):
        raise ConfigError("storage times must be >= 0")

    vary = _merge(args, "vary", file_cfg, "delta")
    if vary not in ("delta", "eta"):
        raise ConfigError(f"--vary must be delta or eta, got {vary!r}")
    if args.grid is not None:
        grid_start, grid_stop, grid_points = parse_grid(args.grid, args.radians)
    elif {"grid_start", "grid_stop", "grid_points"} <= file_cfg.keys():
        grid_start = float(file_cfg["grid_start"])
        grid_stop = float(file_cfg["grid_stop"])
        grid_points = int(file_cfg["grid_points"])
    else:
        raise ConfigError("sweep needs --grid start:stop:count")
    if args.fixed is not None:
        fixed = parse_angle(args.fixed, args.radians)
    else:
        fixed = float(file_cfg.get("fixed", 0.0))

    config = {
        "command": "sweep",
        "theta": theta,
        "times": [int(t) for t in times],
        "vary": vary,
        "grid_start": grid_start,
        "grid_stop": grid_stop,
        "grid_points": grid_points,
        "fixed": fixed,
    }

    grid = np.linspace(grid_start, grid_stop, grid_points)
    table = probability_sweep(theta, config["times"], grid, vary=vary, fixed=fixed)
    rows = []
    for row, t in enumerate(config["times"]):
        for col, value in enumerate(grid):
            delta, eta = (value, fixed) if vary == "delta" else (fixed, value)
            rows.append((t, delta, eta, table[row, col]))
    _emit(render_csv(("t", "delta", "eta", "p0"), rows, config), args.output)
    return 0


def cmd_eavesdrop(args: argparse.Namespace, file_cfg: dict[str, Any]) -> int:
    alpha, beta = _resolve_qubit(args, file_cfg)
    config = {"command": "eavesdrop", "alpha": _pair(alpha), "beta": _pair(beta)}
    config.update(_resolve_schedule(args, file_cfg))
    config.update(_memory_options(args, file_cfg))
    if args.halfwidths is not None:
        config["halfwidths"] = parse_int_list(args.halfwidths)
    elif "halfwidths" in file_cfg and file_cfg["halfwidths"] is not None:
        config["halfwidths"] = [int(w) for w in file_cfg["halfwidths"]]

    schedule = _schedule_from_config(config)
    cfg = MemoryConfig(
        schedule=schedule,
        encoding=config["encoding"],
        phase_correction=config["phase_correction"],
    )
    q = _qubit_from_config(config)
    stored = apply(hadamard(), q) if cfg.encoding == "hadamard" else q
    state = evolve(stored, schedule)
    halfwidths, captured, guess_fid = eavesdrop_curve(
        state, q, cfg, halfwidths=config.get("halfwidths")
    )
    rows = list(zip(halfwidths, captured, guess_fid))
    _emit(render_csv(("w", "captured_probability", "guess_fidelity"), rows, config), args.output)
    return 0


def cmd_ensemble(args: argparse.Namespace, file_cfg: dict[str, Any]) -> int:
    alpha, beta = _resolve_qubit(args, file_cfg)
    steps = _merge(args, "steps", file_cfg)
    if steps is None:
        raise ConfigError("--steps is required")
    seeds = parse_int_list(args.seeds) if args.seeds is not None else file_cfg.get("seeds")
    if not seeds:
        raise ConfigError("ensemble needs --seeds")

    config = {
        "command": "ensemble",
        "alpha": _pair(alpha),
        "beta": _pair(beta),
        "steps": int(steps),
        "seeds": [int(s) for s in seeds],
    }
    config.update(_memory_options(args, file_cfg))

    stats = ensemble_stats(
        _qubit_from_config(config),
        config["steps"],
        config["seeds"],
        encoding=config["encoding"],
        phase_correction=config["phase_correction"],
    )
    payload = {
        "per_seed": [
            {
                "seed": seed,
                "std_dev": report.std_dev,
                "participation_ratio": report.participation_ratio,
                "fidelity": float(fid),
            }
            for seed, report, fid in zip(stats.seeds, stats.reports, stats.fidelities)
        ],
        "aggregate": {
            "mean_std_dev": stats.mean_std_dev,
            "stderr_std_dev": stats.stderr_std_dev,
            "mean_participation_ratio": stats.mean_participation,
            "stderr_participation_ratio": stats.stderr_participation,
            "mean_fidelity": stats.mean_fidelity,
            "stderr_fidelity": stats.stderr_fidelity,
        },
    }
    _emit(render_json(payload, config), args.output)
    return 0


def cmd_verify(args: argparse.Namespace, file_cfg: dict[str, Any]) -> int:
    config = {
        "command": "verify",
        "trials": int(_merge(args, "trials", file_cfg, 100)),
        "max_steps": int(_merge(args, "max_steps", file_cfg, 12)),
        "seed": int(_merge(args, "seed", file_cfg, 20260815)),
    }
    checks = verification_suite(
        trials=config["trials"], max_steps=config["max_steps"], seed=config["seed"]
    )
    for check in checks:
        print(check)
    if args.output is not None:
        payload = {
            "checks": [
                {
                    "name": c.name,
                    "max_error": c.max_error,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                }
                for c in checks
            ],
            "all_passed": all(c.passed for c in checks),
        }
        _emit(render_json(payload, config), args.output)
    return 0 if all(c.passed for c in checks) else 3


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config file or a previously emitted artifact")
    p.add_argument("--output", "-o", help="output path (stdout if omitted)")
    p.add_argument(
        "--radians",
        action="store_true",
        help="interpret angle flags as raw radians instead of multiples of pi",
    )


def _add_qubit(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", help="input polar angle (multiple of pi), P(|0>) = cos^2 delta")
    p.add_argument("--eta", help="input relative phase (multiple of pi)")
    p.add_argument("--alpha", help="explicit |0> amplitude, e.g. '0.6' or '0.5+0.5j'")
    p.add_argument("--beta", help="explicit |1> amplitude (normalized together with --alpha)")


def _add_schedule(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--schedule",
        choices=("constant", "temporal-disorder"),
        help="coin angle schedule kind (default constant)",
    )
    p.add_argument("--theta", help="coin angle for constant schedules (multiple of pi)")
    p.add_argument("--seed", type=int, help="disorder seed (temporal-disorder schedules)")
    p.add_argument("--steps", type=int, help="number of walk steps (storage time)")


def _add_memory_options(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--encoding",
        choices=("none", "hadamard"),
        help="conjugate the storage period by Hadamards (default none)",
    )
    p.add_argument(
        "--phase-correction",
        dest="phase_correction",
        action="store_const",
        const=True,
        help="cancel the residual diagonal phase (needs --encoding hadamard)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walkmem",
        description="Store a qubit in a discrete-time quantum walk and read it back.",
    )
    parser.add_argument("--version", action="version", version=f"walkmem {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="position distribution after storage")
    _add_common(p)
    _add_qubit(p)
    _add_schedule(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("memory", help="one store/retrieve cycle, full report")
    _add_common(p)
    _add_qubit(p)
    _add_schedule(p)
    _add_memory_options(p)
    p.set_defaults(func=cmd_memory)

    p = sub.add_parser("sweep", help="retrieved P(|0>) over a grid of inputs")
    _add_common(p)
    p.add_argument("--theta", help="constant coin angle (multiple of pi)")
    p.add_argument("--times", help="storage times, e.g. '0,3,6' or '0:9'")
    p.add_argument("--vary", choices=("delta", "eta"), help="which input angle the grid sweeps")
    p.add_argument("--grid", help="swept angle grid start:stop:count (angles as multiples of pi)")
    p.add_argument("--fixed", help="value of the non-swept input angle (multiple of pi)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("eavesdrop", help="capture/fidelity vs read-window width")
    _add_common(p)
    _add_qubit(p)
    _add_schedule(p)
    _add_memory_options(p)
    p.add_argument("--halfwidths", help="window half-widths, e.g. '0,2,4' or '0:50' (default 0..t)")
    p.set_defaults(func=cmd_eavesdrop)

    p = sub.add_parser("ensemble", help="disorder-seed ensemble statistics")
    _add_common(p)
    _add_qubit(p)
    p.add_argument("--steps", type=int, help="number of walk steps (storage time)")
    p.add_argument("--seeds", help="disorder seeds, e.g. '0:49' or '3,17,42'")
    _add_memory_options(p)
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("verify", help="run the dense-oracle differential suite")
    _add_common(p)
    p.add_argument("--trials", type=int, help="random instances per comparison (default 100)")
    p.add_argument("--max-steps", dest="max_steps", type=int, help="largest walk length (default 12)")
    p.add_argument("--seed", type=int, help="suite RNG seed")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        file_cfg = load_config_file(args.config) if args.config else {}
        if file_cfg and file_cfg.get("command") not in (None, args.command):
            raise ConfigError(
                f"config was emitted by {file_cfg['command']!r}, not {args.command!r}"
            )
    except ConfigError as err:
        print(f"walkmem: error: {err}", file=sys.stderr)
        return 2

    func: Callable[[argparse.Namespace, dict[str, Any]], int] = args.func
    try:
        return func(args, file_cfg)
    except ConfigError as err:
        print(f"walkmem: error: {err}", file=sys.stderr)
        return 2
    except Exception as err:  # simulation-level failure
        print(f"walkmem: simulation error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
