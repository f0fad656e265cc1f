"""Command-line front end for deviation inspection, reconstruction, and benchmarks.

Settings are resolved in a fixed order: built-in defaults, then the chosen
preset, then the config file, then explicit flags.  Later sources win.  The
config file is flat ``key = value`` text; ``#`` starts a comment.  All outputs
land in the directory given by ``--out``, which is only created after the
whole configuration has validated, so a bad invocation leaves no partial
files behind.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

from .detection import STRATEGY_KINDS, ThresholdStrategy
from .experiments import (
    ExperimentConfig,
    compare_thresholds,
    run_campaign,
    run_trial_artifacts,
    write_gd_profile_dat,
    write_spectrum_overlay_dat,
    write_summary_csv,
    write_time_overlay_dat,
    write_trials_csv,
)
from .noise import NOISE_VARIANTS, NoiseSpec
from .signals import idft

PRESETS = {
    "example1": {"noise": "cauchy", "sigma1": 1.0, "sigma2": 1.0},
    "example2": {"noise": "cubic", "sigma1": 1.0, "sigma2": 1.0},
    "noiseless": {"noise": "none"},
}

DEFAULTS = {
    "n": 128,
    "m": 64,
    "noise": "none",
    "sigma1": 1.0,
    "sigma2": 1.0,
    "norms": (1.0, 2.0, 3.0),
    "strategy": ("max",),
    "alpha": 0.89,
    "trials": 30,
    "seed": 0,
    "out": ".",
}

CONFIG_KEYS = tuple(DEFAULTS) + ("preset",)


class CliError(Exception):
    """Configuration problem reported with a nonzero exit and no output files."""


def _parse_norms(text: str, where: str) -> tuple[float, ...]:
    try:
        norms = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"{where}: expected comma-separated numbers, got {text!r}") from None
    if len(norms) == 0:
        raise CliError(f"{where}: at least one norm exponent is required")
    for norm in norms:
        if norm < 1.0:
            raise CliError(f"{where}: norm exponents must be >= 1, got {norm:g}")
    return norms


def _parse_strategies(text: str, where: str) -> tuple[str, ...]:
    kinds = tuple(part.strip() for part in text.split(","))
    for kind in kinds:
        if kind not in STRATEGY_KINDS:
            raise CliError(
                f"{where}: unknown strategy {kind!r}, expected one of {STRATEGY_KINDS}"
            )
    return kinds


def _parse_noise(text: str, where: str) -> str:
    if text not in NOISE_VARIANTS + ("none",):
        raise CliError(
            f"{where}: unknown noise {text!r}, expected one of "
            f"{NOISE_VARIANTS + ('none',)}"
        )
    return text


def _parse_int(text: str, where: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CliError(f"{where}: expected an integer, got {text!r}") from None


def _parse_float(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise CliError(f"{where}: expected a number, got {text!r}") from None


_CONVERTERS = {
    "n": _parse_int,
    "m": _parse_int,
    "trials": _parse_int,
    "seed": _parse_int,
    "sigma1": _parse_float,
    "sigma2": _parse_float,
    "alpha": _parse_float,
    "noise": _parse_noise,
    "norms": _parse_norms,
    "strategy": _parse_strategies,
    "out": lambda text, where: text,
}


def parse_config_file(path: str) -> dict[str, tuple[str, int]]:
    """Raw key/value pairs from a flat config file, with line numbers kept."""
    entries: dict[str, tuple[str, int]] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise CliError(f"cannot read config file {path!r}: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CliError(f"{path}:{lineno}: expected key = value, got {raw.strip()!r}")
        key = key.strip()
        value = value.strip()
        if key not in CONFIG_KEYS:
            raise CliError(
                f"{path}:{lineno}: unknown key {key!r}, expected one of {CONFIG_KEYS}"
            )
        if key in entries:
            raise CliError(f"{path}:{lineno}: duplicate key {key!r}")
        if not value:
            raise CliError(f"{path}:{lineno}: empty value for key {key!r}")
        entries[key] = (value, lineno)
    return entries


def resolve_settings(args: argparse.Namespace) -> dict:
    """Merge defaults, preset, config file, and flags, in that order."""
    file_entries = parse_config_file(args.config) if args.config else {}

    preset = args.preset
    if preset is None and "preset" in file_entries:
        value, lineno = file_entries["preset"]
        if value not in PRESETS:
            raise CliError(
                f"{args.config}:{lineno}: unknown preset {value!r}, "
                f"expected one of {tuple(PRESETS)}"
            )
        preset = value

    settings = dict(DEFAULTS)
    if preset is not None:
        settings.update(PRESETS[preset])
    for key, (value, lineno) in file_entries.items():
        if key == "preset":
            continue
        settings[key] = _CONVERTERS[key](value, f"{args.config}:{lineno}")
    for key in DEFAULTS:
        flag_value = getattr(args, key)
        if flag_value is not None:
            settings[key] = flag_value
    return settings


def build_experiment(settings: dict) -> tuple[ExperimentConfig, tuple[ThresholdStrategy, ...]]:
    """Validated experiment config plus the requested threshold strategies."""
    noise = None
    if settings["noise"] != "none":
        try:
            noise = NoiseSpec(
                variant=settings["noise"],
                sigma1=settings["sigma1"],
                sigma2=settings["sigma2"],
            )
        except ValueError as exc:
            raise CliError(str(exc)) from None
    try:
        strategies = tuple(
            ThresholdStrategy(kind=kind, alpha=settings["alpha"])
            for kind in settings["strategy"]
        )
        config = ExperimentConfig(
            n_len=settings["n"],
            m=settings["m"],
            noise=noise,
            norms=settings["norms"],
            strategy=strategies[0],
            trials=settings["trials"],
            master_seed=settings["seed"],
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    largest = max(c.bin_index for c in config.components)
    if config.n_len <= largest:
        raise CliError(
            f"n={config.n_len} cannot carry the test signal, "
            f"its largest component bin is {largest}"
        )
    return config, strategies


def _trial_label(config: ExperimentConfig) -> str:
    noise = config.noise.variant if config.noise is not None else "none"
    return (
        f"master_seed={config.master_seed} trial=0 noise={noise} "
        f"strategy={config.strategy.kind} alpha={config.strategy.alpha:g}"
    )


def _norm_tag(norm: float) -> str:
    return f"{norm:g}"


def cmd_gd(config: ExperimentConfig, out_dir: Path) -> int:
    """Write the deviation profile of trial 0 and print the detected support."""
    first = config.norms[0]
    artifacts = run_trial_artifacts(dataclasses.replace(config, norms=(first,)), 0)
    label = f"{_trial_label(config)} L={_norm_tag(first)}"
    write_gd_profile_dat(
        out_dir / "gd_profile.dat", artifacts.profiles[0], artifacts.thresholds[0], label
    )
    support = artifacts.outcomes[0].support
    print(f"threshold: {artifacts.thresholds[0]:.6g}")
    print("support: " + (" ".join(str(k) for k in support) if support else "(empty)"))
    return 0


def cmd_reconstruct(config: ExperimentConfig, out_dir: Path) -> int:
    """Reconstruct trial 0 under every requested norm and write overlays."""
    artifacts = run_trial_artifacts(config, 0)
    label = _trial_label(config)
    for norm, spectrum in zip(config.norms, artifacts.spectra):
        tag = _norm_tag(norm)
        write_spectrum_overlay_dat(
            out_dir / f"spectrum_L{tag}.dat",
            artifacts.desired_spectrum,
            spectrum,
            f"{label} L={tag}",
        )
        write_time_overlay_dat(
            out_dir / f"time_L{tag}.dat",
            artifacts.clean_signal,
            idft(spectrum),
            f"{label} L={tag}",
        )
    print(f"{'L':>4}  {'support':<24}  {'mse_time':>12}  {'mse_freq':>12}  failure")
    for outcome in artifacts.outcomes:
        support = ";".join(str(k) for k in outcome.support) or "(empty)"
        print(
            f"{_norm_tag(outcome.norm_exponent):>4}  {support:<24}  "
            f"{outcome.mse_time:>12.6g}  {outcome.mse_freq:>12.6g}  "
            f"{outcome.failure or '-'}"
        )
    return 0 if any(o.failure is None for o in artifacts.outcomes) else 1


def cmd_bench(
    config: ExperimentConfig, strategies: tuple[ThresholdStrategy, ...], out_dir: Path
) -> int:
    """Run the campaign (per strategy when several) and write both CSVs."""
    summaries = compare_thresholds(config, strategies)
    write_trials_csv(out_dir / "trials.csv", summaries)
    write_summary_csv(out_dir / "summary.csv", summaries)
    for summary in summaries:
        strategy = summary.config.strategy
        order = " < ".join(f"L{_norm_tag(n)}" for n in summary.ranking)
        print(
            f"strategy {strategy.kind} (alpha={strategy.alpha:g}), "
            f"{summary.config.trials} trials: {order} by median time MSE"
        )
        for stats in summary.per_norm:
            print(
                f"  L={_norm_tag(stats.norm_exponent)}: "
                f"median mse_time={stats.median_mse_time:.6g} "
                f"median mse_freq={stats.median_mse_freq:.6g} "
                f"success_rate={stats.success_rate:.6g} "
                f"failures={stats.failures_empty + stats.failures_oversized + stats.failures_rank_deficient}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robustcs",
        description=(
            "Compressive-sensing reconstruction of frequency-sparse signals "
            "with selectable minimization norms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "gd": "write the generalized-deviation profile and print the detected support",
        "reconstruct": "run one reconstruction trial and write spectrum/time overlays",
        "bench": "run a Monte Carlo campaign and write trial and summary CSVs",
    }
    for name, help_text in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--preset", choices=tuple(PRESETS), default=None)
        p.add_argument("--n", type=int, default=None, help="signal length")
        p.add_argument("--m", type=int, default=None, help="number of measurements")
        p.add_argument("--noise", choices=NOISE_VARIANTS + ("none",), default=None)
        p.add_argument("--sigma1", type=float, default=None, help="real-part noise scale")
        p.add_argument("--sigma2", type=float, default=None, help="imaginary-part noise scale")
        p.add_argument(
            "--norms",
            type=lambda t: _parse_norms(t, "--norms"),
            default=None,
            help="comma-separated norm exponents, e.g. 1,2,3",
        )
        p.add_argument(
            "--strategy",
            type=lambda t: _parse_strategies(t, "--strategy"),
            default=None,
            help="threshold strategy, or a comma-separated list for paired comparison",
        )
        p.add_argument("--alpha", type=float, default=None, help="threshold scale factor")
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--seed", type=int, default=None, help="campaign master seed")
        p.add_argument("--out", default=None, help="output directory")
        p.add_argument("--config", default=None, help="flat key=value config file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    try:
        settings = resolve_settings(args)
        config, strategies = build_experiment(settings)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out_dir = Path(settings["out"])
    os.makedirs(out_dir, exist_ok=True)
    if args.command == "gd":
        return cmd_gd(config, out_dir)
    if args.command == "reconstruct":
        return cmd_reconstruct(config, out_dir)
    return cmd_bench(config, strategies, out_dir)


if __name__ == "__main__":
    raise SystemExit(main())
