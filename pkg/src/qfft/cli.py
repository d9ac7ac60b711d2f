"""Command-line front end.

Subcommands map to the experiment families: ``fft`` runs one (optionally
quantized) transform and emits the output vector, ``sweep`` runs a
bit-resolution sweep of the quantized pipeline against the ideal
reference, ``quantizer`` characterizes a bare quantizer by Monte-Carlo,
and ``selftest`` runs the built-in consistency checks. All randomness
flows from a single seed; flags override config-file values.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import analysis, core, report
from .config import ConfigError, ExperimentConfig, parse_config
from .pipeline import Pipeline, PipelineConfig, processing_cost
from .quantization import (
    QuantizerSpec,
    quantize_mantissa,
    quantize_uniform,
    relative_error,
    theory_variance_mantissa,
    theory_variance_uniform,
)
from .signals import generate_signal


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfft",
        description="Statically quantized radix-2 FFT/IFFT pipeline simulator and noise analysis tool",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_output=True):
        p.add_argument("--config", metavar="PATH", help="JSON configuration document")
        p.add_argument("--seed", type=int, metavar="U64", help="override the config seed")
        if with_output:
            p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
            p.add_argument("--format", choices=("csv", "json"), help="report format")

    p_fft = sub.add_parser("fft", help="run one transform and emit the output vector")
    add_common(p_fft)
    p_sweep = sub.add_parser("sweep", help="bit-resolution sweep against the ideal reference")
    add_common(p_sweep)
    p_quant = sub.add_parser("quantizer", help="pure quantizer Monte-Carlo characterization")
    add_common(p_quant)
    p_quant.add_argument(
        "--samples", type=int, default=1_000_000, help="Monte-Carlo sample count (default 1e6)"
    )
    p_self = sub.add_parser("selftest", help="run built-in consistency checks")
    add_common(p_self, with_output=False)
    return parser


def _load_config(args) -> ExperimentConfig:
    text = "{}"
    if args.config is not None:
        with open(args.config) as handle:
            text = handle.read()
    cfg = parse_config(text)
    overrides = {}
    if args.seed is not None:
        if args.seed < 0:
            raise ConfigError(f"seed: must be nonnegative, got {args.seed}")
        overrides["seed"] = args.seed
    if getattr(args, "out", None) is not None:
        overrides["out"] = args.out
    if getattr(args, "format", None) is not None:
        overrides["format"] = args.format
    if overrides:
        cfg = ExperimentConfig(**{**cfg.__dict__, **overrides})
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as handle:
            handle.write(text)


def _header_config(cfg: ExperimentConfig) -> dict:
    # the report must not depend on where it is written
    doc = cfg.to_dict()
    doc.pop("out", None)
    return doc


def _cmd_fft(cfg: ExperimentConfig) -> int:
    pipeline_cfg = cfg.pipeline_config()
    pipeline = Pipeline(pipeline_cfg)
    x = generate_signal(cfg.signal_spec(), cfg.seed)
    trace = pipeline.run(x)
    if not np.all(np.isfinite(trace.output.view(np.float64))):
        print("error: transform produced non-finite values", file=sys.stderr)
        return 1

    header = _header_config(cfg)
    if cfg.format == "csv":
        lines = ["# config: " + json.dumps(header, sort_keys=True), f"# seed: {cfg.seed}"]
        lines += [f"# note: {n}" for n in report.STANDARD_NOTES]
        lines.append(f"# saturation_total: {trace.saturation_total}")
        lines.append("index,real,imag")
        for i, v in enumerate(trace.output):
            lines.append(f"{i},{v.real:.12e},{v.imag:.12e}")
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "config": header,
            "notes": list(report.STANDARD_NOTES),
            "saturation_total": trace.saturation_total,
            "output": [
                {"index": i, "real": float(v.real), "imag": float(v.imag)}
                for i, v in enumerate(trace.output)
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    _emit(text, cfg.out)
    return 0


def _check_sweep_rows(rows) -> None:
    for row in rows:
        if not row.percent_error >= 0:
            raise RuntimeError(f"row {row.bits}: negative percent error")
        if not 0.0 <= row.saturation_rate <= 1.0:
            raise RuntimeError(f"row {row.bits}: saturation rate outside [0, 1]")
        if row.error_variance > 0 and not math.isclose(
            row.error_std**2, row.error_variance, rel_tol=1e-12
        ):
            raise RuntimeError(f"row {row.bits}: std/variance mismatch")


def _cmd_sweep(cfg: ExperimentConfig) -> int:
    rows = analysis.run_sweep(cfg.sweep_spec())
    _check_sweep_rows(rows)
    text = report.emit_report(
        rows, format=cfg.format, config=_header_config(cfg), notes=report.STANDARD_NOTES
    )
    _emit(text, cfg.out)
    return 0


def _cmd_quantizer(cfg: ExperimentConfig, samples: int) -> int:
    mode = cfg.quantizer_mode if cfg.quantizer_mode != "off" else "uniform"
    rows = analysis.quantizer_characterization(
        mode,
        cfg.bits_lo,
        cfg.bits_hi,
        samples,
        seed=cfg.seed,
        x_max=cfg.quantizer_x_max if cfg.quantizer_x_max is not None else 1.0,
    )
    text = report.emit_characterization(
        rows, format=cfg.format, config=_header_config(cfg), notes=report.STANDARD_NOTES
    )
    _emit(text, cfg.out)
    return 0


def _selftest_checks(seed: int):
    rng = np.random.default_rng(seed)
    # oracle equivalence of the staged transform
    for n in (2, 8, 64, 256):
        x = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
        worst = np.max(np.abs(core.fft_reference(x) - core.dft_naive(x)))
        yield f"oracle equivalence n={n}", worst < 1e-9 * n, f"max abs error {worst:.3e}"
    # round trip and energy conservation
    x = rng.uniform(-1, 1, 256) + 1j * rng.uniform(-1, 1, 256)
    spectrum = core.fft_reference(x)
    worst = np.max(np.abs(core.fft_reference(spectrum, "inverse") - x))
    yield "round trip n=256", worst < 1e-12 * 256, f"max abs error {worst:.3e}"
    energy_in = float(np.sum(np.abs(x) ** 2))
    energy_out = float(np.sum(np.abs(spectrum) ** 2)) / 256
    rel = abs(energy_in - energy_out) / energy_in
    yield "energy conservation n=256", rel < 1e-10, f"relative discrepancy {rel:.3e}"
    # instrumented counters
    for n in (2, 8, 256):
        pipeline = Pipeline(PipelineConfig(n=n))
        trace = pipeline.run(rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))
        ok = (trace.multiplies, trace.additions) == processing_cost(n)
        yield f"operation counters n={n}", ok, f"({trace.multiplies}, {trace.additions})"
    # quantizer bypass is bit-exact
    x = rng.uniform(-1, 1, 64) + 1j * rng.uniform(-1, 1, 64)
    trace = Pipeline(PipelineConfig(n=64)).run(x)
    ok = trace.output.tobytes() == core.fft_reference(x).tobytes()
    yield "quantizer bypass bit-exact n=64", ok, ""
    # Monte-Carlo vs closed forms
    spec = QuantizerSpec("uniform", 8, 1.0)
    x = rng.uniform(-1, 1, 200_000)
    var = float((x - quantize_uniform(x, spec)).var())
    theory = theory_variance_uniform(spec)
    yield (
        "uniform quantizer variance b=8",
        abs(var - theory) / theory < 0.05,
        f"empirical {var:.6e} vs theory {theory:.6e}",
    )
    spec = QuantizerSpec("mantissa", 6)
    mant = rng.uniform(0.5, 1.0, 200_000)
    err = relative_error(mant, quantize_mantissa(mant, spec))
    var = float(err.var())
    theory = theory_variance_mantissa(spec)
    yield (
        "mantissa quantizer variance b=6",
        abs(var - theory) / theory < 0.05,
        f"empirical {var:.6e} vs theory {theory:.6e}",
    )


def _cmd_selftest(seed: int) -> int:
    failures = 0
    for name, ok, detail in _selftest_checks(seed):
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"selftest {name}: {status}{suffix}")
        failures += 0 if ok else 1
    print(f"selftest: {'all checks passed' if failures == 0 else f'{failures} check(s) failed'}")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _load_config(args)
        if args.command == "selftest":
            return _cmd_selftest(cfg.seed)
        if args.command == "fft":
            return _cmd_fft(cfg)
        if args.command == "sweep":
            return _cmd_sweep(cfg)
        return _cmd_quantizer(cfg, args.samples)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
