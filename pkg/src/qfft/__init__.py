"""Bit-accurate model of a statically quantized radix-2 FFT/IFFT pipeline.

Library layout: ``core`` holds the full-precision transforms and the
direct-summation DFT oracle, ``quantization`` the uniform and mantissa
quantizer models with their closed-form noise statistics, ``pipeline``
the staged quantized processor, ``analysis`` the sweep/characterization
experiment engine, and ``signals``/``config``/``report``/``cli`` the
experiment plumbing.
"""

from .analysis import (
    CharacterizationRow,
    ErrorReport,
    SweepSpec,
    compare,
    quantizer_characterization,
    run_sweep,
)
from .config import ConfigError, ExperimentConfig, parse_config, serialize_config
from .core import (
    bit_reverse_permute,
    butterfly,
    dft_naive,
    fft_reference,
    twiddle_table,
)
from .pipeline import (
    Pipeline,
    PipelineConfig,
    RunTrace,
    build_pipeline,
    mantissa_stage_specs,
    processing_cost,
    run,
    uniform_stage_specs,
)
from .quantization import (
    OFF,
    QuantizationStats,
    QuantizerSpec,
    apply_quantizer,
    combine_stats,
    empirical_stats,
    quantization_error,
    quantize_mantissa,
    quantize_uniform,
    relative_error,
    snr_db,
    theory_variance_mantissa,
    theory_variance_uniform,
)
from .report import emit_characterization, emit_report
from .signals import SignalSpec, generate_signal, magnitude_bound

__version__ = "0.1.0"

__all__ = [
    "CharacterizationRow",
    "ConfigError",
    "ErrorReport",
    "ExperimentConfig",
    "OFF",
    "Pipeline",
    "PipelineConfig",
    "QuantizationStats",
    "QuantizerSpec",
    "RunTrace",
    "SignalSpec",
    "SweepSpec",
    "apply_quantizer",
    "bit_reverse_permute",
    "build_pipeline",
    "butterfly",
    "combine_stats",
    "compare",
    "dft_naive",
    "emit_characterization",
    "emit_report",
    "empirical_stats",
    "fft_reference",
    "generate_signal",
    "magnitude_bound",
    "mantissa_stage_specs",
    "parse_config",
    "processing_cost",
    "quantization_error",
    "quantize_mantissa",
    "quantize_uniform",
    "quantizer_characterization",
    "relative_error",
    "run",
    "run_sweep",
    "serialize_config",
    "snr_db",
    "theory_variance_mantissa",
    "theory_variance_uniform",
    "twiddle_table",
    "uniform_stage_specs",
]
