#!/usr/bin/env python3
"""The two quantizer models and their noise statistics.

Shows the mid-tread staircase (zero band, clamping), the mantissa
quantizer's relative-error behavior, and Monte-Carlo variance against
the closed forms q^2/12 (uniform) and q^2/6 (mantissa relative error).
Note the factor two between them at equal step: the mantissa variance is
twice the uniform one, with the payoff that the error scales with the
signal instead of the full scale.
"""

import numpy as np

from qfft import (
    QuantizerSpec,
    empirical_stats,
    quantize_mantissa,
    quantize_uniform,
    relative_error,
    snr_db,
    theory_variance_mantissa,
    theory_variance_uniform,
)

rng = np.random.default_rng(2)

print("== mid-tread staircase, 2 bits on [-1, 1] (q = 0.5) ==")
spec = QuantizerSpec("uniform", 2, 1.0)
for x in (0.2, 0.25, 0.3, 0.74, 0.76, 5.0):
    print(f"  Q({x:5.2f}) = {quantize_uniform(x, spec):5.2f}")
print("  inputs inside +-q/2 collapse to the zero level; |x| > x_max clamps")

print("\n== mantissa quantizer, 3 bits on the fraction ==")
mspec = QuantizerSpec("mantissa", 3)
for x in (0.5, 0.6875, 1.0, 3.14159, 100.0):
    qx = quantize_mantissa(x, mspec)
    print(f"  Q({x:9.5f}) = {qx:9.5f}   relative error {relative_error(x, qx):+.5f}")
print("  powers of two pass through untouched; the error is relative, not absolute")

print("\n== Monte-Carlo vs closed form ==")
samples = 500_000
for bits in (4, 6, 8, 10):
    spec = QuantizerSpec("uniform", bits, 1.0)
    x = rng.uniform(-1, 1, samples)
    stats = empirical_stats(x - quantize_uniform(x, spec))
    theory = theory_variance_uniform(spec)
    print(
        f"  uniform  b={bits:2d}: measured {stats.error_variance:.3e}  "
        f"q^2/12 = {theory:.3e}  mean {stats.error_mean:+.2e}"
    )
for bits in (4, 6, 8, 10):
    spec = QuantizerSpec("mantissa", bits)
    mant = rng.uniform(0.5, 1.0, samples)
    eps = relative_error(mant, quantize_mantissa(mant, spec))
    stats = empirical_stats(eps)
    theory = theory_variance_mantissa(spec)
    print(
        f"  mantissa b={bits:2d}: measured {stats.error_variance:.3e}  "
        f"q^2/6  = {theory:.3e}  mean {stats.error_mean:+.2e}"
    )

print("\n== the quantization noise budget in dB ==")
for bits in (8, 12, 16):
    noise = theory_variance_uniform(QuantizerSpec("uniform", bits, 1.0))
    print(f"  unit-variance signal, {bits}-bit uniform: SNR = {snr_db(1.0, noise):.2f} dB")
