"""Audio sample streams: generators, filters, and a WAV writer.

A sound here is just an infinite stream of float64 samples, nominally in
[-1, 1]; every generator and filter below is a direct transcription of its
defining recurrence into a self-referential stream. Quantization happens
only when writing a file.

The noise source is fully bit-specified (splitmix64) so that renders are
reproducible across platforms and golden-file tests are portable.
"""

from __future__ import annotations

import math
import os
import struct
import tempfile
from typing import Sequence

from .stream import Stream, cons, defer, delay, prepend, scale, zip_with

__all__ = [
    "sine",
    "euler_osc",
    "vibrato",
    "karplus_strong",
    "allpass",
    "noise",
    "write_wav",
]


def sine(h: float) -> Stream:
    """Sinusoid from the two-tap recurrence; sample n is sin((n+1)*h).

    Uses sin(n h) = 2 cos(h) sin((n-1)h) - sin((n-2)h), seeded by its own
    prefix: the stream appears both one and two taps delayed on the right
    hand side.
    """
    k = 2.0 * math.cos(h)
    y = cons(math.sin(h),
             lambda: scale(k, y) - cons(0.0, lambda: y))
    return y


def euler_osc(h: float) -> Stream:
    """Unit-frequency oscillator by the semi-implicit Euler step ``h``.

    y_{n+1} = y_n + h v_n and v_{n+1} = v_n - h y_{n+1}; the scheme is
    stable for small h and the step controls the output frequency.
    """
    y = cons(0.0, lambda: w)
    w = defer(lambda: y + scale(h, u))
    u = cons(1.0, lambda: u - scale(h, w))
    return y


def vibrato(h: float, mod: Stream) -> Stream:
    """Euler oscillator with both couplings weighted elementwise by ``mod``.

    A slowly varying ``mod`` near 1 wobbles the instantaneous frequency;
    the constant stream 1 reproduces :func:`euler_osc` exactly.
    """
    y = cons(0.0, lambda: w)
    w = defer(lambda: y + scale(h, zip_with(lambda m, a: m * a, mod, u)))
    u = cons(1.0, lambda: u - scale(h, zip_with(lambda m, a: m * a, mod, w)))
    return y


def karplus_strong(length: int, excitation: Sequence[float],
                   blend: float = 0.5) -> Stream:
    """Plucked string: a delay line fed back through a two-tap average.

    The excitation (length ``length``) is the initial content of the delay
    line; after it, sample L+n is blend * (y_n + y_{n-1}), which damps the
    high frequencies a little on every pass and leaves a tone at roughly
    rate / (length + 1/2).
    """
    if length < 2:
        raise ValueError("karplus_strong: length must be >= 2")
    excitation = list(excitation)
    if len(excitation) != length:
        raise ValueError("karplus_strong: excitation must have exactly "
                         "'length' samples")
    y = defer(lambda: prepend(
        excitation,
        scale(blend, y + cons(0.0, lambda: y)),
    ))
    return y


def allpass(m: int, b: float, x: Stream) -> Stream:
    """First-order all-pass section with delay ``m``: unit gain, phase only.

    v = x - b * delay(v); y = b * v + delay(v). Productive because the
    delayed branch starts with m known zeros.
    """
    if m < 1:
        raise ValueError("allpass: m must be >= 1")
    if not abs(b) < 1:
        raise ValueError("allpass: |b| must be < 1 for stability")
    v = defer(lambda: x - scale(b, d))
    d = delay(m, v, 0.0)
    return scale(b, v) + d


_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def noise(seed: int) -> Stream:
    """Deterministic white noise in [-1, 1) from a splitmix64 generator.

    The top 53 output bits become a float in [0, 1), mapped affinely to
    [-1, 1). Same seed, same samples, on every platform.
    """
    def step(state: int) -> Stream:
        state = (state + _GAMMA) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        z ^= z >> 31
        sample = (z >> 11) * 2.0 ** -53 * 2.0 - 1.0
        return cons(sample, lambda: step(state))

    return defer(lambda: step(seed & _MASK64))


def write_wav(path: str, rate: int, s: Stream, seconds: float) -> str:
    """Render ``floor(rate * seconds)`` samples as a 16-bit mono PCM WAV.

    Samples are clamped to [-1, 1], scaled by 32767 and rounded to the
    nearest integer. The file is written to a temporary name in the target
    directory and renamed into place, so a failure never leaves a partial
    file at ``path``.
    """
    if rate <= 0:
        raise ValueError("write_wav: rate must be > 0")
    if seconds <= 0:
        raise ValueError("write_wav: seconds must be > 0")
    frames = int(rate * seconds)
    samples = s.take(frames)
    quantized = bytearray()
    for x in samples:
        x = 1.0 if x > 1.0 else (-1.0 if x < -1.0 else x)
        quantized += struct.pack("<h", int(round(x * 32767.0)))

    data_size = len(quantized)
    header = b"RIFF" + struct.pack("<I", 36 + data_size) + b"WAVE"
    header += b"fmt " + struct.pack("<IHHIIHH", 16, 1, 1, rate,
                                    rate * 2, 2, 16)
    header += b"data" + struct.pack("<I", data_size)

    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".wav.part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(header)
            fh.write(quantized)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    return path
