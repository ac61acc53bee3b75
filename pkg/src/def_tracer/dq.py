"""Rotating-frame (dq) decomposition of three-phase waveforms.

The transform uses a fixed synchronous reference angle

    theta(t) = 2*pi*f0*(t - t0) + theta0

with no tracking loop, and the amplitude-invariant (2/3-scaled) projection
with the q axis lagging the d axis by 90 degrees:

    d = (2/3) * [a*cos(th) + b*cos(th - 2pi/3) + c*cos(th + 2pi/3)]
    q = (2/3) * [a*sin(th) + b*sin(th - 2pi/3) + c*sin(th + 2pi/3)]

A balanced positive-sequence cosine set of peak amplitude A at exactly f0,
phase-aligned with the reference, maps to d = A, q = 0. A component at
f0 +/- df appears in d and q as a sinusoid at df; see
:func:`dq_channel_amplitudes` for the exact complex amplitudes.

The axis convention fixes the sign of downstream energy-flow slopes, so the
same convention must be used for measured data and for any analytic
ground-truth values compared against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import signal as sps

from .errors import (
    AlignmentError,
    ConfigurationError,
    InsufficientDataError,
    ReferenceEstimationError,
)
from .waveform import SampleSeries, ThreePhaseSignal

_TWO_THIRDS = 2.0 / 3.0
# positive-sequence rotation operator e^{j 2 pi / 3}
_ALPHA = np.exp(2j * np.pi / 3.0)


def wrap_angle(theta: float) -> float:
    """Wrap an angle to [-pi, pi)."""
    return float((theta + np.pi) % (2.0 * np.pi) - np.pi)


@dataclass(frozen=True)
class DqSignal:
    """d/q-axis components under a fixed rotating reference."""

    d: SampleSeries
    q: SampleSeries
    f0: float
    theta0: float

    def __post_init__(self):
        if (
            self.d.fs != self.q.fs
            or self.d.t0 != self.q.t0
            or self.d.n != self.q.n
        ):
            raise AlignmentError("d and q do not share a time base")
        object.__setattr__(self, "theta0", wrap_angle(self.theta0))

    @property
    def fs(self) -> float:
        return self.d.fs

    @property
    def t0(self) -> float:
        return self.d.t0

    @property
    def n(self) -> int:
        return self.d.n


def _reference_angle(n: int, fs: float, f0: float, theta0: float) -> np.ndarray:
    return 2.0 * np.pi * f0 * np.arange(n) / fs + theta0


def park_transform(x: ThreePhaseSignal, f0: float, theta0: float = 0.0) -> DqSignal:
    """Project an abc triple onto the rotating d/q axes."""
    if not f0 > 0:
        raise ConfigurationError(f"reference frequency must be positive, got {f0}")
    th = _reference_angle(x.n, x.fs, f0, theta0)
    a, b, c = (ch.values for ch in x.channels())
    th_b = th - 2.0 * np.pi / 3.0
    th_c = th + 2.0 * np.pi / 3.0
    d = _TWO_THIRDS * (a * np.cos(th) + b * np.cos(th_b) + c * np.cos(th_c))
    q = _TWO_THIRDS * (a * np.sin(th) + b * np.sin(th_b) + c * np.sin(th_c))
    return DqSignal(
        d=x.a.with_values(d),
        q=x.a.with_values(q),
        f0=f0,
        theta0=theta0,
    )


def inverse_park(x: DqSignal) -> ThreePhaseSignal:
    """Rebuild the (zero-sequence-free) abc triple from dq components."""
    th = _reference_angle(x.n, x.fs, x.f0, x.theta0)
    d, q = x.d.values, x.q.values
    out = []
    for shift in (0.0, -2.0 * np.pi / 3.0, 2.0 * np.pi / 3.0):
        out.append(d * np.cos(th + shift) + q * np.sin(th + shift))
    return ThreePhaseSignal(
        a=x.d.with_values(out[0]),
        b=x.d.with_values(out[1]),
        c=x.d.with_values(out[2]),
    )


def dq_channel_amplitudes(
    lower: complex, upper: complex, theta0: float = 0.0
) -> tuple[complex, complex]:
    """dq-channel complex amplitudes produced by a sideband phasor pair.

    ``lower`` and ``upper`` are positive-sequence peak phasors of abc
    components at f0 - df and f0 + df (the lower frequency may be negative,
    which describes a reversed-sequence set at |f0 - df|). The returned
    pair (D, Q) describes the real dq channels of a record starting at the
    reference epoch as d(t) = Re{D e^{j*2pi*df*t}}, q(t) = Re{Q e^{j*2pi*df*t}}.

    With the q-lagging projection the lower sideband maps to the
    counter-clockwise dq rotation and the upper to the clockwise one:

        z(t) = d + jq = conj(lo') e^{+j w t} + conj(up') e^{-j w t}

    with lo' = lower*e^{-j*theta0}, up' = upper*e^{-j*theta0}.
    """
    lo = complex(lower) * complex(np.exp(-1j * theta0))
    up = complex(upper) * complex(np.exp(-1j * theta0))
    ccw = lo.conjugate()   # e^{+j w t} amplitude of z = d + jq
    cw = up.conjugate()    # e^{-j w t} amplitude
    d_amp = ccw + cw.conjugate()
    q_amp = -1j * (ccw - cw.conjugate())
    return (d_amp, q_amp)


def estimate_reference_phase(
    v: ThreePhaseSignal, f0: float, span: float | None = None
) -> float:
    """Phase of the fundamental positive-sequence phasor of ``v``.

    The estimate is a single-bin discrete Fourier projection at exactly f0
    over an integer number of fundamental cycles within ``span`` seconds
    (default: the whole record), so that steady sidebands are orthogonal to
    the estimate. Using the returned value as ``theta0`` makes the
    steady-state q component of ``v`` zero-mean.
    """
    if span is None:
        span = v.duration
    n_cycles = int(math.floor(span * f0))
    if n_cycles < 10:
        raise InsufficientDataError(
            f"reference span {span:.3f}s covers {n_cycles} fundamental cycles; "
            "need at least 10"
        )
    n = int(round(n_cycles * v.fs / f0))
    n = min(n, v.n)
    t_rel = np.arange(n) / v.fs
    rot = np.exp(-2j * np.pi * f0 * t_rel)
    phasors = [2.0 * np.mean(ch.values[:n] * rot) for ch in v.channels()]
    pos_seq = (phasors[0] + _ALPHA * phasors[1] + _ALPHA**2 * phasors[2]) / 3.0
    # residual after removing the fundamental positive-sequence component
    resid_power = 0.0
    for k, ch in enumerate(v.channels()):
        fund = np.real(pos_seq * np.exp(2j * np.pi * f0 * t_rel - 2j * np.pi * k / 3.0))
        resid_power += float(np.mean((ch.values[:n] - fund) ** 2))
    sigma = math.sqrt(resid_power / 3.0) * math.sqrt(2.0 / n)
    if abs(pos_seq) < 8.0 * sigma or abs(pos_seq) < 1e-12:
        raise ReferenceEstimationError(
            "fundamental positive-sequence amplitude "
            f"{abs(pos_seq):.3e} is below the noise floor"
        )
    return wrap_angle(float(np.angle(pos_seq)))


def detrend(x: SampleSeries, mode: str = "mean", fc: float | None = None) -> SampleSeries:
    """Remove the slow trend from a series.

    mode="mean" subtracts the window mean; mode="lowpass" subtracts a
    zero-phase 4th-order Butterworth low-pass trend with cutoff ``fc``.
    """
    if mode == "mean":
        return x.with_values(x.values - float(np.mean(x.values)))
    if mode == "lowpass":
        if fc is None:
            raise ConfigurationError("lowpass detrend requires a cutoff frequency")
        if not 0 < fc < x.fs / 2:
            raise ConfigurationError(
                f"detrend cutoff {fc} Hz outside (0, fs/2) = (0, {x.fs / 2})"
            )
        sos = sps.butter(4, fc, btype="low", fs=x.fs, output="sos")
        trend = sps.sosfiltfilt(sos, x.values)
        return x.with_values(x.values - trend)
    raise ConfigurationError(f"unknown detrend mode {mode!r}")


def park_measurement(
    v: ThreePhaseSignal,
    i: ThreePhaseSignal,
    f0: float,
    theta0: float,
) -> tuple[DqSignal, DqSignal]:
    """Transform a voltage/current pair under one shared reference."""
    return park_transform(v, f0, theta0), park_transform(i, f0, theta0)
