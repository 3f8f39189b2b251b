"""Discrete Mackey-Glass series and one-step-ahead prediction with a 3C network.

The series follows

    x(k+1) = x(k) + alpha * x(k-tau) / (1 + x(k-tau)**gamma) - beta * x(k)

started from ``tau + 1`` seed values.  Values are quantized into 16 equal
regions of [-2, 2]; four consecutive region indices, each written as a
5-symbol quaternary codeword, form a 20-symbol network input, and the region
of the next point is the 4-bit binary target.

Positions are 1-based throughout, matching the usual way the experiment is
described (window 1 is points 1..4 predicting point 5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .network import InputVector, Network, TrainingSample, forward, train
from .quaternary import encode

WINDOW = 4
CODE_LENGTH = 5
OUTPUT_BITS = 4


@dataclass(frozen=True)
class SeriesParams:
    alpha: float = 3.0
    beta: float = 1.0005
    gamma: float = 6.0
    tau: int = 3
    seeds: tuple[float, ...] = (1.5, 0.65, -0.5, -0.7)
    length: int = 200

    def __post_init__(self):
        if self.tau < 1:
            raise ValueError(f"tau must be >= 1, got {self.tau}")
        if len(self.seeds) != self.tau + 1:
            raise ValueError(
                f"tau={self.tau} needs {self.tau + 1} seed values, got {len(self.seeds)}"
            )
        if self.length < self.tau + 2:
            raise ValueError(f"length must be >= tau + 2 = {self.tau + 2}")


class Series(Sequence[float]):
    """Real-valued series addressed with 1-based positions via :meth:`at`."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=np.float64)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def at(self, position: int) -> float:
        if not 1 <= position <= len(self.values):
            raise IndexError(f"position {position} outside 1..{len(self.values)}")
        return float(self.values[position - 1])


def generate(params: SeriesParams = SeriesParams()) -> Series:
    x = list(map(float, params.seeds))
    a, b, g, tau = params.alpha, params.beta, params.gamma, params.tau
    # x[k] here is x(k+1) in 1-based terms; same recurrence, evaluated as written
    for k in range(tau, params.length - 1):
        lag = x[k - tau]
        x.append(x[k] + a * lag / (1 + lag**g) - b * x[k])
    return Series(x)


@dataclass(frozen=True)
class Quantizer:
    lo: float = -2.0
    hi: float = 2.0
    bins: int = 16
    width: float = field(init=False)

    def __post_init__(self):
        if self.hi <= self.lo or self.bins < 1:
            raise ValueError("quantizer needs hi > lo and at least one bin")
        object.__setattr__(self, "width", (self.hi - self.lo) / self.bins)

    @property
    def span(self) -> float:
        return self.hi - self.lo


def quantize(q: Quantizer, x: float) -> int:
    """Region index 1..bins; bins are [edge, edge + width), the top one closed."""
    if x >= q.hi:
        return q.bins
    if x < q.lo:
        return 1
    # the subtraction can round across an edge; settle against the edges themselves
    i = min(q.bins - 1, math.floor((x - q.lo) / q.width))
    while i > 0 and x < q.lo + i * q.width:
        i -= 1
    while i < q.bins - 1 and x >= q.lo + (i + 1) * q.width:
        i += 1
    return i + 1


def dequantize(q: Quantizer, index: int) -> float:
    if not 1 <= index <= q.bins:
        raise ValueError(f"region index {index} outside 1..{q.bins}")
    return q.lo + (index - 0.5) * q.width


class Window(NamedTuple):
    inputs: tuple[int, int, int, int]
    target: int
    target_position: int


def build_training_windows(
    series: Sequence[float], count: int = 175, q: Quantizer = Quantizer()
) -> list[Window]:
    """Windows t = 1..count: points t..t+3 in, point t+4 out."""
    if count < 1:
        raise ValueError(f"window count must be >= 1, got {count}")
    if len(series) < count + WINDOW:
        raise ValueError(
            f"{count} windows need {count + WINDOW} points, series has {len(series)}"
        )
    idx = [quantize(q, v) for v in series[: count + WINDOW]]
    return [
        Window(tuple(idx[t : t + WINDOW]), idx[t + WINDOW], t + WINDOW + 1)
        for t in range(count)
    ]


def encode_window(indices: Sequence[int]) -> InputVector:
    return tuple(sym for i in indices for sym in encode(i, CODE_LENGTH))


def encode_target(index: int) -> tuple[int, ...]:
    """4-bit binary of ``index - 1``, most significant bit first."""
    if not 1 <= index <= 2**OUTPUT_BITS:
        raise ValueError(f"region index {index} outside 1..{2**OUTPUT_BITS}")
    v = index - 1
    return tuple((v >> (OUTPUT_BITS - 1 - b)) & 1 for b in range(OUTPUT_BITS))


def decode_output(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        v = (v << 1) | int(b)
    return v + 1


def train_on_windows(windows: Sequence[Window], r: int) -> Network:
    samples = [TrainingSample(encode_window(w.inputs), encode_target(w.target)) for w in windows]
    return train(samples, r)


def predict_region(net: Network, indices: Sequence[int]) -> int:
    return decode_output(forward(net, encode_window(indices)))


def predict(
    net: Network,
    series: Series,
    start: int = 180,
    stop: int = 200,
    q: Quantizer = Quantizer(),
) -> list[tuple[int, float]]:
    """One-step-ahead predictions for positions ``start..stop`` inclusive.

    Each prediction reads the four true series values before it; earlier
    predictions are never fed back.
    """
    if start < WINDOW + 1 or stop > len(series) or start > stop:
        raise ValueError(f"cannot predict positions {start}..{stop} of a {len(series)}-point series")
    out = []
    for p in range(start, stop + 1):
        indices = [quantize(q, series.at(j)) for j in range(p - WINDOW, p)]
        out.append((p, dequantize(q, predict_region(net, indices))))
    return out


def nmse(predicted: Sequence[float], actual: Sequence[float], span: float | None = None) -> float:
    """Normalized mean square error.

    With ``span=None`` the squared error sum is divided by the centered sum of
    squares of ``actual`` (a mean predictor scores 1).  With a ``span`` the
    mean squared error is divided by ``span**2``, i.e. errors are measured as
    fractions of the signal's range.
    """
    p = np.asarray(predicted, dtype=np.float64)
    a = np.asarray(actual, dtype=np.float64)
    if p.shape != a.shape or p.ndim != 1 or len(a) == 0:
        raise ValueError(f"need equal nonempty 1-D inputs, got {p.shape} and {a.shape}")
    sse = float(np.sum((p - a) ** 2))
    if span is not None:
        if span <= 0:
            raise ValueError(f"span must be positive, got {span}")
        return sse / (len(a) * span**2)
    denom = float(np.sum((a - a.mean()) ** 2))
    if denom == 0.0:
        raise ValueError("actual values have zero variance")
    return sse / denom


@dataclass
class MackeyRun:
    r: int
    network: Network
    windows: list[Window]
    predictions: list[tuple[int, float]]
    recall: list[tuple[int, float]]
    nmse: float
    nmse_variance: float


def run_experiment(
    series: Series,
    r: int,
    train_count: int = 175,
    q: Quantizer = Quantizer(),
    stop: int | None = None,
) -> MackeyRun:
    """Train on ``train_count`` windows, then predict from ``train_count + 5`` on.

    ``nmse`` is range-normalized (mean squared error over the squared span);
    ``nmse_variance`` is the variance-normalized form.
    """
    stop = len(series) if stop is None else stop
    windows = build_training_windows(series, train_count, q)
    net = train_on_windows(windows, r)
    preds = predict(net, series, train_count + WINDOW + 1, stop, q)
    recall = [(w.target_position, dequantize(q, predict_region(net, w.inputs))) for w in windows]
    actual = [series.at(p) for p, _ in preds]
    predicted = [v for _, v in preds]
    return MackeyRun(
        r=r,
        network=net,
        windows=windows,
        predictions=preds,
        recall=recall,
        nmse=nmse(predicted, actual, span=q.span),
        nmse_variance=nmse(predicted, actual),
    )
