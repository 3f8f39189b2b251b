"""The 3C (complex corner classification) network.

Training is prescriptive: every weight is read straight off the training
samples, one hidden neuron per sample, with no iteration.  For a stored
vector ``v`` and radius ``r`` the hidden neuron gets

* a complex weight per symbol whose real and imaginary parts are ``+1``
  where the corresponding bit of ``v`` is set and ``-1`` where it is not,
* a bias weight ``r - s + 1`` on the constant bias input, where ``s`` is the
  number of set bits of ``v`` (1s and i's count once, 1+i twice).

A probe ``x`` is combined with a weight by ``Re(x)Re(w) + Im(x)Im(w)``, so
hidden inputs are always integers and equal ``r + 1 - d_H(x, v)`` with
``d_H`` the Hamming distance between the real/imaginary bit expansions.  A
hidden neuron therefore fires exactly when the probe lies within ``r`` bits
of its stored vector.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, FormatError
from .quaternary import QuatSymbol, format_symbols, parse_symbols

InputVector = tuple[QuatSymbol, ...]


class ComplexWeight(NamedTuple):
    re: int
    im: int

    def __str__(self) -> str:
        re = "1" if self.re > 0 else "-1"
        return f"{re}{'+' if self.im > 0 else '-'}i"


class TrainingSample(NamedTuple):
    input: InputVector
    targets: tuple[int, ...]


@dataclass(frozen=True)
class HiddenUnit:
    weights: tuple[ComplexWeight, ...]
    s: int
    bias_weight: int

    @property
    def d(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class Network:
    """A trained network; immutable once built.

    ``output_weights[m][j]`` is +1 when sample ``m`` has target bit ``j`` set
    and -1 otherwise.
    """

    d: int
    k: int
    r: int
    hidden: tuple[HiddenUnit, ...]
    output_weights: tuple[tuple[int, ...], ...]

    @cached_property
    def _re_w(self) -> np.ndarray:
        return np.array([[w.re for w in h.weights] for h in self.hidden], dtype=np.int64)

    @cached_property
    def _im_w(self) -> np.ndarray:
        return np.array([[w.im for w in h.weights] for h in self.hidden], dtype=np.int64)

    @cached_property
    def _bias(self) -> np.ndarray:
        return np.array([h.bias_weight for h in self.hidden], dtype=np.int64)

    @cached_property
    def _out_w(self) -> np.ndarray:
        return np.array(self.output_weights, dtype=np.int64)

    def hidden_inputs(self, x: Sequence[QuatSymbol]) -> np.ndarray:
        """Integer input to every hidden neuron for probe ``x``."""
        re, im = _bits(x, self.d)
        return self._re_w @ re + self._im_w @ im + self._bias

    def hidden_outputs(self, x: Sequence[QuatSymbol]) -> np.ndarray:
        return (self.hidden_inputs(x) > 0).astype(np.int64)

    def output_sums(self, x: Sequence[QuatSymbol]) -> np.ndarray:
        return self.hidden_outputs(x) @ self._out_w

    def forward_bits(self, re: np.ndarray, im: np.ndarray) -> np.ndarray:
        """Batch inference on bit arrays of shape (n, d); returns (n, k) bits."""
        re = np.atleast_2d(re)
        im = np.atleast_2d(im)
        if re.shape != im.shape or re.shape[1] != self.d:
            raise DimensionError(f"bit arrays of shape {re.shape}/{im.shape}, need (n, {self.d})")
        pre = re @ self._re_w.T + im @ self._im_w.T + self._bias
        return (((pre > 0).astype(np.int64) @ self._out_w) > 0).astype(np.int64)

    def __call__(self, x: Sequence[QuatSymbol]) -> tuple[int, ...]:
        return forward(self, x)


def _bits(x: Sequence[QuatSymbol], d: int) -> tuple[np.ndarray, np.ndarray]:
    if len(x) != d:
        raise DimensionError(f"input has {len(x)} symbols, network expects {d}")
    re = np.fromiter((s.re_bit for s in x), dtype=np.int64, count=d)
    im = np.fromiter((s.im_bit for s in x), dtype=np.int64, count=d)
    return re, im


def s_value(v: Iterable[QuatSymbol]) -> int:
    """Number of 1s plus number of i's plus twice the number of 1+i's."""
    return sum(sym.re_bit + sym.im_bit for sym in v)


def assign_hidden(sample: TrainingSample | Sequence[QuatSymbol], r: int) -> HiddenUnit:
    v = sample.input if isinstance(sample, TrainingSample) else tuple(sample)
    weights = tuple(ComplexWeight(2 * sym.re_bit - 1, 2 * sym.im_bit - 1) for sym in v)
    s = s_value(v)
    return HiddenUnit(weights=weights, s=s, bias_weight=r - s + 1)


def pre_activation(x: Sequence[QuatSymbol], h: HiddenUnit) -> int:
    if len(x) != h.d:
        raise DimensionError(f"input has {len(x)} symbols, unit expects {h.d}")
    total = sum(sym.re_bit * w.re + sym.im_bit * w.im for sym, w in zip(x, h.weights))
    return total + h.bias_weight


def step(z) -> int:
    return 1 if z > 0 else 0


def train(samples: Sequence[TrainingSample], r: int = 0) -> Network:
    """Build a network storing ``samples`` with radius of generalization ``r``.

    Duplicate inputs are kept as separate hidden neurons; at inference their
    output votes simply add up.
    """
    samples = [s if isinstance(s, TrainingSample) else TrainingSample(*s) for s in samples]
    if not samples:
        raise ValueError("cannot train on an empty sample set")
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    d = len(samples[0].input)
    k = len(samples[0].targets)
    if d < 1 or k < 1:
        raise DimensionError("samples need at least one input symbol and one target")
    for m, smp in enumerate(samples, 1):
        if len(smp.input) != d or len(smp.targets) != k:
            raise DimensionError(
                f"sample {m} has shape ({len(smp.input)}, {len(smp.targets)}), expected ({d}, {k})"
            )
        if any(t not in (0, 1) for t in smp.targets):
            raise ValueError(f"sample {m} has non-binary targets {smp.targets}")
    hidden = tuple(assign_hidden(smp, r) for smp in samples)
    output_weights = tuple(tuple(1 if t else -1 for t in smp.targets) for smp in samples)
    return Network(d=d, k=k, r=r, hidden=hidden, output_weights=output_weights)


def forward(net: Network, x: Sequence[QuatSymbol]) -> tuple[int, ...]:
    sums = net.output_sums(x)
    return tuple(int(v > 0) for v in sums)


def bit_arrays(vectors: Sequence[Sequence[QuatSymbol]]) -> tuple[np.ndarray, np.ndarray]:
    """Real and imaginary bit matrices, one row per vector."""
    pairs = np.array([[sym.value for sym in v] for v in vectors], dtype=np.int64)
    return pairs[..., 0], pairs[..., 1]


def bit_expansion(v: Iterable[QuatSymbol]) -> tuple[int, ...]:
    return tuple(b for sym in v for b in (sym.re_bit, sym.im_bit))


def hamming_oracle(x: Sequence[QuatSymbol], v: Sequence[QuatSymbol]) -> int:
    """Hamming distance between the bit expansions of two symbol vectors."""
    if len(x) != len(v):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(v)}")
    return sum(a != b for a, b in zip(bit_expansion(x), bit_expansion(v)))


# -- training-sample text format -------------------------------------------
#
#   <d symbols separated by spaces> -> <k bits separated by spaces>
#
# Symbols come from {0, 1, i, u}; '#' starts a comment line.  Evaluation files
# use the same format, and the "-> bits" part is optional there.


def parse_samples(text: str, require_targets: bool = True) -> list[TrainingSample]:
    samples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" in line:
            lhs, rhs = line.split("->", 1)
            try:
                targets = tuple(int(t) for t in rhs.split())
            except ValueError:
                raise FormatError(f"bad target bits {rhs.strip()!r}", lineno) from None
            if not targets or any(t not in (0, 1) for t in targets):
                raise FormatError(f"targets must be bits, got {rhs.strip()!r}", lineno)
        elif require_targets:
            raise FormatError("missing '->' and target bits", lineno)
        else:
            lhs, targets = line, ()
        try:
            symbols = tuple(QuatSymbol.from_char(t) for t in lhs.split())
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if not symbols:
            raise FormatError("no input symbols", lineno)
        if samples and (
            len(symbols) != len(samples[0].input)
            or (targets and samples[0].targets and len(targets) != len(samples[0].targets))
        ):
            raise FormatError("inconsistent vector length", lineno)
        samples.append(TrainingSample(symbols, targets))
    return samples


def format_sample(sample: TrainingSample) -> str:
    lhs = format_symbols(sample.input, sep=" ")
    if not sample.targets:
        return lhs
    return f"{lhs} -> {' '.join(map(str, sample.targets))}"


def as_vector(v: str | Iterable) -> InputVector:
    """Coerce a string or iterable of symbols/characters to an input vector."""
    if isinstance(v, str):
        return parse_symbols(v)
    items = tuple(v)
    if all(isinstance(s, QuatSymbol) for s in items):
        return items
    return parse_symbols([str(s) for s in items])
