"""Quaternary codewords over the alphabet {0, 1, i, 1+i}.

A codeword of length ``l`` is a staircase: a run of one character followed
by a run of the next character in the order ``0 -> 1 -> i -> 1+i``.  The
full set of length-``l`` codewords holds ``3l + 1`` members, split into
three groups::

    k = 1 .. l+1       0...0 1...1
    k = l+2 .. 2l+1    1...1 i...i
    k = 2l+2 .. 3l+1   i...i u...u      (u stands for 1+i)

with the newer character filling positions from the right.

Text rendering uses one character per symbol: ``0``, ``1``, ``i``, ``u``.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidCodewordError


class QuatSymbol(Enum):
    """One element of {0, 1, i, 1+i}, stored as (real bit, imaginary bit)."""

    ZERO = (0, 0)
    ONE = (1, 0)
    I = (0, 1)  # noqa: E741
    ONE_I = (1, 1)

    def __init__(self, re_bit: int, im_bit: int):
        # plain attributes: these are read in every hidden-unit evaluation
        self.re_bit = re_bit
        self.im_bit = im_bit

    @property
    def char(self) -> str:
        return _CHARS[self]

    def __complex__(self) -> complex:
        return complex(self.re_bit, self.im_bit)

    def __str__(self) -> str:
        return _PRETTY[self]

    @classmethod
    def from_char(cls, ch: str) -> "QuatSymbol":
        try:
            return _FROM_CHAR[ch]
        except KeyError:
            raise ValueError(f"not a quaternary symbol: {ch!r}") from None

    @classmethod
    def from_bits(cls, re_bit: int, im_bit: int) -> "QuatSymbol":
        return cls((int(re_bit), int(im_bit)))


_CHARS = {
    QuatSymbol.ZERO: "0",
    QuatSymbol.ONE: "1",
    QuatSymbol.I: "i",
    QuatSymbol.ONE_I: "u",
}
_PRETTY = {
    QuatSymbol.ZERO: "0",
    QuatSymbol.ONE: "1",
    QuatSymbol.I: "i",
    QuatSymbol.ONE_I: "1+i",
}
_FROM_CHAR = {v: k for k, v in _CHARS.items()}
# long forms accepted on input as well
_FROM_CHAR["1+i"] = QuatSymbol.ONE_I
_FROM_CHAR["i+1"] = QuatSymbol.ONE_I

Codeword = tuple[QuatSymbol, ...]

# staircase order; group g pairs _ORDER[g] (left run) with _ORDER[g+1] (right run)
_ORDER = (QuatSymbol.ZERO, QuatSymbol.ONE, QuatSymbol.I, QuatSymbol.ONE_I)


def parse_symbols(text: str | Iterable[str]) -> tuple[QuatSymbol, ...]:
    """Parse ``"iu10"``, ``"i u 1 0"`` or ``["i", "1+i"]`` into symbols."""
    if isinstance(text, str):
        tokens = text.split()
        if len(tokens) == 1 and tokens[0] not in _FROM_CHAR:
            tokens = list(tokens[0])
    else:
        tokens = list(text)
    return tuple(QuatSymbol.from_char(t) for t in tokens)


def format_symbols(symbols: Iterable[QuatSymbol], sep: str = "") -> str:
    return sep.join(s.char for s in symbols)


def codeword_length(count: int) -> int:
    """Shortest codeword length able to represent ``count`` integers."""
    if count < 2:
        raise ValueError(f"need at least 2 integers to encode, got {count}")
    return math.ceil((count - 1) / 3)


def codeword_count(length: int) -> int:
    """Number of distinct codewords of the given length, ``3l + 1``."""
    return 3 * length + 1


def encode(k: int, length: int) -> Codeword:
    """Return the ``k``-th (1-based) codeword of the given length."""
    if length < 1:
        raise ValueError(f"codeword length must be >= 1, got {length}")
    if not 1 <= k <= codeword_count(length):
        raise ValueError(f"index {k} outside 1..{codeword_count(length)}")
    group = 0 if k <= length + 1 else (1 if k <= 2 * length + 1 else 2)
    right = k - 1 - group * length
    left = length - right
    return (_ORDER[group],) * left + (_ORDER[group + 1],) * right


def decode(codeword: Sequence[QuatSymbol]) -> int:
    """Inverse of :func:`encode`; rejects anything that is not a staircase."""
    word = tuple(codeword)
    length = len(word)
    if length == 0:
        raise InvalidCodewordError("empty codeword")
    if QuatSymbol.ONE_I in word:
        k = 2 * length + 1 + word.count(QuatSymbol.ONE_I)
    elif QuatSymbol.I in word:
        k = length + 1 + word.count(QuatSymbol.I)
    else:
        k = 1 + word.count(QuatSymbol.ONE)
    if encode(k, length) != word:
        raise InvalidCodewordError(
            f"not a staircase codeword: {format_symbols(word)}"
        )
    return k


def codeword_table(count: int) -> list[Codeword]:
    """The first ``count`` codewords at the minimal length for ``count``."""
    length = codeword_length(count)
    return [encode(k, length) for k in range(1, count + 1)]
