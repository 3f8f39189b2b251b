"""Instantaneously trained 3C networks for inputs over {0, 1, i, 1+i}."""

from .errors import DimensionError, FormatError, InvalidCodewordError
from .network import (
    ComplexWeight,
    HiddenUnit,
    Network,
    TrainingSample,
    as_vector,
    assign_hidden,
    bit_expansion,
    forward,
    hamming_oracle,
    parse_samples,
    pre_activation,
    s_value,
    step,
    train,
)
from .quaternary import QuatSymbol, codeword_length, decode, encode, parse_symbols

__all__ = [
    "ComplexWeight",
    "DimensionError",
    "FormatError",
    "HiddenUnit",
    "InvalidCodewordError",
    "Network",
    "QuatSymbol",
    "TrainingSample",
    "as_vector",
    "assign_hidden",
    "bit_expansion",
    "codeword_length",
    "decode",
    "encode",
    "forward",
    "hamming_oracle",
    "parse_samples",
    "parse_symbols",
    "pre_activation",
    "s_value",
    "step",
    "train",
]
