"""Spiral pattern classification on a 16x16 grid.

Each grid point (row, col), both 1-based, is written as two concatenated
5-symbol quaternary codewords.  A network is trained on a random subset of
points and then asked to classify all 256.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable

import numpy as np

from .errors import FormatError
from .network import InputVector, TrainingSample, forward, train
from .quaternary import encode

SIZE = 16
CODE_LENGTH = 5


@dataclass(frozen=True)
class TrainingPlan:
    points: tuple[tuple[int, int], ...]
    seed: int | None = None

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("training plan contains duplicate points")
        for row, col in self.points:
            if not (1 <= row <= SIZE and 1 <= col <= SIZE):
                raise ValueError(f"point ({row}, {col}) outside the grid")

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class ClassificationReport:
    r: int
    predictions: np.ndarray
    classified: int
    misclassified: int


def load_pattern(text: str) -> np.ndarray:
    """Parse 16 lines of 16 ``#``/``.`` characters into a 0/1 grid."""
    lines = [ln.rstrip("\r") for ln in text.strip("\n").split("\n")]
    if len(lines) != SIZE:
        raise FormatError(f"expected {SIZE} lines, got {len(lines)}")
    grid = np.zeros((SIZE, SIZE), dtype=np.int64)
    for i, line in enumerate(lines):
        if len(line) != SIZE:
            raise FormatError(f"expected {SIZE} characters, got {len(line)}", i + 1)
        for j, ch in enumerate(line):
            if ch == "#":
                grid[i, j] = 1
            elif ch != ".":
                raise FormatError(f"unexpected character {ch!r}", i + 1)
    return grid


def bundled_pattern() -> np.ndarray:
    return load_pattern(resources.files("ccc.data").joinpath("spiral.txt").read_text())


def encode_point(row: int, col: int) -> InputVector:
    if not (1 <= row <= SIZE and 1 <= col <= SIZE):
        raise ValueError(f"point ({row}, {col}) outside 1..{SIZE}")
    return encode(row, CODE_LENGTH) + encode(col, CODE_LENGTH)


def sample_training_points(
    grid: np.ndarray, n_black: int = 45, n_white: int = 30, seed: int = 42
) -> TrainingPlan:
    """Draw distinct black and white cells without replacement.

    Black cells come first in the plan, each group in draw order.
    """
    black = [(i + 1, j + 1) for i, j in zip(*np.nonzero(grid == 1))]
    white = [(i + 1, j + 1) for i, j in zip(*np.nonzero(grid == 0))]
    if n_black < 0 or n_white < 0:
        raise ValueError("sample counts must be nonnegative")
    if n_black > len(black) or n_white > len(white):
        raise ValueError(
            f"requested {n_black} black / {n_white} white, grid has "
            f"{len(black)} / {len(white)}"
        )
    rng = np.random.default_rng(seed)
    picks = [black[i] for i in rng.choice(len(black), n_black, replace=False)]
    picks += [white[i] for i in rng.choice(len(white), n_white, replace=False)]
    return TrainingPlan(tuple((int(r), int(c)) for r, c in picks), seed)


def run_experiment(grid: np.ndarray, plan: TrainingPlan, r: int) -> ClassificationReport:
    if not len(plan):
        raise ValueError("training plan is empty")
    samples = [
        TrainingSample(encode_point(row, col), (int(grid[row - 1, col - 1]),))
        for row, col in plan.points
    ]
    net = train(samples, r)
    pred = np.zeros((SIZE, SIZE), dtype=np.int64)
    for i in range(SIZE):
        for j in range(SIZE):
            pred[i, j] = forward(net, encode_point(i + 1, j + 1))[0]
    classified = int(np.sum(pred == grid))
    return ClassificationReport(r, pred, classified, SIZE * SIZE - classified)


def render(grid: np.ndarray) -> str:
    return "\n".join("".join("#" if v else "." for v in row) for row in grid) + "\n"


def render_samples(grid: np.ndarray, plan: TrainingPlan) -> str:
    """Pattern with trained points overlaid: ``+`` black, ``o`` white."""
    rows = [["#" if v else "." for v in row] for row in grid]
    for row, col in plan.points:
        rows[row - 1][col - 1] = "+" if grid[row - 1, col - 1] else "o"
    return "\n".join("".join(r) for r in rows) + "\n"


def sweep(grid: np.ndarray, plan: TrainingPlan, radii: Iterable[int]) -> list[ClassificationReport]:
    return [run_experiment(grid, plan, r) for r in radii]
