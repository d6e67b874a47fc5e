"""Least-squares fit of y = lambda * log x + kappa to step-function data."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass

import numpy as np

from .exact import DomainError

DENSE = "dense"
JUMPS = "jumps"


@dataclass
class FitResult:
    lam: float
    kappa: float
    rms: float
    samples: int
    convention: str
    x_range: tuple

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        d["x_range"] = list(self.x_range)
        return d


def read_step_csv(text: str) -> list[tuple[int, int]]:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and r[0].strip()]
    return [(int(a), int(b)) for a, b in rows]


def write_step_csv(points) -> str:
    return "".join(f"{x},{y}\n" for x, y in points)


def step_samples(points, convention: str = DENSE):
    """Sample the right-continuous step function given by its (x, count)
    breakpoints. ``dense`` takes every integer x from the first positive
    count to the last x; ``jumps`` takes the breakpoints themselves."""
    pts = sorted(points)
    pos = [i for i, (_, y) in enumerate(pts) if y > 0]
    if not pos:
        raise DomainError("step data never leaves zero")
    pts = pts[pos[0]:]
    if convention == JUMPS:
        xs = np.array([x for x, _ in pts], dtype=np.float64)
        ys = np.array([y for _, y in pts], dtype=np.float64)
        return xs, ys
    if convention != DENSE:
        raise DomainError(f"unknown sampling convention {convention!r}")
    x0, x1 = pts[0][0], pts[-1][0]
    xs = np.arange(x0, x1 + 1, dtype=np.int64)
    bx = np.array([x for x, _ in pts], dtype=np.int64)
    by = np.array([y for _, y in pts], dtype=np.float64)
    ys = by[np.searchsorted(bx, xs, side="right") - 1]
    return xs.astype(np.float64), ys


def fit_log(xs, ys, convention: str = DENSE) -> FitResult:
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if len(xs) < 3 or np.any(xs <= 1):
        raise DomainError("need at least 3 samples with x > 1")
    A = np.column_stack([np.log(xs), np.ones_like(xs)])
    coef, _, rank, _ = np.linalg.lstsq(A, ys, rcond=None)
    if rank < 2:
        raise DomainError("degenerate design matrix (all x equal)")
    resid = ys - A @ coef
    rms = math.sqrt(float(np.mean(resid**2)))
    return FitResult(float(coef[0]), float(coef[1]), rms, len(xs), convention,
                     (float(xs.min()), float(xs.max())))


def fit_steps(points, convention: str = DENSE) -> FitResult:
    xs, ys = step_samples(points, convention)
    return fit_log(xs, ys, convention)
