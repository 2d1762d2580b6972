"""Erasure-channel simulation: send frame coefficients, lose some, recover v."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .framecore import FrameMatrix, _as_array

__all__ = [
    "ErasurePattern",
    "InsufficientSurvivors",
    "SingularSurvivorSet",
    "Reconstruction",
    "TrialReport",
    "transmit",
    "reconstruct",
    "erasure_trial",
]

log = logging.getLogger(__name__)

# relative smallest-singular-value threshold for declaring survivors dependent
INDEPENDENCE_TOL = 1e-10


class InsufficientSurvivors(ValueError):
    pass


class SingularSurvivorSet(ValueError):
    pass


@dataclass(frozen=True)
class ErasurePattern:
    erased: tuple[int, ...]

    def __init__(self, erased: Sequence[int] = (), count: int | None = None):
        e = tuple(sorted({int(i) for i in erased}))
        if e and e[0] < 0:
            raise ValueError("erased indices must be non-negative")
        if count is not None and e and e[-1] >= count:
            raise ValueError(f"erased index {e[-1]} out of range for {count} coefficients")
        object.__setattr__(self, "erased", e)

    def __len__(self) -> int:
        return len(self.erased)


def transmit(frame, v, pattern: ErasurePattern) -> list[tuple[int, complex]]:
    """Coefficients (k, <v, v_k>) for every k not erased."""
    arr = _as_array(frame)
    v = np.asarray(v, dtype=complex)
    if v.shape != (arr.shape[0],):
        raise ValueError(f"vector has shape {v.shape}, frame dimension is {arr.shape[0]}")
    coeffs = arr.conj().T @ v
    lost = set(pattern.erased)
    return [(k, complex(coeffs[k])) for k in range(arr.shape[1]) if k not in lost]


@dataclass(frozen=True)
class Reconstruction:
    vector: np.ndarray
    used: tuple[int, ...]
    residual: float
    condition: float


def _independent_prefix(arr: np.ndarray, indices: list[int], d: int) -> list[int]:
    chosen: list[int] = []
    for k in indices:
        trial = chosen + [k]
        cols = arr[:, trial]
        cols = cols / np.linalg.norm(cols, axis=0)
        s = np.linalg.svd(cols, compute_uv=False)
        if s[-1] > INDEPENDENCE_TOL * s[0]:
            chosen = trial
            if len(chosen) == d:
                break
    return chosen


def reconstruct(frame, survivors: Sequence[tuple[int, complex]]) -> Reconstruction:
    """Recover v from the first d linearly independent surviving coefficients.

    The d x d system V_S^* v = c_S is solved by LU with partial pivoting.
    """
    arr = _as_array(frame)
    d = arr.shape[0]
    surv = sorted((int(k), complex(c)) for k, c in survivors)
    if len(surv) < d:
        raise InsufficientSurvivors(f"{len(surv)} coefficients survive, {d} are needed")
    lookup = dict(surv)
    used = _independent_prefix(arr, [k for k, _ in surv], d)
    if len(used) < d:
        raise SingularSurvivorSet(
            f"surviving frame vectors span only dimension {len(used)} < {d}"
        )
    system = arr[:, used].conj().T
    rhs = np.array([lookup[k] for k in used])
    cond = float(np.linalg.cond(system))
    log.debug("reconstruction from %s, condition number %.3e", used, cond)
    x = np.linalg.solve(system, rhs)
    residual = float(np.linalg.norm(system @ x - rhs))
    return Reconstruction(x, tuple(used), residual, cond)


@dataclass(frozen=True)
class TrialReport:
    trials: int
    erasure_count: int
    seed: int
    max_error: float
    failures: int
    worst_condition: float

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "erasure_count": self.erasure_count,
            "seed": self.seed,
            "max_error": self.max_error,
            "failures": self.failures,
            "worst_condition": self.worst_condition,
        }


def erasure_trial(frame, trials: int = 100, erasure_count: int | None = None,
                  seed: int = 0) -> TrialReport:
    """Worst relative reconstruction error over seeded random erasure patterns.

    ``erasure_count`` defaults to the maximum M - d.  A trial whose
    survivors are dependent counts as a failure with infinite error.
    """
    arr = _as_array(frame)
    d, m = arr.shape
    if erasure_count is None:
        erasure_count = m - d
    if not 0 <= erasure_count <= m - d:
        raise ValueError(f"erasure_count must lie in [0, {m - d}]")
    rng = np.random.default_rng(seed)
    worst, failures, worst_cond = 0.0, 0, 0.0
    for _ in range(trials):
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        pattern = ErasurePattern(rng.choice(m, size=erasure_count, replace=False), m)
        try:
            rec = reconstruct(arr, transmit(arr, v, pattern))
        except SingularSurvivorSet:
            failures += 1
            worst = float("inf")
            continue
        err = float(np.linalg.norm(rec.vector - v) / np.linalg.norm(v))
        worst = max(worst, err)
        worst_cond = max(worst_cond, rec.condition)
    if failures:
        log.info("%d of %d erasure trials hit a dependent survivor set", failures, trials)
    return TrialReport(trials, erasure_count, seed, worst, failures, worst_cond)
