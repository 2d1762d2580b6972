"""Structural minor criteria for modulation matrices and DFT row selections."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ._parallel import BudgetExceeded
from .exactalg import Cyclotomic, CycPolynomial, ExactMatrix, det_exact
from .groups import is_prime

__all__ = [
    "MinorCheck",
    "consecutive_minor_check",
    "evans_all_minors_check",
    "uniform_distribution_check",
    "dft_submatrix_full_spark",
    "dft_row_matrix",
    "tight_columns_check",
    "divisors",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class MinorCheck:
    """Outcome of an exhaustive minor scan; truthy iff no minor vanished.

    ``witness`` is the first vanishing minor as (rows, cols).
    """

    ok: bool
    minors_checked: int
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "minors_checked": self.minors_checked,
            "witness": None if self.witness is None
            else {"rows": list(self.witness[0]), "cols": list(self.witness[1])},
        }


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _as_matrix(m) -> ExactMatrix:
    return m if isinstance(m, ExactMatrix) else ExactMatrix(m)


def cyclic_row_intervals(d: int, length: int) -> list[tuple[int, ...]]:
    """Rows forming arithmetic progressions of difference 1 mod d, sorted."""
    if length == d:
        return [tuple(range(d))]
    return [tuple(sorted((s + i) % d for i in range(length))) for s in range(d)]


def consecutive_minor_check(m, budget: int = DEFAULT_BUDGET) -> MinorCheck:
    """Every minor on cyclically consecutive rows is nonzero.

    Sizes run from 1 to min(rows, cols); for each size the row intervals
    are taken by starting row and columns in lexicographic order, and the
    first vanishing minor in that order is the witness.
    """
    m = _as_matrix(m)
    d, c = m.rows, m.cols
    top = min(d, c)
    required = sum(len(cyclic_row_intervals(d, L)) * math.comb(c, L) for L in range(1, top + 1))
    if required > budget:
        raise BudgetExceeded(required, budget)
    checked = 0
    for L in range(1, top + 1):
        for rows in cyclic_row_intervals(d, L):
            for cols in combinations(range(c), L):
                checked += 1
                if not det_exact(m.submatrix(rows, cols)):
                    return MinorCheck(False, checked, (rows, cols))
    return MinorCheck(True, checked)


def _all_minors(m: ExactMatrix, budget: int) -> MinorCheck:
    d, c = m.rows, m.cols
    required = math.comb(d + c, d) - 1
    if required > budget:
        raise BudgetExceeded(required, budget)
    checked = 0
    for L in range(1, min(d, c) + 1):
        for rows in combinations(range(d), L):
            for cols in combinations(range(c), L):
                checked += 1
                if not det_exact(m.submatrix(rows, cols)):
                    return MinorCheck(False, checked, (rows, cols))
    return MinorCheck(True, checked)


def evans_all_minors_check(n_prime: int, a_exps: Sequence[int], b_exps: Sequence[int],
                           budget: int = DEFAULT_BUDGET) -> MinorCheck:
    """Exhaustively verify that every square submatrix of (zeta_N^(a_j b_k)) is invertible.

    For prime N and pairwise incongruent exponent lists this always holds;
    the harness exercises the exact kernel.  ``minors_checked`` counts all
    square submatrices including the empty one, i.e. C(r + c, r).
    """
    if not is_prime(n_prime):
        raise ValueError(f"{n_prime} is not prime")
    for name, exps in (("a_exps", a_exps), ("b_exps", b_exps)):
        if len({e % n_prime for e in exps}) != len(exps):
            raise ValueError(f"{name} are not pairwise incongruent modulo {n_prime}")
    if not a_exps or not b_exps:
        return MinorCheck(True, 1)
    m = ExactMatrix(
        [[Cyclotomic.zeta(n_prime, a * b) for b in b_exps] for a in a_exps], n_prime
    )
    res = _all_minors(m, budget)
    return MinorCheck(res.ok, res.minors_checked + (1 if res.ok else 0), res.witness)


def uniform_distribution_check(s: Iterable[int], n: int) -> bool:
    """For each divisor d of n, the residues of s mod d have counts floor(|s|/d) or ceil(|s|/d)."""
    s = sorted({x % n for x in s})
    size = len(s)
    for d in divisors(n):
        counts = [0] * d
        for x in s:
            counts[x % d] += 1
        lo, hi = size // d, -(-size // d)
        if any(c not in (lo, hi) for c in counts):
            return False
    return True


def dft_row_matrix(s: Sequence[int], n: int) -> ExactMatrix:
    return ExactMatrix([[Cyclotomic.zeta(n, j * k) for k in range(n)] for j in s], n)


def dft_submatrix_full_spark(s: Iterable[int], n: int, budget: int = DEFAULT_BUDGET) -> MinorCheck:
    """Every |s| x |s| minor of the rows s of the n x n DFT matrix is nonzero."""
    rows = sorted({x % n for x in s})
    k = len(rows)
    if k == 0:
        return MinorCheck(True, 0)
    required = math.comb(n, k)
    if required > budget:
        raise BudgetExceeded(required, budget)
    m = dft_row_matrix(rows, n)
    checked = 0
    for cols in combinations(range(n), k):
        checked += 1
        if not det_exact(m.submatrix(range(k), cols)):
            return MinorCheck(False, checked, (tuple(rows), cols))
    return MinorCheck(True, checked)


def tight_columns_check(m) -> bool:
    """Rows pairwise orthogonal with equal norms, computed exactly.

    Conjugation is zeta -> zeta^-1 extended linearly, so entries must be
    constants in Q(zeta_N).
    """
    m = _as_matrix(m)
    if not m.is_constant():
        raise ValueError("tight_columns_check needs constant (t-free) entries")
    rows = [[x.constant_term() for x in r] for r in m.entries]
    conj = [[x.conjugate() for x in r] for r in rows]
    zero = Cyclotomic.zero(m.order)

    def inner(i, j):
        acc = zero
        for a, b in zip(rows[i], conj[j]):
            if a and b:
                acc = acc + a * b
        return acc

    norm0 = inner(0, 0)
    for i in range(m.rows):
        if inner(i, i) != norm0:
            return False
        for j in range(i + 1, m.rows):
            if inner(i, j):
                return False
    return True
