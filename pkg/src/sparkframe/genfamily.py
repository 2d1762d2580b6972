"""Group-free families D_lambda T^k built from exponent lists.

The frame vectors are M_l T^k v where M_l = diag(t^(lambda_l xi_j))_j and
t = exp(2 pi i tau).  For transcendental t, every square minor of the
exponent matrix is a generalized Vandermonde polynomial in t; it factors as
a product of differences of powers of t times a Schur polynomial with
nonnegative integer coefficients, so its value at t = 2 is positive and the
polynomial cannot vanish at a transcendental point.  For rational tau = p/q
the entries are exact q-th roots of unity and minors are checked directly.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from ._parallel import BudgetExceeded
from .criteria import MinorCheck, consecutive_minor_check
from .exactalg import Cyclotomic, CycPolynomial, ExactMatrix, det_exact, det_rational
from .framecore import DiagonalShiftFamily

__all__ = [
    "Transcendental",
    "UnsupportedTau",
    "ExponentFamily",
    "SchurPartition",
    "FamilyCertificate",
    "parse_tau",
    "family_matrix",
    "minor_poly",
    "minor_positivity_certificate",
    "schur_evaluate",
    "schur_tableau_sum",
    "semistandard_tableaux",
    "factorization_crosscheck",
    "certify_family_full_spark",
    "square_submatrices",
]

EVALUATION_POINT = 2


class UnsupportedTau(ValueError):
    """tau is neither rational nor declared transcendental."""


@dataclass(frozen=True)
class Transcendental:
    """A transcendental tau; ``value`` is used only for numeric evaluation."""

    value: float = math.sqrt(2)
    label: str = "sqrt2"

    def __str__(self) -> str:
        return f"transcendental({self.label})"


def parse_tau(tau) -> Transcendental | Fraction:
    """Accept Transcendental, int, Fraction, or the strings ``transcendental`` and ``p/q``.

    Floats are refused: a float is always rational, but almost never the
    rational the caller meant, and an irrational algebraic tau has no
    effective degree bound to decide against.
    """
    if isinstance(tau, Transcendental):
        return tau
    if isinstance(tau, bool):
        raise UnsupportedTau("tau must be rational or transcendental")
    if isinstance(tau, int):
        return Fraction(tau)
    if isinstance(tau, Fraction):
        return tau
    if isinstance(tau, str):
        s = tau.strip().lower()
        if s in ("transcendental", "transcendental(sqrt2)"):
            return Transcendental()
        try:
            return Fraction(s)
        except ValueError:
            pass
        raise UnsupportedTau(
            f"tau {tau!r} is not supported: give p/q or 'transcendental'; "
            "algebraic irrational tau has no effective degree bound"
        )
    raise UnsupportedTau(
        f"tau of type {type(tau).__name__} is not supported; "
        "pass a Fraction, an int, 'p/q', or Transcendental()"
    )


def _check_increasing(name: str, xs: Sequence[int]) -> tuple[int, ...]:
    xs = tuple(int(x) for x in xs)
    if not xs:
        raise ValueError(f"{name} is empty")
    if xs[0] < 0:
        raise ValueError(f"{name} must be non-negative")
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise ValueError(f"{name} must be strictly increasing")
    return xs


@dataclass(frozen=True)
class ExponentFamily:
    """Strictly increasing exponent lists xi (rows) and lambdas (columns)."""

    xi: tuple[int, ...]
    lambdas: tuple[int, ...]
    tau: Transcendental | Fraction = field(default_factory=Transcendental)

    def __post_init__(self):
        object.__setattr__(self, "xi", _check_increasing("xi", self.xi))
        object.__setattr__(self, "lambdas", _check_increasing("lambdas", self.lambdas))
        object.__setattr__(self, "tau", parse_tau(self.tau))

    @property
    def dim(self) -> int:
        return len(self.xi)

    @property
    def width(self) -> int:
        return len(self.lambdas)

    @property
    def transcendental(self) -> bool:
        return isinstance(self.tau, Transcendental)

    @property
    def order(self) -> int:
        """Cyclotomic order of the entries (1 for a formal t)."""
        return 1 if self.transcendental else self.tau.denominator

    def exponent_grid(self) -> list[list[int]]:
        return [[lam * x for lam in self.lambdas] for x in self.xi]

    def t_value(self) -> complex:
        if self.transcendental:
            return cmath.exp(2j * math.pi * self.tau.value)
        return cmath.exp(2j * math.pi * self.tau.numerator / self.tau.denominator)

    def describe(self) -> dict:
        return {
            "family": "exponent",
            "xi": list(self.xi),
            "lambdas": list(self.lambdas),
            "tau": str(self.tau),
        }

    def as_family(self) -> DiagonalShiftFamily:
        """The operator family; transcendental t is kept as a formal variable."""
        return DiagonalShiftFamily(family_matrix(self), self.t_value(), self.describe())


@dataclass(frozen=True)
class SchurPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be non-negative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition parts must be weakly decreasing")
        # trailing zeros carry no information
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)


def family_matrix(f: ExponentFamily) -> ExactMatrix:
    """d x m matrix with entries t^(lambda_k xi_j), or zeta_q^(p lambda_k xi_j) for tau = p/q."""
    grid = f.exponent_grid()
    if f.transcendental:
        return ExactMatrix([[CycPolynomial.monomial(1, e) for e in row] for row in grid], 1)
    q, p = f.tau.denominator, f.tau.numerator
    return ExactMatrix([[Cyclotomic.zeta(q, p * e) for e in row] for row in grid], q)


def _check_square(rows, cols) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError(f"minor needs as many rows as columns, got {len(rows)} and {len(cols)}")
    return rows, cols


def minor_poly(f: ExponentFamily, rows: Sequence[int], cols: Sequence[int]) -> CycPolynomial:
    """Exact determinant of the selected submatrix, as a polynomial in t."""
    rows, cols = _check_square(rows, cols)
    return det_exact(family_matrix(f).submatrix(rows, cols))


def _power_matrix(f: ExponentFamily, rows, cols, r) -> list[list]:
    return [[r ** (f.lambdas[k] * f.xi[j]) for k in cols] for j in rows]


def minor_positivity_certificate(f: ExponentFamily, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """P_S(2) > 0 for the minor with rows and columns taken in increasing order.

    Computed with integer arithmetic on the matrix (2^(lambda_k xi_j)).
    """
    rows, cols = _check_square(rows, cols)
    if not f.transcendental:
        raise UnsupportedTau("positivity certificates apply to transcendental tau only")
    rows, cols = sorted(rows), sorted(cols)
    return det_rational(_power_matrix(f, rows, cols, EVALUATION_POINT)) > 0


def semistandard_tableaux(parts: Sequence[int], m: int) -> Iterator[list[list[int]]]:
    """All fillings with entries in 1..m, rows weakly and columns strictly increasing."""
    parts = list(parts)
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    grid = [[0] * p for p in parts]

    def fill(idx):
        if idx == len(cells):
            yield [row[:] for row in grid]
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, m + 1):
            grid[i][j] = v
            yield from fill(idx + 1)
        grid[i][j] = 0

    yield from fill(0)


def schur_tableau_sum(kappa, values: Sequence) -> Fraction:
    """s_kappa(values) as the sum of x^mu over semistandard tableaux."""
    kappa = kappa if isinstance(kappa, SchurPartition) else SchurPartition(tuple(kappa))
    xs = [Fraction(v) for v in values]
    total = Fraction(0)
    for tab in semistandard_tableaux(kappa.parts, len(xs)):
        term = Fraction(1)
        for row in tab:
            for v in row:
                term *= xs[v - 1]
        total += term
    return total


def schur_evaluate(kappa, values: Sequence) -> Fraction:
    """s_kappa(values) via the bialternant det(x_i^(kappa_j + m - j)) / det(x_i^(m - j)).

    Falls back to tableau enumeration when values repeat.
    """
    kappa = kappa if isinstance(kappa, SchurPartition) else SchurPartition(tuple(kappa))
    xs = [Fraction(v) for v in values]
    m = len(xs)
    if len(kappa) > m:
        return Fraction(0)
    if m == 0:
        return Fraction(1)
    if len(set(xs)) < m:
        return schur_tableau_sum(kappa, xs)
    parts = list(kappa.parts) + [0] * (m - len(kappa))
    num = det_rational([[x ** (parts[j] + m - 1 - j) for j in range(m)] for x in xs])
    den = det_rational([[x ** (m - 1 - j) for j in range(m)] for x in xs])
    return Fraction(num) / Fraction(den)


def factorization_crosscheck(f: ExponentFamily, rows: Sequence[int], cols: Sequence[int], r) -> bool:
    """Compare the direct minor at t = r with its Vandermonde-times-Schur factorization.

    Rows and columns are taken in increasing order.  Both sides are exact
    rationals.
    """
    rows, cols = _check_square(rows, cols)
    r = Fraction(r)
    if r <= 0:
        raise ValueError("evaluation point must be positive")
    rows, cols = sorted(rows), sorted(cols)
    L = len(rows)
    if L == 0:
        return True
    direct = Fraction(det_rational(_power_matrix(f, rows, cols, r)))

    lam = [f.lambdas[k] for k in cols]
    xis = [f.xi[j] for j in rows]
    xs = [r ** (l - lam[0]) for l in lam]
    vandermonde = Fraction(1)
    for i in range(L):
        for j in range(i):
            vandermonde *= xs[i] - xs[j]
    prefactor = Fraction(1)
    for x in xis:
        prefactor *= r ** (lam[0] * x)
    kappa = SchurPartition(tuple(xis[L - 1 - i] - (L - 1 - i) for i in range(L)))
    return direct == vandermonde * prefactor * schur_evaluate(kappa, xs)


def square_submatrices(d: int, m: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (rows, cols) pair of equal size >= 1, by size then lexicographically."""
    for L in range(1, min(d, m) + 1):
        for rows in itertools.combinations(range(d), L):
            for cols in itertools.combinations(range(m), L):
                yield rows, cols


@dataclass(frozen=True)
class FamilyCertificate:
    """Result of certifying an exponent family.

    ``method`` is ``positivity`` (transcendental tau, every square minor
    positive at t = 2) or ``cyclotomic`` (rational tau, consecutive-row
    minors checked exactly over Q(zeta_q)).
    """

    certified: bool
    method: str
    minors_checked: int
    evaluation_point: int | None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    family: dict

    def __bool__(self) -> bool:
        return self.certified

    def to_dict(self) -> dict:
        return {
            "certified": self.certified,
            "method": self.method,
            "minors_checked": self.minors_checked,
            "evaluation_point": self.evaluation_point,
            "witness": None if self.witness is None
            else {"rows": list(self.witness[0]), "cols": list(self.witness[1])},
            "family": self.family,
        }


def certify_family_full_spark(f: ExponentFamily, budget: int = 10**7) -> FamilyCertificate:
    """Certify that generic generating vectors give full spark orbit frames."""
    if not f.transcendental:
        res: MinorCheck = consecutive_minor_check(family_matrix(f), budget=budget)
        return FamilyCertificate(res.ok, "cyclotomic", res.minors_checked, None,
                                 res.witness, f.describe())
    d, m = f.dim, f.width
    required = sum(math.comb(d, L) * math.comb(m, L) for L in range(1, min(d, m) + 1))
    if required > budget:
        raise BudgetExceeded(required, budget)
    checked = 0
    for rows, cols in square_submatrices(d, m):
        checked += 1
        if not minor_positivity_certificate(f, rows, cols):
            return FamilyCertificate(False, "positivity", checked, EVALUATION_POINT,
                                     (rows, cols), f.describe())
    return FamilyCertificate(True, "positivity", checked, EVALUATION_POINT, None, f.describe())
