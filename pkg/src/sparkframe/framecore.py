"""Frame matrices built as orbits of diagonal/shift operator families, frame
operators and bounds, and brute-force full spark certification.

A frame is stored column-wise: column k is the k-th frame vector.  Exact
frames carry entries in Q(zeta_N)[t] where t is a formal indeterminate (or,
for exponent families with transcendental tau, t = exp(2 pi i tau)); a
nonzero polynomial minor certifies a nonzero determinant for every
transcendental specialization of t.  Numeric frames hold complex doubles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from ._parallel import (
    BudgetExceeded,
    combinations_from,
    rank_combination,
    resolve_workers,
    scan_blocks,
    unrank_combination,
)
from .exactalg import Cyclotomic, CycPolynomial, ExactMatrix, det_exact, rank_exact
from .groups import InducedRep

__all__ = [
    "DEFAULT_T",
    "EXACT_BUDGET",
    "NUMERIC_BUDGET",
    "DEFAULT_TOL",
    "BudgetExceeded",
    "DiagonalShiftFamily",
    "GeneratingVector",
    "FrameMatrix",
    "SparkCertificate",
    "orbit_frame",
    "analysis",
    "synthesis",
    "frame_operator",
    "frame_bounds",
    "jacobi_eigenvalues",
    "is_tight",
    "full_spark_exact",
    "full_spark_numeric",
    "spark",
    "zero_count_check",
    "orthogonal_probe",
    "convolution_full_spark_test",
]

# e^i is transcendental (Lindemann), and lies on the unit circle
DEFAULT_T = cmath.exp(1j)
EXACT_BUDGET = 10**7
NUMERIC_BUDGET = 10**8
DEFAULT_TOL = 1e-8

_EXACT_BLOCK = 512
_NUMERIC_BLOCK = 1 << 15


@dataclass(frozen=True)
class DiagonalShiftFamily:
    """Operators M_l T^k built from a d x m matrix M.

    M_l is the diagonal matrix holding column l of M, and T is the cyclic
    shift (T f)_j = f_{j-1}.  ``t_value`` is the numeric value substituted
    for t when M has polynomial entries or the frame is specialized.
    """

    matrix: ExactMatrix
    t_value: complex = DEFAULT_T
    description: dict = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def order(self) -> int:
        return self.matrix.order


@dataclass(frozen=True)
class GeneratingVector:
    """How the first orbit vector is specified.

    kind is one of ``monomial`` (v_k = t^e_k), ``exact`` (entries in
    Q(zeta_N)[t] or rationals), ``numeric`` (complex entries) or ``random``
    (seeded; random integer combinations of powers of zeta in exact mode,
    complex Gaussian in numeric mode).
    """

    kind: str
    data: tuple = ()
    seed: int | None = None

    @classmethod
    def monomial(cls, exponents: Sequence[int]) -> "GeneratingVector":
        return cls("monomial", tuple(int(e) for e in exponents))

    @classmethod
    def monomial_squares(cls, d: int) -> "GeneratingVector":
        return cls.monomial([k * k for k in range(d)])

    @classmethod
    def exact(cls, entries: Sequence) -> "GeneratingVector":
        return cls("exact", tuple(entries))

    @classmethod
    def numeric(cls, entries: Sequence[complex]) -> "GeneratingVector":
        return cls("numeric", tuple(complex(x) for x in entries))

    @classmethod
    def random(cls, seed: int) -> "GeneratingVector":
        return cls("random", (), int(seed))

    def describe(self) -> str:
        if self.kind == "monomial":
            return "monomial:" + ",".join(map(str, self.data))
        if self.kind == "random":
            return f"random:{self.seed}"
        return f"{self.kind}:" + ",".join(str(x) for x in self.data)

    def exact_entries(self, order: int, d: int) -> list[CycPolynomial]:
        if self.kind == "monomial":
            out = [CycPolynomial.monomial(order, e) for e in self.data]
        elif self.kind == "exact":
            out = []
            for x in self.data:
                if isinstance(x, CycPolynomial):
                    out.append(x)
                elif isinstance(x, Cyclotomic):
                    out.append(CycPolynomial.constant(x))
                else:
                    out.append(CycPolynomial.monomial(order, 0, Fraction(x)))
        elif self.kind == "numeric":
            vals = []
            for x in self.data:
                if x.imag != 0 or x.real != int(x.real):
                    raise ValueError("numeric generating vectors have no exact form")
                vals.append(int(x.real))
            out = [CycPolynomial.monomial(order, 0, v) for v in vals]
        elif self.kind == "random":
            rng = np.random.default_rng(self.seed)
            out = []
            for _ in range(d):
                while True:
                    c = Cyclotomic(order, [int(a) for a in rng.integers(-5, 6, size=order)])
                    if c:
                        break
                out.append(CycPolynomial.constant(c))
        else:
            raise ValueError(f"unknown generating vector kind {self.kind!r}")
        if len(out) != d:
            raise ValueError(f"generating vector has length {len(out)}, family dimension is {d}")
        if not any(out):
            raise ValueError("generating vector is zero")
        return out

    def numeric_entries(self, d: int, t: complex) -> np.ndarray:
        if self.kind == "random":
            rng = np.random.default_rng(self.seed)
            v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        elif self.kind == "numeric":
            v = np.array(self.data, dtype=complex)
        elif self.kind == "monomial":
            v = np.array([t ** e for e in self.data], dtype=complex)
        else:
            v = np.array(
                [x.evaluate(t) if isinstance(x, CycPolynomial)
                 else complex(x) if isinstance(x, Cyclotomic)
                 else complex(Fraction(x)) for x in self.data],
                dtype=complex,
            )
        if v.shape != (d,):
            raise ValueError(f"generating vector has length {v.size}, family dimension is {d}")
        if not np.any(v):
            raise ValueError("generating vector is zero")
        return v


@dataclass(frozen=True, eq=False)
class FrameMatrix:
    """d x M frame; ``columns`` (exact) or ``array`` (numeric) holds the data."""

    dim: int
    count: int
    mode: str
    order: int
    columns: tuple = ()
    array: np.ndarray | None = None
    t_value: complex = DEFAULT_T
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in ("exact", "numeric"):
            raise ValueError("mode must be 'exact' or 'numeric'")
        if self.mode == "exact":
            if len(self.columns) != self.count or any(len(c) != self.dim for c in self.columns):
                raise ValueError("column data does not match the frame shape")
            for c in self.columns:
                if not any(c):
                    raise ValueError("frame has a zero column")
                if any(x.order != self.order for x in c):
                    raise ValueError("entries must share the ambient cyclotomic order")
        else:
            arr = np.asarray(self.array, dtype=complex)
            if arr.shape != (self.dim, self.count):
                raise ValueError("array does not match the frame shape")
            if np.any(np.all(arr == 0, axis=0)):
                raise ValueError("frame has a zero column")
            arr.setflags(write=False)
            object.__setattr__(self, "array", arr)

    @classmethod
    def from_array(cls, array, provenance: dict | None = None) -> "FrameMatrix":
        arr = np.array(array, dtype=complex)
        if arr.ndim != 2:
            raise ValueError("frame array must be two-dimensional")
        d, m = arr.shape
        return cls(d, m, "numeric", 1, array=arr, provenance=dict(provenance or {}))

    @classmethod
    def from_exact_columns(cls, columns, order: int | None = None, t_value=DEFAULT_T,
                           provenance: dict | None = None) -> "FrameMatrix":
        cols = []
        for col in columns:
            c = []
            for x in col:
                if isinstance(x, Cyclotomic):
                    x = CycPolynomial.constant(x)
                elif not isinstance(x, CycPolynomial):
                    x = CycPolynomial.monomial(order or 1, 0, Fraction(x))
                c.append(x)
            cols.append(tuple(c))
        order = order or cols[0][0].order
        return cls(len(cols[0]), len(cols), "exact", order, columns=tuple(cols),
                   t_value=t_value, provenance=dict(provenance or {}))

    def numeric_array(self, t: complex | None = None) -> np.ndarray:
        if self.mode == "numeric":
            return self.array
        t = self.t_value if t is None else t
        cache: dict = {}
        out = np.empty((self.dim, self.count), dtype=complex)
        for k, col in enumerate(self.columns):
            for j, x in enumerate(col):
                v = cache.get(x)
                if v is None:
                    v = cache[x] = x.evaluate(t)
                out[j, k] = v
        return out

    def to_numeric(self, t: complex | None = None) -> "FrameMatrix":
        if self.mode == "numeric":
            return self
        prov = dict(self.provenance)
        prov["specialized_t"] = [float((self.t_value if t is None else t).real),
                                 float((self.t_value if t is None else t).imag)]
        return FrameMatrix(self.dim, self.count, "numeric", self.order,
                           array=self.numeric_array(t), t_value=self.t_value, provenance=prov)

    def submatrix(self, cols: Sequence[int]) -> ExactMatrix:
        if self.mode != "exact":
            raise ValueError("exact submatrix of a numeric frame")
        return ExactMatrix([[self.columns[c][j] for c in cols] for j in range(self.dim)], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrameMatrix):
            return NotImplemented
        if (self.dim, self.count, self.mode, self.order) != (other.dim, other.count, other.mode, other.order):
            return False
        if self.mode == "exact":
            return self.columns == other.columns
        return bool(np.array_equal(self.array, other.array))

    __hash__ = None


def _shift_columns_exact(diag_rows, v, d, m):
    # column (l, k) = M_l T^k v with (T^k v)_j = v_{j-k}
    cols = []
    for l in range(m):
        for k in range(d):
            cols.append(tuple(diag_rows[j][l] * v[(j - k) % d] for j in range(d)))
    return cols


def orbit_frame(family, v: GeneratingVector, mode: str = "exact") -> FrameMatrix:
    """Orbit of ``v`` under an operator family, as a frame.

    ``family`` is an :class:`InducedRep`, a :class:`DiagonalShiftFamily`, or
    any object with an ``as_family()`` method returning one (exponent
    families).  Columns are ordered lexicographically in (l, k): for an
    induced representation column x*d + k is pi(x, h_k) v where h_k is the
    k-th element of the subgroup enumeration.
    """
    if mode == "float":
        mode = "numeric"
    if mode not in ("exact", "numeric"):
        raise ValueError("mode must be 'exact' or 'numeric'")
    if hasattr(family, "as_family"):
        family = family.as_family()
    if isinstance(family, InducedRep):
        return _rep_orbit(family, v, mode)
    if not isinstance(family, DiagonalShiftFamily):
        raise TypeError(f"unsupported family type {type(family).__name__}")
    d, m = family.matrix.rows, family.matrix.cols
    prov = dict(family.description)
    prov.update({
        "vector": v.describe(),
        "column_order": f"lexicographic (l, k), l in [0,{m}), k in [0,{d}); column = M_l T^k v",
    })
    if mode == "exact":
        vec = v.exact_entries(family.order, d)
        cols = _shift_columns_exact(family.matrix.entries, vec, d, m)
        return FrameMatrix(d, d * m, "exact", family.order, columns=tuple(cols),
                           t_value=family.t_value, provenance=prov)
    vec = v.numeric_entries(d, family.t_value)
    diag = family.matrix.to_complex(family.t_value)
    arr = np.empty((d, d * m), dtype=complex)
    for l in range(m):
        for k in range(d):
            arr[:, l * d + k] = diag[:, l] * np.roll(vec, k)
    return FrameMatrix(d, d * m, "numeric", family.order, array=arr,
                       t_value=family.t_value, provenance=prov)


def _rep_orbit(rep: InducedRep, v: GeneratingVector, mode: str) -> FrameMatrix:
    n, d = rep.group.n, rep.dim
    prov = {
        "family": "induced",
        "group": {"n": n, "subgroup": list(rep.group.h.elements)},
        "xi": rep.xi,
        "h_enumeration": list(rep.h_order),
        "vector": v.describe(),
        "column_order": f"lexicographic (x, k), x in [0,{n}), k in [0,{d}); column = pi(x, h_k) v",
    }
    perms = [rep.permutation(h) for h in rep.h_order]
    exps = [rep.diagonal_exponents(x) for x in range(n)]
    if mode == "exact":
        vec = v.exact_entries(n, d)
        zetas = [Cyclotomic.zeta(n, e) for e in range(n)]
        cols = []
        for x in range(n):
            for k in range(d):
                p = perms[k]
                cols.append(tuple(vec[p[j]].scale(zetas[exps[x][j]]) for j in range(d)))
        return FrameMatrix(d, n * d, "exact", n, columns=tuple(cols), provenance=prov)
    vec = v.numeric_entries(d, DEFAULT_T)
    arr = np.empty((d, n * d), dtype=complex)
    for x in range(n):
        phase = np.exp(2j * np.pi * np.array(exps[x]) / n)
        for k in range(d):
            arr[:, x * d + k] = phase * vec[perms[k]]
    return FrameMatrix(d, n * d, "numeric", n, array=arr, provenance=prov)


def _as_array(frame) -> np.ndarray:
    if isinstance(frame, FrameMatrix):
        return frame.numeric_array()
    return np.asarray(frame, dtype=complex)


def analysis(frame, w) -> np.ndarray:
    """Coefficients <w, v_k> = sum_j w_j conj(v_k[j])."""
    phi = _as_array(frame)
    w = np.asarray(w, dtype=complex)
    if w.shape != (phi.shape[0],):
        raise ValueError("vector dimension does not match the frame")
    return phi.conj().T @ w


def synthesis(frame, c) -> np.ndarray:
    phi = _as_array(frame)
    c = np.asarray(c, dtype=complex)
    if c.shape != (phi.shape[1],):
        raise ValueError("coefficient count does not match the frame")
    return phi @ c


def frame_operator(frame) -> np.ndarray:
    phi = _as_array(frame)
    return phi @ phi.conj().T


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    The complex n x n matrix is embedded as the real symmetric 2n x 2n
    matrix [[Re, -Im], [Im, Re]], whose spectrum is that of ``a`` with each
    eigenvalue doubled.  Sweeps continue until the off-diagonal Frobenius
    norm is at most ``tol`` times the Frobenius norm of the input.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    s = np.block([[a.real, -a.imag], [a.imag, a.real]])
    s = (s + s.T) / 2
    m = 2 * n
    scale = max(np.linalg.norm(s), 1e-300)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(s * s) - np.sum(np.diag(s) ** 2), 0.0))
        if off <= tol * scale:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = s[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (s[q, q] - s[p, p]) / (2 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                sn = t * c
                sp, sq = s[:, p].copy(), s[:, q].copy()
                s[:, p] = c * sp - sn * sq
                s[:, q] = sn * sp + c * sq
                rp, rq = s[p, :].copy(), s[q, :].copy()
                s[p, :] = c * rp - sn * rq
                s[q, :] = sn * rp + c * rq
    ev = np.sort(np.diag(s))
    return ev[::2]


def frame_bounds(frame) -> tuple[float, float]:
    """Optimal frame bounds (A, B): extreme eigenvalues of the frame operator.

    A is 0 when the vectors do not span.
    """
    ev = jacobi_eigenvalues(frame_operator(frame))
    lo, hi = float(ev[0]), float(ev[-1])
    if lo < 1e-12 * max(hi, 1.0):
        lo = max(lo, 0.0)
    return lo, hi


def is_tight(frame, tol: float = 1e-9) -> bool:
    s = frame_operator(frame)
    d = s.shape[0]
    a = np.trace(s).real / d
    return bool(np.max(np.abs(s - a * np.eye(d))) <= tol * a)


@dataclass(frozen=True)
class SparkCertificate:
    verdict: str
    mode: str
    minors_checked: int
    tolerance: float | None = None
    min_abs_det: float | None = None
    failing_subset: tuple[int, ...] | None = None
    column_order: str | None = None
    h_enumeration: tuple[int, ...] | None = None
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if (self.verdict == "Deficient") != (self.failing_subset is not None):
            raise ValueError("a failing subset is present exactly for Deficient verdicts")
        if self.mode == "exact" and self.verdict == "Inconclusive":
            raise ValueError("exact certificates are never inconclusive")

    @property
    def full_spark(self) -> bool:
        return self.verdict == "FullSpark"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "tolerance": self.tolerance,
            "minors_checked": self.minors_checked,
            "min_abs_det": self.min_abs_det,
            "failing_subset": list(self.failing_subset) if self.failing_subset is not None else None,
            "column_order": self.column_order,
            "h_enumeration": list(self.h_enumeration) if self.h_enumeration is not None else None,
        }


def _cert_meta(frame: FrameMatrix) -> dict:
    h = frame.provenance.get("h_enumeration")
    return {
        "column_order": frame.provenance.get("column_order", "as stored"),
        "h_enumeration": tuple(h) if h is not None else None,
        "provenance": dict(frame.provenance),
    }


def _exact_block(frame: FrameMatrix, start: int, count: int):
    n, k = frame.count, frame.dim
    cols = frame.columns
    for i, comb in enumerate(combinations_from(start, count, n, k)):
        m = [[cols[c][j] for c in comb] for j in range(k)]
        if not det_exact(ExactMatrix(m, frame.order)):
            return start + i, comb
    return None


def full_spark_exact(frame: FrameMatrix, budget: int = EXACT_BUDGET,
                     threads: int | None = None) -> SparkCertificate:
    """Check every d x d minor exactly, in lexicographic column-subset order.

    On failure the lexicographically smallest singular subset is reported
    and ``minors_checked`` counts the minors up to and including it.
    """
    if frame.mode != "exact":
        raise ValueError("full_spark_exact needs an exact frame")
    total = math.comb(frame.count, frame.dim)
    if total > budget:
        raise BudgetExceeded(total, budget)
    results = scan_blocks(_exact_block, frame, total, _EXACT_BLOCK,
                          resolve_workers(threads), stop=lambda r: r is not None)
    fail = next((r for r in results if r is not None), None)
    if fail is None:
        return SparkCertificate("FullSpark", "exact", total, **_cert_meta(frame))
    rank, comb = fail
    return SparkCertificate("Deficient", "exact", rank + 1, failing_subset=tuple(comb),
                            **_cert_meta(frame))


def _normalized(arr: np.ndarray) -> np.ndarray:
    return arr / np.linalg.norm(arr, axis=0)


def _numeric_block(payload, start: int, count: int):
    arr, tol = payload
    n, k = arr.shape[1], arr.shape[0]
    combs = np.array(list(combinations_from(start, count, n, k)), dtype=np.intp)
    if combs.size == 0:
        return None
    sub = np.transpose(arr[:, combs], (1, 0, 2))
    dets = np.abs(np.linalg.det(sub))
    i = int(np.argmin(dets))
    bad = np.nonzero(dets <= tol)[0]
    first_bad = int(bad[0]) + start if bad.size else None
    return float(dets[i]), start + i, first_bad


def full_spark_numeric(frame, tol: float = DEFAULT_TOL, budget: int = NUMERIC_BUDGET,
                       threads: int | None = None) -> SparkCertificate:
    """Scan |det| of every column-normalized d x d submatrix.

    All minors are always evaluated; the smallest is reported and the
    verdict is Deficient exactly when some minor is at most ``tol``.
    """
    if not isinstance(frame, FrameMatrix):
        frame = FrameMatrix.from_array(frame)
    arr = _normalized(frame.numeric_array())
    d, m = arr.shape
    total = math.comb(m, d)
    if total > budget:
        raise BudgetExceeded(total, budget)
    results = [r for r in scan_blocks(_numeric_block, (arr, tol), total, _NUMERIC_BLOCK,
                                      resolve_workers(threads)) if r is not None]
    min_det = min(r[0] for r in results)
    fails = [r[2] for r in results if r[2] is not None]
    meta = _cert_meta(frame)
    if fails:
        subset = unrank_combination(fails[0], m, d)
        return SparkCertificate("Deficient", "numeric", total, tol, min_det,
                                failing_subset=subset, **meta)
    return SparkCertificate("FullSpark", "numeric", total, tol, min_det, **meta)


def spark(frame: FrameMatrix, budget: int = EXACT_BUDGET) -> int:
    """Size of the smallest linearly dependent set of columns.

    Returns d + 1 when every d columns are independent and M > d, and
    M + 1 when all M <= d columns are independent.
    """
    if frame.mode != "exact":
        raise ValueError("spark needs an exact frame")
    d, m = frame.dim, frame.count
    top = min(d, m)
    required = sum(math.comb(m, s) for s in range(1, top + 1))
    if required > budget:
        raise BudgetExceeded(required, budget)
    for s in range(1, top + 1):
        for comb in combinations_from(0, math.comb(m, s), m, s):
            sub = frame.submatrix(comb)
            if s == d:
                dependent = not det_exact(sub)
            else:
                dependent = rank_exact(sub) < s
            if dependent:
                return s
    return d + 1 if m > d else m + 1


def zero_count_check(frame, trials: int = 100, seed: int = 0, tol: float = 1e-9,
                     probes: Sequence | None = None) -> int:
    """Largest number of vanishing coefficients |<psi, v_k>| < tol ||psi|| ||v_k||.

    Random complex Gaussian psi are drawn from ``seed``; extra ``probes``
    are checked as well.
    """
    phi = _as_array(frame)
    d = phi.shape[0]
    norms = np.linalg.norm(phi, axis=0)
    rng = np.random.default_rng(seed)
    vectors = [rng.standard_normal(d) + 1j * rng.standard_normal(d) for _ in range(trials)]
    vectors.extend(np.asarray(p, dtype=complex) for p in (probes or ()))
    worst = 0
    for psi in vectors:
        if not np.any(psi):
            raise ValueError("probe vectors must be nonzero")
        c = np.abs(phi.conj().T @ psi)
        worst = max(worst, int(np.sum(c < tol * np.linalg.norm(psi) * norms)))
    return worst


def orthogonal_probe(frame, indices: Sequence[int]) -> np.ndarray:
    """A unit vector orthogonal to the given frame vectors (at most d-1 of them)."""
    phi = _as_array(frame)
    sub = phi[:, list(indices)]
    if sub.shape[1] >= phi.shape[0]:
        raise ValueError("need fewer than d vectors")
    _, _, vh = np.linalg.svd(sub.conj().T)
    return vh[-1].conj()


def _gram_block(payload, start: int, count: int):
    u, k = payload
    combs = np.array(list(combinations_from(start, count, u.shape[1], k)), dtype=np.intp)
    sub = np.transpose(u[:, combs], (1, 0, 2))
    # volume = sqrt(Gram determinant); singular values avoid squaring roundoff
    vol = np.prod(np.linalg.svd(sub, compute_uv=False), axis=1)
    return float(np.min(vol))


def convolution_full_spark_test(rep: InducedRep, v, budget: int = NUMERIC_BUDGET,
                                tol: float = DEFAULT_TOL, threads: int | None = 1) -> bool:
    """Full spark test through left translates of the matrix coefficient.

    With V(x) = <phi, pi(x) phi>, the orbit of phi is full spark iff for
    every d-subset X of G the translates y -> V(x^-1 y), x in X, are
    linearly independent (no sequence supported on d points annihilates V
    under convolution).  Independence is measured by the volume spanned by
    the normalized translates (square root of their Gram determinant, taken
    as a product of singular values), which equals |det| of the normalized
    orbit submatrix because V_phi is a scaled isometry.
    """
    if not rep.irreducible:
        raise ValueError("convolution test requires an irreducible representation")
    if isinstance(v, GeneratingVector):
        phi = v.numeric_entries(rep.dim, DEFAULT_T)
    else:
        phi = np.asarray(v, dtype=complex)
    if phi.shape != (rep.dim,):
        raise ValueError("vector dimension does not match the representation")
    if not np.any(phi):
        raise ValueError("phi must be nonzero")
    g = rep.group
    elems = g.elements()
    index = {e: i for i, e in enumerate(elems)}
    coeff = np.array([np.vdot(rep.numeric_matrix(x) @ phi, phi) for x in elems])
    size = len(elems)
    u = np.empty((size, size), dtype=complex)
    for i, x in enumerate(elems):
        xi = g.inverse(x)
        for j, y in enumerate(elems):
            u[j, i] = coeff[index[g.multiply(xi, y)]]
    u = _normalized(u)
    d = rep.dim
    total = math.comb(size, d)
    if total > budget:
        raise BudgetExceeded(total, budget)
    results = scan_blocks(_gram_block, (u, d), total, _NUMERIC_BLOCK, resolve_workers(threads))
    return min(results) > tol
