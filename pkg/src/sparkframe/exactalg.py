"""Exact arithmetic in cyclotomic fields and polynomial rings over them.

Elements of Q(zeta_N) are stored in the power basis 1, z, ..., z^(phi(N)-1)
reduced modulo the N-th cyclotomic polynomial, so equality and zero tests are
exact for every N.  Internally the coefficients are kept as a tuple of
integer numerators over one positive common denominator; the public
``coeffs`` view exposes them as :class:`fractions.Fraction`.

``CycPolynomial`` is a sparse univariate polynomial in a formal variable t
with ``Cyclotomic`` coefficients, and ``det_exact`` computes determinants of
square matrices of such polynomials.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "cyclotomic_polynomial",
    "euler_phi",
    "Cyclotomic",
    "CycPolynomial",
    "ExactMatrix",
    "cyc_arith",
    "cyc_inverse",
    "cyc_to_complex",
    "det_exact",
    "det_rational",
    "rank_exact",
]

Rational = Fraction


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact_int(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (low -> high), den monic up to sign
    num = list(num)
    lead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact integer polynomial division")
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact integer polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class _Field:
    """Per-order reduction data, shared by all elements of one Q(zeta_N)."""

    __slots__ = ("order", "dim", "phi", "_powers")

    def __init__(self, order: int):
        self.order = order
        self.phi = cyclotomic_polynomial(order)
        self.dim = len(self.phi) - 1
        self._powers: list[tuple[int, ...]] = []
        self._extend(max(order, 2 * self.dim - 1))

    def _extend(self, upto: int) -> None:
        dim = self.dim
        if not self._powers:
            for k in range(dim):
                v = [0] * dim
                v[k] = 1
                self._powers.append(tuple(v))
        while len(self._powers) < upto:
            prev = self._powers[-1]
            # multiply by x, then fold x^dim = -(phi_0 + ... + phi_{dim-1} x^{dim-1})
            top = prev[-1]
            v = [0] + list(prev[:-1])
            if top:
                for j in range(dim):
                    v[j] -= top * self.phi[j]
            self._powers.append(tuple(v))

    def power(self, k: int) -> tuple[int, ...]:
        if k >= len(self._powers):
            self._extend(k + 1)
        return self._powers[k]

    def reduce(self, nums: Sequence[int]) -> list[int]:
        dim = self.dim
        out = list(nums[:dim]) + [0] * max(0, dim - len(nums))
        for k in range(dim, len(nums)):
            c = nums[k]
            if c:
                row = self.power(k)
                for j in range(dim):
                    if row[j]:
                        out[j] += c * row[j]
        return out


@lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    if order < 1:
        raise ValueError("cyclotomic order must be positive")
    return _Field(order)


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = den
    for c in nums:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g > 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


class Cyclotomic:
    """An element of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N)."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        field = _field(order)
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self.order = order
        self._num, self._den = _normalize(field.reduce(nums), den)
        self._hash = None

    @classmethod
    def _raw(cls, order: int, nums: tuple[int, ...], den: int) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj._num = nums
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, order: int, nums: list[int], den: int = 1) -> "Cyclotomic":
        n, d = _normalize(nums, den)
        return cls._raw(order, n, d)

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls._raw(order, (0,) * _field(order).dim, 1)

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls.rational(order, 1)

    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        q = Fraction(value)
        dim = _field(order).dim
        return cls._make(order, [q.numerator] + [0] * (dim - 1), q.denominator)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "Cyclotomic":
        """zeta_N^k for any integer k."""
        field = _field(order)
        return cls._raw(order, field.power(k % order), 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    f"mismatched cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._den, o._den
        if d1 == d2:
            return Cyclotomic._make(self.order, [a + b for a, b in zip(self._num, o._num)], d1)
        return Cyclotomic._make(
            self.order, [a * d2 + b * d1 for a, b in zip(self._num, o._num)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._num, o._num
        if not any(a) or not any(b):
            return Cyclotomic.zero(self.order)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        nums = _field(self.order).reduce(prod)
        return Cyclotomic._make(self.order, nums, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Cyclotomic.one(self.order), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        phi = [Fraction(c) for c in _field(self.order).phi]
        a = _trim([Fraction(c, self._den) for c in self._num])
        s = _poly_inverse_mod(a, phi)
        return Cyclotomic(self.order, s)

    def conjugate(self) -> "Cyclotomic":
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        n, field = self.order, _field(self.order)
        out = [0] * field.dim
        for k, c in enumerate(self._num):
            if c:
                row = field.power((-k) % n)
                for j in range(field.dim):
                    out[j] += c * row[j]
        return Cyclotomic._make(n, out, self._den)

    def embed(self, order: int) -> "Cyclotomic":
        """Same number viewed in Q(zeta_M) for a multiple M of the current order."""
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        field = _field(order)
        out = [0] * field.dim
        for k, c in enumerate(self._num):
            if c:
                row = field.power(k * step)
                for j in range(field.dim):
                    out[j] += c * row[j]
        return Cyclotomic._make(order, out, self._den)

    def __complex__(self) -> complex:
        return cyc_to_complex(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.order, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self._num, self._den))
        return self._hash

    def __reduce__(self):
        return (Cyclotomic._raw, (self.order, self._num, self._den))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z{self.order}^{k}")
        return " + ".join(terms) if terms else "0"


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    # invariant: s_i * a == r_i (mod m)
    r0, r1 = list(m), list(a)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is not invertible modulo Phi_N")
    c = r1[0]
    return [x / c for x in s1]


def cyc_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if a.order != b.order:
        raise ValueError(f"mismatched cyclotomic orders {a.order} and {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def cyc_inverse(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def cyc_to_complex(a: Cyclotomic) -> complex:
    n = a.order
    total = 0j
    for k, c in enumerate(a._num):
        if c:
            total += (c / a._den) * cmath.exp(2j * math.pi * k / n)
    return total


class CycPolynomial:
    """Sparse polynomial in a formal variable t with coefficients in Q(zeta_N).

    Zero coefficients are never stored, so the zero polynomial has no terms
    and ``degree`` is ``None``.
    """

    __slots__ = ("order", "terms", "_hash")

    def __init__(self, order: int, terms: dict[int, Cyclotomic] | None = None):
        self.order = order
        clean: dict[int, Cyclotomic] = {}
        for e, c in (terms or {}).items():
            if e < 0:
                raise ValueError("negative exponent")
            if not isinstance(c, Cyclotomic):
                c = Cyclotomic.rational(order, c)
            elif c.order != order:
                raise ValueError("coefficient order does not match polynomial order")
            if c:
                clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, order: int, terms: dict[int, Cyclotomic]) -> "CycPolynomial":
        obj = object.__new__(cls)
        obj.order = order
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value) -> "CycPolynomial":
        if isinstance(value, Cyclotomic):
            return cls._raw(value.order, {0: value} if value else {})
        raise TypeError("use CycPolynomial.monomial for rational constants")

    @classmethod
    def monomial(cls, order: int, exp: int, coeff=1) -> "CycPolynomial":
        if not isinstance(coeff, Cyclotomic):
            coeff = Cyclotomic.rational(order, coeff)
        return cls(order, {exp: coeff})

    @classmethod
    def zero(cls, order: int) -> "CycPolynomial":
        return cls._raw(order, {})

    @classmethod
    def one(cls, order: int) -> "CycPolynomial":
        return cls._raw(order, {0: Cyclotomic.one(order)})

    @property
    def degree(self) -> int | None:
        return max(self.terms) if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> Cyclotomic:
        return self.terms.get(0, Cyclotomic.zero(self.order))

    def _coerce(self, other) -> "CycPolynomial":
        if isinstance(other, CycPolynomial):
            if other.order != self.order:
                raise ValueError(
                    f"mismatched cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError(
                    f"mismatched cyclotomic orders {self.order} and {other.order}"
                )
            return CycPolynomial.constant(other)
        if isinstance(other, (int, Fraction)):
            return CycPolynomial.monomial(self.order, 0, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CycPolynomial._raw(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return CycPolynomial._raw(self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: dict[int, Cyclotomic] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return CycPolynomial._raw(self.order, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = CycPolynomial.one(self.order), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Cyclotomic) -> "CycPolynomial":
        if not c:
            return CycPolynomial.zero(self.order)
        return CycPolynomial._raw(self.order, {e: v * c for e, v in self.terms.items()})

    def shift(self, k: int) -> "CycPolynomial":
        """Multiply by t^k."""
        return CycPolynomial._raw(self.order, {e + k: c for e, c in self.terms.items()})

    def divmod(self, other: "CycPolynomial") -> tuple["CycPolynomial", "CycPolynomial"]:
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        dl = other.degree
        inv_lead = other.terms[dl].inverse()
        rem = dict(self.terms)
        quot: dict[int, Cyclotomic] = {}
        while rem:
            top = max(rem)
            if top < dl:
                break
            c = rem[top] * inv_lead
            k = top - dl
            quot[k] = c
            for e, d in other.terms.items():
                idx = e + k
                v = rem.get(idx)
                v = -(c * d) if v is None else v - c * d
                if v:
                    rem[idx] = v
                else:
                    rem.pop(idx, None)
        return CycPolynomial._raw(self.order, quot), CycPolynomial._raw(self.order, rem)

    def exact_div(self, other: "CycPolynomial") -> "CycPolynomial":
        other = self._coerce(other)
        if len(other.terms) == 1:
            (e, c), = other.terms.items()
            inv = c.inverse()
            out = {}
            for k, v in self.terms.items():
                if k < e:
                    raise ArithmeticError("inexact polynomial division")
                out[k - e] = v * inv
            return CycPolynomial._raw(self.order, out)
        q, r = self.divmod(other)
        if r.terms:
            raise ArithmeticError("inexact polynomial division")
        return q

    def substitute(self, value: Cyclotomic) -> Cyclotomic:
        """Exact evaluation at an element of the same cyclotomic field."""
        total = Cyclotomic.zero(self.order)
        for e, c in self.terms.items():
            total = total + c * value ** e
        return total

    def evaluate(self, t: complex) -> complex:
        return sum((complex(c) * t ** e for e, c in self.terms.items()), 0j)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = self._coerce(other)
        if not isinstance(other, CycPolynomial):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self.terms.items())))
        return self._hash

    def __reduce__(self):
        return (CycPolynomial._raw, (self.order, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            parts.append(f"({c})" if e == 0 else f"({c})*t^{e}")
        return " + ".join(parts)


def _as_poly(entry, order: int | None) -> CycPolynomial:
    if isinstance(entry, CycPolynomial):
        return entry
    if isinstance(entry, Cyclotomic):
        return CycPolynomial.constant(entry)
    if order is None:
        order = 1
    return CycPolynomial.monomial(order, 0, entry)


class ExactMatrix:
    """Dense matrix of ``CycPolynomial`` entries sharing one cyclotomic order."""

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, entries: Sequence[Sequence], order: int | None = None):
        if order is None:
            for row in entries:
                for x in row:
                    if isinstance(x, (Cyclotomic, CycPolynomial)):
                        order = x.order
                        break
                if order is not None:
                    break
        order = order or 1
        rows = tuple(tuple(_as_poly(x, order) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        if any(x.order != order for r in rows for x in r):
            raise ValueError("entries must share one cyclotomic order")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.order = order
        self.entries = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.entries[i][j] for j in cols] for i in rows], self.order)

    def is_constant(self) -> bool:
        return all(x.is_constant() for r in self.entries for x in r)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = CycPolynomial.zero(self.order)
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.order == other.order and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.order, self.entries))

    def to_complex(self, t: complex = 0j):
        import numpy as np

        return np.array([[x.evaluate(t) for x in r] for r in self.entries], dtype=complex)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, order={self.order})"


def _cofactor_det(a: list[list], zero):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = zero
    for j in range(n):
        x = a[0][j]
        if not x:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = x * _cofactor_det(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(a: list[list], one, zero, divide):
    n = len(a)
    a = [list(r) for r in a]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        div = divide(prev)
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j]
                if aik and row_k[j]:
                    num = num - aik * row_k[j]
                row_i[j] = div(num)
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _cyc_divider(prev: Cyclotomic):
    if prev.is_rational() and prev._num[0] == prev._den:  # prev == 1
        return lambda x: x
    inv = prev.inverse()
    return lambda x: x * inv


def _poly_divider(prev: CycPolynomial):
    if len(prev.terms) == 1 and 0 in prev.terms and prev.terms[0] == 1:
        return lambda x: x
    return lambda x: x.exact_div(prev)


def det_exact(m) -> CycPolynomial:
    """Exact determinant of a square matrix over Q(zeta_N)[t].

    Cofactor expansion up to 4x4, fraction-free (Bareiss) elimination above;
    every Bareiss division is checked to be exact.
    """
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    order = m.order
    if m.is_constant():
        a = [[x.constant_term() for x in r] for r in m.entries]
        zero, one = Cyclotomic.zero(order), Cyclotomic.one(order)
        if m.rows <= 4:
            d = _cofactor_det(a, zero)
        else:
            d = _bareiss_det(a, one, zero, _cyc_divider)
        return CycPolynomial.constant(d)
    a = [list(r) for r in m.entries]
    zero, one = CycPolynomial.zero(order), CycPolynomial.one(order)
    if m.rows <= 4:
        return _cofactor_det(a, zero)
    return _bareiss_det(a, one, zero, _poly_divider)


def _int_divider(prev: int):
    def div(x: int) -> int:
        q, r = divmod(x, prev)
        if r:
            raise ArithmeticError("inexact Bareiss division")
        return q
    return div


def det_rational(rows: Sequence[Sequence]) -> int | Fraction:
    """Exact determinant of a square matrix of ints or Fractions.

    Integer input stays in Z (Bareiss with checked division).
    """
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for r in a for x in r):
        return _bareiss_det(a, 1, 0, _int_divider)
    a = [[Fraction(x) for x in r] for r in a]
    return _bareiss_det(a, Fraction(1), Fraction(0), lambda p: (lambda x: x / p))


def rank_exact(m) -> int:
    """Rank over the fraction field of Q(zeta_N)[t] by cross-multiplied elimination."""
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            f = a[i][c]
            if f:
                a[i] = [p * a[i][j] - f * a[rank][j] for j in range(cols)]
        rank += 1
        if rank == rows:
            break
    return rank
