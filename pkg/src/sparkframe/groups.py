"""Semidirect products Z_N x| H, their induced representations, and
spark-deficiency verdicts for those representations.

The group law is (x, a)(y, b) = (x + a*y, a*b) with H a subgroup of the
units mod N.  The representation induced from the character
chi_xi(x) = zeta_N^(xi*x) acts on l^2(H) by

    pi(x, s) f(h) = zeta_N^(xi * h^-1 * x) f(s^-1 h),

so the normal part acts diagonally and {0} x| H acts by permuting
coordinates.  Coordinates are indexed by a fixed enumeration of H that is
recorded on every representation; for cyclic H it is the list of powers of
the smallest generator, which turns pi(0, a^k) into the k-th power of the
cyclic shift (Tf)_j = f_{j-1}.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .exactalg import Cyclotomic, CycPolynomial, ExactMatrix

__all__ = [
    "UnitSubgroup",
    "SemidirectGroup",
    "GroupElement",
    "InducedRep",
    "Verdict",
    "Rule",
    "DeficiencyVerdict",
    "group_multiply",
    "group_inverse",
    "center",
    "character_stabilizer",
    "induced_rep",
    "rep_matrix",
    "rep_is_faithful",
    "deficiency_verdict",
    "repeated_eigenvalue_deficiency",
    "smallest_prime_factor",
    "is_prime",
]


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_factor(n) == n


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = smallest_prime_factor(n)
    k, m = 0, n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def _mult_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


@dataclass(frozen=True)
class UnitSubgroup:
    """A subgroup H of the multiplicative units mod N."""

    modulus: int
    elements: tuple[int, ...]

    def __init__(self, modulus: int, elements: Sequence[int]):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        elems = tuple(sorted({e % modulus for e in elements})) if modulus > 1 else (0,)
        if not elems:
            raise ValueError("a subgroup must contain 1")
        for e in elems:
            if math.gcd(e, modulus) != 1:
                raise ValueError(f"{e} is not coprime to {modulus}")
        if 1 % modulus not in elems:
            raise ValueError("a subgroup must contain 1")
        s = set(elems)
        for a in elems:
            for b in elems:
                if a * b % modulus not in s:
                    raise ValueError(
                        f"{{{', '.join(map(str, elems))}}} is not closed under multiplication mod {modulus}"
                    )
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "elements", elems)

    @classmethod
    def full(cls, modulus: int) -> "UnitSubgroup":
        return cls(modulus, [a for a in range(1, max(modulus, 2)) if math.gcd(a, modulus) == 1])

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a % self.modulus in self.elements

    def inverse(self, a: int) -> int:
        return pow(a, -1, self.modulus) if self.modulus > 1 else 0

    def generator(self) -> int | None:
        """Smallest generator if H is cyclic, else None."""
        n = len(self.elements)
        for a in self.elements:
            if _mult_order(a, self.modulus) == n:
                return a
        return None

    def is_cyclic(self) -> bool:
        return self.generator() is not None

    def enumeration(self) -> tuple[int, ...]:
        """Powers of the smallest generator for cyclic H, sorted order otherwise."""
        g = self.generator()
        if g is None:
            return self.elements
        out, x = [], 1 % self.modulus
        for _ in range(len(self.elements)):
            out.append(x)
            x = x * g % self.modulus
        return tuple(out)


class GroupElement(NamedTuple):
    x: int
    a: int


@dataclass(frozen=True)
class SemidirectGroup:
    n: int
    h: UnitSubgroup

    def __post_init__(self):
        if self.h.modulus != self.n:
            raise ValueError("subgroup modulus must equal n")

    @classmethod
    def of(cls, n: int, subgroup: Sequence[int] | None = None) -> "SemidirectGroup":
        h = UnitSubgroup.full(n) if subgroup is None else UnitSubgroup(n, subgroup)
        return cls(n, h)

    @property
    def order(self) -> int:
        return self.n * len(self.h)

    def identity(self) -> GroupElement:
        return GroupElement(0, 1 % self.n)

    def elements(self) -> list[GroupElement]:
        """All elements, ordered by x and then by the subgroup enumeration."""
        return [GroupElement(x, a) for x in range(self.n) for a in self.h.enumeration()]

    def check(self, g) -> GroupElement:
        g = GroupElement(*g)
        if not (0 <= g.x < self.n) or g.a not in self.h.elements:
            raise ValueError(f"{tuple(g)} is not an element of Z_{self.n} x| {self.h.elements}")
        return g

    def multiply(self, g, h) -> GroupElement:
        g, h = self.check(g), self.check(h)
        return GroupElement((g.x + g.a * h.x) % self.n, g.a * h.a % self.n)

    def inverse(self, g) -> GroupElement:
        g = self.check(g)
        ai = self.h.inverse(g.a)
        return GroupElement((-ai * g.x) % self.n, ai)

    def __str__(self) -> str:
        return f"Z_{self.n} x| {{{','.join(map(str, self.h.elements))}}}"


def group_multiply(group: SemidirectGroup, g, h) -> GroupElement:
    return group.multiply(g, h)


def group_inverse(group: SemidirectGroup, g) -> GroupElement:
    return group.inverse(g)


def center(group: SemidirectGroup) -> list[GroupElement]:
    """Central elements.

    For N > 1 a central (x, a) must have a = 1 (take b = 1 in the
    commutation relation) and then (h - 1) x = 0 mod N for every h in H.
    """
    n = group.n
    if n == 1:
        return group.elements()
    return [
        GroupElement(x, 1)
        for x in range(n)
        if all((h - 1) * x % n == 0 for h in group.h.elements)
    ]


def character_stabilizer(group: SemidirectGroup, m: int) -> UnitSubgroup:
    n = group.n
    return UnitSubgroup(n, [h for h in group.h.elements if (h * m - m) % n == 0])


@dataclass(frozen=True)
class InducedRep:
    """Representation of Z_N x| H induced from the character chi_xi of Z_N."""

    group: SemidirectGroup
    xi: int
    h_order: tuple[int, ...]
    irreducible: bool = field(compare=False)

    @property
    def dim(self) -> int:
        return len(self.h_order)

    @property
    def n(self) -> int:
        return self.group.n

    def diagonal_exponents(self, x: int) -> list[int]:
        """Exponents e_j with pi(x, 1) = diag(zeta_N^e_j)."""
        n, h = self.group.n, self.group.h
        return [self.xi * h.inverse(hj) * x % n for hj in self.h_order]

    def permutation(self, s: int) -> list[int]:
        """perm with (pi(0, s) f)_j = f_{perm[j]}, i.e. h_perm[j] = s^-1 h_j."""
        n, h = self.group.n, self.group.h
        pos = {hj: j for j, hj in enumerate(self.h_order)}
        si = h.inverse(s)
        return [pos[si * hj % n] for hj in self.h_order]

    def modulation_matrix(self) -> ExactMatrix:
        """The dim x N matrix whose columns are the diagonals of pi(x, 1)."""
        n = self.group.n
        rows = [[Cyclotomic.zeta(n, 0)] * n for _ in range(self.dim)]
        for x in range(n):
            for j, e in enumerate(self.diagonal_exponents(x)):
                rows[j][x] = Cyclotomic.zeta(n, e)
        return ExactMatrix(rows, n)

    def numeric_matrix(self, g) -> np.ndarray:
        g = self.group.check(g)
        n = self.group.n
        out = np.zeros((self.dim, self.dim), dtype=complex)
        exps = self.diagonal_exponents(g.x)
        for j, src in enumerate(self.permutation(g.a)):
            out[j, src] = np.exp(2j * np.pi * exps[j] / n)
        return out


def induced_rep(group: SemidirectGroup, xi: int) -> InducedRep:
    xi %= group.n
    stab = character_stabilizer(group, xi)
    return InducedRep(group, xi, group.h.enumeration(), irreducible=len(stab) == 1)


def rep_matrix(rep: InducedRep, g) -> ExactMatrix:
    g = rep.group.check(g)
    n, d = rep.group.n, rep.dim
    zero = Cyclotomic.zero(n)
    rows = [[zero] * d for _ in range(d)]
    exps = rep.diagonal_exponents(g.x)
    for j, src in enumerate(rep.permutation(g.a)):
        rows[j][src] = Cyclotomic.zeta(n, exps[j])
    return ExactMatrix(rows, n)


def rep_is_faithful(rep: InducedRep) -> bool:
    """Kernel is trivial iff gcd(xi, N) = 1.

    A permutation h -> s^-1 h with s != 1 has no fixed point, so kernel
    elements have s = 1, and then xi*h^-1*x = 0 mod N for all h forces
    xi*x = 0 mod N.
    """
    return math.gcd(rep.xi, rep.group.n) == 1


class Verdict(str, enum.Enum):
    DEFICIENT = "Deficient"
    FULL_SPARK = "FullSpark"
    FULL_SPARK_CONSTRUCTIBLE = "FullSparkConstructible"
    UNKNOWN = "Unknown"


class Rule(str, enum.Enum):
    CHARACTER = "character"
    PRIME_MODULUS = "prime-modulus"
    NOT_FAITHFUL = "not-faithful"
    SUBGROUP_TOO_LARGE = "subgroup-order-at-least-smallest-prime"
    NONCYCLIC_SUBGROUP = "noncyclic-subgroup"
    PRIME_POWER_SEPARATED = "prime-power-separated-subgroup"
    NONE = "none"


_CITATIONS = {
    Rule.CHARACTER: "one-dimensional orbit: every nonzero scalar multiple spans C^1",
    Rule.PRIME_MODULUS: "N prime: Z_N x| H is irreducibly full spark",
    Rule.NOT_FAITHFUL: "representation is not faithful: pi(e) - pi(x) = 0 for a kernel element x",
    Rule.SUBGROUP_TOO_LARGE: "N composite and |H| >= smallest prime divisor p: m*H is not uniformly distributed mod p",
    Rule.NONCYCLIC_SUBGROUP: "H non-cyclic: reduction of H mod some prime factor is not injective",
    Rule.PRIME_POWER_SEPARATED: "N = p^n, |H| < p, elements of H pairwise incongruent mod p: every minor of the modulation matrix is nonzero",
    Rule.NONE: "no criterion applies",
}


@dataclass(frozen=True)
class DeficiencyVerdict:
    verdict: Verdict
    rule: Rule
    reason: str

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "rule": self.rule.value, "reason": self.reason}


def _verdict(v: Verdict, rule: Rule) -> DeficiencyVerdict:
    return DeficiencyVerdict(v, rule, _CITATIONS[rule])


def deficiency_verdict(group: SemidirectGroup, xi: int) -> DeficiencyVerdict:
    n, h = group.n, group.h
    xi %= n
    if len(h) == 1:
        return _verdict(Verdict.FULL_SPARK, Rule.CHARACTER)
    if is_prime(n) and xi != 0:
        return _verdict(Verdict.FULL_SPARK, Rule.PRIME_MODULUS)
    if math.gcd(xi, n) > 1:
        return _verdict(Verdict.DEFICIENT, Rule.NOT_FAITHFUL)
    if len(h) >= smallest_prime_factor(n):
        return _verdict(Verdict.DEFICIENT, Rule.SUBGROUP_TOO_LARGE)
    if not h.is_cyclic():
        return _verdict(Verdict.DEFICIENT, Rule.NONCYCLIC_SUBGROUP)
    pp = _prime_power(n)
    if pp is not None:
        p = pp[0]
        residues = {a % p for a in h.elements}
        if len(h) < p and len(residues) == len(h):
            return _verdict(Verdict.FULL_SPARK_CONSTRUCTIBLE, Rule.PRIME_POWER_SEPARATED)
    return _verdict(Verdict.UNKNOWN, Rule.NONE)


def repeated_eigenvalue_deficiency(diag_exponents: Sequence[int], order: int, dim: int) -> bool:
    """True when a generator of order >= dim has a repeated eigenvalue.

    ``diag_exponents`` are the exponents of zeta_order on the diagonal of
    the generator's (diagonalized) matrix.
    """
    if order < dim:
        return False
    residues = [e % order for e in diag_exponents]
    return len(set(residues)) < len(residues)
