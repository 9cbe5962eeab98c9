"""Exact arithmetic in Z[zeta_N] = Z[x] / Phi_N(x)."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Mapping

from sympy import cyclotomic_poly, totient
from sympy.abc import x as _x

from .errors import ValidationError


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    coeffs = cyclotomic_poly(n, _x, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for k in [0, n)."""
    phi = cyclotomic_coefficients(n)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1) if d > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [c - top * m for c, m in zip(cur, phi[:-1])]
    return tuple(rows)


class CyclotomicInt:
    """An element of Z[zeta_N] as a reduced coefficient vector."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = tuple(int(c) for c in coeffs)
        if len(self.coeffs) != int(totient(n)):
            raise ValidationError("coefficient vector has wrong length")

    @classmethod
    def from_powers(cls, n: int, counts: Mapping[int, int]) -> CyclotomicInt:
        """sum_k counts[k] * zeta^k, exponents taken mod n."""
        table = _power_table(n)
        acc = [0] * len(table[0])
        for k, c in counts.items():
            if c:
                for i, t in enumerate(table[k % n]):
                    if t:
                        acc[i] += c * t
        return cls(n, acc)

    @classmethod
    def integer(cls, n: int, value: int) -> CyclotomicInt:
        return cls.from_powers(n, {0: value})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CyclotomicInt:
        return cls.from_powers(n, {k: 1})

    def _check(self, other: CyclotomicInt) -> None:
        if self.n != other.n:
            raise ValidationError("cyclotomic orders differ")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.n, other)
        self._check(other)
        return CyclotomicInt(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.n, [other * a for a in self.coeffs])
        self._check(other)
        prod: Counter = Counter()
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicInt.from_powers(self.n, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.n, other)
        return isinstance(other, CyclotomicInt) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def reduce_mod(self, ell: int, root: int) -> int:
        """Image under x -> root in F_ell (root a primitive N-th root of unity)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * root + c) % ell
        return acc

    def __repr__(self):
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"CyclotomicInt[{self.n}]({' + '.join(terms) or '0'})"
