"""Vertices of the Bruhat-Tits tree of PGL_2(Q_p) as cosets G/KZ.

The vertex (n, u) stands for the coset of [[p^n, u], [0, 1]], with u in
Z[1/p] reduced to the interval [0, p^n); this picks one representative of
u mod p^n Z_p.  Matrices are 2x2 tuples of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

from ..errors import ValidationError

Matrix = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def val(x, p: int) -> float | int:
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def mod_p_power(x: Fraction, p: int, k: int) -> int:
    """Residue of the p-integral rational x modulo p^k."""
    m = p**k
    if m == 1:
        return 0
    return x.numerator * pow(x.denominator, -1, m) % m


def mat(a, b, c, d) -> Matrix:
    return ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))


def mul(x: Matrix, y: Matrix) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def det(x: Matrix) -> Fraction:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


def inv(x: Matrix) -> Matrix:
    dt = det(x)
    if dt == 0:
        raise ValidationError("singular matrix")
    (a, b), (c, d) = x
    return ((d / dt, -b / dt), (-c / dt, a / dt))


def scalar(x: Matrix, s) -> Matrix:
    s = Fraction(s)
    return tuple(tuple(s * e for e in row) for row in x)  # type: ignore[return-value]


def in_K(x: Matrix, p: int) -> bool:
    return all(val(e, p) >= 0 for row in x for e in row) and val(det(x), p) == 0


def canonical_u(u: Fraction, n: int, p: int) -> Fraction:
    u = Fraction(u)
    if u == 0:
        return Fraction(0)
    k = max(0, -val(u, p), -n)
    return Fraction(mod_p_power(u * p**k, p, n + k), p**k)


@dataclass(frozen=True, order=True)
class TreeVertex:
    p: int
    n: int
    u: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        if canonical_u(self.u, self.n, self.p) != self.u:
            raise ValidationError(f"u = {self.u} is not reduced modulo p^{self.n}")

    @classmethod
    def base(cls, p: int) -> TreeVertex:
        return cls(p, 0, Fraction(0))

    def matrix(self) -> Matrix:
        return mat(Fraction(self.p) ** self.n, self.u, 0, 1)

    @property
    def radius(self) -> int:
        """Distance to the base vertex."""
        a = min(self.n, val(self.u, self.p), 0)
        return int(self.n - 2 * a)

    def neighbors(self) -> list[TreeVertex]:
        return [coset_normal_form(mul(self.matrix(), b), self.p)[0] for b in hecke_coset_reps(self.p)]

    def __repr__(self):
        return f"V({self.n}, {self.u})"


def hecke_coset_reps(p: int) -> list[Matrix]:
    """The p + 1 cosets beta KZ in KZ diag(1, p) KZ: [[p, mu], [0, 1]] and diag(1, p)."""
    return [mat(p, mu, 0, 1) for mu in range(p)] + [mat(1, 0, 0, p)]


def coset_normal_form(g: Matrix, p: int) -> tuple[TreeVertex, Matrix, int]:
    """Write g = h * kappa * p^s with h a vertex representative and kappa in K."""
    g = tuple(tuple(Fraction(e) for e in row) for row in g)  # type: ignore[assignment]
    if det(g) == 0:
        raise ValidationError("coset_normal_form needs an invertible matrix")
    (a, b), (c, d) = g
    if val(d, p) <= val(c, p):
        x = c / d
        a1, b1, d1 = a - b * x, b, d
    else:
        x = d / c
        a1, b1, d1 = b - a * x, a, c
    s, t = val(d1, p), val(a1, p)
    n = int(t - s)
    vertex = TreeVertex(p, n, canonical_u(b1 / d1, n, p))
    kappa = scalar(mul(inv(vertex.matrix()), g), Fraction(p) ** -int(s))
    assert in_K(kappa, p), (g, kappa)
    return vertex, kappa, int(s)


def ball(p: int, radius: int) -> list[TreeVertex]:
    """Vertices within ``radius`` of the base, in breadth-first order."""
    base = TreeVertex.base(p)
    seen = {base}
    order = [base]
    frontier = [base]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for w in v.neighbors():
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    return order
