"""Serre weights of GL_2(F_q), Jordan-Hoelder multisets and a Brauer-character oracle.

A local Serre weight is det^w (x) Sym^r twisted over the embeddings
tau_0, ..., tau_{f-1}; it is stored with digit vectors ``r`` and ``w``.  Only
the w-character sum_j w_j p^j mod (q - 1) matters, and the canonical digit
vector of the zero residue is all zeros.

Brauer characters take values in Z[zeta_N], N = q^2 - 1: an eigenvalue
g^a in F_{q^2}^* (g the fixed generator from :mod:`finite_field`) lifts to
zeta^a.  Decomposition inverts the square table of irreducible Brauer
characters.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from sympy import nextprime, primefactors

from .char_arith import LocalPlace, TameCharacter
from .cyclotomic import CyclotomicInt
from .errors import DecompositionError, UnsupportedPlaceError, ValidationError
from .finite_field import field


@dataclass(frozen=True)
class SerreWeightLocal:
    place: LocalPlace
    r: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self):
        p, f = self.place.p, self.place.f
        if len(self.r) != f or len(self.w) != f:
            raise ValidationError(f"weight vectors must have length f = {f}")
        if any(not 0 <= x <= p - 1 for x in self.r + self.w):
            raise ValidationError(f"weight digits must lie in [0, {p - 1}]")
        if all(x == p - 1 for x in self.w):
            raise ValidationError("w digits may not all equal p - 1")

    @property
    def w_exponent(self) -> int:
        return sum(x * self.place.p**j for j, x in enumerate(self.w)) % (self.place.q - 1)

    @property
    def r_exponent(self) -> int:
        return sum(x * self.place.p**j for j, x in enumerate(self.r))

    @property
    def dim(self) -> int:
        d = 1
        for x in self.r:
            d *= x + 1
        return d

    def sort_key(self) -> tuple:
        return (self.r, self.w_exponent)

    def __lt__(self, other: SerreWeightLocal) -> bool:
        return self.sort_key() < other.sort_key()

    def twist(self, n: int) -> SerreWeightLocal:
        """det^n (x) self."""
        return canonicalize_weight(self.place, self.r, self.w_exponent + n)

    def label(self) -> str:
        if self.place.f == 1:
            w, r = self.w[0], self.r[0]
            sym = f"Sym^{r}"
            return sym if w == 0 else (f"det*{sym}" if w == 1 else f"det^{w}*{sym}")
        sym = "Sym^(" + ",".join(map(str, self.r)) + ")"
        if not any(self.w):
            return sym
        return "det^(" + ",".join(map(str, self.w)) + ")*" + sym

    def to_json(self) -> dict:
        return {"r": list(self.r), "w": list(self.w)}

    def __repr__(self):
        return f"SerreWeightLocal({self.label()}, p={self.place.p})"


def canonicalize_weight(place: LocalPlace, r: Iterable[int], w_exponent: int) -> SerreWeightLocal:
    r = tuple(int(x) for x in r)
    if len(r) != place.f:
        raise ValidationError(f"r must have length f = {place.f}")
    if any(not 0 <= x <= place.p - 1 for x in r):
        raise ValidationError(f"r digits must lie in [0, {place.p - 1}]")
    n = w_exponent % (place.q - 1)
    w = []
    for _ in range(place.f):
        n, d = divmod(n, place.p)
        w.append(d)
    return SerreWeightLocal(place, r, tuple(w))


def weight_from_json(place: LocalPlace, d: Mapping) -> SerreWeightLocal:
    try:
        r, w = list(d["r"]), list(d["w"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad weight record {d!r}") from exc
    if len(w) != place.f:
        raise ValidationError(f"w must have length f = {place.f}")
    return canonicalize_weight(place, r, sum(x * place.p**j for j, x in enumerate(w)))


def all_weights(place: LocalPlace) -> list[SerreWeightLocal]:
    """All q(q - 1) local Serre weights in canonical sort order."""
    out = [
        canonicalize_weight(place, r, n)
        for r in itertools.product(range(place.p), repeat=place.f)
        for n in range(place.q - 1)
    ]
    return sorted(out, key=SerreWeightLocal.sort_key)


class WeightMultiset(Mapping):
    """Weights with non-zero integer multiplicities.

    Negative multiplicities only arise from decomposing virtual characters;
    ``virtual`` flags them.
    """

    def __init__(self, items: Mapping[SerreWeightLocal, int] | Iterable[SerreWeightLocal] = ()):
        counts: Counter = Counter()
        if isinstance(items, Mapping):
            for k, v in items.items():
                counts[k] += v
        else:
            for k in items:
                counts[k] += 1
        self._d = {k: counts[k] for k in sorted(counts, key=SerreWeightLocal.sort_key) if counts[k]}

    def __getitem__(self, k):
        return self._d[k]

    def __iter__(self) -> Iterator[SerreWeightLocal]:
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return dict(self._d) == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __add__(self, other: WeightMultiset) -> WeightMultiset:
        c = Counter(self._d)
        c.update(other)
        return WeightMultiset(dict(c))

    @property
    def virtual(self) -> bool:
        return any(v < 0 for v in self._d.values())

    @property
    def dim(self) -> int:
        return sum(m * s.dim for s, m in self._d.items())

    def twist(self, n: int) -> WeightMultiset:
        return WeightMultiset({s.twist(n): m for s, m in self._d.items()})

    def to_json(self) -> list[dict]:
        return [{"weight": s.to_json(), "mult": m} for s, m in self._d.items()]

    def __repr__(self):
        return "{" + ", ".join(f"{s.label()}: {m}" for s, m in self._d.items()) + "}"


def involution_prime(sigma: SerreWeightLocal) -> SerreWeightLocal:
    """sigma' = det^(w+r) (x) Sym^(p-1-r) for GL_2(F_p) weights."""
    if sigma.place.f != 1:
        raise UnsupportedPlaceError("sigma' is only defined for f = 1")
    p = sigma.place.p
    r = sigma.r[0]
    return canonicalize_weight(sigma.place, (p - 1 - r,), sigma.w_exponent + r)


def jh_sym(p: int, m: int) -> WeightMultiset:
    """Jordan-Hoelder constituents of Sym^m over F_p, with multiplicity.

    Unfolds Sym^m = det (x) Sym^(m-p-1) + Sym^r + det^r (x) Sym^(p-1-r)
    (r = m mod p-1 in [0, p-2]) until the degree drops to at most p - 1.
    """
    if m < 0:
        raise ValidationError("m must be >= 0")
    place = LocalPlace(p, 1, 1)
    counts: Counter = Counter()
    twist = 0
    while m > p - 1:
        r = m % (p - 1)
        counts[canonicalize_weight(place, (r,), twist)] += 1
        counts[canonicalize_weight(place, (p - 1 - r,), twist + r)] += 1
        m -= p + 1
        twist += 1
    if m >= 0:
        counts[canonicalize_weight(place, (m,), twist)] += 1
    return WeightMultiset(dict(counts))


# ---------------------------------------------------------------------------
# p-regular classes of GL_2(F_q) and class functions


@dataclass(frozen=True)
class ConjugacyClass:
    kind: str  # "z" central, "s" split, "e" elliptic
    elements: tuple[int, ...]  # field elements (encoded in F_{q^2})
    eigen: tuple[int, int]  # discrete logs of the eigenvalue pair

    def label(self) -> str:
        return f"{self.kind}({','.join(map(str, self.elements))})"


@lru_cache(maxsize=None)
def conjugacy_classes(p: int, f: int) -> tuple[ConjugacyClass, ...]:
    """Canonical list of the q^2 - q p-regular classes of GL_2(F_q).

    Elements of F_q are given by their encoding in F_{q^2}; for prime q the
    encoding of a residue is the residue itself.
    """
    q = p**f
    F = field(p, 2 * f)
    n = q * q - 1
    fq = sorted(F.exp[(q + 1) * a] for a in range(q - 1))
    classes = [ConjugacyClass("z", (x,), (F.log[x], F.log[x])) for x in fq]
    for x, y in itertools.combinations(fq, 2):
        classes.append(ConjugacyClass("s", (x, y), (F.log[x], F.log[y])))
    seen = set()
    for k in range(n):
        if k % (q + 1) == 0:
            continue
        kk = min(F.exp[k], F.exp[k * q % n])
        if kk in seen:
            continue
        seen.add(kk)
        classes.append(ConjugacyClass("e", (kk,), (F.log[kk], F.log[kk] * q % n)))
    classes.sort(key=lambda c: ("zse".index(c.kind), c.elements))
    assert len(classes) == q * q - q
    return tuple(classes)


@dataclass(frozen=True)
class ClassFunction:
    place: LocalPlace
    values: tuple[CyclotomicInt, ...]

    @property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return conjugacy_classes(self.place.p, self.place.f)

    def at(self, kind: str, *elements: int) -> CyclotomicInt:
        key = tuple(sorted(elements)) if kind == "s" else elements
        for c, v in zip(self.classes, self.values):
            if c.kind == kind and c.elements == key:
                return v
        if kind == "e":
            # elliptic classes are stored under the smaller of zeta, zeta^q
            F = field(self.place.p, 2 * self.place.f)
            conj = F.power(elements[0], self.place.q)
            return self.at("e", conj) if conj != elements[0] else _missing(kind, elements)
        return _missing(kind, elements)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(self.place, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(self.place, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, k: int) -> ClassFunction:
        return ClassFunction(self.place, tuple(k * a for a in self.values))


def _missing(kind, elements):
    raise ValidationError(f"no p-regular class {kind}{elements}")


def _class_function(place: LocalPlace, value_powers) -> ClassFunction:
    n = place.q**2 - 1
    classes = conjugacy_classes(place.p, place.f)
    return ClassFunction(
        place, tuple(CyclotomicInt.from_powers(n, value_powers(c.eigen)) for c in classes)
    )


def _embedding_sums(place: LocalPlace, eigen, rs, ws) -> Counter:
    """Exponent counts of prod_j (XY)^(p^j w_j) sum_i X^(p^j i) Y^(p^j (r_j - i))."""
    p = place.p
    n = place.q**2 - 1
    a, b = eigen
    acc: Counter = Counter({0: 1})
    for j, (r, w) in enumerate(zip(rs, ws)):
        pj = p**j
        factor = [(pj * (w * (a + b) + i * a + (r - i) * b)) % n for i in range(r + 1)]
        nxt: Counter = Counter()
        for e0, c in acc.items():
            for e1 in factor:
                nxt[(e0 + e1) % n] += c
        acc = nxt
    return acc


def brauer_character(sigma: SerreWeightLocal) -> ClassFunction:
    return _brauer_cached(sigma.place, sigma.r, sigma.w)


@lru_cache(maxsize=None)
def _brauer_cached(place, r, w) -> ClassFunction:
    return _class_function(place, lambda eig: _embedding_sums(place, eig, r, w))


def sym_power_character(p: int, m: int) -> ClassFunction:
    """Brauer character of Sym^m F_p^2 (not reduced to weights)."""
    if m < 0:
        raise ValidationError("m must be >= 0")
    place = LocalPlace(p, 1, 1)
    return _class_function(place, lambda eig: _embedding_sums(place, eig, (m,), (0,)))


def _teich(chi: TameCharacter, log_x: int) -> int:
    # x = g^log_x in F_q^*, chi(x) = x^exponent
    return log_x * chi.exponent


def induced_ps_character(theta: tuple[TameCharacter, TameCharacter]) -> ClassFunction:
    """Brauer character of Ind_B^G (chi1 (x) chi2)."""
    chi1, chi2 = theta
    if chi1.place != chi2.place:
        raise ValidationError("principal-series characters must share a place")
    if chi1.niveau != 1 or chi2.niveau != 1:
        raise ValidationError("principal-series characters must have niveau 1")
    place = chi1.place
    q = place.q

    def values(eig):
        a, b = eig
        if a == b:
            return {_teich(chi1, a) + _teich(chi2, a): q + 1}
        if a % (q + 1) == 0 and b % (q + 1) == 0:
            c: Counter = Counter()
            c[_teich(chi1, a) + _teich(chi2, b)] += 1
            c[_teich(chi1, b) + _teich(chi2, a)] += 1
            return c
        return {}

    return _class_function(place, values)


# ---------------------------------------------------------------------------
# decomposition


@lru_cache(maxsize=None)
def _solver(p: int, f: int):
    """Irreducible weights, and the inverse of their character table mod ell.

    ell is a prime = 1 mod N, so x -> (primitive N-th root mod ell) is a
    ring map Z[zeta_N] -> F_ell.
    """
    place = LocalPlace(p, 1, f)
    weights = all_weights(place)
    n = place.q**2 - 1
    ell = 2**61
    while True:
        ell = nextprime(ell)
        if (ell - 1) % n:
            continue
        root = _primitive_root_of_unity(ell, n)
        table = [[brauer_character(s).values[i].reduce_mod(ell, root) for s in weights]
                 for i in range(len(weights))]
        inv = _inverse_mod(table, ell)
        if inv is not None:
            return weights, ell, root, inv


def _primitive_root_of_unity(ell: int, n: int) -> int:
    ps = primefactors(n)
    for h in itertools.count(2):
        z = pow(h, (ell - 1) // n, ell)
        if all(pow(z, n // t, ell) != 1 for t in ps):
            return z
    raise AssertionError


def _inverse_mod(rows: list[list[int]], ell: int):
    k = len(rows)
    a = [row[:] + [int(i == j) for j in range(k)] for i, row in enumerate(rows)]
    for col in range(k):
        piv = next((i for i in range(col, k) if a[i][col] % ell), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, ell)
        a[col] = [x * inv % ell for x in a[col]]
        for i in range(k):
            if i != col and a[i][col]:
                m = a[i][col]
                a[i] = [(x - m * y) % ell for x, y in zip(a[i], a[col])]
    return [row[k:] for row in a]


def decompose_brauer(c: ClassFunction) -> WeightMultiset:
    """Unique integer combination of irreducible Brauer characters equal to ``c``.

    The coefficients are solved modulo a large prime, lifted to the symmetric
    range, and then the identity is checked exactly in Z[zeta_N]; failure
    of that check means ``c`` is not in the lattice of Brauer characters.
    """
    place = c.place
    weights, ell, root, inv = _solver(place.p, place.f)
    rhs = [v.reduce_mod(ell, root) for v in c.values]
    coeffs = []
    for row in inv:
        m = sum(a * b for a, b in zip(row, rhs)) % ell
        coeffs.append(m - ell if m > ell // 2 else m)
    total = [CyclotomicInt.integer(v.n, 0) for v in c.values]
    for s, m in zip(weights, coeffs):
        if m:
            total = [t + m * v for t, v in zip(total, brauer_character(s).values)]
    if tuple(total) != c.values:
        raise DecompositionError("class function is not an integral combination of Brauer characters")
    return WeightMultiset(
        {canonicalize_weight(place, s.r, s.w_exponent): m for s, m in zip(weights, coeffs) if m}
    )


def jh_principal_series(theta: tuple[TameCharacter, TameCharacter]) -> WeightMultiset:
    ms = decompose_brauer(induced_ps_character(theta))
    if ms.virtual:
        raise DecompositionError("principal series decomposed with negative multiplicity")
    return ms


def multiset_from_json(place: LocalPlace, items: list) -> WeightMultiset:
    try:
        return WeightMultiset({weight_from_json(place, it["weight"]): int(it["mult"]) for it in items})
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad multiset record {items!r}") from exc


def describe_generator(p: int, f: int) -> dict:
    """Metadata recording the fixed generator of F_{q^2}^*."""
    F = field(p, 2 * f)
    return {"field": f"F_{p}^{2 * f}", "modulus": F.modulus_coefficients(), "generator": "x"}
