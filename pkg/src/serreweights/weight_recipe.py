"""Conjectural local and global Serre weight sets and the minimal weight k.

For a local weight sigma = (r, w) and a witness (A, delta, lifts):

* reducible case: the pair of niveau-1 exponents
  sum_{j in A} (w_j + r_j + 1 + d_j) p^j + sum_{j not in A} (w_j + e - 1 - d_j) p^j
  and its complement must match {chi1, chi2} mod q - 1 as an unordered pair;
* irreducible case: the niveau-2 exponent
  sum_j p^(j + f l_j) ((q+1) w_j + r_j + 1 + d_j + q (e - 1 - d_j))
  must be phi or phi^q mod q^2 - 1.

Every candidate weight and witness is enumerated; nothing is pruned.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .char_arith import (
    LocalPlace,
    TameCharacter,
    character_from_json,
    conjugate_q,
    make_character,
    place_from_json,
    place_to_json,
)
from .errors import NotIrreducibleError, UnsupportedPlaceError, ValidationError
from .weight_core import SerreWeightLocal, all_weights, jh_sym

REDUCIBLE_SPLIT = "reducible_split"
IRREDUCIBLE = "irreducible"
INDECOMPOSABLE = "indecomposable"
CASES = (REDUCIBLE_SPLIT, IRREDUCIBLE, INDECOMPOSABLE)


@dataclass(frozen=True)
class InertialDatum:
    """Local restriction data of a mod-p representation at one place.

    ``chars`` is (chi1, chi2) for the reducible cases and (phi,) for the
    irreducible case, with phi stored as the smaller of n, n*q.
    """

    place: LocalPlace
    case: str
    chars: tuple[TameCharacter, ...]

    def __post_init__(self):
        if self.case not in CASES:
            raise ValidationError(f"unknown case {self.case!r}")
        if any(c.place != self.place for c in self.chars):
            raise ValidationError("all characters must belong to the datum's place")
        if self.case == IRREDUCIBLE:
            if len(self.chars) != 1:
                raise ValidationError("irreducible datum takes one character")
            phi = self.chars[0]
            if phi.niveau != 2:
                raise NotIrreducibleError(
                    f"phi = psi~^{phi.as_niveau2()} satisfies phi^q = phi; not irreducible"
                )
            other = conjugate_q(phi)
            if other.exponent < phi.exponent:
                object.__setattr__(self, "chars", (other,))
        else:
            if len(self.chars) != 2 or any(c.niveau != 1 for c in self.chars):
                raise ValidationError("reducible data take two niveau-1 characters")

    @property
    def exact(self) -> bool:
        return self.case != INDECOMPOSABLE

    def to_json(self) -> dict:
        out = {"place": place_to_json(self.place), "case": self.case}
        if self.case == IRREDUCIBLE:
            out["phi"] = self.chars[0].to_json()
        else:
            out["chi1"], out["chi2"] = (c.to_json() for c in self.chars)
        return out


def reducible_split(place: LocalPlace, n1: int, n2: int) -> InertialDatum:
    return InertialDatum(place, REDUCIBLE_SPLIT, (make_character(place, 1, n1), make_character(place, 1, n2)))


def indecomposable(place: LocalPlace, n1: int, n2: int) -> InertialDatum:
    return InertialDatum(place, INDECOMPOSABLE, (make_character(place, 1, n1), make_character(place, 1, n2)))


def irreducible(place: LocalPlace, n: int) -> InertialDatum:
    return InertialDatum(place, IRREDUCIBLE, (make_character(place, 2, n),))


def datum_from_json(d: dict) -> InertialDatum:
    try:
        place = place_from_json(d["place"])
        case = d["case"]
        if case == IRREDUCIBLE:
            chars = (character_from_json(place, d["phi"]),)
        else:
            chars = (character_from_json(place, d["chi1"]), character_from_json(place, d["chi2"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad datum record: missing {exc}") from exc
    return InertialDatum(place, case, chars)


@dataclass(frozen=True, order=True)
class WitnessAssignment:
    A: tuple[int, ...]  # membership bits, one per embedding
    delta: tuple[int, ...]
    lifts: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"A": [j for j, b in enumerate(self.A) if b], "delta": list(self.delta)}
        if self.lifts is not None:
            out["lifts"] = list(self.lifts)
        return out


def _witnesses(place: LocalPlace, case: str) -> Iterator[WitnessAssignment]:
    f, e = place.f, place.e
    if case == IRREDUCIBLE:
        for delta in itertools.product(range(e), repeat=f):
            for lifts in itertools.product((0, 1), repeat=f):
                yield WitnessAssignment((0,) * f, delta, lifts)
    else:
        for a in itertools.product((0, 1), repeat=f):
            for delta in itertools.product(range(e), repeat=f):
                yield WitnessAssignment(a, delta, None)


def _reducible_pair(sigma: SerreWeightLocal, wit: WitnessAssignment) -> tuple[int, int]:
    place = sigma.place
    p, e, m = place.p, place.e, place.q - 1
    first = second = 0
    for j in range(place.f):
        big = sigma.w[j] + sigma.r[j] + 1 + wit.delta[j]
        small = sigma.w[j] + e - 1 - wit.delta[j]
        if wit.A[j]:
            first += big * p**j
            second += small * p**j
        else:
            first += small * p**j
            second += big * p**j
    return first % m, second % m


def _irreducible_exponent(sigma: SerreWeightLocal, wit: WitnessAssignment) -> int:
    place = sigma.place
    p, e, f, q = place.p, place.e, place.f, place.q
    total = 0
    for j in range(f):
        d = wit.delta[j]
        inner = (q + 1) * sigma.w[j] + sigma.r[j] + 1 + d + q * (e - 1 - d)
        total += p ** (j + f * wit.lifts[j]) * inner
    return total % (q * q - 1)


def _check_shape(datum: InertialDatum, sigma: SerreWeightLocal, wit: WitnessAssignment) -> None:
    f, e = datum.place.f, datum.place.e
    if sigma.place.p != datum.place.p or sigma.place.f != f:
        raise ValidationError("weight and datum live at different places")
    if len(wit.A) != f or len(wit.delta) != f:
        raise ValidationError("witness vectors must have length f")
    if any(not 0 <= d <= e - 1 for d in wit.delta):
        raise ValidationError("delta entries must lie in [0, e-1]")
    if (wit.lifts is not None) != (datum.case == IRREDUCIBLE):
        raise ValidationError("lifts are present exactly for irreducible data")
    if wit.lifts is not None and (len(wit.lifts) != f or any(b not in (0, 1) for b in wit.lifts)):
        raise ValidationError("lifts must be f bits")


def witness_check(datum: InertialDatum, sigma: SerreWeightLocal, wit: WitnessAssignment) -> bool:
    """Re-evaluate the defining congruence for one (sigma, witness) pair."""
    _check_shape(datum, sigma, wit)
    if datum.case == IRREDUCIBLE:
        phi = datum.chars[0]
        got = make_character(datum.place, 2, _irreducible_exponent(sigma, wit))
        return got == phi or got == conjugate_q(phi)
    a, b = _reducible_pair(sigma, wit)
    target = sorted(c.exponent for c in datum.chars)
    return sorted((a, b)) == target


@dataclass
class LocalWeights:
    datum: InertialDatum
    weights: list[SerreWeightLocal]
    witnesses: list[WitnessAssignment]

    @property
    def exact(self) -> bool:
        return self.datum.exact

    def to_json(self, witnesses: bool = False) -> dict:
        out = {"weights": [s.to_json() for s in self.weights], "exact": self.exact}
        if witnesses:
            out["witnesses"] = [w.to_json() for w in self.witnesses]
        return out


@lru_cache(maxsize=64)
def _evaluations(place: LocalPlace, case: str) -> tuple[tuple[SerreWeightLocal, WitnessAssignment, tuple[int, ...]], ...]:
    """Left-hand side of the defining congruence for every (sigma, witness).

    Reducible cases give the sorted exponent pair mod q-1; the irreducible
    case gives the single exponent mod q^2-1.  Order is sigma-major, then
    witness order, so the first hit per sigma is the least witness.
    """
    irr = case == IRREDUCIBLE
    witness_list = list(_witnesses(place, case))
    out = []
    for sigma in all_weights(place):
        for wit in witness_list:
            if irr:
                value = (_irreducible_exponent(sigma, wit),)
            else:
                value = tuple(sorted(_reducible_pair(sigma, wit)))
            out.append((sigma, wit, value))
    return tuple(out)


def weights_local(datum: InertialDatum) -> LocalWeights:
    """W_v for one datum; indecomposable data get the semisimple superset."""
    if datum.case == IRREDUCIBLE:
        phi = datum.chars[0]
        targets = {(phi.exponent,), (conjugate_q(phi).exponent,)}
    else:
        targets = {tuple(sorted(c.exponent for c in datum.chars))}
    hits: dict[SerreWeightLocal, WitnessAssignment] = {}
    for sigma, wit, value in _evaluations(datum.place, datum.case):
        if value in targets and sigma not in hits:
            hits[sigma] = wit
    weights = sorted(hits, key=SerreWeightLocal.sort_key)
    wits = [hits[s] for s in weights]
    for s, w in zip(weights, wits):
        if not witness_check(datum, s, w):  # independent re-evaluation
            raise AssertionError(f"witness for {s} failed re-evaluation")
    return LocalWeights(datum, weights, wits)


def weight_table(place: LocalPlace, case: str) -> dict[InertialDatum, LocalWeights]:
    """weights_local for every datum of ``case`` at ``place`` in one sweep.

    Data with empty weight sets do not appear.
    """
    found: dict[tuple, dict[SerreWeightLocal, WitnessAssignment]] = defaultdict(dict)
    q = place.q
    for sigma, wit, value in _evaluations(place, case):
        if case == IRREDUCIBLE:
            n = value[0]
            if n % (q + 1) == 0:
                continue
            value = (min(n, n * q % (q * q - 1)),)
        found[value].setdefault(sigma, wit)
    table = {}
    for key, hits in found.items():
        if case == IRREDUCIBLE:
            datum = irreducible(place, key[0])
        else:
            datum = InertialDatum(place, case, tuple(make_character(place, 1, n) for n in key))
        ws = sorted(hits, key=SerreWeightLocal.sort_key)
        table[datum] = LocalWeights(datum, ws, [hits[s] for s in ws])
    return table


def all_data(place: LocalPlace, case: str, ordered: bool = True) -> list[InertialDatum]:
    """Every datum of the given case, in increasing exponent order.

    Irreducible data are listed once per exponent n with (q+1) not dividing n,
    so n and n*q both appear (they give the same canonical datum).
    """
    q = place.q
    if case == IRREDUCIBLE:
        return [irreducible(place, n) for n in range(q * q - 1) if n % (q + 1)]
    pairs = itertools.product(range(q - 1), repeat=2)
    if not ordered:
        pairs = ((a, b) for a, b in pairs if a <= b)
    return [
        InertialDatum(place, case, (make_character(place, 1, a), make_character(place, 1, b)))
        for a, b in pairs
    ]


def _datum_key(datum: InertialDatum) -> InertialDatum:
    if datum.case == IRREDUCIBLE:
        return datum
    a, b = sorted(c.exponent for c in datum.chars)
    return InertialDatum(datum.place, datum.case, (make_character(datum.place, 1, a), make_character(datum.place, 1, b)))


def lookup(table: dict[InertialDatum, LocalWeights], datum: InertialDatum) -> list[SerreWeightLocal]:
    hit = table.get(_datum_key(datum))
    return hit.weights if hit else []


@dataclass(frozen=True)
class GlobalDatum:
    places: tuple[tuple[str, InertialDatum], ...]
    degree: int | None = field(default=None)

    def __post_init__(self):
        if not self.places:
            raise ValidationError("global datum needs at least one place")
        labels = [lab for lab, _ in self.places]
        if len(set(labels)) != len(labels):
            raise ValidationError("place labels must be distinct")
        if len({d.place.p for _, d in self.places}) != 1:
            raise ValidationError("all places must lie over the same prime p")
        if self.degree is not None and self.degree != self.local_degree_sum:
            raise ValidationError(
                f"sum of e*f over places is {self.local_degree_sum}, declared degree {self.degree}"
            )

    @property
    def local_degree_sum(self) -> int:
        return sum(d.place.e * d.place.f for _, d in self.places)


def global_from_json(d: dict) -> GlobalDatum:
    try:
        places = tuple((str(item["label"]), datum_from_json(item)) for item in d["places"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad global datum: {exc}") from exc
    deg = d.get("degree")
    return GlobalDatum(places, None if deg is None else int(deg))


def weights_global(g: GlobalDatum) -> list[tuple[SerreWeightLocal, ...]]:
    local = [weights_local(d).weights for _, d in g.places]
    return sorted(itertools.product(*local), key=lambda t: tuple(s.sort_key() for s in t))


def k_search_bound(p: int) -> int:
    """Largest k needed: det^w Sym^r lies in JH(Sym^(r + w(p+1)))."""
    return 2 + (p - 1) + (p - 2) * (p + 1)


def minimal_weight(datum: InertialDatum) -> int:
    """Serre's k: least k >= 2 with JH(Sym^(k-2)) meeting W_v."""
    place = datum.place
    if place.e * place.f != 1:
        raise UnsupportedPlaceError("minimal weight needs e = f = 1")
    target = set(weights_local(datum).weights)
    for k in range(2, k_search_bound(place.p) + 1):
        if target.intersection(jh_sym(place.p, k - 2)):
            return k
    raise ValidationError("empty weight set; no minimal weight")

