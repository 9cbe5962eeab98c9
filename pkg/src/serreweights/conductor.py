"""Artin conductor exponents, the prime-to-p level, and U_1(v^a) descriptors.

The filtration is supplied directly as (|G_i|, dim V^{G_i}) for i = 0, 1, ...;
after the listed entries G_i is trivial.  The exponent is

    a_v = sum_i (dim V - dim V^{G_i}) / [G_0 : G_i].

The sum over i >= 0 (weight 1 at i = 0) equals the tame part dim V / V^{G_0}
plus the Swan conductor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralConductorError, ValidationError


@dataclass(frozen=True)
class RamificationFiltration:
    dim: int
    groups: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple((int(o), int(x)) for o, x in self.groups))
        if self.dim < 0:
            raise ValidationError("dim must be non-negative")
        if not self.groups:
            raise ValidationError("filtration needs at least G_0")
        prev_order, prev_fix = None, -1
        for i, (order, fix) in enumerate(self.groups):
            if order < 1:
                raise ValidationError(f"|G_{i}| must be >= 1")
            if not 0 <= fix <= self.dim:
                raise ValidationError(f"dim V^G_{i} must lie in [0, {self.dim}]")
            if prev_order is not None and prev_order % order:
                raise ValidationError(f"|G_{i}| = {order} does not divide |G_{i-1}| = {prev_order}")
            if fix < prev_fix:
                raise ValidationError("fixed-space dimensions must be weakly increasing")
            if order == 1 and fix != self.dim:
                raise ValidationError(f"G_{i} is trivial but fixes only {fix} of {self.dim} dimensions")
            prev_order, prev_fix = order, fix

    def to_json(self) -> dict:
        return {"dim": self.dim, "groups": [list(g) for g in self.groups]}


def filtration_from_json(d: dict) -> RamificationFiltration:
    try:
        return RamificationFiltration(int(d["dim"]), tuple(tuple(g) for g in d["groups"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad filtration record {d!r}") from exc


@dataclass(frozen=True)
class ConductorReport:
    a_v: int
    terms: tuple[Fraction, ...]
    place_label: str = ""

    def to_json(self) -> dict:
        return {"place": self.place_label, "a_v": self.a_v, "terms": [str(t) for t in self.terms]}


def conductor_terms(filt: RamificationFiltration) -> tuple[Fraction, ...]:
    g0 = filt.groups[0][0]
    return tuple(Fraction(order, g0) * (filt.dim - fix) for order, fix in filt.groups)


def artin_sum(filt: RamificationFiltration) -> Fraction:
    """The exact rational sum, without the integrality check."""
    return sum(conductor_terms(filt), Fraction(0))


def conductor_exponent(filt: RamificationFiltration, place_label: str = "") -> ConductorReport:
    terms = conductor_terms(filt)
    total = sum(terms, Fraction(0))
    if total.denominator != 1:
        raise NonIntegralConductorError(
            f"conductor sum {total} is not an integer; filtration data are inconsistent"
        )
    return ConductorReport(int(total), terms, place_label)


@dataclass(frozen=True)
class LevelEntry:
    place: str
    norm: int
    residue_char: int
    filtration: RamificationFiltration


@dataclass(frozen=True)
class Level:
    factors: tuple[tuple[str, int], ...]
    norm: int = 1

    def to_json(self) -> dict:
        return {
            "factors": [{"place": lab, "exponent": a} for lab, a in self.factors],
            "norm": self.norm,
        }


def level(entries: list[LevelEntry], p: int) -> Level:
    """Prime-to-p part of the Artin conductor, as (place, a_v) factors and its norm."""
    labels = [e.place for e in entries]
    if len(set(labels)) != len(labels):
        raise ValidationError("place labels must be distinct")
    factors, norm = [], 1
    for e in sorted(entries, key=lambda e: e.place):
        _check_norm(e)
        if e.residue_char == p:
            continue
        a = conductor_exponent(e.filtration, e.place).a_v
        if a > 0:
            factors.append((e.place, a))
            norm *= e.norm**a
    return Level(tuple(factors), norm)


def _check_norm(e: LevelEntry) -> None:
    n = e.norm
    while e.residue_char > 1 and n > 1 and n % e.residue_char == 0:
        n //= e.residue_char
    if n != 1 or e.norm < 2:
        raise ValidationError(f"norm {e.norm} of {e.place} is not a power of {e.residue_char}")


def level_from_json(d: dict) -> Level:
    try:
        p = int(d["p"])
        entries = [
            LevelEntry(
                str(item["place"]),
                int(item["norm"]),
                int(item["residue_char"]),
                filtration_from_json(item["filtration"]),
            )
            for item in d["entries"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad level record: {exc}") from exc
    return level(entries, p)


@dataclass(frozen=True)
class U1Descriptor:
    place: str
    exponent: int

    @property
    def conditions(self) -> list[str]:
        if self.exponent == 0:
            return []
        mod = self.place if self.exponent == 1 else f"{self.place}^{self.exponent}"
        return [f"a = 1 mod {mod}", f"c = 0 mod {mod}"]

    def describe(self) -> str:
        if self.exponent == 0:
            return f"GL_2(O_{self.place})"
        return f"U_1({self.place}^{self.exponent}) = {{[[a,b],[c,d]] in GL_2(O_{self.place}) : " + ", ".join(self.conditions) + "}"

    def to_json(self) -> dict:
        return {"place": self.place, "exponent": self.exponent, "full": self.exponent == 0,
                "conditions": self.conditions, "description": self.describe()}


def u1_descriptor(place_label: str, a: int) -> U1Descriptor:
    if a < 0:
        raise ValidationError("level exponent must be >= 0")
    return U1Descriptor(place_label, a)
