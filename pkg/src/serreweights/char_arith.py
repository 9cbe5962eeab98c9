"""Characters of tame inertia as exponents of fundamental characters.

A niveau-1 character at a place with residue field of size q is stored as
an exponent of psi_0 modulo q - 1, a niveau-2 character as an exponent of
the niveau-2 fundamental character psi~ modulo q^2 - 1, where
psi~^(q+1) = psi_0.  Embeddings are labelled tau_j = tau_0 o Frob^j, so
psi_j = psi_0^(p^j); the two lifts of tau_j to the quadratic extension
give psi~^(p^j) and psi~^(p^(j+f)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from sympy import isprime

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class LocalPlace:
    p: int
    e: int = 1
    f: int = 1

    def __post_init__(self):
        for name in ("p", "e", "f"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ValidationError(f"{name} must be an integer")
        if not isprime(self.p):
            raise ValidationError(f"p = {self.p} is not prime")
        if self.e < 1 or self.f < 1:
            raise ValidationError("e and f must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.f

    def modulus(self, niveau: int) -> int:
        return self.q**niveau - 1


@dataclass(frozen=True, order=True)
class TameCharacter:
    """Canonical tame character; build with :func:`make_character`."""

    place: LocalPlace
    niveau: int
    exponent: int

    @property
    def modulus(self) -> int:
        return self.place.modulus(self.niveau)

    def as_niveau2(self) -> int:
        """Exponent of psi~ representing the same character."""
        if self.niveau == 2:
            return self.exponent
        return self.exponent * (self.place.q + 1)

    def __mul__(self, other: TameCharacter) -> TameCharacter:
        _same_place(self, other)
        if self.niveau == other.niveau == 1:
            return make_character(self.place, 1, self.exponent + other.exponent)
        return make_character(self.place, 2, self.as_niveau2() + other.as_niveau2())

    def __pow__(self, k: int) -> TameCharacter:
        return make_character(self.place, self.niveau, self.exponent * k)

    def to_json(self) -> dict:
        return {"niveau": self.niveau, "exponent": self.exponent}


def _same_place(a: TameCharacter, b: TameCharacter) -> None:
    if a.place != b.place:
        raise ValidationError("characters live at different places")


def make_character(place: LocalPlace, niveau: int, n: int) -> TameCharacter:
    if niveau not in (1, 2):
        raise ValidationError(f"niveau must be 1 or 2, got {niveau!r}")
    q = place.q
    n %= q**niveau - 1
    if niveau == 2 and n % (q + 1) == 0:
        return TameCharacter(place, 1, (n // (q + 1)) % (q - 1))
    return TameCharacter(place, niveau, n)


def product_of_fundamentals(
    place: LocalPlace,
    terms: Iterable[tuple[int, int, int]],
    niveau: int | None = None,
) -> TameCharacter:
    """Character prod_j psi_(j, lift)^(m_j) for terms (j, lift, m_j).

    The result has niveau 2 if any lift is 1 or ``niveau=2`` is requested.
    """
    terms = list(terms)
    r = 2 if niveau == 2 or any(lift for _, lift, _ in terms) else 1
    total = 0
    for j, lift, m in terms:
        if not 0 <= j < place.f:
            raise ValidationError(f"embedding index {j} out of range for f = {place.f}")
        if lift not in (0, 1):
            raise ValidationError(f"lift must be 0 or 1, got {lift!r}")
        total += m * place.p ** (j + place.f * lift)
    return make_character(place, r, total)


def frobenius_twist(chi: TameCharacter) -> TameCharacter:
    return make_character(chi.place, chi.niveau, chi.exponent * chi.place.p)


def conjugate_q(chi: TameCharacter) -> TameCharacter:
    return make_character(chi.place, chi.niveau, chi.exponent * chi.place.q)


def place_from_json(d: dict) -> LocalPlace:
    try:
        return LocalPlace(int(d["p"]), int(d.get("e", 1)), int(d.get("f", 1)))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad place record {d!r}") from exc


def place_to_json(place: LocalPlace) -> dict:
    return {"p": place.p, "e": place.e, "f": place.f}


def character_from_json(place: LocalPlace, d: dict) -> TameCharacter:
    try:
        return make_character(place, int(d["niveau"]), int(d["exponent"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad character record {d!r}") from exc
