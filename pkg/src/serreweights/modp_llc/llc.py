"""Weight pairs W(rho) = {sigma, sigma'} and Barthel-Livne labels for GL_2."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import factorint

from ..char_arith import LocalPlace
from ..errors import ValidationError
from ..weight_core import SerreWeightLocal, involution_prime
from ..weight_recipe import irreducible, weights_local

SUPERSINGULAR = "supersingular"
IRREDUCIBLE_PS = "irreducible principal series"
LENGTH_TWO = "length-two: character and Steinberg twist"


@dataclass(frozen=True)
class LLCWeights:
    sigma: SerreWeightLocal
    sigma_prime: SerreWeightLocal

    @property
    def pi_label(self) -> str:
        return f"ind {self.sigma.label()} / T = ind {self.sigma_prime.label()} / T"

    @property
    def weights(self) -> tuple[SerreWeightLocal, SerreWeightLocal]:
        return (self.sigma, self.sigma_prime)

    def to_json(self) -> dict:
        return {"weights": [s.to_json() for s in self.weights], "pi_label": self.pi_label}


def llc_weights(p: int, n: int) -> LLCWeights:
    """The supersingular weight pair attached to the niveau-2 exponent n at Q_p."""
    ws = weights_local(irreducible(LocalPlace(p, 1, 1), n)).weights
    if len(ws) != 2 or involution_prime(ws[0]) != ws[1]:
        raise AssertionError(f"weight set {ws} is not of the form {{sigma, sigma'}}")
    return LLCWeights(ws[0], ws[1])


def _prime_power(q: int) -> tuple[int, int]:
    fac = factorint(q) if q > 1 else {}
    if len(fac) != 1:
        raise ValidationError(f"q = {q} is not a prime power")
    (p, f), = fac.items()
    return p, f


def realizable_dims(q: int) -> set[int]:
    """Dimensions prod_j (r_j + 1) of Serre weights of GL_2(F_q)."""
    p, f = _prime_power(q)
    dims = {1}
    for _ in range(f):
        dims = {d * k for d in dims for k in range(1, p + 1)}
    return dims


def bl_classify(q: int, sigma_dim: int, lam: int) -> str:
    """Label of ind sigma / (T - lam) per the Barthel-Livne classification.

    ``lam`` is an element of F_p given by a representative integer.
    """
    p, _ = _prime_power(q)
    if sigma_dim not in realizable_dims(q):
        raise ValidationError(f"no Serre weight of GL_2(F_{q}) has dimension {sigma_dim}")
    lam %= p
    if lam == 0:
        return SUPERSINGULAR
    if sigma_dim not in (1, q) or lam not in (1, p - 1):
        return IRREDUCIBLE_PS
    return LENGTH_TWO
