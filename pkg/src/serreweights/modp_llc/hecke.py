"""Compact induction ind_{KZ}^G sigma for G = GL_2(Q_p) and the Hecke operator T.

An element is a finite sum of [h, v] over tree vertices h, with v in the
space of sigma = det^w (x) Sym^r over F_p (basis X^(r-i) Y^i, i = 0..r).
Conventions: [g, v] is supported on KZ g^(-1); g.[h, v] = [gh, v] and
[h kappa, v] = [h, sigma(kappa) v], and p acts trivially.

T is attached to the double coset KZ diag(1, p) KZ:
T[h, v] = sum_beta [h beta, phi(beta^-1) v], with phi(k1 diag(1,p) k2) =
sigma(k1) M sigma(k2).  The matrix M is the (unique up to scalar) solution
of the equivariance constraints, normalised so that M X^r has X^r
coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from ..char_arith import LocalPlace
from ..errors import TruncationError, UnsupportedPlaceError, ValidationError
from ..weight_core import SerreWeightLocal, canonicalize_weight
from .modlin import nullspace, rank
from .tree import (
    Matrix,
    TreeVertex,
    ball,
    coset_normal_form,
    det,
    hecke_coset_reps,
    inv,
    mat,
    mod_p_power,
    mul,
    scalar,
)


def _require_qp(sigma: SerreWeightLocal) -> None:
    if sigma.place.f != 1 or sigma.place.e != 1:
        raise UnsupportedPlaceError("the tree model is implemented for GL_2(Q_p) weights only")


def weight(p: int, r: int, w: int) -> SerreWeightLocal:
    return canonicalize_weight(LocalPlace(p, 1, 1), (r,), w)


def _poly_mul(x: list[int], y: list[int], p: int) -> list[int]:
    out = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                out[i + j] = (out[i + j] + a * b) % p
    return out


@lru_cache(maxsize=None)
def _sym_matrix_mod_p(p: int, r: int, w: int, a: int, b: int, c: int, d: int) -> np.ndarray:
    # column i = image of X^(r-i) Y^i; coefficient lists are indexed by the power of Y
    m = np.zeros((r + 1, r + 1), dtype=np.int64)
    dt = pow((a * d - b * c) % p, w, p)
    for i in range(r + 1):
        poly = [1]
        for _ in range(r - i):
            poly = _poly_mul(poly, [a, c], p)
        for _ in range(i):
            poly = _poly_mul(poly, [b, d], p)
        m[:, i] = np.array(poly, dtype=np.int64) * dt % p
    m.setflags(write=False)
    return m


def sigma_of(sigma: SerreWeightLocal, k: Matrix) -> np.ndarray:
    """Matrix of k in K acting on sigma (via reduction mod p)."""
    p = sigma.place.p
    (a, b), (c, d) = k
    red = [mod_p_power(x, p, 1) for x in (a, b, c, d)]
    return _sym_matrix_mod_p(p, sigma.r[0], sigma.w[0], *red)


def _primitive_root(p: int) -> int:
    for g in range(1, p):
        if len({pow(g, i, p) for i in range(p - 1)}) == p - 1:
            return g
    raise AssertionError


@lru_cache(maxsize=None)
def hecke_kernel(sigma: SerreWeightLocal) -> np.ndarray:
    """The matrix M = phi(diag(1, p)) spanning the intertwining constraints."""
    _require_qp(sigma)
    p = sigma.place.p
    n = sigma.r[0] + 1
    g = _primitive_root(p)
    alpha = mat(1, 0, 0, p)
    gens = [mat(1, 0, 1, 1), mat(1, p, 0, 1), mat(g, 0, 0, 1), mat(1, 0, 0, g)]
    rows = []
    eye = np.eye(n, dtype=np.int64)
    for k in gens:
        left = sigma_of(sigma, mul(mul(alpha, k), inv(alpha)))
        right = sigma_of(sigma, k)
        # left M - M right = 0, with M flattened row-major
        rows.append(np.kron(left, eye) - np.kron(eye, right.T))
    sol = nullspace(np.vstack(rows) % p, p)
    if sol.shape[0] != 1:
        raise AssertionError(f"expected a one-dimensional intertwining space, got {sol.shape[0]}")
    m = sol[0].reshape(n, n)
    lead = int(m[0, 0]) if m[0, 0] else int(m[np.nonzero(m)][0])
    m = m * pow(lead, -1, p) % p
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _hecke_branches(sigma: SerreWeightLocal) -> tuple[tuple[Matrix, np.ndarray], ...]:
    """(beta, phi(beta^-1)) for the p + 1 cosets beta KZ."""
    p = sigma.place.p
    m = hecke_kernel(sigma)
    alpha = mat(1, 0, 0, p)
    wmat = mat(0, 1, 1, 0)
    out = []
    for beta in hecke_coset_reps(p):
        target = scalar(inv(beta), p)
        if beta[1][1] == 1:
            mu = beta[0][1]
            k2 = mat(1, -mu, 0, 1)
            assert mul(alpha, k2) == target
            op = m @ sigma_of(sigma, k2) % p
        else:
            assert mul(mul(wmat, alpha), wmat) == target
            sw = sigma_of(sigma, wmat)
            op = sw @ m @ sw % p
        op.setflags(write=False)
        out.append((beta, op))
    return tuple(out)


@dataclass
class IndElement:
    sigma: SerreWeightLocal
    support: dict[TreeVertex, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        _require_qp(self.sigma)
        p, n = self.sigma.place.p, self.sigma.r[0] + 1
        clean = {}
        for v, vec in self.support.items():
            vec = tuple(int(x) % p for x in vec)
            if len(vec) != n:
                raise ValidationError(f"coefficient vectors must have length {n}")
            if any(vec):
                clean[v] = vec
        self.support = dict(sorted(clean.items()))

    @classmethod
    def delta(cls, sigma: SerreWeightLocal, vertex: TreeVertex | None = None, vec: Iterable[int] | None = None):
        p = sigma.place.p
        vertex = vertex or TreeVertex.base(p)
        vec = tuple(vec) if vec is not None else (1,) + (0,) * sigma.r[0]
        return cls(sigma, {vertex: vec})

    @classmethod
    def accumulate(cls, sigma: SerreWeightLocal, terms: Iterable[tuple[TreeVertex, np.ndarray]]):
        p = sigma.place.p
        acc: dict[TreeVertex, np.ndarray] = {}
        for v, vec in terms:
            acc[v] = (acc[v] + vec) % p if v in acc else np.asarray(vec, dtype=np.int64) % p
        return cls(sigma, {v: tuple(int(x) for x in vec) for v, vec in acc.items()})

    def __add__(self, other: IndElement) -> IndElement:
        return IndElement.accumulate(
            self.sigma,
            [(v, np.array(x)) for v, x in self.support.items()]
            + [(v, np.array(x)) for v, x in other.support.items()],
        )

    def scale(self, c: int) -> IndElement:
        return IndElement(self.sigma, {v: tuple(c * x for x in vec) for v, vec in self.support.items()})

    def __eq__(self, other):
        return isinstance(other, IndElement) and self.sigma == other.sigma and self.support == other.support

    @property
    def radius(self) -> int:
        return max((v.radius for v in self.support), default=-1)


def g_action(g: Matrix, x: IndElement) -> IndElement:
    """Right-translation action of g in GL_2(Q_p) on ind_{KZ}^G sigma."""
    if det(g) == 0:
        raise ValidationError("group element must be invertible")
    p = x.sigma.place.p
    terms = []
    for h, vec in x.support.items():
        h2, kappa, _ = coset_normal_form(mul(g, h.matrix()), p)
        terms.append((h2, sigma_of(x.sigma, kappa) @ np.array(vec, dtype=np.int64) % p))
    return IndElement.accumulate(x.sigma, terms)


def hecke_T(x: IndElement) -> IndElement:
    p = x.sigma.place.p
    branches = _hecke_branches(x.sigma)
    terms = []
    for h, vec in x.support.items():
        v = np.array(vec, dtype=np.int64)
        hm = h.matrix()
        for beta, op in branches:
            h2, kappa, _ = coset_normal_form(mul(hm, beta), p)
            terms.append((h2, sigma_of(x.sigma, kappa) @ (op @ v % p) % p))
    return IndElement.accumulate(x.sigma, terms)


# ---------------------------------------------------------------------------
# truncated I(1)-invariants of ind sigma / T


def i1_generators(p: int) -> list[Matrix]:
    """Topological generators of the pro-p Iwahori subgroup I(1)."""
    gens = [mat(1, 1, 0, 1), mat(1, 0, p, 1), mat(1 + p, 0, 0, 1), mat(1, 0, 0, 1 + p)]
    if p == 2:
        gens += [mat(-1, 0, 0, 1), mat(1, 0, 0, -1)]
    return gens


class _Truncation:
    def __init__(self, sigma: SerreWeightLocal, radius: int):
        self.sigma = sigma
        self.p = sigma.place.p
        self.n = sigma.r[0] + 1
        self.vertices = ball(self.p, radius)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.inner = [v for v in self.vertices if v.radius < radius]
        self.dim = len(self.vertices) * self.n

    def vector(self, x: IndElement) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for v, vec in x.support.items():
            i = self.index[v] * self.n
            out[i:i + self.n] = vec
        return out

    def basis_element(self, v: TreeVertex, i: int) -> IndElement:
        vec = [0] * self.n
        vec[i] = 1
        return IndElement(self.sigma, {v: tuple(vec)})

    def operator(self, fn, domain: list[TreeVertex]) -> np.ndarray:
        cols = [self.vector(fn(self.basis_element(v, i))) for v in domain for i in range(self.n)]
        if not cols:
            return np.zeros((self.dim, 0), dtype=np.int64)
        return np.stack(cols, axis=1)


def _i1_invariant_dim(sigma: SerreWeightLocal, radius: int) -> int:
    p = sigma.place.p
    tr = _Truncation(sigma, radius)
    tmat = tr.operator(hecke_T, tr.inner)
    rank_t = rank(tmat, p) if tmat.shape[1] else 0
    # rows of ann span the linear forms vanishing on T(V_{R-1})
    ann = nullspace(tmat.T, p) if tmat.shape[1] else np.eye(tr.dim, dtype=np.int64)
    blocks = []
    eye = np.eye(tr.dim, dtype=np.int64)
    for g in i1_generators(p):
        gm = tr.operator(lambda x, g=g: g_action(g, x), tr.vertices)
        blocks.append(ann @ ((gm - eye) % p) % p)
    stacked = np.vstack(blocks)
    return tr.dim - rank(stacked, p) - rank_t


@dataclass(frozen=True)
class CokerResult:
    dim: int
    stabilized: bool
    trajectory: tuple[int, ...]

    def to_json(self) -> dict:
        return {"dim": self.dim, "stabilized": self.stabilized}


def coker_I1_dimension(sigma: SerreWeightLocal, radius: int) -> CokerResult:
    """dim of I(1)-invariants of V_R / T(V_{R-1}), with V_R the radius-R truncation.

    ``stabilized`` compares radius R with radius R - 1; ``trajectory`` lists
    the dimensions for radii 0..R.
    """
    _require_qp(sigma)
    if radius < 1:
        raise TruncationError("radius must be >= 1 to contain the neighbours of the base vertex")
    traj = tuple(_i1_invariant_dim(sigma, r) for r in range(radius + 1))
    return CokerResult(traj[-1], traj[-1] == traj[-2], traj)
