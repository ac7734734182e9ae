"""Submodules, quotient norms, annihilators and dual-space isometries.

A submodule ``M = e1*M1 + e2*M2`` of ``BC^n`` is stored as an orthonormal
basis (the columns of an ``n x r_i`` matrix) for each idempotent component.
The component ranks ``r_1`` and ``r_2`` need not agree: the submodule
generated by ``(e1, 0)`` has ``r_1 = 1`` and ``r_2 = 0``.

Functionals are represented by Riesz vectors under the ``conj3`` pairing,
``f(x) = <x, r>``, which covers every bounded functional in finite dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Bicomplex, Hyperbolic, Tolerance
from .errors import DimensionMismatchError, RepresenterNotInSubmoduleError
from .linalg import BCVector, dnorm_vec, inner_product

__all__ = [
    "ORTHO_TOL",
    "Submodule",
    "Functional",
    "DualIsometryReport",
    "submodule_from_generators",
    "project",
    "quotient_norm",
    "annihilator",
    "restrict",
    "extend_functional",
    "functional_norm_on",
    "quotient_functional_norm",
    "check_dual_isometries",
]

# rank-revealing drop tolerance for orthonormalization
ORTHO_TOL = Tolerance(rel=1e-10)


def _orthonormal(Q, n: int) -> np.ndarray:
    Q = np.array(Q, dtype=complex).reshape(n, -1)
    Q.flags.writeable = False
    return Q


@dataclass(frozen=True, eq=False)
class Submodule:
    ambient_dim: int
    basis1: np.ndarray
    basis2: np.ndarray

    def __post_init__(self):
        n = self.ambient_dim
        if n < 1:
            raise ValueError(f"ambient dimension must be positive, got {n}")
        b1, b2 = _orthonormal(self.basis1, n), _orthonormal(self.basis2, n)
        for Q in (b1, b2):
            if Q.shape[1] > n:
                raise ValueError(f"basis of rank {Q.shape[1]} exceeds ambient dimension {n}")
            gram = Q.conj().T @ Q
            if not np.allclose(gram, np.eye(Q.shape[1]), rtol=0, atol=1e-10):
                raise ValueError("submodule basis is not orthonormal")
        object.__setattr__(self, "basis1", b1)
        object.__setattr__(self, "basis2", b2)

    @property
    def ranks(self) -> tuple[int, int]:
        return self.basis1.shape[1], self.basis2.shape[1]

    @classmethod
    def zero(cls, n: int) -> "Submodule":
        return cls(n, np.zeros((n, 0)), np.zeros((n, 0)))

    @classmethod
    def whole(cls, n: int) -> "Submodule":
        return cls(n, np.eye(n), np.eye(n))

    def generators(self) -> list[BCVector]:
        """Vectors ``e1*q`` and ``e2*q`` for every basis column ``q``."""
        n = self.ambient_dim
        zero = np.zeros(n)
        gens = [BCVector(q, zero) for q in self.basis1.T]
        gens += [BCVector(zero, q) for q in self.basis2.T]
        return gens

    def contains(self, x: BCVector, tol: Tolerance = Tolerance(rel=1e-9)) -> bool:
        r = x - project(x, self)
        scale = dnorm_vec(x)
        d = dnorm_vec(r)
        return d.x1 <= tol.bound(scale.x1) and d.x2 <= tol.bound(scale.x2)


@dataclass(frozen=True, eq=False)
class Functional:
    """Bounded functional ``x -> <x, riesz>``."""

    riesz: BCVector

    def __call__(self, x: BCVector) -> Bicomplex:
        return inner_product(x, self.riesz)

    @property
    def dim(self) -> int:
        return self.riesz.dim

    def dnorm(self) -> Hyperbolic:
        return dnorm_vec(self.riesz)


@dataclass(frozen=True)
class DualIsometryReport:
    max_violation_a: Hyperbolic
    max_violation_b: Hyperbolic
    trials: int
    seed: int

    def to_json(self) -> dict:
        return {
            "max_violation_a": [self.max_violation_a.x1, self.max_violation_a.x2],
            "max_violation_b": [self.max_violation_b.x1, self.max_violation_b.x2],
            "trials": self.trials,
            "seed": self.seed,
        }


def _orth(cols: np.ndarray, scale: float, tol: Tolerance) -> np.ndarray:
    n = cols.shape[0]
    if cols.shape[1] == 0:
        return np.zeros((n, 0), dtype=complex)
    U, s, _ = np.linalg.svd(cols, full_matrices=False)
    rank = int(np.sum(s > tol.bound(scale))) if scale > 0 else 0
    return U[:, :rank]


def submodule_from_generators(
    gens: Sequence[BCVector], tol: Tolerance = ORTHO_TOL, ambient_dim: int | None = None
) -> Submodule:
    """Span of ``gens``, orthonormalized separately in each idempotent component.

    Singular values below ``tol`` relative to the largest one across *both*
    components are dropped, so a component that is zero up to rounding
    contributes nothing.
    """
    gens = list(gens)
    if not gens:
        if ambient_dim is None:
            raise ValueError("ambient_dim is required for an empty generator list")
        return Submodule.zero(ambient_dim)
    n = gens[0].dim
    if ambient_dim is not None and ambient_dim != n:
        raise DimensionMismatchError(f"generators have dimension {n}, expected {ambient_dim}")
    for g in gens:
        if g.dim != n:
            raise DimensionMismatchError(f"generator dimensions differ: {n} vs {g.dim}")
    C1 = np.column_stack([g.v1 for g in gens])
    C2 = np.column_stack([g.v2 for g in gens])
    scale = max(np.linalg.norm(C1, 2), np.linalg.norm(C2, 2))
    return Submodule(n, _orth(C1, scale, tol), _orth(C2, scale, tol))


def _check_dim(x: BCVector, M: Submodule):
    if x.dim != M.ambient_dim:
        raise DimensionMismatchError(f"vector of length {x.dim} in ambient dimension {M.ambient_dim}")


def project(x: BCVector, M: Submodule) -> BCVector:
    _check_dim(x, M)
    Q1, Q2 = M.basis1, M.basis2
    return BCVector(Q1 @ (Q1.conj().T @ x.v1), Q2 @ (Q2.conj().T @ x.v2))


def quotient_norm(x: BCVector, M: Submodule) -> Hyperbolic:
    """Norm of the coset ``x + M``: componentwise distance from ``x_i`` to ``M_i``."""
    return dnorm_vec(x - project(x, M))


def annihilator(M: Submodule) -> Submodule:
    """Representers of all functionals vanishing on ``M`` (componentwise complements)."""
    n = M.ambient_dim

    def complement(Q):
        r = Q.shape[1]
        if r == 0:
            return np.eye(n, dtype=complex)
        # trailing left singular vectors span the orthogonal complement of range(Q)
        U, _, _ = np.linalg.svd(Q, full_matrices=True)
        return U[:, r:]

    return Submodule(n, complement(M.basis1), complement(M.basis2))


def restrict(f: Functional, M: Submodule) -> Functional:
    """Restriction of ``f`` to ``M``, represented by the vector in ``M`` that induces it."""
    return Functional(project(f.riesz, M))


def extend_functional(
    f: Functional, M: Submodule, tol: Tolerance = Tolerance(rel=1e-9)
) -> Functional:
    """Norm-preserving extension of a functional on ``M`` to the whole module.

    ``f`` must be represented by a vector in ``M``.  The extension uses the same
    representer, so it vanishes on the annihilator of ``M`` and, componentwise,
    each ``f_i`` is extended as a complex functional.
    """
    _check_dim(f.riesz, M)
    if not M.contains(f.riesz, tol):
        raise RepresenterNotInSubmoduleError("the functional's representer does not lie in M")
    return Functional(project(f.riesz, M))


def functional_norm_on(f: Functional, M: Submodule) -> Hyperbolic:
    """Hyperbolic norm of ``f`` restricted to ``M``, from its coordinates in M's basis."""
    _check_dim(f.riesz, M)
    r = f.riesz
    c1 = M.basis1.conj().T @ r.v1
    c2 = M.basis2.conj().T @ r.v2
    return Hyperbolic(np.linalg.norm(c1), np.linalg.norm(c2))


def quotient_functional_norm(f: Functional, M: Submodule) -> Hyperbolic:
    """Norm of ``x + M -> f(x)`` as a functional on ``X/M``.

    ``f`` must vanish on ``M`` for this to be well defined.  The cosets are
    parametrised isometrically by the annihilator basis ``P``:
    ``P c + M`` has quotient norm ``|c|``, so the norm is that of the row of values ``f(P e_k)``.
    """
    _check_dim(f.riesz, M)
    perp = annihilator(M)
    vals1 = perp.basis1.T @ f.riesz.v1.conj()
    vals2 = perp.basis2.T @ f.riesz.v2.conj()
    return Hyperbolic(np.linalg.norm(vals1), np.linalg.norm(vals2))


def _rel_violation(got: Hyperbolic, want: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(abs(got.x1 - want.x1) / max(1.0, want.x1),
                      abs(got.x2 - want.x2) / max(1.0, want.x2))


def _hmax(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(max(a.x1, b.x1), max(a.x2, b.x2))


def _cgauss(rng: np.random.Generator, *shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def check_dual_isometries(M: Submodule, trials: int, seed: int) -> DualIsometryReport:
    """Verify both dual isometries numerically on random functionals.

    (a) ``M' -> X'/M^perp``: a functional on ``M`` given by random coordinates
    ``c`` has norm ``|c|``; it is sent to the coset of any extension, here the
    Hahn-Banach extension shifted by a random element of ``M^perp``, and the
    quotient norm of that coset must equal ``|c|``.

    (b) ``(X/M)' -> M^perp``: a random functional on ``X/M`` is composed with the
    quotient map; the representer obtained must have the same norm.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = M.ambient_dim
    perp = annihilator(M)
    rng = np.random.default_rng(seed)
    worst_a = Hyperbolic(0.0, 0.0)
    worst_b = Hyperbolic(0.0, 0.0)
    for _ in range(trials):
        # (a)
        c1 = _cgauss(rng, M.ranks[0])
        c2 = _cgauss(rng, M.ranks[1])
        m = Functional(BCVector(M.basis1 @ c1, M.basis2 @ c2))
        want = functional_norm_on(m, M)
        x_ext = extend_functional(m, M)
        shift = BCVector(perp.basis1 @ _cgauss(rng, perp.ranks[0]),
                         perp.basis2 @ _cgauss(rng, perp.ranks[1]))
        got = quotient_norm(x_ext.riesz + shift, perp)
        worst_a = _hmax(worst_a, _rel_violation(got, want))

        # (b): a random ambient vector pushed into M^perp defines a functional on X/M
        s = BCVector(_cgauss(rng, n), _cgauss(rng, n))
        y = Functional(s - project(s, M))
        want = quotient_functional_norm(y, M)
        got = dnorm_vec(y.riesz)
        worst_b = _hmax(worst_b, _rel_violation(got, want))
    return DualIsometryReport(worst_a, worst_b, trials, seed)
