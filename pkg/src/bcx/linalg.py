"""Finite-dimensional bicomplex vectors and matrices.

Every object is a pair of complex arrays, one per idempotent component, and
every operation is the corresponding complex operation applied to both.  The
inner product is linear in its first argument and conjugate (``conj3``) in its
second, which matches ``<x, y> = x * conj3(y)`` on a single coordinate.

The operator predicates decide membership with the hyperbolic-valued norm and
the componentwise order: a discrepancy ``D`` is accepted when
``||D||_D <= tol * scale`` holds in *both* idempotent components, each scaled by
its own component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import DEFAULT_TOL, Bicomplex, Hyperbolic, Tolerance, hyp_sqrt
from .errors import DimensionMismatchError, NotSquareError

__all__ = [
    "BCVector",
    "BCMatrix",
    "OperatorNormReport",
    "inner_product",
    "dnorm_vec",
    "euclid_vec",
    "matmul",
    "apply",
    "adjoint",
    "spectral_norm",
    "op_dnorm",
    "is_normal",
    "componentwise_normal",
    "cartesian_normal_check",
    "cartesian_hermitian_commuting",
    "from_cartesian_matrix",
    "is_self_adjoint",
    "is_unitary",
    "is_positive",
    "is_zero_operator",
]


def _frozen(a, ndim: int) -> np.ndarray:
    arr = np.array(a, dtype=complex)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class BCVector:
    """Vector in ``BC^n`` stored as its two idempotent components."""

    v1: np.ndarray
    v2: np.ndarray

    def __post_init__(self):
        v1, v2 = _frozen(self.v1, 1), _frozen(self.v2, 1)
        if v1.shape != v2.shape:
            raise DimensionMismatchError(f"component lengths differ: {v1.shape} vs {v2.shape}")
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @property
    def dim(self) -> int:
        return self.v1.shape[0]

    @classmethod
    def from_entries(cls, entries: Iterable[Bicomplex | complex]) -> "BCVector":
        zs = [Bicomplex.coerce(e) for e in entries]
        return cls([z.z1 for z in zs], [z.z2 for z in zs])

    @classmethod
    def zeros(cls, n: int) -> "BCVector":
        return cls(np.zeros(n), np.zeros(n))

    @classmethod
    def basis(cls, n: int, k: int) -> "BCVector":
        e = np.zeros(n)
        e[k] = 1
        return cls(e, e)

    def entries(self) -> list[Bicomplex]:
        return [Bicomplex(a, b) for a, b in zip(self.v1, self.v2)]

    def __getitem__(self, k: int) -> Bicomplex:
        return Bicomplex(self.v1[k], self.v2[k])

    def __len__(self):
        return self.dim

    def _check(self, other: "BCVector"):
        if not isinstance(other, BCVector):
            raise TypeError(f"expected BCVector, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return BCVector(self.v1 + other.v1, self.v2 + other.v2)

    def __sub__(self, other):
        self._check(other)
        return BCVector(self.v1 - other.v1, self.v2 - other.v2)

    def __neg__(self):
        return BCVector(-self.v1, -self.v2)

    def __rmul__(self, scalar):
        s = Bicomplex.coerce(scalar)
        return BCVector(s.z1 * self.v1, s.z2 * self.v2)

    __mul__ = __rmul__

    def allclose(self, other: "BCVector", tol: Tolerance = DEFAULT_TOL) -> bool:
        self._check(other)
        scale = max(np.abs(self.v1).max(initial=0), np.abs(self.v2).max(initial=0),
                    np.abs(other.v1).max(initial=0), np.abs(other.v2).max(initial=0))
        bound = tol.bound(scale)
        return bool(np.all(np.abs(self.v1 - other.v1) <= bound)
                    and np.all(np.abs(self.v2 - other.v2) <= bound))

    def __repr__(self):
        return f"BCVector(dim={self.dim}, v1={self.v1!r}, v2={self.v2!r})"


@dataclass(frozen=True, eq=False)
class BCMatrix:
    """Matrix in ``BC^{rows x cols}``; ``A = e1*A1 + e2*A2``."""

    A1: np.ndarray
    A2: np.ndarray

    def __post_init__(self):
        A1, A2 = _frozen(self.A1, 2), _frozen(self.A2, 2)
        if A1.shape != A2.shape:
            raise DimensionMismatchError(f"component shapes differ: {A1.shape} vs {A2.shape}")
        object.__setattr__(self, "A1", A1)
        object.__setattr__(self, "A2", A2)

    @property
    def shape(self) -> tuple[int, int]:
        return self.A1.shape

    @property
    def rows(self) -> int:
        return self.A1.shape[0]

    @property
    def cols(self) -> int:
        return self.A1.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def identity(cls, n: int) -> "BCMatrix":
        return cls(np.eye(n), np.eye(n))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "BCMatrix":
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols)), np.zeros((rows, cols)))

    @classmethod
    def diag(cls, entries: Sequence[Bicomplex | complex]) -> "BCMatrix":
        zs = [Bicomplex.coerce(e) for e in entries]
        return cls(np.diag([z.z1 for z in zs]), np.diag([z.z2 for z in zs]))

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Bicomplex | complex]]) -> "BCMatrix":
        zs = [[Bicomplex.coerce(e) for e in row] for row in rows]
        return cls([[z.z1 for z in row] for row in zs], [[z.z2 for z in row] for row in zs])

    @classmethod
    def scalar(cls, s: Bicomplex | complex, n: int) -> "BCMatrix":
        return Bicomplex.coerce(s) * cls.identity(n)

    def __getitem__(self, idx: tuple[int, int]) -> Bicomplex:
        return Bicomplex(self.A1[idx], self.A2[idx])

    def _check_same(self, other: "BCMatrix"):
        if not isinstance(other, BCMatrix):
            raise TypeError(f"expected BCMatrix, got {type(other).__name__}")
        if other.shape != self.shape:
            raise DimensionMismatchError(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return BCMatrix(self.A1 + other.A1, self.A2 + other.A2)

    def __sub__(self, other):
        self._check_same(other)
        return BCMatrix(self.A1 - other.A1, self.A2 - other.A2)

    def __neg__(self):
        return BCMatrix(-self.A1, -self.A2)

    def __rmul__(self, scalar):
        s = Bicomplex.coerce(scalar)
        return BCMatrix(s.z1 * self.A1, s.z2 * self.A2)

    __mul__ = __rmul__

    def __matmul__(self, other):
        if isinstance(other, BCMatrix):
            return matmul(self, other)
        if isinstance(other, BCVector):
            return apply(self, other)
        return NotImplemented

    @property
    def H(self) -> "BCMatrix":
        return adjoint(self)

    def frobenius(self) -> Hyperbolic:
        return Hyperbolic(np.linalg.norm(self.A1), np.linalg.norm(self.A2))

    def allclose(self, other: "BCMatrix", tol: Tolerance = DEFAULT_TOL) -> bool:
        self._check_same(other)
        scale = max(np.abs(self.A1).max(initial=0), np.abs(self.A2).max(initial=0),
                    np.abs(other.A1).max(initial=0), np.abs(other.A2).max(initial=0))
        bound = tol.bound(scale)
        return bool(np.all(np.abs(self.A1 - other.A1) <= bound)
                    and np.all(np.abs(self.A2 - other.A2) <= bound))

    def to_cartesian(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(B, C)`` with ``A = B + jC``."""
        return (self.A1 + self.A2) / 2, 1j * (self.A1 - self.A2) / 2

    def __repr__(self):
        return f"BCMatrix(shape={self.shape}, A1={self.A1!r}, A2={self.A2!r})"


@dataclass(frozen=True)
class OperatorNormReport:
    """Hyperbolic operator norm together with its Euclidean magnitude."""

    dnorm: Hyperbolic

    @property
    def euclid(self) -> float:
        return self.dnorm.magnitude

    def to_json(self) -> dict:
        return {"dnorm": [self.dnorm.x1, self.dnorm.x2], "euclid": self.euclid}


def from_cartesian_matrix(B, C) -> BCMatrix:
    """Build ``A = B + jC`` from complex matrices ``B`` and ``C``."""
    B = np.asarray(B, dtype=complex)
    C = np.asarray(C, dtype=complex)
    if B.shape != C.shape:
        raise DimensionMismatchError(f"shapes differ: {B.shape} vs {C.shape}")
    return BCMatrix(B - 1j * C, B + 1j * C)


def inner_product(x: BCVector, y: BCVector) -> Bicomplex:
    """``<x, y> = e1 <x1, y1> + e2 <x2, y2>``, conjugate-linear in ``y``."""
    x._check(y)
    return Bicomplex(np.vdot(y.v1, x.v1), np.vdot(y.v2, x.v2))


def dnorm_vec(x: BCVector) -> Hyperbolic:
    """Hyperbolic norm ``<x, x>^(1/2)``."""
    return hyp_sqrt(inner_product(x, x).to_hyperbolic())


def euclid_vec(x: BCVector) -> float:
    return float(np.sqrt((np.vdot(x.v1, x.v1).real + np.vdot(x.v2, x.v2).real) / 2))


def matmul(A: BCMatrix, B: BCMatrix) -> BCMatrix:
    if A.cols != B.rows:
        raise DimensionMismatchError(f"cannot multiply {A.shape} by {B.shape}")
    return BCMatrix(A.A1 @ B.A1, A.A2 @ B.A2)


def apply(A: BCMatrix, x: BCVector) -> BCVector:
    if A.cols != x.dim:
        raise DimensionMismatchError(f"cannot apply {A.shape} matrix to a vector of length {x.dim}")
    return BCVector(A.A1 @ x.v1, A.A2 @ x.v2)


def adjoint(A: BCMatrix) -> BCMatrix:
    """Transpose ``conj3``-conjugate, i.e. the conjugate transpose of each component."""
    return BCMatrix(A.A1.conj().T, A.A2.conj().T)


def spectral_norm(M: np.ndarray) -> float:
    """Largest singular value of a complex matrix (0 for empty matrices)."""
    if M.size == 0:
        return 0.0
    return float(np.linalg.svd(M, compute_uv=False)[0])


def op_dnorm(A: BCMatrix) -> OperatorNormReport:
    return OperatorNormReport(Hyperbolic(spectral_norm(A.A1), spectral_norm(A.A2)))


def _require_square(A: BCMatrix):
    if not A.is_square:
        raise NotSquareError(f"operator predicates need a square matrix, got {A.shape}")


def _within(D: BCMatrix, scale: Hyperbolic, tol: Tolerance) -> bool:
    norm = op_dnorm(D).dnorm
    return norm.x1 <= tol.bound(scale.x1) and norm.x2 <= tol.bound(scale.x2)


def is_normal(A: BCMatrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Check ``A A* = A* A`` in bicomplex arithmetic.

    The commutator's hyperbolic operator norm is compared componentwise with
    ``tol`` scaled by the squared Frobenius norm of each component.
    """
    _require_square(A)
    As = adjoint(A)
    F = A.frobenius()
    return _within(A @ As - As @ A, F * F, tol)


def componentwise_normal(A: BCMatrix, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, bool]:
    """Normality of ``A1`` and ``A2`` decided separately as complex matrices."""
    _require_square(A)
    out = []
    for M in (A.A1, A.A2):
        Mh = M.conj().T
        scale = np.linalg.norm(M) ** 2
        out.append(spectral_norm(M @ Mh - Mh @ M) <= tol.bound(scale))
    return out[0], out[1]


def _square_pair(B, C) -> tuple[np.ndarray, np.ndarray]:
    B = np.asarray(B, dtype=complex)
    C = np.asarray(C, dtype=complex)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise NotSquareError(f"B must be square, got shape {B.shape}")
    if C.shape != B.shape:
        raise NotSquareError(f"C must match B's shape {B.shape}, got {C.shape}")
    return B, C


def cartesian_normal_check(B, C, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Decide normality of ``A = B + jC`` from its cartesian components alone.

    Expanding ``A A* = A* A`` with ``A* = B^H - j C^H`` and separating the real
    and ``j`` parts gives the two conditions

        B B^H + C C^H = B^H B + C^H C
        B^H C - C^H B = C B^H - B C^H

    Hermitian commuting ``B, C`` satisfy both, but the converse fails
    (``A = i*I`` is normal with ``B = i*I`` not hermitian); see
    :func:`cartesian_hermitian_commuting`.
    """
    B, C = _square_pair(B, C)
    Bh, Ch = B.conj().T, C.conj().T
    real_part = B @ Bh + C @ Ch - Bh @ B - Ch @ C
    j_part = Bh @ C - Ch @ B - C @ Bh + B @ Ch
    scale = np.linalg.norm(B) ** 2 + np.linalg.norm(C) ** 2
    bound = tol.bound(scale)
    return spectral_norm(real_part) <= bound and spectral_norm(j_part) <= bound


def cartesian_hermitian_commuting(B, C, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``B = B^H``, ``C = C^H`` and ``BC = CB``: sufficient, not necessary, for normality."""
    B, C = _square_pair(B, C)
    nb, nc = np.linalg.norm(B), np.linalg.norm(C)
    return (
        spectral_norm(B - B.conj().T) <= tol.bound(nb)
        and spectral_norm(C - C.conj().T) <= tol.bound(nc)
        and spectral_norm(B @ C - C @ B) <= tol.bound(nb * nc)
    )


def is_self_adjoint(A: BCMatrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    _require_square(A)
    return _within(A - adjoint(A), A.frobenius(), tol)


def is_unitary(A: BCMatrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    _require_square(A)
    As = adjoint(A)
    identity = BCMatrix.identity(A.rows)
    F = A.frobenius()
    scale = Hyperbolic(max(1.0, F.x1 ** 2), max(1.0, F.x2 ** 2))
    return _within(A @ As - identity, scale, tol) and _within(As @ A - identity, scale, tol)


def is_positive(A: BCMatrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Self-adjoint with both components positive semidefinite.

    Equivalently ``<Ax, x>`` is a positive hyperbolic number for every ``x``.
    """
    if not is_self_adjoint(A, tol):
        return False
    for M, scale in zip((A.A1, A.A2), A.frobenius()):
        if M.size == 0:
            continue
        herm = (M + M.conj().T) / 2
        if np.linalg.eigvalsh(herm)[0] < -tol.bound(scale):
            return False
    return True


def is_zero_operator(A: BCMatrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Every entry of both components within ``tol`` of zero (unit scale)."""
    _require_square(A)
    bound = tol.bound(1.0)
    return bool(np.all(np.abs(A.A1) <= bound) and np.all(np.abs(A.A2) <= bound))
