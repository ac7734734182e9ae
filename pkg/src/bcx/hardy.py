"""Truncated bicomplex power series and composition operators on the discus.

A series ``f(Z) = sum a_n Z^n`` with bicomplex coefficients splits as
``e1*f1(z1) + e2*f2(z2)``; it is stored as one complex coefficient array per
idempotent component.  All series live in degree ``<= N`` for some fixed
``N``.  Composition ``f o Phi`` is computed modulo ``Z^(N+1)``; because ``f``
is a polynomial, the result equals the first ``N+1`` coefficients of
``f o Phi`` for the untruncated ``Phi`` whenever the input coefficients of
``Phi`` are exact up to degree ``N``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .algebra import Bicomplex, Hyperbolic, Tolerance, hyp_sqrt, modulus_k
from .errors import (
    DegreeMismatchError,
    NotInDiscusError,
    NotSelfMapError,
    PoleAtOneError,
)
from .linalg import BCMatrix

__all__ = [
    "GRID_POINTS",
    "GRID_RADIUS",
    "SELF_MAP_TOL",
    "BCPowerSeries",
    "WeightSequence",
    "SelfMap",
    "hardy_norm",
    "hardy_inner",
    "seq_embed",
    "seq_norm",
    "evaluate",
    "compose",
    "compose_maps",
    "grid_max_modulus",
    "mobius_series",
    "mobius_truncation_bound",
    "blaschke_self_map",
    "cayley",
    "cayley_inverse",
    "in_upper_half_plane",
    "composition_matrix",
    "littlewood_bound",
    "mobius_norm_bound",
]

GRID_POINTS = 256
GRID_RADIUS = 0.999
SELF_MAP_TOL = 1e-9

ComponentMap = Callable[[np.ndarray], np.ndarray]


def _coeff_array(c) -> np.ndarray:
    arr = np.array(c, dtype=complex).reshape(-1)
    if arr.size == 0:
        raise ValueError("a power series needs at least one coefficient")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficients must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class BCPowerSeries:
    """Polynomial ``sum_{n<=N} a_n Z^n`` over the bicomplex numbers."""

    c1: np.ndarray
    c2: np.ndarray

    def __post_init__(self):
        c1, c2 = _coeff_array(self.c1), _coeff_array(self.c2)
        if c1.shape != c2.shape:
            raise DegreeMismatchError(f"component degrees differ: {c1.size - 1} vs {c2.size - 1}")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    @property
    def degree(self) -> int:
        return self.c1.size - 1

    @property
    def coeffs(self) -> tuple[Bicomplex, ...]:
        return tuple(Bicomplex(a, b) for a, b in zip(self.c1, self.c2))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Bicomplex | complex]) -> "BCPowerSeries":
        zs = [Bicomplex.coerce(c) for c in coeffs]
        return cls([z.z1 for z in zs], [z.z2 for z in zs])

    @classmethod
    def monomial(cls, k: int, coef: Bicomplex | complex = 1, degree: int | None = None) -> "BCPowerSeries":
        degree = k if degree is None else degree
        if degree < k:
            raise DegreeMismatchError(f"degree {degree} cannot hold Z^{k}")
        c = Bicomplex.coerce(coef)
        c1 = np.zeros(degree + 1, dtype=complex)
        c2 = np.zeros(degree + 1, dtype=complex)
        c1[k], c2[k] = c.z1, c.z2
        return cls(c1, c2)

    @classmethod
    def identity(cls, degree: int = 1) -> "BCPowerSeries":
        return cls.monomial(1, 1, max(degree, 1))

    def resized(self, N: int) -> "BCPowerSeries":
        """Truncate or zero-pad to degree ``N``."""
        return BCPowerSeries(_fit(self.c1, N), _fit(self.c2, N))

    def component(self, i: int) -> np.ndarray:
        return (self.c1, self.c2)[i]

    def __call__(self, Z: Bicomplex) -> Bicomplex:
        return evaluate(self, Z)

    def __add__(self, other):
        if not isinstance(other, BCPowerSeries):
            return NotImplemented
        N = max(self.degree, other.degree)
        return BCPowerSeries(_fit(self.c1, N) + _fit(other.c1, N), _fit(self.c2, N) + _fit(other.c2, N))

    def __sub__(self, other):
        if not isinstance(other, BCPowerSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BCPowerSeries(-self.c1, -self.c2)

    def __rmul__(self, scalar):
        s = Bicomplex.coerce(scalar)
        return BCPowerSeries(s.z1 * self.c1, s.z2 * self.c2)

    def __repr__(self):
        return f"BCPowerSeries(degree={self.degree}, c1={self.c1!r}, c2={self.c2!r})"


def _fit(c: np.ndarray, N: int) -> np.ndarray:
    out = np.zeros(N + 1, dtype=complex)
    m = min(N + 1, c.size)
    out[:m] = c[:m]
    return out


@dataclass(frozen=True, eq=False)
class WeightSequence:
    """Strictly positive hyperbolic weights ``beta(0..N)`` with ``beta(0) = 1``.

    The growth condition ``lim beta(n)^(1/n) >= 1`` concerns the infinite tail
    and is not checked on a finite prefix.
    """

    beta1: np.ndarray
    beta2: np.ndarray

    def __post_init__(self):
        b1 = np.array(self.beta1, dtype=float).reshape(-1)
        b2 = np.array(self.beta2, dtype=float).reshape(-1)
        if b1.shape != b2.shape or b1.size == 0:
            raise DegreeMismatchError("weight components must be non-empty and of equal length")
        if b1[0] != 1.0 or b2[0] != 1.0:
            raise ValueError("beta(0) must equal 1 exactly")
        if not (np.all(np.isfinite(b1)) and np.all(np.isfinite(b2))):
            raise ValueError("weights must be finite")
        if np.any(b1 <= 0) or np.any(b2 <= 0):
            raise ValueError("weights must be strictly positive in both components")
        b1.flags.writeable = False
        b2.flags.writeable = False
        object.__setattr__(self, "beta1", b1)
        object.__setattr__(self, "beta2", b2)

    @property
    def degree(self) -> int:
        return self.beta1.size - 1

    @property
    def beta(self) -> tuple[Hyperbolic, ...]:
        return tuple(Hyperbolic(a, b) for a, b in zip(self.beta1, self.beta2))

    @classmethod
    def from_hyperbolic(cls, beta: Sequence[Hyperbolic]) -> "WeightSequence":
        return cls([b.x1 for b in beta], [b.x2 for b in beta])

    @classmethod
    def unit(cls, N: int) -> "WeightSequence":
        return cls(np.ones(N + 1), np.ones(N + 1))


def _weights_for(beta: WeightSequence | None, N: int) -> tuple[np.ndarray, np.ndarray]:
    if beta is None:
        return np.ones(N + 1), np.ones(N + 1)
    if beta.degree < N:
        raise DegreeMismatchError(f"weights of degree {beta.degree} cannot weigh degree {N}")
    return beta.beta1[: N + 1], beta.beta2[: N + 1]


def hardy_norm(f: BCPowerSeries, beta: WeightSequence | None = None) -> Hyperbolic:
    """Hyperbolic norm ``(sum |a_n beta(n)|_k^2)^(1/2)``; unweighted if ``beta`` is None."""
    w1, w2 = _weights_for(beta, f.degree)
    return Hyperbolic(np.linalg.norm(f.c1 * w1), np.linalg.norm(f.c2 * w2))


def hardy_inner(f: BCPowerSeries, g: BCPowerSeries, beta: WeightSequence | None = None) -> Bicomplex:
    """``sum a_n beta(n) conj3(b_n beta(n))``; the shorter series is zero-padded."""
    N = min(f.degree, g.degree)
    w1, w2 = _weights_for(beta, N)
    s1 = np.sum(f.c1[: N + 1] * g.c1[: N + 1].conj() * w1**2)
    s2 = np.sum(f.c2[: N + 1] * g.c2[: N + 1].conj() * w2**2)
    return Bicomplex(s1, s2)


def seq_embed(f: BCPowerSeries) -> tuple[Bicomplex, ...]:
    """Coefficient sequence of ``f``."""
    return f.coeffs


def seq_norm(seq: Sequence[Bicomplex], beta: WeightSequence | None = None) -> Hyperbolic:
    """Weighted sequence-space norm computed term by term in scalar arithmetic."""
    seq = list(seq)
    weights = beta.beta if beta is not None else None
    if weights is not None and len(weights) < len(seq):
        raise DegreeMismatchError(f"{len(weights)} weights for {len(seq)} terms")
    total = Hyperbolic(0.0, 0.0)
    for n, a in enumerate(seq):
        term = a * weights[n] if weights is not None else a
        m = modulus_k(term)
        total = total + m * m
    return hyp_sqrt(total)


def _horner(c: np.ndarray, z):
    acc = np.zeros_like(np.asarray(z, dtype=complex)) + c[-1]
    for a in c[-2::-1]:
        acc = acc * z + a
    return acc


def evaluate(f: BCPowerSeries, Z: Bicomplex) -> Bicomplex:
    """``f(Z) = e1 f1(z1) + e2 f2(z2)`` by Horner's rule in each component."""
    Z = Bicomplex.coerce(Z)
    return Bicomplex(complex(_horner(f.c1, Z.z1)), complex(_horner(f.c2, Z.z2)))


def _toeplitz_lower(p: np.ndarray, N: int) -> np.ndarray:
    """Matrix of ``g -> (p * g) mod z^(N+1)`` on coefficient vectors of length N+1."""
    p = _fit(p, N)
    idx = np.arange(N + 1)
    diff = idx[:, None] - idx[None, :]
    return np.where(diff >= 0, p[np.clip(diff, 0, N)], 0)


def _series_of(phi) -> BCPowerSeries:
    if isinstance(phi, SelfMap):
        return phi.series
    if isinstance(phi, BCPowerSeries):
        return phi
    raise TypeError(f"expected SelfMap or BCPowerSeries, got {type(phi).__name__}")


def compose(f: BCPowerSeries, phi, N: int) -> BCPowerSeries:
    """Truncated composition ``(f o Phi) mod Z^(N+1)``, componentwise.

    Horner's scheme in the ring of truncated series: starting from the top
    coefficient, repeatedly multiply by ``Phi`` and add the next coefficient.
    With ``Phi(0) = 0`` coefficient ``n`` of the result involves only
    ``a_0..a_n``.
    """
    if N < 0:
        raise ValueError(f"truncation degree must be >= 0, got {N}")
    p = _series_of(phi)
    T = np.stack([_toeplitz_lower(p.c1, N), _toeplitz_lower(p.c2, N)])
    a = np.stack([f.c1, f.c2])
    acc = np.zeros((2, N + 1), dtype=complex)
    for n in range(f.degree, -1, -1):
        acc = np.einsum("kij,kj->ki", T, acc)
        acc[:, 0] += a[:, n]
    return BCPowerSeries(acc[0], acc[1])


def _grid(radius: float = GRID_RADIUS, points: int = GRID_POINTS) -> np.ndarray:
    return radius * np.exp(2j * np.pi * np.arange(points) / points)


def grid_max_modulus(f: BCPowerSeries, radius: float = GRID_RADIUS, points: int = GRID_POINTS) -> Hyperbolic:
    """Largest ``|f_i(z)|`` over ``points`` equally spaced points of ``|z| = radius``."""
    z = _grid(radius, points)
    return Hyperbolic(np.abs(_horner(f.c1, z)).max(), np.abs(_horner(f.c2, z)).max())


@dataclass(frozen=True, eq=False)
class SelfMap:
    """Holomorphic self-map of the discus, carried as a truncated series.

    ``exact`` optionally holds the untruncated component functions of a map
    known to be a self-map by construction (Blaschke products, Moebius maps
    and their compositions).  The grid check runs on ``exact`` when present,
    otherwise on the polynomial itself.  ``strict=False`` records the check
    result in ``certified`` instead of raising.
    """

    series: BCPowerSeries
    exact: tuple[ComponentMap, ComponentMap] | None = None
    strict: bool = True
    certified: bool = field(init=False)

    def __post_init__(self):
        m = self.grid_max()
        ok = m.x1 <= 1 + SELF_MAP_TOL and m.x2 <= 1 + SELF_MAP_TOL
        if self.strict and not ok:
            raise NotSelfMapError(f"grid check failed: max component moduli {m.x1:.6g}, {m.x2:.6g}")
        object.__setattr__(self, "certified", ok)

    def grid_max(self) -> Hyperbolic:
        if self.exact is None:
            return grid_max_modulus(self.series)
        z = _grid()
        return Hyperbolic(np.abs(self.exact[0](z)).max(), np.abs(self.exact[1](z)).max())

    @property
    def degree(self) -> int:
        return self.series.degree

    @property
    def at_zero(self) -> Bicomplex:
        return Bicomplex(self.series.c1[0], self.series.c2[0])

    def __call__(self, Z: Bicomplex) -> Bicomplex:
        return evaluate(self.series, Z)


def compose_maps(outer: SelfMap, inner: SelfMap, N: int) -> SelfMap:
    """Self-map ``outer o inner`` truncated at degree ``N``."""
    series = compose(outer.series, inner, N)
    exact = None
    if outer.exact is not None and inner.exact is not None:
        o, i = outer.exact, inner.exact
        exact = (lambda z: o[0](i[0](z)), lambda z: o[1](i[1](z)))
    return SelfMap(series, exact, strict=outer.strict and inner.strict)


def _require_discus(a: Bicomplex, what: str):
    if abs(a.z1) >= 1 or abs(a.z2) >= 1:
        raise NotInDiscusError(f"{what} {a!r} is not in the open unit discus")


def mobius_series(a: Bicomplex, N: int) -> SelfMap:
    """Degree-``N`` series of ``T_a(Z) = (a - Z) / (1 - conj3(a) Z)``.

    Componentwise ``T_a(z) = a - (1 - |a|^2) sum_{k>=1} conj(a)^(k-1) z^k``.
    """
    a = Bicomplex.coerce(a)
    _require_discus(a, "Moebius parameter")
    k = np.arange(1, N + 1)
    comps = []
    for ai in (a.z1, a.z2):
        c = np.empty(N + 1, dtype=complex)
        c[0] = ai
        c[1:] = -(1 - abs(ai) ** 2) * np.conj(ai) ** (k - 1)
        comps.append(c)

    def t(ai):
        return lambda z: (ai - z) / (1 - np.conj(ai) * z)

    return SelfMap(BCPowerSeries(*comps), (t(a.z1), t(a.z2)))


def mobius_truncation_bound(a: Bicomplex, N: int, radius: float = 0.0) -> Hyperbolic:
    """Truncation error bound for the Moebius identities at degree ``N``.

    Evaluating the truncated ``T_a`` at ``|z| <= radius`` (``radius <= |a_i|``
    covers the point ``z = a``) errs by at most ``|a_i|^N``.  For the
    self-composition ``T_a o T_a`` every coefficient errs by at most
    ``sum_{k>N} |coef_k(T_a)| = (1 + |a_i|) |a_i|^N`` (powers of ``T_a`` have unit
    Hardy norm), so evaluation at ``|z| <= radius`` errs by at most
    ``(1 + |a_i|) |a_i|^N / (1 - radius)``; this larger value is returned.
    """
    if not 0 <= radius < 1:
        raise ValueError("radius must lie in [0, 1)")
    vals = [(1 + abs(ai)) * abs(ai) ** N / (1 - radius) for ai in (a.z1, a.z2)]
    return Hyperbolic(*vals)


def _blaschke(zeros: Sequence[complex], rotation: complex, fix_origin: bool) -> ComponentMap:
    zeros = [complex(z) for z in zeros]

    def b(z):
        z = np.asarray(z, dtype=complex)
        out = rotation * (z if fix_origin else np.ones_like(z))
        for a in zeros:
            out = out * (a - z) / (1 - np.conj(a) * z)
        return out

    return b


def _blaschke_coeffs(zeros: Sequence[complex], rotation: complex, fix_origin: bool, N: int) -> np.ndarray:
    c = np.zeros(N + 1, dtype=complex)
    c[0] = rotation
    if fix_origin:
        c = np.roll(c, 1)
        c[0] = 0
    k = np.arange(1, N + 1)
    for a in zeros:
        a = complex(a)
        factor = np.empty(N + 1, dtype=complex)
        factor[0] = a
        factor[1:] = -(1 - abs(a) ** 2) * np.conj(a) ** (k - 1)
        c = _toeplitz_lower(factor, N) @ c
    return c


def blaschke_self_map(
    zeros1: Sequence[complex],
    zeros2: Sequence[complex],
    N: int,
    rotation: Bicomplex | complex = 1,
    fix_origin: bool = True,
) -> SelfMap:
    """Componentwise finite Blaschke product, times ``Z`` when ``fix_origin``.

    ``Phi_i(z) = u_i * z * prod_k (a_k - z) / (1 - conj(a_k) z)`` with unimodular
    ``u_i``; a self-map of the disk by construction.
    """
    rot = Bicomplex.coerce(rotation)
    for u in (rot.z1, rot.z2):
        if not math.isclose(abs(u), 1.0, rel_tol=0, abs_tol=1e-12):
            raise ValueError("rotation components must be unimodular")
    for zs in (zeros1, zeros2):
        if not fix_origin and len(zs) == 0:
            raise ValueError("a constant unimodular component does not map into the open disk")
        for a in zs:
            if abs(a) >= 1:
                raise NotInDiscusError(f"Blaschke zero {a!r} is not in the open unit disk")
    series = BCPowerSeries(
        _blaschke_coeffs(zeros1, rot.z1, fix_origin, N),
        _blaschke_coeffs(zeros2, rot.z2, fix_origin, N),
    )
    exact = (_blaschke(zeros1, rot.z1, fix_origin), _blaschke(zeros2, rot.z2, fix_origin))
    return SelfMap(series, exact)


def cayley(W: Bicomplex, tol: Tolerance = Tolerance(rel=1e-12)) -> Bicomplex:
    """``L(W) = i (1 + W) / (1 - W)``, componentwise onto the upper half-plane."""
    W = Bicomplex.coerce(W)
    out = []
    for w in (W.z1, W.z2):
        if abs(1 - w) <= tol.bound(1.0):
            raise PoleAtOneError(f"Cayley map has a pole at component value {w!r}")
        out.append(1j * (1 + w) / (1 - w))
    return Bicomplex(*out)


def cayley_inverse(U: Bicomplex, tol: Tolerance = Tolerance(rel=1e-12)) -> Bicomplex:
    """``L^{-1}(U) = (U - i) / (U + i)`` componentwise."""
    U = Bicomplex.coerce(U)
    out = []
    for u in (U.z1, U.z2):
        if abs(u + 1j) <= tol.bound(1.0):
            raise PoleAtOneError(f"inverse Cayley map has a pole at component value {u!r}")
        out.append((u - 1j) / (u + 1j))
    return Bicomplex(*out)


def in_upper_half_plane(Z: Bicomplex) -> bool:
    return Z.z1.imag >= 0 and Z.z2.imag >= 0


def composition_matrix(phi, N: int) -> BCMatrix:
    """Matrix of ``C_Phi`` compressed to degree ``<= N`` on the monomial basis.

    Column ``k`` holds the coefficients of ``Phi^k`` modulo ``Z^(N+1)``.
    """
    if N < 0:
        raise ValueError(f"truncation degree must be >= 0, got {N}")
    p = _series_of(phi)
    mats = []
    for c in (p.c1, p.c2):
        T = _toeplitz_lower(c, N)
        M = np.zeros((N + 1, N + 1), dtype=complex)
        col = np.zeros(N + 1, dtype=complex)
        col[0] = 1
        for k in range(N + 1):
            M[:, k] = col
            col = T @ col
        mats.append(M)
    return BCMatrix(*mats)


def _bound_formula(m: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(math.sqrt((1 + m.x1) / (1 - m.x1)), math.sqrt((1 + m.x2) / (1 - m.x2)))


def littlewood_bound(phi) -> Hyperbolic:
    """``sqrt((1 + |Phi(0)|_k) / (1 - |Phi(0)|_k))``, an upper bound for ``||C_Phi||_D``."""
    p = _series_of(phi)
    at0 = Bicomplex(p.c1[0], p.c2[0])
    _require_discus(at0, "Phi(0) =")
    return _bound_formula(modulus_k(at0))


def mobius_norm_bound(a: Bicomplex) -> Hyperbolic:
    """Norm bound for ``C_{T_a}``; identical to :func:`littlewood_bound` with ``Phi(0) = a``."""
    a = Bicomplex.coerce(a)
    _require_discus(a, "Moebius parameter")
    return _bound_formula(modulus_k(a))
