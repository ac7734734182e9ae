"""Bicomplex and hyperbolic scalar arithmetic.

A bicomplex number ``Z = z + jw`` (``z, w`` complex in the unit ``i``) is
stored in idempotent form ``Z = z1*e1 + z2*e2`` with ``z1 = z - iw`` and
``z2 = z + iw``, where ``e1 = (1 + ij)/2`` and ``e2 = (1 - ij)/2``.  In these
coordinates every ring operation, conjugation and modulus acts componentwise,
so the cartesian pair ``(z, w)`` is only an input/output view.

Hyperbolic numbers ``x1*e1 + x2*e2`` (real ``x1, x2``) carry the componentwise
partial order and are the codomain of all hyperbolic-valued norms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number
from typing import Union

from .errors import NegativeComponentError, NullConeError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "NULL_CONE_TOL",
    "Bicomplex",
    "Hyperbolic",
    "E1",
    "E2",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "from_cartesian",
    "to_cartesian",
    "add",
    "sub",
    "mul",
    "neg",
    "conj1",
    "conj2",
    "conj3",
    "modulus_j",
    "modulus_i",
    "modulus_k",
    "euclid_norm",
    "is_null_cone",
    "inverse",
    "hyp_add",
    "hyp_mul",
    "hyp_leq",
    "hyp_sqrt",
]


@dataclass(frozen=True)
class Tolerance:
    """Mixed relative/absolute tolerance: ``|err| <= abs + rel * scale``."""

    rel: float = 1e-9
    abs: float = 0.0

    def __post_init__(self):
        if not self.rel > 0:
            raise ValueError(f"relative tolerance must be > 0, got {self.rel!r}")
        if not self.abs >= 0:
            raise ValueError(f"absolute tolerance must be >= 0, got {self.abs!r}")

    def bound(self, scale: float = 1.0) -> float:
        return self.abs + self.rel * scale

    def close(self, a: float, b: float, scale: float | None = None) -> bool:
        if scale is None:
            scale = max(abs(a), abs(b))
        return abs(a - b) <= self.bound(scale)


DEFAULT_TOL = Tolerance(rel=1e-9)
NULL_CONE_TOL = Tolerance(rel=1e-10)

Scalar = Union["Bicomplex", complex, float, int]


def _finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"bicomplex components must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class Bicomplex:
    """Bicomplex number in idempotent coordinates ``z1*e1 + z2*e2``."""

    z1: complex
    z2: complex

    def __post_init__(self):
        object.__setattr__(self, "z1", _finite(self.z1))
        object.__setattr__(self, "z2", _finite(self.z2))

    # constructors / views

    @classmethod
    def from_cartesian(cls, z: complex, w: complex) -> "Bicomplex":
        z, w = complex(z), complex(w)
        return cls(z - 1j * w, z + 1j * w)

    @classmethod
    def from_real4(cls, x0: float, x1: float, x2: float, x3: float) -> "Bicomplex":
        """Build ``x0 + i*x1 + j*x2 + ij*x3``."""
        return cls.from_cartesian(complex(x0, x1), complex(x2, x3))

    @classmethod
    def coerce(cls, value: Scalar) -> "Bicomplex":
        if isinstance(value, Bicomplex):
            return value
        if isinstance(value, Hyperbolic):
            return value.as_bicomplex()
        if isinstance(value, Number):
            c = complex(value)
            return cls(c, c)
        raise TypeError(f"cannot interpret {type(value).__name__} as a bicomplex number")

    def to_cartesian(self) -> tuple[complex, complex]:
        return (self.z1 + self.z2) / 2, 1j * (self.z1 - self.z2) / 2

    def to_real4(self) -> tuple[float, float, float, float]:
        z, w = self.to_cartesian()
        return z.real, z.imag, w.real, w.imag

    # ring structure

    def __add__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(self.z1 * other.z1, self.z2 * other.z2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self * inverse(other)

    def __rtruediv__(self, other):
        return Bicomplex.coerce(other) * inverse(self)

    def __neg__(self):
        return Bicomplex(-self.z1, -self.z2)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        return Bicomplex(self.z1**n, self.z2**n)

    # conjugations and moduli

    def conj1(self) -> "Bicomplex":
        return Bicomplex(self.z2.conjugate(), self.z1.conjugate())

    def conj2(self) -> "Bicomplex":
        return Bicomplex(self.z2, self.z1)

    def conj3(self) -> "Bicomplex":
        return Bicomplex(self.z1.conjugate(), self.z2.conjugate())

    def modulus_k(self) -> "Hyperbolic":
        return Hyperbolic(abs(self.z1), abs(self.z2))

    def __abs__(self) -> float:
        return euclid_norm(self)

    def is_hyperbolic(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        """True when both idempotent components are real (within ``tol``)."""
        scale = max(abs(self.z1), abs(self.z2))
        bound = tol.bound(scale)
        return abs(self.z1.imag) <= bound and abs(self.z2.imag) <= bound

    def to_hyperbolic(self) -> "Hyperbolic":
        """Drop the imaginary parts; meaningful only when :meth:`is_hyperbolic`."""
        return Hyperbolic(self.z1.real, self.z2.real)

    def __repr__(self):
        return f"Bicomplex(z1={self.z1!r}, z2={self.z2!r})"


@dataclass(frozen=True, order=False)
class Hyperbolic:
    """Hyperbolic number ``x1*e1 + x2*e2`` with the componentwise partial order."""

    x1: float
    x2: float

    def __post_init__(self):
        for v in (self.x1, self.x2):
            if not math.isfinite(v):
                raise ValueError(f"hyperbolic components must be finite, got {v!r}")
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))

    @classmethod
    def coerce(cls, value) -> "Hyperbolic":
        if isinstance(value, Hyperbolic):
            return value
        if isinstance(value, (int, float)):
            return cls(value, value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a hyperbolic number")

    def is_positive(self) -> bool:
        return self.x1 >= 0 and self.x2 >= 0

    def is_strictly_positive(self) -> bool:
        return self.x1 > 0 and self.x2 > 0

    def as_bicomplex(self) -> Bicomplex:
        return Bicomplex(self.x1, self.x2)

    @property
    def magnitude(self) -> float:
        """Euclidean absolute value ``sqrt((x1**2 + x2**2) / 2)``."""
        return math.sqrt((self.x1 * self.x1 + self.x2 * self.x2) / 2)

    def __add__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except TypeError:
            return NotImplemented
        return Hyperbolic(self.x1 + other.x1, self.x2 + other.x2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except TypeError:
            return NotImplemented
        return Hyperbolic(self.x1 - other.x1, self.x2 - other.x2)

    def __mul__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except TypeError:
            return NotImplemented
        return Hyperbolic(self.x1 * other.x1, self.x2 * other.x2)

    __rmul__ = __mul__

    def __neg__(self):
        return Hyperbolic(-self.x1, -self.x2)

    def __le__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except TypeError:
            return NotImplemented
        return hyp_leq(self, other)

    def __ge__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except TypeError:
            return NotImplemented
        return hyp_leq(other, self)

    def sqrt(self) -> "Hyperbolic":
        return hyp_sqrt(self)

    def __iter__(self):
        return iter((self.x1, self.x2))

    def __repr__(self):
        return f"Hyperbolic(x1={self.x1!r}, x2={self.x2!r})"


E1 = Bicomplex(1, 0)
E2 = Bicomplex(0, 1)
ONE = Bicomplex(1, 1)
ZERO = Bicomplex(0, 0)
I = Bicomplex.from_cartesian(1j, 0)
J = Bicomplex.from_cartesian(0, 1)
K = Bicomplex.from_cartesian(0, 1j)  # k = ij, hyperbolic unit with k**2 = 1


def from_cartesian(z: complex, w: complex) -> Bicomplex:
    return Bicomplex.from_cartesian(z, w)


def to_cartesian(Z: Bicomplex) -> tuple[complex, complex]:
    return Z.to_cartesian()


def add(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a + b


def sub(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a - b


def mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a * b


def neg(a: Bicomplex) -> Bicomplex:
    return -a


def conj1(Z: Bicomplex) -> Bicomplex:
    """``z + jw -> conj(z) + j conj(w)``; swaps and conjugates idempotent parts."""
    return Z.conj1()


def conj2(Z: Bicomplex) -> Bicomplex:
    """``z + jw -> z - jw``; swaps idempotent parts."""
    return Z.conj2()


def conj3(Z: Bicomplex) -> Bicomplex:
    """``z + jw -> conj(z) - j conj(w)``; conjugates idempotent parts in place."""
    return Z.conj3()


def modulus_j(Z: Bicomplex) -> Bicomplex:
    """Squared modulus ``Z * conj1(Z)``. Bicomplex-valued, not a norm."""
    return Z * Z.conj1()


def modulus_i(Z: Bicomplex) -> Bicomplex:
    """Squared modulus ``Z * conj2(Z)``. Bicomplex-valued, not a norm."""
    return Z * Z.conj2()


def modulus_k(Z: Bicomplex) -> Hyperbolic:
    return Z.modulus_k()


def euclid_norm(Z: Bicomplex) -> float:
    return math.sqrt((abs(Z.z1) ** 2 + abs(Z.z2) ** 2) / 2)


def is_null_cone(Z: Bicomplex, tol: Tolerance = NULL_CONE_TOL) -> bool:
    """Whether ``Z`` is zero or a zero divisor (some idempotent part vanishes)."""
    a1, a2 = abs(Z.z1), abs(Z.z2)
    bound = tol.bound(max(1.0, a1, a2))
    return a1 <= bound or a2 <= bound


def inverse(Z: Bicomplex, tol: Tolerance = NULL_CONE_TOL) -> Bicomplex:
    if is_null_cone(Z, tol):
        raise NullConeError(f"{Z!r} lies in the null cone and has no inverse")
    return Bicomplex(1 / Z.z1, 1 / Z.z2)


def hyp_add(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    return a + b


def hyp_mul(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    return a * b


def hyp_leq(a: Hyperbolic, b: Hyperbolic) -> bool:
    """Componentwise order. Incomparable pairs are ``False`` in both directions."""
    return a.x1 <= b.x1 and a.x2 <= b.x2


def hyp_sqrt(a: Hyperbolic) -> Hyperbolic:
    if not a.is_positive():
        raise NegativeComponentError(f"square root of non-positive {a!r}")
    return Hyperbolic(math.sqrt(a.x1), math.sqrt(a.x2))

