"""Random generators for scalars, operators, submodules and self-maps.

Everything takes an explicit ``numpy.random.Generator``.  :func:`trial_rng`
derives independent per-trial generators from a master seed with numpy's
counter-based ``SeedSequence`` spawn keys, so any trial can be replayed
alone and trials can run in any order.
"""

from __future__ import annotations

import zlib

import numpy as np

from .algebra import Bicomplex
from .duality import Submodule, submodule_from_generators
from .hardy import BCPowerSeries, SelfMap, blaschke_self_map
from .linalg import BCMatrix, BCVector


def trial_rng(seed: int, stream: str, trial: int) -> np.random.Generator:
    """Generator for trial ``trial`` of the named stream under master ``seed``.

    The seed sequence is ``SeedSequence(seed, spawn_key=(crc32(stream), trial))``.
    """
    key = (zlib.crc32(stream.encode("utf-8")), trial)
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def cgauss(rng: np.random.Generator, *shape) -> np.ndarray:
    """Standard complex Gaussian samples (unit expected squared modulus)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_bicomplex(rng: np.random.Generator, bound: float = 10.0) -> Bicomplex:
    """``x0 + i x1 + j x2 + ij x3`` with every real coordinate uniform in ``[-bound, bound]``."""
    return Bicomplex.from_real4(*rng.uniform(-bound, bound, 4))


def random_disc_point(rng: np.random.Generator, max_modulus: float = 1.0) -> complex:
    """Uniform point of the disk of radius ``max_modulus``."""
    r = max_modulus * np.sqrt(rng.uniform())
    return complex(r * np.exp(2j * np.pi * rng.uniform()))


def random_discus_point(rng: np.random.Generator, max_modulus: float = 1.0) -> Bicomplex:
    return Bicomplex(random_disc_point(rng, max_modulus), random_disc_point(rng, max_modulus))


def random_vector(rng: np.random.Generator, n: int) -> BCVector:
    return BCVector(cgauss(rng, n), cgauss(rng, n))


def random_matrix(rng: np.random.Generator, rows: int, cols: int | None = None) -> BCMatrix:
    cols = rows if cols is None else cols
    return BCMatrix(cgauss(rng, rows, cols), cgauss(rng, rows, cols))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(cgauss(rng, n, n))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def random_normal_matrix(rng: np.random.Generator, n: int) -> BCMatrix:
    """``U D U*`` in each component with Haar-like ``U`` and complex diagonal ``D``."""
    comps = []
    for _ in range(2):
        U = random_unitary(rng, n)
        comps.append((U * cgauss(rng, n)) @ U.conj().T)
    return BCMatrix(*comps)


def random_submodule(rng: np.random.Generator, n: int) -> Submodule:
    """Submodule with independently drawn component ranks in ``[0, n]``.

    Shared generators carry both components; the surplus rank of the larger
    component comes from generators that vanish in the other one.
    """
    r1, r2 = (int(r) for r in rng.integers(0, n + 1, size=2))
    shared = min(r1, r2)
    zero = np.zeros(n)
    gens = [random_vector(rng, n) for _ in range(shared)]
    gens += [BCVector(cgauss(rng, n), zero) for _ in range(r1 - shared)]
    gens += [BCVector(zero, cgauss(rng, n)) for _ in range(r2 - shared)]
    return submodule_from_generators(gens, ambient_dim=n)


def random_series(rng: np.random.Generator, N: int) -> BCPowerSeries:
    return BCPowerSeries(cgauss(rng, N + 1), cgauss(rng, N + 1))


def random_blaschke_self_map(
    rng: np.random.Generator,
    N: int,
    max_factors: int = 3,
    max_modulus: float = 0.9,
    fix_origin: bool = True,
) -> SelfMap:
    """Random ``u * z * B(z)`` per component with up to ``max_factors`` Blaschke zeros."""
    zeros = []
    for _ in range(2):
        # without the z factor an empty product is a constant unimodular map
        lo = 0 if fix_origin else 1
        m = int(rng.integers(lo, max(max_factors, lo) + 1))
        zeros.append([random_disc_point(rng, max_modulus) for _ in range(m)])
    rotation = Bicomplex(np.exp(2j * np.pi * rng.uniform()), np.exp(2j * np.pi * rng.uniform()))
    return blaschke_self_map(zeros[0], zeros[1], N, rotation, fix_origin=fix_origin)
