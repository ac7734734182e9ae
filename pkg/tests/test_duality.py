import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bcx.algebra import E1, E2, Bicomplex, Hyperbolic
from bcx.duality import (
    Functional,
    Submodule,
    annihilator,
    check_dual_isometries,
    extend_functional,
    functional_norm_on,
    project,
    quotient_functional_norm,
    quotient_norm,
    restrict,
    submodule_from_generators,
)
from bcx.errors import DimensionMismatchError, RepresenterNotInSubmoduleError
from bcx.linalg import BCVector, dnorm_vec, inner_product
from bcx.sampling import cgauss, random_submodule, random_vector

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 6)


def hclose(a: Hyperbolic, b: Hyperbolic, rel=1e-9, abs_=1e-12):
    return a.x1 == pytest.approx(b.x1, rel=rel, abs=abs_) and a.x2 == pytest.approx(b.x2, rel=rel, abs=abs_)


def lstsq_distance(x: np.ndarray, gens: np.ndarray) -> float:
    """Distance from ``x`` to the column span of ``gens`` by least squares."""
    if gens.shape[1] == 0:
        return float(np.linalg.norm(x))
    c, *_ = np.linalg.lstsq(gens, x, rcond=None)
    return float(np.linalg.norm(x - gens @ c))


E1_AXIS = BCVector.from_entries([1, 0])


# --- submodules -------------------------------------------------------------------


def test_from_generators_examples():
    M = submodule_from_generators([E1_AXIS])
    assert M.ranks == (1, 1)
    assert np.allclose(np.abs(M.basis1[:, 0]), [1, 0])
    M = submodule_from_generators([BCVector.from_entries([E1, 0])])
    assert M.ranks == (1, 0)
    M = submodule_from_generators([], ambient_dim=3)
    assert M.ranks == (0, 0)
    with pytest.raises(DimensionMismatchError):
        submodule_from_generators([BCVector.zeros(2), BCVector.zeros(3)])


def test_rank_deficient_generators_are_dropped():
    g = BCVector.from_entries([1, 2, 3])
    M = submodule_from_generators([g, 2 * g, BCVector.from_entries([E2, 0, 0])])
    assert M.ranks == (1, 2)


def test_basis_must_be_orthonormal():
    with pytest.raises(ValueError):
        Submodule(2, np.array([[1.0], [1.0]]), np.zeros((2, 0)))


@given(seeds, dims)
def test_random_submodule_is_orthonormal_with_independent_ranks(seed, n):
    M = random_submodule(np.random.default_rng(seed), n)
    for Q in (M.basis1, M.basis2):
        assert np.allclose(Q.conj().T @ Q, np.eye(Q.shape[1]), atol=1e-10)
        assert 0 <= Q.shape[1] <= n


# --- projection and quotient norm ---------------------------------------------------


def test_projection_examples():
    M = submodule_from_generators([E1_AXIS])
    a, b = Bicomplex(1 + 2j, 3), Bicomplex(-1, 4j)
    x = BCVector.from_entries([a, b])
    assert project(x, M).allclose(BCVector.from_entries([a, 0]))
    assert project(E1_AXIS, M).allclose(E1_AXIS)
    assert project(BCVector.from_entries([0, b]), M).allclose(BCVector.zeros(2))
    assert hclose(quotient_norm(x, M), b.modulus_k())
    assert quotient_norm(E1_AXIS, M) == Hyperbolic(0, 0)
    assert hclose(quotient_norm(x, Submodule.zero(2)), dnorm_vec(x))
    with pytest.raises(DimensionMismatchError):
        project(BCVector.zeros(3), M)


@given(seeds, dims)
def test_quotient_norm_matches_least_squares_oracle(seed, n):
    rng = np.random.default_rng(seed)
    k1, k2 = rng.integers(0, n + 1, size=2)
    G1, G2 = cgauss(rng, n, k1), cgauss(rng, n, k2)
    zero = np.zeros(n)
    gens = [BCVector(g, zero) for g in G1.T] + [BCVector(zero, g) for g in G2.T]
    M = submodule_from_generators(gens, ambient_dim=n)
    x = random_vector(rng, n)
    want = Hyperbolic(lstsq_distance(x.v1, G1), lstsq_distance(x.v2, G2))
    assert hclose(quotient_norm(x, M), want, rel=1e-8, abs_=1e-10)


@given(seeds, dims)
def test_projection_properties(seed, n):
    rng = np.random.default_rng(seed)
    M = random_submodule(rng, n)
    x, y = random_vector(rng, n), random_vector(rng, n)
    p = project(x, M)
    assert project(p, M).allclose(p)
    q = quotient_norm(x, M)
    assert q <= dnorm_vec(x) * (1 + 1e-12)
    # coset arithmetic: representatives differing by elements of M give the same coset
    m1, m2 = project(random_vector(rng, n), M), project(random_vector(rng, n), M)
    d = quotient_norm((x + y) - ((x + m1) + (y + m2)), M)
    assert d.x1 <= 1e-10 and d.x2 <= 1e-10
    lam = Bicomplex(complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2)))
    assert hclose(quotient_norm(lam * x, M), lam.modulus_k() * q, rel=1e-9, abs_=1e-10)


# --- annihilator --------------------------------------------------------------------


def test_annihilator_examples():
    perp = annihilator(submodule_from_generators([E1_AXIS]))
    assert perp.ranks == (1, 1)
    assert np.allclose(np.abs(perp.basis1[:, 0]), [0, 1])
    assert annihilator(Submodule.whole(3)).ranks == (0, 0)
    assert annihilator(Submodule.zero(3)).ranks == (3, 3)


@given(seeds, dims)
def test_annihilator_ranks_and_double_annihilator(seed, n):
    M = random_submodule(np.random.default_rng(seed), n)
    perp = annihilator(M)
    assert M.ranks[0] + perp.ranks[0] == n and M.ranks[1] + perp.ranks[1] == n
    for g in perp.generators():
        for m in M.generators():
            assert abs(inner_product(m, g)) <= 1e-10
    back = annihilator(perp)
    for Q, R in ((M.basis1, back.basis1), (M.basis2, back.basis2)):
        assert np.allclose(Q @ Q.conj().T, R @ R.conj().T, atol=1e-9)


# --- functionals ------------------------------------------------------------------------


def test_extension_examples():
    M = submodule_from_generators([E1_AXIS])
    ext = extend_functional(Functional(E1_AXIS), M)
    assert ext.riesz.allclose(E1_AXIS)
    assert extend_functional(Functional(BCVector.zeros(2)), M).riesz.allclose(BCVector.zeros(2))
    Me = submodule_from_generators([BCVector.from_entries([E1, 0])])
    ext = extend_functional(Functional(BCVector.from_entries([E1, 0])), Me)
    assert np.all(ext.riesz.v2 == 0)
    with pytest.raises(RepresenterNotInSubmoduleError):
        extend_functional(Functional(BCVector.from_entries([0, 1])), M)


@given(seeds, dims)
def test_extension_preserves_values_and_norm(seed, n):
    rng = np.random.default_rng(seed)
    M = random_submodule(rng, n)
    f = restrict(Functional(random_vector(rng, n)), M)
    F = extend_functional(f, M)
    for _ in range(5):
        m = project(random_vector(rng, n), M)
        assert abs(F(m) - f(m)) <= 1e-10
    assert hclose(F.dnorm(), functional_norm_on(f, M), abs_=1e-10)


@given(seeds, dims)
def test_functional_norm_on_submodule_is_attained_supremum(seed, n):
    rng = np.random.default_rng(seed)
    M = random_submodule(rng, n)
    f = Functional(random_vector(rng, n))
    norm = functional_norm_on(f, M)
    # |f(m)| <= ||f|_M|| ||m|| for random m in M, with equality at the projected representer
    for _ in range(10):
        m = project(random_vector(rng, n), M)
        val = f(m).modulus_k()
        assert val <= norm * dnorm_vec(m) * (1 + 1e-10) + 1e-12
    r = project(f.riesz, M)
    assert hclose(f(r).modulus_k(), norm * dnorm_vec(r), abs_=1e-10)


@given(seeds, dims)
def test_quotient_functional_norm_is_attained_supremum(seed, n):
    rng = np.random.default_rng(seed)
    M = random_submodule(rng, n)
    s = random_vector(rng, n)
    y = Functional(s - project(s, M))
    norm = quotient_functional_norm(y, M)
    for _ in range(10):
        x = random_vector(rng, n)
        assert y(x).modulus_k() <= norm * quotient_norm(x, M) * (1 + 1e-10) + 1e-12
    r = y.riesz
    assert hclose(y(r).modulus_k(), norm * quotient_norm(r, M), abs_=1e-10)


# --- dual isometries ------------------------------------------------------------------------


def test_dual_isometry_examples():
    rep = check_dual_isometries(submodule_from_generators([E1_AXIS]), trials=10, seed=1)
    assert max(rep.max_violation_a) <= 1e-8 and max(rep.max_violation_b) <= 1e-8
    for M in (Submodule.whole(3), Submodule.zero(3)):
        rep = check_dual_isometries(M, trials=5, seed=2)
        assert max(rep.max_violation_a) <= 1e-12 and max(rep.max_violation_b) <= 1e-12
    assert rep.to_json()["trials"] == 5
    with pytest.raises(ValueError):
        check_dual_isometries(Submodule.zero(2), trials=0, seed=0)


def test_dual_isometries_with_unequal_ranks():
    M = submodule_from_generators([BCVector.from_entries([E1, 0, 0]), BCVector.from_entries([0, 1, 0])])
    assert M.ranks == (2, 1)
    rep = check_dual_isometries(M, trials=20, seed=3)
    assert max(rep.max_violation_a) <= 1e-8 and max(rep.max_violation_b) <= 1e-8


@given(seeds, dims)
def test_dual_isometries_random(seed, n):
    M = random_submodule(np.random.default_rng(seed), n)
    rep = check_dual_isometries(M, trials=3, seed=seed)
    assert max(rep.max_violation_a) <= 1e-8 and max(rep.max_violation_b) <= 1e-8
