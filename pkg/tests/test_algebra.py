import math

import numpy as np
import pytest
from conftest import bicomplexes, cartesian_matrix, complexes
from hypothesis import given
from hypothesis import strategies as st

from bcx.algebra import (
    E1,
    E2,
    I,
    J,
    K,
    ONE,
    ZERO,
    Bicomplex,
    Hyperbolic,
    Tolerance,
    add,
    conj1,
    conj2,
    conj3,
    euclid_norm,
    from_cartesian,
    hyp_add,
    hyp_leq,
    hyp_mul,
    hyp_sqrt,
    inverse,
    is_null_cone,
    modulus_i,
    modulus_j,
    modulus_k,
    mul,
    neg,
    sub,
    to_cartesian,
)
from bcx.errors import NegativeComponentError, NullConeError


def close(a: Bicomplex, b: Bicomplex, tol=1e-12):
    return abs(a.z1 - b.z1) <= tol and abs(a.z2 - b.z2) <= tol


# --- conversions ------------------------------------------------------------


@pytest.mark.parametrize(
    "z, w, z1, z2",
    [
        (1, 1j, 2, 0),
        (1, 0, 1, 1),
        (0.5, -0.5j, 0, 1),
    ],
)
def test_from_cartesian_examples(z, w, z1, z2):
    Z = from_cartesian(z, w)
    assert Z.z1 == z1 and Z.z2 == z2


@pytest.mark.parametrize(
    "z1, z2, z, w",
    [
        (2, 0, 1, 1j),
        (1, 1, 1, 0),
        (1j, 1j, 1j, 0),
    ],
)
def test_to_cartesian_examples(z1, z2, z, w):
    assert to_cartesian(Bicomplex(z1, z2)) == (z, w)


def test_units_in_idempotent_form():
    # e1 = (1 + ij)/2: z = 1/2, w = i/2
    assert close(from_cartesian(0.5, 0.5j), E1)
    assert close(I * I, -ONE) and close(J * J, -ONE) and close(K * K, ONE)
    assert close(I * J, K)


@given(complexes, complexes)
def test_cartesian_round_trip(z, w):
    Z = from_cartesian(z, w)
    z2, w2 = to_cartesian(Z)
    scale = max(1.0, abs(z), abs(w))
    assert abs(z2 - z) <= 1e-12 * scale and abs(w2 - w) <= 1e-12 * scale


def test_from_real4_matches_cartesian():
    Z = Bicomplex.from_real4(1.0, 2.0, 3.0, 4.0)
    assert close(Z, from_cartesian(1 + 2j, 3 + 4j))
    assert Z.to_real4() == pytest.approx((1.0, 2.0, 3.0, 4.0))


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        Bicomplex(float("nan"), 0)


# --- ring operations ----------------------------------------------------------


def test_idempotent_relations():
    assert close(E1 * E2, ZERO)
    assert close(E1 + E2, ONE)
    assert close(E1 * E1, E1)
    assert close(mul(Bicomplex(2, 3), Bicomplex(5, 7)), Bicomplex(10, 21))


def test_function_forms_agree_with_operators():
    a, b = Bicomplex(1 + 2j, 3), Bicomplex(-1j, 2 - 1j)
    assert add(a, b) == a + b and sub(a, b) == a - b and mul(a, b) == a * b and neg(a) == -a


@given(bicomplexes, bicomplexes)
def test_multiplication_matches_matrix_oracle(a, b):
    got = cartesian_matrix(a * b)
    want = cartesian_matrix(a) @ cartesian_matrix(b)
    scale = max(1.0, np.abs(cartesian_matrix(a)).max() * np.abs(cartesian_matrix(b)).max())
    assert np.abs(got - want).max() <= 1e-12 * scale


@given(bicomplexes, bicomplexes, bicomplexes)
def test_ring_laws(a, b, c):
    s = max(1.0, *(max(abs(x.z1), abs(x.z2)) for x in (a, b, c)))
    assert close(a * b, b * a, 1e-12 * s * s)
    assert close((a * b) * c, a * (b * c), 1e-12 * s ** 3)
    assert close(a * (b + c), a * b + a * c, 1e-12 * s * s)
    assert close(a - a, ZERO)


def test_division_and_powers():
    a = Bicomplex(2, 4)
    assert close(a / a, ONE)
    assert close(a ** 3, a * a * a)
    assert close(a ** 0, ONE)
    assert close(a ** -1, inverse(a))


def test_scalar_coercion_embeds_diagonally():
    assert close(Bicomplex(1, 2) * 3, Bicomplex(3, 6))
    assert close(1j + Bicomplex(0, 0), Bicomplex(1j, 1j))
    assert close(Bicomplex(1, 2) * Hyperbolic(2, 3), Bicomplex(2, 6))


# --- conjugations and moduli --------------------------------------------------


def test_conjugation_examples():
    assert close(conj3(E1), E1)
    assert close(conj2(Bicomplex(2, 3)), Bicomplex(3, 2))
    Z = from_cartesian(1, 1)
    assert close(conj1(conj1(Z)), Z)


@given(complexes, complexes)
def test_conjugations_match_cartesian_definitions(z, w):
    Z = from_cartesian(z, w)
    zc, wc = z.conjugate(), w.conjugate()
    tol = 1e-12 * max(1.0, abs(z), abs(w))
    assert close(conj1(Z), from_cartesian(zc, wc), tol)
    assert close(conj2(Z), from_cartesian(z, -w), tol)
    assert close(conj3(Z), from_cartesian(zc, -wc), tol)


@given(bicomplexes, bicomplexes)
def test_conjugation_table(a, b):
    for conj in (conj1, conj2, conj3):
        assert conj(conj(a)) == a
    assert conj1(conj2(a)) == conj3(a) == conj2(conj1(a))
    s = max(1.0, abs(a.z1), abs(a.z2), abs(b.z1), abs(b.z2))
    for conj in (conj1, conj2, conj3):
        # every conjugation is a ring automorphism
        assert close(conj(a * b), conj(a) * conj(b), 1e-12 * s * s)
        assert close(conj(a + b), conj(a) + conj(b), 1e-12 * s)


def test_modulus_examples():
    assert close(modulus_i(E1), ZERO)
    assert close(modulus_j(ONE), ONE)
    # j^{dagger 1} = j, so j * j^{dagger 1} = j^2 = -1
    assert close(modulus_j(J), -ONE)
    assert modulus_k(Bicomplex(3, 4)) == Hyperbolic(3, 4)
    assert modulus_k(ZERO) == Hyperbolic(0, 0)
    assert modulus_k(J) == Hyperbolic(1, 1)


@given(complexes, complexes)
def test_moduli_match_cartesian_formulas(z, w):
    Z = from_cartesian(z, w)
    s = max(1.0, abs(z), abs(w)) ** 2
    # Z * conj1(Z) through the matrix representation; Z * conj2(Z) = z^2 + w^2
    zc, wc = z.conjugate(), w.conjugate()
    want_j = cartesian_matrix(Z) @ cartesian_matrix(from_cartesian(zc, wc))
    assert np.abs(cartesian_matrix(modulus_j(Z)) - want_j).max() <= 1e-11 * s
    assert close(modulus_i(Z), from_cartesian(z * z + w * w, 0), 1e-11 * s)
    # Z * conj3(Z) is hyperbolic with components |z1|^2, |z2|^2
    sq = Z * conj3(Z)
    mk = modulus_k(Z)
    assert sq.is_hyperbolic(Tolerance(rel=1e-12))
    assert sq.z1.real == pytest.approx(mk.x1 ** 2, rel=1e-12, abs=1e-300)


@given(bicomplexes, bicomplexes)
def test_modulus_k_multiplicative(a, b):
    got, want = modulus_k(a * b), hyp_mul(modulus_k(a), modulus_k(b))
    assert got.x1 == pytest.approx(want.x1, rel=1e-12, abs=1e-300)
    assert got.x2 == pytest.approx(want.x2, rel=1e-12, abs=1e-300)


@pytest.mark.parametrize(
    "Z, want",
    [
        (Bicomplex(3, 4), math.sqrt(12.5)),
        (ONE, 1.0),
        (E1, 1 / math.sqrt(2)),
    ],
)
def test_euclid_norm_examples(Z, want):
    assert euclid_norm(Z) == pytest.approx(want, rel=1e-15)


@given(st.tuples(*[st.floats(-1e3, 1e3)] * 4))
def test_euclid_norm_is_r4_norm_and_bridges_modulus_k(x):
    Z = Bicomplex.from_real4(*x)
    r4 = math.sqrt(sum(v * v for v in x))
    assert euclid_norm(Z) == pytest.approx(r4, rel=1e-12, abs=1e-300)
    assert euclid_norm(Z) == pytest.approx(modulus_k(Z).magnitude, rel=1e-12, abs=1e-300)
    assert abs(Z) == euclid_norm(Z)


@given(bicomplexes, bicomplexes)
def test_submultiplicative_with_sqrt2(a, b):
    assert euclid_norm(a * b) <= math.sqrt(2) * euclid_norm(a) * euclid_norm(b) * (1 + 1e-12)


def test_submultiplicative_equality_at_e1():
    assert euclid_norm(E1 * E1) == pytest.approx(math.sqrt(2) * euclid_norm(E1) ** 2, abs=1e-15)


# --- null cone and inverse ------------------------------------------------------


@pytest.mark.parametrize(
    "Z, want",
    [
        (E1, True),
        (from_cartesian(1, 1j), True),
        (Bicomplex(2, 3), False),
        (ZERO, True),
        (Bicomplex(1e-12, 1), True),
    ],
)
def test_null_cone_examples(Z, want):
    assert is_null_cone(Z) is want


def test_inverse_examples():
    assert close(inverse(Bicomplex(2, 4)), Bicomplex(0.5, 0.25))
    assert close(inverse(ONE), ONE)
    with pytest.raises(NullConeError):
        inverse(E1)
    with pytest.raises(ZeroDivisionError):
        ONE / E2


@given(bicomplexes)
def test_inverse_is_two_sided(Z):
    if is_null_cone(Z):
        with pytest.raises(NullConeError):
            inverse(Z)
    else:
        W = inverse(Z)
        assert close(Z * W, ONE, 1e-9) and close(W * Z, ONE, 1e-9)


# --- hyperbolic numbers ----------------------------------------------------------


def test_hyperbolic_examples():
    assert hyp_sqrt(Hyperbolic(4, 9)) == Hyperbolic(2, 3)
    assert hyp_leq(Hyperbolic(1, 2), Hyperbolic(2, 2))
    assert not hyp_leq(Hyperbolic(2, 1), Hyperbolic(1, 2))
    assert not hyp_leq(Hyperbolic(1, 2), Hyperbolic(2, 1))
    assert hyp_add(Hyperbolic(1, 2), Hyperbolic(3, 4)) == Hyperbolic(4, 6)
    with pytest.raises(NegativeComponentError):
        hyp_sqrt(Hyperbolic(-1, 4))


def test_hyperbolic_operators_and_views():
    h = Hyperbolic(1, 2)
    assert h <= Hyperbolic(1, 3) and Hyperbolic(1, 3) >= h
    assert list(h) == [1.0, 2.0]
    assert h.as_bicomplex().is_hyperbolic()
    assert K.is_hyperbolic() and not I.is_hyperbolic()
    assert Bicomplex(2, 3).to_hyperbolic() == Hyperbolic(2, 3)


@given(st.floats(0, 1e6), st.floats(0, 1e6))
def test_hyp_sqrt_squares_back(x1, x2):
    r = hyp_sqrt(Hyperbolic(x1, x2))
    sq = r * r
    assert math.isclose(sq.x1, x1, rel_tol=1e-12, abs_tol=1e-300)
    assert math.isclose(sq.x2, x2, rel_tol=1e-12, abs_tol=1e-300)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rel=0)
    with pytest.raises(ValueError):
        Tolerance(rel=1e-9, abs=-1)
    assert Tolerance(rel=1e-3, abs=1e-6).bound(10) == pytest.approx(1e-2 + 1e-6)
