import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from coloured_hopf import cmatrix as cm
from coloured_hopf.errors import DimensionMismatch, Singular
from coloured_hopf.models import closed_form_R9

from conftest import rand_c, seeds


def test_kron_entry():
    jp = np.array([[0, 1], [0, 0]])
    jm = jp.T
    k = cm.kron(jp, jm)
    assert k.shape == (4, 4)
    assert k[1, 2] == 1
    assert cm.max_abs(k) == 1


def test_kron_rejects_vectors():
    with pytest.raises(DimensionMismatch):
        cm.kron(np.ones(3), np.eye(2))


@given(seeds())
@settings(max_examples=30, deadline=None)
def test_embed_matches_explicit_kron(rng):
    d = (2, 3, 2)
    x = rand_c(rng, (d[0] * d[1], d[0] * d[1]))
    assert np.allclose(cm.embed(x, (1, 2), d), np.kron(x, np.eye(d[2])))
    y = rand_c(rng, (d[1] * d[2], d[1] * d[2]))
    assert np.allclose(cm.embed(y, (2, 3), d), np.kron(np.eye(d[0]), y))
    # R_13 of a pure tensor a (x) b is a (x) 1 (x) b
    a, b = rand_c(rng, (2, 2)), rand_c(rng, (2, 2))
    r13 = cm.embed(np.kron(a, b), (1, 3), d)
    assert np.allclose(r13, np.kron(np.kron(a, np.eye(3)), b))


def test_embed_bad_shape():
    with pytest.raises(DimensionMismatch):
        cm.embed(np.eye(5), (1, 2), (2, 2, 2))


@given(seeds())
@settings(max_examples=30, deadline=None)
def test_reversed_leg_products_on_pure_tensors(rng):
    a1, a2 = rand_c(rng, (2, 2)), rand_c(rng, (2, 2))
    b1, b2 = rand_c(rng, (3, 3)), rand_c(rng, (3, 3))
    x, y = np.kron(a1, b1), np.kron(a2, b2)
    assert np.allclose(cm.rev1_product(x, y, 2, 3), np.kron(a2 @ a1, b1 @ b2))
    assert np.allclose(cm.rev2_product(x, y, 2, 3), np.kron(a1 @ a2, b2 @ b1))


@given(seeds(), st.floats(0.01, 6.0))
@settings(max_examples=40, deadline=None)
def test_matexp_against_scipy(rng, scale):
    a = rand_c(rng, (4, 4))
    a *= scale / cm.max_abs(a)
    ref = scipy.linalg.expm(a)
    assert cm.max_abs_diff(cm.matexp(a), ref) <= 1e-12 * max(1, cm.max_abs(ref))


def test_matexp_nilpotent_is_exact():
    n = np.diag([3.0, -2.5], k=1).astype(complex)
    e = cm.matexp(40 * n)
    expected = np.eye(3) + 40 * n + (40 * n) @ (40 * n) / 2
    assert np.array_equal(e, expected)


def test_inverse_and_singular():
    a = np.array([[2, 1], [1, 1]], dtype=complex)
    assert np.allclose(cm.inverse(a) @ a, np.eye(2))
    with pytest.raises(Singular):
        cm.inverse(np.array([[1, 2], [2, 4]], dtype=complex))


def test_inverse_of_oscillator_R_is_one_minus_nilpotent_part():
    r = closed_form_R9(0.8, (2, 0.5), (1, 1))
    x = r - np.eye(9)
    assert cm.max_abs(x @ x) == 0
    assert cm.max_abs_diff(cm.inverse(r), np.eye(9) - x) < 1e-14


def test_swap_flips_pure_tensors():
    rng = np.random.default_rng(3)
    a, b = rand_c(rng, (2, 2)), rand_c(rng, (3, 3))
    t = cm.swap(2, 3)
    assert np.allclose(t @ np.kron(a, b) @ t.T, np.kron(b, a))


def test_scaled_diff():
    a = np.full((2, 2), 1e6, dtype=complex)
    assert cm.scaled_diff(a, a + 1) == pytest.approx(1e-6)
    assert cm.scaled_diff(np.zeros(2), np.full(2, 0.5)) == 0.5
    assert cm.scaled_diff(np.eye(2), 2 * np.eye(2), scale=100) == pytest.approx(0.01)
