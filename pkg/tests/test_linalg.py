import numpy as np
import pytest

from qnh import (
    FanoForm,
    InvalidStateError,
    NotHermitianError,
    NotPSDError,
    as_density_matrix,
    canonicalize,
    fano_compose,
    fano_decompose,
    herm_eig,
    hs_norm_sq,
    kron,
    mat_sqrt_psd,
    trace_norm,
)
from qnh.linalg import ID2, ID4, SIGMA_X, SIGMA_Y, SIGMA_Z

from conftest import bell_phi, bell_psi, rand_herm, rand_rho, rand_unitary


class TestHermEig:
    def test_diagonal(self):
        w, v = herm_eig(np.diag([1.0, 2.0, 3.0, 4.0]).astype(complex))
        assert np.allclose(w, [1, 2, 3, 4])
        assert np.allclose(np.abs(v), np.eye(4))

    def test_pauli_x_spectrum(self):
        w, _ = herm_eig(SIGMA_X)
        assert np.allclose(w, [-1.0, 1.0])

    def test_reconstruction_many(self, rng):
        worst = 0.0
        worst_orth = 0.0
        for i in range(10_000):
            n = 2 if i % 2 else 4
            h = rand_herm(rng, n)
            w, v = herm_eig(h)
            rebuilt = (v * w) @ v.conj().T
            worst = max(worst, np.abs(rebuilt - h).max())
            worst_orth = max(worst_orth, np.abs(v.conj().T @ v - np.eye(n)).max())
        assert worst <= 1e-10
        assert worst_orth <= 1e-10

    def test_eigenpairs(self, rng):
        h = rand_herm(rng, 4)
        w, v = herm_eig(h)
        for k in range(4):
            assert np.abs(h @ v[:, k] - w[k] * v[:, k]).max() <= 1e-10
        assert np.all(np.diff(w) >= 0)

    def test_rejects_non_hermitian(self):
        m = np.array([[0, 1], [0, 0]], dtype=complex)
        with pytest.raises(NotHermitianError):
            herm_eig(m)


class TestMatSqrtPsd:
    def test_identity(self):
        assert np.allclose(mat_sqrt_psd(ID4), ID4)

    def test_diagonal(self):
        m = np.diag([4.0, 1.0, 0.0, 9.0]).astype(complex)
        assert np.allclose(mat_sqrt_psd(m), np.diag([2.0, 1.0, 0.0, 3.0]))

    def test_projector_is_own_root(self):
        p = bell_phi()
        assert np.abs(mat_sqrt_psd(p) - p).max() <= 1e-12

    def test_square_recovers(self, rng):
        for _ in range(50):
            rho = rand_rho(rng)
            s = mat_sqrt_psd(rho)
            assert np.abs(s @ s - rho).max() <= 1e-9
            assert np.linalg.eigvalsh(s)[0] >= -1e-12

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSDError):
            mat_sqrt_psd(np.diag([0.5, 0.5, 0.5, -0.5]).astype(complex))


class TestNorms:
    def test_trace_norm_diagonal(self):
        assert trace_norm(np.diag([0.5, -0.5, 0.0, 0.0]).astype(complex)) == pytest.approx(1.0)

    def test_trace_norm_zero(self):
        assert trace_norm(np.zeros((4, 4), dtype=complex)) == 0.0

    def test_trace_norm_bell_residual(self):
        # Residual of |Phi+> under a computational-basis measurement on
        # qubit a: only the antidiagonal coherences survive, eigenvalues
        # +/- 1/2.
        residual = np.zeros((4, 4), dtype=complex)
        residual[0, 3] = residual[3, 0] = 0.5
        assert trace_norm(residual) == pytest.approx(1.0, abs=1e-12)
        assert hs_norm_sq(residual) == pytest.approx(0.5, abs=1e-12)

    def test_trace_norm_unitary_invariance(self, rng):
        for _ in range(200):
            m = rand_herm(rng, 4)
            u = rand_unitary(rng, 4)
            assert abs(trace_norm(u @ m @ u.conj().T) - trace_norm(m)) <= 1e-10 * max(
                1.0, trace_norm(m)
            )

    def test_trace_norm_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            trace_norm(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_hs_norm_identity(self):
        assert hs_norm_sq(ID4) == pytest.approx(4.0)
        assert hs_norm_sq(np.zeros((4, 4))) == 0.0

    def test_hs_norm_two_ways(self, rng):
        for _ in range(100):
            m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            direct = np.trace(m @ m.conj().T).real
            assert abs(hs_norm_sq(m) - direct) <= 1e-12 * max(1.0, direct)


class TestKron:
    def test_identities(self):
        assert np.array_equal(kron(ID2, ID2), ID4)
        assert np.allclose(kron(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]))

    def test_mixed_product(self):
        left = kron(SIGMA_X, ID2) @ kron(ID2, SIGMA_X)
        assert np.allclose(left, kron(SIGMA_X, SIGMA_X))

    def test_mixed_product_random(self, rng):
        a, b, c, d = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(4))
        assert np.allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)


class TestDensityMatrixValidation:
    def test_accepts_valid(self, rng):
        rho = rand_rho(rng)
        out = as_density_matrix(rho)
        assert np.allclose(out, rho)

    def test_rejects_trace(self):
        with pytest.raises(InvalidStateError) as err:
            as_density_matrix(0.9 * np.eye(4) / 4)
        assert err.value.invariant == "trace"

    def test_rejects_non_hermitian(self):
        m = np.eye(4, dtype=complex) / 4
        m[0, 1] = 1e-3
        with pytest.raises(InvalidStateError) as err:
            as_density_matrix(m)
        assert err.value.invariant == "hermitian"

    def test_rejects_negative_spectrum(self):
        m = np.diag([0.7, 0.5, -0.1, -0.1]).astype(complex)
        with pytest.raises(InvalidStateError) as err:
            as_density_matrix(m)
        assert err.value.invariant == "psd"

    def test_rejects_shape(self):
        with pytest.raises(InvalidStateError) as err:
            as_density_matrix(np.eye(2) / 2)
        assert err.value.invariant == "shape"

    def test_clips_rounding_negatives(self, rng):
        rho = rand_rho(rng)
        w, v = np.linalg.eigh(rho)
        w[0] = -5e-11
        w /= w.sum()
        dirty = (v * w) @ v.conj().T
        assert np.linalg.eigvalsh(dirty)[0] < 0.0
        out = as_density_matrix(dirty)
        assert np.linalg.eigvalsh(out)[0] >= 0.0
        assert abs(out.trace() - 1.0) <= 1e-12


class TestFano:
    def test_maximally_mixed(self):
        f = fano_decompose(ID4 / 4)
        assert np.allclose(f.x, 0) and np.allclose(f.y, 0) and np.allclose(f.t, 0)

    def test_bell_phi(self):
        f = fano_decompose(bell_phi())
        assert np.allclose(f.x, 0, atol=1e-12)
        assert np.allclose(f.y, 0, atol=1e-12)
        assert np.allclose(f.t, np.diag([1.0, -1.0, 1.0]), atol=1e-12)

    def test_bell_psi(self):
        f = fano_decompose(bell_psi())
        assert np.allclose(f.t, np.diag([1.0, 1.0, -1.0]), atol=1e-12)

    def test_compose_trivial(self):
        f = FanoForm(x=np.zeros(3), y=np.zeros(3), t=np.zeros((3, 3)))
        assert np.allclose(fano_compose(f), ID4 / 4)

    def test_compose_bell(self):
        f = FanoForm(x=np.zeros(3), y=np.zeros(3), t=np.diag([1.0, -1.0, 1.0]))
        assert np.abs(fano_compose(f) - bell_phi()).max() <= 1e-12

    def test_roundtrip_random(self, rng):
        for _ in range(1000):
            rho = rand_rho(rng)
            back = fano_compose(fano_decompose(rho))
            assert np.abs(back - rho).max() <= 1e-12


class TestCanonicalize:
    def test_already_diagonal(self):
        f = fano_decompose(bell_phi())
        can = canonicalize(f)
        assert np.allclose(np.sort(np.abs(can.c))[::-1], [1.0, 1.0, 1.0], atol=1e-12)
        assert np.linalg.det(can.o_a) == pytest.approx(1.0, abs=1e-10)
        assert np.linalg.det(can.o_b) == pytest.approx(1.0, abs=1e-10)

    def test_rank_one_product(self):
        x = np.array([0.0, 0.6, 0.8])
        y = np.array([1.0, 0.0, 0.0])
        f = FanoForm(x=x, y=y, t=np.outer(x, y))
        can = canonicalize(f)
        assert np.allclose(np.abs(can.c), [1.0, 0.0, 0.0], atol=1e-12)
        assert np.allclose(np.abs(can.x_rot), [1.0, 0.0, 0.0], atol=1e-12)

    def test_random_properties(self, rng):
        for _ in range(300):
            t = rng.normal(size=(3, 3))
            f = FanoForm(x=rng.normal(size=3), y=rng.normal(size=3), t=t)
            can = canonicalize(f)
            diag = can.o_a @ t @ can.o_b.T
            assert np.abs(diag - np.diag(can.c)).max() <= 1e-10
            assert np.linalg.det(can.o_a) == pytest.approx(1.0, abs=1e-10)
            assert np.linalg.det(can.o_b) == pytest.approx(1.0, abs=1e-10)
            svals = np.linalg.svd(t, compute_uv=False)
            assert np.allclose(np.abs(can.c), svals, atol=1e-10)
            assert np.all(np.diff(np.abs(can.c)) <= 1e-12)
