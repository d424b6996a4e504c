"""Tests for kernel construction, validity conditions and file round trips."""

import numpy as np
import pytest

import gridwigner as gw


class TestSymmetricKernel:
    def test_value_n1(self):
        k = gw.symmetric_kernel(1)
        assert k.values[1, 1].real == pytest.approx(0.5)

    def test_edge_line(self):
        k = gw.symmetric_kernel(3)
        np.testing.assert_allclose(k.values[:, 0], np.ones(7))

    def test_value_n2(self):
        # cos(4*pi/5)
        k = gw.symmetric_kernel(2)
        assert k.values[2, 2].real == pytest.approx(-0.8090169943749474, abs=1e-12)

    def test_real_symmetric(self):
        k = gw.symmetric_kernel(2)
        np.testing.assert_allclose(k.values.imag, 0)
        np.testing.assert_allclose(k.values, k.values.T)

    def test_valid_all_n(self):
        for n in range(1, 7):
            assert gw.validate(gw.symmetric_kernel(n)).valid

    def test_not_unimodular(self):
        assert not gw.is_unimodular(gw.symmetric_kernel(1))


class TestWoottersKernel:
    def test_values(self):
        k = gw.wootters_kernel(2)
        assert k.values[1, 1] == pytest.approx(-1)
        assert k.values[2, 1] == pytest.approx(1)

    def test_unimodular(self):
        for n in range(1, 7):
            k = gw.wootters_kernel(n)
            assert gw.is_unimodular(k)
            assert gw.validate(k).valid

    def test_all_plus_minus_one_table_unimodular(self, rng):
        signs = rng.choice([-1.0, 1.0], size=(4, 4))
        assert gw.is_unimodular(gw.kernel_from_table(signs))


class TestAlmostSymmetricKernel:
    def test_qubit_quarter_turn(self):
        # eps = pi/4 at N=1 collapses onto the sign kernel
        k = gw.almost_symmetric_kernel(1, np.pi / 4)
        assert k.values[1, 1].real == pytest.approx(-1, abs=1e-12)

    def test_edge_line(self):
        k = gw.almost_symmetric_kernel(3, 0.1)
        np.testing.assert_allclose(k.values[0, :], np.ones(6), atol=1e-14)

    def test_value_n2(self):
        # cos(pi + 1/4)/cos(1/4) = -1
        k = gw.almost_symmetric_kernel(2, 0.25)
        assert k.values[2, 2].real == pytest.approx(-1, abs=1e-12)

    def test_valid_all_n_default_eps(self):
        for n in range(1, 7):
            assert gw.validate(gw.almost_symmetric_kernel(n)).valid

    def test_rejected_eps(self):
        # eps = pi/4 at N=2 puts a zero at k*l = 1
        with pytest.raises(ValueError):
            gw.almost_symmetric_kernel(2, np.pi / 4)

    def test_default_eps_value(self):
        assert gw.default_epsilon(4) == pytest.approx(1 / 8)
        assert gw.almost_symmetric_kernel(4).eps == pytest.approx(1 / 8)


class TestValidate:
    def test_plain_cosine_fails_even_dim(self):
        # cos(pi*k*l/4) vanishes at (1, 2); the nonvanishing check alone fails
        k = np.arange(4)[:, None]
        l = np.arange(4)[None, :]
        kern = gw.kernel_from_table(np.cos(np.pi * k * l / 4))
        report = gw.validate(kern)
        assert not report.nonvanishing
        assert not report.valid
        assert report.hermitian_pairing
        assert report.first_col_unit
        assert report.first_row_unit

    def test_single_zero_flags_only_nonvanishing(self):
        base = gw.symmetric_kernel(1).values.copy()
        # zero the entry and its conjugation partner so only the
        # nonvanishing condition is violated
        base[1, 1] = 0.0
        base[2, 2] = 0.0
        report = gw.validate(gw.kernel_from_table(base))
        assert not report.nonvanishing
        assert report.hermitian_pairing
        assert report.first_row_hermitian
        assert report.first_col_hermitian
        assert report.corner_real
        assert report.first_col_unit
        assert report.first_row_unit

    def test_pairing_violation_flagged_exactly(self):
        base = gw.symmetric_kernel(1).values.copy()
        base[1, 2] += 0.1
        report = gw.validate(gw.kernel_from_table(base))
        assert not report.hermitian_pairing
        assert report.nonvanishing
        assert report.first_row_hermitian
        assert report.first_col_hermitian
        assert report.corner_real
        assert report.first_col_unit
        assert report.first_row_unit

    def test_hermiticity_equivalence(self, rng):
        # the pairing condition is equivalent to Hermitian phase-point operators:
        # valid built-ins give Hermitian operators, a pairing violation does not
        from gridwigner.quantizer import build_quantizer

        for kernel in (
            gw.symmetric_kernel(1),
            gw.wootters_kernel(1),
            gw.almost_symmetric_kernel(2, 0.25),
        ):
            g = gw.PhaseGrid(kernel.dim, 0.3)
            q = build_quantizer(g, kernel, check=False)
            worst = max(
                gw.frob_dist(q.omega[m, n], q.omega[m, n].conj().T)
                for m in range(kernel.dim)
                for n in range(kernel.dim)
            )
            assert worst <= 1e-12

        broken = gw.symmetric_kernel(1).values.copy()
        broken[1, 2] += 0.1
        g = gw.PhaseGrid(3, 0.3)
        q = build_quantizer(g, gw.kernel_from_table(broken), check=False)
        worst = max(
            gw.frob_dist(q.omega[m, n], q.omega[m, n].conj().T)
            for m in range(3)
            for n in range(3)
        )
        assert worst > 1e-3


class TestKernelIO:
    def test_round_trip(self, tmp_path):
        k = gw.symmetric_kernel(2)
        path = tmp_path / "kernel.json"
        gw.save_kernel(k, path)
        loaded = gw.load_kernel(path)
        np.testing.assert_allclose(loaded.values, k.values)
        # writing the loaded kernel again is byte-identical
        path2 = tmp_path / "kernel2.json"
        gw.save_kernel(loaded, path2)
        assert path.read_bytes() == path2.read_bytes()

    def test_invalid_table_loads_but_fails_validate(self, tmp_path):
        bad = gw.kernel_from_table(np.zeros((3, 3)))
        path = tmp_path / "bad.json"
        gw.save_kernel(bad, path)
        loaded = gw.load_kernel(path)
        assert not gw.validate(loaded).valid

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            gw.kernel_from_table(np.ones((2, 3)))
