import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from dskg.errors import DomainError, IllConditioned, NonConvergent
from dskg.hypergeom import (HypergeomParams, abs_gamma_half_plus_iM_sq, gamma_complex, gauss_2f1, gauss_2f1_connection,
                            gauss_2f1_dz, hyp2f1_array, hyp2f1_shifted_array)
from dskg.numdiff import derivative

from oracles import elliptic_2f1

mp.mp.dps = 40


def mp_2f1(a, b, c, z):
    return complex(mp.hyp2f1(a, b, c, z))


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class TestSeries:
    def test_zero_argument_is_one(self):
        g = complex(0.5, 0.7)
        assert gauss_2f1(g, g, 1.0, 0.0).value == 1.0

    @pytest.mark.parametrize("z", [0.1, 0.5, 0.9])
    def test_elliptic_oracle(self, z):
        assert rel(gauss_2f1(0.5, 0.5, 1.0, z).value.real, elliptic_2f1(z)) < 1e-12

    def test_brute_force_series_oracle(self):
        # 200 terms of the series in 40-digit arithmetic at (M, z) = (1, 0.3)
        g = mp.mpc(0.5, 1.0)
        term, total = mp.mpc(1), mp.mpc(1)
        for k in range(200):
            term *= (g + k) ** 2 / (k + 1) ** 2 * mp.mpf("0.3")
            total += term
        g = complex(0.5, 1.0)
        v = gauss_2f1(g, g, 1.0, 0.3)
        assert abs(v.value - complex(total)) <= max(1e-12, v.abs_error_estimate)
        assert rel(gauss_2f1(g, g, 1.0, 0.3, tol=1e-15).value, complex(total)) < 1e-14

    def test_polynomial_case(self):
        assert rel(gauss_2f1(-3, 0.5, 1.5, 0.9).value, mp_2f1(-3, 0.5, 1.5, 0.9)) < 1e-14

    def test_pole_like_case(self):
        # F(1, 1; 1; z) = 1 / (1 - z), c - a - b = -1
        assert rel(gauss_2f1(1, 1, 1, 0.9).value, 10.0) < 1e-11

    def test_error_estimate_and_terms(self):
        v = gauss_2f1(0.5, 0.5, 1.0, 0.4)
        assert v.abs_error_estimate >= 0 and v.terms_used > 0

    def test_array_matches_scalar(self):
        z = np.array([0.0, 0.2, 0.6, 0.95])
        vals, errs, used = hyp2f1_array(0.5, 0.5, 1.0, z)
        assert vals.shape == z.shape and errs.shape == z.shape and used.shape == z.shape
        for zi, vi in zip(z, vals):
            assert abs(vi - gauss_2f1(0.5, 0.5, 1.0, zi).value) < 1e-13

    def test_shifted_series(self):
        z = np.array([0.0, 1e-9, 0.3, 0.8])
        g = complex(0.5, 1.0)
        v, _ = hyp2f1_shifted_array(g, g, 1.0, z)
        assert abs(v[0] - g * g) < 1e-15
        for zi, vi in zip(z[1:], v[1:]):
            zm = mp.mpf(float(zi))
            assert rel(vi, complex((mp.hyp2f1(g, g, 1, zm) - 1) / zm)) < 1e-12


class TestRegimes:
    """Each evaluation path against mpmath."""

    @pytest.mark.parametrize("M", [0.0, 0.3, 1.0, 2.0, 5.0])
    @pytest.mark.parametrize("z", [0.1, 0.5, 0.51, 0.7, 0.9, 0.99, 0.999, 0.999999])
    def test_kernel_family(self, M, z):
        g = complex(0.5, M)
        exact = mp_2f1(g, g, 1, z)
        assert abs(gauss_2f1(g, g, 1.0, z).value - exact) < 1e-11 * max(1.0, abs(exact))

    @pytest.mark.parametrize("M", [1e-6, 1e-3, 0.02])
    @pytest.mark.parametrize("z", [0.6, 0.95, 0.999999, 1 - 1e-14])
    def test_small_mass_near_one(self, M, z):
        # c - a - b = -2iM is close to the integer 0
        g = complex(0.5, M)
        assert rel(gauss_2f1(g, g, 1.0, z).value, mp_2f1(g, g, 1, z)) < 1e-11

    def test_polynomial_after_euler(self):
        # F(1/2, 3/2; 3/2; z) = (1 - z)^(-1/2): c - b = 0 is a pole of 1/Gamma
        for z in (0.6, 0.99):
            assert rel(gauss_2f1(0.5, 1.5, 1.5, z).value, (1 - z) ** -0.5) < 1e-13

    @pytest.mark.parametrize("M", [0.0, 0.5, 2.0])
    @pytest.mark.parametrize("z", [0.3, 0.8, 0.99])
    def test_shifted_family(self, M, z):
        a, b = complex(-0.5, M), complex(0.5, M)
        assert rel(gauss_2f1(a, b, 1.0, z).value, mp_2f1(a, b, 1, z)) < 1e-11

    @pytest.mark.parametrize("rho", [1.0, 1.5, 1.9])
    @pytest.mark.parametrize("z", [0.6, 0.99])
    def test_real_families(self, rho, z):
        assert rel(gauss_2f1(0.5, rho / 2, 1.5, z).value, mp_2f1(0.5, rho / 2, 1.5, z)) < 1e-11
        assert rel(gauss_2f1(0.5, 1.5 * rho, 1.5, z).value, mp_2f1(0.5, 1.5 * rho, 1.5, z)) < 1e-10

    @pytest.mark.parametrize("gap", [1.0, 2.0, 0.02, -0.03, 0.001, 1.01, -0.99, 0.5])
    def test_integer_and_near_integer_gaps(self, gap):
        a, b = 0.5, 0.25
        c = a + b + gap
        for z in (0.7, 0.95, 0.999, 0.999999):
            assert rel(gauss_2f1(a, b, c, z).value, mp_2f1(a, b, c, z)) < 1e-10

    def test_error_bound_holds(self):
        for M in (0.0, 1.0, 5.0):
            g = complex(0.5, M)
            for z in (0.2, 0.7, 0.99):
                v = gauss_2f1(g, g, 1.0, z)
                exact = mp_2f1(g, g, 1, z)
                assert abs(v.value - exact) <= max(1e-12 * max(1, abs(exact)), v.abs_error_estimate)


class TestDerivative:
    def test_limit_at_zero_complex(self):
        v = gauss_2f1_dz(complex(0.5, 2), complex(0.5, 2), 1.0, 0.0).value
        assert abs(v - complex(-3.75, 2.0)) < 1e-14

    def test_limit_at_zero_real(self):
        assert gauss_2f1_dz(0.5, 0.5, 1.0, 0.0).value == 0.25

    def test_finite_difference_oracle(self):
        g = complex(0.5, 0.5)
        parts = [derivative(lambda z: np.array([getattr(gauss_2f1(g, g, 1.0, zi).value, part) for zi in np.atleast_1d(z)]),
                            np.array([0.4]), 1e-5, "central", 2)[0][0] for part in ("real", "imag")]
        assert rel(gauss_2f1_dz(g, g, 1.0, 0.4).value, complex(*parts)) < 1e-9

    @pytest.mark.parametrize("M", [0.0, 1.0, 3.0])
    @pytest.mark.parametrize("z", [0.1, 0.45, 0.8, 0.9])
    def test_fd_consistency_grid(self, M, z):
        g = complex(0.5, M)
        F = lambda x: gauss_2f1(g, g, 1, x, tol=1e-15).value
        h = 1e-4
        fd = (8 * (F(z + h) - F(z - h)) - (F(z + 2 * h) - F(z - 2 * h))) / (12 * h)
        assert rel(gauss_2f1_dz(g, g, 1.0, z).value, fd) < 1e-7


    @pytest.mark.parametrize("M", [0.0, 1.0, 3.0])
    @pytest.mark.parametrize("z", [0.95, 0.999])
    def test_near_one_against_mpmath(self, M, z):
        g = complex(0.5, M)
        exact = complex(g * g * mp.hyp2f1(g + 1, g + 1, 2, z))
        assert rel(gauss_2f1_dz(g, g, 1.0, z).value, exact) < 1e-10


class TestGamma:
    def test_m_zero(self):
        assert abs_gamma_half_plus_iM_sq(0.0) == pytest.approx(math.pi, rel=1e-15)

    def test_m_one(self):
        assert abs_gamma_half_plus_iM_sq(1.0) == pytest.approx(0.27101495, rel=1e-7)

    def test_m_ten(self):
        assert abs_gamma_half_plus_iM_sq(10.0) == pytest.approx(math.pi / math.cosh(10 * math.pi), rel=1e-14)

    @pytest.mark.parametrize("z", [complex(0.5, 1), complex(3.2, -2), complex(-1.5, 0.5), 0.1, 7.0])
    def test_lanczos_against_mpmath(self, z):
        assert rel(complex(gamma_complex(z)), complex(mp.gamma(z))) < 1e-13

    @given(st.floats(0, 5))
    def test_reflection_matches_lanczos(self, M):
        assert abs(gamma_complex(complex(0.5, M))) ** 2 == pytest.approx(abs_gamma_half_plus_iM_sq(M), rel=1e-12)


class TestConnection:
    def test_real_parameters_near_one(self):
        v = gauss_2f1_connection(0.5, 0.75, 1.5, 0.99).value
        assert rel(v, mp_2f1(0.5, 0.75, 1.5, 0.99)) < 1e-12

    def test_complex_parameters_near_one(self):
        g = complex(0.5, 1.0)
        v = gauss_2f1_connection(g, g, 1.5, 0.999).value
        assert rel(v, mp_2f1(g, g, 1.5, 0.999)) < 1e-11

    def test_agrees_with_direct_path(self):
        v = gauss_2f1_connection(0.5, 0.75, 1.5, 0.01).value
        assert abs(v - gauss_2f1(0.5, 0.75, 1.5, 0.01).value) < 1e-10
        assert abs(v - 1.0) < 0.01

    def test_small_argument_is_out_of_budget(self):
        # the series in 1 - z converge too slowly; such z belong to the direct series
        with pytest.raises(NonConvergent):
            gauss_2f1_connection(0.5, 0.75, 1.5, 1e-3)

    def test_integer_gap_is_ill_conditioned(self):
        g = complex(0.5, 0.0)
        with pytest.raises(IllConditioned):
            gauss_2f1_connection(g, g, 1.0, 0.9)
        with pytest.raises(IllConditioned):
            gauss_2f1_connection(0.5, 0.25, 0.76, 0.9)


class TestErrors:
    @pytest.mark.parametrize("z", [1.0, -0.1, 1.5, float("nan")])
    def test_domain(self, z):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 0.5, 1.0, z)

    @pytest.mark.parametrize("c", [0.0, -2.0])
    def test_bad_c(self, c):
        with pytest.raises(DomainError):
            HypergeomParams(0.5, 0.5, c, 0.1)

    def test_bad_tol(self):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 0.5, 1.0, 0.1, tol=0.0)

    def test_budget(self):
        with pytest.raises(NonConvergent):
            gauss_2f1(0.5, 0.5, 1.0, 0.4, max_terms=5)


class TestProperties:
    @given(st.floats(0, 5), st.floats(0, 0.99))
    def test_euler_transformation(self, M, z):
        g, gc = complex(0.5, M), complex(0.5, -M)
        # for large M the value is small, so the absolute tolerance is tightened
        lhs = gauss_2f1(g, g, 1.0, z, tol=1e-14).value
        rhs = (1 - z) ** complex(0, -2 * M) * gauss_2f1(gc, gc, 1.0, z, tol=1e-14).value
        assert abs(lhs - rhs) <= 1e-10 * abs(rhs)

    @given(st.floats(0, 5), st.floats(0, 0.999))
    def test_modulus_bound(self, M, z):
        g = complex(0.5, M)
        lhs = abs(gauss_2f1(g, g, 1.0, z).value)
        bound = math.pi / abs_gamma_half_plus_iM_sq(M) * gauss_2f1(0.5, 0.5, 1.0, z).value.real
        assert lhs <= bound * (1 + 1e-12)

    @given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 3), st.floats(0, 0.99))
    def test_conjugation(self, ar, ai, c, z):
        a, b = complex(ar, ai), complex(0.5, ai / 2)
        v = gauss_2f1(a, b, c, z).value
        vc = gauss_2f1(a.conjugate(), b.conjugate(), c, z).value
        assert abs(vc - v.conjugate()) <= 1e-12 * max(1, abs(v))

    @given(st.floats(0, 3), st.floats(0, 0.99))
    def test_symmetry_in_a_b(self, M, z):
        a, b = complex(-0.5, M), complex(0.5, M)
        assert gauss_2f1(a, b, 1, z).value == pytest.approx(gauss_2f1(b, a, 1, z).value, rel=1e-11, abs=1e-13)
