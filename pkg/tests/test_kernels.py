import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from dskg.errors import DomainError, OutsideCone, ValidationError
from dskg.kernels import (CharCoords, CurvedMass, K0_array, K0_bracket_direct, K0_edge_value, K1_array, KernelPoint,
                          evaluate_E, evaluate_K0, evaluate_K1, kernel_E, kernel_E_complex, riemann_R)
from dskg.identities import K0_point_check, sample_cone_interior

from oracles import elliptic_2f1

MASSES = (0.0, 0.5, 1.0, 2.0, 5.0)


def mp_E(d, t, t0, M):
    """E from mpmath at 30 digits (independent of the package's 2F1)."""
    mp.mp.dps = 30
    s, s0 = mp.exp(-t), mp.exp(-t0)
    P = (s + s0) ** 2 - d**2
    Q = (s0 - s) ** 2 - d**2
    g = mp.mpc(0.5, M)
    val = (4 * mp.exp(-t0 - t)) ** (1j * M) * P ** (-g) * mp.hyp2f1(g, g, 1, Q / P)
    return complex(val)


class TestTypes:
    def test_mass(self):
        assert CurvedMass(1.5).gamma == complex(0.5, 1.5)
        with pytest.raises(ValidationError):
            CurvedMass(-0.1)
        with pytest.raises(ValidationError):
            CurvedMass(float("nan"))

    def test_cone_membership(self):
        p = KernelPoint(0.1, 1.0, 0.0, 0.0)
        assert p.in_forward_cone and not p.in_backward_cone
        q = KernelPoint(0.0, 0.0, 0.1, 1.0)
        assert q.in_backward_cone and not q.in_forward_cone
        assert not KernelPoint(0.9, 1.0, 0.0, 0.0).in_forward_cone

    def test_char_coords(self):
        c = CharCoords.from_point(KernelPoint(0.3, 1.0, -0.2, 0.5))
        assert c.l - c.m == pytest.approx(2 * math.exp(-1.0))
        assert c.a - c.b_ == pytest.approx(2 * math.exp(-0.5))
        with pytest.raises(DomainError):
            CharCoords(0.0, 1.0, 0.0, -1.0)


class TestE:
    @pytest.mark.parametrize("t", [0.0, 1.0, 2.0])
    @pytest.mark.parametrize("M", MASSES)
    def test_vertex_value(self, t, M):
        v = evaluate_E(KernelPoint(0.0, t, 0.0, t), CurvedMass(M))
        assert v.value == pytest.approx(math.exp(t) / 2, rel=1e-13)

    def test_cone_edge_value(self):
        t = 1.0
        v = evaluate_E(KernelPoint(1 - math.exp(-t), t, 0.0, 0.0), CurvedMass(0.7))
        assert v.value == pytest.approx(0.5 * math.exp(t / 2), rel=1e-13)

    def test_edge_value_general_start(self):
        b, t = 0.5, 1.5
        v = evaluate_E(KernelPoint(math.exp(-b) - math.exp(-t), t, 0.0, b), CurvedMass(2.0))
        assert v.value == pytest.approx((4 * math.exp(-b - t)) ** -0.5, rel=1e-13)

    def test_hypergeometric_argument(self):
        x, t, x0, t0 = 0.1, 1.2, 0.0, 0.3
        v = evaluate_E(KernelPoint(x, t, x0, t0), CurvedMass(1.0))
        s, s0 = math.exp(-t), math.exp(-t0)
        zeta = ((s0 - s) ** 2 - x**2) / ((s0 + s) ** 2 - x**2)
        assert v.hypergeom_arg == pytest.approx(zeta, rel=1e-13)

    @pytest.mark.parametrize("M", MASSES)
    def test_against_mpmath(self, M):
        d, t, t0 = sample_cone_interior(8, seed=3)
        ours = kernel_E(d, t, t0, M)
        for di, ti, t0i, oi in zip(d, t, t0, ours):
            ref = mp_E(di, ti, t0i, M)
            assert abs(oi - ref.real) <= 1e-11 * max(1.0, abs(ref))
            assert abs(ref.imag) <= 1e-20 + 1e-25 * abs(ref.real) or abs(ref.imag) < 1e-12 * abs(ref.real)

    @pytest.mark.parametrize("point", [(0.9, 1.0, 0.0, 0.0), (0.0, 1.0, 2.0, 1.0), (0.5, 0.5, 0.0, 0.5)])
    def test_outside_cone(self, point):
        with pytest.raises(OutsideCone):
            evaluate_E(KernelPoint(*point), CurvedMass(1.0))

    def test_realness_diagnostic(self):
        v = evaluate_E(KernelPoint(0.05, 2.0, 0.0, 0.5), CurvedMass(2.0))
        assert abs(v.imag_residual) <= 1e-9 * (1 + abs(v.value))

    def test_mass_continuity(self):
        d, t, t0 = sample_cone_interior(50, seed=5)
        e0 = kernel_E(d, t, t0, 0.0)
        e1 = kernel_E(d, t, t0, 1e-4)
        assert np.max(np.abs(e1 - e0)) <= 1e-3 * np.max(np.abs(e0))


class TestRealness:
    @pytest.mark.parametrize("M", MASSES)
    def test_imaginary_part_vanishes(self, M):
        d, t, t0 = sample_cone_interior(1000, seed=11)
        v, _ = kernel_E_complex(d, t, t0, M)
        assert np.all(np.abs(v.imag) <= 1e-9 * (1 + np.abs(v.real)))

    @given(st.floats(0, 5), st.floats(-0.5, 1.0), st.floats(0.05, 2.5), st.floats(-0.99, 0.99))
    def test_realness_property(self, M, t0, dt, frac):
        t = t0 + dt
        d = frac * (math.exp(-t0) - math.exp(-t))
        v, _ = kernel_E_complex(np.array([d]), np.array([t]), np.array([t0]), M)
        assert abs(v[0].imag) <= 1e-9 * (1 + abs(v[0].real))


class TestSymmetry:
    @given(st.floats(0, 3), st.floats(-1, 1), st.floats(-0.5, 1.0), st.floats(0.05, 2.0), st.floats(-0.95, 0.95))
    def test_swap_and_translation(self, M, y, b, dt, frac):
        t = b + dt
        x = y + frac * (math.exp(-b) - math.exp(-t))
        mass = CurvedMass(M)
        fwd = evaluate_E(KernelPoint(x, t, y, b), mass).value
        bwd = evaluate_E(KernelPoint(y, b, x, t), mass).value
        shifted = evaluate_E(KernelPoint(x - y, t, 0.0, b), mass).value
        mirrored = evaluate_E(KernelPoint(y - x, t, 0.0, b), mass).value
        scale = max(1.0, abs(fwd))
        assert abs(fwd - bwd) <= 1e-12 * scale
        assert abs(fwd - shifted) <= 1e-12 * scale
        assert abs(shifted - mirrored) <= 1e-12 * scale


class TestK1:
    def test_is_E_at_zero_start(self):
        for M in MASSES:
            v = evaluate_K1(0.3, 1.0, CurvedMass(M)).value
            assert v == evaluate_E(KernelPoint(0.3, 1.0, 0.0, 0.0), CurvedMass(M)).value

    @pytest.mark.parametrize("M", [0.0, 0.7, 3.0])
    def test_axis_value_by_composition(self, M):
        t = 1.3
        s = math.exp(-t)
        g = mp.mpc(0.5, M)
        mp.mp.dps = 30
        ref = (4 * mp.e ** (-t)) ** (1j * M) * (1 + s) ** (-1 - 2j * M) * mp.hyp2f1(g, g, 1, ((1 - s) / (1 + s)) ** 2)
        assert evaluate_K1(0.0, t, CurvedMass(M)).value == pytest.approx(float(mp.re(ref)), rel=1e-12)

    def test_edge_limit(self):
        t = 1.7
        p = 1 - math.exp(-t)
        v = K1_array(np.array([p * (1 - 1e-12)]), np.array([t]), 2.0)[0]
        assert v == pytest.approx(0.5 * math.exp(t / 2), rel=1e-9)

    def test_massless_elliptic_oracle(self):
        z, t = 0.3, 1.0
        s = math.exp(-t)
        P = (1 + s) ** 2 - z * z
        zeta = ((1 - s) ** 2 - z * z) / P
        assert evaluate_K1(z, t, CurvedMass(0.0)).value == pytest.approx(elliptic_2f1(zeta) / math.sqrt(P), rel=1e-12)

    def test_outside(self):
        with pytest.raises(OutsideCone):
            evaluate_K1(0.7, 1.0, CurvedMass(0.0))
        with pytest.raises(DomainError):
            evaluate_K1(0.0, -1.0, CurvedMass(0.0))


class TestK0:
    @pytest.mark.parametrize("z,t,M", [(0.2, 1.0, 0.0), (0.5, 2.0, 1.5), (0.1, 0.5, 5.0), (0.0, 3.0, 0.5)])
    def test_matches_finite_difference(self, z, t, M):
        gap, _, _ = K0_point_check(z, t, CurvedMass(M))
        assert gap < 1e-6

    @given(st.floats(0, 4), st.floats(0.2, 4.0), st.floats(0, 0.9))
    def test_two_arrangements_agree(self, M, t, frac):
        z = frac * (1 - math.exp(-t))
        a = K0_array(np.array([z]), np.array([t]), M)[0]
        b = K0_bracket_direct(np.array([z]), np.array([t]), M)[0]
        assert abs(a - b) <= 1e-9 * max(1.0, abs(a))

    @pytest.mark.parametrize("M", [0.0, 1.0, 3.0])
    @pytest.mark.parametrize("t", [0.3, 1.0, 4.0])
    def test_continuous_at_edge(self, M, t):
        p = -math.expm1(-t)
        z = np.array([p, p * (1 - 1e-10), p * (1 - 1e-6)])
        vals = K0_array(z, np.full(3, t), M)
        edge = K0_edge_value(t, M)
        assert vals[0] == pytest.approx(edge, rel=1e-12)
        # K0 is smooth up to the edge, so the gap closes linearly in the distance
        near, far = abs(vals[1] - edge), abs(vals[2] - edge)
        assert far <= 1e-3 * abs(edge) + 1e-12
        assert near <= 1e-3 * far + 1e-9 * abs(edge)

    def test_bracket_numerator_vanishes_at_edge(self):
        # (s - 1) + 2iM(1 - s) + (2 - 2s)(1/2 - iM) = 0 for every s, M
        for M in MASSES:
            for s in (0.1, 0.5, 0.9):
                assert abs((s - 1) + 2j * M * (1 - s) + (2 - 2 * s) * (0.5 - 1j * M)) < 1e-15

    def test_kernel_value_fields(self):
        v = evaluate_K0(0.2, 1.0, CurvedMass(1.0))
        assert 0 <= v.hypergeom_arg < 1
        assert abs(v.imag_residual) < 1e-9 * (1 + abs(v.value))

    def test_outside(self):
        with pytest.raises(OutsideCone):
            K0_array(np.array([0.9]), np.array([1.0]), 0.0)


class TestRiemann:
    @pytest.mark.parametrize("M", MASSES)
    def test_normalization(self, M):
        c = CharCoords.from_point(KernelPoint(0.2, 0.7, 0.2, 0.7))
        R = riemann_R(CharCoords(c.a, c.b_, c.a, c.b_), CurvedMass(M))
        assert abs(R - 1.0) <= 1e-12

    def test_relation_to_E(self):
        p = KernelPoint(0.1, 1.4, 0.0, 0.4)
        c = CharCoords.from_point(p)
        for M in MASSES:
            R = riemann_R(c, CurvedMass(M))
            assert R.real == pytest.approx((c.l - c.m) * evaluate_E(p, CurvedMass(M)).value, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            riemann_R(CharCoords(5.0, 4.0, 0.5, -0.5), CurvedMass(1.0))
