import numpy as np
import pytest

from disctrace import crlifts
from disctrace.crlifts import (
    FamilyChart,
    contract,
    direction_sweep_winding,
    m0_defining_value,
    omega_basis,
    omega_tilde_basis,
    pointing_direction,
    transported_direction,
    transversality_rank,
)
from disctrace.discs import disc_from_line, disc_through_two_points, lift
from disctrace.errors import (
    BoundaryParameterOffCircle,
    ChartEvaluationFailure,
    PoleAtAxis,
    SingularAtCenter,
    SingularAtReflectedPole,
)
from disctrace.geometry import Complex2


class TestDefiningFunction:
    def test_vanishes_on_lifts_through_origin(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            v = rng.normal(size=4)
            disc = disc_from_line(Complex2(0, 0), Complex2(*(v[:2] @ [1, 1j], v[2:] @ [1, 1j])))
            tau = rng.uniform(0.05, 0.95) * np.exp(2j * np.pi * rng.uniform())
            z1, z2, z3 = lift(disc, tau).as_c3()
            if abs(z1) < 1e-3:
                continue
            assert abs(m0_defining_value(z1, z2, z3)) < 1e-10

    def test_pole_at_axis(self):
        with pytest.raises(PoleAtAxis):
            m0_defining_value(0.0, 0.5, 0.1)


class TestOmegaBases:
    def test_omega_instance(self):
        w1, w2 = omega_basis(0.5, 0.0)
        assert np.allclose(w1, [0.0, -2.0, 1.0])
        assert np.allclose(w2, np.array([0.0, 2.0, 1.0]) / 1j)

    def test_omega_annihilates_family_tangents(self):
        # omega pairs to zero (bilinearly) with the holomorphic tangents of
        # the through-origin family: d/dtau of the lift and d/db of the
        # direction both lie in its kernel along the lifted axis disc
        for z1 in (0.3, 0.6 + 0.2j, -0.8):
            w1, w2 = omega_basis(z1, 0.0)
            # tangent of the lifted axis disc tau -> (tau, 0, 0)
            t1 = np.array([1.0, 0.0, 0.0])
            for w in (w1, w2):
                assert abs(contract(w, t1)) < 1e-12

    def test_omega_tilde_instance(self):
        w1, w2 = omega_tilde_basis(1.0, 0.5)
        assert np.allclose(w1, [0.0, -2.0, 2.0])
        assert np.allclose(w2, np.array([0.0, 2.0 / 1j, 2.0 / 1j]))

    def test_omega_tilde_reduces_to_omega_span(self):
        # on the unit circle, omega~ at zeta0 = 0 is a real multiple of omega
        for t in np.linspace(0.1, 6.0, 7):
            z1 = np.exp(1j * t)
            w1, w2 = omega_basis(z1, 0.0)
            wt1, wt2 = omega_tilde_basis(z1, 0.0)
            A = np.array([[w1[1], w2[1]], [w1[2], w2[2]]])
            for wt in (wt1, wt2):
                b = np.array([wt[1], wt[2]])
                x = np.linalg.solve(np.vstack([A.real, A.imag])[:2], b.real)
                resid = np.vstack([A.real, A.imag]) @ x - np.concatenate(
                    [b.real, b.imag]
                )
                assert np.linalg.norm(resid) < 1e-10

    def test_singularities(self):
        with pytest.raises(PoleAtAxis):
            omega_basis(0.0, 0.1)
        with pytest.raises(SingularAtCenter):
            omega_tilde_basis(0.5, 0.5)
        with pytest.raises(SingularAtReflectedPole):
            omega_tilde_basis(2.0, 0.5)


class TestPointingDirection:
    def test_instance(self):
        v = pointing_direction(0.5, 1.0)
        assert np.allclose(v, [-0.8, 0.4, -0.4])

    def test_contraction_instance(self):
        v = pointing_direction(0.5, 1.0)
        w1, _ = omega_tilde_basis(1.0, 0.5)
        assert contract(w1, v) == pytest.approx(-1.6)

    def test_realness_and_closed_forms(self):
        rng = np.random.default_rng(1)
        for _ in range(500):
            z2 = (0.05 + 0.9 * rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            zeta = np.exp(2j * np.pi * rng.uniform())
            zeta0 = 0.9 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
            if abs(zeta - zeta0) < 1e-3:
                continue
            v = pointing_direction(z2, zeta)
            w1, w2 = omega_tilde_basis(zeta, zeta0)
            c1, c2 = contract(w1, v), contract(w2, v)
            assert abs(c1.imag) < 1e-12 and abs(c2.imag) < 1e-12
            w = z2 / (zeta - zeta0)
            scale = 1.0 + abs(z2) ** 2
            assert c1.real == pytest.approx(-2 * w.real / scale, abs=1e-10)
            assert c2.real == pytest.approx(2 * w.imag / scale, abs=1e-10)

    def test_rejects_off_circle_parameter(self):
        with pytest.raises(BoundaryParameterOffCircle):
            pointing_direction(0.5, 0.9)

    def test_rejects_on_axis_center(self):
        with pytest.raises(ValueError):
            pointing_direction(0.0, 1.0)


class TestTransport:
    def test_preserves_real_pairings(self):
        rng = np.random.default_rng(2)
        zeta0 = 0.3 + 0.2j
        for _ in range(50):
            zeta = np.exp(2j * np.pi * rng.uniform())
            zeta_Q = 0.9 * np.exp(2j * np.pi * rng.uniform())
            if min(abs(zeta - zeta0), abs(zeta_Q - zeta0)) < 0.1:
                continue
            v = pointing_direction(0.4 - 0.1j, zeta)
            e1 = np.array([0.0, 1.0, 0.0], dtype=complex)
            e2 = np.array([0.0, 0.0, 1.0], dtype=complex)
            u = transported_direction(v, zeta, zeta_Q, zeta0, (e1, e2))
            ws, _ = omega_tilde_basis(zeta, zeta0)
            wt, wt2 = omega_tilde_basis(zeta_Q, zeta0)
            assert contract(wt, u).real == pytest.approx(
                contract(ws, v).real, abs=1e-10
            )


class TestWinding:
    def test_instance(self):
        assert direction_sweep_winding(0.5, 0.5, -1.0 + 0j, n=256) in (-1, 1)

    def test_nonzero_on_random_scenes(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            z2 = (0.1 + 0.8 * rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            zeta0 = 0.8 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
            assert direction_sweep_winding(z2, zeta0, -1.0 + 0j, n=256) != 0

    def test_sample_count_guard(self):
        with pytest.raises(ValueError):
            direction_sweep_winding(0.5, 0.5, -1.0 + 0j, n=8)

    def test_singular_target(self):
        with pytest.raises(SingularAtCenter):
            direction_sweep_winding(0.5, 0.5, 0.5 + 0j)


class TestFamilyChart:
    def test_matches_lift(self):
        center = Complex2(0.2, 0.1j)
        v0 = Complex2(1.0, 0.5)
        chart = FamilyChart(center, v0)
        disc = chart.disc(0.0)
        tau = 0.7
        assert np.allclose(chart(0.0, tau), lift(disc, tau).as_c3())

    def test_rejects_singular_fiber(self):
        center = Complex2(0.2, 0.0)
        chart = FamilyChart(center, Complex2(1.0, 0.0))
        tau_c = chart.disc(0.0).parameter_of(center)
        with pytest.raises(ChartEvaluationFailure):
            chart(0.0, tau_c)


class TestTransversality:
    def test_generic_rank_is_five(self):
        # both lifted families contain the 3-dimensional sphere-conormal
        # edge, so the stacked tangents reach at most 4 + 4 - 3 = 5
        rng = np.random.default_rng(4)
        ranks = set()
        trials = 0
        while len(ranks) < 1 or trials < 10:
            trials += 1
            v = rng.uniform(-0.5, 0.5, size=8)
            P1 = Complex2(complex(v[0], v[1]), complex(v[2], v[3]))
            P2 = Complex2(complex(v[4], v[5]), complex(v[6], v[7]))
            if Complex2(P1.z1 - P2.z1, P1.z2 - P2.z2).norm() < 0.1:
                continue
            disc = disc_from_line(
                P1, Complex2(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
            )
            if disc.line_distance(P2) < 0.05:
                continue
            point = lift(disc, np.exp(2j * np.pi * rng.uniform()))
            if abs(point.zeta.zeta1) < 0.1:
                continue
            ranks.add(transversality_rank(P1, P2, point))
        assert ranks == {5}

    def test_identical_families_rank_four(self):
        P = Complex2(0.5, 0.0)
        point = lift(disc_from_line(P, Complex2(1.0, 0.0)), 1.0)
        assert transversality_rank(P, P, point) == 4

    def test_interior_point_rejected(self):
        P = Complex2(0.5, 0.0)
        point = lift(disc_from_line(P, Complex2(1.0, 0.0)), 0.5)
        with pytest.raises(ChartEvaluationFailure):
            transversality_rank(P, Complex2(0.0, 0.5), point)
