import numpy as np
import pytest

from disctrace.discs import (
    LiftPoint,
    StraightDisc,
    boundary_point,
    disc_from_lift_point,
    disc_from_line,
    disc_through_two_points,
    lift,
)
from disctrace.errors import (
    CoincidentPoints,
    LineMissesBall,
    ZeroDirection,
)
from disctrace.geometry import CP1Point, Complex2, cp1_distance, hermitian_inner


def random_interior(rng, rmax=0.9):
    while True:
        v = rng.uniform(-rmax, rmax, size=4)
        p = Complex2(complex(v[0], v[1]), complex(v[2], v[3]))
        if 1e-3 < p.norm() < rmax:
            return p


def random_direction(rng):
    v = rng.normal(size=4)
    return Complex2(complex(v[0], v[1]), complex(v[2], v[3]))


class TestStraightDisc:
    def test_validation(self):
        with pytest.raises(ValueError):
            StraightDisc(Complex2(0.5, 0.0), Complex2(0.5, 0.0))  # not orthogonal
        with pytest.raises(ValueError):
            StraightDisc(Complex2(0.5, 0.0), Complex2(0.0, 1.0))  # norms off

    def test_boundary_on_sphere(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            disc = disc_from_line(random_interior(rng), random_direction(rng))
            for t in np.linspace(0, 2 * np.pi, 17):
                assert abs(boundary_point(disc, t).norm() - 1.0) < 1e-12

    def test_parameter_of_inverts_point(self):
        disc = disc_from_line(Complex2(0.1, 0.2), Complex2(1.0, 1j))
        for tau in (0.0, 0.3 + 0.4j, -0.9j):
            assert disc.parameter_of(disc.point(tau)) == pytest.approx(tau, abs=1e-13)

    def test_line_distance(self):
        disc = disc_from_line(Complex2(0, 0), Complex2(1.0, 0.0))
        assert disc.line_distance(Complex2(0.5, 0.0)) < 1e-14
        assert disc.line_distance(Complex2(0.0, 0.3)) == pytest.approx(0.3)


class TestDiscFromLine:
    def test_foot_point_orthogonal(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            p, v = random_interior(rng), random_direction(rng)
            disc = disc_from_line(p, v)
            ortho = hermitian_inner(disc.a, disc.b)
            assert abs(ortho) < 2e-12
            assert disc.a.norm() ** 2 + disc.b.norm() ** 2 == pytest.approx(
                1.0, abs=1e-12
            )
            assert disc.line_distance(p) < 1e-12

    def test_same_line_same_disc(self):
        p, v = Complex2(0.1, 0.2j), Complex2(1.0, -1j)
        d1 = disc_from_line(p, v)
        q = d1.point(0.37 - 0.11j)
        d2 = disc_from_line(q, Complex2(-2j * v.z1, -2j * v.z2))
        assert np.allclose(d1.a.as_array(), d2.a.as_array(), atol=1e-13)
        assert np.allclose(d1.b.as_array(), d2.b.as_array(), atol=1e-13)

    def test_zero_direction(self):
        with pytest.raises(ZeroDirection):
            disc_from_line(Complex2(0.1, 0.0), Complex2(0.0, 0.0))

    def test_line_missing_ball(self):
        with pytest.raises(LineMissesBall):
            disc_from_line(Complex2(2.0, 0.0), Complex2(0.0, 1.0))


class TestDiscThroughTwoPoints:
    def test_instance(self):
        # the disc joining (0, 0.5) to the sphere point (1, 0)
        disc, tau_p, tau_q = disc_through_two_points(
            Complex2(0.0, 0.5), Complex2(1.0, 0.0)
        )
        assert np.allclose(disc.a.as_array(), [0.2, 0.4], atol=1e-12)
        assert np.allclose(disc.b.as_array(), [0.8, -0.4], atol=1e-12)
        assert abs(tau_q) == pytest.approx(1.0, abs=1e-12)
        assert tau_q == pytest.approx(1.0, abs=1e-12)
        for tau, p in ((tau_p, Complex2(0.0, 0.5)), (tau_q, Complex2(1.0, 0.0))):
            assert np.allclose(disc.point(tau).as_array(), p.as_array(), atol=1e-12)

    def test_symmetric_in_arguments(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            p, q = random_interior(rng), random_interior(rng)
            if Complex2(p.z1 - q.z1, p.z2 - q.z2).norm() < 1e-3:
                continue
            d1, _, _ = disc_through_two_points(p, q)
            d2, _, _ = disc_through_two_points(q, p)
            assert np.allclose(d1.a.as_array(), d2.a.as_array(), atol=1e-12)
            assert np.allclose(d1.b.as_array(), d2.b.as_array(), atol=1e-12)

    def test_coincident_rejected(self):
        with pytest.raises(CoincidentPoints):
            disc_through_two_points(Complex2(0.1, 0.0), Complex2(0.1, 0.0))

    def test_two_sphere_points_rejected(self):
        with pytest.raises(LineMissesBall):
            disc_through_two_points(Complex2(1.0, 0.0), Complex2(0.0, 1.0))


class TestLift:
    def test_through_origin_is_constant(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            disc = disc_from_line(Complex2(0, 0), random_direction(rng))
            ref = CP1Point(np.conj(disc.b.z1), np.conj(disc.b.z2))
            for tau in 0.95 * np.exp(1j * np.linspace(0, 2 * np.pi, 13)):
                assert cp1_distance(lift(disc, tau).zeta, ref) < 1e-12

    def test_boundary_is_sphere_conormal(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            disc = disc_from_line(random_interior(rng), random_direction(rng))
            for t in np.linspace(0, 2 * np.pi, 9):
                z = boundary_point(disc, t)
                conormal = CP1Point(np.conj(z.z1), np.conj(z.z2))
                assert cp1_distance(lift(disc, np.exp(1j * t)).zeta, conormal) < 1e-12

    def test_affine_instance(self):
        # for a=(0.2,0.4), b=(0.8,-0.4) the affine lift coordinate is
        # 0.5(tau - 1) / (0.25 tau + 1)
        disc, _, _ = disc_through_two_points(Complex2(0.0, 0.5), Complex2(1.0, 0.0))
        rng = np.random.default_rng(5)
        for _ in range(16):
            tau = rng.uniform(0, 0.99) * np.exp(2j * np.pi * rng.uniform())
            expected = 0.5 * (tau - 1.0) / (0.25 * tau + 1.0)
            assert lift(disc, tau).z3 == pytest.approx(expected, abs=1e-12)

    def test_lift_point_fields(self):
        disc = disc_from_line(Complex2(0.3, 0.0), Complex2(0.0, 1.0))
        lp = lift(disc, 0.2)
        assert isinstance(lp, LiftPoint)
        assert lp.as_c3().shape == (3,)
        assert lp.z3 == pytest.approx(lp.zeta.affine)


class TestDiscFromLiftPoint:
    def test_round_trip(self):
        rng = np.random.default_rng(6)
        worst = 0.0
        for _ in range(100):
            disc = disc_from_line(random_interior(rng), random_direction(rng))
            tau = rng.uniform(0.0, 0.95) * np.exp(2j * np.pi * rng.uniform())
            lp = lift(disc, tau)
            rec, tau_rec = disc_from_lift_point(lp.z, lp.zeta)
            err = max(
                np.max(np.abs(rec.a.as_array() - disc.a.as_array())),
                np.max(np.abs(rec.b.as_array() - disc.b.as_array())),
                abs(tau_rec - tau),
            )
            worst = max(worst, float(err))
        assert worst < 1e-9

    def test_through_origin(self):
        disc = disc_from_line(Complex2(0, 0), Complex2(0.6, 0.8j))
        lp = lift(disc, 0.3 + 0.2j)
        rec, tau_rec = disc_from_lift_point(lp.z, lp.zeta)
        assert np.allclose(rec.b.as_array(), disc.b.as_array(), atol=1e-12)
        assert tau_rec == pytest.approx(0.3 + 0.2j, abs=1e-12)

    def test_rejects_boundary_base(self):
        with pytest.raises(ValueError):
            disc_from_lift_point(Complex2(1.0, 0.0), CP1Point(1.0, 0.0))
