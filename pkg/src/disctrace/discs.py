"""Straight discs of the unit ball B^2 and their projectivized conormal lifts.

A straight disc is the intersection of a complex affine line with the open
ball, parametrized over the unit disc as A(tau) = a + tau*b with a
Hermitian-orthogonal to b and |a|^2 + |b|^2 = 1 (so the boundary circle
lies on the sphere).  Its lift to the projectivized cotangent space is

    A*(tau) = (a + tau*b, [tau*conj(a) + conj(b)]),

which for |tau| = 1 is the projective class of the sphere conormal
[conj(A(tau))].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .errors import CoincidentPoints, LineMissesBall, NoSolution, ZeroDirection
from .geometry import PHASE_EPS, CP1Point, Complex2, _canonical_phase, hermitian_inner

_ORTHO_TOL = 1e-12
_BOUNDARY_TOL = 1e-10


@dataclass(frozen=True)
class StraightDisc:
    """Canonical straight disc tau -> a + tau*b.

    a is the foot point (closest point of the line to the origin), b the
    direction scaled so that |a|^2 + |b|^2 = 1, with canonical phase: the
    first component of b of modulus above 1e-14 is real positive.
    """

    a: Complex2
    b: Complex2

    def __post_init__(self):
        av, bv = self.a.as_array(), self.b.as_array()
        nb = np.linalg.norm(bv)
        if nb <= 0:
            raise ValueError("disc direction must be nonzero")
        if abs(np.sum(av * np.conj(bv))) > _ORTHO_TOL:
            raise ValueError("foot point is not orthogonal to the direction")
        if abs(np.vdot(av, av).real + nb**2 - 1.0) > _ORTHO_TOL:
            raise ValueError("|a|^2 + |b|^2 must be 1")

    def point(self, tau: complex) -> Complex2:
        return Complex2(self.a.z1 + tau * self.b.z1, self.a.z2 + tau * self.b.z2)

    def parameter_of(self, p: Complex2) -> complex:
        """tau with A(tau) closest to p (exact when p is on the line)."""
        d = Complex2(p.z1 - self.a.z1, p.z2 - self.a.z2)
        return hermitian_inner(d, self.b) / hermitian_inner(self.b, self.b)

    def line_distance(self, p: Complex2) -> float:
        """Hermitian distance from p to the full complex line of the disc."""
        tau = self.parameter_of(p)
        q = self.point(tau)
        return Complex2(p.z1 - q.z1, p.z2 - q.z2).norm()


@dataclass(frozen=True)
class LiftPoint:
    """A point (z, [zeta]) of the projectivized cotangent space PT*C^2."""

    z: Complex2
    zeta: CP1Point

    @property
    def z3(self) -> complex:
        """Affine chart coordinate zeta2/zeta1."""
        return self.zeta.affine

    def as_c3(self) -> np.ndarray:
        return np.array([self.z.z1, self.z.z2, self.z3], dtype=complex)


def disc_from_line(p: Complex2, v: Complex2) -> StraightDisc:
    """Straight disc cut by the line {p + t*v}."""
    vv = v.as_array()
    nv = np.linalg.norm(vv)
    if nv == 0:
        raise ZeroDirection("line direction is zero")
    pv = p.as_array()
    a = pv - (np.sum(pv * np.conj(vv)) / nv**2) * vv
    na2 = float(np.vdot(a, a).real)
    if na2 >= (1.0 - 1e-12):
        raise LineMissesBall(f"line distance to origin {np.sqrt(na2):.6f}")
    b = _canonical_phase(vv / nv) * np.sqrt(1.0 - na2)
    return StraightDisc(Complex2.from_array(a), Complex2.from_array(b))


def disc_through_two_points(p: Complex2, q: Complex2):
    """Disc through p and q with its parameters: (disc, tau_p, tau_q).

    At least one point must be interior; a second point on the sphere gets
    |tau| = 1.
    """
    dv = np.array([q.z1 - p.z1, q.z2 - p.z2], dtype=complex)
    if np.linalg.norm(dv) == 0:
        raise CoincidentPoints("disc through two points needs distinct points")
    if min(p.norm(), q.norm()) >= 1.0 - _BOUNDARY_TOL:
        raise LineMissesBall("at least one of the points must be interior")
    disc = disc_from_line(p, Complex2.from_array(dv))
    return disc, disc.parameter_of(p), disc.parameter_of(q)


def boundary_point(A: StraightDisc, theta: float) -> Complex2:
    """Boundary circle point A(e^{i theta}), on the unit sphere."""
    return A.point(np.exp(1j * theta))


def lift(A: StraightDisc, tau: complex) -> LiftPoint:
    """Lift point A*(tau) = (A(tau), [tau*conj(a) + conj(b)])."""
    zeta = tau * np.conj(A.a.as_array()) + np.conj(A.b.as_array())
    return LiftPoint(A.point(tau), CP1Point(zeta[0], zeta[1]))


def _direction_chart(w: complex, chart: int) -> Complex2:
    return Complex2(1.0, w) if chart == 0 else Complex2(w, 1.0)


def _lift_residual(xy, z: Complex2, zeta: CP1Point, chart: int):
    v = _direction_chart(complex(xy[0], xy[1]), chart)
    try:
        disc = disc_from_line(z, v)
    except LineMissesBall:
        return [10.0, 10.0]
    tau0 = disc.parameter_of(z)
    zv = lift(disc, tau0).zeta.as_array()
    # projective cross product: zero iff the classes agree
    cross = zv[0] * zeta.zeta2 - zv[1] * zeta.zeta1
    return [cross.real, cross.imag]


def _disc_from_lift_point_direct(z: Complex2, zeta: CP1Point):
    """Semi-closed-form inversion of the lift.

    Writing s = zeta . z (bilinear) and m for the squared norm of the
    covector representative, the foot point is
    a(m) = (z - m*s*conj(zeta)) / (1 - m|s|^2) and the disc direction is
    conj(zeta) - conj(s)*a(m); the norm constraint |a|^2 + |b|^2 = 1 pins
    m down to a bracketed real root.
    """
    from scipy.optimize import brentq

    zv = z.as_array()
    zc = zeta.as_array()
    c = np.conj(zc)
    s = complex(np.sum(zc * zv))

    if abs(s) < 1e-14:
        v = Complex2.from_array(c)
        disc = disc_from_line(z, v)
        return disc, disc.parameter_of(z)

    def a_of(m: float) -> np.ndarray:
        return (zv - m * s * c) / (1.0 - m * abs(s) ** 2)

    def g(m: float) -> float:
        a = a_of(m)
        na2 = float(np.vdot(a, a).real)
        return na2 + m * float(np.linalg.norm(c - np.conj(s) * a) ** 2) - 1.0

    hi = (1.0 - 1e-12) / abs(s) ** 2
    lo = 0.0
    if g(lo) >= 0 or g(hi) <= 0:
        raise NoSolution("norm equation has no bracketed root")
    m = brentq(g, lo, hi, xtol=1e-15, rtol=8.9e-16)
    v = Complex2.from_array(c - np.conj(s) * a_of(m))
    disc = disc_from_line(z, v)
    return disc, disc.parameter_of(z)


def disc_from_lift_point(z: Complex2, zeta: CP1Point, tol: float = 1e-10):
    """Invert the lift: the straight disc whose lift passes through
    (z, [zeta]), with the parameter at which it does.

    Tries the bracketed-root inversion first and falls back to a
    2-real-dimensional search over the direction chart restarted from a
    coarse grid.  Raises NoSolution when neither converges below tol.
    """
    if z.norm() >= 1.0:
        raise ValueError("base point must be interior")
    from .geometry import cp1_distance  # local import avoids cycle at module load

    try:
        disc, tau0 = _disc_from_lift_point_direct(z, zeta)
        if cp1_distance(lift(disc, tau0).zeta, zeta) < tol:
            return disc, tau0
    except (NoSolution, LineMissesBall):
        pass

    starts = []
    grid = np.linspace(-2.0, 2.0, 16)
    for chart in (0, 1):
        vals = []
        for x in grid:
            for y in grid:
                r = _lift_residual([x, y], z, zeta, chart)
                vals.append((r[0] ** 2 + r[1] ** 2, x, y, chart))
        vals.sort(key=lambda t: t[0])
        starts.extend(vals[:4])

    best = None
    for _, x, y, chart in sorted(starts):
        sol = least_squares(
            _lift_residual, [x, y], args=(z, zeta, chart), xtol=1e-15, ftol=1e-15
        )
        v = _direction_chart(complex(sol.x[0], sol.x[1]), chart)
        try:
            disc = disc_from_line(z, v)
        except LineMissesBall:
            continue
        tau0 = disc.parameter_of(z)
        err = cp1_distance(lift(disc, tau0).zeta, zeta)
        if best is None or err < best[0]:
            best = (err, disc, tau0)
        if err < tol:
            return disc, tau0
    if best is not None and best[0] < tol:
        return best[1], best[2]
    raise NoSolution(
        f"no disc through ({z.z1}, {z.z2}) lifting to the given class "
        f"(best residual {best[0]:.3e})" if best else "root search failed"
    )
