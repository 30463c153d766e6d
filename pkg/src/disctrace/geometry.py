"""Hermitian geometry of C^2, the projective line, and ball automorphisms.

Conventions used throughout the package:

* the Hermitian inner product is conjugate-linear in the SECOND slot,
  ``<u, v> = u1*conj(v1) + u2*conj(v2)``;
* a CP^1 point is stored as a unit vector whose first component of modulus
  above ``PHASE_EPS`` is real positive, so projective equality is plain
  componentwise comparison;
* a ball automorphism is stored as (involution at a) composed with a
  unitary, which keeps composition and inversion stable near the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, OutsideClosedBall

PHASE_EPS = 1e-14


@dataclass(frozen=True)
class Complex2:
    """A point of C^2 with coordinates (z1, z2)."""

    z1: complex
    z2: complex

    def __post_init__(self):
        if not (np.isfinite(self.z1) and np.isfinite(self.z2)):
            raise ValueError("Complex2 components must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.z1, self.z2], dtype=complex)

    @staticmethod
    def from_array(v) -> "Complex2":
        return Complex2(complex(v[0]), complex(v[1]))

    def norm(self) -> float:
        return float(np.sqrt(abs(self.z1) ** 2 + abs(self.z2) ** 2))


def hermitian_inner(u: Complex2, v: Complex2) -> complex:
    """Inner product <u, v>, conjugate-linear in v."""
    return u.z1 * np.conj(v.z1) + u.z2 * np.conj(v.z2)


def _canonical_phase(v: np.ndarray, eps: float = PHASE_EPS) -> np.ndarray:
    """Rotate v by a unit phase so its first component of modulus > eps is
    real positive."""
    for c in v:
        if abs(c) > eps:
            return v * (np.conj(c) / abs(c))
    return v


@dataclass(frozen=True)
class CP1Point:
    """A point of the complex projective line, stored on its canonical
    unit-norm representative."""

    zeta1: complex
    zeta2: complex

    def __post_init__(self):
        v = np.array([self.zeta1, self.zeta2], dtype=complex)
        n = np.linalg.norm(v)
        if n == 0 or not np.all(np.isfinite(v)):
            raise ValueError("CP1Point needs a nonzero finite representative")
        v = _canonical_phase(v / n)
        object.__setattr__(self, "zeta1", complex(v[0]))
        object.__setattr__(self, "zeta2", complex(v[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.zeta1, self.zeta2], dtype=complex)

    @property
    def affine(self) -> complex:
        """Affine coordinate z3 = zeta2/zeta1 (infinite at [0:1])."""
        if abs(self.zeta1) <= PHASE_EPS:
            return complex(np.inf)
        return self.zeta2 / self.zeta1


def cp1_distance(p: CP1Point, q: CP1Point) -> float:
    """sin of the Fubini-Study angle: sqrt(1 - |<p,q>|^2) on unit
    representatives, evaluated in the cancellation-free cross-product form
    |p1*q2 - p2*q1| (equal by the Lagrange identity).  Zero iff p = q as
    projective points."""
    return float(min(1.0, abs(p.zeta1 * q.zeta2 - p.zeta2 * q.zeta1)))


def _involution(a: np.ndarray, z: np.ndarray) -> np.ndarray:
    """The standard ball involution phi_a with phi_a(a) = 0, phi_a(0) = a."""
    na2 = float(np.vdot(a, a).real)
    if na2 == 0.0:
        return -z
    s = np.sqrt(1.0 - na2)
    za = complex(np.sum(z * np.conj(a)))  # <z, a>
    pz = (za / na2) * a
    qz = z - pz
    return (a - pz - s * qz) / (1.0 - za)


@dataclass(frozen=True)
class BallAutomorphism:
    """Automorphism of the unit ball B^2, acting as z -> phi_a(U z)."""

    a: Complex2
    U: np.ndarray

    def __post_init__(self):
        U = np.asarray(self.U, dtype=complex)
        if U.shape != (2, 2):
            raise ValueError("unitary factor must be 2x2")
        if np.linalg.norm(U.conj().T @ U - np.eye(2)) > 1e-10:
            raise ValueError("U is not unitary")
        if self.a.norm() >= 1.0:
            raise ValueError("automorphism center must be interior")
        object.__setattr__(self, "U", U)

    @staticmethod
    def identity() -> "BallAutomorphism":
        # phi_0 is z -> -z, so the identity needs the unitary factor -I
        return BallAutomorphism(Complex2(0.0, 0.0), -np.eye(2, dtype=complex))

    @staticmethod
    def involution_at(a: Complex2) -> "BallAutomorphism":
        return BallAutomorphism(a, np.eye(2, dtype=complex))

    def inverse(self) -> "BallAutomorphism":
        # (phi_a . U)^{-1} = U^* . phi_a = phi_{U^* a} . U^*
        Ust = self.U.conj().T
        return BallAutomorphism(Complex2.from_array(Ust @ self.a.as_array()), Ust)


def apply_automorphism(phi: BallAutomorphism, z: Complex2) -> Complex2:
    """Apply phi to a point of the closed ball."""
    if z.norm() > 1.0 + 1e-12:
        raise OutsideClosedBall(f"|z| = {z.norm():.6f} > 1")
    w = _involution(phi.a.as_array(), phi.U @ z.as_array())
    return Complex2.from_array(w)


def normalize_configuration(P1: Complex2, P2: Complex2) -> BallAutomorphism:
    """Automorphism sending P1 to (t, 0) with t real in (-1, 1) and P2 to
    (0, s) with 0 < |s| < 1.

    If the input is already in that normal form the identity is returned;
    otherwise P1 is moved to the origin (t = 0) and P2 onto the z2-axis.
    """
    if (P1.as_array() == P2.as_array()).all():
        raise CoincidentPoints("normalize_configuration needs distinct points")
    if P1.norm() >= 1.0 or P2.norm() >= 1.0:
        raise ValueError("both points must be interior")

    already = (
        abs(P1.z2) <= PHASE_EPS
        and abs(P1.z1.imag) <= PHASE_EPS
        and abs(P2.z1) <= PHASE_EPS
        and abs(P2.z2) > PHASE_EPS
    )
    if already:
        return BallAutomorphism.identity()

    q = _involution(P1.as_array(), P2.as_array())
    qh = q / np.linalg.norm(q)
    # U q^ = (0, 1); first row spans the orthogonal complement
    c = np.array([np.conj(qh[1]), -np.conj(qh[0])])
    U = np.array([np.conj(c), np.conj(qh)])
    # U . phi_{P1} = phi_{U P1} . U  (unitary equivariance of the involution)
    return BallAutomorphism(Complex2.from_array(U @ P1.as_array()), U)
