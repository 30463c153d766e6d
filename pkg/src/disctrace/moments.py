"""Restriction of boundary polynomials to disc boundaries and the moment
test for disc-wise holomorphic extendibility.

On |tau| = 1 a disc boundary satisfies z = a + tau*b and
conj(z) = conj(a) + conj(b)/tau, so a mixed monomial restricts to a
Laurent polynomial in tau.  The restriction extends holomorphically into
the disc iff its negative coefficients vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .boundary import HermitianPolynomial
from .discs import StraightDisc, disc_from_lift_point, LiftPoint
from .errors import NonFiniteSample, NotExtendible, NotInFamily
from .geometry import Complex2

DEFAULT_MOMENT_TOL = 1e-10
FFT_MOMENT_TOL = 1e-6


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finite two-sided coefficient sequence {k: c_k}, k in [-K, K]."""

    coeffs: dict[int, complex]

    def __post_init__(self):
        object.__setattr__(
            self,
            "coeffs",
            {int(k): complex(c) for k, c in self.coeffs.items() if c != 0},
        )

    def __getitem__(self, k: int) -> complex:
        return self.coeffs.get(k, 0.0 + 0.0j)

    def max_negative_modulus(self) -> float:
        return max((abs(c) for k, c in self.coeffs.items() if k < 0), default=0.0)

    def eval_nonnegative(self, tau: complex) -> complex:
        """Value at tau of the k >= 0 part (the holomorphic extension)."""
        return complex(
            sum(c * tau**k for k, c in self.coeffs.items() if k >= 0)
        )

    def eval_circle(self, tau: complex) -> complex:
        return complex(sum(c * tau**k for k, c in self.coeffs.items()))


@dataclass(frozen=True)
class ExtendibilityReport:
    disc: StraightDisc
    max_negative_modulus: float
    verdict: bool
    tolerance: float


def _poly_pow(base: np.ndarray, n: int) -> np.ndarray:
    """Coefficients of base(tau)^n, ascending degree."""
    out = np.array([1.0 + 0.0j])
    for _ in range(n):
        out = np.convolve(out, base)
    return out


def restrict_to_disc(f: HermitianPolynomial, A: StraightDisc) -> LaurentPolynomial:
    """Exact Laurent expansion of f(A(tau)) on |tau| = 1."""
    a, b = A.a.as_array(), A.b.as_array()
    cache: dict[tuple[int, int], np.ndarray] = {}

    def powers(idx: int, conj: bool, n: int) -> np.ndarray:
        key = (idx + (2 if conj else 0), n)
        if key not in cache:
            if conj:
                base = np.array([np.conj(a[idx]), np.conj(b[idx])])
            else:
                base = np.array([a[idx], b[idx]])
            cache[key] = _poly_pow(base, n)
        return cache[key]

    out: dict[int, complex] = {}
    for (a1, a2, b1, b2), c in f.terms.items():
        pos = np.convolve(powers(0, False, a1), powers(1, False, a2))
        neg = np.convolve(powers(0, True, b1), powers(1, True, b2))
        # pos has degrees 0..|alpha| in tau, neg degrees 0..|beta| in 1/tau
        full = np.convolve(pos, neg[::-1])  # degrees -|beta|..|alpha|
        lo = -(b1 + b2)
        for i, coeff in enumerate(full):
            k = lo + i
            if coeff != 0:
                out[k] = out.get(k, 0.0) + c * coeff
    return LaurentPolynomial(out)


def extendibility_test(
    f: HermitianPolynomial, A: StraightDisc, tol: float = DEFAULT_MOMENT_TOL
) -> ExtendibilityReport:
    """Moment test: f extends holomorphically into the disc iff all
    negative Fourier coefficients of its boundary restriction vanish."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    m = restrict_to_disc(f, A).max_negative_modulus()
    return ExtendibilityReport(A, m, m <= tol, tol)


def numeric_moments(sampler: Callable[[float], complex], N: int) -> LaurentPolynomial:
    """Approximate Fourier coefficients of a black-box circle function from
    N uniform samples; exact for trigonometric polynomials of degree < N/2."""
    if N < 64 or N & (N - 1) != 0:
        raise ValueError("sample count must be a power of two >= 64")
    theta = 2 * np.pi * np.arange(N) / N
    samples = np.array([sampler(t) for t in theta], dtype=complex)
    if not np.all(np.isfinite(samples)):
        raise NonFiniteSample("sampler produced a non-finite value")
    c = np.fft.fft(samples) / N
    out = {}
    for m in range(N):
        k = m if m < N // 2 else m - N
        out[k] = c[m]
    return LaurentPolynomial(out)


def extension_value(
    f: HermitianPolynomial,
    A: StraightDisc,
    tau0: complex,
    tol: float = DEFAULT_MOMENT_TOL,
) -> complex:
    """Value at A(tau0) of the holomorphic extension of f along the disc."""
    if abs(tau0) >= 1.0:
        raise ValueError("extension is evaluated at interior parameters")
    laurent = restrict_to_disc(f, A)
    m = laurent.max_negative_modulus()
    if m > tol:
        raise NotExtendible(f"max negative coefficient modulus {m:.3e} > {tol:.1e}")
    return laurent.eval_nonnegative(tau0)


def lifted_value(
    f: HermitianPolynomial,
    P: Complex2,
    L: LiftPoint,
    tol: float = DEFAULT_MOMENT_TOL,
) -> complex:
    """The lifted function at a point (z, [zeta]) of the family through P:
    the extension value, at z, along the unique disc whose lift passes
    through the point."""
    disc, tau0 = disc_from_lift_point(L.z, L.zeta)
    if disc.line_distance(P) > 1e-8:
        raise NotInFamily("recovered disc does not pass through the family center")
    return extension_value(f, disc, tau0, tol)
