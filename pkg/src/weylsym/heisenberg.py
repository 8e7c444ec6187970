"""Both models of the Heisenberg representation, coherent states, the
Bargmann transform, and the parity-based quantizers Ω0 / Ω1.

Functions on Fock space and on L^2(R^n) are represented as evaluation
closures; every identity in scope is pointwise or reducible to quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gaussint import GaussianKernel
from .quadrature import lebesgue_rn

__all__ = [
    "HeisElt",
    "heis_mul",
    "heis_inv",
    "symplectic_form",
    "rho_fock_apply",
    "rho_schrod_apply",
    "coherent_eval",
    "coherent_overlap",
    "bargmann_apply",
    "omega0_apply",
    "omega1_apply",
    "berezin_double_symbol",
]


@dataclass(frozen=True)
class HeisElt:
    """h = ((z0, z0bar), c) in the real Heisenberg group."""

    n: int
    z0: np.ndarray
    c: float

    def __post_init__(self):
        object.__setattr__(self, "z0", np.asarray(self.z0, dtype=complex).reshape(self.n))
        object.__setattr__(self, "c", float(self.c))

    @staticmethod
    def identity(n: int) -> "HeisElt":
        return HeisElt(n, np.zeros(n), 0.0)


def symplectic_form(z: np.ndarray, w: np.ndarray, zp: np.ndarray, wp: np.ndarray) -> complex:
    """ω((z, w), (z', w')) = (i/2)(z w' - z' w) with the bilinear pairing."""
    z, w, zp, wp = (np.asarray(x, dtype=complex) for x in (z, w, zp, wp))
    return 0.5j * (z @ wp - zp @ w)


def heis_mul(h1: HeisElt, h2: HeisElt) -> HeisElt:
    om = symplectic_form(h1.z0, h1.z0.conj(), h2.z0, h2.z0.conj())
    return HeisElt(h1.n, h1.z0 + h2.z0, h1.c + h2.c + 0.5 * om.real)


def heis_inv(h: HeisElt) -> HeisElt:
    return HeisElt(h.n, -h.z0, -h.c)


def rho_fock_apply(h: HeisElt, f, z: np.ndarray, lam: float) -> complex:
    """(ρ_λ(h) f)(z) = exp(iλc0 + (λ/2) z0bar z - (λ/4)|z0|^2) f(z - z0)."""
    z = np.asarray(z, dtype=complex)
    z0 = h.z0
    pref = np.exp(1j * lam * h.c + lam / 2 * (z0.conj() @ z) - lam / 4 * np.sum(np.abs(z0) ** 2))
    return pref * f(z - z0)


def rho_schrod_apply(h: HeisElt, phi, x: np.ndarray, lam: float) -> complex:
    """(ρ'_λ(h) φ)(x) = exp(iλ(c - bx + ab/2)) φ(x - a) with z0 = a + ib."""
    x = np.asarray(x, dtype=float)
    a, b = h.z0.real, h.z0.imag
    pref = np.exp(1j * lam * (h.c - b @ x + 0.5 * (a @ b)))
    return pref * phi(x - a)


def coherent_eval(z: np.ndarray, w: np.ndarray, lam: float) -> complex:
    """e_z(w) = exp(λ zbar w / 2); w may be batched with shape (..., n)."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return np.exp(lam / 2 * (w @ z.conj()))


def coherent_overlap(w: np.ndarray, z: np.ndarray, lam: float) -> complex:
    """<e_w, e_z> = e_w(z) = exp(λ wbar z / 2)."""
    return coherent_eval(w, z, lam)


def bargmann_apply(phi, z: np.ndarray, lam: float, nodes: int = 80) -> complex:
    """Bargmann transform (Bφ)(z) by Gauss–Hermite quadrature over R^n.

    (Bφ)(z) = (λ/π)^{n/4} ∫ exp(-(λ/4)z^2 + λ zx - (λ/2)x^2) φ(x) dx.
    """
    z = np.asarray(z, dtype=complex)
    n = z.shape[0]

    def integrand(x):
        expo = -lam / 4 * (z @ z) + lam * (x @ z) - lam / 2 * np.sum(x**2, axis=-1)
        return np.exp(expo) * phi(x)

    # integrand decays like e^{-λ x^2 / 2}; recentre on Re(z)/... the Gaussian
    # peak sits at x = Re(z) for φ slowly varying, scale sqrt(2/λ)
    scale = np.sqrt(2.0 / lam)
    return (lam / np.pi) ** (n / 4) * lebesgue_rn(
        integrand, n, nodes_per_axis=nodes, scale=scale, center=z.real
    )


def omega0_apply(zc: np.ndarray, f, w: np.ndarray, lam: float) -> complex:
    """(Ω0(z) f)(w) = 2^n exp(λ(w zbar - |z|^2)) f(2z - w)."""
    zc = np.asarray(zc, dtype=complex)
    w = np.asarray(w, dtype=complex)
    n = zc.shape[0]
    pref = 2**n * np.exp(lam * ((w @ zc.conj()) - np.sum(np.abs(zc) ** 2)))
    return pref * f(2 * zc - w)


def omega1_apply(a: np.ndarray, b: np.ndarray, phi, x: np.ndarray, lam: float) -> complex:
    """(Ω1(a, b) φ)(x) = 2^n exp(2iλ b(a - x)) φ(2a - x)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    x = np.asarray(x, dtype=float)
    n = a.shape[0]
    return 2**n * np.exp(2j * lam * (b @ (a - x))) * phi(2 * a - x)


def berezin_double_symbol(kernel, z: np.ndarray, w: np.ndarray, lam: float) -> complex:
    """Double Berezin symbol s(z, w) = k_A(z, w) / <e_w, e_z>.

    `kernel` is a GaussianKernel or any callable (z, w) -> value; the diagonal
    z = w gives the covariant symbol.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    val = kernel.eval(z, w) if isinstance(kernel, GaussianKernel) else kernel(z, w)
    return val / coherent_overlap(w, z, lam)
