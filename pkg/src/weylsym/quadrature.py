"""Tensor-product Gauss–Hermite quadrature over R^n and C^n.

Gauss–Hermite gives nodes/weights for ∫ e^{-s^2} g(s) ds ≈ Σ w_i g(s_i).
Three wrappers are provided:

* ``quadrature_cn``: ∫_{C^n} f(w) e^{-λ|w|^2/2} dμ_λ(w) with the measure
  dμ_λ = (2π)^{-n} λ^n dm normalised so that f ≡ 1 integrates to 1.
* ``lebesgue_cn``: plain ∫_{C^n} f dm for Gaussian-decaying f (the weight is
  un-absorbed by multiplying with e^{+s^2} at the nodes).
* ``lebesgue_rn``: plain ∫_{R^n} f dx, optionally recentred/rescaled.

Integrands must be vectorised: they receive an array of points of shape
(N, n) (complex for C^n, real for R^n) and return an (N,) array.
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np
from numpy.polynomial.hermite import hermgauss

__all__ = ["quadrature_cn", "lebesgue_cn", "lebesgue_rn", "gh_nodes"]


@functools.lru_cache(maxsize=16)
def gh_nodes(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    s, w = hermgauss(nodes)
    return s, w


@functools.lru_cache(maxsize=8)
def _grid(dim: int, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Flattened tensor grid over `dim` real axes: points (N, dim), log-free weights (N,)."""
    s, w = gh_nodes(nodes)
    idx = np.array(list(itertools.product(range(nodes), repeat=dim)))
    pts = s[idx]
    wts = np.prod(w[idx], axis=1)
    return pts, wts


def quadrature_cn(f, lam: float, n: int, nodes_per_axis: int = 80) -> complex:
    """∫_{C^n} f(w) e^{-λ|w|^2/2} dμ_λ(w) by tensor Gauss–Hermite.

    Substituting x_j = sqrt(2/λ) s_j on each of the 2n real axes absorbs the
    weight and the measure normalisation: the prefactor collapses to π^{-n}.
    """
    pts, wts = _grid(2 * n, nodes_per_axis)
    scale = math.sqrt(2.0 / lam)
    w_cplx = scale * (pts[:, :n] + 1j * pts[:, n:])
    vals = np.asarray(f(w_cplx))
    return complex(np.pi ** (-n) * np.sum(wts * vals))


def lebesgue_cn(f, n: int, nodes_per_axis: int = 80, scale: float = 1.0) -> complex:
    """∫_{C^n} f(w) dm(w) for integrands decaying at least like e^{-|w|^2/scale^2}."""
    pts, wts = _grid(2 * n, nodes_per_axis)
    w_cplx = scale * (pts[:, :n] + 1j * pts[:, n:])
    vals = np.asarray(f(w_cplx))
    # undo the e^{-s^2} weight on every axis; scale^{2n} is the Jacobian
    corr = np.exp(np.sum(pts**2, axis=1))
    return complex(scale ** (2 * n) * np.sum(wts * corr * vals))


def lebesgue_rn(f, n: int, nodes_per_axis: int = 80, scale: float = 1.0, center=0.0) -> complex:
    """∫_{R^n} f(x) dx for integrands decaying like a Gaussian around `center`."""
    pts, wts = _grid(n, nodes_per_axis)
    x = center + scale * pts
    vals = np.asarray(f(x))
    corr = np.exp(np.sum(pts**2, axis=1))
    return complex(scale**n * np.sum(wts * corr * vals))
