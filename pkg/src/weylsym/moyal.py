"""Exact Moyal star product on phase-space polynomials and Weyl quantization.

The bidifferential operators are

    P^l(u, v) = Σ Λ^{i1 j1} ... Λ^{il jl} (∂_{i1...il} u)(∂_{j1...jl} v)

with Λ pairing p_k to q_k (+1, and -1 for the transpose), so that P^1 is the
Poisson bracket Σ_k (∂u/∂p_k ∂v/∂q_k - ∂u/∂q_k ∂v/∂p_k).  The star product
is u ∗ v = Σ_l t^l P^l(u, v)/l! specialised at t = -i/2, which makes Weyl
quantization a homomorphism: W(f1 ∗ f2) = W(f1) W(f2).

Phase-space polynomials are `Poly` instances in 2n variables ordered
(p_1..p_n, q_1..q_n); quantized operators are differential operators
Σ_β c_β(p) ∂_p^β with polynomial coefficients.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonConvergent, ShapeError
from .polys import Poly
from .weylsymbols import QuadForm2n

__all__ = [
    "PhasePoly",
    "DiffOp",
    "phase_poly_from_quadform",
    "poisson_power",
    "moyal_mul",
    "star_exp_series",
    "star_exp_quadratic_closed",
    "weyl_quantize_poly",
    "diffop_compose",
    "diffop_apply",
    "homomorphism_residual",
    "star_exp_bridge_residual",
]

# a phase-space polynomial is a Poly in 2n variables, (p, q)-ordered
PhasePoly = Poly

_T = -0.5j  # the deformation parameter, fixed at construction


def phase_poly_from_quadform(q: QuadForm2n) -> Poly:
    """q_M(v) = v^t M v as a polynomial in (p_1..p_n, q_1..q_n) = v."""
    dim = 2 * q.n
    out: dict = {}
    for i in range(dim):
        for j in range(dim):
            if q.M[i, j] != 0:
                e = [0] * dim
                e[i] += 1
                e[j] += 1
                key = tuple(e)
                out[key] = out.get(key, 0.0) + q.M[i, j]
    return Poly(dim, out)


def _check_phase(u: Poly) -> int:
    if u.nvars % 2 != 0:
        raise ShapeError("phase-space polynomials need an even variable count")
    return u.nvars // 2


def poisson_power(u: Poly, v: Poly, l: int) -> Poly:
    """P^l(u, v) by the explicit Λ-sum; P^0(u, v) = uv."""
    n = _check_phase(u)
    if v.nvars != u.nvars:
        raise ShapeError("operands live on different phase spaces")
    if l < 0:
        raise ShapeError("order must be nonnegative")
    if l == 0:
        return u * v
    total = Poly.zero(u.nvars)
    # each Λ factor picks an index k and an orientation: (p_k, q_k) -> +1,
    # (q_k, p_k) -> -1
    for choice in itertools.product(range(n), repeat=l):
        for signs in itertools.product((0, 1), repeat=l):
            du, dv, sgn = u, v, 1
            for k, flip in zip(choice, signs):
                if flip == 0:
                    du = du.diff(k)        # ∂/∂p_k
                    dv = dv.diff(n + k)    # ∂/∂q_k
                else:
                    du = du.diff(n + k)
                    dv = dv.diff(k)
                    sgn = -sgn
                if not du.terms or not dv.terms:
                    break
            else:
                total = total + sgn * (du * dv)
    return total


def moyal_mul(u: Poly, v: Poly) -> Poly:
    """u ∗ v = Σ_l t^l P^l(u, v)/l! at t = -i/2 (finite sum for polynomials)."""
    lmax = min(u.degree, v.degree)
    out = Poly.zero(u.nvars)
    for l in range(lmax + 1):
        out = out + (_T**l / math.factorial(l)) * poisson_power(u, v, l)
    return out


def star_exp_series(q: QuadForm2n, s: complex, order: int, point) -> tuple[complex, float]:
    """exp_*(s q_M)(point) = Σ_{l≤L} (s q_M)^{∗l}(point)/l! by repeated
    star multiplication.  Returns (value, last-term magnitude).

    Refuses outside the convergence envelope ‖sM‖ ≤ 0.25, |point| ≤ 1.5,
    L ≤ 60, and raises NonConvergent if the certificate fails.
    """
    point = np.asarray(point, dtype=float).reshape(2 * q.n)
    if np.linalg.norm(complex(s) * q.M, 2) > 0.25 + 1e-12:
        raise NonConvergent("‖s M‖ exceeds the convergence envelope (0.25)")
    if np.linalg.norm(point) > 1.5 + 1e-12:
        raise NonConvergent("|point| exceeds the convergence envelope (1.5)")
    if order > 60:
        raise NonConvergent("truncation order exceeds 60")
    f = complex(s) * phase_poly_from_quadform(q)
    power = Poly.const(2 * q.n, 1.0)
    total = 0.0 + 0.0j
    last = 0.0
    for l in range(order + 1):
        last = abs(power.eval(point) / math.factorial(l))
        total += power.eval(point) / math.factorial(l)
        if l < order:
            power = moyal_mul(power, f)
    if last > 1e-10 * max(abs(total), 1e-30):
        raise NonConvergent(f"last term {last:.3g} is not negligible")
    return complex(total), last


def star_exp_quadratic_closed(q: QuadForm2n, point) -> complex:
    """exp_*(-i q_M)(x, y) = (Det cosh(JM))^{-1/2}
    exp(i (x y) J tanh(JM) (x y)^t)."""
    from . import matcore
    from .errors import SingularMatrix
    from .weylsymbols import _det_sqrt_eig

    v = np.asarray(point, dtype=float).reshape(2 * q.n)
    jm = matcore.matrix_J(q.n) @ q.M
    ch = matcore.mat_cosh(jm)
    if abs(matcore.det(ch)) <= 1e-12:
        raise SingularMatrix("cosh(JM) is singular")
    th = matcore.mat_sinh(jm) @ matcore.inv(ch)
    expo = 1j * (v @ ((matcore.matrix_J(q.n) @ th) @ v))
    return complex(np.exp(expo) / _det_sqrt_eig(ch))


@dataclass(frozen=True)
class DiffOp:
    """Σ_β c_β(p) ∂_p^β with polynomial coefficients c_β ∈ C[p_1..p_n]."""

    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for beta, coeff in self.terms.items():
            beta = tuple(int(e) for e in beta)
            if len(beta) != self.n or any(e < 0 for e in beta):
                raise ShapeError(f"bad derivative index {beta}")
            if coeff.terms:
                clean[beta] = coeff
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def identity(n: int) -> "DiffOp":
        return DiffOp(n, {(0,) * n: Poly.const(n, 1.0)})

    def max_diff(self, other: "DiffOp") -> float:
        keys = set(self.terms) | set(other.terms)
        zero = Poly.zero(self.n)
        return max(
            (self.terms.get(k, zero).max_coeff_diff(other.terms.get(k, zero)) for k in keys),
            default=0.0,
        )


def _binom_multi(alpha, kappa) -> int:
    return math.prod(math.comb(a, k) for a, k in zip(alpha, kappa))


def _sub_indices(alpha):
    return itertools.product(*(range(a + 1) for a in alpha))


def weyl_quantize_poly(f: Poly) -> DiffOp:
    """W(f) for f(p, q) = Σ c p^β q^α, from the defining evaluation

    (W(u(p) q^α) φ)(p) = (i ∂/∂s)^α ( u(p + s/2) φ(p + s) )|_{s=0}
                       = i^{|α|} Σ_{κ≤α} C(α,κ) 2^{-|κ|} (∂^κ u)(p) ∂^{α-κ}φ.
    """
    n = _check_phase(f)
    out: dict = {}
    for exps, coeff in f.terms.items():
        beta, alpha = exps[:n], exps[n:]
        for kappa in _sub_indices(alpha):
            if any(k > b for k, b in zip(kappa, beta)):
                continue
            fall = math.prod(
                math.factorial(b) // math.factorial(b - k) for b, k in zip(beta, kappa)
            )
            c = (
                coeff
                * 1j ** sum(alpha)
                * _binom_multi(alpha, kappa)
                * 2.0 ** (-sum(kappa))
                * fall
            )
            mono = tuple(b - k for b, k in zip(beta, kappa))
            key = tuple(a - k for a, k in zip(alpha, kappa))
            poly = Poly(n, {mono: c})
            out[key] = out.get(key, Poly.zero(n)) + poly
    return DiffOp(n, out)


def diffop_apply(d: DiffOp, phi: Poly) -> Poly:
    """Apply Σ c_β(p) ∂^β to a polynomial φ(p)."""
    out = Poly.zero(d.n)
    for beta, coeff in d.terms.items():
        g = phi
        for i, e in enumerate(beta):
            for _ in range(e):
                g = g.diff(i)
        out = out + coeff * g
    return out


def diffop_compose(d1: DiffOp, d2: DiffOp) -> DiffOp:
    """Symbolic composition: ∂^β (c(p) ·) = Σ_{κ≤β} C(β,κ) (∂^κ c) ∂^{β-κ}."""
    if d1.n != d2.n:
        raise ShapeError("operators act on different spaces")
    n = d1.n
    out: dict = {}
    for b1, c1 in d1.terms.items():
        for b2, c2 in d2.terms.items():
            for kappa in _sub_indices(b1):
                dc = c2
                for i, e in enumerate(kappa):
                    for _ in range(e):
                        dc = dc.diff(i)
                if not dc.terms:
                    continue
                key = tuple(a - k + b for a, k, b in zip(b1, kappa, b2))
                poly = _binom_multi(b1, kappa) * (c1 * dc)
                out[key] = out.get(key, Poly.zero(n)) + poly
    return DiffOp(n, out)


def homomorphism_residual(f1: Poly, f2: Poly) -> float:
    """Max coefficient deviation of W(f1 ∗ f2) from W(f1) ∘ W(f2)."""
    return weyl_quantize_poly(moyal_mul(f1, f2)).max_diff(
        diffop_compose(weyl_quantize_poly(f1), weyl_quantize_poly(f2))
    )


def star_exp_bridge_residual(x_lie, point) -> float:
    """|exp_*(-i q_M)(point) - W1(σ'(exp X))(point)| with M = (1/2) J X."""
    from . import matcore
    from .weylsymbols import w1_exp_closed

    n = x_lie.n
    m = matcore.matrix_J(n) @ x_lie.full / 2
    m = np.real((m + m.T) / 2)
    point = np.asarray(point, dtype=float).reshape(2 * n)
    closed = star_exp_quadratic_closed(QuadForm2n(n, m), point)
    w1 = w1_exp_closed(x_lie, point[:n], point[n:])
    return abs(closed - w1)
