"""Sp(n,R), the group S = Sp(n,C) ∩ SU(n,n), their Lie algebras, and the
Cayley-frame conjugation between the two pictures.

An element of S is stored as the block pair (P, Q) of

    k = [[P, Q], [Qbar, Pbar]],   P P* - Q Q* = I,   P Q^t = Q P^t,

and the conjugation k = U g U^{-1} with U = [[I, iI], [I, -iI]] identifies S
with Sp(n,R).  In block terms, for g = [[A, B], [C, D]],

    P = (A + D + i(C - B)) / 2,   Q = (A - D + i(C + B)) / 2.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field

import numpy as np

from . import matcore
from .errors import NotInLie, NotInS, NotSymplectic
from .matcore import as_matrix, matrix_J, matrix_U, norm

__all__ = [
    "SpReal",
    "SuBlocks",
    "SpLieReal",
    "SuLie",
    "ValidationReport",
    "su_from_sp",
    "sp_from_su",
    "su_lie_from_sp_lie",
    "validate_sp",
    "validate_su",
    "validate_sp_lie",
    "validate_su_lie",
    "random_sp_lie",
    "random_sp",
    "random_su",
    "sp_mul",
    "sp_inv",
    "su_mul",
    "su_inv",
    "su_exp",
    "rng_for",
]


def rng_for(seed: int, tag: str) -> np.random.Generator:
    """Deterministic per-purpose generator: same (seed, tag) -> same stream."""
    return np.random.default_rng(np.random.SeedSequence([seed, zlib.crc32(tag.encode())]))


def _tol(x: float, base: float = 1e-10) -> float:
    return base * (1.0 + x)


@dataclass(frozen=True)
class ValidationReport:
    residuals: dict = field(default_factory=dict)
    tol: float = 1e-10

    @property
    def ok(self) -> bool:
        return all(r <= self.tol for r in self.residuals.values())

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)


@dataclass(frozen=True)
class SpReal:
    """g in Sp(n,R), stored as the full real 2n x 2n matrix."""

    n: int
    g: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "g", as_matrix(self.g, 2 * self.n, 2 * self.n))

    @property
    def blocks(self):
        n = self.n
        g = self.g
        return g[:n, :n], g[:n, n:], g[n:, :n], g[n:, n:]

    @staticmethod
    def identity(n: int) -> "SpReal":
        return SpReal(n, np.eye(2 * n))


@dataclass(frozen=True)
class SuBlocks:
    """k = [[P, Q], [Qbar, Pbar]] in S, stored via its blocks."""

    n: int
    P: np.ndarray
    Q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "P", as_matrix(self.P, self.n, self.n))
        object.__setattr__(self, "Q", as_matrix(self.Q, self.n, self.n))

    @property
    def full(self) -> np.ndarray:
        return np.block([[self.P, self.Q], [self.Q.conj(), self.P.conj()]])

    @staticmethod
    def identity(n: int) -> "SuBlocks":
        return SuBlocks(n, np.eye(n), np.zeros((n, n)))

    def act(self, z: np.ndarray) -> np.ndarray:
        """kz := Pz + Q zbar (the action of S on C^n)."""
        z = np.asarray(z, dtype=complex)
        return self.P @ z + self.Q @ z.conj()


@dataclass(frozen=True)
class SpLieReal:
    """X = [[A, B], [C, -A^t]] in sp(n,R); B, C symmetric."""

    n: int
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", as_matrix(self.A, self.n, self.n).real.astype(float))
        object.__setattr__(self, "B", as_matrix(self.B, self.n, self.n).real.astype(float))
        object.__setattr__(self, "C", as_matrix(self.C, self.n, self.n).real.astype(float))

    @property
    def full(self) -> np.ndarray:
        return np.block([[self.A, self.B], [self.C, -self.A.T]]).astype(float)


@dataclass(frozen=True)
class SuLie:
    """X = [[A, B], [Bbar, Abar]] in the Lie algebra of S; A skew-Hermitian, B symmetric."""

    n: int
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", as_matrix(self.A, self.n, self.n))
        object.__setattr__(self, "B", as_matrix(self.B, self.n, self.n))

    @property
    def full(self) -> np.ndarray:
        return np.block([[self.A, self.B], [self.B.conj(), self.A.conj()]])


# ---------------------------------------------------------------------------
# conjugation between the two pictures


def su_from_sp(g: SpReal) -> SuBlocks:
    """k = U g U^{-1}; raises NotSymplectic on invalid input."""
    rep = validate_sp(g)
    if not rep.ok:
        raise NotSymplectic(f"input fails g^t J g = J by {rep.max_residual:.3g}")
    a, b, c, d = g.blocks
    p = (a + d + 1j * (c - b)) / 2
    q = (a - d + 1j * (c + b)) / 2
    return SuBlocks(g.n, p, q)


def sp_from_su(k: SuBlocks) -> SpReal:
    """Inverse conjugation g = U^{-1} k U; raises NotInS on invalid input."""
    rep = validate_su(k)
    if not rep.ok:
        raise NotInS(f"block pair fails S invariants by {rep.max_residual:.3g}")
    u = matrix_U(k.n)
    g = np.linalg.solve(u, k.full @ u)
    if norm(g.imag) > _tol(norm(g)):
        raise NotInS("conjugated matrix is not real")
    return SpReal(k.n, g.real)


def su_lie_from_sp_lie(x: SpLieReal) -> SuLie:
    """U X U^{-1} for X in sp(n,R); lands in the Lie algebra of S."""
    a, b, c = x.A, x.B, x.C
    return SuLie(x.n, (a - a.T + 1j * (c - b)) / 2, (a + a.T + 1j * (b + c)) / 2)


# ---------------------------------------------------------------------------
# validation


def validate_sp(g: SpReal, tol: float | None = None) -> ValidationReport:
    j = matrix_J(g.n).real
    scale = norm(g.g)
    res = {
        "symplectic": norm(g.g.T @ j @ g.g - j),
        "real": 0.0,
    }
    return ValidationReport(res, tol if tol is not None else _tol(scale))


def validate_su(k: SuBlocks, tol: float | None = None) -> ValidationReport:
    p, q = k.P, k.Q
    eye = np.eye(k.n)
    scale = norm(p) + norm(q)
    res = {
        "PPs-QQs=I": norm(p @ p.conj().T - q @ q.conj().T - eye),
        "PQt=QPt": norm(p @ q.T - q @ p.T),
        "PsP-QtQbar=I": norm(p.conj().T @ p - q.T @ q.conj() - eye),
        "PsQ=QtPbar": norm(p.conj().T @ q - q.T @ p.conj()),
    }
    return ValidationReport(res, tol if tol is not None else _tol(scale))


def validate_sp_lie(x: SpLieReal, tol: float | None = None) -> ValidationReport:
    j = matrix_J(x.n).real
    full = x.full
    res = {
        "B symmetric": norm(x.B - x.B.T),
        "C symmetric": norm(x.C - x.C.T),
        "XtJ+JX=0": norm(full.T @ j + j @ full),
    }
    return ValidationReport(res, tol if tol is not None else _tol(norm(full)))


def validate_su_lie(x: SuLie, tol: float | None = None) -> ValidationReport:
    res = {
        "A skew-Hermitian": norm(x.A + x.A.conj().T),
        "B symmetric": norm(x.B - x.B.T),
    }
    return ValidationReport(res, tol if tol is not None else _tol(norm(x.full)))


# ---------------------------------------------------------------------------
# random elements (single exponentials of algebra draws; deterministic in seed)


def random_sp_lie(n: int, seed: int, scale: float = 0.5) -> SpLieReal:
    rng = rng_for(seed, "sp-lie")
    a = rng.uniform(-scale, scale, (n, n))
    b = rng.uniform(-scale, scale, (n, n))
    c = rng.uniform(-scale, scale, (n, n))
    return SpLieReal(n, a, (b + b.T) / 2, (c + c.T) / 2)


def random_sp(n: int, seed: int, scale: float = 0.5) -> SpReal:
    x = random_sp_lie(n, seed, scale)
    return SpReal(n, matcore.mat_exp(x.full).real)


def random_su(n: int, seed: int, scale: float = 0.5) -> SuBlocks:
    return su_from_sp(random_sp(n, seed, scale))


def su_exp(x: SuLie) -> SuBlocks:
    """Exponential of a Lie-algebra element of S, returned as blocks."""
    rep = validate_su_lie(x)
    if not rep.ok:
        raise NotInLie(f"Lie invariants fail by {rep.max_residual:.3g}")
    n = x.n
    full = matcore.mat_exp(x.full)
    return SuBlocks(n, full[:n, :n], full[:n, n:])


# ---------------------------------------------------------------------------
# group operations


def sp_mul(g1: SpReal, g2: SpReal) -> SpReal:
    return SpReal(g1.n, g1.g @ g2.g)


def sp_inv(g: SpReal) -> SpReal:
    # g^{-1} = J^t g^t J for symplectic g
    j = matrix_J(g.n).real
    return SpReal(g.n, j.T @ g.g.T @ j)


def su_mul(k1: SuBlocks, k2: SuBlocks) -> SuBlocks:
    p = k1.P @ k2.P + k1.Q @ k2.Q.conj()
    q = k1.P @ k2.Q + k1.Q @ k2.P.conj()
    return SuBlocks(k1.n, p, q)


def su_inv(k: SuBlocks) -> SuBlocks:
    """Closed block form k^{-1} = [[P*, -Q^t], [-Q*, P^t]]."""
    return SuBlocks(k.n, k.P.conj().T, -k.Q.T)
