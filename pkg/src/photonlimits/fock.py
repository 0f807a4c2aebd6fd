"""Truncated two-mode Fock-space oracle.

Everything the closed forms claim is recomputed here by direct linear
algebra on a finite Fock basis: the two-mode squeeze operator S as a
matrix exponential, the half-infinite shift on mode 1, the isometry
W^n = S^dag (shift)^n S, its state coefficients, and the position
eigenvector expansion.  Truncation artifacts live in the top rows of
the ladder matrices, so residual checks restrict to an interior
subspace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import atanh, cosh, pi, sqrt, tanh

import numpy as np
from scipy.linalg import expm
from scipy.sparse import csr_matrix, identity, kron
from scipy.sparse.linalg import expm_multiply

from .errors import DomainError, TruncationError

ADEQUACY_THRESHOLD = 1e-9
TRUNC_CAP = 64


def gamma_for_eta_tilde(eta_tilde: float) -> float:
    """Squeeze parameter with tanh(gamma) = sqrt(eta_tilde/(1 - eta_tilde))."""
    if not 0.0 <= eta_tilde < 0.5:
        raise DomainError(f"eta_tilde must be in [0, 1/2), got {eta_tilde}")
    return atanh(sqrt(eta_tilde / (1.0 - eta_tilde)))


def default_truncation(gamma: float) -> int:
    """Smallest cutoff with tanh(gamma)^N < 1e-12, capped at 64."""
    th = tanh(abs(gamma))
    if th == 0.0:
        return 8
    n = 8
    while th**n >= 1e-12 and n < TRUNC_CAP:
        n += 1
    return n


def _check_adequacy(gamma: float, trunc: int):
    if trunc < 2:
        raise DomainError(f"trunc must be at least 2, got {trunc}")
    if tanh(abs(gamma)) ** trunc >= ADEQUACY_THRESHOLD:
        raise TruncationError(
            f"trunc = {trunc} inadequate for gamma = {gamma:.4g}"
        )


def lowering(trunc: int) -> np.ndarray:
    """Single-mode lowering operator a on Fock levels 0..trunc."""
    return np.diag(np.sqrt(np.arange(1.0, trunc + 1)), k=1)


def shift_up(trunc: int) -> np.ndarray:
    """Half-infinite shift sum over n of |n+1><n|, truncated."""
    return np.eye(trunc + 1, k=-1)


def _two_mode(op1: np.ndarray, op2: np.ndarray) -> np.ndarray:
    return np.kron(op1, op2)


def _generator(gamma: float, trunc: int) -> np.ndarray:
    a = lowering(trunc)
    eye = np.eye(trunc + 1)
    a1 = _two_mode(a, eye)
    a2 = _two_mode(eye, a)
    return gamma * (a1 @ a2 - a1.conj().T @ a2.conj().T)


@dataclass(frozen=True)
class FockOperator:
    """Dense operator on the truncated two-mode space."""

    trunc: int
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class FockTensor:
    """Two-mode amplitudes indexed by (n1, n2), 0 <= n1, n2 <= trunc."""

    trunc: int
    amps: np.ndarray = field(repr=False)

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


def interior_projector(trunc: int, cut: int) -> np.ndarray:
    """Diagonal projector onto n1, n2 <= cut."""
    keep = np.arange(trunc + 1) <= cut
    return np.diag(np.kron(keep, keep).astype(float))


def squeeze_operator(gamma: float, trunc: int) -> FockOperator:
    """Two-mode squeeze exp(gamma (a1 a2 - a1^dag a2^dag)), truncated."""
    _check_adequacy(gamma, trunc)
    return FockOperator(trunc, expm(_generator(gamma, trunc)))


def licht_operator(gamma: float, n: int, trunc: int) -> FockOperator:
    """W^n = S^dag (shift)^n S with the half-infinite shift on mode 1."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    s = squeeze_operator(gamma, trunc).matrix
    shift = _two_mode(shift_up(trunc), np.eye(trunc + 1))
    return FockOperator(
        trunc, s.conj().T @ np.linalg.matrix_power(shift, n) @ s
    )


def _sparse_ladders(gamma: float, trunc: int):
    """Sparse generator, mode-1 shift, and ladder operators."""
    dim = trunc + 1
    a = csr_matrix(lowering(trunc))
    eye = identity(dim, format="csr")
    a1 = kron(a, eye, format="csr")
    a2 = kron(eye, a, format="csr")
    gen = gamma * (a1 @ a2 - a1.conj().T.tocsr() @ a2.conj().T.tocsr())
    shift = kron(csr_matrix(shift_up(trunc)), eye, format="csr")
    return gen, shift, a1, a2


def _apply_w(gen, shift, vecs: np.ndarray, n: int = 1) -> np.ndarray:
    """W^n acting on column vectors via sparse exponential products."""
    out = expm_multiply(gen, vecs)
    for _ in range(n):
        out = shift @ out
    return expm_multiply(-gen, out)


def state_coefficients(gamma: float, n: int, trunc: int) -> np.ndarray:
    """Coefficients c_k = <n+k-1, k-1| W^n |0, 0> for k = 1, 2, ...

    Uses a sparse matrix-exponential vector product, so large cutoffs
    stay cheap even though licht_operator would not.
    """
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    _check_adequacy(gamma, trunc)
    dim = trunc + 1
    gen, shift, _, _ = _sparse_ladders(gamma, trunc)
    vec = np.zeros(dim * dim, dtype=complex)
    vec[0] = 1.0
    vec = _apply_w(gen, shift, vec, n)
    amps = vec.reshape(dim, dim)
    k_max = trunc + 1 - n
    ks = np.arange(1, k_max + 1)
    return amps[n + ks - 1, ks - 1]


def _interior_basis(trunc: int, cut: int) -> np.ndarray:
    dim = trunc + 1
    idx = [n1 * dim + n2 for n1 in range(cut + 1) for n2 in range(cut + 1)]
    basis = np.zeros((dim * dim, len(idx)))
    for col, row in enumerate(idx):
        basis[row, col] = 1.0
    return basis


def isometry_residual(gamma: float, trunc: int, cut: int) -> float:
    """Spectral norm of the interior block of W^dag W - 1.

    The block is the Gram matrix of W applied to the interior basis, so
    no dense W is ever formed.
    """
    _check_adequacy(gamma, trunc)
    if not 0 <= cut < trunc:
        raise DomainError(f"cut must be in [0, trunc), got {cut}")
    gen, shift, _, _ = _sparse_ladders(gamma, trunc)
    basis = _interior_basis(trunc, cut)
    w_basis = _apply_w(gen, shift, basis)
    gram = w_basis.conj().T @ w_basis
    return float(np.linalg.norm(gram - np.eye(basis.shape[1]), 2))


def commutator_residuals(
    gamma: float, eta_tilde: float, trunc: int, cut: int
) -> tuple[float, float]:
    """Interior-block norms of [W, B] and [W, B^dag].

    B = a1 - sqrt((1 - eta_tilde)/eta_tilde) a2^dag is, up to scale, the
    squeeze-transformed mode-2 annihilator, so both commutators vanish in
    the untruncated space; the residual measures truncation leakage.
    """
    if not 0.0 < eta_tilde < 0.5:
        raise DomainError(f"eta_tilde must be in (0, 1/2), got {eta_tilde}")
    _check_adequacy(gamma, trunc)
    gen, shift, a1, a2 = _sparse_ladders(gamma, trunc)
    b_op = a1 - sqrt((1.0 - eta_tilde) / eta_tilde) * a2.conj().T.tocsr()
    basis = _interior_basis(trunc, cut)
    w_basis = _apply_w(gen, shift, basis)
    res = []
    for op in (b_op, b_op.conj().T.tocsr()):
        block = basis.T @ (_apply_w(gen, shift, op @ basis) - op @ w_basis)
        res.append(float(np.linalg.norm(block, 2)))
    return res[0], res[1]


def factorized_squeeze_vacuum(gamma: float, trunc: int) -> FockTensor:
    """S|0,0> from the normal-ordered closed form, no matrix exponential."""
    amps = np.zeros((trunc + 1, trunc + 1), dtype=complex)
    th = tanh(gamma)
    for k in range(trunc + 1):
        amps[k, k] = (-th) ** k / cosh(gamma)
    return FockTensor(trunc, amps)


def eigenvector_overlap(n: int, x: float, trunc: int) -> float:
    """<n|X> from the creation-operator series of the position eigenvector.

    |X> = pi^{-1/4} e^{-x^2/2} exp(-a^dag^2/2 + sqrt(2) x a^dag) |0>; the
    exponent is strictly raising, so the series terminates exactly on the
    truncated space.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if trunc < n + 4:
        raise TruncationError(f"trunc = {trunc} too small for level {n}")
    vec = _eigenvector_series(x, trunc)
    return float(np.real(vec[n]))


def _eigenvector_series(x: float, trunc: int) -> np.ndarray:
    adag = lowering(trunc).T
    op = -0.5 * (adag @ adag) + sqrt(2.0) * x * adag
    term = np.zeros(trunc + 1)
    term[0] = 1.0
    total = term.copy()
    m = 0
    while np.any(term != 0.0):
        m += 1
        term = (op @ term) / m
        total += term
    return pi ** (-0.25) * np.exp(-0.5 * x**2) * total


def position_operator_check(trunc: int) -> float:
    """Worst eigen-equation residual of (a + a^dag)/sqrt(2) on |X>.

    Checks X in {0, +-0.5} with the top two truncated levels excluded,
    where the clipped raising operator is intrinsically wrong.
    """
    if trunc < 20:
        raise DomainError(f"trunc must be at least 20, got {trunc}")
    a = lowering(trunc)
    pos_op = (a + a.T) / sqrt(2.0)
    worst = 0.0
    for x in (0.0, 0.5, -0.5):
        vec = _eigenvector_series(x, trunc)
        resid = pos_op @ vec - x * vec
        worst = max(worst, float(np.linalg.norm(resid[: trunc - 1])))
    return worst
