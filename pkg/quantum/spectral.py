"""Dense Hermitian linear algebra: eigendecomposition, matrix functions, tensor products."""

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from constants import (
    HERMITIAN_TOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_OFF_DIAGONAL_TOL,
    NEGATIVE_EIGENVALUE_TOL,
)
from utils.errors import (
    DomainError,
    InvalidMatrixError,
    NoConvergenceError,
    NotHermitianError,
)
from utils.logging import logger

ComplexMatrix = npt.NDArray[np.complex128]
RealMap = Callable[[float], float]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and the matching orthonormal eigenvectors (columns)."""

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: ComplexMatrix
    sweeps: int = 0

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> ComplexMatrix:
        """Rebuild sum_k lambda_k v_k v_k^dagger."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T

    def with_eigenvalues(self, eigenvalues: npt.NDArray[np.float64]) -> "SpectralDecomposition":
        """Return a copy sharing the eigenvectors but carrying new eigenvalues."""
        return SpectralDecomposition(
            eigenvalues=_frozen(np.array(eigenvalues, dtype=np.float64)),
            eigenvectors=self.eigenvectors,
            sweeps=self.sweeps,
        )


def as_complex_matrix(raw) -> ComplexMatrix:
    """Convert raw input to a finite square complex matrix.

    Args:
        raw: Nested sequence or array of numbers

    Returns:
        A fresh ``complex128`` array

    Raises:
        InvalidMatrixError: If the input is not square, is empty or has non-finite entries
    """
    matrix = np.array(raw, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise InvalidMatrixError.not_square(matrix.shape)
    if not np.all(np.isfinite(matrix)):
        raise InvalidMatrixError.not_finite()
    return matrix


def hermitian_deviation(matrix: ComplexMatrix) -> float:
    """Largest entry of |M - M^dagger|."""
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def hermitize(matrix: ComplexMatrix) -> ComplexMatrix:
    return 0.5 * (matrix + matrix.conj().T)


def _off_diagonal_norm(matrix: ComplexMatrix) -> float:
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def _rotate(a: ComplexMatrix, v: ComplexMatrix, p: int, q: int) -> None:
    """Apply one complex Jacobi rotation in place, zeroing a[p, q].

    The unitary first removes the phase of a[p, q] and then performs the real
    symmetric rotation on the (p, q) block.
    """
    apq = a[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return

    phase = (apq / magnitude).conjugate()
    theta = 0.5 * math.atan2(2.0 * magnitude, a[q, q].real - a[p, p].real)
    c, s = math.cos(theta), math.sin(theta)
    rotation = np.array([[c, s], [-s * phase, c * phase]], dtype=np.complex128)

    pivot = [p, q]
    a[:, pivot] = a[:, pivot] @ rotation
    a[pivot, :] = rotation.conj().T @ a[pivot, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, pivot] = v[:, pivot] @ rotation


def _jacobi(matrix: ComplexMatrix) -> tuple[npt.NDArray[np.float64], ComplexMatrix, int]:
    """Cyclic Jacobi eigensolver for a Hermitian matrix.

    Returns:
        Unsorted eigenvalues, eigenvector columns and the number of sweeps used

    Raises:
        NoConvergenceError: If the off-diagonal norm is still above threshold after
            ``JACOBI_MAX_SWEEPS`` sweeps
    """
    a = np.array(matrix, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_OFF_DIAGONAL_TOL * max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    off_norm = _off_diagonal_norm(a)
    while off_norm > threshold:
        if sweeps == JACOBI_MAX_SWEEPS:
            logger.warning(f"Jacobi stalled on a {n}x{n} matrix at off-norm {off_norm:.3e}")
            raise NoConvergenceError.after_sweeps(sweeps, off_norm)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1
        off_norm = _off_diagonal_norm(a)

    return np.real(np.diag(a)).copy(), v, sweeps


def eigh(matrix: ComplexMatrix) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    Args:
        matrix: Square complex matrix, Hermitian within ``HERMITIAN_TOL``

    Returns:
        SpectralDecomposition with eigenvalues ascending; ties keep solver order

    Raises:
        NotHermitianError: If max |M - M^dagger| exceeds the tolerance
        NoConvergenceError: If the Jacobi iteration runs out of sweeps
    """
    matrix = as_complex_matrix(matrix)
    deviation = hermitian_deviation(matrix)
    if deviation > HERMITIAN_TOL:
        raise NotHermitianError.with_deviation(deviation, HERMITIAN_TOL)

    eigenvalues, eigenvectors, sweeps = _jacobi(hermitize(matrix))
    order = np.argsort(eigenvalues, kind="stable")
    return SpectralDecomposition(
        eigenvalues=_frozen(eigenvalues[order]),
        eigenvectors=_frozen(np.ascontiguousarray(eigenvectors[:, order])),
        sweeps=sweeps,
    )


def clamp_eigenvalues(eigenvalues: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Map round-off negatives in [-NEGATIVE_EIGENVALUE_TOL, 0) to exactly 0."""
    clamped = np.array(eigenvalues, dtype=np.float64)
    clamped[(clamped < 0.0) & (clamped >= -NEGATIVE_EIGENVALUE_TOL)] = 0.0
    return clamped


def apply_spectrum(decomposition: SpectralDecomposition, function: RealMap) -> ComplexMatrix:
    """Evaluate sum_k f(lambda_k) v_k v_k^dagger on an existing decomposition.

    Raises:
        DomainError: If f raises or returns a non-finite value at a clamped eigenvalue
    """
    eigenvalues = clamp_eigenvalues(decomposition.eigenvalues)
    mapped = np.empty_like(eigenvalues)
    for k, eigenvalue in enumerate(eigenvalues):
        try:
            value = float(function(float(eigenvalue)))
        except (ArithmeticError, ValueError, TypeError) as e:
            raise DomainError.at_eigenvalue(float(eigenvalue), e) from e
        if not math.isfinite(value):
            raise DomainError.at_eigenvalue(float(eigenvalue))
        mapped[k] = value

    vectors = decomposition.eigenvectors
    return hermitize((vectors * mapped) @ vectors.conj().T)


def matrix_function(matrix: ComplexMatrix, function: RealMap) -> ComplexMatrix:
    """Apply a real function to a Hermitian matrix through its spectrum.

    Args:
        matrix: Hermitian matrix
        function: Real map evaluated on every (clamped) eigenvalue

    Returns:
        Hermitian matrix f(M)
    """
    return apply_spectrum(eigh(matrix), function)


def spectral_power(exponent: float) -> RealMap:
    """Real power x -> x**p with 0**p = 0 for p > 0 and x**0 = 1.

    Negative arguments are only accepted for integer exponents.
    """

    def power(x: float) -> float:
        if x < 0.0 and not float(exponent).is_integer():
            raise ValueError(f"{x!r} ** {exponent!r} is not real")
        return x**exponent

    return power


def tensor_product(left: ComplexMatrix, right: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product; entry (i*dimB + k, j*dimB + l) is A[i, j] * B[k, l]."""
    return np.kron(as_complex_matrix(left), as_complex_matrix(right))


def trace(matrix: ComplexMatrix) -> complex:
    return complex(np.trace(matrix))
