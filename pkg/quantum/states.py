"""Construction and validation of density matrices, pure states and standard families."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from constants import (
    EIGENVALUE_FLOOR,
    HERMITIAN_TOL,
    NEGATIVE_EIGENVALUE_TOL,
    NORM_TOL,
    PRNG_NAME,
    SEED_MASK,
    TRACE_TOL,
    WERNER_F_MAX,
    WERNER_F_MIN,
    WERNER_SEPARABLE_MAX,
)
from quantum.spectral import (
    ComplexMatrix,
    RealMap,
    SpectralDecomposition,
    _frozen,
    apply_spectrum,
    as_complex_matrix,
    eigh,
    hermitian_deviation,
    hermitize,
    spectral_power,
    tensor_product,
    trace,
)
from utils.errors import (
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    OutOfRangeError,
    TraceNotOneError,
)
from utils.logging import logger

SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class DensityMatrix:
    """Validated Hermitian, positive semidefinite, unit-trace matrix with its spectrum.

    Build instances with :func:`density_from_matrix` (or one of the generators);
    the constructor itself does not validate.
    """

    matrix: ComplexMatrix
    spectrum: SpectralDecomposition

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def eigenvalues(self) -> npt.NDArray[np.float64]:
        return self.spectrum.eigenvalues

    def apply(self, function: RealMap) -> ComplexMatrix:
        """f(rho) evaluated on the cached spectrum."""
        return apply_spectrum(self.spectrum, function)

    def power(self, exponent: float) -> ComplexMatrix:
        """rho**p with the 0**p = 0 convention for p > 0."""
        return self.apply(spectral_power(exponent))


@dataclass(frozen=True)
class PureState:
    """Normalized state vector |psi>."""

    amplitudes: npt.NDArray[np.complex128]

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def inner(self, other: "PureState") -> complex:
        """<self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class WernerParameter:
    """Singlet fidelity F of a Werner state, 1/4 <= F <= 1."""

    F: float  # noqa: N815

    def __post_init__(self):
        if not (WERNER_F_MIN <= self.F <= WERNER_F_MAX):
            raise OutOfRangeError.for_parameter("F", self.F, "[1/4, 1]")

    @property
    def is_separable(self) -> bool:
        return self.F <= WERNER_SEPARABLE_MAX

    @classmethod
    def coerce(cls, value: "WernerParameter | float") -> "WernerParameter":
        if isinstance(value, cls):
            return value
        return cls(float(value))


class BellKind(str, Enum):
    PSI_MINUS = "psi-"
    PSI_PLUS = "psi+"
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"


# Basis order |up,up>, |up,down>, |down,up>, |down,down> with up = index 0
_BELL_AMPLITUDES = {
    BellKind.PSI_MINUS: (0.0, SQRT_HALF, -SQRT_HALF, 0.0),
    BellKind.PSI_PLUS: (0.0, SQRT_HALF, SQRT_HALF, 0.0),
    BellKind.PHI_PLUS: (SQRT_HALF, 0.0, 0.0, SQRT_HALF),
    BellKind.PHI_MINUS: (SQRT_HALF, 0.0, 0.0, -SQRT_HALF),
}


def density_from_matrix(raw) -> DensityMatrix:
    """Validate a raw matrix as a density matrix and cache its spectrum.

    Eigenvalues in [-1e-9, 0) are clamped to 0, the rest to at most 1, and
    anything at or below ``EIGENVALUE_FLOOR`` is treated as exactly 0.

    Args:
        raw: Square complex matrix (array or nested sequence)

    Returns:
        Validated DensityMatrix

    Raises:
        NotHermitianError: If max |M - M^dagger| exceeds 1e-10
        TraceNotOneError: If |Tr M - 1| exceeds 1e-10
        NotPositiveError: If an eigenvalue is below -1e-9
    """
    matrix = as_complex_matrix(raw)

    deviation = hermitian_deviation(matrix)
    if deviation > HERMITIAN_TOL:
        logger.debug(f"Rejected non-Hermitian {matrix.shape[0]}x{matrix.shape[0]} matrix")
        raise NotHermitianError.with_deviation(deviation, HERMITIAN_TOL)

    matrix_trace = trace(matrix)
    if abs(matrix_trace - 1.0) > TRACE_TOL:
        logger.debug(f"Rejected matrix with trace {matrix_trace}")
        raise TraceNotOneError.with_trace(matrix_trace)

    decomposition = eigh(matrix)
    smallest = float(decomposition.eigenvalues[0])
    if smallest < -NEGATIVE_EIGENVALUE_TOL:
        logger.debug(f"Rejected matrix with eigenvalue {smallest:.3e}")
        raise NotPositiveError.with_eigenvalue(smallest)

    eigenvalues = np.clip(decomposition.eigenvalues, 0.0, 1.0)
    eigenvalues[eigenvalues <= EIGENVALUE_FLOOR] = 0.0

    return DensityMatrix(
        matrix=_frozen(hermitize(matrix)),
        spectrum=decomposition.with_eigenvalues(eigenvalues),
    )


def pure_state(amplitudes) -> PureState:
    """Wrap a vector as a PureState after checking its norm.

    Raises:
        NotNormalizedError: If the Euclidean norm differs from 1 by more than 1e-10
    """
    vector = np.array(amplitudes, dtype=np.complex128).reshape(-1)
    norm = float(np.linalg.norm(vector))
    if vector.size == 0 or abs(norm - 1.0) > NORM_TOL:
        raise NotNormalizedError.with_norm(norm)
    return PureState(amplitudes=_frozen(vector))


def projector(state: PureState) -> DensityMatrix:
    """Rank-one density matrix |psi><psi|."""
    vector = state.amplitudes / np.linalg.norm(state.amplitudes)
    return density_from_matrix(np.outer(vector, vector.conj()))


def as_density(state: DensityMatrix | PureState) -> DensityMatrix:
    if isinstance(state, PureState):
        return projector(state)
    return state


def bell_state(kind: BellKind | str) -> PureState:
    """One of the four Bell states in the |up,up>, |up,down>, |down,up>, |down,down> basis."""
    return pure_state(_BELL_AMPLITUDES[BellKind(kind)])


def werner_state(parameter: WernerParameter | float) -> DensityMatrix:
    """F |Psi-><Psi-| + (1 - F)/3 (|Psi+><Psi+| + |Phi+><Phi+| + |Phi-><Phi-|).

    Raises:
        OutOfRangeError: If F is outside [1/4, 1]
    """
    fidelity = WernerParameter.coerce(parameter).F
    weights = {
        BellKind.PSI_MINUS: fidelity,
        BellKind.PSI_PLUS: (1.0 - fidelity) / 3.0,
        BellKind.PHI_PLUS: (1.0 - fidelity) / 3.0,
        BellKind.PHI_MINUS: (1.0 - fidelity) / 3.0,
    }
    matrix = np.zeros((4, 4), dtype=np.complex128)
    for kind, weight in weights.items():
        vector = np.array(_BELL_AMPLITUDES[kind], dtype=np.complex128)
        matrix += weight * np.outer(vector, vector.conj())
    return density_from_matrix(matrix)


def maximally_mixed(dim: int) -> DensityMatrix:
    """I / dim."""
    if dim < 1:
        raise OutOfRangeError.for_parameter("d", dim, "[1, inf)")
    return density_from_matrix(np.eye(dim, dtype=np.complex128) / dim)


def _generator(seed: int) -> np.random.Generator:
    bit_generator = getattr(np.random, PRNG_NAME)
    return np.random.Generator(bit_generator(seed & SEED_MASK))


def _complex_normal(generator: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """Standard complex normal draws: real parts first, then imaginary parts."""
    real = generator.standard_normal(shape)
    imag = generator.standard_normal(shape)
    return (real + 1j * imag) / math.sqrt(2.0)


def random_density(dim: int, seed: int) -> DensityMatrix:
    """Hilbert-Schmidt random state G G^dagger / Tr(G G^dagger), deterministic in (dim, seed)."""
    if dim < 1:
        raise OutOfRangeError.for_parameter("d", dim, "[1, inf)")
    ginibre = _complex_normal(_generator(seed), (dim, dim))
    wishart = ginibre @ ginibre.conj().T
    return density_from_matrix(wishart / np.trace(wishart).real)


def random_pure(dim: int, seed: int) -> PureState:
    """Normalized vector of complex normal draws, deterministic in (dim, seed)."""
    if dim < 1:
        raise OutOfRangeError.for_parameter("d", dim, "[1, inf)")
    vector = _complex_normal(_generator(seed), (dim,))
    return pure_state(vector / np.linalg.norm(vector))


def tensor_state(left: DensityMatrix, right: DensityMatrix) -> DensityMatrix:
    """Product state rho_1 (x) rho_2."""
    return density_from_matrix(tensor_product(left.matrix, right.matrix))
