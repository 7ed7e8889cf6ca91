"""Scalar functionals of quantum states.

Covers the q-calculus primitives (q-logarithm, q-exponential, Jackson q-derivative),
von Neumann and Tsallis entropies, fidelity and the Bures distance, the quantum
Kullback-Leibler divergence and the quantum q-divergence

    K_q[rho || sigma] = Tr[rho^q (rho^(1-q) - sigma^(1-q))] / (1 - q),   0 < q < 1,

computed by independent routes that serve as oracles for one another.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from constants import (
    DIVERGENCE_CLAMP,
    EIGENVALUE_FLOOR,
    KERNEL_OVERLAP_CUTOFF,
    SUPPORT_CUTOFF,
)
from quantum.spectral import trace
from quantum.states import (
    DensityMatrix,
    PureState,
    WernerParameter,
    tensor_state,
)
from utils.errors import (
    DimensionMismatchError,
    DomainError,
    OutOfRangeError,
    ZeroPointError,
)
from utils.logging import logger

ScalarMap = Callable[[float], float]


@dataclass(frozen=True)
class EntropicIndex:
    """Entropic index q, restricted to the open interval (0, 1)."""

    q: float

    def __post_init__(self):
        if not (0.0 < self.q < 1.0):
            raise OutOfRangeError.for_parameter("q", self.q, "(0, 1)")

    @property
    def nonadditivity(self) -> float:
        """1 - q, the degree of nonadditivity."""
        return 1.0 - self.q

    @classmethod
    def coerce(cls, value: "EntropicIndex | float") -> "EntropicIndex":
        if isinstance(value, cls):
            return value
        return cls(float(value))


@dataclass(frozen=True)
class DivergenceValue:
    """Either a finite nonnegative divergence or the infinite marker (value is None)."""

    value: float | None

    @classmethod
    def finite(cls, value: float) -> "DivergenceValue":
        return cls(_read_out(value))

    @classmethod
    def infinite(cls) -> "DivergenceValue":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __float__(self) -> float:
        return math.inf if self.value is None else self.value


def _read_out(value: float, label: str = "divergence") -> float:
    """Clamp round-off negatives in [-1e-12, 0) to 0; larger negatives are reported."""
    if value < 0.0:
        if value >= -DIVERGENCE_CLAMP:
            return 0.0
        logger.warning(f"Negative {label} {value:.3e} beyond the round-off window")
    return value


def _check_dims(left: int, right: int) -> None:
    if left != right:
        raise DimensionMismatchError.between(left, right)


def _overlaps(rho: DensityMatrix, sigma: DensityMatrix) -> npt.NDArray[np.float64]:
    """|<a|b>|^2 between eigenvectors of rho (rows) and sigma (columns)."""
    inner = rho.spectrum.eigenvectors.conj().T @ sigma.spectrum.eigenvectors
    return np.abs(inner) ** 2


# q-calculus


def q_log(x: float, q: EntropicIndex | float) -> float:
    """q-logarithm ln_q x = (x^(1-q) - 1)/(1 - q); ln_q 0 = -1/(1 - q)."""
    index = EntropicIndex.coerce(q)
    if x < 0.0:
        raise OutOfRangeError.for_parameter("x", x, "[0, inf)")
    return (x**index.nonadditivity - 1.0) / index.nonadditivity


def q_exp(x: float, q: EntropicIndex | float) -> float:
    """q-exponential [1 + (1 - q) x]_+^(1/(1 - q)), the inverse of ``q_log``."""
    index = EntropicIndex.coerce(q)
    base = 1.0 + index.nonadditivity * x
    if base <= 0.0:
        return 0.0
    return base ** (1.0 / index.nonadditivity)


def jackson_derivative(function: ScalarMap, x: float, q: EntropicIndex | float) -> float:
    """Jackson q-derivative D_q f(x) = (f(qx) - f(x)) / (x (q - 1)).

    Raises:
        ZeroPointError: If x = 0
    """
    index = EntropicIndex.coerce(q)
    if x == 0.0:
        raise ZeroPointError.at_origin()
    return (function(index.q * x) - function(x)) / (x * (index.q - 1.0))


def leibniz_defect(f: ScalarMap, g: ScalarMap, x: float, q: EntropicIndex | float) -> float:
    """Residual of the q-deformed Leibniz rule; zero up to round-off."""
    index = EntropicIndex.coerce(q)
    d_f = jackson_derivative(f, x, index)
    d_g = jackson_derivative(g, x, index)
    d_fg = jackson_derivative(lambda t: f(t) * g(t), x, index)
    return d_fg - d_f * g(x) - f(x) * d_g - x * (index.q - 1.0) * d_f * d_g


def qlog_inequality_gap(x: float, p: float) -> float:
    """(1 - x^p)/p - (1 - x), nonnegative for x >= 0 and 0 < p < 1, zero at x = 1."""
    if not (0.0 < p < 1.0):
        raise OutOfRangeError.for_parameter("p", p, "(0, 1)")
    if x < 0.0:
        raise OutOfRangeError.for_parameter("x", x, "[0, inf)")
    return (1.0 - x**p) / p - (1.0 - x)


# Entropies


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S = -Tr(rho ln rho) in nats, with 0 ln 0 = 0."""
    eigenvalues = rho.eigenvalues[rho.eigenvalues > EIGENVALUE_FLOOR]
    return max(0.0, float(-np.sum(eigenvalues * np.log(eigenvalues))))


def tsallis_entropy(rho: DensityMatrix, q: EntropicIndex | float) -> float:
    """S_q = (Tr rho^q - 1)/(1 - q)."""
    index = EntropicIndex.coerce(q)
    total = float(np.sum(np.power(rho.eigenvalues, index.q)))
    return max(0.0, (total - 1.0) / index.nonadditivity)


def purity(rho: DensityMatrix) -> float:
    """Tr rho^2."""
    return float(np.sum(rho.eigenvalues**2))


# Fidelity and distances


def fidelity(sigma: DensityMatrix, rho: DensityMatrix) -> float:
    """Uhlmann fidelity (sum_k sqrt(mu_k))^2, mu_k the eigenvalues of sqrt(sigma) rho sqrt(sigma).

    The sqrt(mu_k) are taken as the singular values of sqrt(sigma) sqrt(rho), which
    avoids amplifying round-off in the zero eigenvalues of rank-deficient states.

    Raises:
        DimensionMismatchError: If the states have different dimensions
    """
    _check_dims(sigma.dim, rho.dim)
    product = sigma.apply(math.sqrt) @ rho.apply(math.sqrt)
    singular_values = np.linalg.svd(product, compute_uv=False)
    value = float(np.sum(singular_values)) ** 2
    return min(1.0, max(0.0, value))


def bures_metric_sq(sigma: DensityMatrix, rho: DensityMatrix) -> float:
    """Squared Bures distance 2 - 2 sqrt(F)."""
    return max(0.0, 2.0 - 2.0 * math.sqrt(fidelity(sigma, rho)))


def fubini_study_sq(phi: PureState, psi: PureState) -> float:
    """Squared Fubini-Study distance 1 - |<phi|psi>|^2."""
    _check_dims(phi.dim, psi.dim)
    overlap = abs(phi.inner(psi)) ** 2
    return min(1.0, max(0.0, 1.0 - overlap))


# Divergences


def kl_divergence(rho: DensityMatrix, sigma: DensityMatrix) -> DivergenceValue:
    """Quantum Kullback-Leibler divergence K[rho || sigma] = Tr[rho (ln rho - ln sigma)].

    Infinite when the support of rho leaks into the kernel of sigma: some eigenvector
    of rho with eigenvalue above 1e-12 has squared projection above 1e-10 onto the
    span of sigma's eigenvectors with eigenvalue at or below 1e-12.
    """
    _check_dims(rho.dim, sigma.dim)
    r, s = rho.eigenvalues, sigma.eigenvalues
    overlaps = _overlaps(rho, sigma)

    kernel = s <= SUPPORT_CUTOFF
    support = r > SUPPORT_CUTOFF
    if kernel.any():
        leakage = overlaps[np.ix_(support, kernel)].sum(axis=1)
        if leakage.size and float(leakage.max()) > KERNEL_OVERLAP_CUTOFF:
            logger.debug(f"KL divergence infinite: support leakage {float(leakage.max()):.3e}")
            return DivergenceValue.infinite()

    rows = r > EIGENVALUE_FLOOR
    columns = ~kernel
    r_used = r[rows][:, None]
    s_used = s[columns][None, :]
    terms = overlaps[np.ix_(rows, columns)] * r_used * (np.log(r_used) - np.log(s_used))
    return DivergenceValue.finite(float(np.sum(terms)))


def kl_divergence_derivative(rho: DensityMatrix, sigma: DensityMatrix, step: float = 1e-4) -> float:
    """K[rho || sigma] as the left derivative of Tr(rho^x sigma^(1-x)) at x = 1.

    Uses the second-order backward difference, so the result agrees with
    ``kl_divergence`` to O(step^2). Only defined for full-rank sigma.

    Raises:
        DomainError: If sigma has an eigenvalue at or below the support cutoff
    """
    _check_dims(rho.dim, sigma.dim)
    smallest = float(sigma.eigenvalues[0])
    if smallest <= SUPPORT_CUTOFF:
        raise DomainError.at_eigenvalue(smallest)

    def overlap_trace(x: float) -> float:
        return trace(rho.power(x) @ sigma.power(1.0 - x)).real

    derivative = (
        3.0 * overlap_trace(1.0) - 4.0 * overlap_trace(1.0 - step) + overlap_trace(1.0 - 2.0 * step)
    ) / (2.0 * step)
    return _read_out(derivative, "KL divergence")


def q_divergence(rho: DensityMatrix, sigma: DensityMatrix, q: EntropicIndex | float) -> float:
    """K_q[rho || sigma] from the matrix powers rho^q, rho^(1-q) and sigma^(1-q).

    Finite for every pair of states, pure references included.
    """
    index = EntropicIndex.coerce(q)
    _check_dims(rho.dim, sigma.dim)
    difference = rho.power(index.nonadditivity) - sigma.power(index.nonadditivity)
    value = trace(rho.power(index.q) @ difference).real / index.nonadditivity
    return _read_out(value, "q-divergence")


def q_divergence_eigensum(rho: DensityMatrix, sigma: DensityMatrix, q: EntropicIndex | float) -> float:
    """K_q as the double sum over eigenbases.

    (1/(1-q)) sum_{a,b} |<a|b>|^2 r(a) [1 - (s(b)/r(a))^(1-q)]; rows with
    r(a) <= 1e-14 vanish and columns with s(b) <= 1e-14 contribute |<a|b>|^2 r(a)/(1-q).
    """
    index = EntropicIndex.coerce(q)
    _check_dims(rho.dim, sigma.dim)
    r, s = rho.eigenvalues, sigma.eigenvalues
    overlaps = _overlaps(rho, sigma)

    rows = r > EIGENVALUE_FLOOR
    r_used = r[rows][:, None]
    s_used = np.where(s > EIGENVALUE_FLOOR, s, 0.0)[None, :]
    ratio = np.power(s_used / r_used, index.nonadditivity)
    terms = overlaps[rows, :] * r_used * (1.0 - ratio)
    value = float(np.sum(terms)) / index.nonadditivity
    return _read_out(value, "q-divergence")


def q_divergence_jackson(rho: DensityMatrix, sigma: DensityMatrix, q: EntropicIndex | float) -> float:
    """K_q as the Jackson q-derivative of g(x) = Tr(rho^x sigma^(1-x)) at x = 1.

    g(1) = Tr(rho sigma^0) = Tr(rho), sigma^0 being the identity on the full space.
    """
    index = EntropicIndex.coerce(q)
    _check_dims(rho.dim, sigma.dim)

    def overlap_trace(x: float) -> float:
        return trace(rho.power(x) @ sigma.power(1.0 - x)).real

    return _read_out(jackson_derivative(overlap_trace, 1.0, index), "q-divergence")


def q_divergence_qlog(rho: DensityMatrix, sigma: DensityMatrix, q: EntropicIndex | float) -> float:
    """K_q = Tr[rho^q (ln_q rho - ln_q sigma)]."""
    index = EntropicIndex.coerce(q)
    _check_dims(rho.dim, sigma.dim)

    def log_q(x: float) -> float:
        return q_log(x, index)

    difference = rho.apply(log_q) - sigma.apply(log_q)
    return _read_out(trace(rho.power(index.q) @ difference).real, "q-divergence")


def q_divergence_pure_ref(rho: DensityMatrix, psi: PureState, q: EntropicIndex | float) -> float:
    """K_q against a pure reference: (1 - <psi|rho^q|psi>)/(1 - q)."""
    index = EntropicIndex.coerce(q)
    _check_dims(rho.dim, psi.dim)
    vector = psi.amplitudes
    expectation = complex(vector.conj() @ rho.power(index.q) @ vector).real
    return _read_out((1.0 - expectation) / index.nonadditivity, "q-divergence")


def werner_q_divergence_closed(F: WernerParameter | float, q: EntropicIndex | float) -> float:  # noqa: N803
    """Closed form (1 - F^q)/(1 - q) of K_q between a Werner state and |Psi-><Psi-|."""
    fidelity_value = WernerParameter.coerce(F).F
    index = EntropicIndex.coerce(q)
    return (1.0 - fidelity_value**index.q) / index.nonadditivity


def nonadditivity_defect(
    rho_1: DensityMatrix,
    sigma_1: DensityMatrix,
    rho_2: DensityMatrix,
    sigma_2: DensityMatrix,
    q: EntropicIndex | float,
) -> float:
    """K_q of the product minus K_1 + K_2 + (q - 1) K_1 K_2; zero up to round-off."""
    index = EntropicIndex.coerce(q)
    _check_dims(rho_1.dim, sigma_1.dim)
    _check_dims(rho_2.dim, sigma_2.dim)

    first = q_divergence(rho_1, sigma_1, index)
    second = q_divergence(rho_2, sigma_2, index)
    joint = q_divergence(tensor_state(rho_1, rho_2), tensor_state(sigma_1, sigma_2), index)
    return joint - first - second - (index.q - 1.0) * first * second

