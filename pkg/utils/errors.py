"""Exception hierarchy shared by the numerical modules and the command line."""


class QuantumInfoError(ValueError):
    """Base class for every domain error raised by this project."""

    def __init__(self, message: str | None = None, **context):
        """Initialize the error.

        Args:
            message: Optional error message
            **context: Structured details (offending value, field, line, ...)
        """
        if message is None:
            message = "A quantum information computation failed"
        super().__init__(message)
        self.context = context


class NotHermitianError(QuantumInfoError):
    """Matrix is not Hermitian within tolerance."""

    @classmethod
    def with_deviation(cls, deviation: float, tolerance: float):
        return cls(
            f"Matrix is not Hermitian: max |M - M^dagger| = {deviation:.3e} exceeds {tolerance:g}",
            deviation=deviation,
        )


class NoConvergenceError(QuantumInfoError):
    """Iterative eigensolver ran out of sweeps."""

    @classmethod
    def after_sweeps(cls, sweeps: int, off_norm: float):
        return cls(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e})",
            sweeps=sweeps,
            off_norm=off_norm,
        )


class DomainError(QuantumInfoError):
    """A spectral function is undefined at one of the eigenvalues."""

    @classmethod
    def at_eigenvalue(cls, eigenvalue: float, original_error: Exception | None = None):
        error = cls(
            f"Function is undefined at eigenvalue {eigenvalue!r}",
            eigenvalue=eigenvalue,
        )
        error.original_error = original_error
        return error


class NotPositiveError(QuantumInfoError):
    """Matrix has an eigenvalue below the negative tolerance."""

    @classmethod
    def with_eigenvalue(cls, eigenvalue: float):
        return cls(
            f"Matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e}",
            eigenvalue=eigenvalue,
        )


class TraceNotOneError(QuantumInfoError):
    """Matrix trace differs from one."""

    @classmethod
    def with_trace(cls, trace: complex):
        return cls(f"Trace must be 1, got {trace:.12g}", trace=trace)


class OutOfRangeError(QuantumInfoError):
    """A scalar parameter is outside its admissible interval."""

    @classmethod
    def for_parameter(cls, name: str, value: float, interval: str):
        return cls(f"{name} = {value!r} is outside {interval}", name=name, value=value)


class ZeroPointError(QuantumInfoError):
    """The Jackson q-derivative was requested at x = 0."""

    @classmethod
    def at_origin(cls):
        return cls("Jackson q-derivative is undefined at x = 0")


class DimensionMismatchError(QuantumInfoError):
    """Two operands live in spaces of different dimension."""

    @classmethod
    def between(cls, left: int, right: int):
        return cls(f"Dimension mismatch: {left} vs {right}", left=left, right=right)


class NotPureError(QuantumInfoError):
    """A pure state was required but a mixed state was supplied."""

    @classmethod
    def for_spec(cls, spec: str):
        return cls(f"Reference '{spec}' does not resolve to a pure state", spec=spec)


class MissingParameterError(QuantumInfoError):
    """A command needs a parameter that was not given."""

    @classmethod
    def flag(cls, flag: str, reason: str):
        return cls(f"{flag} is required {reason}", flag=flag)


class StateParseError(QuantumInfoError):
    """State document or generator string is malformed."""

    @classmethod
    def at(cls, message: str, line: int | None = None, field: str | None = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        return cls(f"{prefix}{message}", line=line, field=field)


class StateValidationError(QuantumInfoError):
    """State document parsed but violates the state invariants."""

    @classmethod
    def from_exception(cls, error: QuantumInfoError, field: str = "entries"):
        validation_error = cls(
            f"field '{field}': {type(error).__name__}: {error}",
            field=field,
            reason=type(error).__name__,
        )
        validation_error.original_error = error
        return validation_error


class GridError(QuantumInfoError):
    """Sweep grid is empty, unordered or outside its interval."""

    @classmethod
    def bad_syntax(cls, text: str):
        return cls(f"Grid '{text}' is not of the form start:stop:step or a single number", text=text)

    @classmethod
    def bad_value(cls, name: str, value: float, interval: str):
        return cls(f"{name} grid value {value!r} is outside {interval}", name=name, value=value)

    @classmethod
    def not_increasing(cls, name: str, value: float):
        return cls(f"{name} grid is not strictly increasing at {value!r}", name=name, value=value)

    @classmethod
    def empty(cls, name: str):
        return cls(f"{name} grid is empty", name=name)

    @classmethod
    def too_large(cls, name: str, count: int, limit: int):
        return cls(f"{name} grid has {count} points, more than {limit}", name=name, count=count)

    @classmethod
    def conflicting(cls, first: str, second: str, command: str):
        return cls(f"Give either {first} or {second} for {command}, not both", first=first, second=second)


class InvalidMatrixError(QuantumInfoError):
    """Raw input is not a finite square complex matrix."""

    @classmethod
    def not_square(cls, shape: tuple[int, ...]):
        return cls(f"Expected a non-empty square matrix, got shape {shape}", shape=shape)

    @classmethod
    def not_finite(cls):
        return cls("Matrix has NaN or infinite entries")


class NotNormalizedError(QuantumInfoError):
    """State vector does not have unit norm."""

    @classmethod
    def with_norm(cls, norm: float):
        return cls(f"State vector must have unit norm, got {norm:.12g}", norm=norm)
