"""
Custom exceptions for SEA MTT.
"""


class SeaMttError(Exception):
    """Base exception for all SEA MTT errors."""

    pass


class NumericalError(SeaMttError):
    """Base class for failures of the numerics rather than of the inputs."""

    pass


class IdenticallySingular(NumericalError):
    """Raised when a feedback loop has 1 + forward·loop ≡ 0."""

    pass


class PoleAtFrequency(NumericalError):
    """Raised when a transfer function is evaluated exactly on a pole."""

    def __init__(self, omega: float):
        self.omega = omega
        super().__init__(f"Transfer function has a pole at omega = {omega:g} rad/s")


class NumericalBlowup(NumericalError):
    """Raised when a simulation state grows past the blow-up limit."""

    def __init__(self, time: float, value: float):
        self.time = time
        self.value = value
        super().__init__(
            f"Simulation diverged at t = {time:g} s (|state| = {value:.3g}); "
            "the loop is unstable or dt is too coarse"
        )


class InvalidParams(SeaMttError):
    """Raised when a parameter set violates its bounds."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class StaticCaseUnsupported(SeaMttError):
    """Raised when an operation only exists for the dynamic load case."""

    pass


class InsufficientDuration(SeaMttError):
    """Raised when a run is too short for the requested analysis window."""

    pass


class ConfigError(SeaMttError):
    """Raised when there is an error with configuration."""

    def __init__(
        self,
        message: str,
        key: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ):
        self.key = key
        self.line = line
        self.column = column
        super().__init__(message)


class VerificationFailed(SeaMttError):
    """Raised when at least one verification check fails."""

    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__(f"{len(failed)} check(s) failed: {', '.join(failed)}")
