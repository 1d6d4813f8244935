"""Exception types shared across the toolkit."""


class MintermRangeError(ValueError):
    """A minterm index falls outside the function's domain."""

    def __init__(self, minterm: int, n_vars: int):
        self.minterm = minterm
        self.n_vars = n_vars
        super().__init__(
            f"minterm {minterm} out of range 0..{(1 << n_vars) - 1} "
            f"for {n_vars} variables"
        )


class ArityError(ValueError):
    """An assignment or operand list has the wrong length."""


class CapacityError(ValueError):
    """The request exceeds the size this toolkit handles exhaustively."""


class ParseError(ValueError):
    """Malformed expression or minterm-set text.

    `position` is the zero-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownVariableError(ParseError):
    """An identifier in an expression is not a declared variable."""


class ChargeError(ValueError):
    """A dot-charge tuple is negative somewhere or sums to zero."""


class ConvergenceError(RuntimeError):
    """Relaxation failed to settle within the sweep allowance.

    `residual` holds the final sweep's maximum polarization change.
    """

    def __init__(self, sweeps: int, residual: float):
        self.sweeps = sweeps
        self.residual = residual
        super().__init__(
            f"no convergence after {sweeps} sweeps, residual {residual:.3e}"
        )


class UndecidedError(RuntimeError):
    """The output cell's polarization magnitude is below the read threshold."""

    def __init__(self, polarization: float, threshold: float):
        self.polarization = polarization
        self.threshold = threshold
        super().__init__(
            f"output polarization {polarization:+.4f} is inside the "
            f"undecided band (threshold {threshold})"
        )
