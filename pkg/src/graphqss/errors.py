"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Malformed graph text (bad token, self-loop, out-of-range vertex)."""


class NoWitnessError(RuntimeError):
    """No certifying set exists for the requested classification."""


class ResourceLimitError(RuntimeError):
    """An enumeration or simulation exceeds its configured size limit."""


class InsufficientSharesError(RuntimeError):
    """Fewer classical shares supplied than the reconstruction threshold."""


class ProtocolStateError(RuntimeError):
    """A quantum register is not in the state a protocol step requires."""


class LocalityError(RuntimeError):
    """A reconstruction operator would act on qubits outside the coalition."""
