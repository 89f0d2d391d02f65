"""Exception types shared across the package."""


class CapacityError(RuntimeError):
    """A computation would exceed a configured size bound."""


class ArityError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class SingerInapplicableError(ValueError):
    """The spike-weight hit criterion does not apply (no minimal spike)."""
