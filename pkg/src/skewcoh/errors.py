"""Exception types shared across the package."""


class InvariantViolation(ValueError):
    """A domain invariant failed: hermiticity, positivity, normalization,
    unitarity, dimension agreement or parameter range."""


class DescriptorError(ValueError):
    """A JSON descriptor (state, channel, sweep or interferometer config)
    could not be parsed."""
