"""Exception types shared across the simulator."""


class IonRepeaterError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(IonRepeaterError):
    """Invalid scenario configuration (bad key, unparsable or out-of-range value)."""


class NonpositiveDetuningError(IonRepeaterError):
    """A derived detuning frequency came out <= 0, so harmonic means are undefined."""


class TimeDependenceError(IonRepeaterError):
    """A constant-generator operation was requested but the generator is time dependent."""


class DegenerateStateError(IonRepeaterError):
    """State norm is below the degeneracy threshold; normalization/concurrence undefined."""


class IntegratorError(IonRepeaterError):
    """Numerical integration failed (step control exhausted or conservation violated)."""
