"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class EntropyProfileError(Exception):
    exit_code = 2


class StateError(EntropyProfileError, ValueError):
    """Input does not describe a valid element or state."""


class NonFinite(StateError):
    pass


class NegativeWeight(StateError):
    pass


class SumNotOne(StateError):
    pass


class NotHermitian(StateError):
    pass


class TraceNotOne(StateError):
    pass


class NotPositive(StateError):
    pass


class DimensionMismatch(StateError):
    pass


class KindMismatch(StateError, TypeError):
    pass


class EmptySpectrum(StateError):
    pass


class OutputNotDistribution(StateError):
    """A map sent a distribution outside the probability simplex."""


class NotContractive(EntropyProfileError):
    exit_code = 5


class NoConvergence(EntropyProfileError, ArithmeticError):
    exit_code = 3
