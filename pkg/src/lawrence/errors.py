"""Exception hierarchy shared by every module."""


class LawrenceError(Exception):
    """Base class for all library errors."""


class ConfigError(LawrenceError, ValueError):
    """The input vector configuration is unusable."""


class ZeroVector(ConfigError):
    pass


class NotGenerating(ConfigError):
    pass


class EmptyConfig(ConfigError):
    pass


class SizeGuard(LawrenceError):
    """An enumeration would exceed its configured bound."""


class RetryExhausted(LawrenceError):
    pass


class EmptyFlat(LawrenceError):
    pass


class NotSimple(LawrenceError):
    pass


class CountingError(LawrenceError):
    """Dilate counts are inconsistent with a polynomial numerator."""


class NegativeDelta(CountingError):
    pass


class NonIntegralDelta(CountingError):
    pass


class PolynomialityViolation(CountingError):
    pass
