"""Exception hierarchy shared by the package."""


class QWSearchError(Exception):
    """Base class for every error raised by qwsearch."""


class InvalidPartition(QWSearchError, ValueError):
    pass


class InvalidMarkedCount(QWSearchError, ValueError):
    pass


class OutOfRange(QWSearchError, ValueError):
    pass


class DimensionTooLarge(QWSearchError):
    pass


class SubspaceLeak(QWSearchError):
    pass


class InvalidQubitIndex(QWSearchError, ValueError):
    pass


class NotTwoQubit(QWSearchError, ValueError):
    pass


class TooManyQubits(QWSearchError):
    pass


class EncodingMismatch(QWSearchError, ValueError):
    pass
