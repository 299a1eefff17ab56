"""Exception types raised by bleukit."""


class BleuKitError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatchError(BleuKitError, ValueError):
    """Hypothesis and reference streams have different numbers of lines."""


class EmptyHypothesisError(BleuKitError, ValueError):
    pass


class EmptyReferenceError(BleuKitError, ValueError):
    pass


class StatsMismatchError(BleuKitError, ValueError):
    """Sufficient statistics with different n-gram orders were combined."""


class SignatureError(BleuKitError, ValueError):
    pass


class UnknownTestSetError(BleuKitError, KeyError):
    def __str__(self):
        # KeyError quotes its message; we want the plain text.
        return str(self.args[0]) if self.args else ""


class UnknownLangPairError(UnknownTestSetError):
    pass


class ReferenceIndexError(BleuKitError, IndexError):
    pass


class DownloadError(BleuKitError, OSError):
    pass


class ChecksumError(BleuKitError):
    pass


class SegmentCountError(BleuKitError):
    pass


class MalformedSGMLError(BleuKitError, ValueError):
    pass


class RegistryFormatError(BleuKitError, ValueError):
    pass
