"""Shared exception and warning types."""


class IntegrityError(Exception):
    """A promised precondition or internal consistency check failed.

    Raised when a caller's promise is detectably violated (e.g. an
    equal-degree factorization meets a factor of the wrong degree) or when
    an internal cross-check that should be unconditionally true fails.
    The CLI maps this to exit code 3.
    """


class SmallFieldWarning(UserWarning):
    """The field is small relative to the input degree (sqrt(q) < 100*deg f).

    The randomized factorizer still terminates and is exact; only its
    analyzed iteration bounds assume a large field.
    """


class FallbackWarning(UserWarning):
    """Retries were exhausted and a baseline splitter took over."""
