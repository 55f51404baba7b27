"""Shared exception types."""


class DataError(ValueError):
    """An input file or record violates the corpus contracts.

    The CLI maps this (and plain I/O failures) to exit status 2, as
    opposed to usage errors (status 1) and internal bugs.
    """
