from __future__ import annotations


class TrampNetError(Exception):
    """Base class for every error raised by trampnet."""


class DataError(TrampNetError, ValueError):
    """
    The input data cannot support the requested operation.

    Missing columns, unknown layers, empty selections, upstream invariant
    breaches (a self-loop that survived cleaning) and the like.
    """


class ComputeError(TrampNetError, RuntimeError):
    """
    An analysis is undefined for the graph it was given.

    E.g. path length on a graph that is not strongly connected, assortativity
    of a regular graph, or a small-world test whose replicates all degenerated.
    """
