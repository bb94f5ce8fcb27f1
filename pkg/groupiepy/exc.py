# -*- coding: utf-8 -*-

from __future__ import absolute_import


class GroupieException(Exception):
    """Base class for all groupiepy exceptions."""


class ParameterError(GroupieException, ValueError):
    """Invalid argument passed to a generator, statistic or estimator."""

    UNKNOWN = 0
    OUT_OF_RANGE = 1
    INVALID_PROBABILITY = 2
    EMPTY_GRAPH = 3
    INVALID_VERTEX = 4
    NOT_FINITE = 5
    DEGENERATE = 6

    def __init__(self, type=UNKNOWN, message=None):
        super(ParameterError, self).__init__(message)
        self.type = type
        self.message = message

    def __str__(self):
        if self.message:
            return self.message

        if self.type == self.OUT_OF_RANGE:
            return 'Parameter out of range'
        elif self.type == self.INVALID_PROBABILITY:
            return 'Probability must lie in [0, 1]'
        elif self.type == self.EMPTY_GRAPH:
            return 'Graph has no vertices'
        elif self.type == self.INVALID_VERTEX:
            return 'Vertex index out of range'
        elif self.type == self.NOT_FINITE:
            return 'Value must be finite'
        elif self.type == self.DEGENERATE:
            return 'Degenerate input'
        else:
            return 'Default (unknown) ParameterError'


class ResourceError(GroupieException):
    """Request exceeds an enumeration or support-size cap."""

    def __init__(self, message, limit=None):
        super(ResourceError, self).__init__(message)
        self.limit = limit


class UnsupportedCaseError(GroupieException):
    """Statistic is only defined for a case the caller did not supply."""
