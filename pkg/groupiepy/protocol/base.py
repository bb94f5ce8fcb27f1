# -*- coding: utf-8 -*-


class ProtocolBase(object):
    """Base class for the result output layer."""

    def __init__(self, trans):
        self.trans = trans  # any text file object

    def write_envelope(self, command, params, results, seed=None):
        raise NotImplementedError

    def read_envelope(self):
        raise NotImplementedError
