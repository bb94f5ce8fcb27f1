# -*- coding: utf-8 -*-

"""
    groupiepy.payload
    ~~~~~~~~~~~~~~~~~

    Declarative record types shared by the analysis, simulation and output
    layers.
"""

from __future__ import absolute_import

import linecache
import types

import numpy as np


class PType(object):
    BOOL = 2
    DOUBLE = 4
    INT = 8
    STRING = 11
    STRUCT = 12
    LIST = 15
    RATIONAL = 16

    _VALUES_TO_NAMES = {
        BOOL: 'BOOL',
        DOUBLE: 'DOUBLE',
        INT: 'INT',
        STRING: 'STRING',
        STRUCT: 'STRUCT',
        LIST: 'LIST',
        RATIONAL: 'RATIONAL',
    }


def parse_spec(ptype, spec=None):
    name_map = PType._VALUES_TO_NAMES

    def _type(s):
        return parse_spec(*s) if isinstance(s, tuple) else name_map[s]

    if spec is None:
        return name_map[ptype]

    if ptype == PType.STRUCT:
        return spec.__name__

    if ptype == PType.LIST:
        return "%s<%s>" % (name_map[ptype], _type(spec))


def init_func_generator(cls, spec):
    """Generate `__init__` function based on Payload.default_spec

    For example::

        spec = [('mean', 0.0), ('covariance', None)]

    will generate a types.FunctionType object representing::

        def __init__(self, mean=0.0, covariance=None):
            self.mean = mean
            self.covariance = covariance
    """
    if not spec:
        def __init__(self):
            pass
        return __init__

    varnames, defaults = zip(*spec)

    args = ', '.join(map('{0[0]}={0[1]!r}'.format, spec))
    init = "def __init__(self, {}):\n".format(args)
    init += "\n".join(map('    self.{0} = {0}'.format, varnames))

    name = '<generated {}.__init__>'.format(cls.__name__)
    code = compile(init, name, 'exec')
    func = next(c for c in code.co_consts if isinstance(c, types.CodeType))

    # fake linecache entry so tracebacks can show the generated source
    linecache.cache[name] = (len(init), None, init.splitlines(True), name)

    return types.FunctionType(func, {}, argdefs=defaults)


class PayloadMeta(type):

    def __new__(cls, name, bases, attrs):
        spec = attrs.pop("default_spec", None)
        if spec is not None:
            attrs["_field_names"] = tuple(s[0] for s in spec)
        klass = super(PayloadMeta, cls).__new__(cls, name, bases, attrs)
        if spec is not None:
            klass.__init__ = init_func_generator(klass, spec)
        return klass


def _values_equal(a, b):
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


class Payload(metaclass=PayloadMeta):

    __hash__ = None

    payload_spec = {}

    def as_dict(self):
        return dict(self.__dict__)

    def __repr__(self):
        l = ['%s=%r' % (key, value) for key, value in self.__dict__.items()]
        return '%s(%s)' % (self.__class__.__name__, ', '.join(l))

    def __str__(self):
        return repr(self)

    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return False
        if self.__dict__.keys() != other.__dict__.keys():
            return False
        return all(_values_equal(v, other.__dict__[k])
                   for k, v in self.__dict__.items())

    def __ne__(self, other):
        return not self.__eq__(other)
