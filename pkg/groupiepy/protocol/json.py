# -*- coding: utf-8 -*-

from __future__ import absolute_import

import json
from fractions import Fraction

import numpy as np

from ..exc import GroupieException
from ..payload import Payload, PType, parse_spec
from .base import ProtocolBase

ENVELOPE_KEYS = ("command", "params", "seed", "results", "tool_version")


def _tool_version():
    from .. import __version__
    return __version__


def encode_rational(val):
    return str(Fraction(val))


def json_value(ptype, val, spec=None):
    PTYPE_TO_JSONFUNC_MAP = {
        PType.BOOL: (bool, (val,)),
        PType.DOUBLE: (float, (val,)),
        PType.INT: (int, (val,)),
        PType.STRING: (str, (val,)),
        PType.STRUCT: (payload_to_json, (val,)),
        PType.LIST: (list_to_json, (val, spec)),
        PType.RATIONAL: (encode_rational, (val,)),
    }
    func, args = PTYPE_TO_JSONFUNC_MAP[ptype]
    return func(*args)


def obj_value(ptype, val, spec=None):
    if ptype == PType.STRUCT:
        return payload_from_json(val, spec)
    PTYPE_TO_OBJFUNC_MAP = {
        PType.BOOL: (bool, (val,)),
        PType.DOUBLE: (float, (val,)),
        PType.INT: (int, (val,)),
        PType.STRING: (str, (val,)),
        PType.LIST: (list_to_obj, (val, spec)),
        PType.RATIONAL: (Fraction, (val,)),
    }
    func, args = PTYPE_TO_OBJFUNC_MAP[ptype]
    return func(*args)


def _split(spec):
    if isinstance(spec, tuple):
        return spec
    return spec, None


def list_to_json(val, spec):
    elem_type, elem_spec = _split(spec)
    return [json_value(elem_type, i, elem_spec) for i in val]


def list_to_obj(val, spec):
    elem_type, elem_spec = _split(spec)
    return [obj_value(elem_type, i, elem_spec) for i in val]


def _field_specs(cls):
    for fid in sorted(cls.payload_spec):
        field_spec = cls.payload_spec[fid]
        field_type, field_name = field_spec[:2]
        if len(field_spec) <= 3:
            field_type_spec = None
        else:
            field_type_spec = field_spec[2]
        yield field_type, field_name, field_type_spec


def payload_to_json(val):
    outobj = {}
    for field_type, field_name, field_type_spec in _field_specs(type(val)):
        v = getattr(val, field_name, None)
        if v is None:
            continue
        try:
            outobj[field_name] = json_value(field_type, v, field_type_spec)
        except (TypeError, ValueError):
            raise GroupieException(
                "Field %s.%s expects %s, got %r" % (
                    type(val).__name__, field_name,
                    parse_spec(field_type, field_type_spec), v))
    return outobj


def payload_from_json(val, cls):
    obj = cls()
    for field_type, field_name, field_type_spec in _field_specs(cls):
        if field_name in val and val[field_name] is not None:
            setattr(obj, field_name,
                    obj_value(field_type, val[field_name], field_type_spec))
    return obj


def dynamic_to_json(val):
    """Convert values whose type is only known at run time."""
    if val is None or isinstance(val, (bool, str)):
        return val
    if isinstance(val, Payload):
        return payload_to_json(val)
    if isinstance(val, Fraction):
        return encode_rational(val)
    if isinstance(val, (np.bool_,)):
        return bool(val)
    if isinstance(val, (int, np.integer)):
        return int(val)
    if isinstance(val, (float, np.floating)):
        return float(val)
    if isinstance(val, np.ndarray):
        return [dynamic_to_json(v) for v in val.tolist()]
    if isinstance(val, dict):
        return dict((str(k), dynamic_to_json(v)) for k, v in val.items())
    if isinstance(val, (list, tuple)):
        return [dynamic_to_json(v) for v in val]
    raise GroupieException('Cannot serialize %r as JSON' % (val,))


class JSONProtocol(ProtocolBase):
    """One JSON document per envelope, terminated by a newline::

        {"command": "limit", "params": {...}, "results": {...},
         "seed": null, "tool_version": "0.1.0"}

    Floats are written with the shortest repr that reads back to the same
    double; exact rationals are written as ``"p/q"`` strings.
    """

    def __init__(self, trans, indent=None):
        ProtocolBase.__init__(self, trans)
        self.indent = indent

    def envelope(self, command, params, results, seed=None):
        return {
            "command": command,
            "params": dynamic_to_json(params),
            "seed": seed,
            "results": dynamic_to_json(results),
            "tool_version": _tool_version(),
        }

    def write_envelope(self, command, params, results, seed=None):
        data = json.dumps(self.envelope(command, params, results, seed),
                          indent=self.indent, sort_keys=True,
                          allow_nan=False)
        self.trans.write(data)
        self.trans.write("\n")

    def read_envelope(self):
        data = json.loads(self.trans.readline())
        missing = [k for k in ENVELOPE_KEYS if k not in data]
        if missing:
            raise GroupieException('Envelope misses %s' % ', '.join(missing))
        return data


class JSONProtocolFactory(object):
    def __init__(self, indent=None):
        self.indent = indent

    def get_protocol(self, trans):
        return JSONProtocol(trans, indent=self.indent)
