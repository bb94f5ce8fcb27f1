# -*- coding: utf-8 -*-

import linecache

import numpy as np
import pytest
from groupiepy.graph import ModelParams
from groupiepy.groupie import NeighborhoodStats
from groupiepy.moments import MomentSummary
from groupiepy.payload import Payload, PType, init_func_generator, parse_spec


def test_generated_init():
    stats = NeighborhoodStats(v=3)
    assert (stats.v, stats.i, stats.e1, stats.e2, stats.e3) == (3, 0, 0, 0, 0)
    with pytest.raises(TypeError):
        NeighborhoodStats(unknown=1)


def test_generated_init_source_in_linecache():
    class Point(Payload):
        default_spec = [('x', 0), ('y', None)]

    name = '<generated Point.__init__>'
    assert Point.__init__.__code__.co_filename == name
    assert 'self.y = y' in ''.join(linecache.getlines(name))


def test_init_without_fields():
    init = init_func_generator(Payload, [])

    class Empty(Payload):
        pass
    e = Empty()
    init(e)
    assert e.as_dict() == {}


def test_equality_and_repr():
    a = MomentSummary(mean=1.0, variance=2.0)
    b = MomentSummary(mean=1.0, variance=2.0)
    assert a == b
    assert a != MomentSummary(mean=1.0, variance=3.0)
    assert a != ModelParams()
    assert repr(a).startswith('MomentSummary(mean=1.0')
    with pytest.raises(TypeError):
        hash(a)


def test_numpy_fields_compare_by_value():
    a = NeighborhoodStats(v=0, e1=np.arange(3))
    b = NeighborhoodStats(v=0, e1=np.arange(3))
    assert a == b
    assert a != NeighborhoodStats(v=0, e1=np.arange(4))


def test_parse_spec():
    assert parse_spec(PType.DOUBLE) == 'DOUBLE'
    assert parse_spec(PType.LIST, PType.BOOL) == 'LIST<BOOL>'
    assert parse_spec(PType.STRUCT, ModelParams) == 'ModelParams'
    assert parse_spec(PType.LIST, (PType.LIST, PType.INT)) == \
        'LIST<LIST<INT>>'
