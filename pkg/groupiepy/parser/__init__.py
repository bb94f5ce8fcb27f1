# -*- coding: utf-8 -*-

"""
    groupiepy.parser
    ~~~~~~~~~~~~~~~~

    Edge-list parser using ply
"""

from __future__ import absolute_import

from .exc import EdgeListParserError
from .parser import dumps, parse, parse_fp


def load_edge_list(text):
    """Build a graph from an edge-list document held in a string."""
    return parse(text)


def load(path, encoding='utf-8'):
    """Load an edge-list file as a graph."""
    try:
        with open(path, encoding=encoding) as fh:
            data = fh.read()
    except UnicodeDecodeError as e:
        raise EdgeListParserError('Cannot decode %s: %s' % (path, e))
    return parse(data)


def load_fp(source):
    """Load an edge-list file like object as a graph."""
    return parse_fp(source)


def dumps_edge_list(graph):
    return dumps(graph)


def dump_edge_list(graph, fp):
    fp.write(dumps(graph))


__all__ = ['load_edge_list', 'load', 'load_fp', 'dumps_edge_list',
           'dump_edge_list', 'EdgeListParserError']
