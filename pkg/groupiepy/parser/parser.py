# -*- coding: utf-8 -*-

"""
Edge-list grammar::

    # optional comment lines
    n <N>
    <u> <v>
    ...

The header is optional; without it the vertex count is one more than the
largest index mentioned. Vertex indices are 0-based.
"""

from __future__ import absolute_import

import threading

from ply import lex, yacc

from ..graph import Graph
from .exc import EdgeListGrammarError, EdgeListParserError
from .lexer import *  # noqa


threadlocal = threading.local()


def p_error(p):
    if p is None:
        raise EdgeListGrammarError('Grammar error at EOF')
    if p.type == 'NEWLINE':
        raise EdgeListGrammarError('Incomplete line %d' % p.lineno)
    raise EdgeListGrammarError('Grammar error %r at line %d' %
                               (p.value, p.lineno))


def p_start(p):
    '''start : lines'''


def p_lines(p):
    '''lines : lines line
             |'''


def p_header(p):
    '''line : NODES INTCONSTANT NEWLINE'''
    state = threadlocal.state
    lineno = p.lineno(1)
    if state['n'] is not None:
        raise EdgeListParserError('Duplicate vertex count header at line %d'
                                  % lineno)
    if state['edges']:
        raise EdgeListParserError('Vertex count header must precede edges, '
                                  'found at line %d' % lineno)
    state['n'] = p[2]


def p_edge(p):
    '''line : INTCONSTANT INTCONSTANT NEWLINE'''
    state = threadlocal.state
    lineno = p.lineno(1)
    u, v = p[1], p[2]
    if u == v:
        raise EdgeListParserError('Self-loop %d %d at line %d'
                                  % (u, v, lineno))
    if u > v:
        u, v = v, u
    n = state['n']
    if n is not None and v >= n:
        raise EdgeListParserError('Vertex %d out of range 0..%d at line %d'
                                  % (v, n - 1, lineno))
    if (u, v) in state['seen']:
        raise EdgeListParserError('Duplicate edge %d %d at line %d'
                                  % (u, v, lineno))
    state['seen'].add((u, v))
    state['edges'].append((u, v))


def p_blank(p):
    '''line : NEWLINE'''


def parse(data, lexer=None, parser=None):
    """Parse edge-list text into a :class:`~groupiepy.graph.Graph`.

    :param data: the edge-list document as a string.
    :param lexer: ply lexer to use, if not provided, `parse` will new one.
    :param parser: ply parser to use, if not provided, `parse` will new one.
    """
    if not isinstance(data, str):
        raise EdgeListParserError('Expected edge-list text, got %r'
                                  % type(data).__name__)
    if lexer is None:
        lexer = lex.lex()
    if parser is None:
        parser = yacc.yacc(debug=False, write_tables=0)

    if not data.endswith('\n'):
        data += '\n'

    threadlocal.state = {'n': None, 'edges': [], 'seen': set()}
    try:
        lexer.lineno = 1
        parser.parse(data, lexer=lexer)
        state = threadlocal.state
    finally:
        del threadlocal.state

    edges = state['edges']
    n = state['n']
    if n is None:
        n = 1 + max(v for _, v in edges) if edges else 0
    if n == 0:
        raise EdgeListParserError('Edge list describes no vertices')
    return Graph.from_edges(n, edges)


def parse_fp(source, lexer=None, parser=None):
    """Parse a file-like object, e.g.::

        >>> from groupiepy.parser.parser import parse_fp
        >>> with open("path/to/p3.edges") as fp:
                parse_fp(fp)
        Graph(n=3, e=2)

    :param source: file-like object, expected to have a method named `read`.
    """
    if not hasattr(source, 'read'):
        raise EdgeListParserError('Expected `source` to be a file-like object '
                                  'with a method named \'read\'')
    return parse(source.read(), lexer=lexer, parser=parser)


def dumps(graph):
    """Serialize a graph in the edge-list format accepted by `parse`."""
    lines = ['n %d' % graph.n]
    lines.extend('%d %d' % (u, v)
                 for u, v in zip(graph.heads.tolist(), graph.tails.tolist()))
    return '\n'.join(lines) + '\n'
