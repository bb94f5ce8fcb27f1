# -*- coding: utf-8 -*-

from __future__ import absolute_import

from .exc import EdgeListLexerError


tokens = (
    'NODES',
    'INTCONSTANT',
    'NEWLINE',
)


t_ignore = ' \t\r'   # whitespace


def t_error(t):
    raise EdgeListLexerError('Illegal character %r at line %d' %
                             (t.value[0], t.lineno))


def t_NEWLINE(t):
    r'\n+'
    t.lexer.lineno += len(t.value)
    return t


def t_ignore_UNIXCOMMENT(t):
    r'\#[^\n]*'


def t_NODES(t):
    r'n\b'
    return t


def t_INTCONSTANT(t):
    r'[0-9]+\b'
    t.value = int(t.value)
    return t
