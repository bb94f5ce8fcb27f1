# -*- coding: utf-8 -*-

from __future__ import absolute_import

from ..exc import GroupieException


class EdgeListParserError(GroupieException):
    pass


class EdgeListLexerError(EdgeListParserError):
    pass


class EdgeListGrammarError(EdgeListParserError):
    pass
