# -*- coding: utf-8 -*-

from __future__ import absolute_import

from .base import ProtocolBase
from .csv import CSVProtocol, CSVProtocolFactory
from .json import JSONProtocol, JSONProtocolFactory

__all__ = ['ProtocolBase', 'JSONProtocol', 'JSONProtocolFactory',
           'CSVProtocol', 'CSVProtocolFactory']
