# -*- coding: utf-8 -*-

from __future__ import absolute_import

import csv

from ..exc import GroupieException
from ..graph import BIPARTITE
from .base import ProtocolBase

GNP_COLUMNS = ("model", "n", "p", "trials", "mean", "stderr", "predicted",
               "deviation")
BIPARTITE_COLUMNS = ("model", "n1", "n2", "p", "trials", "mean", "stderr",
                     "predicted", "deviation")

SIMULATION_COLUMNS = ("model", "n", "n1", "n2", "p", "trials", "seed",
                      "mean", "sample_std", "stderr", "ci95_low",
                      "ci95_high", "predicted", "deviation")


def columns_for(model):
    return BIPARTITE_COLUMNS if model == BIPARTITE else GNP_COLUMNS


def _get(row, column):
    if isinstance(row, dict):
        return row.get(column)
    return getattr(row, column, None)


def cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


class CSVProtocol(ProtocolBase):
    """Comma separated rows with a fixed header.

    Sweep rows use ``model,n,p,trials,mean,stderr,predicted,deviation``
    for B(n, p) and ``model,n1,n2,p,trials,...`` for B(n1, n2, p).
    """

    def __init__(self, trans):
        ProtocolBase.__init__(self, trans)
        self._writer = csv.writer(trans, lineterminator="\n")

    def write_rows(self, rows, columns=None):
        rows = list(rows)
        if columns is None:
            if not rows:
                raise GroupieException('Cannot infer columns of no rows')
            columns = columns_for(_get(rows[0], "model"))
        self._writer.writerow(columns)
        for row in rows:
            self._writer.writerow([cell(_get(row, c))
                                   for c in columns])

    def write_envelope(self, command, params, results, seed=None):
        if not isinstance(results, (list, tuple)):
            results = [results]
        self.write_rows(results, columns=SIMULATION_COLUMNS
                        if command == "simulate" else None)

    def read_rows(self):
        return list(csv.DictReader(self.trans))


class CSVProtocolFactory(object):
    def get_protocol(self, trans):
        return CSVProtocol(trans)
