# -*- coding: utf-8 -*-

"""
    groupiepy.graph
    ~~~~~~~~~~~~~~~

    Immutable simple graphs and the seeded B(n, p) / B(n1, n2, p)
    generators.
"""

from __future__ import absolute_import

import logging
import math
from functools import cached_property

import numpy as np

from .exc import ParameterError
from .payload import Payload, PType
from .rng import check_seed, graph_key, open_uniform_array, uniform_array

logger = logging.getLogger(__name__)

# below this edge probability the generators switch to geometric skipping
DENSE_THRESHOLD = 0.25

# candidate pairs drawn per vectorised block
BLOCK_SIZE = 1 << 22

GNP = 'gnp'
BIPARTITE = 'bipartite'


def check_probability(p, name='p'):
    if isinstance(p, bool):
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             '%s must be a number, got %r' % (name, p))
    try:
        p = float(p)
    except (TypeError, ValueError):
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             '%s must be a number, got %r' % (name, p))
    if not 0.0 <= p <= 1.0:
        raise ParameterError(ParameterError.INVALID_PROBABILITY,
                             '%s must lie in [0, 1], got %r' % (name, p))
    return p


def check_count(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             '%s must be an integer, got %r' % (name, value))
    value = int(value)
    if value < minimum:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             '%s must be >= %d, got %d'
                             % (name, minimum, value))
    return value


class ModelParams(Payload):
    """Random graph model: B(n, p) or B(n1, n2, p)."""

    payload_spec = {
        1: (PType.STRING, 'variant', True),
        2: (PType.INT, 'n', False),
        3: (PType.INT, 'n1', False),
        4: (PType.INT, 'n2', False),
        5: (PType.DOUBLE, 'p', True),
    }
    default_spec = [('variant', GNP), ('n', None), ('n1', None),
                    ('n2', None), ('p', None)]

    @classmethod
    def gnp(cls, n, p):
        return cls(variant=GNP, n=check_count(n, 'n'),
                   p=check_probability(p))

    @classmethod
    def bipartite(cls, n1, n2, p):
        n1 = check_count(n1, 'n1')
        n2 = check_count(n2, 'n2')
        return cls(variant=BIPARTITE, n=n1 + n2, n1=n1, n2=n2,
                   p=check_probability(p))

    def validate(self):
        if self.variant == GNP:
            return ModelParams.gnp(self.n, self.p)
        if self.variant == BIPARTITE:
            return ModelParams.bipartite(self.n1, self.n2, self.p)
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Unknown model variant %r' % (self.variant,))

    @property
    def vertex_count(self):
        if self.variant == BIPARTITE:
            return self.n1 + self.n2
        return self.n


class Graph(object):
    """Simple undirected graph on vertices 0..n-1.

    Edges are kept as two aligned arrays `heads`/`tails` with
    heads[k] < tails[k], sorted lexicographically. Degrees are cached at
    construction; sorted neighbour arrays are built on first use.
    """

    __hash__ = None

    def __init__(self, n, heads, tails, n1=None):
        n = int(n)
        if n < 0:
            raise ParameterError(ParameterError.OUT_OF_RANGE,
                                 'Vertex count must be non-negative')
        heads = np.ascontiguousarray(heads, dtype=np.int64)
        tails = np.ascontiguousarray(tails, dtype=np.int64)
        if heads.shape != tails.shape or heads.ndim != 1:
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Edge arrays must be aligned 1-d arrays')

        self.n = n
        self.n1 = n1
        self.heads = heads
        self.tails = tails
        self.heads.flags.writeable = False
        self.tails.flags.writeable = False
        self.e = int(heads.size)
        self._check_edges()

        degrees = np.bincount(heads, minlength=n) \
            + np.bincount(tails, minlength=n)
        self.degrees = degrees.astype(np.int64)
        self.degrees.flags.writeable = False
        assert int(self.degrees.sum()) == 2 * self.e

    def _check_edges(self):
        if self.e == 0:
            return
        if np.any(self.heads < 0) or np.any(self.tails >= self.n):
            raise ParameterError(ParameterError.INVALID_VERTEX,
                                 'Edge endpoint outside 0..%d' % (self.n - 1))
        if np.any(self.heads >= self.tails):
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Edges must satisfy head < tail '
                                 '(no self-loops)')
        codes = self.heads * self.n + self.tails
        if np.any(np.diff(codes) <= 0):
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Edges must be unique and sorted')

    @classmethod
    def from_edges(cls, n, edges, n1=None):
        """Build a graph from any iterable of vertex pairs.

        Pairs may be given in either orientation and in any order;
        self-loops, duplicates and out-of-range endpoints are rejected.
        """
        n = check_count(n, 'n', minimum=0)
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if pairs.size == 0:
            empty = np.zeros(0, dtype=np.int64)
            return cls(n, empty, empty, n1=n1)

        lo = pairs.min(axis=1)
        hi = pairs.max(axis=1)
        if np.any(lo == hi):
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Self-loop at vertex %d'
                                 % int(lo[lo == hi][0]))
        if np.any(lo < 0) or np.any(hi >= n):
            raise ParameterError(ParameterError.INVALID_VERTEX,
                                 'Edge endpoint outside 0..%d' % (n - 1))
        order = np.lexsort((hi, lo))
        lo, hi = lo[order], hi[order]
        dup = (np.diff(lo) == 0) & (np.diff(hi) == 0)
        if np.any(dup):
            k = int(np.flatnonzero(dup)[0])
            raise ParameterError(ParameterError.DEGENERATE,
                                 'Duplicate edge %d %d'
                                 % (int(lo[k]), int(hi[k])))
        return cls(n, lo, hi, n1=n1)

    @cached_property
    def _csr(self):
        both_src = np.concatenate((self.heads, self.tails))
        both_dst = np.concatenate((self.tails, self.heads))
        order = np.lexsort((both_dst, both_src))
        indices = both_dst[order]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        indices.flags.writeable = False
        return indptr, indices

    def check_vertex(self, v):
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)) \
                or not 0 <= v < self.n:
            raise ParameterError(ParameterError.INVALID_VERTEX,
                                 'Vertex %r out of range 0..%d'
                                 % (v, self.n - 1))
        return int(v)

    def neighbors(self, v):
        """Sorted neighbour array of `v`."""
        v = self.check_vertex(v)
        indptr, indices = self._csr
        return indices[indptr[v]:indptr[v + 1]]

    def degree(self, v):
        return int(self.degrees[self.check_vertex(v)])

    def has_edge(self, u, v):
        u = self.check_vertex(u)
        v = self.check_vertex(v)
        nbrs = self.neighbors(u)
        k = np.searchsorted(nbrs, v)
        return bool(k < nbrs.size and nbrs[k] == v)

    @property
    def edges(self):
        return np.column_stack((self.heads, self.tails))

    def edge_list(self):
        return list(zip(self.heads.tolist(), self.tails.tolist()))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n \
            and np.array_equal(self.heads, other.heads) \
            and np.array_equal(self.tails, other.tails)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '%s(n=%d, e=%d)' % (self.__class__.__name__, self.n, self.e)


def _dense_pair_indices(total, p, key, block_size):
    # one Bernoulli per candidate pair, keyed by the pair index
    chunks = []
    for start in range(0, total, block_size):
        stop = min(total, start + block_size)
        draws = uniform_array(key, np.arange(start, stop, dtype=np.uint64))
        chunks.append(np.flatnonzero(draws < p) + start)
    if not chunks:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(chunks).astype(np.int64)


def _sparse_pair_indices(total, p, key, block_size):
    # geometric skipping; the j-th gap is keyed by its ordinal j
    if p <= 0.0 or total == 0:
        return np.zeros(0, dtype=np.int64)
    log_q = math.log1p(-p)
    batch = int(min(block_size, max(1024, 1.2 * total * p + 64)))
    chunks = []
    ordinal = 0
    last = -1
    while True:
        u = open_uniform_array(
            key, np.arange(ordinal, ordinal + batch, dtype=np.uint64))
        gaps = np.minimum(np.floor(np.log(u) / log_q), total)
        # float sums stay exact below 2**53, i.e. for every kept position
        positions = last + np.cumsum(gaps + 1.0)
        inside = positions < total
        chunks.append(positions[inside].astype(np.int64))
        if not inside.all():
            break
        last = int(positions[-1])
        ordinal += batch
    return np.concatenate(chunks)


def sample_pair_indices(total, p, seed, block_size=None):
    """Sorted indices of the candidate pairs that become edges."""
    key = graph_key(seed)
    block_size = block_size or BLOCK_SIZE
    if p >= DENSE_THRESHOLD:
        return _dense_pair_indices(total, p, key, block_size)
    return _sparse_pair_indices(total, p, key, block_size)


def _row_offsets(n):
    rows = np.arange(n, dtype=np.int64)
    return rows * (2 * n - rows - 1) // 2


def pair_index_to_vertices(index, n):
    """Invert the lexicographic pair ordering (0,1),(0,2),...,(n-2,n-1)."""
    index = np.asarray(index, dtype=np.int64)
    offsets = _row_offsets(n)
    heads = np.searchsorted(offsets, index, side='right') - 1
    tails = index - offsets[heads] + heads + 1
    return heads, tails


def gen_gnp(n, p, seed, block_size=None):
    """Sample B(n, p): each of the C(n, 2) pairs is an edge independently
    with probability `p`. Deterministic in (n, p, seed).
    """
    n = check_count(n, 'n')
    p = check_probability(p)
    seed = check_seed(seed)

    total = n * (n - 1) // 2
    index = sample_pair_indices(total, p, seed, block_size)
    heads, tails = pair_index_to_vertices(index, n)
    return Graph(n, heads, tails)


def gen_bipartite(n1, n2, p, seed, block_size=None):
    """Sample B(n1, n2, p) on vertices 0..n1+n2-1, where 0..n1-1 is the
    first part and only cross pairs are candidate edges.
    """
    n1 = check_count(n1, 'n1')
    n2 = check_count(n2, 'n2')
    p = check_probability(p)
    seed = check_seed(seed)

    index = sample_pair_indices(n1 * n2, p, seed, block_size)
    heads = index // n2
    tails = n1 + index % n2
    return Graph(n1 + n2, heads, tails, n1=n1)


def generate(params, seed, block_size=None):
    params = params.validate()
    if params.variant == BIPARTITE:
        return gen_bipartite(params.n1, params.n2, params.p, seed,
                             block_size=block_size)
    return gen_gnp(params.n, params.p, seed, block_size=block_size)


def neighbor_degree_sum(graph, v):
    """r(v): sum of the degrees of the neighbours of `v` (0 if isolated)."""
    return int(graph.degrees[graph.neighbors(v)].sum())
