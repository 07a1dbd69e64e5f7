# Copyright (C) 2026, the netsteg developers
#
# This file is part of netsteg.
#
# netsteg is free software: you can redistribute it and/or modify it under the
# terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# netsteg is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# netsteg. If not, see <http://www.gnu.org/licenses/>.

import io
import logging
from array import array
from collections import namedtuple
from collections.abc import Mapping

import numpy as np

logger = logging.getLogger(__name__)

class NetstegError(Exception):
    """Base class of all errors raised by netsteg."""

class EdgeListParseError(NetstegError, ValueError):

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        NetstegError.__init__(self, "line {}: {}".format(line, reason))

EdgeRecord = namedtuple('EdgeRecord', ['src', 'dst'])

def _as_bytes(value):
    if isinstance(value, str):
        return value.encode('utf-8')
    return bytes(value)

class EdgeList(object):
    """
    An ordered list of directed edge records. Node tokens are opaque byte
    strings and are interned once: self.nodes[k] is the token of node id k,
    while self.src and self.dst are integer arrays of node ids, one entry per
    edge record. Duplicate records are kept as separate entries.

    Indexing and iteration yield EdgeRecord(src, dst) tuples of tokens:

        el = EdgeList.from_records([(b'A', b'B'), (b'B', b'C')])
        el[1]   # EdgeRecord(src=b'B', dst=b'C')

    Several edge lists may share the same nodes list, e.g. an edge list and
    its reordered copy made by take().
    """
    __slots__ = ('nodes', 'src', 'dst')

    def __init__(self, nodes, src, dst):
        self.nodes = nodes
        self.src = np.asarray(src, dtype=np.int64)
        self.dst = np.asarray(dst, dtype=np.int64)
        assert self.src.shape == self.dst.shape

    @classmethod
    def from_records(cls, records):
        """
        Builds an edge list from an iterable of (src, dst) pairs. Tokens may
        be bytes or str (str is UTF-8 encoded).
        """
        index = {}
        nodes = []
        src = array('q')
        dst = array('q')
        for s, d in records:
            for token, ids in ((_as_bytes(s), src), (_as_bytes(d), dst)):
                if not token:
                    raise ValueError("Node tokens must be nonempty")
                k = index.get(token)
                if k is None:
                    k = index[token] = len(nodes)
                    nodes.append(token)
                ids.append(k)
        return cls(nodes, np.frombuffer(src, dtype=np.int64),
                          np.frombuffer(dst, dtype=np.int64))

    def __len__(self):
        return len(self.src)

    def __getitem__(self, i):
        return EdgeRecord(self.nodes[self.src[i]], self.nodes[self.dst[i]])

    def __iter__(self):
        nodes = self.nodes
        for s, d in zip(self.src.tolist(), self.dst.tolist()):
            yield EdgeRecord(nodes[s], nodes[d])

    def __eq__(self, other):
        if not isinstance(other, EdgeList):
            return NotImplemented
        if len(self) != len(other):
            return False
        if self.nodes is other.nodes:
            return bool(np.all(self.src == other.src) and
                        np.all(self.dst == other.dst))
        return self.records() == other.records()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "EdgeList({} edges, {} nodes)".format(len(self), self.num_nodes)

    def records(self):
        return list(self)

    def take(self, order):
        """
        Returns a new edge list whose i-th record is record order[i] of this
        one. The nodes list is shared.
        """
        order = np.asarray(order, dtype=np.int64)
        return EdgeList(self.nodes, self.src[order], self.dst[order])

    @property
    def num_nodes(self):
        return len(self.nodes)

    def pair_keys(self):
        'Integer key per record, equal for equal (src, dst) pairs.'
        return self.src * max(self.num_nodes, 1) + self.dst

    def num_unique_pairs(self):
        'Number of distinct directed (src, dst) pairs.'
        return len(np.unique(self.pair_keys()))

def parse_edge_list(stream, delimiter=b',', has_header=False):
    """
    Reads an edge list from a binary stream (or any iterable of byte lines,
    or a bytes object). Each data row is src<delim>dst[<delim>ignored...].
    Trailing CR is tolerated. Only the interned node tokens and two integer
    arrays are kept in memory, never the file content.

    Blank lines at the end of the file are skipped. Raises EdgeListParseError
    with the 1-based line number for blank lines between rows, rows with
    fewer than two nonempty fields, and files without data rows.
    """
    if isinstance(stream, (bytes, bytearray)):
        stream = io.BytesIO(stream)
    delimiter = _as_bytes(delimiter)

    index = {}
    nodes = []
    src = array('q')
    dst = array('q')
    extra = 0
    lineno = 0
    blank = None

    for lineno, line in enumerate(stream, 1):
        if has_header and lineno == 1:
            continue
        if line.endswith(b'\n'):
            line = line[:-1]
        if line.endswith(b'\r'):
            line = line[:-1]
        if not line:
            # only allowed at the end of the file
            blank = blank or lineno
            continue
        if blank is not None:
            raise EdgeListParseError(blank, "blank line")
        fields = line.split(delimiter, 2)
        if len(fields) < 2 or not fields[0] or not fields[1]:
            raise EdgeListParseError(lineno, "expected two delimited node tokens")
        if len(fields) > 2:
            extra += 1

        s = index.get(fields[0])
        if s is None:
            s = index[fields[0]] = len(nodes)
            nodes.append(fields[0])
        d = index.get(fields[1])
        if d is None:
            d = index[fields[1]] = len(nodes)
            nodes.append(fields[1])
        src.append(s)
        dst.append(d)

    if len(src) == 0:
        raise EdgeListParseError(lineno, "empty edge list")

    if extra:
        logger.warning("Ignored extra columns on %d of %d rows", extra, len(src))

    logger.debug("Parsed %d edges between %d nodes", len(src), len(nodes))
    return EdgeList(nodes, np.frombuffer(src, dtype=np.int64),
                           np.frombuffer(dst, dtype=np.int64))

def write_edge_list(el, stream=None, delimiter=b',', chunk_size=65536):
    """
    Writes one src<delim>dst line per record with LF line endings, so the
    output ends with exactly one newline. Returns the bytes written if no
    stream is given.
    """
    delimiter = _as_bytes(delimiter)
    if stream is None:
        buf = io.BytesIO()
        write_edge_list(el, buf, delimiter, chunk_size)
        return buf.getvalue()

    nodes = el.nodes
    for start in range(0, len(el), chunk_size):
        src = el.src[start:start+chunk_size].tolist()
        dst = el.dst[start:start+chunk_size].tolist()
        stream.write(b''.join([nodes[s] + delimiter + nodes[d] + b'\n'
                               for s, d in zip(src, dst)]))

def read_edge_list(fname, delimiter=b',', has_header=False):
    with open(fname, 'rb') as f:
        return parse_edge_list(f, delimiter, has_header)

def save_edge_list(el, fname, delimiter=b','):
    with open(fname, 'wb') as f:
        write_edge_list(el, f, delimiter)

class DegreeMap(Mapping):
    """
    Node token -> degree, where the degree of v is the number of unique
    directed pairs (s, d) with s = v plus the number with d = v. A self-loop
    (v, v) therefore counts twice. Backed by an integer array indexed by the
    node ids of the edge list it was computed from.
    """

    def __init__(self, nodes, degree):
        self.nodes = nodes
        self.degree = degree
        self._index = None

    def __getitem__(self, token):
        if self._index is None:
            self._index = {t: k for k, t in enumerate(self.nodes)}
        return int(self.degree[self._index[_as_bytes(token)]])

    def __iter__(self):
        return iter(self.nodes)

    def __len__(self):
        return len(self.nodes)

    def edge_degrees(self, el):
        """
        Returns the arrays (k1, k2) of source and destination degrees of every
        record in el.
        """
        if el.nodes is self.nodes:
            degree = self.degree
        else:
            degree = np.array([self[t] for t in el.nodes], dtype=np.int64)
        return degree[el.src], degree[el.dst]

def compute_degrees(el):
    """
    Total (in + out) degrees on the deduplicated set of directed pairs. The
    result only depends on that set, so it is invariant under reordering and
    duplication of records.
    """
    n = el.num_nodes
    if len(el) == 0:
        return DegreeMap(el.nodes, np.zeros(n, dtype=np.int64))
    pairs = np.unique(el.pair_keys())
    src, dst = np.divmod(pairs, n)
    degree = np.bincount(src, minlength=n) + np.bincount(dst, minlength=n)
    return DegreeMap(el.nodes, degree.astype(np.int64))

def degree_sequence(el, undirected=True):
    """
    Returns the sorted (ascending) array of node degrees. With undirected=True
    the pairs (a, b) and (b, a) collapse into one edge, as for a simple
    undirected graph; a self-loop contributes 2 to its node. Otherwise the
    degrees are those of compute_degrees().
    """
    if not undirected:
        return np.sort(compute_degrees(el).degree)
    n = el.num_nodes
    if len(el) == 0:
        return np.zeros(n, dtype=np.int64)
    lo = np.minimum(el.src, el.dst)
    hi = np.maximum(el.src, el.dst)
    pairs = np.unique(lo * n + hi)
    lo, hi = np.divmod(pairs, n)
    degree = np.bincount(lo, minlength=n) + np.bincount(hi, minlength=n)
    return np.sort(degree)
