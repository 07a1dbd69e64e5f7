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

"""
BYNIS: synthesising a stego network from a message. Every message byte b
becomes one edge (id1, id2) of integer node ids with id1 + id2 = b + bias
modulo bias, where id1 is the current hub. Hubs are taken greedily in order
of decreasing reference degree, each hub receiving as many edges as its
reference degree. Decoding is (id1 + id2) mod bias per edge.
"""

import logging

import networkx as nx
import numpy as np

from netsteg.edgelist import NetstegError, EdgeList, read_edge_list

logger = logging.getLogger(__name__)

DEFAULT_BIAS = 256

class ReferenceExhausted(NetstegError, ValueError):
    pass

class BiasTooSmall(NetstegError, ValueError):
    pass

class BynisDecodeError(NetstegError, ValueError):

    def __init__(self, edge_index, reason):
        self.edge_index = edge_index
        NetstegError.__init__(self, "edge {}: {}".format(edge_index, reason))

class ReferenceDegrees(object):
    """
    Target degrees of the hub nodes, sorted non-increasing, all positive.
    'source' is a free-form label telling where the degrees came from.
    """

    def __init__(self, degrees, source='file'):
        degrees = np.asarray(degrees, dtype=np.int64).ravel()
        if len(degrees) == 0:
            raise ValueError("Reference degrees are empty")
        if np.any(degrees < 1):
            raise ValueError("Reference degrees must be positive")
        if np.any(np.diff(degrees) > 0):
            logger.warning("Reference degrees from %s were not sorted; "
                           "sorting in descending order", source)
            degrees = np.sort(degrees)[::-1]
        self.degrees = degrees
        self.source = source

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, i):
        return int(self.degrees[i])

    def total(self):
        return int(self.degrees.sum())

def bynis_encode(msg, ref, bias=DEFAULT_BIAS):
    """
    Returns a stego edge list with one edge per message byte, in message
    order, with decimal node tokens.

    The hub counter advances once the current hub has received its reference
    degree, and every edge consumes one unit of its hub's degree, so hub i
    never gets more than ref[i] edges. A negative second id is lifted by
    multiples of bias, and an edge that already exists has its second id
    raised by bias*j for j = 1, 2, ... until it is new. Neither changes the
    decoded byte.
    """
    if bias < 256:
        raise BiasTooSmall("bias must be at least 256, got {}".format(bias))
    msg = bytes(msg)
    if len(msg) == 0:
        raise ValueError("Cannot synthesise a network from an empty message")
    if not isinstance(ref, ReferenceDegrees):
        ref = ReferenceDegrees(ref)
    if ref.total() < len(msg):
        raise ReferenceExhausted("Reference degrees sum to {} but the message "
                                 "has {} bytes".format(ref.total(), len(msg)))

    target = ref.degrees.tolist()
    consumed = [0]*len(target)
    existing = set()
    edges = []
    i = 0

    for byte in msg:
        B = byte + bias
        if consumed[i] == target[i]:
            i += 1
        consumed[i] += 1

        id1 = i
        id2 = B - i
        if id2 < 0:
            id2 += bias*(-(-(i - B) // bias)) + bias

        j = 1
        while (id1, id2) in existing:
            id2 += bias*j
            j += 1

        existing.add((id1, id2))
        edges.append((id1, id2))

    logger.debug("Synthesised %d edges on %d hubs", len(edges), i+1)
    return EdgeList.from_records((str(a).encode(), str(b).encode())
                                 for a, b in edges)

def bynis_decode(el, bias=DEFAULT_BIAS):
    'Recovers the message as (id1 + id2) mod bias for every edge, in order.'
    if bias < 256:
        raise BiasTooSmall("bias must be at least 256, got {}".format(bias))

    ids = np.empty(el.num_nodes, dtype=object)
    valid = np.ones(el.num_nodes, dtype=bool)
    for k, token in enumerate(el.nodes):
        if token.isdigit():
            ids[k] = int(token)
        else:
            valid[k] = False

    bad = ~(valid[el.src] & valid[el.dst])
    if np.any(bad):
        raise BynisDecodeError(int(np.argmax(bad)), "node token is not a "
                               "nonnegative decimal integer")

    values = [(a + b) % bias for a, b in zip(ids[el.src], ids[el.dst])]
    for k, value in enumerate(values):
        if value > 255:
            raise BynisDecodeError(k, "decodes to {}, not a byte (wrong "
                                   "bias?)".format(value))
    return bytes(values)

def ba_degree_sequence(n, m, seed=None):
    """
    Degrees of a Barabasi-Albert preferential attachment graph with n nodes,
    each new node attaching m edges, sorted in descending order. The graph has
    m*(n-m) edges.
    """
    if not (n > m >= 1):
        raise ValueError("Barabasi-Albert parameters need n > m >= 1, "
                         "got n={}, m={}".format(n, m))
    g = nx.barabasi_albert_graph(n, m, seed=seed)
    degrees = sorted((d for _, d in g.degree()), reverse=True)
    return ReferenceDegrees(degrees, "ba:n={},m={},seed={}".format(n, m, seed))

def reference_from_graph(el, source='graph'):
    """
    Undirected degrees of the largest connected component of a reference
    network given as an edge list.
    """
    g = nx.Graph()
    g.add_edges_from(el)
    giant = max(nx.connected_components(g), key=len)
    if len(giant) < g.number_of_nodes():
        logger.info("Using the giant component: %d of %d nodes",
                    len(giant), g.number_of_nodes())
    degrees = sorted((d for _, d in g.subgraph(giant).degree()), reverse=True)
    return ReferenceDegrees(degrees, source)

def load_reference_degrees(fname):
    'One positive integer per line; blank lines and #-comments are skipped.'
    degrees = []
    with open(fname) as f:
        for lineno, line in enumerate(f, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            try:
                degrees.append(int(line))
            except ValueError:
                raise ValueError("{}:{}: not an integer degree: {!r}"
                                 .format(fname, lineno, line))
    return ReferenceDegrees(degrees, fname)

def parse_reference(spec, delimiter=b',', has_header=False):
    """
    Reference degrees from a textual spec:

        ba:n=200,m=1,seed=7   Barabasi-Albert degree sequence (m and seed
                              default to 1 and 0)
        graph:ref.csv         giant component of a reference edge list
        degrees.txt           one degree per line
    """
    if spec.startswith('ba:'):
        params = {}
        for item in spec[3:].split(','):
            key, sep, value = item.partition('=')
            if not sep or key.strip() not in ('n', 'm', 'seed'):
                raise ValueError("Bad Barabasi-Albert reference: {!r}".format(spec))
            params[key.strip()] = int(value)
        if 'n' not in params:
            raise ValueError("Barabasi-Albert reference needs n: {!r}".format(spec))
        return ba_degree_sequence(params['n'], params.get('m', 1),
                                  params.get('seed', 0))
    if spec.startswith('graph:'):
        fname = spec[6:]
        return reference_from_graph(read_edge_list(fname, delimiter, has_header),
                                    fname)
    return load_reference_degrees(spec)
