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
Hiding messages in the order of an edge list (BIND and BYMOND). The stego
edge list holds exactly the records of the cover, only reordered:

    1. The message body is framed with a 4-byte big-endian length.
    2. The framed bytes are split into symbols (2 bits for BIND, 1 byte for
       BYMOND) and every symbol takes the next unused edge of the same type.
    3. The unused edges follow in their original order.
    4. The result is shuffled with the password-keyed permutation.

Decoding recomputes the degrees from the stego edges (degrees do not depend
on the order), undoes the permutation, and reads the types of the leading
edges as symbols.
"""

import logging
import struct

import numpy as np

from netsteg.edgelist import NetstegError, compute_degrees
from netsteg.classify import get_algorithm, partition_edges
from netsteg.keyperm import (StegoKey, permutation, apply_permutation,
                             invert_permutation)

logger = logging.getLogger(__name__)

HEADER_BYTES = 4

class TypeExhausted(NetstegError):

    def __init__(self, type_key, used_edges):
        self.type_key = type_key
        self.used_edges = used_edges
        NetstegError.__init__(self, "Ran out of edges of type {} after {} "
                                    "message edges".format(type_key, used_edges))

class MessageTooLarge(NetstegError, ValueError):

    def __init__(self, symbols, edges):
        self.symbols = symbols
        self.edges = edges
        NetstegError.__init__(self, "Message needs {} edges but the cover only "
                                    "has {}".format(symbols, edges))

class CorruptOrWrongKey(NetstegError):
    pass

def frame(body):
    'Prepends the 4-byte big-endian length of body.'
    body = bytes(body)
    if len(body) >= 2**32:
        raise MessageTooLarge(len(body), 2**32-1)
    return struct.pack('>I', len(body)) + body

class Payload(object):
    __slots__ = ('body',)

    def __init__(self, body):
        self.body = bytes(body)

    def framed(self):
        return frame(self.body)

    def __len__(self):
        return HEADER_BYTES + len(self.body)

class EncodeOutcome(object):
    """
    Result of encode(). On success stego is the stego edge list and
    exhausted_type is None. When encoding is attempted without raising,
    a failure leaves stego as None, exhausted_type as the type key that ran
    out, and used_edges as the number of symbols placed before that.
    """
    __slots__ = ('stego', 'used_edges', 'exhausted_type')

    def __init__(self, stego, used_edges, exhausted_type=None):
        self.stego = stego
        self.used_edges = used_edges
        self.exhausted_type = exhausted_type

    @property
    def success(self):
        return self.exhausted_type is None

def demand(symbols, algorithm):
    'Number of edges needed of each type code.'
    return np.bincount(symbols, minlength=get_algorithm(algorithm).num_types)

def first_exhausted(symbols, supply):
    """
    Returns (position, type code) of the first symbol in the stream whose
    type has no edges left, or None if every demand fits its supply.
    """
    symbols = np.asarray(symbols)
    counts = np.bincount(symbols, minlength=len(supply))
    short = np.flatnonzero(counts > supply)
    if len(short) == 0:
        return None
    positions = [np.flatnonzero(symbols == t)[supply[t]] for t in short]
    k = int(np.argmin(positions))
    return int(positions[k]), int(short[k])

def _assign_edges(symbols, partition):
    """
    The edge index for every symbol: the k-th occurrence of type t gets the
    k-th entry of queue(t).
    """
    by_symbol = np.argsort(symbols, kind='stable')
    sorted_symbols = symbols[by_symbol]
    counts = np.bincount(symbols, minlength=len(partition.counts))
    first = np.concatenate(([0], np.cumsum(counts)))[sorted_symbols]
    rank = np.arange(len(symbols)) - first

    edges = np.empty(len(symbols), dtype=np.int64)
    edges[by_symbol] = partition.order[partition.starts[sorted_symbols] + rank]
    return edges

def encode(el, algorithm, msg, password, framed=True, raise_on_exhausted=True):
    """
    Hides msg in the order of the edge list el and returns an EncodeOutcome.

    Raises MessageTooLarge if the message needs more symbols than there are
    edges, and TypeExhausted if some edge type runs out (unless
    raise_on_exhausted is False, in which case the failure is reported in
    the outcome). With framed=False no length header is written; the
    receiver must then know the message length. password is a str (hashed
    as UTF-8), bytes or a StegoKey.
    """
    algorithm = get_algorithm(algorithm)
    key = StegoKey(password)
    if len(el) == 0:
        raise ValueError("Cannot encode into an empty edge list")

    data = Payload(msg).framed() if framed else bytes(msg)
    symbols = algorithm.symbols(data)
    if len(symbols) > len(el):
        raise MessageTooLarge(len(symbols), len(el))

    deg = compute_degrees(el)
    partition = partition_edges(el, deg, algorithm)

    hit = first_exhausted(symbols, partition.counts)
    if hit is not None:
        position, code = hit
        type_key = algorithm.label(code)
        logger.info("Encoding failed at symbol %d: no %s edges left",
                    position, type_key)
        if raise_on_exhausted:
            raise TypeExhausted(type_key, position)
        return EncodeOutcome(None, position, type_key)

    message_edges = _assign_edges(symbols, partition)
    used = np.zeros(len(el), dtype=bool)
    used[message_edges] = True
    order = np.concatenate((message_edges, np.flatnonzero(~used)))

    perm = permutation(key.seed, len(el))
    stego = apply_permutation(el.take(order), perm)
    logger.debug("Encoded %d symbols into %d edges", len(symbols), len(el))
    return EncodeOutcome(stego, len(symbols))

def decode(el, algorithm, password, framed=True, length=None):
    """
    Recovers the message hidden by encode() from the stego edge list alone.
    Raises CorruptOrWrongKey if the length header does not fit the edge list,
    which is the usual outcome of a wrong password or algorithm. For
    unframed messages, length (in bytes) must be given.
    """
    algorithm = get_algorithm(algorithm)
    key = StegoKey(password)
    n = len(el)
    per_byte = 8 // algorithm.bits_per_symbol

    deg = compute_degrees(el)
    ordered = invert_permutation(el, permutation(key.seed, n))
    k1, k2 = deg.edge_degrees(ordered)

    if framed:
        start = algorithm.header_symbols
        if n < start:
            raise CorruptOrWrongKey("Edge list too short for a length header")
        header = algorithm.pack(algorithm.classify(k1[:start], k2[:start]))
        length, = struct.unpack('>I', header)
    else:
        assert length is not None, "Unframed decoding needs the message length"
        start = 0

    stop = start + length*per_byte
    if stop > n:
        raise CorruptOrWrongKey("Header announces {} bytes but only {} edges "
                                "are available".format(length, n))
    return algorithm.pack(algorithm.classify(k1[start:stop], k2[start:stop]))
