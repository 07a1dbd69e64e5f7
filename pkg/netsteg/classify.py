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

import csv
import io
import json
import logging

import numpy as np

from netsteg.edgelist import compute_degrees

logger = logging.getLogger(__name__)

class Bind(object):
    """
    Degree-parity classifier. An edge whose source and destination degrees
    have parities (p1, p2) gets type code 2*p1 + p2, i.e. EE=0, EO=1, OE=2 and
    OO=3. Reading E as bit 0 and O as bit 1, the type code equals the 2-bit
    message symbol it carries, first bit from the source.
    """
    name = 'bind'
    num_types = 4
    bits_per_symbol = 2
    header_symbols = 16
    labels = ('EE', 'EO', 'OE', 'OO')

    def classify(self, k1, k2):
        k1 = np.asarray(k1)
        k2 = np.asarray(k2)
        return (2*(k1 % 2) + k2 % 2).astype(np.uint8)

    def label(self, code):
        return self.labels[int(code)]

    def code(self, key):
        if isinstance(key, str):
            return self.labels.index(key.upper())
        assert 0 <= key < self.num_types
        return int(key)

    def symbols(self, data):
        'Message bytes to 2-bit symbols, MSB first within each byte.'
        bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
        return (2*bits[0::2] + bits[1::2]).astype(np.uint8)

    def pack(self, symbols):
        symbols = np.asarray(symbols, dtype=np.uint8)
        assert len(symbols) % 4 == 0
        bits = np.empty(2*len(symbols), dtype=np.uint8)
        bits[0::2] = symbols >> 1
        bits[1::2] = symbols & 1
        return np.packbits(bits).tobytes()

    def capacity_bits(self, e_min, num_edges):
        'Returns (B_max^est, B_max^thr) in bits.'
        return 4*e_min, 2*num_edges

class Bymond(object):
    """
    Degree-sum classifier. An edge with degrees (k1, k2) gets type
    (k1 + k2) mod 256 and carries the message byte of the same value.
    """
    name = 'bymond'
    num_types = 256
    bits_per_symbol = 8
    header_symbols = 4

    def classify(self, k1, k2):
        k1 = np.asarray(k1)
        k2 = np.asarray(k2)
        return ((k1 + k2) % 256).astype(np.uint8)

    def label(self, code):
        return int(code)

    def code(self, key):
        key = int(key)
        assert 0 <= key < self.num_types
        return key

    def symbols(self, data):
        return np.frombuffer(bytes(data), dtype=np.uint8).copy()

    def pack(self, symbols):
        return np.asarray(symbols, dtype=np.uint8).tobytes()

    def capacity_bits(self, e_min, num_edges):
        # 256*|E_min| message bytes
        return 8*256*e_min, 8*num_edges

BIND = Bind()
BYMOND = Bymond()
ALGORITHMS = {BIND.name: BIND, BYMOND.name: BYMOND}

def get_algorithm(algorithm):
    'Accepts an algorithm name or object and returns the object.'
    if isinstance(algorithm, str):
        try:
            return ALGORITHMS[algorithm.lower()]
        except KeyError:
            raise ValueError("Unknown algorithm '{}', expected one of {}"
                             .format(algorithm, sorted(ALGORITHMS)))
    assert isinstance(algorithm, (Bind, Bymond))
    return algorithm

def bind_classify(k1, k2):
    assert k1 >= 1 and k2 >= 1
    return BIND.labels[2*(k1 % 2) + k2 % 2]

def bymond_classify(k1, k2):
    assert k1 >= 1 and k2 >= 1
    return (k1 + k2) % 256

class Partition(object):
    """
    The supply of edges for each edge type. For type code t, queue(t) holds
    the indices (into the cover edge list) of all edges of that type in
    increasing order, so popping from the front is FIFO in file order. Every
    edge index is in exactly one queue; types without edges have an empty
    queue.
    """

    def __init__(self, algorithm, types):
        self.algorithm = get_algorithm(algorithm)
        self.types = np.asarray(types, dtype=np.uint8)
        self.order = np.argsort(self.types, kind='stable')
        self.counts = np.bincount(self.types, minlength=self.algorithm.num_types)
        self.starts = np.concatenate(([0], np.cumsum(self.counts)))

    def __len__(self):
        return len(self.types)

    def queue(self, key):
        t = self.algorithm.code(key)
        return self.order[self.starts[t]:self.starts[t+1]]

    __getitem__ = queue

    def keys(self):
        return [self.algorithm.label(t) for t in range(self.algorithm.num_types)]

    def histogram(self):
        return {self.algorithm.label(t): int(c) for t, c in enumerate(self.counts)}

def partition_edges(el, deg, algorithm):
    algorithm = get_algorithm(algorithm)
    k1, k2 = deg.edge_degrees(el)
    return Partition(algorithm, algorithm.classify(k1, k2))

class CapacityReport(object):
    """
    Payload capacity of a cover under one algorithm. Bit counts follow the
    published capacity formulas; b_max_est_symbols = num_types*|E_min| is the
    number of message symbols (edges) the scarcest type is guaranteed to
    support, and usable_body_bytes is the largest message body that fits
    there together with the length header.
    """

    fields = ('algorithm', 'num_edges', 'num_nodes', 'num_unique_pairs',
              'e_min_type', 'e_min', 'b_max_est_bits', 'b_max_thr_bits',
              'bpe_max_est', 'r_e_t', 'b_max_est_symbols', 'header_symbols',
              'usable_body_bytes', 'histogram', 'proportions', 'notes')

    def __init__(self, **kwargs):
        for name in self.fields:
            setattr(self, name, kwargs.pop(name))
        assert not kwargs, kwargs

    def as_dict(self):
        return {name: getattr(self, name) for name in self.fields}

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2) + '\n'

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['algo', 'type', 'count', 'proportion', 'is_e_min'])
        for key, count in self.histogram.items():
            writer.writerow([self.algorithm, key, count,
                             '{:.6f}'.format(self.proportions[key]),
                             int(key == self.e_min_type)])
        return buf.getvalue()

    def to_table(self):
        lines = [
            "Algorithm:            {}".format(self.algorithm),
            "Edges |E|:            {}".format(self.num_edges),
            "Nodes |V|:            {}".format(self.num_nodes),
            "Unique directed pairs: {}".format(self.num_unique_pairs),
            "Type of E_min:        {}".format(self.e_min_type),
            "|E_min|:              {}".format(self.e_min),
            "|B_max^est| (bits):   {}".format(self.b_max_est_bits),
            "|B_max^thr| (bits):   {}".format(self.b_max_thr_bits),
            "BPE_max^est:          {:.6f}".format(self.bpe_max_est),
            "R_E/T:                {:.6f}".format(self.r_e_t),
            "Usable body (bytes):  {}".format(self.usable_body_bytes),
            "",
            "{:>6} {:>12} {:>10}".format("type", "count", "fraction"),
        ]
        for key, count in self.histogram.items():
            if count or self.algorithm == BIND.name:
                lines.append("{:>6} {:>12} {:>10.6f}".format(
                    str(key), count, self.proportions[key]))
        lines += [""] + ["Note: " + n for n in self.notes]
        return '\n'.join(lines) + '\n'

def _notes(algorithm):
    if algorithm is BIND:
        return ["b_max_est_bits = 4*|E_min| as in the published BIND table; "
                "each edge carries 2 bits, so the supply bound in edges is "
                "b_max_est_symbols.",
                "b_max_thr_bits = 2*|E| by the text formula; the published "
                "table's thr column is close to |E| instead."]
    return ["b_max_est_bits = 8*256*|E_min|, i.e. 256*|E_min| message bytes "
            "(the published caption's 256*|E_min| read as bytes)."]

def estimate_capacity(p, algorithm=None, num_nodes=None, num_unique_pairs=None):
    """
    Builds a CapacityReport from a partition. Ties for the scarcest type are
    broken by the smallest type code (EE < EO < OE < OO for BIND).
    """
    algorithm = p.algorithm if algorithm is None else get_algorithm(algorithm)
    assert algorithm is p.algorithm

    num_edges = len(p)
    counts = p.counts
    e_min_code = int(np.argmin(counts))
    e_min = int(counts[e_min_code])
    est_bits, thr_bits = algorithm.capacity_bits(e_min, num_edges)
    est_symbols = algorithm.num_types * e_min
    usable = max(est_symbols * algorithm.bits_per_symbol // 8 - 4, 0)

    histogram = p.histogram()
    proportions = {k: (c/num_edges if num_edges else 0.0)
                   for k, c in histogram.items()}

    return CapacityReport(
        algorithm=algorithm.name,
        num_edges=num_edges,
        num_nodes=num_nodes,
        num_unique_pairs=num_unique_pairs,
        e_min_type=algorithm.label(e_min_code),
        e_min=e_min,
        b_max_est_bits=est_bits,
        b_max_thr_bits=thr_bits,
        bpe_max_est=est_bits/num_edges if num_edges else 0.0,
        r_e_t=est_bits/thr_bits if thr_bits else 0.0,
        b_max_est_symbols=est_symbols,
        header_symbols=algorithm.header_symbols,
        usable_body_bytes=usable,
        histogram=histogram,
        proportions=proportions,
        notes=_notes(algorithm))

def capacity_report(el, algorithm):
    'Degrees, partition and capacity estimate of a cover in one call.'
    algorithm = get_algorithm(algorithm)
    deg = compute_degrees(el)
    p = partition_edges(el, deg, algorithm)
    report = estimate_capacity(p, algorithm, el.num_nodes, el.num_unique_pairs())
    logger.info("%s capacity: |E|=%d, E_min=%s (%d edges)", algorithm.name,
                report.num_edges, report.e_min_type, report.e_min)
    return report
