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
Cover builders shared by the tests. All builders return EdgeList objects with
decimal node tokens and a record order shuffled by a seeded generator.
"""

import numpy as np
import pytest

from netsteg import EdgeList

def _edge_list(pairs, seed):
    pairs = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    rng = np.random.default_rng(seed)
    pairs = pairs[rng.permutation(len(pairs))]
    num_nodes = int(pairs.max()) + 1 if len(pairs) else 0
    nodes = [str(k).encode() for k in range(num_nodes)]
    return EdgeList(nodes, pairs[:, 0], pairs[:, 1])

def bind_cover(ee, eo, oe, oo, seed=0):
    """
    A cover with exactly ee, eo, oe and oo edges of the four BIND types, built
    from small components:

        a->b, b->a        two EE edges (both degrees 2)
        a->b, b->c, c->a  three EE edges
        a->b->c           one OE and one EO edge (degrees 1, 2, 1)
        c->x, c->y        two EO edges (c has degree 2)
        x->c, y->c        two OE edges
        a->b              one OO edge
    """
    assert ee != 1, "a single EE edge needs a larger component"
    paths = min(eo, oe)
    assert (eo - paths) % 2 == 0 and (oe - paths) % 2 == 0

    pairs = []
    nxt = [0]
    def new():
        nxt[0] += 1
        return nxt[0] - 1

    n = ee
    if n % 2:
        a, b, c = new(), new(), new()
        pairs += [(a, b), (b, c), (c, a)]
        n -= 3
    for _ in range(n // 2):
        a, b = new(), new()
        pairs += [(a, b), (b, a)]
    for _ in range(paths):
        a, b, c = new(), new(), new()
        pairs += [(a, b), (b, c)]
    for _ in range((eo - paths) // 2):
        c, x, y = new(), new(), new()
        pairs += [(c, x), (c, y)]
    for _ in range((oe - paths) // 2):
        c, x, y = new(), new(), new()
        pairs += [(x, c), (y, c)]
    for _ in range(oo):
        a, b = new(), new()
        pairs += [(a, b)]
    return _edge_list(pairs, seed)

def bymond_cover(per_type, seed=0):
    """
    A cover with at least per_type edges of every BYMOND type. A star with
    d outgoing edges has degrees (d, 1) on every edge, i.e. type (d+1) mod
    256, so type t is made from stars with d = (t-1) mod 256 (256 for t=1).
    """
    pairs = []
    nxt = 0
    for t in range(256):
        d = (t - 1) % 256 or 256
        for _ in range(-(-per_type // d)):
            center = nxt
            pairs += [(center, center + 1 + k) for k in range(d)]
            nxt += d + 1
    return _edge_list(pairs, seed)

def random_cover(num_edges, num_nodes, seed=0):
    'Erdos-Renyi style random directed edge list, duplicates and loops allowed.'
    rng = np.random.default_rng(seed)
    src = rng.integers(0, num_nodes, size=num_edges)
    dst = rng.integers(0, num_nodes, size=num_edges)
    return _edge_list(np.stack((src, dst), axis=1), seed)

def brute_force_degrees(el):
    'Degrees by explicit in/out counting over unique directed pairs.'
    degree = {}
    for s, d in set(el.records()):
        degree[s] = degree.get(s, 0) + 1
        degree[d] = degree.get(d, 0) + 1
    return degree

@pytest.fixture
def path_cover():
    return EdgeList.from_records([(b'A', b'B'), (b'B', b'C')])

@pytest.fixture
def uniform_bind_cover():
    return bind_cover(2500, 2500, 2500, 2500, seed=1)
