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
Password-keyed reordering of edge lists. The construction is fixed bit by bit
so that third parties can decode:

    seed    = FNV-1a 64-bit hash of the password bytes
    next()  = SplitMix64 sequence seeded with seed
    perm    = Fisher-Yates: for i = n-1 down to 1, j = next() mod (i+1),
              swap positions i and j of [0, 1, ..., n-1]

None of this is cryptographically strong. Encrypt the message beforehand if
that matters.
"""

import numpy as np

FNV1A_64_INIT = 0xcbf29ce484222325
FNV_64_PRIME = 0x100000001b3
MASK_64 = 0xffffffffffffffff

SPLITMIX_GAMMA = np.uint64(0x9E3779B97F4A7C15)
SPLITMIX_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
SPLITMIX_MUL2 = np.uint64(0x94D049BB133111EB)

def _password_bytes(password):
    if isinstance(password, str):
        return password.encode('utf-8')
    if isinstance(password, (bytes, bytearray, memoryview)):
        return bytes(password)
    raise TypeError("A password must be str or bytes, not {}"
                    .format(type(password).__name__))

def derive_seed(password):
    'FNV-1a 64 hash of the password (str is hashed as UTF-8).'
    hval = FNV1A_64_INIT
    for byte in _password_bytes(password):
        hval ^= byte
        hval = (hval * FNV_64_PRIME) & MASK_64
    return hval

class StegoKey(object):
    __slots__ = ('password', 'seed')

    def __init__(self, password):
        if isinstance(password, StegoKey):
            password = password.password
        self.password = _password_bytes(password)
        self.seed = derive_seed(self.password)

    def __repr__(self):
        # Never show the password itself
        return "StegoKey(<{} bytes>)".format(len(self.password))

def splitmix64_at(seed, indices):
    """
    Returns outputs number indices (0-based) of the SplitMix64 sequence seeded
    with seed, as a uint64 array. Output k only depends on seed + (k+1)*gamma,
    which is what makes this vectorisable.
    """
    indices = np.asarray(indices, dtype=np.uint64)
    with np.errstate(over='ignore'):
        z = np.uint64(seed & MASK_64) + (indices + np.uint64(1)) * SPLITMIX_GAMMA
        z = (z ^ (z >> np.uint64(30))) * SPLITMIX_MUL1
        z = (z ^ (z >> np.uint64(27))) * SPLITMIX_MUL2
        z = z ^ (z >> np.uint64(31))
    return z

def splitmix64(seed, n):
    'The first n outputs of the SplitMix64 sequence seeded with seed.'
    return splitmix64_at(seed, np.arange(n, dtype=np.uint64))

def permutation(seed, n):
    """
    Fisher-Yates permutation of 0..n-1 driven by SplitMix64(seed). The draw
    for position i is the (n-1-i)-th output taken modulo i+1.
    """
    assert n >= 0
    if n < 2:
        return np.arange(n, dtype=np.int64)

    positions = np.arange(n-1, 0, -1, dtype=np.uint64)
    draws = (splitmix64(seed, n-1) % (positions + np.uint64(1))).tolist()

    perm = list(range(n))
    for i, j in zip(range(n-1, 0, -1), draws):
        perm[i], perm[j] = perm[j], perm[i]
    return np.array(perm, dtype=np.int64)

def apply_permutation(el, perm):
    """
    Moves record i of el to position perm[i] of the returned edge list.
    """
    perm = np.asarray(perm, dtype=np.int64)
    if len(perm) != len(el):
        raise ValueError("Permutation of length {} applied to {} edges"
                         .format(len(perm), len(el)))
    order = np.empty_like(perm)
    order[perm] = np.arange(len(perm), dtype=np.int64)
    return el.take(order)

def invert_permutation(el, perm):
    'Undoes apply_permutation(., perm).'
    perm = np.asarray(perm, dtype=np.int64)
    if len(perm) != len(el):
        raise ValueError("Permutation of length {} applied to {} edges"
                         .format(len(perm), len(el)))
    return el.take(perm)
