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

import struct
from collections import Counter

import numpy as np
import pytest

from netsteg import (EdgeList, BIND, BYMOND, Payload, frame, demand,
                     first_exhausted, encode, decode, TypeExhausted,
                     MessageTooLarge, CorruptOrWrongKey, compute_degrees,
                     partition_edges, capacity_report, derive_seed, permutation,
                     invert_permutation, bind_classify, parse_edge_list,
                     write_edge_list, StegoKey)
from conftest import bind_cover, bymond_cover, random_cover, brute_force_degrees

def same_multiset(a, b):
    assert a.nodes is b.nodes
    return np.array_equal(np.sort(a.pair_keys()), np.sort(b.pair_keys()))

def test_frame():
    assert frame(b'hi') == b'\x00\x00\x00\x02hi'
    assert len(Payload(b'abc')) == 7
    assert Payload(b'').framed() == b'\x00\x00\x00\x00'

def test_demand_and_first_exhausted():
    symbols = np.array([0, 1, 1, 3, 1, 0], dtype=np.uint8)
    assert demand(symbols, BIND).tolist() == [2, 3, 0, 1]
    assert first_exhausted(symbols, np.array([2, 3, 0, 1])) is None
    assert first_exhausted(symbols, np.array([2, 1, 0, 1])) == (2, 1)
    assert first_exhausted(symbols, np.array([1, 1, 0, 0])) == (2, 1)
    assert first_exhausted(symbols, np.array([1, 3, 0, 0])) == (3, 3)

def test_bind_round_trip():
    el = bind_cover(40, 40, 40, 40)
    stego = encode(el, 'bind', b'hi', 'pw').stego
    assert decode(stego, 'bind', 'pw') == b'hi'
    assert same_multiset(stego, el)

def test_round_trip_through_csv():
    el = bind_cover(60, 60, 60, 60, seed=2)
    stego = encode(el, 'bind', b'net', 'pw').stego
    received = parse_edge_list(write_edge_list(stego))
    assert decode(received, 'bind', 'pw') == b'net'

def test_bymond_round_trip():
    el = bymond_cover(8)
    msg = bytes(range(256)) * 3
    outcome = encode(el, 'bymond', msg, 'secret')
    assert outcome.success and outcome.used_edges == len(msg) + 4
    assert decode(outcome.stego, 'bymond', 'secret') == msg
    assert compute_degrees(outcome.stego).degree.tolist() == \
           compute_degrees(el).degree.tolist()

def test_empty_body_uses_only_header():
    el = bind_cover(20, 2, 2, 2)
    outcome = encode(el, 'bind', b'', 'pw')
    assert outcome.used_edges == 16
    assert decode(outcome.stego, 'bind', 'pw') == b''

def test_type_exhausted_names_the_type():
    # only EE and OO edges; the length byte 0x01 ends with the symbol 01 (EO)
    el = bind_cover(20, 0, 0, 20)
    with pytest.raises(TypeExhausted) as e:
        encode(el, 'bind', b'A', 'pw')
    assert e.value.type_key == 'EO'
    assert e.value.used_edges == 15

def test_type_exhausted_outcome():
    el = bind_cover(20, 0, 0, 20)
    outcome = encode(el, 'bind', b'A', 'pw', raise_on_exhausted=False)
    assert not outcome.success
    assert outcome.stego is None
    assert outcome.exhausted_type == 'EO'

def test_bymond_edge_carries_its_degree_sum():
    # degrees 3 and 4: a star with 3 leaves whose hub also points to a
    # second star's hub of degree 4
    records = [('h', 'a'), ('h', 'b'), ('g', 'c'), ('g', 'd'), ('g', 'e'), ('h', 'g')]
    el = EdgeList.from_records(records)
    deg = compute_degrees(el)
    assert (deg['h'], deg['g']) == (3, 4)
    p = partition_edges(el, deg, 'bymond')
    assert p[7].tolist() == [5]

def test_message_too_large():
    el = bind_cover(4, 4, 4, 4)
    with pytest.raises(MessageTooLarge):
        encode(el, 'bind', b'x'*10, 'pw')

def test_empty_cover():
    with pytest.raises(ValueError):
        encode(EdgeList([], [], []), 'bind', b'', 'pw')

def test_corrupt_header():
    el = bind_cover(4, 2, 2, 2)
    with pytest.raises(CorruptOrWrongKey):
        decode(el.take(np.arange(5)), 'bind', 'pw')

def test_wrong_password():
    el = bind_cover(100, 100, 100, 100, seed=3)
    msg = b'attack at dawn'
    stego = encode(el, 'bind', msg, 'right').stego
    rng = np.random.default_rng(13)
    recovered = 0
    for _ in range(1000):
        guess = rng.integers(0, 2**62).item()
        try:
            recovered += decode(stego, 'bind', str(guess)) == msg
        except CorruptOrWrongKey:
            pass
    assert recovered <= 10

def test_unframed_round_trip():
    el = bind_cover(30, 30, 30, 30)
    stego = encode(el, 'bind', b'\x1b\xe4', 'pw', framed=False).stego
    assert decode(stego, 'bind', 'pw', framed=False, length=2) == b'\x1b\xe4'

def test_bind_bit_mapping_edge_by_edge():
    el = bind_cover(50, 50, 50, 50, seed=4)
    msg = b'\x00\xff\x1b\x6c'
    stego = encode(el, 'bind', msg, 'pw').stego
    ordered = invert_permutation(stego, permutation(derive_seed('pw'), len(stego)))
    degree = brute_force_degrees(el)
    symbols = BIND.symbols(frame(msg))
    for (s, d), symbol in zip(ordered, symbols):
        assert bind_classify(degree[s], degree[d]) == BIND.label(symbol)
        assert (degree[s] % 2, degree[d] % 2) == (symbol >> 1, symbol & 1)

def test_residual_edges_keep_file_order():
    el = bind_cover(30, 30, 30, 30, seed=5)
    outcome = encode(el, 'bind', b'ok', 'pw')
    ordered = invert_permutation(outcome.stego,
                                 permutation(derive_seed('pw'), len(el)))
    head = ordered.take(np.arange(outcome.used_edges))
    tail = ordered.take(np.arange(outcome.used_edges, len(el)))
    used = Counter(zip(head.src.tolist(), head.dst.tolist()))
    expected = []
    for r in zip(el.src.tolist(), el.dst.tolist()):
        if used[r]:
            used[r] -= 1
        else:
            expected.append(r)
    assert list(zip(tail.src.tolist(), tail.dst.tolist())) == expected

def test_fifo_queue_consumption():
    el = bind_cover(20, 20, 20, 20, seed=6)
    deg = compute_degrees(el)
    p = partition_edges(el, deg, 'bind')
    outcome = encode(el, 'bind', b'', 'pw')
    ordered = invert_permutation(outcome.stego, permutation(derive_seed('pw'), len(el)))
    # 16 header symbols, all EE: the first 16 edges of the EE queue, in order
    ee = el.take(p['EE'][:16])
    assert np.array_equal(ordered.src[:16], ee.src)
    assert np.array_equal(ordered.dst[:16], ee.dst)

def test_success_iff_demand_fits_supply():
    rng = np.random.default_rng(14)
    checked = 0
    for seed in range(60):
        el = random_cover(int(rng.integers(40, 201)), int(rng.integers(5, 40)), seed)
        degree = brute_force_degrees(el)
        supply = Counter(bind_classify(degree[s], degree[d]) for s, d in el)
        size = int(rng.integers(0, len(el)//4 - 3))
        msg = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
        need = Counter(BIND.label(s) for s in BIND.symbols(frame(msg)))
        fits = all(need[k] <= supply[k] for k in need)
        outcome = encode(el, 'bind', msg, 'pw', raise_on_exhausted=False)
        assert outcome.success == fits
        if fits:
            assert decode(outcome.stego, 'bind', 'pw') == msg
        checked += 1
    assert checked == 60

def test_round_trip_random_covers():
    rng = np.random.default_rng(15)
    failures = 0
    for seed in range(400):
        num_edges = int(rng.integers(1000, 10001))
        el = random_cover(num_edges, int(rng.integers(50, num_edges//10 + 51)), seed)
        report = capacity_report(el, 'bind')
        r = rng.uniform(0.05, 0.8)
        size = int(r * report.usable_body_bytes)
        msg = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
        password = rng.integers(0, 2**62).item()
        try:
            stego = encode(el, 'bind', msg, str(password)).stego
        except TypeExhausted:
            failures += 1
            continue
        assert same_multiset(stego, el)
        assert decode(stego, 'bind', str(password)) == msg
    assert failures <= 4

def test_round_trip_bymond_covers():
    rng = np.random.default_rng(16)
    failures = 0
    for seed in range(100):
        el = bymond_cover(40, seed=seed)
        e_min = capacity_report(el, 'bymond').e_min
        size = int(0.3 * 256 * e_min)
        msg = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
        try:
            stego = encode(el, 'bymond', msg, 'k{}'.format(seed)).stego
        except TypeExhausted:
            failures += 1
            continue
        assert same_multiset(stego, el)
        assert decode(stego, 'bymond', 'k{}'.format(seed)) == msg
    assert failures <= 1

def test_stego_key_and_password_agree():
    el = bind_cover(30, 30, 30, 30, seed=7)
    key = StegoKey('pw')
    stego = encode(el, 'bind', b'key', key).stego
    assert stego == encode(el, 'bind', b'key', 'pw').stego
    assert decode(stego, 'bind', b'pw') == b'key'
    with pytest.raises(TypeError):
        encode(el, 'bind', b'key', 1234)
