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


import json

import numpy as np
import pytest
from scipy.stats import ks_2samp

from netsteg import ks_two_sample

def brute_force_d(a, b):
    d = 0.0
    for x in list(a) + list(b):
        fa = sum(v <= x for v in a) / len(a)
        fb = sum(v <= x for v in b) / len(b)
        d = max(d, abs(fa - fb))
    return d

def series_p(d, n_a, n_b):
    en = np.sqrt(n_a*n_b/(n_a + n_b))
    lam = (en + 0.12 + 0.11/en) * d
    if lam == 0:
        return 1.0
    k = np.arange(1, 101)
    return float(np.clip(2*np.sum((-1)**(k-1) * np.exp(-2*k**2*lam**2)), 0, 1))

def test_d_matches_brute_force():
    rng = np.random.default_rng(20)
    for _ in range(100):
        a = rng.integers(1, 12, size=int(rng.integers(1, 60)))
        b = rng.integers(1, 12, size=int(rng.integers(1, 60)))
        assert ks_two_sample(a, b).d_stat == pytest.approx(brute_force_d(a, b), abs=1e-12)

def test_d_matches_scipy():
    rng = np.random.default_rng(21)
    for _ in range(20):
        a = rng.geometric(0.3, size=200)
        b = rng.geometric(0.35, size=150)
        assert ks_two_sample(a, b).d_stat == pytest.approx(ks_2samp(a, b).statistic,
                                                           abs=1e-12)

def test_identical_samples():
    result = ks_two_sample([1, 2, 2, 3], [3, 2, 1, 2])
    assert result.d_stat == 0
    assert result.p_value == 1

def test_disjoint_samples():
    result = ks_two_sample([1, 2, 3, 4], [5, 6, 7, 8])
    assert result.d_stat == 1
    assert result.p_value < 0.05

def test_symmetric_and_order_free():
    a = [1, 1, 2, 5, 9, 3]
    b = [2, 2, 2, 4]
    ab, ba = ks_two_sample(a, b), ks_two_sample(b, a)
    assert ab.d_stat == ba.d_stat and ab.p_value == pytest.approx(ba.p_value)
    assert ks_two_sample(a[::-1], b).d_stat == ab.d_stat

def test_p_value_matches_series():
    rng = np.random.default_rng(22)
    for _ in range(50):
        a = rng.integers(1, 20, size=int(rng.integers(5, 300)))
        b = rng.integers(1, 20, size=int(rng.integers(5, 300)))
        result = ks_two_sample(a, b)
        assert result.p_value == pytest.approx(
            series_p(result.d_stat, len(a), len(b)), abs=1e-9)

def test_p_value_falls_with_d():
    a = np.arange(100)
    previous = 1.0
    for shift in range(0, 101, 10):
        p = ks_two_sample(a, a + shift).p_value
        assert p <= previous
        previous = p
    assert previous < 1e-6

def test_empty_sample():
    with pytest.raises(ValueError):
        ks_two_sample([], [1])
    with pytest.raises(ValueError):
        ks_two_sample([1], [])

def test_to_json():
    data = json.loads(ks_two_sample([1, 2], [2, 3]).to_json())
    assert set(data) == {'d', 'p', 'n_a', 'n_b'}
    assert data['n_a'] == 2 and data['d'] == 0.5
