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
from scipy.special import kolmogorov

class KsResult(object):
    __slots__ = ('d_stat', 'p_value', 'n_a', 'n_b')

    def __init__(self, d_stat, p_value, n_a, n_b):
        self.d_stat = d_stat
        self.p_value = p_value
        self.n_a = n_a
        self.n_b = n_b

    def as_dict(self):
        return {'d': self.d_stat, 'p': self.p_value,
                'n_a': self.n_a, 'n_b': self.n_b}

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2) + '\n'

    def __repr__(self):
        return "KsResult(d={:.6g}, p={:.6g})".format(self.d_stat, self.p_value)

def ks_two_sample(a, b):
    """
    Two-sample Kolmogorov-Smirnov test. D is the largest gap between the two
    empirical CDFs, evaluated at every observed value. The p-value is the
    asymptotic Kolmogorov survival function

        p = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2)

    at lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne))*D, ne = n_a*n_b/(n_a+n_b).
    """
    a = np.sort(np.asarray(a, dtype=float).ravel())
    b = np.sort(np.asarray(b, dtype=float).ravel())
    n_a, n_b = len(a), len(b)
    if n_a == 0 or n_b == 0:
        raise ValueError("Kolmogorov-Smirnov test needs two nonempty samples")

    values = np.concatenate((a, b))
    cdf_a = np.searchsorted(a, values, side='right') / n_a
    cdf_b = np.searchsorted(b, values, side='right') / n_b
    d = float(np.max(np.abs(cdf_a - cdf_b)))

    en = np.sqrt(n_a * n_b / (n_a + n_b))
    lam = (en + 0.12 + 0.11/en) * d
    p = float(np.clip(kolmogorov(lam), 0.0, 1.0))
    return KsResult(d, p, n_a, n_b)
