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
Monte Carlo encoding experiments. For every ratio R between the message size
and the estimated capacity, random messages are drawn and it is checked
whether the cover has enough edges of every type to carry them. A failed
trial is attributed to the type that runs out first in the message stream.
The check is the same counting predicate the encoder uses, so no stego edge
list is built.
"""

import csv
import io
import json
import logging
from collections import Counter

import numpy as np

from netsteg.edgelist import compute_degrees
from netsteg.classify import get_algorithm, partition_edges
from netsteg.keyperm import splitmix64_at
from netsteg.codec import frame, first_exhausted

logger = logging.getLogger(__name__)

def parse_r_grid(text):
    """
    Parses 'start:stop:step' into an inclusive list of ratios, or a comma
    separated list of ratios, e.g. '0.7:1.0:0.05' or '0.8,0.9,1.0'.
    """
    if ':' in text:
        start, stop, step = (float(x) for x in text.split(':'))
        if step <= 0 or stop < start:
            raise ValueError("Bad ratio grid {!r}".format(text))
        count = int(round((stop - start) / step)) + 1
        return [round(start + k*step, 10) for k in range(count)]
    return [float(x) for x in text.split(',')]

class SimConfig(object):
    """
    Parameters of an encoding experiment:

        algorithm - 'bind' or 'bymond'
        r_values  - ratios R of message size to estimated capacity, in (0, 1]
        trials    - number of random messages per ratio
        meta_seed - seed from which all per-trial seeds are derived
        framing   - whether messages carry the 4-byte length header
    """

    def __init__(self, algorithm, r_values, trials=100, meta_seed=0, framing=False):
        self.algorithm = get_algorithm(algorithm)
        self.r_values = [float(r) for r in r_values]
        self.trials = int(trials)
        self.meta_seed = int(meta_seed)
        self.framing = bool(framing)

        if not self.r_values or not all(0 < r <= 1 for r in self.r_values):
            raise ValueError("Ratios must lie in (0, 1], got {}".format(r_values))
        if self.trials < 1:
            raise ValueError("Need at least one trial per ratio")

    def as_dict(self):
        return {'algorithm': self.algorithm.name, 'r_values': self.r_values,
                'trials': self.trials, 'meta_seed': self.meta_seed,
                'framing': self.framing}

def message_size(r, algorithm, e_min):
    """
    Message bytes for ratio r: r*num_types*|E_min| symbols, rounded down to a
    whole byte. That is r*4*|E_min| two-bit symbols for BIND and
    r*256*|E_min| bytes for BYMOND.
    """
    algorithm = get_algorithm(algorithm)
    bits = r * algorithm.num_types * e_min * algorithm.bits_per_symbol
    return int(np.floor(bits/8 + 1e-9))

def trial_seeds(meta_seed, start, count):
    'Seeds of trials start, ..., start+count-1 (SplitMix64 of meta_seed).'
    return splitmix64_at(meta_seed, np.arange(start, start+count)).tolist()

def random_message(size, seed):
    'Uniformly random message of size bytes.'
    rng = np.random.default_rng(seed)
    return rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()

def trial_message(cfg, r_index, trial, size):
    'The message of one trial, as drawn by run_trials().'
    seed, = trial_seeds(cfg.meta_seed, r_index*cfg.trials + trial, 1)
    return random_message(size, seed)

def simulate_trial(supply, algorithm, msg, framing=False):
    """
    Returns None if msg can be encoded given the number of edges of each
    type (supply), otherwise the code of the type that runs out first.
    """
    algorithm = get_algorithm(algorithm)
    data = frame(msg) if framing else msg
    hit = first_exhausted(algorithm.symbols(data), supply)
    return None if hit is None else hit[1]

class SimReport(object):
    """
    Success rates and failure attribution per ratio. Each row is a dict with
    r, trials, successes, success_rate, message_bytes, message_symbols,
    failures (type -> count) and failure_ratios (type -> fraction of the
    failures at that ratio).
    """

    def __init__(self, config, histogram, e_min_type, e_min, rows):
        self.config = config
        self.histogram = histogram
        self.e_min_type = e_min_type
        self.e_min = e_min
        self.rows = rows

    def success_rate(self, r):
        for row in self.rows:
            if abs(row['r'] - r) < 1e-9:
                return row['success_rate']
        raise KeyError(r)

    def as_dict(self):
        return {'config': self.config.as_dict(),
                'e_min_type': self.e_min_type,
                'e_min': self.e_min,
                'histogram': self.histogram,
                'rows': self.rows}

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2) + '\n'

    def failed_types(self):
        algorithm = self.config.algorithm
        failed = set()
        for row in self.rows:
            failed.update(row['failures'])
        return sorted(failed, key=algorithm.code)

    def to_csv(self):
        failed = self.failed_types()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['algo', 'R', 'trials', 'successes', 'rate'] +
                        ['fail_{}'.format(t) for t in failed])
        for row in self.rows:
            writer.writerow([self.config.algorithm.name, row['r'], row['trials'],
                             row['successes'], row['success_rate']] +
                            [row['failures'].get(t, 0) for t in failed])
        return buf.getvalue()

    def to_table(self):
        lines = ["Algorithm: {}, E_min = {} ({} edges)".format(
                     self.config.algorithm.name, self.e_min_type, self.e_min),
                 "",
                 "{:>8} {:>8} {:>10} {:>8}  {}".format(
                     "R", "bytes", "successes", "rate", "failures")]
        for row in self.rows:
            failures = ', '.join('{}:{}'.format(k, v)
                                 for k, v in row['failures'].items())
            lines.append("{:>8.3f} {:>8} {:>10} {:>8.3f}  {}".format(
                row['r'], row['message_bytes'],
                '{}/{}'.format(row['successes'], row['trials']),
                row['success_rate'], failures or '-'))
        return '\n'.join(lines) + '\n'

def run_trials(el, cfg, timer=None, stop=None):
    """
    Runs the experiment described by the SimConfig cfg on the cover el.
    Identical inputs give identical reports: every trial has its own seed
    derived from cfg.meta_seed and its position.

    timer may be a tasktimer.TaskTimer to account time per task. stop may be
    a callable; it is polled before each ratio and a true result ends the
    experiment early with the rows completed so far.
    """
    if len(el) == 0:
        raise ValueError("Cannot simulate on an empty edge list")
    algorithm = cfg.algorithm

    deg = compute_degrees(el)
    part = partition_edges(el, deg, algorithm)
    supply = part.counts
    e_min_code = int(np.argmin(supply))
    e_min = int(supply[e_min_code])

    indices = range(len(cfg.r_values))
    if timer is not None:
        indices = timer.range(len(cfg.r_values))

    rows = []
    for r_index in indices:
        if stop is not None and stop():
            logger.warning("Stopping early after %d of %d ratios",
                           len(rows), len(cfg.r_values))
            break

        r = cfg.r_values[r_index]
        size = message_size(r, algorithm, e_min)
        seeds = trial_seeds(cfg.meta_seed, r_index*cfg.trials, cfg.trials)
        failures = Counter()

        for seed in seeds:
            if timer is not None: timer.task("Draw messages")
            msg = random_message(size, seed)
            if timer is not None: timer.task("Count edge demand")
            code = simulate_trial(supply, algorithm, msg, cfg.framing)
            if code is not None:
                failures[code] += 1

        num_failed = sum(failures.values())
        successes = cfg.trials - num_failed
        rows.append({
            'r': r,
            'trials': cfg.trials,
            'successes': successes,
            'success_rate': successes / cfg.trials,
            'message_bytes': size,
            'message_symbols': size * 8 // algorithm.bits_per_symbol,
            'failures': {algorithm.label(t): failures[t] for t in sorted(failures)},
            'failure_ratios': {algorithm.label(t): failures[t] / num_failed
                               for t in sorted(failures)},
        })
        logger.info("R=%.3f: %d/%d successful", r, successes, cfg.trials)

    return SimReport(cfg, part.histogram(), algorithm.label(e_min_code), e_min, rows)
