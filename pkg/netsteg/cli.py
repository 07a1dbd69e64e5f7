#!/usr/bin/env python

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
The netsteg program. Usage:

    netsteg capacity --algo bind --cover cover.csv
    netsteg encode --algo bind --cover cover.csv --msg secret.bin --out stego.csv
    netsteg decode --algo bind --stego stego.csv --out secret.bin
    netsteg synthesize --msg secret.bin --ref ba:n=200,m=1,seed=7 --out stego.csv
    netsteg extract --stego stego.csv --out secret.bin
    netsteg simulate --algo bind --cover cover.csv --r 0.7:1.0:0.05 --trials 100
    netsteg compare-degrees --a ref.csv --b stego.csv

The password is taken from --password, the configuration file or the
NETSTEG_PASSWORD environment variable, in that order. Any setting may also
come from a Python-scriptable configuration file given by --config, e.g.
simulations/bind.cfg.py.

Exit codes: 0 on success, 2 on usage, configuration or input errors, 3 when
the message does not fit the cover or reference, 4 when decoding fails.
Reports and data go to stdout (or --out), diagnostics to stderr.
"""

import argparse
import contextlib
import logging
import signal
import sys

from tasktimer import TaskTimer

from netsteg.edgelist import (NetstegError, read_edge_list, save_edge_list,
                              write_edge_list, degree_sequence)
from netsteg.classify import capacity_report
from netsteg.codec import (TypeExhausted, MessageTooLarge, CorruptOrWrongKey,
                           encode, decode)
from netsteg.bynis import (ReferenceExhausted, BynisDecodeError, DEFAULT_BIAS,
                           bynis_encode, bynis_decode, parse_reference,
                           load_reference_degrees)
from netsteg.stats import ks_two_sample
from netsteg.simulate import SimConfig, parse_r_grid, run_trials
from netsteg.config import ConfigError, Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_DECODE = 4

exit_now = False
def signal_handler(signal, frame):
    global exit_now
    if exit_now:
        sys.exit(130)
    else:
        print("\nCompleting the current ratio and writing a partial report. "
              "Press Ctrl+C again to force quit.", file=sys.stderr)
        exit_now = True

_log_handler = None

def setup_logging(verbosity):
    global _log_handler
    root = logging.getLogger('netsteg')
    if _log_handler is not None:
        root.removeHandler(_log_handler)
    _log_handler = logging.StreamHandler(sys.stderr)
    _log_handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root.addHandler(_log_handler)
    root.setLevel([logging.WARNING, logging.INFO, logging.DEBUG][min(verbosity, 2)])

def delimiter_bytes(text):
    if text in ('\\t', 'tab'):
        text = '\t'
    if len(text) == 0:
        raise ConfigError("The delimiter cannot be empty")
    return text.encode('utf-8')

def emit(data, out=None):
    'Writes text or bytes to the file out, or to stdout.'
    if out is not None:
        mode = 'wb' if isinstance(data, bytes) else 'w'
        with open(out, mode) as f:
            f.write(data)
    elif isinstance(data, bytes):
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(data)

def render(report, fmt):
    if fmt == 'json':
        return report.to_json()
    if fmt == 'csv':
        return report.to_csv()
    if fmt == 'table':
        return report.to_table()
    raise ConfigError("Unknown report format '{}'".format(fmt))

def read_bytes(fname):
    with open(fname, 'rb') as f:
        return f.read()

def csv_options(args, s):
    delimiter = delimiter_bytes(s.get('delimiter', args.delimiter, ','))
    has_header = bool(s.get('has_header', args.header, False))
    return delimiter, has_header

def cmd_capacity(args, s):
    algo = s.get('algo', args.algo, 'bind')
    cover = s.require('cover', args.cover)
    fmt = s.get('format', args.format, 'json')
    out = s.get('out', args.out)
    delimiter, has_header = csv_options(args, s)

    el = read_edge_list(cover, delimiter, has_header)
    emit(render(capacity_report(el, algo), fmt), out)
    return EXIT_OK

def cmd_encode(args, s):
    algo = s.get('algo', args.algo, 'bind')
    cover = s.require('cover', args.cover)
    out = s.get('out', args.out)
    msg = read_bytes(args.msg)
    password = s.password(args.password)
    delimiter, has_header = csv_options(args, s)

    el = read_edge_list(cover, delimiter, has_header)
    outcome = encode(el, algo, msg, password)
    logger.info("Hid %d bytes in %d edges (%d carry the message)",
                len(msg), len(el), outcome.used_edges)
    if out is None:
        emit(write_edge_list(outcome.stego, delimiter=delimiter))
    else:
        save_edge_list(outcome.stego, out, delimiter)
    return EXIT_OK

def cmd_decode(args, s):
    algo = s.get('algo', args.algo, 'bind')
    out = s.get('out', args.out)
    password = s.password(args.password)
    delimiter, has_header = csv_options(args, s)

    el = read_edge_list(args.stego, delimiter, has_header)
    emit(decode(el, algo, password), out)
    return EXIT_OK

def cmd_synthesize(args, s):
    bias = int(s.get('bias', args.bias, DEFAULT_BIAS))
    out = s.get('out', args.out)
    delimiter, has_header = csv_options(args, s)
    ref = parse_reference(s.require('ref', args.ref), delimiter, has_header)

    el = bynis_encode(read_bytes(args.msg), ref, bias)
    logger.info("Synthesised %d edges between %d nodes from %s",
                len(el), el.num_nodes, ref.source)
    if out is None:
        emit(write_edge_list(el, delimiter=delimiter))
    else:
        save_edge_list(el, out, delimiter)
    return EXIT_OK

def cmd_extract(args, s):
    bias = int(s.get('bias', args.bias, DEFAULT_BIAS))
    out = s.get('out', args.out)
    delimiter, has_header = csv_options(args, s)

    el = read_edge_list(args.stego, delimiter, has_header)
    emit(bynis_decode(el, bias), out)
    return EXIT_OK

def cmd_simulate(args, s):
    global exit_now
    algo = s.get('algo', args.algo, 'bind')
    cover = s.require('cover', args.cover)
    r_grid = s.get('r', args.r)
    if r_grid is None:
        r_values = s.get('r_values', None, parse_r_grid('0.7:1.0:0.05'))
    elif isinstance(r_grid, str):
        r_values = parse_r_grid(r_grid)
    else:
        r_values = [r_grid] if isinstance(r_grid, (int, float)) else list(r_grid)
    trials = s.get('trials', args.trials, 100)
    seed = s.get('seed', args.seed, 0)
    framing = bool(s.get('framing', args.framing, False))
    fmt = s.get('format', args.format, 'json')
    out = s.get('out', args.out)
    delimiter, has_header = csv_options(args, s)

    cfg = SimConfig(algo, r_values, trials, seed, framing)
    el = read_edge_list(cover, delimiter, has_header)

    exit_now = False
    previous = signal.signal(signal.SIGINT, signal_handler)
    try:
        # TaskTimer reports progress on stdout, which is reserved for data
        with contextlib.redirect_stdout(sys.stderr):
            timer = TaskTimer() if args.timings else None
            report = run_trials(el, cfg, timer, stop=lambda: exit_now)
            if timer is not None:
                print(timer)
    finally:
        signal.signal(signal.SIGINT, previous)

    emit(render(report, fmt), out)
    return EXIT_OK

def cmd_compare_degrees(args, s):
    delimiter, has_header = csv_options(args, s)
    fmt = s.get('format', args.format, 'json')
    out = s.get('out', args.out)

    def sample(edges, degrees):
        if edges is not None:
            return degree_sequence(read_edge_list(edges, delimiter, has_header))
        return load_reference_degrees(degrees).degrees

    result = ks_two_sample(sample(args.a, args.a_degrees),
                           sample(args.b, args.b_degrees))
    if fmt == 'json':
        text = result.to_json()
    elif fmt == 'csv':
        text = "d,p,n_a,n_b\n{!r},{!r},{},{}\n".format(
            result.d_stat, result.p_value, result.n_a, result.n_b)
    elif fmt == 'table':
        text = "D = {:.6f}\np = {:.6g}\nn_a = {}\nn_b = {}\n".format(
            result.d_stat, result.p_value, result.n_a, result.n_b)
    else:
        raise ConfigError("Unknown report format '{}'".format(fmt))
    emit(text, out)
    return EXIT_OK

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="more diagnostics on stderr (-vv for debugging)")
    common.add_argument('--config', metavar='FILE',
                        help="Python configuration file (*.cfg.py)")
    common.add_argument('--delimiter', help="CSV field delimiter (default ',')")
    common.add_argument('--header', action='store_true', default=None,
                        help="skip the first row of input edge lists")
    common.add_argument('--out', metavar='FILE', help="output file (default stdout)")

    def algo_arg(p):
        p.add_argument('--algo', choices=['bind', 'bymond'], type=str.lower,
                       help="embedding algorithm (default bind)")

    def format_arg(p):
        p.add_argument('--format', choices=['json', 'csv', 'table'],
                       help="report format (default json)")

    parser = argparse.ArgumentParser(
        prog='netsteg', description="Hide messages in network edge lists.")
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    p = subparsers.add_parser('capacity', parents=[common],
                              help="payload capacity of a cover edge list")
    algo_arg(p)
    format_arg(p)
    p.add_argument('--cover', metavar='CSV')
    p.set_defaults(handler=cmd_capacity)

    p = subparsers.add_parser('encode', parents=[common],
                              help="hide a message by reordering a cover")
    algo_arg(p)
    p.add_argument('--cover', metavar='CSV')
    p.add_argument('--msg', metavar='FILE', required=True)
    p.add_argument('--password')
    p.set_defaults(handler=cmd_encode)

    p = subparsers.add_parser('decode', parents=[common],
                              help="recover a message from a stego edge list")
    algo_arg(p)
    p.add_argument('--stego', metavar='CSV', required=True)
    p.add_argument('--password')
    p.set_defaults(handler=cmd_decode)

    p = subparsers.add_parser('synthesize', parents=[common],
                              help="synthesise a stego network (BYNIS)")
    p.add_argument('--msg', metavar='FILE', required=True)
    p.add_argument('--ref', metavar='SPEC',
                   help="ba:n=200,m=1,seed=S, graph:<csv> or a degree file")
    p.add_argument('--bias', type=int)
    p.set_defaults(handler=cmd_synthesize)

    p = subparsers.add_parser('extract', parents=[common],
                              help="recover a message from a synthesised network")
    p.add_argument('--stego', metavar='CSV', required=True)
    p.add_argument('--bias', type=int)
    p.set_defaults(handler=cmd_extract)

    p = subparsers.add_parser('simulate', parents=[common],
                              help="Monte Carlo encoding success rates")
    algo_arg(p)
    format_arg(p)
    p.add_argument('--cover', metavar='CSV')
    p.add_argument('--r', metavar='GRID',
                   help="ratios as start:stop:step or a comma separated list")
    p.add_argument('--trials', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--framing', action='store_true', default=None,
                   help="include the 4-byte length header in every message")
    p.add_argument('--timings', action='store_true',
                   help="print time spent per task on stderr")
    p.set_defaults(handler=cmd_simulate)

    p = subparsers.add_parser('compare-degrees', parents=[common],
                              help="two-sample KS test of degree sequences")
    format_arg(p)
    a = p.add_mutually_exclusive_group(required=True)
    a.add_argument('--a', metavar='CSV')
    a.add_argument('--a-degrees', metavar='FILE')
    b = p.add_mutually_exclusive_group(required=True)
    b.add_argument('--b', metavar='CSV')
    b.add_argument('--b-degrees', metavar='FILE')
    p.set_defaults(handler=cmd_compare_degrees)

    return parser

def dispatch(argv=None):
    """
    Runs the netsteg program on the argument list argv and returns the exit
    code instead of exiting.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.verbose)

    try:
        s = Settings.from_file(args.config)
        return args.handler(args, s)
    except (TypeExhausted, MessageTooLarge, ReferenceExhausted) as e:
        print("netsteg: message does not fit: {}".format(e), file=sys.stderr)
        return EXIT_CAPACITY
    except (CorruptOrWrongKey, BynisDecodeError) as e:
        print("netsteg: decoding failed: {}".format(e), file=sys.stderr)
        return EXIT_DECODE
    except (NetstegError, ValueError, OSError) as e:
        print("netsteg: error: {}".format(e), file=sys.stderr)
        return EXIT_USAGE

def run():
    sys.exit(dispatch(sys.argv[1:]))

if __name__ == '__main__':
    run()
