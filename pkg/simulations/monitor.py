#!/usr/bin/env python

# Plots a report written by netsteg simulate (JSON format). Run
# ./monitor.py bind_report.json [save] [show]
#

import sys
import json

import numpy as np
import matplotlib.pyplot as plt

save = True if 'save' in sys.argv else False
show = True if 'show' in sys.argv else False
files = [a for a in sys.argv[1:] if a not in ('save', 'show')]

if not files:
    raise ValueError("Usage: monitor.py report.json [save] [show]")

dpi = 300

for fname in files:
    with open(fname) as f:
        report = json.load(f)

    algo = report['config']['algorithm']
    rows = report['rows']
    r = np.array([row['r'] for row in rows])
    rate = np.array([row['success_rate'] for row in rows])

    fig = plt.figure(1)
    plt.plot(r, rate, 'o-', label='{} ({})'.format(algo, fname))
    plt.xlabel("Message size / estimated capacity")
    plt.ylabel("Success rate")
    plt.ylim(-0.05, 1.05)
    plt.title("Encoding success rate")
    plt.legend(loc="lower left")
    plt.grid()
    if save: plt.savefig('success_rate.png', format='png', dpi=dpi)

    # Attribution of failures at the largest ratio that had any
    failed = [row for row in rows if row['failure_ratios']]
    if failed:
        row = failed[-1]
        keys = list(row['failure_ratios'])
        fig = plt.figure(2)
        fig.clear()
        plt.bar([str(k) for k in keys], [row['failure_ratios'][k] for k in keys])
        plt.xlabel("Exhausted edge type")
        plt.ylabel("Fraction of failed trials")
        plt.title("Failures at R = {:.2f} ({})".format(row['r'], algo))
        plt.grid(axis='y')
        if save: plt.savefig('failures_{}.png'.format(algo), format='png', dpi=dpi)

if show: plt.show()
