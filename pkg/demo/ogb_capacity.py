# Payload capacities of raw OGB edge lists, one row per dataset, in the
# layout of the published BIND and BYMOND capacity tables. Usage:
#
#   python ogb_capacity.py /data/ogb/ogbl_ddi/raw/edge.csv ...
#
# The raw edge.csv files have no header row.
import os
import sys
from tasktimer import TaskTimer
from netsteg import *

files = sys.argv[1:]
if not files:
    print("Usage: python ogb_capacity.py edge.csv ...", file=sys.stderr)
    sys.exit(2)

timer = TaskTimer()
rows = {'bind': [], 'bymond': []}

for fname in files:
    name = os.path.basename(os.path.dirname(os.path.dirname(fname))) or fname

    timer.task("Read edge list")
    el = read_edge_list(fname)

    timer.task("Degrees")
    deg = compute_degrees(el)

    for algo in (BIND, BYMOND):
        timer.task("Partition ({})".format(algo.name))
        p = partition_edges(el, deg, algo)
        report = estimate_capacity(p, algo, el.num_nodes, el.num_unique_pairs())
        rows[algo.name].append((name, report))


for algo, reports in rows.items():
    print("\n{}".format(algo.upper()))
    print("{:<24} {:>12} {:>12} {:>6} {:>12} {:>14} {:>14} {:>7}".format(
        "dataset", "|E|", "pairs", "E_min", "|E_min|", "B_max^est", "B_max^thr",
        "R_E/T"))
    for name, r in reports:
        print("{:<24} {:>12,} {:>12,} {:>6} {:>12,} {:>14,} {:>14,} {:>7.3f}".format(
            name, r.num_edges, r.num_unique_pairs, str(r.e_min_type), r.e_min,
            r.b_max_est_bits, r.b_max_thr_bits, r.r_e_t))

print(timer)
