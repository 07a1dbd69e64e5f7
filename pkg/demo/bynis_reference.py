# Synthesises stego networks with BYNIS from Barabasi-Albert reference
# networks of increasing density and compares the degree distributions of
# reference and stego networks with the two-sample Kolmogorov-Smirnov test.
# Usage:
#
#   python bynis_reference.py [num_nodes] [show]
#
import sys
import numpy as np
import networkx as nx
import matplotlib.pyplot as plt
from netsteg import *

num_nodes = int(sys.argv[1]) if len(sys.argv) > 1 and sys.argv[1].isdigit() else 200
show = 'show' in sys.argv
seed = 1

#==============================================================================
# REFERENCE NETWORKS
#------------------------------------------------------------------------------

models = {'Barabasi-Albert, m={}'.format(m):
              nx.barabasi_albert_graph(num_nodes, m, seed=seed)
          for m in (1, 2, 3)}

#==============================================================================
# SYNTHESIS AND COMPARISON
#------------------------------------------------------------------------------

rng = np.random.default_rng(seed)
print("{:<22} {:>6} {:>6} {:>8} {:>10}".format("model", "|V|", "|E|", "D", "p"))

for i, (name, g) in enumerate(models.items()):
    cover = EdgeList.from_records((str(a), str(b)) for a, b in g.edges())
    ref = reference_from_graph(cover, name)

    # Half as many bytes as the reference has edges
    msg = rng.integers(0, 256, size=ref.total()//4, dtype=np.uint8).tobytes()
    stego = bynis_encode(msg, ref)
    assert bynis_decode(stego) == msg

    result = ks_two_sample(ref.degrees, degree_sequence(stego))
    print("{:<22} {:>6} {:>6} {:>8.4f} {:>10.4g}".format(
        name, len(ref), len(stego), result.d_stat, result.p_value))

    plt.figure(i+1)
    for label, degrees in (('reference', ref.degrees),
                           ('stego', degree_sequence(stego))):
        k, counts = np.unique(degrees, return_counts=True)
        plt.loglog(k, counts/counts.sum(), 'o', label=label)
    plt.xlabel("Degree")
    plt.ylabel("Fraction of nodes")
    plt.title(name)
    plt.legend(loc="upper right")
    plt.grid()

if show: plt.show()
