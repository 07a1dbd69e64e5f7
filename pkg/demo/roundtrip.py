# Hides a short text in a Barabasi-Albert network with BIND and BYMOND and
# recovers it again.
import numpy as np
import networkx as nx
from netsteg import *

text = "Meet me at the usual place at noon.".encode()
password = "correct horse battery staple"

g = nx.barabasi_albert_graph(20000, 3, seed=42)
cover = EdgeList.from_records((str(a), str(b)) for a, b in g.edges())

for algo in (BIND, BYMOND):
    report = capacity_report(cover, algo)
    print("{}: |E| = {}, E_min = {} ({} edges), usable body {} bytes".format(
        algo.name, report.num_edges, report.e_min_type, report.e_min,
        report.usable_body_bytes))

    try:
        stego = encode(cover, algo, text, password).stego
    except TypeExhausted as e:
        print("  cannot hide the text: {}".format(e))
        continue

    assert sorted(stego) == sorted(cover)
    print("  first stego edges: {}".format(stego.records()[:3]))
    print("  decoded:           {}".format(decode(stego, algo, password)))
    try:
        print("  wrong password:    {!r}".format(decode(stego, algo, "guess")[:20]))
    except CorruptOrWrongKey as e:
        print("  wrong password:    {}".format(e))
