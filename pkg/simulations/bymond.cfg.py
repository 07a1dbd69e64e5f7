# Success rate of BYMOND encoding as the message approaches the estimated
# capacity. Run with
#
#   netsteg simulate --config bymond.cfg.py

import numpy as np

algo     = 'bymond'
cover    = 'edge.csv'
r_values = [float(r) for r in np.round(np.arange(0.70, 1.0001, 0.05), 2)]
trials   = 100
seed     = 2021
format   = 'json'
out      = 'bymond_report.json'
