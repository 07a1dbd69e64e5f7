# Success rate of BIND encoding as the message approaches the estimated
# capacity. Run with
#
#   netsteg simulate --config bind.cfg.py
#
# The cover is any edge list, e.g. the raw edge.csv of an OGB dataset.

algo    = 'bind'
cover   = 'edge.csv'
r       = '0.7:1.0:0.05'
trials  = 100
seed    = 2021
framing = False
format  = 'json'
out     = 'bind_report.json'
