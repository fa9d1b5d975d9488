"""
The verification suite
======================

default_suite() runs every check with a fixed seed and returns
structured CheckReports: claim, computed values, reference, a single
normalized discrepancy, and pass/fail.  The same suite backs the
command line (`holospace check`).
"""

import json

from holospace import default_suite
from holospace.verify import reports_to_json_lines, reports_to_table

reports = default_suite(quick=True)

# the human-readable rendering
print(reports_to_table(reports))

failed = [r.check_id for r in reports if not r.passed]
print(f"\n{len(reports)} checks, {len(failed)} failed")

# every report is one JSON line; round-tripping is part of the contract
line = reports_to_json_lines(reports[:1])
record = json.loads(line)
print("\nfirst report as JSON keys:", sorted(record))
print("claim:", record["claim"])

# the CLI exposes the same suite plus single-shot commands:
#   holospace check --format json
#   holospace norm --symbol monomial:0.3,0,2 --space s2
#   holospace spectrum --symbol monomial:0.3,0,2
#   holospace adjoint --symbol moebius:2,0,1,0,1,0,4,0 --space s2tilde
#   holospace figure --out norms.csv
