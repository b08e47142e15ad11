"""Certificates for convergent sequences, and how convergence transfers
under translation.

Run with --seed to vary the random shift; everything else is exact.
"""

import argparse
import json

from semitop import (TopologyInstance, WeightSequence, check_convergence,
                     convergence_transfer, find_limit)
from semitop.jsonio import certificate_to_json

parser = argparse.ArgumentParser()
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

T = TopologyInstance("z", WeightSequence.double_exp(8))
w = T.weights

# the canonical converging sequence: spend one credit, land on w_j
limit = (2, 5)
seq = [(1, 5 + w.value(j)) for j in range(2, 9)]
print("sequence:", seq[:3], "...")

cert = check_convergence(T, seq, limit, alpha_max=3)
print("\ncertificate for the limit", limit)
print(json.dumps(certificate_to_json(cert), indent=2))
print("revalidates:", cert.revalidate(T, seq))
print("tampered prefix revalidates:", cert.revalidate(T, seq[:-1]))

# the limit can also be recovered without being told
found = find_limit(T, seq, alpha_max=3)
assert found is not None
print("\nrecovered limit:", found[0])

# translating every term by a fixed (b, t) moves the limit the same way
shift = (1 + args.seed % 2, 3)
res = convergence_transfer(T, seq, shift, alpha_max=3)
print("\nshift by", shift, "->", res.verdict.status)
print("predicted limit of the unshifted sequence:", res.predicted_limit)
print("shifted certificate revalidates:",
      res.shifted_certificate.revalidate(
          T, [(p[0] + shift[0], p[1] + shift[1]) for p in seq]))
