"""Iterated limits along subsequences over (N, max), emitted as JSON.

The order of iteration matters exactly when the function is not weakly
almost periodic.  The indicator of the even numbers is the canonical
offender: evaluating f(max(s, t)) with t escaping first sees only odd
values near infinity, the other order only even ones.
"""

import json

from fractions import Fraction

from semitop import (BoundedFunction, LimitFunctional, arens_box,
                     arens_diamond, indicator_of_evens,
                     subsequence_pair_family, wap_test)

omega = LimitFunctional.evens(200)
upsilon = LimitFunctional.odds(200)

report = {}

f = indicator_of_evens(200)
report["indicator_of_evens"] = {
    "box": str(arens_box(omega, upsilon, f)),
    "diamond": str(arens_diamond(omega, upsilon, f)),
    "verdict": wap_test(f, subsequence_pair_family(20, 200)).status,
}

g = BoundedFunction.c0_plus_const({3: Fraction(5, 2)}, Fraction(1, 3))
report["bump_plus_constant"] = {
    "box": str(arens_box(omega, upsilon, g)),
    "diamond": str(arens_diamond(omega, upsilon, g)),
    "verdict": wap_test(g, subsequence_pair_family(20, 200)).status,
}

print(json.dumps(report, indent=2))
