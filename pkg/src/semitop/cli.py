"""Command line front end.

Two modes share one executable:

* ``semitop --suite NAME [--params JSON] [--seed N] [--jobs N] [--out PATH]``
  runs a registered suite and writes its report as JSON.
* ``semitop member|converge|distinguish|waptest --params JSON`` answers a
  single query described entirely by the params payload.

Exit codes: 0 when everything determined passed, 1 when any determined
failure (or a negative answer to a query) is present, 2 when something was
left undetermined at the given horizon, 3 for usage errors such as an
unknown suite, malformed JSON, or out-of-range parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio, topologies
from .suites import SUITES, SuiteError, run_suite
from .verdicts import (DISTINCT, FAIL, FOUND, NOT_APPLICABLE,
                       NOT_FOUND_AT_HORIZON, PASS, UNDETERMINED, VACUOUS)
from .wap import NOT_WAP, WAP_CONSISTENT, subsequence_pair_family, wap_test

_EXIT_OK = 0
_EXIT_FAIL = 1
_EXIT_UNDETERMINED = 2
_EXIT_USAGE = 3

_STATUS_EXIT = {
    PASS: _EXIT_OK, FOUND: _EXIT_OK, DISTINCT: _EXIT_OK, VACUOUS: _EXIT_OK,
    NOT_APPLICABLE: _EXIT_OK, WAP_CONSISTENT: _EXIT_OK,
    FAIL: _EXIT_FAIL, NOT_WAP: _EXIT_FAIL,
    UNDETERMINED: _EXIT_UNDETERMINED,
    NOT_FOUND_AT_HORIZON: _EXIT_UNDETERMINED,
    True: _EXIT_OK, False: _EXIT_FAIL, None: _EXIT_UNDETERMINED,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _member(params: dict, seed: int) -> tuple:
    T = jsonio.topology_from_json(params["topology"])
    nbhd = jsonio.nbhd_from_json(T, params["nbhd"])
    point = jsonio.s1_point_from_json(T, params["point"])
    res = T.member(nbhd, point)
    status = res.status
    payload = {"status": status, "indices": list(res.indices or ()),
               "reason": res.reason}
    return payload, _STATUS_EXIT[status]


def _converge(params: dict, seed: int) -> tuple:
    T = jsonio.topology_from_json(params["topology"])
    seq = [jsonio.s1_point_from_json(T, p) for p in params["sequence"]]
    alpha_max = int(params.get("alpha_max", 3))
    if "limit" in params:
        limit = jsonio.s1_point_from_json(T, params["limit"])
        out = topologies.check_convergence(T, seq, limit, alpha_max)
        if isinstance(out, topologies.ConvergenceCertificate):
            return ({"status": PASS,
                     "certificate": jsonio.certificate_to_json(out)},
                    _EXIT_OK)
        return ({"status": out.status, "witness": jsonio.to_jsonable(out.witness),
                 "detail": out.detail}, _STATUS_EXIT[out.status])
    got = topologies.find_limit(T, seq, alpha_max)
    if got is None:
        return ({"status": NOT_FOUND_AT_HORIZON,
                 "detail": "no limit found among the unshift candidates"},
                _EXIT_UNDETERMINED)
    limit, cert = got
    return ({"status": PASS, "limit": jsonio.s1_point_to_json(limit),
             "certificate": jsonio.certificate_to_json(cert)}, _EXIT_OK)


def _distinguish(params: dict, seed: int) -> tuple:
    weights = jsonio.weights_from_json(params["weights"])
    mask1 = [int(i) for i in params["mask1"]]
    mask2 = [int(i) for i in params["mask2"]]
    horizon = int(params.get("horizon", weights.index_bound))
    res = topologies.distinguish_topologies(weights, mask1, mask2, horizon)
    return ({"status": res.status, "witness": jsonio.to_jsonable(res.witness),
             "detail": res.detail}, _STATUS_EXIT[res.status])


def _waptest(params: dict, seed: int) -> tuple:
    f = jsonio.bounded_function_from_json(params["function"])
    horizon = int(params.get("horizon", 200))
    if "pairs" in params:
        pairs = [(jsonio.limit_functional_from_json(a),
                  jsonio.limit_functional_from_json(b))
                 for a, b in params["pairs"]]
    else:
        pairs = subsequence_pair_family(int(params.get("count", 20)),
                                        horizon, seed=seed)
    res = wap_test(f, pairs)
    return ({"status": res.status, "witness": jsonio.to_jsonable(res.witness),
             "detail": res.detail}, _STATUS_EXIT[res.status])


_COMMANDS = {"member": _member, "converge": _converge,
             "distinguish": _distinguish, "waptest": _waptest}


def _emit(payload: dict, out_path) -> None:
    text = json.dumps(payload, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = _Parser(prog="semitop",
                     description="verification suites and single queries for "
                                 "semigroup convolution algebras")
    parser.add_argument("command", nargs="?", choices=sorted(_COMMANDS),
                        help="single-query mode; omit to run a suite")
    parser.add_argument("--suite", metavar="NAME",
                        help="suite to run; one of " + ", ".join(sorted(SUITES)))
    parser.add_argument("--params", metavar="JSON", default="{}",
                        help="JSON object with suite or query parameters")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for every randomized construction")
    parser.add_argument("--out", metavar="PATH",
                        help="write the JSON report here instead of stdout")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker threads for independent checks")
    args = parser.parse_args(argv)

    if (args.command is None) == (args.suite is None):
        parser.error("exactly one of a command or --suite is required")
    try:
        params = json.loads(args.params)
        if not isinstance(params, dict):
            raise SuiteError("--params must be a JSON object")
    except (json.JSONDecodeError, SuiteError) as exc:
        print(f"semitop: error: {exc}", file=sys.stderr)
        return _EXIT_USAGE

    if args.command is not None:
        try:
            result, code = _COMMANDS[args.command](params, args.seed)
        except (KeyError, TypeError, ValueError) as exc:
            print(f"semitop: error: bad query parameters: {exc!r}",
                  file=sys.stderr)
            return _EXIT_USAGE
        payload = {"schema_version": jsonio.SCHEMA_VERSION,
                   "command": args.command, "seed": args.seed}
        payload.update(result)
        _emit(payload, args.out)
        return code

    try:
        report = run_suite(args.suite, params, seed=args.seed, jobs=args.jobs)
    except SuiteError as exc:
        print(f"semitop: error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    _emit(report, args.out)
    return _STATUS_EXIT[report["overall"]]


if __name__ == "__main__":
    sys.exit(main())
