"""JSON serialization for every value the CLI reads or writes.

Conventions: rationals travel as exact "p/q" strings; integers that can be
astronomically large (weight values, instance descriptor parameters) travel
as decimal strings, and every parser here accepts either a JSON number or
a decimal string; small structural indices (mask entries, levels, map
pairs) stay plain numbers.  The adjoined infinity is the string "INF" and
the absorbing matrix zero is the string "0".
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any, Optional

from . import dyadic, topologies, wap
from .semigroups import (INF, REES_ZERO, CyclicGroup, FreeWords, IntegerGroup,
                         IntegerVectorGroup, NatInfinity, NatMax, NatMul,
                         PartialMap, PartialMaps, ReesElement, ReesMatrix,
                         SemigroupInstance, ZPlusK, ZPlusTimesZ)
from .l1 import BoundedFunction, L1Vector
from .verdicts import Verdict

SCHEMA_VERSION = "1"


def frac_to_str(q: Any) -> str:
    return str(Fraction(q))


def frac_from(j: Any) -> Fraction:
    if isinstance(j, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(j, (int, str)):
        return Fraction(j)
    raise TypeError(f"{j!r} is not an exact rational encoding")


def int_from(j: Any) -> int:
    if isinstance(j, bool):
        raise TypeError("booleans are not integers")
    if isinstance(j, int):
        return j
    if isinstance(j, str):
        return int(j, 10)
    raise TypeError(f"{j!r} is not an integer encoding")


def int_to_str(n: int) -> str:
    return str(int(n))


# ---------------------------------------------------------------------------
# groups and instances


def group_to_json(g: Any) -> dict:
    if isinstance(g, CyclicGroup):
        return {"kind": "cyclic", "modulus": int_to_str(g.modulus)}
    if isinstance(g, IntegerGroup):
        return {"kind": "Z"}
    if isinstance(g, IntegerVectorGroup):
        return {"kind": "Z^d", "dim": int_to_str(g.dim)}
    raise TypeError(f"unknown group {g!r}")


def group_from_json(d: dict) -> Any:
    kind = d["kind"]
    if kind == "cyclic":
        return CyclicGroup(int_from(d["modulus"]))
    if kind == "Z":
        return IntegerGroup()
    if kind == "Z^d":
        return IntegerVectorGroup(int_from(d["dim"]))
    raise ValueError(f"unknown group kind {kind!r}")


def instance_to_json(S: SemigroupInstance) -> dict:
    if isinstance(S, ZPlusK):
        return {"kind": "zplus_k", "k": int_to_str(S.k)}
    if isinstance(S, FreeWords):
        return {"kind": "free", "alphabet": S.alphabet}
    if isinstance(S, NatMul):
        return {"kind": "nat_mul"}
    if isinstance(S, NatMax):
        return {"kind": "nat_max"}
    if isinstance(S, NatInfinity):
        return {"kind": "nat_infty"}
    if isinstance(S, ZPlusTimesZ):
        return {"kind": "zplus_times_z"}
    if isinstance(S, ReesMatrix):
        return {"kind": "rees", "group": group_to_json(S.group),
                "I": int_to_str(S.n_rows), "J": int_to_str(S.n_cols),
                "P": [[S.group.show(e) for e in row] for row in S.sandwich]}
    if isinstance(S, PartialMaps):
        return {"kind": "partial_maps"}
    raise TypeError(f"unknown instance {S!r}")


def instance_from_json(d: dict) -> SemigroupInstance:
    kind = d["kind"]
    if kind == "zplus_k":
        return ZPlusK(int_from(d["k"]))
    if kind == "free":
        return FreeWords(d["alphabet"])
    if kind == "nat_mul":
        return NatMul()
    if kind == "nat_max":
        return NatMax()
    if kind == "nat_infty":
        return NatInfinity()
    if kind == "zplus_times_z":
        return ZPlusTimesZ()
    if kind == "rees":
        group = group_from_json(d["group"])
        P = [[group.parse(cell) for cell in row] for row in d["P"]]
        return ReesMatrix(group, int_from(d["I"]), int_from(d["J"]), P)
    if kind == "partial_maps":
        return PartialMaps()
    raise ValueError(f"unknown instance kind {kind!r}")


# ---------------------------------------------------------------------------
# elements


def partial_map_to_json(f: PartialMap) -> dict:
    return {"pairs": [[n, v] for n, v in f.pairs]}


def partial_map_from_json(d: dict) -> PartialMap:
    return PartialMap([(int_from(n), int_from(v)) for n, v in d["pairs"]])


def element_to_json(S: SemigroupInstance, e: Any) -> Any:
    if isinstance(S, (ZPlusK, ZPlusTimesZ)):
        return [int(c) for c in e]
    if isinstance(S, FreeWords):
        return e
    if isinstance(S, (NatMul, NatMax)):
        return int(e)
    if isinstance(S, NatInfinity):
        return "INF" if e is INF else int(e)
    if isinstance(S, ReesMatrix):
        if e.is_zero:
            return "0"
        return {"entry": S.group.show(e.entry), "row": e.row, "col": e.col}
    if isinstance(S, PartialMaps):
        return partial_map_to_json(e)
    raise TypeError(f"no element serialization for {S!r}")


def element_from_json(S: SemigroupInstance, j: Any) -> Any:
    if isinstance(S, (ZPlusK, ZPlusTimesZ)):
        return tuple(int_from(c) for c in j)
    if isinstance(S, FreeWords):
        return j
    if isinstance(S, (NatMul, NatMax)):
        return int_from(j)
    if isinstance(S, NatInfinity):
        return INF if j == "INF" else int_from(j)
    if isinstance(S, ReesMatrix):
        if j == "0":
            return REES_ZERO
        return ReesElement(S.group.parse(j["entry"]), int_from(j["row"]),
                           int_from(j["col"]))
    if isinstance(S, PartialMaps):
        return partial_map_from_json(j)
    raise TypeError(f"no element parser for {S!r}")


# ---------------------------------------------------------------------------
# vectors and bounded functions


def l1vector_to_json(a: L1Vector) -> dict:
    return {"terms": [{"elem": element_to_json(a.instance, e),
                       "coeff": frac_to_str(c)} for e, c in a.terms()]}


def l1vector_from_json(S: SemigroupInstance, d: dict) -> L1Vector:
    return L1Vector(S, [(element_from_json(S, t["elem"]), frac_from(t["coeff"]))
                        for t in d["terms"]])


def bounded_function_to_json(f: BoundedFunction) -> dict:
    if f.tag == "sampled":
        return {"tag": "sampled", "values": [frac_to_str(v) for v in f.values]}
    return {"tag": "c0_plus_const", "const": frac_to_str(f.const),
            "mod": [{"elem": e, "value": frac_to_str(v)}
                    for e, v in sorted(f.mod.items(), key=lambda kv: repr(kv[0]))]}


def bounded_function_from_json(d: dict) -> BoundedFunction:
    if d["tag"] == "sampled":
        return BoundedFunction.sampled([frac_from(v) for v in d["values"]])
    mod = {m["elem"] if not isinstance(m["elem"], str) else int_from(m["elem"]):
           frac_from(m["value"]) for m in d.get("mod", [])}
    return BoundedFunction.c0_plus_const(mod, frac_from(d.get("const", 0)))


# ---------------------------------------------------------------------------
# topologies, neighborhoods, points, certificates


def weights_to_json(w: topologies.WeightSequence) -> dict:
    out = {"kind": w.kind, "index_bound": w.index_bound}
    if w.kind == "explicit":
        out["values"] = [int_to_str(v) for v in w.values]
    return out


def weights_from_json(d: dict) -> topologies.WeightSequence:
    kind = d["kind"]
    if kind == "explicit":
        return topologies.WeightSequence.explicit(
            [int_from(v) for v in d["values"]])
    return topologies.WeightSequence(kind, int_from(d["index_bound"]))


def topology_to_json(T: topologies.TopologyInstance) -> dict:
    return {"base": T.base, "weights": weights_to_json(T.weights),
            "mask": list(T.mask)}


def topology_from_json(d: dict) -> topologies.TopologyInstance:
    mask = [int_from(i) for i in d["mask"]] if "mask" in d else None
    return topologies.TopologyInstance(d["base"], weights_from_json(d["weights"]),
                                       mask)


def s1_point_to_json(p: tuple) -> dict:
    a, s = p
    s_json = int(s) if isinstance(s, int) else [int(c) for c in s]
    return {"a": int(a), "s": s_json}


def s1_point_from_json(T: topologies.TopologyInstance, d: dict) -> tuple:
    s = d["s"]
    if isinstance(s, list):
        s = tuple(int_from(c) for c in s)
    else:
        s = int_from(s)
    return (int_from(d["a"]), s)


def nbhd_to_json(n: topologies.BasicNbhd) -> dict:
    s_json = int(n.s) if isinstance(n.s, int) else [int(c) for c in n.s]
    return {"a": n.a, "s": s_json, "alpha": n.alpha}


def nbhd_from_json(T: topologies.TopologyInstance, d: dict) -> topologies.BasicNbhd:
    s = d["s"]
    s = tuple(int_from(c) for c in s) if isinstance(s, list) else int_from(s)
    return topologies.BasicNbhd(int_from(d["a"]), s, int_from(d["alpha"]))


def certificate_to_json(cert: topologies.ConvergenceCertificate) -> dict:
    return {"limit": s1_point_to_json(cert.limit),
            "alpha_max": cert.alpha_max,
            "thresholds": {str(k): v for k, v in sorted(cert.thresholds.items())},
            "witnesses": [list(w) if w is not None else None
                          for w in cert.witnesses],
            "prefix_len": cert.prefix_len}


def certificate_from_json(T: topologies.TopologyInstance,
                          d: dict) -> topologies.ConvergenceCertificate:
    return topologies.ConvergenceCertificate(
        limit=s1_point_from_json(T, d["limit"]),
        alpha_max=int_from(d["alpha_max"]),
        thresholds={int_from(k): int_from(v) for k, v in d["thresholds"].items()},
        witnesses=tuple(tuple(w) if w is not None else None
                        for w in d["witnesses"]),
        prefix_len=int_from(d["prefix_len"]))


def dyadic_point_to_json(p: dyadic.DyadicPoint) -> dict:
    return {"exponents": list(p.exponents), "value": frac_to_str(p.value)}


def dyadic_point_from_json(d: dict) -> dyadic.DyadicPoint:
    return dyadic.DyadicPoint(tuple(int_from(m) for m in d["exponents"]))


def limit_functional_to_json(phi: wap.LimitFunctional) -> dict:
    return {"along": list(phi.along), "horizon": phi.horizon}


def limit_functional_from_json(d: dict) -> wap.LimitFunctional:
    return wap.LimitFunctional(tuple(int_from(p) for p in d["along"]),
                               int_from(d["horizon"]))


# ---------------------------------------------------------------------------
# generic conversion for report payloads


_BIG = 1 << 53


def to_jsonable(obj: Any) -> Any:
    """Best-effort conversion of verdicts and witnesses to JSON values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < _BIG else int_to_str(obj)
    if isinstance(obj, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(obj, Fraction):
        return frac_to_str(obj)
    if obj is INF:
        return "INF"
    if isinstance(obj, Verdict):
        return {"status": obj.status, "witness": to_jsonable(obj.witness),
                "detail": obj.detail}
    if isinstance(obj, wap.WAPVerdict):
        return {"status": obj.status, "witness": to_jsonable(obj.witness),
                "detail": obj.detail}
    if isinstance(obj, topologies.ConvergenceCertificate):
        return certificate_to_json(obj)
    if isinstance(obj, topologies.BasicNbhd):
        return nbhd_to_json(obj)
    if isinstance(obj, wap.LimitFunctional):
        return limit_functional_to_json(obj)
    if isinstance(obj, PartialMap):
        return partial_map_to_json(obj)
    if isinstance(obj, ReesElement):
        return "0" if obj.is_zero else {"entry": repr(obj.entry),
                                        "row": obj.row, "col": obj.col}
    if isinstance(obj, L1Vector):
        return l1vector_to_json(obj)
    if isinstance(obj, BoundedFunction):
        return bounded_function_to_json(obj)
    if isinstance(obj, dyadic.DyadicPoint):
        return dyadic_point_to_json(obj)
    if isinstance(obj, SemigroupInstance):
        return instance_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    return repr(obj)
