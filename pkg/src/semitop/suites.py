"""Named verification suites: bundled check lists behind the CLI.

Every check normalizes its outcome to a PASS/FAIL/UNDETERMINED verdict (a
check expecting an inner failure, such as a negative control, passes when
the failure arrives as designed).  Reports are deterministic given the
suite parameters and the seed; timings are informational only.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations

from . import dyadic, obstructions, topologies
from .jsonio import SCHEMA_VERSION, to_jsonable
from .l1 import BoundedFunction, L1Vector
from .semigroups import (INF, CyclicGroup, FreeWords, IntegerGroup, NatInfinity,
                         NatMax, NatMul, PartialMap, PartialMaps, ReesMatrix,
                         ZPlusK, ZPlusTimesZ, associativity_window,
                         is_cancellative_window,
                         is_finitely_left_divisible_window,
                         is_weakly_cancellative_window, length)
from .verdicts import (DISTINCT, FAIL, FOUND, NOT_APPLICABLE, PASS, UNDETERMINED,
                       VACUOUS, NotReachable, Verdict, failed, passed)
from .wap import (NOT_WAP, WAP_CONSISTENT, LimitFunctional, SharpnessWitness,
                  arens_box, arens_diamond, counterexample_x, eval_limit,
                  indicator_of_evens, random_c0_plus_const,
                  subsequence_pair_family, telescoping_check, wap_test)


class SuiteError(ValueError):
    """Unknown suite or out-of-range parameters: a usage error."""


def _param(params: dict, key: str, default: int, lo: int, hi: int) -> int:
    v = params.get(key, default)
    if isinstance(v, str):
        v = int(v)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SuiteError(f"parameter {key!r} must be an integer")
    if not lo <= v <= hi:
        raise SuiteError(f"parameter {key!r} = {v} outside the safe range "
                         f"[{lo}, {hi}]")
    return v


def _wrap(expected_status: str, inner: Verdict, extra: dict = None) -> Verdict:
    """Pass exactly when the inner verdict carries the expected status."""
    witness = {"inner": inner}
    if extra:
        witness.update(extra)
    if inner.status == expected_status:
        return passed(witness=witness,
                      detail=f"inner verdict is {expected_status} as required")
    return failed(witness=witness,
                  detail=f"expected {expected_status}, got {inner.status}")


# ---------------------------------------------------------------------------
# suite builders; each returns a list of (check_id, thunk)


def _suite_lemma_technical(params: dict, seed: int) -> list:
    a_max = _param(params, "a_max", 4, 1, 5)
    alpha_max = _param(params, "alpha_max", 3, 1, 4)
    beta_max = _param(params, "beta_max", 8, 1, 10)
    max_exp = _param(params, "max_exp", 12, 2, 14)

    def sweep():
        return dyadic.interval_identity_sweep(a_max, alpha_max, beta_max, max_exp)

    def model_coordinates():
        T = topologies.TopologyInstance(
            "z", topologies.WeightSequence.double_exp(max_exp))
        total = 0
        for a in sorted({1, a_max}):
            for alpha in sorted({1, alpha_max}):
                nbhd = topologies.BasicNbhd(a, 0, alpha)
                space = dyadic.XSpace(a, alpha, max_exp)
                image = {dyadic.psi(point, nbhd, T)
                         for point, _ in T.basic_points(nbhd)}
                expected = set(space.points())
                if image != expected or len(image) != space.expected_count():
                    return failed(witness={
                        "a": a, "alpha": alpha,
                        "only_expected": sorted(
                            p.exponents for p in expected - image)[:3],
                        "only_image": sorted(
                            p.exponents for p in image - expected)[:3]})
                total += len(image)
        return passed(witness={"points_mapped": total},
                      detail="neighborhood members map exactly onto the "
                             "dyadic model points")

    return [("interval-identity-sweep", sweep),
            ("model-coordinates-match", model_coordinates)]


def _tz(bound: int) -> topologies.TopologyInstance:
    return topologies.TopologyInstance(
        "z", topologies.WeightSequence.double_exp(bound))


def _todd(bound: int) -> topologies.TopologyInstance:
    return topologies.TopologyInstance(
        "odd_nat", topologies.WeightSequence.odd_primes(bound))


def _random_center(T: topologies.TopologyInstance, rng: random.Random,
                   max_terms: int = 2):
    idxs = rng.sample(T.mask, rng.randint(0, min(max_terms, len(T.mask))))
    total = T.weight_total(idxs)
    if T.base == "z" and rng.random() < 0.5:
        return -total
    return total


def _suite_gen_con_one(params: dict, seed: int) -> list:
    bound = _param(params, "index_bound", 6, 2, 8)
    a_max = _param(params, "a_max", 3, 0, 3)
    h_a_max = _param(params, "hausdorff_a_max", 2, 0, 2)
    triples = _param(params, "triples", 100, 10, 300)
    Tz = _tz(bound)
    Todd = _todd(bound)

    def base_property():
        w = Tz.weights
        centers = [0]
        for i in Tz.mask:
            centers += [w.value(i), -w.value(i)]
        family = [topologies.BasicNbhd(a, s, alpha)
                  for a in range(0, a_max + 1)
                  for s in centers
                  for alpha in range(1, bound + 1)]
        intersecting = 0
        points_checked = 0
        for u1, u2 in combinations(family, 2):
            res = topologies.base_property_check(Tz, u1, u2)
            if res.status != PASS:
                return Verdict(res.status,
                               witness={"u1": u1, "u2": u2,
                                        "inner": res.witness},
                               detail=res.detail)
            if res.witness["common_points"]:
                intersecting += 1
                points_checked += res.witness["common_points"]
        n = len(family)
        return passed(witness={"family": n, "pairs": n * (n - 1) // 2,
                               "intersecting_pairs": intersecting,
                               "common_points_checked": points_checked})

    def hausdorff():
        w = Tz.weights
        uvals = {0}
        for i in Tz.mask:
            uvals.add(w.value(i))
            uvals.add(-w.value(i))
        for i, j in combinations(Tz.mask, 2):
            for si in (1, -1):
                for sj in (1, -1):
                    uvals.add(si * w.value(i) + sj * w.value(j))
        points = [(x, u) for x in range(0, h_a_max + 1) for u in sorted(uvals)]
        pairs = 0
        for p, q in combinations(points, 2):
            res = topologies.hausdorff_witness(Tz, p, q)
            pairs += 1
            if res.status != PASS:
                return Verdict(res.status, witness={"x": p, "y": q,
                                                    "inner": res.witness},
                               detail=res.detail)
        return passed(witness={"points": len(points), "pairs": pairs},
                      detail="disjoint separating sets found for every pair")

    def separate_continuity(T, tag):
        rng = random.Random(f"{seed}:sep:{tag}")
        total_points = 0
        for i in range(triples):
            alpha = rng.randint(1, min(4, bound))
            center = (rng.randint(0, a_max), _random_center(T, rng))
            shift = (rng.randint(0, 2), abs(_random_center(T, rng))
                     if T.base != "odd_nat" else _random_center(T, rng))
            if not T.in_S(shift[1]):
                shift = (shift[0], T.s_identity)
            res = topologies.separate_continuity_identity(T, shift, center, alpha)
            if res.status != PASS:
                return Verdict(res.status,
                               witness={"case": i, "shift": shift,
                                        "center": center, "alpha": alpha,
                                        "inner": res.witness},
                               detail=res.detail)
            total_points += res.witness["points_checked"]
        return passed(witness={"triples": triples,
                               "points_checked": total_points})

    return [("base-property-family", base_property),
            ("hausdorff-exhaustive", hausdorff),
            ("separate-continuity-z",
             lambda: separate_continuity(Tz, "z")),
            ("separate-continuity-odd",
             lambda: separate_continuity(Todd, "odd"))]


def _suite_gen_con_two(params: dict, seed: int) -> list:
    bound = _param(params, "index_bound", 12, 4, 14)
    cases = _param(params, "cases", 25, 5, 100)
    alpha_max = _param(params, "alpha_max", 4, 1, 6)
    Tz = _tz(bound)
    Todd = _todd(bound)

    def transfer(T, tag):
        rng = random.Random(f"{seed}:transfer:{tag}")
        revalidated = 0
        for i in range(cases):
            c = rng.randint(1, 2)
            v = _random_center(T, rng, max_terms=1)
            start = rng.randint(1, 3)
            terms = [(c - 1, T.s_op(v, T.weights.value(j)))
                     for j in range(start, bound + 1)]
            shift = (rng.randint(0, 2), abs(_random_center(T, rng, 1))
                     if T.base == "z" else _random_center(T, rng, 1))
            if not T.in_S(shift[1]):
                shift = (shift[0], T.s_identity)
            explicit = (i % 2 == 0)
            shifted_limit = (c + shift[0], T.s_op(v, shift[1])) if explicit else None
            res = topologies.convergence_transfer(
                T, terms, shift, alpha_max, shifted_limit=shifted_limit)
            if res.verdict.status != PASS:
                return Verdict(res.verdict.status,
                               witness={"case": i, "shift": shift,
                                        "inner": res.verdict.witness},
                               detail=res.verdict.detail)
            if res.predicted_limit != (c, v):
                return failed(witness={"case": i,
                                       "predicted": res.predicted_limit,
                                       "constructed": (c, v)})
            shifted = [(p[0] + shift[0], T.s_op(p[1], shift[1])) for p in terms]
            if not (res.certificate.revalidate(T, terms)
                    and res.shifted_certificate.revalidate(T, shifted)):
                return failed(witness={"case": i},
                              detail="certificate failed to revalidate")
            if res.division_data is not None and res.division_data.status == FAIL:
                return failed(witness={"case": i,
                                       "division": res.division_data})
            revalidated += 1
        return passed(witness={"cases": cases, "revalidated": revalidated})

    def transport():
        S = NatMul()
        rng = random.Random(f"{seed}:transport")
        for _ in range(200):
            p1 = (rng.randint(0, 5), 2 * rng.randint(0, 40) + 1)
            p2 = (rng.randint(0, 5), 2 * rng.randint(0, 40) + 1)
            prod = (p1[0] + p2[0], p1[1] * p2[1])
            lhs = topologies.odd_pair_to_natural(prod)
            rhs = S.product(topologies.odd_pair_to_natural(p1),
                            topologies.odd_pair_to_natural(p2))
            if lhs != rhs:
                return failed(witness={"p1": p1, "p2": p2})
            if topologies.natural_to_odd_pair(lhs) != prod:
                return failed(witness={"roundtrip": lhs})
        return passed(witness={"samples": 200},
                      detail="pair encoding is an isomorphism onto "
                             "multiplication of naturals")

    return [("transfer-z", lambda: transfer(Tz, "z")),
            ("transfer-odd", lambda: transfer(Todd, "odd")),
            ("nat-mul-transport", transport)]


def _suite_star_condition(params: dict, seed: int) -> list:
    de_bound = _param(params, "double_exp_bound", 6, 2, 12)
    op_bound = _param(params, "odd_primes_bound", 8, 2, 16)
    s_window = _param(params, "s_window", 10_000, 100, 100_000)

    def star_double():
        return topologies.verify_star(
            topologies.WeightSequence.double_exp(de_bound), max_multiplicity=2)

    def star_odd():
        return topologies.verify_star(
            topologies.WeightSequence.odd_primes(op_bound), max_multiplicity=1)

    def star_negative():
        inner = topologies.verify_star(
            topologies.WeightSequence.explicit([1, 2, 3]))
        res = _wrap(FAIL, inner)
        if res and inner.witness["value"] != 3:
            return failed(witness={"inner": inner},
                          detail="collision found at an unexpected value")
        return res

    def division_z():
        return topologies.verify_star_star(_tz(de_bound), 5, s_window=s_window)

    def division_odd():
        return topologies.verify_star_star(_todd(op_bound), 9, s_window=s_window)

    def division_zplus():
        T = topologies.TopologyInstance(
            "zplus", topologies.WeightSequence.double_exp(de_bound))
        return _wrap(NOT_APPLICABLE, topologies.verify_star_star(T, 5))

    return [("star-double-exp", star_double),
            ("star-odd-primes", star_odd),
            ("star-negative-control", star_negative),
            ("division-z", division_z),
            ("division-odd", division_odd),
            ("division-zplus-not-applicable", division_zplus)]


def _suite_remark4_continuum(params: dict, seed: int) -> list:
    n_masks = _param(params, "masks", 20, 2, 30)
    horizon = _param(params, "horizon", 12, 4, 16)

    def pairwise_distinct():
        masks = topologies.mask_family(n_masks, horizon, seed=seed)
        w = topologies.WeightSequence.double_exp(horizon)
        strong = 0
        checked = 0
        sample = None
        for m1, m2 in combinations(masks, 2):
            res = topologies.distinguish_topologies(w, m1, m2, horizon)
            if res.status != DISTINCT:
                return Verdict(res.status,
                               witness={"mask1": list(m1), "mask2": list(m2),
                                        "inner": res.witness},
                               detail=res.detail)
            checked += 1
            strong += bool(res.witness["strong"])
            if sample is None:
                sample = res.witness["witnesses"][0]
        expected = n_masks * (n_masks - 1) // 2
        if checked != expected:
            return failed(witness={"checked": checked, "expected": expected})
        return passed(witness={"pairs_distinct": checked, "strong": strong,
                               "expected": expected, "sample_witness": sample,
                               "masks": [list(m) for m in masks]})

    return [("mask-family-pairwise-distinct", pairwise_distinct)]


def _suite_good_corr(params: dict, seed: int) -> list:
    bound = _param(params, "index_bound", 12, 4, 14)
    Todd = _todd(bound)

    def discrete_found():
        S = NatMul()
        seq = [2, 3, 2, 3, 2, 3, 2, 3]
        res = topologies.good_corr_check(topologies.DiscreteTopology(S), 5, seq)
        if res.status != FOUND:
            return Verdict(res.status, witness={"inner": res.witness},
                           detail=res.detail)
        return passed(witness={"inner": res.witness})

    def discrete_vacuous():
        S = NatMul()
        seq = [2, 4, 8, 16, 32, 64]
        res = topologies.good_corr_check(topologies.DiscreteTopology(S), 3, seq)
        return _wrap(VACUOUS, Verdict(res.status, res.witness, res.detail))

    def one_point_found():
        S = NatInfinity()
        seq = list(range(1, 11))
        res = topologies.good_corr_check(topologies.OnePointTopology(S), 1, seq)
        if res.status != FOUND or res.witness["limit"] is not INF:
            return failed(witness={"inner": to_jsonable(res)})
        return passed(witness={"inner": res.witness})

    def one_point_constant():
        S = NatInfinity()
        seq = [INF, 1, INF, 2, INF, 3]
        res = topologies.good_corr_check(topologies.OnePointTopology(S), 2, seq)
        if res.status != FOUND or res.witness["limit"] is not INF:
            return failed(witness={"inner": to_jsonable(res)})
        return passed(witness={"inner": res.witness})

    def sigma_found():
        seq = [(0, Todd.weights.value(j)) for j in range(1, bound + 1)]
        res = topologies.good_corr_check(Todd, (0, 3), seq)
        if res.status != FOUND:
            return Verdict(res.status, witness={"inner": res.witness},
                           detail=res.detail)
        cert = res.witness["certificate"]
        sub = [seq[i - 1] for i in res.witness["term_indices"]]
        if res.witness["limit"] != (1, 1) or not cert.revalidate(Todd, sub):
            return failed(witness={"inner": res.witness},
                          detail="limit or certificate mismatch")
        return passed(witness={"limit": res.witness["limit"],
                               "terms_used": len(sub)})

    def sigma_vacuous():
        seq = [(0, 3), (1, 35), (0, 11), (2, 99), (1, 17), (0, 45)]
        res = topologies.good_corr_check(Todd, (0, 3), seq)
        return _wrap(VACUOUS, Verdict(res.status, res.witness, res.detail))

    return [("discrete-found", discrete_found),
            ("discrete-vacuous", discrete_vacuous),
            ("one-point-found", one_point_found),
            ("one-point-constant", one_point_constant),
            ("sigma-found", sigma_found),
            ("sigma-vacuous", sigma_vacuous)]


def _suite_nmax_wap(params: dict, seed: int) -> list:
    n_funcs = _param(params, "functions", 50, 1, 200)
    n_pairs = _param(params, "pairs", 50, 1, 200)
    horizon = _param(params, "horizon", 200, 20, 2000)

    def random_family():
        rng = random.Random(f"{seed}:wapfam")
        pairs = subsequence_pair_family(n_pairs, horizon, seed=seed)
        for i in range(n_funcs):
            f = random_c0_plus_const(rng)
            v = wap_test(f, pairs)
            if v.status != WAP_CONSISTENT:
                return failed(witness={"function": f, "verdict": v})
        return passed(witness={"functions": n_funcs, "pairs": n_pairs})

    def indicator_not_wap():
        f = indicator_of_evens(horizon)
        pairs = subsequence_pair_family(n_pairs, horizon, seed=seed)
        v = wap_test(f, pairs)
        if v.status != NOT_WAP:
            return failed(witness={"verdict": v},
                          detail="expected a NOT-WAP certificate")
        if not (v.witness["box"] == 0 and v.witness["diamond"] == 1):
            return failed(witness={"verdict": v},
                          detail="witness values differ from the derived pair")
        return passed(witness={"box": v.witness["box"],
                               "diamond": v.witness["diamond"]})

    def collapse_values():
        omega = LimitFunctional.evens(horizon)
        upsilon = LimitFunctional.odds(horizon)
        one = BoundedFunction.c0_plus_const({}, 1)
        finite = BoundedFunction.c0_plus_const({3: Fraction(9)}, 0)
        checks = [
            (arens_box(omega, upsilon, one), Fraction(1)),
            (arens_diamond(omega, upsilon, one), Fraction(1)),
            (arens_box(omega, upsilon, finite), Fraction(0)),
            (arens_diamond(omega, upsilon, finite), Fraction(0)),
            (arens_box(omega, upsilon, indicator_of_evens(horizon)), Fraction(0)),
            (arens_diamond(omega, upsilon, indicator_of_evens(horizon)),
             Fraction(1)),
        ]
        for got, want in checks:
            if got != want:
                return failed(witness={"got": got, "want": want})
        return passed(witness={"values_checked": len(checks)})

    def symmetry():
        rng = random.Random(f"{seed}:sym")
        pairs = subsequence_pair_family(10, horizon, seed=seed + 1)
        tested = 0
        for _ in range(20):
            cut = rng.randint(horizon // 2, horizon - 1)
            tail = Fraction(rng.randint(-3, 3))
            values = [Fraction(rng.randint(-3, 3)) for _ in range(cut)]
            values += [tail] * (horizon - cut)
            f = BoundedFunction.sampled(values)
            for om, up in pairs:
                b = arens_box(om, up, f)
                d = arens_diamond(up, om, f)
                if b is not None and d is not None:
                    tested += 1
                    if b != d:
                        return failed(witness={"box": b, "diamond_swapped": d})
        return passed(witness={"determined_pairs": tested})

    return [("wap-random-family", random_family),
            ("wap-indicator-evens", indicator_not_wap),
            ("arens-collapse-values", collapse_values),
            ("arens-commutative-symmetry", symmetry)]


def _random_vector(S: NatMax, rng: random.Random, span: int = 40,
                   terms: int = 5) -> L1Vector:
    items = []
    for _ in range(rng.randint(1, terms)):
        items.append((rng.randint(1, span),
                      Fraction(rng.randint(-6, 6), rng.randint(1, 4))))
    return L1Vector(S, items)


def _suite_unique_l1s(params: dict, seed: int) -> list:
    s_max = _param(params, "s_max", 50, 5, 200)
    trials = _param(params, "trials", 1000, 10, 5000)
    S = NatMax()

    def closed_form():
        rng = random.Random(f"{seed}:maxact")
        checked = 0
        from .l1 import max_action_formula
        for s in range(1, s_max + 1):
            for _ in range(3):
                a = _random_vector(S, rng)
                max_action_formula(s, a)      # raises on any mismatch
                checked += 1
        return passed(witness={"identities": checked},
                      detail="closed form equals convolution on every trial")

    def telescoping():
        rng = random.Random(f"{seed}:tele")
        held = 0
        hypothesis_failed = 0
        for i in range(trials):
            style = i % 3
            if style == 0:
                a = _random_vector(S, rng, span=20)
                x = random_c0_plus_const(rng, support_max=20)
            elif style == 1:
                a = _random_vector(S, rng, span=20)
                x = BoundedFunction.c0_plus_const(
                    {}, Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
            else:
                k_cut = rng.randint(2, 10)
                i1 = rng.randint(1, k_cut)
                i2 = rng.randint(1, k_cut)
                while i2 == i1:
                    i2 = rng.randint(1, k_cut)
                t = Fraction(rng.randint(1, 5), rng.randint(1, 3))
                a = (L1Vector.delta(S, i1, t) - L1Vector.delta(S, i2, t)
                     + L1Vector.delta(S, k_cut + rng.randint(1, 5),
                                      Fraction(rng.randint(-4, 4))))
                c = Fraction(rng.randint(1, 4))
                x = BoundedFunction.c0_plus_const(
                    {n: c for n in range(1, k_cut + 1)},
                    Fraction(rng.randint(-3, 3)))
            top = max(a.support() + list(x.mod) + [1])
            res = telescoping_check(a, x, top + 3)
            if res.status == PASS:
                held += 1
            elif "hypothesis fails" in res.detail:
                hypothesis_failed += 1
            else:
                return failed(witness={"trial": i, "inner": res})
        if held < trials // 4:
            return failed(witness={"held": held},
                          detail="too few trials satisfied the hypothesis; "
                                 "the check would be vacuous")
        return passed(witness={"trials": trials, "hypothesis_held": held,
                               "hypothesis_failed": hypothesis_failed})

    def sharpness():
        rng = random.Random(f"{seed}:sharp")
        multi = single = na = 0
        example = counterexample_x(L1Vector(S, [(1, 1), (2, 1)]))
        if not isinstance(example, SharpnessWitness) or example.s != 3 or \
                example.x != (L1Vector.delta(S, 2) - L1Vector.delta(S, 1)
                              + L1Vector.delta(S, 3)):
            return failed(witness={"example": example},
                          detail="pinned two-term example disagrees")
        for i in range(trials):
            style = i % 3
            if style == 0:
                a = _random_vector(S, rng, span=25, terms=6)
                if sum(c for _, c in a.terms()) == 0 or a.is_zero:
                    a = a + L1Vector.delta(S, rng.randint(1, 25))
            elif style == 1:
                a = L1Vector.delta(S, rng.randint(1, 30),
                                   Fraction(rng.randint(1, 9)))
            else:
                k = rng.randint(1, 20)
                c = Fraction(rng.randint(1, 9))
                a = L1Vector.delta(S, k, c) - L1Vector.delta(S, k + 3, c)
            out = counterexample_x(a)
            if isinstance(out, SharpnessWitness):
                if len(a.support()) == 1:
                    single += 1
                else:
                    multi += 1
            elif out.status == NOT_APPLICABLE:
                na += 1
                if sum(c for _, c in a.terms()) != 0:
                    return failed(witness={"trial": i, "a": a},
                                  detail="nonzero mass reported as inapplicable")
            else:
                return failed(witness={"trial": i, "inner": out})
        if min(multi, single, na) == 0:
            return failed(witness={"multi": multi, "single": single, "na": na},
                          detail="a branch went unexercised")
        return passed(witness={"trials": trials, "multi_term": multi,
                               "single_term": single, "not_applicable": na})

    return [("max-action-closed-form", closed_form),
            ("telescoping-trials", telescoping),
            ("sharpness-witness-trials", sharpness)]


def _random_partial_map(rng: random.Random, max_domain: int = 5,
                        max_value: int = 6) -> PartialMap:
    k = rng.randint(0, max_domain - 1)
    dom = rng.sample(range(1, max_domain + 1), k)
    img = rng.sample(range(1, max_value + 1), k)
    return PartialMap(zip(sorted(dom), img))


def _suite_section4(params: dict, seed: int) -> list:
    max_domain = _param(params, "max_domain", 5, 2, 5)
    max_value = _param(params, "max_value", 6, 2, 6)
    fnp_trials = _param(params, "fnp_trials", 1000, 10, 5000)
    n_max = _param(params, "n_max", 50, 5, 200)

    def sweep():
        return obstructions.open_set_identity_sweep(max_domain, max_value)

    def fnp_random():
        rng = random.Random(f"{seed}:fnp")
        total_ns = 0
        for i in range(fnp_trials):
            f = _random_partial_map(rng, max_domain, max_value)
            n0 = rng.choice([n for n in range(1, max_domain + 2)
                             if n not in f.domain])
            res = obstructions.verify_fnp(f, n0, range(1, n_max + 1))
            if res.status != PASS:
                return failed(witness={"trial": i, "f": f, "n0": n0,
                                       "inner": res})
            total_ns += res.witness["ns_checked"]
        return passed(witness={"trials": fnp_trials,
                               "compositions_verified": total_ns})

    def fnp_negative():
        inner = obstructions.verify_fnp(PartialMap([(1, 2)]), 3,
                                        range(1, 21), sabotage=True)
        return _wrap(FAIL, inner)

    def annihilation_cases():
        f = PartialMap([(1, 2)])
        first = obstructions.verify_annihilation(
            f, n0=3, g=PartialMap([(1, 2), (4, 7)]), k0=4,
            n_range=range(1, 21))
        if first.status != PASS or first.witness["nonzero_at"]:
            return failed(witness={"inner": first},
                          detail="distinct-points case should annihilate "
                                 "everywhere")
        second = obstructions.verify_annihilation(
            f, n0=3, g=PartialMap([(1, 2), (3, 9)]), k0=3,
            n_range=range(1, 21))
        if second.status != PASS or second.witness["nonzero_at"] != [9]:
            return failed(witness={"inner": second},
                          detail="coincident case should survive exactly at "
                                 "the predicted n")
        rng = random.Random(f"{seed}:annih")
        for i in range(200):
            f = _random_partial_map(rng, max_domain, max_value)
            outside = [n for n in range(1, max_domain + 3)
                       if n not in f.domain]
            n0 = rng.choice(outside)
            k0 = rng.choice(outside) if rng.random() < 0.5 else n0
            free_vals = [v for v in range(1, max_value + 4)
                         if v not in f.image]
            g = PartialMap(f.pairs + ((k0, rng.choice(free_vals)),))
            res = obstructions.verify_annihilation(f, n0, g, k0,
                                                   range(1, n_max + 1))
            if res.status != PASS:
                return failed(witness={"trial": i, "inner": res})
            want = [g(k0)] if (k0 == n0 and 1 <= g(k0) <= n_max
                               and g(k0) not in f.image) else []
            if res.witness["nonzero_at"] != want:
                return failed(witness={"trial": i, "inner": res,
                                       "expected_nonzero": want})
        return passed(witness={"random_cases": 200})

    def annihilation_negative():
        f = PartialMap([(1, 2)])
        g = PartialMap([(1, 2), (4, 7)])
        h1 = PartialMap([(4, 4)])
        wrong = PartialMap([(8, 8)])        # fixes the wrong point
        mutated = wrong.compose(g).compose(h1)
        if not mutated.is_zero:
            return failed(witness={"mutated": mutated},
                          detail="the mutated compression should kill g")
        return passed(detail="mutated construction fails as designed")

    def skeleton():
        rep = obstructions.proof_skeleton()
        if rep["overall"] != "PASS":
            return failed(witness={"report": to_jsonable(rep)})
        return passed(witness={"universe_size": rep["universe_size"],
                               "steps": [s["id"] for s in rep["steps"]]})

    return [("open-set-identity-sweep", sweep),
            ("fnp-random", fnp_random),
            ("fnp-negative-control", fnp_negative),
            ("annihilation-cases", annihilation_cases),
            ("annihilation-negative-control", annihilation_negative),
            ("proof-skeleton", skeleton)]


def _suite_rees(params: dict, seed: int) -> list:
    rees_rank = _param(params, "rees_rank", 201, 10, 500)
    infty_rank = _param(params, "infty_rank", 200, 10, 500)
    nat_rank = _param(params, "nat_max_rank", 200, 10, 500)
    min_pre = _param(params, "min_preimages", 100, 1, 400)

    def nat_max_passes():
        return is_weakly_cancellative_window(NatMax(), nat_rank)

    def _expect_growth(S, rank, skip_absorbing=False):
        inner = is_weakly_cancellative_window(S, rank)
        if inner.status != FAIL:
            return failed(witness={"inner": inner},
                          detail="expected a weak-cancellativity failure")
        records = inner.witness
        if skip_absorbing:
            records = [w for w in records if w["translate_by"] != S.has_zero]
            if not records:
                return failed(witness={"inner": inner},
                              detail="only the absorbing element witnessed the "
                                     "failure; a structural witness is required")
        best = max(len(w["preimages"]) for w in records)
        if best < min_pre:
            return failed(witness={"largest_preimage_set": best},
                          detail=f"witness smaller than {min_pre}")
        sample = max(records, key=lambda w: len(w["preimages"]))
        return passed(witness={"largest_preimage_set": best,
                               "translate_by": sample["translate_by"],
                               "target": sample["target"],
                               "counts": sample["counts"]})

    def infty_fails():
        return _expect_growth(NatInfinity(), infty_rank)

    def rees_fails():
        group = IntegerGroup()
        S = ReesMatrix(group, 100, 1, [[0] * 100])
        return _expect_growth(S, rees_rank, skip_absorbing=True)

    return [("weakly-cancellative-nat-max", nat_max_passes),
            ("growth-witness-nat-infty", infty_fails),
            ("growth-witness-rees", rees_fails)]


def _suite_structural(params: dict, seed: int) -> list:
    rank = _param(params, "rank", 12, 4, 24)
    assoc_rank = _param(params, "assoc_rank", 8, 3, 16)
    zp2, zp3 = ZPlusK(2), ZPlusK(3)
    free = FreeWords("ab")

    def cancellative():
        for S in (zp2, zp3, free):
            res = is_cancellative_window(S, rank)
            if res.status != PASS:
                return Verdict(res.status, witness={"instance": S.name,
                                                    "inner": res.witness},
                               detail=res.detail)
        return passed(witness={"instances": [zp2.name, zp3.name, free.name]})

    def divisible():
        checked = 0
        for S in (zp2, zp3, free):
            for s in S.window(rank):
                res = is_finitely_left_divisible_window(S, s, rank)
                if res.status != PASS:
                    return Verdict(res.status,
                                   witness={"instance": S.name, "s": s,
                                            "inner": res.witness},
                                   detail=res.detail)
                checked += 1
        return passed(witness={"elements_checked": checked})

    def lengths():
        for S, formula in ((zp2, sum), (free, len)):
            for x in S.window(rank):
                expected = formula(x)
                if expected == 0:
                    try:
                        length(S, x)
                    except NotReachable:
                        continue
                    return failed(witness={"instance": S.name, "x": x},
                                  detail="neutral element reported reachable")
                got = length(S, x)
                if got != expected:
                    return failed(witness={"instance": S.name, "x": x,
                                           "got": got, "want": expected})
        return passed(witness={"window_rank": rank},
                      detail="search lengths equal the closed forms")

    def associative():
        instances = [zp2, free, NatMul(), NatMax(), NatInfinity(),
                     ZPlusTimesZ(), PartialMaps(),
                     ReesMatrix(CyclicGroup(3), 2, 2, [[1, 2], [0, 1]])]
        for S in instances:
            res = associativity_window(S, assoc_rank)
            if res.status != PASS:
                return Verdict(res.status, witness={"instance": S.name},
                               detail=res.detail)
        return passed(witness={"instances": [S.name for S in instances]})

    return [("cancellative-windows", cancellative),
            ("divisibility-windows", divisible),
            ("length-closed-forms", lengths),
            ("associativity-windows", associative)]


SUITES = {
    "lemma-technical": _suite_lemma_technical,
    "gen-con-one": _suite_gen_con_one,
    "gen-con-two": _suite_gen_con_two,
    "star-condition": _suite_star_condition,
    "remark4-continuum": _suite_remark4_continuum,
    "good-corr": _suite_good_corr,
    "nmax-wap": _suite_nmax_wap,
    "unique-l1s": _suite_unique_l1s,
    "section4-no-predual": _suite_section4,
    "rees-cancellativity": _suite_rees,
    "structural": _suite_structural,
}


def _run_one(check):
    cid, thunk = check
    t0 = time.perf_counter()
    verdict = thunk()
    elapsed = time.perf_counter() - t0
    return cid, verdict, elapsed


def run_suite(name: str, params: dict = None, seed: int = 0,
              jobs: int = 1) -> dict:
    """Execute a named suite and assemble its report dictionary."""
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; choose from "
                         f"{sorted(SUITES)}")
    params = dict(params or {})
    checks = SUITES[name](params, seed)
    t0 = time.perf_counter()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, checks))
    else:
        results = [_run_one(c) for c in checks]
    total = time.perf_counter() - t0
    out_checks = []
    statuses = []
    for cid, verdict, elapsed in results:
        statuses.append(verdict.status)
        out_checks.append({"id": cid, "status": verdict.status,
                           "witness": to_jsonable(verdict.witness),
                           "detail": verdict.detail,
                           "elapsed_ms": int(elapsed * 1000)})
    if any(s == FAIL for s in statuses):
        overall = FAIL
    elif any(s == UNDETERMINED for s in statuses):
        overall = UNDETERMINED
    else:
        overall = PASS
    return {"schema_version": SCHEMA_VERSION, "suite": name,
            "params": to_jsonable(params), "seed": seed,
            "checks": out_checks, "overall": overall,
            "elapsed_ms": int(total * 1000)}
