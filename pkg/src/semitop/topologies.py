"""Neighborhood-base topologies on Z_+ x S built from weight subsequences.

A topology instance fixes a base semigroup S sitting inside a group G
(additive: S = Z_+ or Z inside Z; multiplicative: odd naturals inside the
positive rationals), a weight sequence compatible with that base, and a
mask selecting a subsequence of the weights.  Points are pairs (a, s);
the basic set U(a, s, alpha) collects every (a - k, s combined with a sum
of k distinct masked weights indexed at or above alpha).

Everything here is decided relative to the declared index bound of the
weight sequence.  Membership answers True, False, or None (undetermined):
None means the answer could depend on masked indices beyond the bound,
and it is never collapsed into a boolean.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product as iproduct
from typing import Any, Iterable, Optional, Sequence

from .verdicts import (DISTINCT, FOUND, NOT_FOUND_AT_HORIZON, UNDETERMINED, VACUOUS,
                       Verdict, failed, not_applicable, passed, undetermined)

REP_FOUND = "FOUND"
REP_NONE = "NONE"
REP_UNDETERMINED = "UNDETERMINED"

_BASES = ("zplus", "z", "odd_nat")


def _odd_primes(n: int) -> list:
    out = []
    cand = 3
    while len(out) < n:
        if all(cand % p for p in out) and all(cand % d for d in (2,)):
            # trial division by found primes suffices once cand < p_last^2;
            # fall back to full trial division to stay obviously correct
            is_p = True
            d = 3
            while d * d <= cand:
                if cand % d == 0:
                    is_p = False
                    break
                d += 2
            if is_p:
                out.append(cand)
        cand += 2
    return out


def _prime_factors(n: int) -> dict:
    n = int(n)
    if n < 1:
        raise ValueError("positive integers only")
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class WeightSequence:
    """A truncated strictly increasing weight sequence, 1-indexed."""

    __slots__ = ("kind", "index_bound", "values")

    def __init__(self, kind: str, index_bound: int, values: Optional[Sequence] = None):
        index_bound = int(index_bound)
        if index_bound < 1:
            raise ValueError("index bound must be positive")
        if kind == "double_exp":
            values = tuple(2 ** (2 ** n) for n in range(1, index_bound + 1))
        elif kind == "odd_primes":
            values = tuple(_odd_primes(index_bound))
        elif kind == "explicit":
            if not values:
                raise ValueError("explicit weights need values")
            values = tuple(int(v) for v in values)
            index_bound = len(values)
        else:
            raise ValueError(f"unknown weight kind {kind!r}")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ValueError("weights must be strictly increasing")
        if any(v < 1 for v in values):
            raise ValueError("weights must be positive")
        self.kind = kind
        self.index_bound = index_bound
        self.values = values

    @classmethod
    def double_exp(cls, index_bound: int) -> "WeightSequence":
        return cls("double_exp", index_bound)

    @classmethod
    def odd_primes(cls, index_bound: int) -> "WeightSequence":
        return cls("odd_primes", index_bound)

    @classmethod
    def explicit(cls, values: Sequence) -> "WeightSequence":
        return cls("explicit", len(tuple(values)), values)

    def value(self, i: int) -> int:
        if not 1 <= i <= self.index_bound:
            raise IndexError(f"index {i} outside 1..{self.index_bound}")
        return self.values[i - 1]

    def __repr__(self) -> str:
        return f"WeightSequence({self.kind}, bound={self.index_bound})"


def full_mask(index_bound: int) -> tuple:
    return tuple(range(1, index_bound + 1))


@dataclass(frozen=True)
class BasicNbhd:
    """Parameters (a, s, alpha) of one basic set."""

    a: int
    s: Any
    alpha: int

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("a must be a nonnegative integer")
        if self.alpha < 1:
            raise ValueError("alpha must be a positive index")


@dataclass(frozen=True)
class Membership:
    status: Optional[bool]            # None means undetermined at the bound
    indices: Optional[tuple] = None   # representation when status is True
    reason: str = ""


@dataclass(frozen=True)
class Rep:
    status: str
    indices: tuple = ()


@dataclass(frozen=True)
class Rep2:
    """Two-sided representation: diff = (sum over plus) - (sum over minus)."""

    status: str
    plus: tuple = ()
    minus: tuple = ()


class TopologyInstance:
    """One masked weight topology on Z_+ x S."""

    def __init__(self, base: str, weights: WeightSequence,
                 mask: Optional[Iterable] = None):
        if base not in _BASES:
            raise ValueError(f"base must be one of {_BASES}")
        if weights.kind == "odd_primes" and base != "odd_nat":
            raise ValueError("odd prime weights go with the odd_nat base")
        if weights.kind in ("double_exp", "explicit") and base == "odd_nat":
            raise ValueError("additive weights go with the additive bases")
        mask = tuple(sorted(set(int(i) for i in mask))) if mask is not None \
            else full_mask(weights.index_bound)
        if not mask:
            raise ValueError("mask must be nonempty")
        if mask[0] < 1 or mask[-1] > weights.index_bound:
            raise ValueError("mask indices must lie within the index bound")
        self.base = base
        self.weights = weights
        self.mask = mask
        self._mask_set = frozenset(mask)
        self._two_sided_cache: dict = {}

    def __repr__(self) -> str:
        return f"TopologyInstance({self.base}, {self.weights!r}, mask={list(self.mask)})"

    # -- base-dependent arithmetic ------------------------------------

    @property
    def multiplicative(self) -> bool:
        return self.base == "odd_nat"

    @property
    def s_identity(self):
        return 1 if self.multiplicative else 0

    def in_S(self, u: Any) -> bool:
        u = _as_int(u)
        if u is None:
            return False
        if self.base == "zplus":
            return u >= 0
        if self.base == "z":
            return True
        return u >= 1 and u % 2 == 1

    def s_op(self, u, v):
        return u * v if self.multiplicative else u + v

    def g_diff(self, u, v):
        """u combined with the group inverse of v; may leave S."""
        if self.multiplicative:
            return Fraction(u, v)
        return u - v

    def weight_total(self, indices: Iterable) -> int:
        total = 1 if self.multiplicative else 0
        for i in indices:
            w = self.weights.value(i)
            total = total * w if self.multiplicative else total + w
        return total

    def valid_point(self, point: Any) -> bool:
        if not (isinstance(point, tuple) and len(point) == 2):
            return False
        x, u = point
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            return False
        return self.in_S(u)

    def require_point(self, point: Any) -> tuple:
        if not self.valid_point(point):
            raise TypeError(f"{point!r} is not a point of Z+ x S for base {self.base}")
        return (point[0], _as_int(point[1]))

    # -- representations ----------------------------------------------

    def find_representation(self, diff: Any, min_index: int = 1) -> Rep:
        """The unique way of writing diff as a combination of distinct
        masked weights with indices >= min_index, when one exists.

        NONE is definitive; UNDETERMINED means the answer could involve
        masked indices beyond the declared index bound.
        """
        if self.weights.kind == "double_exp":
            return self._rep_double_exp(diff, min_index)
        if self.weights.kind == "odd_primes":
            return self._rep_odd_primes(diff, min_index)
        return self._rep_explicit(diff, min_index)

    def _rep_double_exp(self, diff: Any, min_index: int) -> Rep:
        diff = _as_int(diff)
        if diff is None or diff < 0:
            return Rep(REP_NONE)
        if diff == 0:
            return Rep(REP_FOUND, ())
        bound = self.weights.index_bound
        indices = []
        undet = False
        d = diff
        while d:
            low = d & -d
            pos = low.bit_length() - 1
            d ^= low
            n = pos.bit_length() - 1
            if pos < 2 or (1 << n) != pos:
                return Rep(REP_NONE)     # bit position is not a power of two
            if n > bound:
                undet = True
            elif n < min_index or n not in self._mask_set:
                return Rep(REP_NONE)
            else:
                indices.append(n)
        if undet:
            return Rep(REP_UNDETERMINED)
        return Rep(REP_FOUND, tuple(sorted(indices)))

    def _rep_odd_primes(self, diff: Any, min_index: int) -> Rep:
        if isinstance(diff, Fraction) and diff.denominator != 1:
            return Rep(REP_NONE)
        n = _as_int(diff)
        if n is None or n < 1:
            return Rep(REP_NONE)
        if n == 1:
            return Rep(REP_FOUND, ())
        indices = []
        for i, w in enumerate(self.weights.values, start=1):
            if n % w == 0:
                n //= w
                if n % w == 0:
                    return Rep(REP_NONE)   # repeated prime cannot occur
                if i < min_index or i not in self._mask_set:
                    return Rep(REP_NONE)   # this prime is no masked weight
                indices.append(i)
            if n == 1:
                break
        if n == 1:
            return Rep(REP_FOUND, tuple(indices))
        if n % 2 == 0:
            return Rep(REP_NONE)           # even cofactor is never a weight
        return Rep(REP_UNDETERMINED)       # odd cofactor beyond the bound

    def _rep_explicit(self, diff: Any, min_index: int) -> Rep:
        # explicit sequences are complete finite lists, so always settled
        diff = _as_int(diff)
        if diff is None:
            return Rep(REP_NONE)
        idxs = [i for i in self.mask if i >= min_index]
        if len(idxs) > 16:
            raise ValueError("explicit representation search limited to 16 indices")
        found = []
        for k in range(len(idxs) + 1):
            for combo in combinations(idxs, k):
                if self.weight_total(combo) == diff:
                    found.append(combo)
        if not found:
            return Rep(REP_NONE)
        if len(found) > 1:
            raise ArithmeticError(
                f"ambiguous representation of {diff!r}: {found[:2]} (weights lack "
                f"unique representability)")
        return Rep(REP_FOUND, found[0])

    def represent(self, target: Any, k: int, min_index: int = 1) -> Rep:
        """Representation with exactly k indices, or NONE/UNDETERMINED."""
        rep = self.find_representation(target, min_index)
        if rep.status == REP_FOUND and len(rep.indices) != int(k):
            return Rep(REP_NONE)
        return rep

    # -- membership ----------------------------------------------------

    def member(self, nbhd: BasicNbhd, point: Any) -> Membership:
        if not self.in_S(nbhd.s):
            raise TypeError(f"neighborhood center {nbhd.s!r} is outside S")
        if not self.valid_point(point):
            return Membership(False, reason="not a point of Z+ x S")
        x, u = self.require_point(point)
        k = nbhd.a - x
        if k < 0 or k > nbhd.a:
            return Membership(False, reason="first coordinate out of range")
        diff = self.g_diff(u, nbhd.s)
        rep = self.find_representation(diff, nbhd.alpha)
        if rep.status == REP_UNDETERMINED:
            return Membership(None, reason="representation undetermined at the index bound")
        if rep.status == REP_NONE or len(rep.indices) != k:
            return Membership(False)
        return Membership(True, rep.indices)

    def member_bruteforce(self, nbhd: BasicNbhd, point: Any,
                          cap: Optional[int] = None) -> Membership:
        """Oracle membership by exhaustive subset enumeration up to cap."""
        if not self.valid_point(point):
            return Membership(False, reason="not a point of Z+ x S")
        x, u = self.require_point(point)
        k = nbhd.a - x
        if k < 0 or k > nbhd.a:
            return Membership(False, reason="first coordinate out of range")
        cap = self.weights.index_bound if cap is None else min(cap, self.weights.index_bound)
        idxs = [i for i in self.mask if nbhd.alpha <= i <= cap]
        diff = self.g_diff(u, nbhd.s)
        for combo in combinations(idxs, k):
            if self.weight_total(combo) == diff:
                return Membership(True, combo)
        return Membership(False)

    def basic_points(self, nbhd: BasicNbhd, cap: Optional[int] = None) -> list:
        """All members whose representation stays within [alpha, cap],
        as (point, indices) pairs."""
        cap = self.weights.index_bound if cap is None else min(cap, self.weights.index_bound)
        idxs = [i for i in self.mask if nbhd.alpha <= i <= cap]
        out = []
        for k in range(0, nbhd.a + 1):
            for combo in combinations(idxs, k):
                point = (nbhd.a - k, self.s_op(nbhd.s, self.weight_total(combo)))
                out.append((point, combo))
        return out

    # -- two-sided representations (for separation witnesses) -----------

    def two_sided_representation(self, diff: Any) -> Rep2:
        try:
            cached = self._two_sided_cache.get(diff)
        except TypeError:
            cached = None
        if cached is not None:
            return cached
        out = self._two_sided_uncached(diff)
        try:
            self._two_sided_cache[diff] = out
        except TypeError:
            pass
        return out

    def _two_sided_uncached(self, diff: Any) -> Rep2:
        if self.multiplicative:
            frac = diff if isinstance(diff, Fraction) else Fraction(_as_int(diff), 1)
            plus = self._rep_odd_primes(frac.numerator, 1)
            minus = self._rep_odd_primes(frac.denominator, 1)
            for part in (plus, minus):
                if part.status == REP_NONE:
                    return Rep2(REP_NONE)
            for part in (plus, minus):
                if part.status == REP_UNDETERMINED:
                    return Rep2(REP_UNDETERMINED)
            return Rep2(REP_FOUND, plus.indices, minus.indices)
        diff = _as_int(diff)
        if diff is None:
            return Rep2(REP_NONE)
        if len(self.mask) > 13:
            raise ValueError("two-sided search limited to 13 masked indices")
        best = None
        for signs in iproduct((-1, 0, 1), repeat=len(self.mask)):
            total = sum(sign * self.weights.value(i)
                        for sign, i in zip(signs, self.mask) if sign)
            if total == diff:
                plus = tuple(i for sign, i in zip(signs, self.mask) if sign > 0)
                minus = tuple(i for sign, i in zip(signs, self.mask) if sign < 0)
                best = Rep2(REP_FOUND, plus, minus)
                break
        if best is not None:
            return best
        if self.weights.kind == "explicit":
            return Rep2(REP_NONE)
        # any signed combination using an index above the bound has absolute
        # value at least w(bound+1) - sum of all bounded weights
        bound = self.weights.index_bound
        min_new = 2 ** (2 ** (bound + 1)) - sum(self.weights.values)
        if abs(diff) < min_new:
            return Rep2(REP_NONE)
        return Rep2(REP_UNDETERMINED)


def _as_int(u: Any) -> Optional[int]:
    if isinstance(u, bool):
        return None
    if isinstance(u, int):
        return u
    if isinstance(u, Fraction):
        return u.numerator if u.denominator == 1 else None
    return None


# ---------------------------------------------------------------------------
# base facts: inclusion, filter property, separation, continuity


def base_inclusion(T: TopologyInstance, inner: BasicNbhd, outer: BasicNbhd,
                   cap: Optional[int] = None) -> Verdict:
    """Whether U(inner) sits inside U(outer), decided by the top-index rule
    and confirmed point-by-point at the truncation.

    The center of the inner set must belong to the outer set; its
    representation's top index m gives the rule: inclusion holds exactly
    when inner.alpha > m (or inner.alpha >= outer.alpha for the center
    itself).  Failures come with an explicit escaping point.
    """
    center = (inner.a, inner.s)
    res = T.member(outer, center)
    if res.status is None:
        return undetermined("center membership undetermined at the index bound")
    if res.status is False:
        raise ValueError("inner center lies outside the outer set")
    threshold = (max(res.indices) + 1) if res.indices else outer.alpha
    claim = inner.alpha >= threshold
    escaping = None
    saw_undetermined = False
    for point, _ in T.basic_points(inner, cap):
        m = T.member(outer, point)
        if m.status is None:
            saw_undetermined = True
        elif m.status is False:
            escaping = point
            break
    if claim:
        if escaping is not None:
            return failed(witness={"escaping_point": escaping},
                          detail="rule predicted inclusion but a point escaped")
        if saw_undetermined:
            return undetermined("membership undetermined for some inner point")
        return passed(witness={"top_index_rule": threshold},
                      detail=f"inclusion verified on the truncation (alpha >= {threshold})")
    if escaping is None:
        return undetermined(
            "rule predicts an escaping point but none lies within the truncation")
    return failed(witness={"escaping_point": escaping, "needed_alpha": threshold},
                  detail="inner level too small; explicit escaping point found")


def base_property_check(T: TopologyInstance, u1: BasicNbhd, u2: BasicNbhd,
                        cap: Optional[int] = None) -> Verdict:
    """Filter-base property at the truncation: every common point of two
    basic sets admits an enclosed basic set contained in both."""
    pts1 = {p: rep for p, rep in T.basic_points(u1, cap)}
    pts2 = {p: rep for p, rep in T.basic_points(u2, cap)}
    common = sorted(set(pts1) & set(pts2), key=repr)
    checked = 0
    for p in common:
        g1 = (max(pts1[p]) + 1) if pts1[p] else u1.alpha
        g2 = (max(pts2[p]) + 1) if pts2[p] else u2.alpha
        enclosed = BasicNbhd(p[0], p[1], max(g1, g2))
        for q, _ in T.basic_points(enclosed, cap):
            r1 = T.member(u1, q)
            r2 = T.member(u2, q)
            if r1.status is None or r2.status is None:
                return undetermined(f"membership undetermined near {p!r}")
            if not (r1.status and r2.status):
                return failed(witness={"common_point": p, "escaping": q,
                                       "enclosed_alpha": max(g1, g2)})
            checked += 1
    return passed(witness={"common_points": len(common), "enclosed_checked": checked})


def hausdorff_witness(T: TopologyInstance, x: tuple, y: tuple,
                      cap: Optional[int] = None) -> Verdict:
    """Disjoint basic sets around two distinct points.

    Level recipe: equal S-coordinates separate at level 1; otherwise the
    S-difference either has a two-sided weight representation, in which
    case both levels sit just above its top index, or it has none and
    level 1 suffices.  Disjointness is then confirmed exhaustively on the
    truncation.
    """
    x = T.require_point(x)
    y = T.require_point(y)
    if x == y:
        raise ValueError("points must be distinct")
    (a, s), (b, t) = x, y
    rep2 = None
    if s == t:
        alpha = beta = 1
    else:
        rep2 = T.two_sided_representation(T.g_diff(t, s))
        if rep2.status == REP_UNDETERMINED:
            return undetermined("representability of the difference is unsettled "
                                "at the index bound")
        if rep2.status == REP_FOUND:
            alpha = beta = max(rep2.plus + rep2.minus) + 1
        else:
            alpha = beta = 1
    ux = BasicNbhd(a, s, alpha)
    uy = BasicNbhd(b, t, beta)
    px = {p for p, _ in T.basic_points(ux, cap)}
    py = {p for p, _ in T.basic_points(uy, cap)}
    overlap = px & py
    witness = {"x_nbhd": ux, "y_nbhd": uy,
               "two_sided": (rep2.plus, rep2.minus) if rep2 and rep2.status == REP_FOUND else None}
    if overlap:
        return failed(witness={**witness, "common_point": sorted(overlap, key=repr)[0]})
    return passed(witness=witness,
                  detail="truncated basic sets are disjoint")


def separate_continuity_identity(T: TopologyInstance, shift: tuple, center: tuple,
                                 alpha: int, cap: Optional[int] = None) -> Verdict:
    """Translation preimage identity at the truncation.

    With M the translation by `shift`, the preimage of the basic set around
    the translated center at level alpha is exactly the basic set around
    the original center at the same level.  The check runs over every point
    of both candidate sets (the inner set and the pulled-back outer set).
    """
    b, t = T.require_point(shift)
    a, s = T.require_point(center)
    inner = BasicNbhd(a, s, alpha)
    outer = BasicNbhd(a + b, T.s_op(s, t), alpha)

    def push(p):
        return (p[0] + b, T.s_op(p[1], t))

    universe = {p for p, _ in T.basic_points(inner, cap)}
    for q, _ in T.basic_points(outer, cap):
        xq, uq = q
        if xq - b < 0:
            continue
        back = T.g_diff(uq, t)
        back_int = _as_int(back)
        if back_int is None or not T.in_S(back_int):
            continue
        universe.add((xq - b, back_int))
    for p in sorted(universe, key=repr):
        lhs = T.member(outer, push(p))
        rhs = T.member(inner, p)
        if lhs.status is None or rhs.status is None:
            return undetermined(f"membership undetermined at {p!r}")
        if lhs.status != rhs.status:
            return failed(witness={"point": p, "translated": push(p),
                                   "in_preimage": lhs.status, "in_inner": rhs.status})
    return passed(witness={"points_checked": len(universe)})


# ---------------------------------------------------------------------------
# convergence


@dataclass
class ConvergenceCertificate:
    limit: tuple
    alpha_max: int
    thresholds: dict       # alpha -> least 1-based N with the tail inside
    witnesses: tuple       # per term: representation indices, or None
    prefix_len: int

    def revalidate(self, T: TopologyInstance, sequence: Sequence) -> bool:
        if len(sequence) != self.prefix_len:
            return False
        b, t = self.limit
        for alpha in range(1, self.alpha_max + 1):
            n0 = self.thresholds.get(alpha)
            if n0 is None:
                return False
            for n in range(n0, self.prefix_len + 1):
                if T.member(BasicNbhd(b, t, alpha), sequence[n - 1]).status is not True:
                    return False
        return True


def check_convergence(T: TopologyInstance, sequence: Sequence, limit: tuple,
                      alpha_max: int):
    """Certificate of convergence of a finite prefix to `limit`.

    For each level alpha up to alpha_max the certificate stores the least
    N with every later term inside U(limit, alpha).  A term that violates
    membership at some level with no recovery before the end of the prefix
    yields a FAIL verdict instead (prefix-relative divergence evidence);
    an unsettled membership yields UNDETERMINED.
    """
    b, t = T.require_point(limit)
    alpha_max = int(alpha_max)
    if alpha_max < 1:
        raise ValueError("alpha_max must be positive")
    reps = []
    for n, term in enumerate(sequence, start=1):
        res = T.member(BasicNbhd(b, t, 1), term)
        if res.status is None:
            return undetermined(f"membership of term {n} undetermined at the bound")
        reps.append(res.indices if res.status else None)
    if not reps:
        raise ValueError("empty sequence")
    thresholds = {}
    for alpha in range(1, alpha_max + 1):
        bad = [n for n, rep in enumerate(reps, start=1)
               if rep is None or (rep and min(rep) < alpha)]
        if not bad:
            thresholds[alpha] = 1
        elif bad[-1] == len(reps):
            return failed(witness={"alpha": alpha, "violating_terms": bad[:5],
                                   "prefix_len": len(reps)},
                          detail="no tail of the prefix stays inside at this level")
        else:
            thresholds[alpha] = bad[-1] + 1
    return ConvergenceCertificate(limit=(b, t), alpha_max=alpha_max,
                                  thresholds=thresholds,
                                  witnesses=tuple(reps), prefix_len=len(reps))


def _limit_candidates(T: TopologyInstance, sequence: Sequence,
                      max_unshift: int = 3, top: int = 10) -> list:
    counts: dict = {}
    for term in sequence:
        if not T.valid_point(term):
            continue
        x, u = T.require_point(term)
        for k in range(0, max_unshift + 1):
            for combo in combinations(T.mask, k):
                if T.multiplicative:
                    q, r = divmod(u, T.weight_total(combo))
                    if r:
                        continue
                    v = q
                else:
                    v = u - T.weight_total(combo)
                cand = (x + k, v)
                if T.valid_point(cand):
                    counts[cand] = counts.get(cand, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], repr(kv[0])))
    return [cand for cand, _ in ranked[:top]]


def find_limit(T: TopologyInstance, sequence: Sequence, alpha_max: int):
    """Best-effort limit search over unshift candidates.

    Misses are reported as None, meaning not found at this horizon, never
    as evidence of divergence.
    """
    for cand in _limit_candidates(T, sequence):
        cert = check_convergence(T, sequence, cand, alpha_max)
        if isinstance(cert, ConvergenceCertificate):
            return cand, cert
    return None


@dataclass
class TransferResult:
    verdict: Verdict
    predicted_limit: Optional[tuple] = None
    certificate: Optional[ConvergenceCertificate] = None
    shifted_limit: Optional[tuple] = None
    shifted_certificate: Optional[ConvergenceCertificate] = None
    division_data: Optional[Verdict] = None


def convergence_transfer(T: TopologyInstance, sequence: Sequence, shift: tuple,
                         alpha_max: int,
                         shifted_limit: Optional[tuple] = None) -> TransferResult:
    """Convergence of a sequence inferred from convergence of its shift.

    The shifted sequence (terms combined with `shift`) is certified to its
    limit (b, t); the predicted limit of the original sequence divides the
    shift back out, and must land inside Z_+ x S, which is where the
    division condition on the base enters.  The original prefix is then
    certified to the predicted limit directly.
    """
    if T.base == "zplus":
        return TransferResult(not_applicable(
            "no division data is claimed for the zplus base"))
    a, s = T.require_point(shift)
    shifted = [(p[0] + a, T.s_op(p[1], s)) for p in map(T.require_point, sequence)]
    if shifted_limit is None:
        got = find_limit(T, shifted, alpha_max)
        if got is None:
            return TransferResult(undetermined(
                "no limit of the shifted sequence found at this horizon"))
        shifted_limit, shifted_cert = got
    else:
        shifted_cert = check_convergence(T, shifted, shifted_limit, alpha_max)
        if not isinstance(shifted_cert, ConvergenceCertificate):
            return TransferResult(
                Verdict(shifted_cert.status, shifted_cert.witness,
                        "shifted sequence failed to certify: " + shifted_cert.detail))
    b, t = shifted_limit
    back = T.g_diff(t, s)
    back_int = _as_int(back)
    division = verify_star_star(T, s)
    if b - a < 0 or back_int is None or not T.in_S(back_int):
        return TransferResult(
            failed(witness={"shifted_limit": shifted_limit, "shift": shift},
                   detail="predicted limit leaves Z+ x S"),
            shifted_limit=shifted_limit, shifted_certificate=shifted_cert,
            division_data=division)
    predicted = (b - a, back_int)
    cert = check_convergence(T, sequence, predicted, alpha_max)
    if not isinstance(cert, ConvergenceCertificate):
        return TransferResult(
            Verdict(cert.status, cert.witness,
                    "original sequence failed to certify: " + cert.detail),
            predicted_limit=predicted, shifted_limit=shifted_limit,
            shifted_certificate=shifted_cert, division_data=division)
    return TransferResult(passed(witness={"predicted_limit": predicted}),
                          predicted_limit=predicted, certificate=cert,
                          shifted_limit=shifted_limit,
                          shifted_certificate=shifted_cert,
                          division_data=division)


# ---------------------------------------------------------------------------
# the unique-representability condition and the division condition


def verify_star(weights: WeightSequence, index_bound: Optional[int] = None,
                max_multiplicity: Optional[int] = None) -> Verdict:
    """Distinct index multisets give distinct weight combinations.

    Multisets with entries up to the multiplicity cap (2 for the doubly
    exponential weights, 1 for primes and explicit lists) are enumerated
    exhaustively and grouped by combined value; any group of size two is a
    counterexample.
    """
    bound = weights.index_bound if index_bound is None else min(
        int(index_bound), weights.index_bound)
    if max_multiplicity is None:
        max_multiplicity = 2 if weights.kind == "double_exp" else 1
    mult = int(max_multiplicity)
    if (mult + 1) ** bound > 2_000_000:
        raise ValueError("multiset enumeration too large; lower the bound")
    multiplicative = weights.kind == "odd_primes"
    seen: dict = {}
    for countvec in iproduct(range(mult + 1), repeat=bound):
        if multiplicative:
            total = 1
            for i, c in enumerate(countvec, start=1):
                total *= weights.value(i) ** c
        else:
            total = sum(c * weights.value(i)
                        for i, c in enumerate(countvec, start=1))
        other = seen.get(total)
        if other is not None and other != countvec:
            def as_multiset(vec):
                return {i: c for i, c in enumerate(vec, start=1) if c}
            return failed(witness={"value": total,
                                   "first": as_multiset(other),
                                   "second": as_multiset(countvec)},
                          detail="two index multisets share a combined value")
        seen[total] = countvec
    return passed(witness={"multisets": (mult + 1) ** bound},
                  detail=f"no collisions among indices <= {bound}, multiplicity <= {mult}")


def verify_star_star(T: TopologyInstance, t: Any, s_window: int = 10_000) -> Verdict:
    """Division condition data for translating convergence by t.

    For the full-group base the threshold is trivially 1.  For the odd
    naturals the least index whose weight exceeds every prime factor of t
    works, and the implication is verified over a finite window of s.  For
    the zplus base no such data is claimed.
    """
    if T.base == "zplus":
        return not_applicable("no division data is claimed for the zplus base")
    if T.base == "z":
        t = _as_int(t)
        if t is None:
            raise TypeError("t must be an integer for the z base")
        for s in range(-50, 51):
            for n in range(1, T.weights.index_bound + 1):
                assert isinstance(s - t + T.weights.value(n), int)
        return passed(witness={"alpha_t": 1},
                      detail="S is the whole group; every index works")
    t = _as_int(t)
    if t is None or not T.in_S(t):
        raise TypeError(f"{t!r} is not an odd natural")
    factors = _prime_factors(t) if t > 1 else {}
    p_max = max(factors) if factors else 1
    alpha_t = None
    for i in range(1, T.weights.index_bound + 1):
        if T.weights.value(i) > p_max:
            alpha_t = i
            break
    if alpha_t is None:
        return undetermined("every bounded weight divides into the prime "
                            "factors of t; raise the index bound")
    for s in range(1, s_window + 1, 2):
        for n in range(alpha_t, T.weights.index_bound + 1):
            w = T.weights.value(n)
            moved = s * w
            if moved % t == 0 and (moved // t) % 2 == 1:
                if not (s % t == 0 and (s // t) % 2 == 1):
                    return failed(witness={"s": s, "n": n, "t": t},
                                  detail="division condition violated inside the window")
    return passed(witness={"alpha_t": alpha_t, "largest_prime_factor": p_max,
                           "s_window": s_window})


# ---------------------------------------------------------------------------
# distinguishing masked topologies


def mask_family(count: int, horizon: int, min_symdiff: Optional[int] = None,
                seed: int = 0) -> list:
    """Deterministic family of masks with pairwise large symmetric difference."""
    count = int(count)
    horizon = int(horizon)
    if min_symdiff is None:
        min_symdiff = max(2, horizon // 3)
    rng = random.Random(seed)
    masks: list = []
    attempts = 0
    while len(masks) < count:
        attempts += 1
        if attempts > 200_000:
            raise RuntimeError("could not build the requested mask family")
        size = rng.randint(max(2, horizon // 3), horizon - 1)
        cand = tuple(sorted(rng.sample(range(1, horizon + 1), size)))
        if all(len(set(cand) ^ set(m)) >= min_symdiff for m in masks):
            masks.append(cand)
    return masks


def distinguish_topologies(weights: WeightSequence, mask1: Iterable, mask2: Iterable,
                           horizon: int, base: Optional[str] = None,
                           alpha_max: Optional[int] = None) -> Verdict:
    """Witness that two masks induce different topologies.

    Any index in one mask but not the other yields the witness point
    (0, w_index): it belongs to the level-alpha basic sets around the base
    point (1, identity) for the owning mask (alpha up to the index), and to
    none of them for the other mask.  The verdict is flagged strong when
    the symmetric difference is large relative to the horizon.
    """
    horizon = min(int(horizon), weights.index_bound)
    if base is None:
        base = "odd_nat" if weights.kind == "odd_primes" else "z"
    m1 = set(mask1) & set(range(1, horizon + 1))
    m2 = set(mask2) & set(range(1, horizon + 1))
    sym = sorted(m1 ^ m2)
    if not sym:
        return undetermined("masks agree within the horizon")
    if alpha_max is None:
        alpha_max = horizon
    t_one = TopologyInstance(base, weights, sorted(m1)) if m1 else None
    t_two = TopologyInstance(base, weights, sorted(m2)) if m2 else None
    witnesses = []
    for j in sym:
        owner, other = (t_two, t_one) if j in m2 else (t_one, t_two)
        ident = 1 if base == "odd_nat" else 0
        point = (0, weights.value(j))
        inside = True
        for alpha in range(1, min(j, alpha_max) + 1):
            if owner.member(BasicNbhd(1, ident, alpha), point).status is not True:
                inside = False
        outside = True
        if other is not None:
            for alpha in range(1, alpha_max + 1):
                if other.member(BasicNbhd(1, ident, alpha), point).status is not False:
                    outside = False
        if not (inside and outside):
            return failed(witness={"index": j, "point": point},
                          detail="witness point failed to separate the masks")
        witnesses.append({"index": j, "point": point,
                          "member_of": "mask2" if j in m2 else "mask1"})
    strong = len(sym) >= max(2, horizon // 3)
    return Verdict(DISTINCT,
                   witness={"symmetric_difference": sym, "strong": strong,
                            "witnesses": witnesses},
                   detail=f"{len(sym)} separating indices within horizon {horizon}")


# ---------------------------------------------------------------------------
# convergent-subsequence correspondence


@dataclass(frozen=True)
class DiscreteTopology:
    instance: Any


@dataclass(frozen=True)
class OnePointTopology:
    """One-point compactification topology on the nat_infty instance."""

    instance: Any


def _subseq_constant(seq: Sequence, min_repeat: int = 2):
    counts: dict = {}
    for n, v in enumerate(seq, start=1):
        counts.setdefault(v, []).append(n)
    best = None
    for v, idxs in counts.items():
        if len(idxs) >= min_repeat and (best is None or len(idxs) > len(best[1])):
            best = (v, idxs)
    return best


def _subseq_onepoint(seq: Sequence, min_increase: int = 3):
    from .semigroups import INF
    const = _subseq_constant(seq)
    if const is not None:
        return const
    idxs = []
    last = 0
    for n, v in enumerate(seq, start=1):
        if v is INF:
            continue
        if v > last:
            idxs.append(n)
            last = v
    if len(idxs) >= min_increase:
        return (INF, idxs)
    return None


def _subseq_sigma(T: TopologyInstance, seq: Sequence, alpha_max: int):
    for cand in _limit_candidates(T, seq):
        idxs = []
        need = 1
        for n, term in enumerate(seq, start=1):
            res = T.member(BasicNbhd(cand[0], cand[1], 1), term)
            if res.status is not True:
                continue
            level = min(res.indices) if res.indices else None
            if level is None or level >= need:
                idxs.append(n)
                need += 1
        if len(idxs) >= min(alpha_max, 3):
            sub = [seq[i - 1] for i in idxs]
            cert = check_convergence(T, sub, cand, min(alpha_max, len(idxs)))
            if isinstance(cert, ConvergenceCertificate):
                return (cand, idxs, cert)
    return None


def good_corr_check(topology: Any, s: Any, sequence: Sequence,
                    alpha_max: int = 6) -> Verdict:
    """Convergent-subsequence transfer from a translate back to the sequence.

    Hypothesis: one of the two translates of the sequence by s has a
    convergent subsequence (in the given topology, at prefix scale).  When
    the hypothesis is unmet the check is vacuous.  Otherwise the sequence
    itself is searched; a miss is reported as not-found-at-horizon, never
    as a refutation.
    """
    if isinstance(topology, (DiscreteTopology, OnePointTopology)):
        S = topology.instance
        right = [S.product(t, s) for t in sequence]
        left = [S.product(s, t) for t in sequence]
        finder = (_subseq_constant if isinstance(topology, DiscreteTopology)
                  else _subseq_onepoint)
        hyp = finder(right) or finder(left)
        if hyp is None:
            return Verdict(VACUOUS, detail="hypothesis unmet in the prefix: "
                           "neither translate has a convergent subsequence")
        got = finder(list(sequence))
        if got is None:
            return Verdict(NOT_FOUND_AT_HORIZON,
                           witness={"hypothesis": hyp},
                           detail="no convergent subsequence found in the prefix")
        value, idxs = got
        return Verdict(FOUND, witness={"limit": value, "term_indices": idxs,
                                       "hypothesis": hyp})
    T = topology
    sp = T.require_point(s)
    shifted = [(p[0] + sp[0], T.s_op(p[1], sp[1]))
               for p in map(T.require_point, sequence)]
    hyp = _subseq_sigma(T, shifted, alpha_max)
    if hyp is None:
        return Verdict(VACUOUS, detail="hypothesis unmet in the prefix: "
                       "no convergent subsequence of the translate was found")
    got = _subseq_sigma(T, list(sequence), alpha_max)
    if got is None:
        return Verdict(NOT_FOUND_AT_HORIZON,
                       witness={"hypothesis_limit": hyp[0]},
                       detail="no convergent subsequence found in the prefix")
    cand, idxs, cert = got
    return Verdict(FOUND, witness={"limit": cand, "term_indices": idxs,
                                   "certificate": cert,
                                   "hypothesis_limit": hyp[0]})


# ---------------------------------------------------------------------------
# transport between (N, multiplication) and the odd-naturals base


def odd_pair_to_natural(point: tuple) -> int:
    """(k, n) with n odd becomes 2^k * n."""
    k, n = point
    if not (isinstance(k, int) and k >= 0 and isinstance(n, int) and n >= 1
            and n % 2 == 1):
        raise TypeError(f"{point!r} is not a point of Z+ x (odd naturals)")
    return (2 ** k) * n


def natural_to_odd_pair(m: int) -> tuple:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise TypeError(f"{m!r} is not a positive integer")
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    return (k, m)
