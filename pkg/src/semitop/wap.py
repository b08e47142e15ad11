"""Iterated limits along index subsequences over (N, max).

True ultrafilter limits are not computable, so limit functionals here are
surrogates: a strictly increasing finite subsequence of indices together
with a horizon, and a limit is reported only when the evaluated values
stabilize exactly along a final run of the subsequence.  Anything short of
exact stabilization is UNDETERMINED (returned as None) and stays that way.

On (N, max) the two iterated products against such functionals either
agree (weak-almost-periodic behaviour) or produce an exact, checkable
disagreement pair, which is the counterexample format used throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .l1 import BoundedFunction, L1Vector, convolve, pairing_vectors, _coeff_sum
from .semigroups import NatMax
from .verdicts import (UNDETERMINED, Verdict, failed, not_applicable, passed,
                       undetermined)

WAP_CONSISTENT = "WAP-consistent"
NOT_WAP = "NOT-WAP"


@dataclass(frozen=True)
class LimitFunctional:
    """Evaluation along a strictly increasing index subsequence."""

    along: tuple
    horizon: int

    def __post_init__(self):
        pts = tuple(int(p) for p in self.along)
        if not pts:
            raise ValueError("the subsequence must be nonempty")
        if any(p < 1 for p in pts) or any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError("indices must be strictly increasing positive integers")
        if pts[-1] > self.horizon:
            raise ValueError("subsequence exceeds its own horizon")
        object.__setattr__(self, "along", pts)

    @classmethod
    def arithmetic(cls, start: int, step: int, horizon: int) -> "LimitFunctional":
        return cls(tuple(range(start, horizon + 1, step)), horizon)

    @classmethod
    def evens(cls, horizon: int) -> "LimitFunctional":
        return cls.arithmetic(2, 2, horizon)

    @classmethod
    def odds(cls, horizon: int) -> "LimitFunctional":
        return cls.arithmetic(1, 2, horizon)

    @classmethod
    def all_naturals(cls, horizon: int) -> "LimitFunctional":
        return cls.arithmetic(1, 1, horizon)


def _stabilized(vals: Sequence) -> Optional[Fraction]:
    """Value of a final constant run covering at least a quarter of the
    sequence (and at least two terms); None otherwise."""
    if not vals:
        return None
    run = 1
    for prev, cur in zip(reversed(vals[:-1]), reversed(vals)):
        if prev != cur:
            break
        run += 1
    if run >= max(2, len(vals) // 4):
        return vals[-1]
    return None


def eval_limit(phi: LimitFunctional, f: BoundedFunction) -> Optional[Fraction]:
    """Limit of f along phi: exact value, or None for undetermined.

    A finitely modified constant has the constant as its limit along any
    subsequence surrogate.  A sampled function must stabilize exactly.
    """
    if f.tag == "c0_plus_const":
        return f.const
    pts = [p for p in phi.along if p <= f.horizon]
    if not pts:
        return None
    vals = [f.evaluate(p) for p in pts]
    return _stabilized(vals)


def _iterated_max_limit(outer: LimitFunctional, inner: LimitFunctional,
                        f: BoundedFunction) -> Optional[Fraction]:
    if f.tag == "c0_plus_const":
        # f(max(s, .)) is f modified on the finite prefix [1, s], so the
        # inner limit is f's constant for every s, and so is the outer.
        return f.const
    horizon = min(outer.horizon, inner.horizon)
    if f.tag == "sampled":
        horizon = min(horizon, f.horizon)
    outer_pts = [s for s in outer.along if s <= horizon // 2]
    inner_pts = [t for t in inner.along if t <= horizon]
    if not outer_pts or not inner_pts:
        return None
    rows = []
    for s in outer_pts:
        vals = [f.evaluate(max(s, t)) for t in inner_pts]
        v = _stabilized(vals)
        if v is None:
            return None
        rows.append(v)
    return _stabilized(rows)


def arens_box(omega: LimitFunctional, upsilon: LimitFunctional,
              f: BoundedFunction) -> Optional[Fraction]:
    """First the inner limit along upsilon, then the outer along omega,
    of f(max(s, t)).

    When both this and the plain limit along upsilon are determined they
    must agree (the max of a fixed s against an escaping t is eventually
    t); that collapse is asserted, not assumed.
    """
    value = _iterated_max_limit(omega, upsilon, f)
    collapse = eval_limit(upsilon, f)
    if value is not None and collapse is not None and value != collapse:
        raise ArithmeticError(
            f"iterated limit {value} disagrees with its collapse {collapse}")
    return value


def arens_diamond(omega: LimitFunctional, upsilon: LimitFunctional,
                  f: BoundedFunction) -> Optional[Fraction]:
    """The reversed iteration: inner along omega, outer along upsilon."""
    value = _iterated_max_limit(upsilon, omega, f)
    collapse = eval_limit(omega, f)
    if value is not None and collapse is not None and value != collapse:
        raise ArithmeticError(
            f"iterated limit {value} disagrees with its collapse {collapse}")
    return value


@dataclass(frozen=True)
class WAPVerdict:
    status: str                      # WAP-consistent | NOT-WAP | UNDETERMINED
    witness: Optional[dict] = None
    detail: str = ""

    @property
    def is_not_wap(self) -> bool:
        return self.status == NOT_WAP


def wap_test(f: BoundedFunction, pairs: Sequence) -> WAPVerdict:
    """Double-limit test over a family of subsequence pairs.

    A determined, unequal (box, diamond) pair is a genuine counterexample
    and certifies NOT-WAP.  Agreement everywhere is only consistency for
    sampled functions; finitely modified constants are certified members
    outright (they sit inside the vanishing-plus-constant class, which is
    exactly the weakly-almost-periodic part over (N, max)).
    """
    pairs = list(pairs)
    determined = 0
    for omega, upsilon in pairs:
        box = arens_box(omega, upsilon, f)
        diamond = arens_diamond(omega, upsilon, f)
        if box is None or diamond is None:
            continue
        determined += 1
        if box != diamond:
            return WAPVerdict(NOT_WAP, witness={
                "omega": omega, "upsilon": upsilon,
                "box": box, "diamond": diamond},
                detail="iterated limits disagree exactly")
    if f.tag == "c0_plus_const":
        return WAPVerdict(WAP_CONSISTENT,
                          witness={"pairs": len(pairs), "determined": determined},
                          detail="membership certified: vanishing part plus a constant")
    if determined == 0:
        return WAPVerdict(UNDETERMINED, detail="no pair stabilized")
    return WAPVerdict(WAP_CONSISTENT,
                      witness={"pairs": len(pairs), "determined": determined},
                      detail="all determined pairs agree (consistency only)")


def indicator_of_evens(horizon: int) -> BoundedFunction:
    return BoundedFunction.sampled(
        [Fraction(1) if n % 2 == 0 else Fraction(0) for n in range(1, horizon + 1)])


def subsequence_pair_family(count: int, horizon: int, seed: int = 0) -> list:
    """Deterministic family of subsequence pairs, led by evens/odds."""
    rng = random.Random(seed)
    pairs = [(LimitFunctional.evens(horizon), LimitFunctional.odds(horizon))]
    while len(pairs) < count:
        a = LimitFunctional.arithmetic(rng.randint(1, 6), rng.randint(1, 6), horizon)
        b = LimitFunctional.arithmetic(rng.randint(1, 6), rng.randint(1, 6), horizon)
        pairs.append((a, b))
    return pairs[:count]


def random_c0_plus_const(rng: random.Random, support_max: int = 30,
                         denom_max: int = 9) -> BoundedFunction:
    mod = {}
    for _ in range(rng.randint(0, 6)):
        mod[rng.randint(1, support_max)] = Fraction(
            rng.randint(-9, 9), rng.randint(1, denom_max))
    const = Fraction(rng.randint(-9, 9), rng.randint(1, denom_max))
    return BoundedFunction.c0_plus_const(mod, const)


# ---------------------------------------------------------------------------
# exact computations over l1(N, max): the telescoping identity and its
# sharpness witness


def telescoping_check(a: L1Vector, x: BoundedFunction, s_max: int) -> Verdict:
    """Invariance hypothesis, telescoped identity, and vanishing conclusion.

    Hypothesis (checked first): <a, x> = <delta_s * a, x> for every
    s <= s_max.  Under it the partial sums telescope,
    sum_{n<=s} a_n x(n) = x(s) * sum_{n<=s} a_n for each s <= s_max, and
    once s_max clears the support of a and of x's vanishing part the
    conclusion is that a pairs to zero against the vanishing part of x
    (equivalently, <a, x> equals the constant of x times the total mass
    of a).
    """
    S = a.instance
    if not isinstance(S, NatMax):
        raise TypeError("the telescoping argument is specific to (N, max)")
    if x.tag != "c0_plus_const":
        raise TypeError("x must be a finitely modified constant")
    if a.is_zero:
        return passed(detail="vacuous: a = 0")
    from .l1 import pairing
    base = pairing(a, x)
    for s in range(1, s_max + 1):
        moved = pairing(convolve(L1Vector.delta(S, s), a), x)
        if moved != base:
            return failed(witness={"s": s, "lhs": base, "rhs": moved},
                          detail=f"hypothesis fails at s = {s}")
    supp = a.support()
    for s in range(1, s_max + 1):
        head = sum((c * x.evaluate(t) for t, c in a.terms() if t <= s), Fraction(0))
        mass = sum((c for t, c in a.terms() if t <= s), Fraction(0))
        if head != x.evaluate(s) * mass:
            raise ArithmeticError(
                f"telescoped identity failed at s = {s} although the "
                f"hypothesis held; internal inconsistency")
    clear = max(supp + list(x.mod) + [0])
    if s_max <= clear:
        return passed(witness={"s_max": s_max},
                      detail="hypothesis and identity verified; s_max does not "
                             "clear the supports, conclusion not evaluated")
    vanishing_pairing = base - x.const * _coeff_sum(a)
    if vanishing_pairing != 0:
        return failed(witness={"vanishing_part_pairing": vanishing_pairing},
                      detail="conclusion failed although the hypothesis held; "
                             "this should be unreachable")
    return passed(witness={"s_max": s_max, "pairing": base,
                           "vanishing_part_pairing": Fraction(0)},
                  detail="hypothesis, identity and vanishing conclusion all hold")


@dataclass(frozen=True)
class SharpnessWitness:
    """An x with <x, a> = 0 whose translate pairing is nonzero."""

    x: L1Vector
    s: int
    pairing_a: Fraction
    pairing_translated: Fraction


def counterexample_x(a: L1Vector):
    """Functional x and index s with <x, a> = 0 but <x, delta_s * a> != 0.

    This witnesses that "pairs to zero" does not survive the module
    action, which is the sharp end of the uniqueness argument.  Needs
    total mass != 0; the zero-mass case is a different branch and returns
    NOT-APPLICABLE.  Single-term vectors use the one-point variant.
    """
    S = a.instance
    if not isinstance(S, NatMax):
        raise TypeError("the construction is specific to (N, max)")
    total = _coeff_sum(a)
    if total == 0:
        return not_applicable("total mass is zero; no such x exists this way")
    supp = sorted(a.support())
    if len(supp) == 1:
        s0 = supp[0]
        s = s0 + 1
        x = L1Vector.delta(S, s)
    else:
        s0, s1 = supp[0], supp[1]
        s = None
        for cand in range(s1 + 1, max(supp) + 2):
            mass = sum((c for t, c in a.terms() if t <= cand), Fraction(0))
            if a.coeff(cand) == 0 and mass != 0:
                s = cand
                break
        if s is None:
            raise ArithmeticError("no admissible s found; unreachable when "
                                  "the total mass is nonzero")
        x = (L1Vector.delta(S, s1, a.coeff(s0))
             - L1Vector.delta(S, s0, a.coeff(s1))
             + L1Vector.delta(S, s))
    p0 = pairing_vectors(x, a)
    translated = convolve(L1Vector.delta(S, s), a)
    p1 = pairing_vectors(x, translated)
    expected = sum((c for t, c in a.terms() if t <= s), Fraction(0))
    if p0 != 0 or p1 != expected or p1 == 0:
        raise ArithmeticError(
            f"witness verification failed: <x,a> = {p0}, "
            f"<x, translated> = {p1}, expected {expected}")
    return SharpnessWitness(x=x, s=s, pairing_a=p0, pairing_translated=p1)
