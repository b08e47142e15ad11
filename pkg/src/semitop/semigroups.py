"""Countable discrete semigroups and window-relative structural checks.

Every instance exposes a fixed injective enumeration of its elements in a
canonical graded order; ``window(rank)`` is the first ``rank`` elements of
that enumeration.  The structural predicates below (cancellativity, weak
cancellativity, finite left divisibility) inspect such windows only, and
their verdicts are explicitly window-relative: a PASS says the finite
window showed no obstruction, never that the infinite statement holds.

Elements are plain hashable Python values (tuples, strings, integers, or
the small classes below).  Cross-instance arithmetic is rejected at the
level of the structures that carry an instance tag (vectors, checkers);
``validate`` additionally rejects structurally malformed elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, count, islice, permutations, product as iproduct
from typing import Any, Iterable, Iterator, Optional

from .verdicts import NotReachable, Verdict, failed, passed


class _Infinity:
    """The adjoined absorbing point of the one-point compactification."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()


# ---------------------------------------------------------------------------
# groups used as Rees matrix entries


class CyclicGroup:
    def __init__(self, modulus: int):
        modulus = int(modulus)
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        self.name = f"Z{modulus}"
        self.identity = 0

    def op(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def validate(self, x: Any) -> None:
        if not isinstance(x, int) or not 0 <= x < self.modulus:
            raise TypeError(f"{x!r} is not an element of {self.name}")

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))

    def parse(self, s: str) -> int:
        return int(s) % self.modulus

    def show(self, x: int) -> str:
        return str(x)


class IntegerGroup:
    name = "Z"
    identity = 0

    def op(self, x: int, y: int) -> int:
        return x + y

    def validate(self, x: Any) -> None:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"{x!r} is not an integer")

    def elements(self) -> Iterator[int]:
        yield 0
        for n in count(1):
            yield n
            yield -n

    def parse(self, s: str) -> int:
        return int(s)

    def show(self, x: int) -> str:
        return str(x)


class IntegerVectorGroup:
    def __init__(self, dim: int):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.name = f"Z^{dim}"
        self.identity = (0,) * dim

    def op(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def validate(self, x: Any) -> None:
        if not (isinstance(x, tuple) and len(x) == self.dim
                and all(isinstance(c, int) and not isinstance(c, bool) for c in x)):
            raise TypeError(f"{x!r} is not an element of {self.name}")

    def elements(self) -> Iterator[tuple]:
        for norm in count(0):
            yield from self._with_norm(norm)

    def _with_norm(self, norm: int) -> Iterator[tuple]:
        def build(rest: int, k: int):
            if k == 1:
                signs = (rest,) if rest == 0 else (-rest, rest)
                for s in signs:
                    yield (s,)
                return
            for mag in range(rest + 1):
                signs = (mag,) if mag == 0 else (-mag, mag)
                for s in signs:
                    for tail in build(rest - mag, k - 1):
                        yield (s,) + tail

        yield from build(norm, self.dim)

    def parse(self, s: str) -> tuple:
        body = s.strip().strip("()")
        parts = [p for p in body.split(",") if p.strip() != ""]
        v = tuple(int(p) for p in parts)
        self.validate(v)
        return v

    def show(self, x: tuple) -> str:
        return "(" + ",".join(str(c) for c in x) + ")"


# ---------------------------------------------------------------------------
# structured elements


@dataclass(frozen=True)
class ReesElement:
    """A one-nonzero-entry matrix, or the distinguished absorbing zero."""

    entry: Any = None
    row: Optional[int] = None
    col: Optional[int] = None

    @classmethod
    def zero(cls) -> "ReesElement":
        return cls(None, None, None)

    @property
    def is_zero(self) -> bool:
        return self.entry is None

    def __repr__(self) -> str:
        if self.is_zero:
            return "ReesZero"
        return f"{self.entry!r}e[{self.row},{self.col}]"


REES_ZERO = ReesElement.zero()


class PartialMap:
    """Injective partial self-map of the positive integers.

    The value 0 encodes "undefined": as a total map on {0, 1, 2, ...} the
    element sends 0 and everything outside its injective domain to 0.  The
    empty map is the zero of the composition semigroup.
    """

    __slots__ = ("_pairs", "_map")

    def __init__(self, mapping: Any = ()):
        items = mapping.items() if isinstance(mapping, dict) else mapping
        pairs = []
        for n, v in items:
            n, v = int(n), int(v)
            if n < 1 or v < 1:
                raise ValueError("domain points and values must be positive")
            pairs.append((n, v))
        pairs.sort()
        m = dict(pairs)
        if len(m) != len(pairs):
            raise ValueError("duplicate domain point")
        if len(set(m.values())) != len(m):
            raise ValueError("values must be injective")
        self._pairs = tuple(pairs)
        self._map = m

    def __call__(self, n: int) -> int:
        return self._map.get(n, 0)

    @property
    def pairs(self) -> tuple:
        return self._pairs

    @property
    def domain(self) -> tuple:
        return tuple(n for n, _ in self._pairs)

    @property
    def image(self) -> tuple:
        return tuple(sorted(v for _, v in self._pairs))

    @property
    def is_zero(self) -> bool:
        return not self._pairs

    def compose(self, other: "PartialMap") -> "PartialMap":
        """self after other: n maps to self(other(n))."""
        out = {}
        for n, v in other._pairs:
            w = self._map.get(v, 0)
            if w:
                out[n] = w
        return PartialMap(out)

    def inverse(self) -> "PartialMap":
        return PartialMap({v: n for n, v in self._pairs})

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, PartialMap) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "PartialMap(0)"
        body = ", ".join(f"{n}->{v}" for n, v in self._pairs)
        return f"PartialMap({body})"


def inverse_with_axioms(f: PartialMap) -> tuple[PartialMap, bool]:
    """The relational inverse, together with both regularity identities."""
    finv = f.inverse()
    ok = (f.compose(finv).compose(f) == f
          and finv.compose(f).compose(finv) == finv)
    return finv, ok


# ---------------------------------------------------------------------------
# instances


class SemigroupInstance:
    """Base for concrete instances; subclasses fix law and enumeration."""

    name = "abstract"
    has_zero: Any = None          # absorbing element, when one exists
    generators: Optional[tuple] = None  # declared only when finitely generated

    @property
    def key(self) -> str:
        """Interop tag: vectors over instances with equal keys may combine."""
        return self.name

    def product(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def validate(self, x: Any) -> None:
        raise NotImplementedError

    def elements(self) -> Iterator[Any]:
        raise NotImplementedError

    def window(self, rank: int) -> list:
        if rank < 1:
            raise ValueError("window rank must be positive")
        return list(islice(self.elements(), rank))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


def _sum_compositions(total: int, k: int) -> Iterator[tuple]:
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _sum_compositions(total - first, k - 1):
            yield (first,) + rest


class ZPlusK(SemigroupInstance):
    """(Z_+)^k under coordinatewise addition, graded by coordinate sum."""

    def __init__(self, k: int):
        k = int(k)
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.name = f"zplus_{k}"
        self.generators = tuple(
            tuple(1 if i == j else 0 for i in range(k)) for j in range(k)
        )

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        return tuple(a + b for a, b in zip(x, y))

    def validate(self, x):
        if not (isinstance(x, tuple) and len(x) == self.k
                and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in x)):
            raise TypeError(f"{x!r} is not an element of {self.name}")

    def elements(self):
        for grade in count(0):
            yield from _sum_compositions(grade, self.k)


class FreeWords(SemigroupInstance):
    """Free semigroup on a finite alphabet: nonempty words, concatenation."""

    def __init__(self, alphabet: str):
        if not alphabet or len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet must be nonempty without repeats")
        self.alphabet = str(alphabet)
        self.name = f"free_{alphabet}"
        self.generators = tuple(alphabet)

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        return x + y

    def validate(self, x):
        if not (isinstance(x, str) and x and all(c in self.alphabet for c in x)):
            raise TypeError(f"{x!r} is not a word over {self.alphabet!r}")

    def elements(self):
        for length in count(1):
            for letters in iproduct(self.alphabet, repeat=length):
                yield "".join(letters)


class NatMul(SemigroupInstance):
    """Positive integers under multiplication."""

    name = "nat_mul"

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        return x * y

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise TypeError(f"{x!r} is not a positive integer")

    def elements(self):
        return count(1)


class NatMax(SemigroupInstance):
    """Positive integers under the maximum operation."""

    name = "nat_max"

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        return max(x, y)

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise TypeError(f"{x!r} is not a positive integer")

    def elements(self):
        return count(1)


class NatInfinity(SemigroupInstance):
    """Positive integers with an adjoined point INF; addition, INF absorbs."""

    name = "nat_infty"
    has_zero = INF

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        if x is INF or y is INF:
            return INF
        return x + y

    def validate(self, x):
        if x is INF:
            return
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise TypeError(f"{x!r} is not a positive integer or INF")

    def elements(self):
        yield INF
        yield from count(1)


class ZPlusTimesZ(SemigroupInstance):
    """Z_+ x Z under componentwise addition, graded by a + |u|."""

    name = "zplus_times_z"

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        return (x[0] + y[0], x[1] + y[1])

    def validate(self, x):
        if not (isinstance(x, tuple) and len(x) == 2
                and all(isinstance(c, int) and not isinstance(c, bool) for c in x)
                and x[0] >= 0):
            raise TypeError(f"{x!r} is not an element of {self.name}")

    def elements(self):
        for grade in count(0):
            for a in range(grade + 1):
                mag = grade - a
                if mag == 0:
                    yield (a, 0)
                else:
                    yield (a, -mag)
                    yield (a, mag)


class ReesMatrix(SemigroupInstance):
    """Rees matrix semigroup over a group, with an adjoined absorbing zero.

    Elements are single-nonzero-entry |I| x |J| matrices written as
    (entry, row, col) with 1-based indices, plus the distinguished zero.
    The sandwich array P has shape |J| x |I| with group entries, and
    (s, i, j) * (t, k, l) = (s P[j][k] t, i, l).
    """

    def __init__(self, group: Any, n_rows: int, n_cols: int, sandwich: Iterable):
        n_rows, n_cols = int(n_rows), int(n_cols)
        if n_rows < 1 or n_cols < 1:
            raise ValueError("index sets must be nonempty")
        P = tuple(tuple(row) for row in sandwich)
        if len(P) != n_cols or any(len(row) != n_rows for row in P):
            raise ValueError("sandwich array must have shape |J| x |I|")
        for row in P:
            for entry in row:
                group.validate(entry)
        self.group = group
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.sandwich = P
        self.name = f"rees({group.name};{n_rows}x{n_cols})"
        self.has_zero = REES_ZERO

    @property
    def key(self) -> str:
        return f"{self.name}|P={self.sandwich!r}"

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        if x.is_zero or y.is_zero:
            return REES_ZERO
        mid = self.sandwich[x.col - 1][y.row - 1]
        entry = self.group.op(self.group.op(x.entry, mid), y.entry)
        return ReesElement(entry, x.row, y.col)

    def validate(self, x):
        if not isinstance(x, ReesElement):
            raise TypeError(f"{x!r} is not a Rees matrix element")
        if x.is_zero:
            return
        self.group.validate(x.entry)
        if not (1 <= x.row <= self.n_rows and 1 <= x.col <= self.n_cols):
            raise TypeError(f"{x!r} has indices outside the declared ranges")

    def elements(self):
        yield REES_ZERO
        for g in self.group.elements():
            for i in range(1, self.n_rows + 1):
                for j in range(1, self.n_cols + 1):
                    yield ReesElement(g, i, j)


class PartialMaps(SemigroupInstance):
    """Injective partial self-maps of N under composition f*g = f after g."""

    name = "partial_maps"
    has_zero = PartialMap()

    def product(self, x, y):
        self.validate(x)
        self.validate(y)
        return x.compose(y)

    def validate(self, x):
        if not isinstance(x, PartialMap):
            raise TypeError(f"{x!r} is not a PartialMap")

    def elements(self):
        yield PartialMap()
        for bound in count(1):
            batch = []
            pts = range(1, bound + 1)
            for size in range(1, bound + 1):
                for dom in combinations(pts, size):
                    for img in permutations(pts, size):
                        if max(max(dom), max(img)) != bound:
                            continue
                        batch.append(PartialMap(zip(dom, img)))
            batch.sort(key=lambda f: (len(f.pairs), f.pairs))
            yield from batch


# ---------------------------------------------------------------------------
# window-relative structural checks


def associativity_window(S: SemigroupInstance, rank: int) -> Verdict:
    win = S.window(rank)
    right = {}
    for y in win:
        for z in win:
            right[(y, z)] = S.product(y, z)
    for x in win:
        for y in win:
            xy = S.product(x, y)
            for z in win:
                if S.product(xy, z) != S.product(x, right[(y, z)]):
                    return failed(witness=(x, y, z), detail="associativity broke")
    return passed(detail=f"associative on window of rank {len(win)}")


def is_cancellative_window(S: SemigroupInstance, window_rank: int) -> Verdict:
    """Injectivity of every left and right translation on the window."""
    win = S.window(window_rank)
    for s in win:
        seen_left: dict = {}
        seen_right: dict = {}
        for t in win:
            v = S.product(s, t)
            if v in seen_left and seen_left[v] != t:
                return failed(witness={"side": "left", "translate_by": s,
                                       "first": seen_left[v], "second": t, "value": v})
            seen_left[v] = t
            w = S.product(t, s)
            if w in seen_right and seen_right[w] != t:
                return failed(witness={"side": "right", "translate_by": s,
                                       "first": seen_right[w], "second": t, "value": w})
            seen_right[w] = t
    return passed(detail=f"cancellative on window of rank {len(win)}")


def _preimage_map(S: SemigroupInstance, win: list, side: str) -> dict:
    pre: dict = {}
    for s in win:
        for t in win:
            v = S.product(s, t) if side == "left" else S.product(t, s)
            pre.setdefault((s, v), []).append(t)
    return pre


def is_weakly_cancellative_window(S: SemigroupInstance, window_rank: int,
                                  growth_threshold: Optional[int] = None,
                                  max_witnesses: int = 10) -> Verdict:
    """Finite-to-one behaviour of translations, detected by window growth.

    Preimage sets under a translation are counted in a half-size window and
    in the full window; a preimage set that keeps growing with the window
    and reaches the threshold is reported as a failure witness.  Preimage
    sets that are merely large but stable (for example the lower set of s
    under the max operation) do not fail.
    """
    r2 = window_rank
    r1 = max(1, window_rank // 2)
    if growth_threshold is None:
        growth_threshold = max(4, r2 // 4)
    win1 = S.window(r1)
    win2 = S.window(r2)
    witnesses = []
    for side in ("left", "right"):
        pre1 = _preimage_map(S, win1, side)
        pre2 = _preimage_map(S, win2, side)
        for key, small in pre1.items():
            big = pre2.get(key, [])
            if len(big) > len(small) and len(big) >= growth_threshold:
                s, target = key
                witnesses.append({"side": side, "translate_by": s, "target": target,
                                  "preimages": big, "counts": (len(small), len(big)),
                                  "window_ranks": (r1, r2)})
                if len(witnesses) >= max_witnesses:
                    break
        if len(witnesses) >= max_witnesses:
            break
    if witnesses:
        return failed(witness=witnesses,
                      detail="preimage sets grow with the window")
    return passed(detail=f"weakly cancellative at window rank {r2} "
                         f"(growth-checked against rank {r1})")


def is_finitely_left_divisible_window(S: SemigroupInstance, s: Any,
                                      window_rank: int,
                                      checkpoints: Optional[tuple] = None) -> Verdict:
    """Left divisor set of s, tracked across growing windows.

    Divisors are the t in the window with t*r = s for some r in the window.
    The set is recomputed at each checkpoint rank; a count still growing at
    the final checkpoint is failure evidence, a stable count passes.
    """
    S.validate(s)
    if checkpoints is None:
        checkpoints = (window_rank, (3 * window_rank + 1) // 2, 2 * window_rank)
    checkpoints = tuple(sorted(set(int(c) for c in checkpoints)))
    base_window = S.window(checkpoints[0])
    if s not in base_window:
        raise ValueError(f"{s!r} is not inside the window of rank {checkpoints[0]}")
    counts = {}
    divisors: list = []
    for r in checkpoints:
        win = S.window(r)
        divisors = [t for t in win if any(S.product(t, rr) == s for rr in win)]
        counts[r] = len(divisors)
    ordered = [counts[r] for r in checkpoints]
    growing = len(ordered) >= 2 and ordered[-1] > ordered[-2]
    witness = {"element": s, "divisors": divisors, "counts": counts}
    if growing:
        return failed(witness=witness, detail="divisor count grows with the window")
    return passed(witness=witness,
                  detail=f"divisor count stable at {ordered[-1]} across checkpoints")


def length(S: SemigroupInstance, x: Any, max_length: int = 24) -> int:
    """Least number of generators whose product is x, by breadth-first search.

    Raises NotReachable when the search closes or hits max_length without
    reaching x; an identity-free instance never reaches its neutral-looking
    elements, which is reported rather than looped on.
    """
    if S.generators is None:
        raise ValueError(f"{S.name} does not declare a finite generator set")
    S.validate(x)
    frontier = set(S.generators)
    if x in frontier:
        return 1
    seen = set(frontier)
    n = 1
    while n < max_length:
        nxt = set()
        for y in frontier:
            for c in S.generators:
                z = S.product(y, c)
                if z not in seen:
                    nxt.add(z)
        n += 1
        if x in nxt:
            return n
        if not nxt:
            raise NotReachable(
                f"{x!r} is not a product of generators (search closed at length {n - 1})")
        seen |= nxt
        frontier = nxt
    raise NotReachable(f"{x!r} not reached by products of <= {max_length} generators")
