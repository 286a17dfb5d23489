"""Minimum-step-enchained value sets and the saturation procedure that
computes the maximal one, F_k.

An h-step chain is an arithmetic progression of at least three rationals in
[0, 1] with common difference h.  A set F is a (1/k)-minimum-step-enchained
set when (1) it contains the uniform ladder {i/k} as the only chain with
extremes {0, 1} at step <= 1/k, and (2) every other value is an interior
point of an admissible chain: step p >= 1/k, and when p > 1/k each extreme
that is not 0 or 1 must itself be interior to a strictly finer admissible
chain.  The saturation below grows {0, 1} by repeatedly adjoining all chains
whose extremes are already supported, tracking for every value the minimum
admissible step seen so far (the S-map); it stops at the fixpoint where a
full pass adds no value and lowers no S entry.

The output is unique regardless of iteration order, so the implementation
may skip provably idempotent pair revisits: values are only ever added and
S entries only ever lowered, hence a pair neither of whose endpoints changed
since its last examination reproduces its previous outcome exactly.  The
pass-by-pass trace therefore matches a literal full rescan, which is what
makes the literal-guard / strict-fixpoint divergence report meaningful.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from heapq import heappop, heappush
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError

# internal representation: canonical (num, den) int pairs, den > 0
_Key = tuple[int, int]
_ZERO: _Key = (0, 1)
_ONE: _Key = (1, 1)


def _key(value: Fraction) -> _Key:
    return (value.numerator, value.denominator)


def _frac(key: _Key) -> Fraction:
    return Fraction(*key)


def _lt(a: _Key, b: _Key) -> bool:
    return a[0] * b[1] < b[0] * a[1]


def _canon(num: int, den: int) -> _Key:
    g = gcd(num, den)
    return (num // g, den // g)


def _sorted_keys(keys: Iterable[_Key]) -> list[_Key]:
    return sorted(keys, key=_frac)


@dataclass(frozen=True)
class StepChain:
    """Arithmetic progression y_0 < ... < y_r in [0, 1] with difference
    `step`; the first and last points are its extremes, the rest interior."""

    points: tuple[Fraction, ...]
    step: Fraction

    def __post_init__(self):
        if len(self.points) < 3:
            raise DomainError("a step chain needs length r >= 2")
        for a, b in zip(self.points, self.points[1:]):
            if b - a != self.step:
                raise DomainError("unequal steps in chain")

    @property
    def extremes(self) -> tuple[Fraction, Fraction]:
        return self.points[0], self.points[-1]

    @property
    def interior(self) -> tuple[Fraction, ...]:
        return self.points[1:-1]


def make_chain(y1: Fraction, y2: Fraction, r: int) -> StepChain:
    """The p-step chain with extremes {y1, y2} and length r, p = (y2-y1)/r."""
    if r < 2:
        raise DomainError("chain length r must be at least 2")
    if not Fraction(0) <= y1 < y2 <= Fraction(1):
        raise DomainError("chain extremes must satisfy 0 <= y1 < y2 <= 1")
    p = (y2 - y1) / r
    return StepChain(tuple(y1 + i * p for i in range(r + 1)), p)


def uniform_ladder(k: int) -> tuple[Fraction, ...]:
    """The tones (0, 1/k, 2/k, ..., 1); always contained in F_k and in the
    image of any maximum contrast greyscale at chromatic number k + 1."""
    if k < 1:
        raise DomainError("ladder needs k >= 1")
    return tuple(Fraction(i, k) for i in range(k + 1))


@dataclass(eq=False)
class EnchainedSet:
    """Result of the saturation: the maximal (1/k)-minimum-step-enchained
    set, its S-map, and bookkeeping about how the fixpoint was reached.

    ``literal_guard_pass`` is the first pass in which no new value appeared
    (where a loop guarded only by "new values were added" would stop);
    ``guard_divergence`` reports whether any later pass still added values,
    i.e. whether that weaker guard would have returned a strictly smaller
    set than the fixpoint reached here.
    """

    k: int
    values: tuple[Fraction, ...]
    s_map: dict[Fraction, Fraction]
    passes: int
    literal_guard_pass: int | None
    guard_divergence: bool
    _strata: tuple[tuple[Fraction, ...], ...] | None = field(default=None, repr=False)

    @property
    def cardinality(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, value: Fraction) -> bool:
        return value in self.s_map

    def strata(self) -> tuple[tuple[Fraction, ...], ...]:
        """Layers A_0, A_1, ...: A_0 = {0, 1}; A_i holds the values first
        reachable through an admissible chain whose extremes already lie in
        earlier layers.  Within each layer y and 1 - y appear together."""
        if self._strata is None:
            self._strata = _compute_strata(self)
        return self._strata


def _chain_interior(y1: _Key, gap_n: int, gap_d: int, r: int) -> list[_Key]:
    # interior points of the (gap/r)-step chain starting at y1
    n1, d1 = y1
    den = d1 * gap_d * r
    base = n1 * gap_d * r
    step = gap_n * d1
    return [_canon(base + t * step, den) for t in range(1, r)]


def _saturate(k: int):
    """Run the saturation from {0, 1}; returns (values, S-map, stats).

    Each pass examines, in ascending pair order, every pair whose outcome
    could differ from its previous examination: pairs touching a value that
    is new or whose S entry dropped.  When an S entry drops mid-pass, the
    pairs of that value sitting later in the pass order are re-queued, so
    the live-update semantics of a full rescan are preserved exactly.
    """
    S: dict[_Key, _Key] = {_ZERO: (0, 1), _ONE: (0, 1)}
    vals: list[_Key] = [_ZERO, _ONE]
    dirty: set[_Key] = {_ZERO, _ONE}
    passes = 0
    literal_guard_pass: int | None = None
    diverged = False
    new_history: list[int] = []

    while True:
        passes += 1
        n_vals = len(vals)
        index = {v: i for i, v in enumerate(vals)}
        dirty_idx = sorted(index[v] for v in dirty)
        dirty_set = set(dirty_idx)
        new_values: dict[_Key, _Key] = {}
        changed: set[_Key] = set()
        extras: list[tuple[int, int]] = []
        extra_seen: set[tuple[int, int]] = set()

        def min_partner(i: int) -> int:
            # first j with vals[j] - vals[i] >= 2/k (shorter gaps admit no chain)
            ni, di = vals[i]
            lo, hi = i + 1, n_vals
            while lo < hi:
                mid = (lo + hi) // 2
                nm, dm = vals[mid]
                if (nm * di - ni * dm) * k >= 2 * di * dm:
                    hi = mid
                else:
                    lo = mid + 1
            return lo

        def base_pairs():
            for i in range(n_vals):
                start = min_partner(i)
                if i in dirty_set:
                    for j in range(start, n_vals):
                        yield (i, j)
                else:
                    pos = bisect_left(dirty_idx, start)
                    for j in dirty_idx[pos:]:
                        yield (i, j)

        def requeue_later(i: int, iz: int) -> None:
            # pairs of the just-lowered value that a full rescan would still
            # visit in this pass; pairs with a dirty endpoint are already in
            # the base stream
            if iz in dirty_set:
                return
            for a in range(i + 1, iz):
                if a not in dirty_set:
                    pair = (a, iz)
                    if pair not in extra_seen:
                        extra_seen.add(pair)
                        heappush(extras, pair)
            for b in range(iz + 1, n_vals):
                if b not in dirty_set:
                    pair = (iz, b)
                    if pair not in extra_seen:
                        extra_seen.add(pair)
                        heappush(extras, pair)

        def process(i: int, j: int) -> None:
            y1 = vals[i]
            y2 = vals[j]
            n1, d1 = y1
            n2, d2 = y2
            gap_n = n2 * d1 - n1 * d2
            gap_d = d1 * d2
            s1 = S[y1]
            s2 = S[y2]
            smax = s1 if not _lt(s1, s2) else s2
            sn, sd = smax
            r = 2
            while gap_n * k >= gap_d * r:
                # admissible only when p = gap/r strictly exceeds both
                # extremes' current minimum steps
                if gap_n * sd > sn * gap_d * r:
                    p = _canon(gap_n, gap_d * r)
                    for pt in _chain_interior(y1, gap_n, gap_d, r):
                        if pt in S:
                            if _lt(p, S[pt]):
                                S[pt] = p
                                changed.add(pt)
                                requeue_later(i, index[pt])
                        else:
                            prev = new_values.get(pt)
                            if prev is None or _lt(p, prev):
                                new_values[pt] = p
                r += 1

        stream = base_pairs()
        upcoming = next(stream, None)
        while upcoming is not None or extras:
            if extras and (upcoming is None or extras[0] <= upcoming):
                pair = heappop(extras)
                if pair == upcoming:
                    upcoming = next(stream, None)
            else:
                pair = upcoming
                upcoming = next(stream, None)
            process(*pair)

        new_history.append(len(new_values))
        if not new_values:
            if literal_guard_pass is None:
                literal_guard_pass = passes
            if not changed:
                break
        elif literal_guard_pass is not None:
            diverged = True

        for v, p in new_values.items():
            S[v] = p
        vals = _sorted_keys(S)
        dirty = changed | set(new_values)

    return vals, S, passes, literal_guard_pass, diverged, new_history


@lru_cache(maxsize=None)
def maximal_enchained_set(k: int) -> EnchainedSet:
    """Compute F_k, the unique maximal (1/k)-minimum-step-enchained set."""
    if k < 2:
        raise DomainError("enchained sets need k >= 2")
    vals, S, passes, guard_pass, diverged, _ = _saturate(k)
    values = tuple(_frac(v) for v in vals)
    s_map = {_frac(v): _frac(S[v]) for v in vals}
    return EnchainedSet(k, values, s_map, passes, guard_pass, diverged)


def _compute_strata(es: EnchainedSet) -> tuple[tuple[Fraction, ...], ...]:
    k = es.k
    vals = [_key(v) for v in es.values]
    present = set(vals)
    S = {_key(v): _key(s) for v, s in es.s_map.items()}
    layer: dict[_Key, int] = {_ZERO: 0, _ONE: 0}
    strata: list[list[_Key]] = [[_ZERO, _ONE]]
    frontier: list[_Key] = [_ZERO, _ONE]
    while len(layer) < len(vals):
        next_layer: set[_Key] = set()
        older = list(layer)
        frontier_set = set(frontier)
        pairs: set[tuple[_Key, _Key]] = set()
        for f in frontier:
            for o in older:
                if o == f and o not in frontier_set:
                    continue
                if o != f:
                    pairs.add((o, f) if _lt(o, f) else (f, o))
        for y1, y2 in pairs:
            n1, d1 = y1
            n2, d2 = y2
            gap_n = n2 * d1 - n1 * d2
            gap_d = d1 * d2
            s1, s2 = S[y1], S[y2]
            smax = s1 if not _lt(s1, s2) else s2
            sn, sd = smax
            r = 2
            while gap_n * k >= gap_d * r:
                if gap_n * sd > sn * gap_d * r:
                    for pt in _chain_interior(y1, gap_n, gap_d, r):
                        if pt not in layer:
                            if pt not in present:
                                raise DomainError("saturated set misses a chain point")
                            next_layer.add(pt)
                r += 1
        if not next_layer:
            raise DomainError("stratification stalled before covering the set")
        ordered = _sorted_keys(next_layer)
        strata.append(ordered)
        for pt in ordered:
            layer[pt] = len(strata) - 1
        frontier = ordered
    return tuple(tuple(_frac(v) for v in row) for row in strata)


# ---------------------------------------------------------------------------
# checks over a fixed, user-supplied set

def _saturate_fixed(keys: Sequence[_Key], k: int) -> dict[_Key, _Key]:
    """S-map over a fixed set: no values are added, chains must lie entirely
    inside the set.  Plain rescans until stable; the sets handed to this are
    small (the growing saturation above is the tuned path)."""
    present = set(keys)
    S: dict[_Key, _Key] = {}
    for extreme in (_ZERO, _ONE):
        if extreme in present:
            S[extreme] = (0, 1)
    ordered = _sorted_keys(present)
    changed = True
    while changed:
        changed = False
        for a, y1 in enumerate(ordered):
            if y1 not in S:
                continue
            n1, d1 = y1
            for y2 in ordered[a + 1 :]:
                if y2 not in S:
                    continue
                n2, d2 = y2
                gap_n = n2 * d1 - n1 * d2
                gap_d = d1 * d2
                s1, s2 = S[y1], S[y2]
                smax = s1 if not _lt(s1, s2) else s2
                sn, sd = smax
                r = 2
                while gap_n * k >= gap_d * r:
                    if gap_n * sd > sn * gap_d * r:
                        pts = _chain_interior(y1, gap_n, gap_d, r)
                        if all(pt in present for pt in pts):
                            p = _canon(gap_n, gap_d * r)
                            for pt in pts:
                                if pt not in S or _lt(p, S[pt]):
                                    S[pt] = p
                                    changed = True
                    r += 1
    return S


def s_value(values: Iterable[Fraction], k: int, y: Fraction) -> Fraction:
    """Minimum admissible chain step for y inside the given set: the least
    p >= 1/k such that y is interior to a p-step chain contained in the set
    whose extremes are themselves supported at strictly smaller steps (0 and
    1 are always supported).  Returns 0 when no such chain exists."""
    if k < 2:
        raise DomainError("s_value needs k >= 2")
    keys = {_key(v) for v in values}
    target = _key(y)
    if target not in keys:
        raise DomainError(f"{y} is not a member of the given set")
    if target in (_ZERO, _ONE):
        return Fraction(0)
    S = _saturate_fixed(list(keys), k)
    return _frac(S[target]) if target in S else Fraction(0)


@dataclass(frozen=True)
class EnchainedCheck:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def is_enchained_set(values: Iterable[Fraction], k: int) -> EnchainedCheck:
    """Decide whether the set satisfies both defining assertions for step
    1/k, reporting every violated clause."""
    if k < 2:
        raise DomainError("is_enchained_set needs k >= 2")
    vs = sorted(set(values))
    problems: list[str] = []
    if any(v < 0 or v > 1 for v in vs):
        return EnchainedCheck(False, ("values outside [0, 1]",))
    present = set(vs)

    missing = sorted(set(uniform_ladder(k)) - present)
    if missing:
        problems.append(
            f"no (1/{k})-step chain with extremes {{0, 1}}: missing {missing}"
        )
    # a finer chain with extremes {0, 1} needs r+1 distinct members of the set
    for r in range(k + 1, len(vs)):
        if all(Fraction(i, r) in present for i in range(r + 1)):
            problems.append(f"finer (1/{r})-step chain with extremes {{0, 1}} exists")

    S = _saturate_fixed([_key(v) for v in vs], k)
    for v in vs:
        kv = _key(v)
        if kv in (_ZERO, _ONE):
            continue
        if kv not in S:
            problems.append(f"{v} is not interior to any admissible chain")

    return EnchainedCheck(not problems, tuple(problems))


def export_dict(es: EnchainedSet, include_strata: bool = False) -> dict:
    """JSON-ready view: {"k", "values", "cardinality"} plus optional strata."""
    out: dict = {
        "k": es.k,
        "values": [f"{v.numerator}/{v.denominator}" for v in es.values],
        "cardinality": es.cardinality,
    }
    if include_strata:
        out["strata"] = [
            [f"{v.numerator}/{v.denominator}" for v in row] for row in es.strata()
        ]
    return out
