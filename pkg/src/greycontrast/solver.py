"""Exact maximum-contrast solvers.

Two routes to the same answer: a direct enumeration oracle over a candidate
tone set, and a depth-first branch-and-bound that prunes on the lightest
tone (no optimal assignment puts an edge below 1/(chi - 1)) and on an
optimistic completion bound (undecided edges padded with tone 1).  In auto
mode the search restricts tones to the maximal enchained set for
k = chi(G) - 1, which provably contains the image of every maximum contrast
greyscale.

Witnesses are canonical: among all greyscales attaining the maximum vector,
the one whose vertex-tone sequence is lexicographically smallest.
"""

from __future__ import annotations

import itertools
from bisect import insort
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .enchained import maximal_enchained_set
from .errors import BudgetExceededError, DomainError
from .foundation import ONE, ZERO, Graph, chromatic_number, two_colourings
from .greyscale import ContrastVector, Greyscale, contrast_vector

FIVE_GRID = (ZERO, Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), ONE)


@dataclass(frozen=True)
class SearchConfig:
    """Solver knobs: explicit candidate tones (None means the enchained set
    for k = chi - 1), pruning toggle, an optional node budget, and a worker
    count handed through to enumeration oracles."""

    values: tuple[Fraction, ...] | None = None
    pruning: bool = True
    budget: int | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.values is not None:
            if ZERO not in self.values or ONE not in self.values:
                raise DomainError("candidate tone set must contain 0 and 1")


@dataclass(frozen=True)
class MaxContrastResult:
    vector: ContrastVector
    witness: Greyscale
    value_set: tuple[Fraction, ...]
    nodes: int
    chromatic_number: int


def _check_result(g: Graph, result: MaxContrastResult) -> MaxContrastResult:
    if contrast_vector(g, result.witness).tones != result.vector.tones:
        raise DomainError("witness does not reproduce the reported vector")
    if not set(result.witness.tones) <= set(result.value_set):
        raise DomainError("witness uses tones outside the candidate set")
    return result


# ---------------------------------------------------------------------------
# direct enumeration

def _rank_tables(values: tuple[Fraction, ...]):
    # ranks make the inner loops pure small-int work; rank order agrees with
    # tone order, so lexicographic comparisons are unchanged
    diffs = sorted({abs(a - b) for a in values for b in values})
    rank_of = {d: i for i, d in enumerate(diffs)}
    diff_rank = tuple(tuple(rank_of[abs(a - b)] for b in values) for a in values)
    return diffs, diff_rank


def _enumerate_block(
    edges: tuple[tuple[int, int], ...],
    base: tuple[int, ...],
    free: tuple[int, ...],
    n_values: int,
    diff_rank: tuple[tuple[int, ...], ...],
    zero_idx: int,
    one_idx: int,
    first_value: int,
) -> tuple[tuple[int, ...] | None, tuple[int, ...] | None, int]:
    """Best assignment over the block where the first free vertex carries
    value index `first_value`; base holds value indices of fixed vertices."""
    best_key: tuple[int, ...] | None = None
    best_assign: tuple[int, ...] | None = None
    count = 0
    tones = list(base)
    tones[free[0]] = first_value
    rest = free[1:]
    for combo in itertools.product(range(n_values), repeat=len(rest)):
        count += 1
        for v, value in zip(rest, combo):
            tones[v] = value
        if zero_idx not in tones or one_idx not in tones:
            continue
        key = tuple(sorted(diff_rank[tones[u]][tones[v]] for u, v in edges))
        if best_key is None or key > best_key:
            best_key = key
            best_assign = tuple(tones)
    return best_key, best_assign, count


def _enumerate_block_star(args):
    return _enumerate_block(*args)


def _enumerate_best(
    g: Graph,
    values: tuple[Fraction, ...],
    fixed: dict[int, Fraction] | None = None,
    budget: int | None = None,
    jobs: int = 1,
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], int]:
    """Lexicographic maximum over all assignments of the non-fixed vertices
    into `values` whose image contains both extreme tones.

    Enumeration runs in ascending tone-sequence order, so the first
    assignment attaining the maximum is the lexicographically smallest
    witness.  Returns (vector, witness tones, assignments examined).
    """
    values = tuple(sorted(set(values)))
    value_index = {v: i for i, v in enumerate(values)}
    if ZERO not in value_index or ONE not in value_index:
        raise DomainError("candidate tone set must contain 0 and 1")
    fixed = fixed or {}
    for v, tone in fixed.items():
        if tone not in value_index:
            raise DomainError(f"fixed tone {tone} of vertex {v} outside the candidate set")
    free = tuple(v for v in range(g.n) if v not in fixed)

    diffs, diff_rank = _rank_tables(values)
    zero_idx = value_index[ZERO]
    one_idx = value_index[ONE]
    base = tuple(value_index[fixed[v]] if v in fixed else -1 for v in range(g.n))

    if not free:
        tones = tuple(fixed[v] for v in range(g.n))
        if ZERO not in tones or ONE not in tones:
            raise DomainError("no assignment uses both extreme tones")
        vec = tuple(sorted(abs(tones[u] - tones[v]) for u, v in g.edges))
        return vec, tones, 1

    if budget is not None:
        return _enumerate_sequential_budget(
            g, values, diffs, diff_rank, base, free, zero_idx, one_idx, budget
        )

    block_args = [
        (g.edges, base, free, len(values), diff_rank, zero_idx, one_idx, fv)
        for fv in range(len(values))
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_enumerate_block_star, block_args))
    else:
        results = [_enumerate_block_star(args) for args in block_args]

    best_key = None
    best_assign = None
    count = 0
    for key, assign, n_seen in results:
        count += n_seen
        if key is not None and (best_key is None or key > best_key):
            best_key = key
            best_assign = assign
    if best_key is None:
        raise DomainError("no assignment uses both extreme tones")
    witness = tuple(values[i] for i in best_assign)
    vector = tuple(diffs[r] for r in best_key)
    return vector, witness, count


def _enumerate_sequential_budget(
    g, values, diffs, diff_rank, base, free, zero_idx, one_idx, budget
):
    best_key = None
    best_assign = None
    count = 0
    tones = list(base)
    for combo in itertools.product(range(len(values)), repeat=len(free)):
        count += 1
        if count > budget:
            partial = None
            if best_key is not None:
                partial = (
                    tuple(diffs[r] for r in best_key),
                    tuple(values[i] for i in best_assign),
                )
            raise BudgetExceededError(
                f"assignment budget {budget} exceeded", partial=partial
            )
        for v, value in zip(free, combo):
            tones[v] = value
        if zero_idx not in tones or one_idx not in tones:
            continue
        key = tuple(sorted(diff_rank[tones[u]][tones[v]] for u, v in g.edges))
        if best_key is None or key > best_key:
            best_key = key
            best_assign = tuple(tones)
    if best_key is None:
        raise DomainError("no assignment uses both extreme tones")
    return (
        tuple(diffs[r] for r in best_key),
        tuple(values[i] for i in best_assign),
        count,
    )


def oracle_max_contrast(
    g: Graph,
    values: tuple[Fraction, ...],
    budget: int | None = None,
    jobs: int = 1,
) -> MaxContrastResult:
    """Unpruned reference answer: enumerate every assignment of vertices to
    the candidate tones whose image contains 0 and 1, and keep the
    lexicographic maximum contrast vector."""
    if g.m == 0:
        raise DomainError("maximum contrast needs at least one edge")
    vector, tones, count = _enumerate_best(g, values, None, budget, jobs)
    result = MaxContrastResult(
        ContrastVector(vector),
        Greyscale(tones),
        tuple(sorted(set(values))),
        count,
        chromatic_number(g),
    )
    return _check_result(g, result)


# ---------------------------------------------------------------------------
# branch and bound

def _canonical_witness(
    g: Graph,
    values: tuple[Fraction, ...],
    target: tuple[Fraction, ...],
) -> tuple[Fraction, ...]:
    """Lexicographically smallest tone sequence whose contrast vector equals
    `target`: depth-first in vertex order with ascending tones, pruning any
    branch whose decided edge tones stop being a sub-multiset of the target."""
    need = Counter(target)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        incident[max(u, v)].append(min(u, v))
    tones: list[Fraction | None] = [None] * g.n
    found: list[tuple[Fraction, ...]] = []

    def place(v: int) -> bool:
        if v == g.n:
            if ZERO in tones and ONE in tones:
                found.append(tuple(tones))  # type: ignore[arg-type]
                return True
            return False
        for tone in values:
            consumed: list[Fraction] = []
            ok = True
            for w in incident[v]:
                t = abs(tone - tones[w])
                if need[t] == 0:
                    ok = False
                    break
                need[t] -= 1
                consumed.append(t)
            if ok:
                tones[v] = tone
                if place(v + 1):
                    return True
                tones[v] = None
            for t in consumed:
                need[t] += 1
        return False

    if not place(0):
        raise DomainError("no witness reproduces the target vector")
    return found[0]


def solve_max_contrast(g: Graph, config: SearchConfig | None = None) -> MaxContrastResult:
    """Maximum contrast vector and canonical witness.

    2-chromatic graphs short-circuit to their 2-colouring (all edge tones 1).
    Otherwise a depth-first search assigns vertices in descending-degree
    order with ascending candidate tones.  With pruning on and the candidate
    set on auto, branches creating an edge tone below 1/k and branches whose
    optimistic completion cannot beat the incumbent are cut; the result
    equals the enumeration oracle over the same tone set.
    """
    cfg = config or SearchConfig()
    if g.m == 0:
        raise DomainError("maximum contrast needs at least one edge")
    chi = chromatic_number(g)
    if chi == 2:
        phi0, _ = two_colourings(g)
        witness = Greyscale(phi0.as_tones())
        value_set = cfg.values if cfg.values is not None else (ZERO, ONE)
        result = MaxContrastResult(
            ContrastVector((ONE,) * g.m),
            witness,
            tuple(sorted(set(value_set))),
            0,
            chi,
        )
        return _check_result(g, result)

    k = chi - 1
    auto = cfg.values is None
    values = (
        maximal_enchained_set(k).values if auto else tuple(sorted(set(cfg.values)))
    )
    min_tone = Fraction(1, k)

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    back_edges: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        late, early = (u, v) if position[u] > position[v] else (v, u)
        back_edges[late].append(early)

    m = g.m
    tones: list[Fraction | None] = [None] * g.n
    decided: list[Fraction] = []
    incumbent: tuple[Fraction, ...] | None = None
    nodes = 0

    def bound_beats_incumbent() -> bool:
        # decided tones ascending, undecided edges padded with tone 1
        assert incumbent is not None
        d = len(decided)
        for i in range(m):
            b = decided[i] if i < d else ONE
            if b < incumbent[i]:
                return False
            if b > incumbent[i]:
                return True
        return False  # equal padding cannot strictly improve

    def search(idx: int) -> None:
        nonlocal incumbent, nodes
        if idx == g.n:
            if ZERO in tones and ONE in tones:
                vec = tuple(decided)
                if incumbent is None or vec > incumbent:
                    incumbent = vec
            return
        v = order[idx]
        for tone in values:
            new_tones = [abs(tone - tones[w]) for w in back_edges[v]]
            if cfg.pruning and auto and any(t < min_tone for t in new_tones):
                continue
            nodes += 1
            if cfg.budget is not None and nodes > cfg.budget:
                raise BudgetExceededError(
                    f"node budget {cfg.budget} exceeded", partial=incumbent
                )
            for t in new_tones:
                insort(decided, t)
            tones[v] = tone
            pruned = (
                cfg.pruning
                and incumbent is not None
                and not bound_beats_incumbent()
            )
            if not pruned:
                search(idx + 1)
            tones[v] = None
            for t in new_tones:
                decided.remove(t)

    search(0)
    if incumbent is None:
        raise DomainError("search found no valid greyscale")
    witness = _canonical_witness(g, values, incumbent)
    result = MaxContrastResult(
        ContrastVector(incumbent),
        Greyscale(witness),
        values,
        nodes,
        chi,
    )
    return _check_result(g, result)
