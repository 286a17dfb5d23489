"""The {0,1}-restricted maximum-contrast problem on bipartite graphs.

Some vertices arrive pre-coloured with the extreme tones (white 0 / black 1,
never two equal tones on adjacent vertices); the task is the best contrast
vector among greyscales extending them.  The image of any optimum is known
to lie inside {0, 1/3, 1/2, 2/3, 1}, which makes a direct enumeration over
that grid exact.  On top of the enumeration oracle sit closed forms for
complete bipartite graphs, for the case where one of the two colouring
classes is matched by a single fixed vertex, for star subdivisions with all
leaves fixed, and for trees with exactly three fixed vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, FixedToneError
from .foundation import (
    ONE,
    ZERO,
    Graph,
    TwoColouring,
    parse_tone,
    two_colourings,
)
from .greyscale import ContrastVector, Greyscale, contrast_vector
from .solver import FIVE_GRID, _enumerate_best

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)
HALF_GRID = (ZERO, HALF, ONE)


@dataclass(frozen=True)
class IncompleteGreyscale:
    """Fixed extreme tones on a nonempty proper vertex subset; adjacent
    vertices never share a fixed tone."""

    fixed: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_mapping(g: Graph, mapping: dict[int, Fraction]) -> "IncompleteGreyscale":
        if not mapping:
            raise FixedToneError("at least one vertex must be fixed")
        if len(mapping) >= g.n:
            raise FixedToneError("fixed set must be a proper subset of the vertices")
        for v, tone in mapping.items():
            if not 0 <= v < g.n:
                raise FixedToneError(f"fixed vertex {v} out of range")
            if tone != ZERO and tone != ONE:
                raise FixedToneError(f"fixed tone of vertex {v} must be 0 or 1")
        for u, v in g.edges:
            if u in mapping and v in mapping and mapping[u] == mapping[v]:
                raise FixedToneError(
                    f"adjacent vertices {u} and {v} fixed to the same tone"
                )
        return IncompleteGreyscale(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.fixed)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.fixed)


@dataclass(frozen=True)
class VcPartition:
    """Fixed vertices split by which of the two 2-colourings they agree
    with: phi0-matching on one side, phi1-matching on the other."""

    matched_phi0: tuple[int, ...]
    matched_phi1: tuple[int, ...]


@dataclass(frozen=True)
class RestrictedResult:
    vector: ContrastVector
    witness: Greyscale
    method: str
    vc: VcPartition


def _require_bipartite(g: Graph) -> tuple[TwoColouring, TwoColouring]:
    pair = two_colourings(g)
    if pair is None:
        raise DomainError("restricted solvers require a bipartite graph")
    return pair


def partition_vc(g: Graph, inc: IncompleteGreyscale) -> VcPartition:
    """Classify the fixed vertices against the canonical 2-colouring phi0
    (the one giving class 0 to vertex 0)."""
    phi0, _ = _require_bipartite(g)
    m0: list[int] = []
    m1: list[int] = []
    for v, tone in inc.fixed:
        if tone == (ONE if phi0[v] else ZERO):
            m0.append(v)
        else:
            m1.append(v)
    return VcPartition(tuple(m0), tuple(m1))


def _check_result(g: Graph, inc: IncompleteGreyscale, result: RestrictedResult):
    fixed = inc.as_dict()
    for v, tone in fixed.items():
        if result.witness[v] != tone:
            raise DomainError("witness disagrees with a fixed tone")
    if contrast_vector(g, result.witness).tones != result.vector.tones:
        raise DomainError("witness does not reproduce the reported vector")
    return result


def _colouring_result(
    g: Graph, inc: IncompleteGreyscale, phi: TwoColouring, vc: VcPartition
) -> RestrictedResult:
    witness = Greyscale(phi.as_tones())
    result = RestrictedResult(
        ContrastVector((ONE,) * g.m), witness, "two-colouring", vc
    )
    return _check_result(g, inc, result)


# ---------------------------------------------------------------------------
# lower-bound constructions

def constructive_f_phi(g: Graph, inc: IncompleteGreyscale) -> Greyscale:
    """Compatibility witness with every edge tone in {1/3, 2/3, 1}.

    Against a 2-colouring that at least one fixed vertex agrees with
    (phi0 preferred), free vertices next to a disagreeing white vertex
    take 2/3, otherwise next to a disagreeing black vertex take 1/3,
    and all remaining free vertices take their colouring tone.  This is a
    lower-bound construction, not necessarily an optimum.
    """
    phi0, phi1 = _require_bipartite(g)
    vc = partition_vc(g, inc)
    phi = phi0 if vc.matched_phi0 else phi1
    fixed = inc.as_dict()
    mismatched = {
        v: tone
        for v, tone in fixed.items()
        if tone != (ONE if phi[v] else ZERO)
    }
    tones: list[Fraction] = []
    for v in range(g.n):
        if v in fixed:
            tones.append(fixed[v])
            continue
        nearby = [u for u in g.neighbours(v) if u in mismatched]
        if any(fixed[u] == ZERO for u in nearby):
            tones.append(TWO_THIRDS)
        elif any(fixed[u] == ONE for u in nearby):
            tones.append(THIRD)
        else:
            tones.append(ONE if phi[v] else ZERO)
    return Greyscale(tuple(tones))


def singleton_bound_greyscale(g: Graph, inc: IncompleteGreyscale) -> Greyscale:
    """Lower-bound witness for the lone-disagreeing-vertex case: tone 1/2 on
    the neighbourhood of the singleton, the opposite colouring elsewhere."""
    phi0, phi1 = _require_bipartite(g)
    vc = partition_vc(g, inc)
    if not vc.matched_phi0 or not vc.matched_phi1:
        raise DomainError("both colouring classes need a fixed vertex")
    if len(vc.matched_phi0) == 1:
        v0, fill = vc.matched_phi0[0], phi1
    elif len(vc.matched_phi1) == 1:
        v0, fill = vc.matched_phi1[0], phi0
    else:
        raise DomainError("neither side is a singleton")
    fixed = inc.as_dict()
    halo = set(g.neighbours(v0))
    tones: list[Fraction] = []
    for v in range(g.n):
        if v in fixed:
            tones.append(fixed[v])
        elif v in halo:
            tones.append(HALF)
        else:
            tones.append(ONE if fill[v] else ZERO)
    return Greyscale(tuple(tones))


# ---------------------------------------------------------------------------
# enumeration oracle

def oracle_restricted(
    g: Graph,
    inc: IncompleteGreyscale,
    values: tuple[Fraction, ...] = FIVE_GRID,
    budget: int | None = None,
    jobs: int = 1,
) -> RestrictedResult:
    """Exact optimum by enumerating all compatible assignments of the free
    vertices over the proven five-tone grid {0, 1/3, 1/2, 2/3, 1} (or any
    explicit superset of {0, 1})."""
    vc = partition_vc(g, inc)
    vector, tones, _ = _enumerate_best(g, values, inc.as_dict(), budget, jobs)
    result = RestrictedResult(
        ContrastVector(vector), Greyscale(tones), "oracle", vc
    )
    return _check_result(g, inc, result)


# ---------------------------------------------------------------------------
# complete bipartite graphs

def complete_bipartite_graph(r: int, s: int) -> Graph:
    """K_{r,s} with one part on vertices 0..r-1, the other on r..r+s-1."""
    if r < 1 or s < 1:
        raise DomainError("both parts need at least one vertex")
    return Graph.from_edges(
        r + s, [(a, b) for a in range(r) for b in range(r, r + s)]
    )


def is_complete_bipartite(g: Graph) -> bool:
    pair = two_colourings(g)
    if pair is None:
        return False
    sizes = [0, 0]
    for v in range(g.n):
        sizes[pair[0][v]] += 1
    return g.m == sizes[0] * sizes[1]


def _solve_complete_bipartite_graph(
    g: Graph, inc: IncompleteGreyscale
) -> RestrictedResult:
    phi0, phi1 = _require_bipartite(g)
    if not is_complete_bipartite(g):
        raise DomainError("graph is not complete bipartite")
    vc = partition_vc(g, inc)
    if not vc.matched_phi1:
        return _colouring_result(g, inc, phi0, vc)
    if not vc.matched_phi0:
        return _colouring_result(g, inc, phi1, vc)
    # mixed fixed tones force the whole fixed set into one part; every
    # opposite-part vertex must sit at 1/2 and the vector is flat 1/2
    fixed = inc.as_dict()
    fixed_classes = {phi0[v] for v in fixed}
    if len(fixed_classes) != 1:
        raise DomainError("mixed fixed tones across both parts are contradictory")
    fixed_class = fixed_classes.pop()
    tones: list[Fraction] = []
    for v in range(g.n):
        if v in fixed:
            tones.append(fixed[v])
        elif phi0[v] == fixed_class:
            tones.append(ZERO)  # any extreme tone works; 0 is canonical
        else:
            tones.append(HALF)
    result = RestrictedResult(
        ContrastVector((HALF,) * g.m),
        Greyscale(tuple(tones)),
        "complete-bipartite",
        vc,
    )
    return _check_result(g, inc, result)


def solve_complete_bipartite(
    r: int, s: int, inc: IncompleteGreyscale
) -> RestrictedResult:
    """Closed form on K_{r,s}: the answer is all-ones when the fixed tones
    agree with one 2-colouring, otherwise flat 1/2."""
    g = complete_bipartite_graph(r, s)
    IncompleteGreyscale.from_mapping(g, inc.as_dict())  # re-validate against K_{r,s}
    return _solve_complete_bipartite_graph(g, inc)


# ---------------------------------------------------------------------------
# one lone disagreeing vertex

def solve_single_opposite(g: Graph, inc: IncompleteGreyscale) -> RestrictedResult:
    """Exact optimum when exactly one fixed vertex matches one of the two
    colourings (and at least one matches the other): the optimal image lies
    in {0, 1/2, 1}, so enumeration over that grid is exact."""
    vc = partition_vc(g, inc)
    if not vc.matched_phi0 or not vc.matched_phi1 or (
        len(vc.matched_phi0) != 1 and len(vc.matched_phi1) != 1
    ):
        raise DomainError(
            "needs exactly one fixed vertex on one side and at least one on "
            "the other; use oracle_restricted for the general case"
        )
    vector, tones, _ = _enumerate_best(g, HALF_GRID, inc.as_dict())
    result = RestrictedResult(
        ContrastVector(vector), Greyscale(tones), "single-opposite", vc
    )
    return _check_result(g, inc, result)


# ---------------------------------------------------------------------------
# star subdivisions

def star_subdivision_legs(g: Graph) -> tuple[int, list[list[int]]] | None:
    """Detect a subdivision of K_{1,n} with n >= 3: returns (hub, legs) where
    each leg runs from a hub neighbour out to its leaf, or None."""
    if g.m != g.n - 1:
        return None
    hubs = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(hubs) != 1:
        return None
    hub = hubs[0]
    legs: list[list[int]] = []
    for first in g.neighbours(hub):
        leg = [first]
        prev, cur = hub, first
        while g.degree(cur) == 2:
            nxt = next(w for w in g.neighbours(cur) if w != prev)
            leg.append(nxt)
            prev, cur = cur, nxt
        if g.degree(cur) != 1:
            return None  # a second branching vertex: not a star subdivision
        legs.append(leg)
    return hub, legs


def solve_star_subdivision(g: Graph, inc: IncompleteGreyscale) -> RestrictedResult:
    """Closed form on a subdivided star with exactly the leaves fixed.

    For each hub tone the cheapest completion is computable directly: an
    extreme hub tone costs one interior 1/2 (two flat-1/2 edges) per leg
    whose leaf disagrees with the induced alternation, while hub tone 1/2
    costs one 1/2-edge per leg.  The best of the feasible options is optimal
    because any optimum avoids zero edges, uses tones in {0, 1/2, 1}, and
    pays the degree of every 1/2-vertex in flat components.
    """
    info = star_subdivision_legs(g)
    if info is None:
        raise DomainError("graph is not a subdivision of a star K_{1,n}, n >= 3")
    hub, legs = info
    leaves = {leg[-1] for leg in legs}
    fixed = inc.as_dict()
    if set(fixed) != leaves:
        raise DomainError("exactly the leaves must be fixed")
    vc = partition_vc(g, inc)

    # mismatch count per extreme hub tone; a length-1 leg with a matching
    # leaf tone cannot be repaired by an interior 1/2
    options: list[tuple[int, Fraction]] = []
    for hub_tone in (ZERO, ONE):
        mismatched = 0
        feasible = True
        for leg in legs:
            leaf_tone = fixed[leg[-1]]
            alternated = hub_tone if len(leg) % 2 == 0 else ONE - hub_tone
            if leaf_tone != alternated:
                if len(leg) == 1:
                    feasible = False
                    break
                mismatched += 1
        if feasible:
            options.append((2 * mismatched, hub_tone))
    options.append((len(legs), HALF))
    cost = min(c for c, _ in options)

    vector = tuple(sorted([HALF] * cost + [ONE] * (g.m - cost)))
    tones = _exact_vector_completion(g, HALF_GRID, fixed, vector)
    result = RestrictedResult(
        ContrastVector(vector), Greyscale(tones), "star-subdivision", vc
    )
    return _check_result(g, inc, result)


# ---------------------------------------------------------------------------
# trees with three fixed vertices

def _tree_path(g: Graph, a: int, b: int) -> list[int]:
    parent = {a: -1}
    queue = [a]
    while queue:
        u = queue.pop()
        if u == b:
            break
        for w in g.neighbours(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def solve_tree_three(g: Graph, inc: IncompleteGreyscale) -> RestrictedResult:
    """Closed form on a tree with exactly three fixed vertices.

    When all three agree with one colouring the answer is all-ones.
    Otherwise two agree and one disagrees; every path from an agreeing to
    the disagreeing vertex must cross a 1/2-vertex, and the optimum pays the
    degree of each 1/2-vertex, so it is the cheaper of: one minimum-degree
    vertex on the shared trunk into the disagreeing vertex, or one
    minimum-degree vertex on each of the two private branches.  Ties go to
    the smallest vertex index; the witness carries at most two 1/2s.
    """
    if g.m != g.n - 1:
        raise DomainError("graph is not a tree")
    if len(inc.fixed) != 3:
        raise DomainError("exactly three vertices must be fixed")
    phi0, phi1 = _require_bipartite(g)
    vc = partition_vc(g, inc)
    if not vc.matched_phi1:
        return _colouring_result(g, inc, phi0, vc)
    if not vc.matched_phi0:
        return _colouring_result(g, inc, phi1, vc)
    if len(vc.matched_phi0) == 2:
        (va, vb), (vm,) = vc.matched_phi0, vc.matched_phi1
    else:
        (va, vb), (vm,) = vc.matched_phi1, vc.matched_phi0

    trunk_a = _tree_path(g, va, vm)
    trunk_b = _tree_path(g, vb, vm)
    in_a, in_b = set(trunk_a), set(trunk_b)
    fixed_set = set(inc.vertices)
    shared = [v for v in trunk_a if v in in_b and v not in fixed_set]
    side_a = [v for v in trunk_a if v not in in_b and v not in fixed_set]
    side_b = [v for v in trunk_b if v not in in_a and v not in fixed_set]

    def cheapest(candidates: list[int]) -> tuple[int, int] | None:
        if not candidates:
            return None
        return min((g.degree(v), v) for v in candidates)

    best_shared = cheapest(shared)
    best_a = cheapest(side_a)
    best_b = cheapest(side_b)
    options: list[tuple[int, tuple[int, ...]]] = []
    if best_shared is not None:
        options.append((best_shared[0], (best_shared[1],)))
    if best_a is not None and best_b is not None:
        options.append((best_a[0] + best_b[0], (best_a[1], best_b[1])))
    if not options:
        raise DomainError("no vertex available to carry tone 1/2")
    cost, halves = min(options)

    vector = tuple(sorted([HALF] * cost + [ONE] * (g.m - cost)))
    tones = _exact_vector_completion(g, HALF_GRID, inc.as_dict(), vector)
    witness = Greyscale(tones)
    if sum(1 for t in tones if t == HALF) > 2:
        raise DomainError("construction exceeded two 1/2-vertices")
    result = RestrictedResult(ContrastVector(vector), witness, "tree-three", vc)
    return _check_result(g, inc, result)


# ---------------------------------------------------------------------------
# canonical completion and dispatch

def _exact_vector_completion(
    g: Graph,
    values: tuple[Fraction, ...],
    fixed: dict[int, Fraction],
    target: tuple[Fraction, ...],
) -> tuple[Fraction, ...]:
    """Lexicographically smallest compatible tone sequence whose contrast
    vector equals `target` (mirrors the unrestricted solver's witness
    canonicalization)."""
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
        candidates = (fixed[v],) if v in fixed else values
        for tone in candidates:
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
        raise DomainError("target vector admits no compatible witness")
    return found[0]


def solve_restricted(
    g: Graph,
    inc: IncompleteGreyscale,
    method: str = "auto",
    budget: int | None = None,
    jobs: int = 1,
) -> RestrictedResult:
    """Dispatch to the cheapest exact solver that applies, falling back to
    the five-tone enumeration oracle."""
    phi0, phi1 = _require_bipartite(g)
    if method == "oracle":
        return oracle_restricted(g, inc, budget=budget, jobs=jobs)
    if method == "constructive":
        witness = constructive_f_phi(g, inc)
        vc = partition_vc(g, inc)
        result = RestrictedResult(
            contrast_vector(g, witness), witness, "constructive", vc
        )
        return _check_result(g, inc, result)
    if method != "auto":
        raise DomainError(f"unknown method {method!r}")

    vc = partition_vc(g, inc)
    if not vc.matched_phi1:
        return _colouring_result(g, inc, phi0, vc)
    if not vc.matched_phi0:
        return _colouring_result(g, inc, phi1, vc)
    if is_complete_bipartite(g):
        return _solve_complete_bipartite_graph(g, inc)
    info = star_subdivision_legs(g)
    if info is not None and set(inc.vertices) == {leg[-1] for leg in info[1]}:
        return solve_star_subdivision(g, inc)
    if g.m == g.n - 1 and len(inc.fixed) == 3:
        return solve_tree_three(g, inc)
    if len(vc.matched_phi0) == 1 or len(vc.matched_phi1) == 1:
        return solve_single_opposite(g, inc)
    return oracle_restricted(g, inc, budget=budget, jobs=jobs)


# ---------------------------------------------------------------------------
# fixed-tone file format: lines "v 0" or "v 1"

def parse_fixed_tones(text: str, g: Graph) -> IncompleteGreyscale:
    mapping: dict[int, Fraction] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FixedToneError(f"fixed-tone line must be 'v 0' or 'v 1', got {line!r}")
        try:
            v = int(parts[0])
        except ValueError:
            raise FixedToneError(f"non-integer vertex in {line!r}") from None
        if v in mapping:
            raise FixedToneError(f"vertex {v} fixed twice")
        tone = parse_tone(parts[1])
        mapping[v] = tone
    return IncompleteGreyscale.from_mapping(g, mapping)


def write_fixed_tones(inc: IncompleteGreyscale) -> str:
    return "".join(
        f"{v} {0 if t == ZERO else 1}\n" for v, t in inc.fixed
    )
