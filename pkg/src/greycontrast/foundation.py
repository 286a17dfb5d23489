"""Exact rational arithmetic and the graph core.

Grey tones are plain :class:`fractions.Fraction` values, which already give
canonical form (positive denominator, gcd-reduced) over arbitrary-precision
integers.  Graphs are immutable, simple, undirected, 0-indexed and - once
validated - connected; every statement the solvers rely on assumes
connectivity, so the parser rejects disconnected input instead of silently
picking a component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    DisconnectedError,
    DomainError,
    DuplicateEdgeError,
    GraphFormatError,
    RationalError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# rationals

def rat_normalize(p: int, q: int) -> Fraction:
    """Return p/q in canonical form (sign on the numerator, gcd 1)."""
    if q == 0:
        raise RationalError("denominator must be nonzero")
    return Fraction(p, q)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q"; the bare forms "0" and "1" stand for 0/1 and 1/1."""
    token = text.strip()
    if token == "0":
        return ZERO
    if token == "1":
        return ONE
    parts = token.split("/")
    if len(parts) != 2:
        raise RationalError(f"expected 'p/q' (or bare 0 / 1), got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise RationalError(f"non-integer rational parts in {text!r}") from None
    return rat_normalize(p, q)


def format_rational(value: Fraction) -> str:
    """Serialize canonically as "p/q" (so 0 -> "0/1", 1 -> "1/1")."""
    return f"{value.numerator}/{value.denominator}"


def parse_tone(text: str) -> Fraction:
    """Parse a rational and check it lies in [0, 1]."""
    value = parse_rational(text)
    if not ZERO <= value <= ONE:
        raise RationalError(f"tone {text!r} outside [0, 1]")
    return value


# ---------------------------------------------------------------------------
# graphs

@dataclass(frozen=True)
class Graph:
    """Finite simple undirected connected graph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge]) -> "Graph":
        """Validate and build.  Edges may come in any order or orientation."""
        if n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        seen: set[Edge] = set()
        normalized: list[Edge] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        normalized.sort()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        g = Graph(n, tuple(normalized), tuple(tuple(sorted(a)) for a in adj))
        if not g.is_connected():
            raise DisconnectedError("graph is not connected")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self._edge_set()

    def _edge_set(self) -> frozenset[Edge]:
        # cached lazily on the instance despite frozen dataclass
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def vertices(self) -> Iterator[int]:
        return iter(range(self.n))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    First non-comment line is "n m", followed by exactly m lines "u v" with
    0 <= u < v < n.  Lines starting with '#' are ignored.
    """
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty graph description")
    header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {' '.join(header)!r}") from None
    if n < 1:
        raise GraphFormatError("graph needs at least one vertex")
    if m < 0:
        raise GraphFormatError("negative edge count")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    edges: list[Edge] = []
    for row in body:
        if len(row) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError:
            raise GraphFormatError(f"non-integer edge line {' '.join(row)!r}") from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u > v:
            raise GraphFormatError(f"edge endpoints must satisfy u < v, got {u} {v}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# two-colourings

@dataclass(frozen=True)
class TwoColouring:
    """Proper 2-colouring, stored as the class (0 or 1) of each vertex."""

    classes: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.classes[v]

    def swapped(self) -> "TwoColouring":
        return TwoColouring(tuple(1 - c for c in self.classes))

    def as_tones(self) -> tuple[Fraction, ...]:
        return tuple(ONE if c else ZERO for c in self.classes)


def two_colourings(g: Graph) -> tuple[TwoColouring, TwoColouring] | None:
    """Return the two proper 2-colourings (phi0, phi1), or None if g has an
    odd cycle.  phi0 is canonicalized by assigning class 0 to vertex 0."""
    classes = [-1] * g.n
    classes[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        for w in g.neighbours(u):
            if classes[w] == -1:
                classes[w] = 1 - classes[u]
                queue.append(w)
            elif classes[w] == classes[u]:
                return None
    phi0 = TwoColouring(tuple(classes))
    return phi0, phi0.swapped()


def is_bipartite(g: Graph) -> bool:
    return two_colourings(g) is not None


# ---------------------------------------------------------------------------
# exact chromatic number

def _search_order(g: Graph) -> list[int]:
    # descending degree, then index: fixed so runs are reproducible
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _greedy_clique(g: Graph, order: list[int]) -> list[int]:
    clique: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def _colourable(g: Graph, k: int, order: list[int]) -> bool:
    """Backtracking k-colourability check with new-colour symmetry breaking."""
    colour = [-1] * g.n

    def place(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        forbidden = {colour[w] for w in g.neighbours(v) if colour[w] != -1}
        limit = min(used + 1, k)
        for c in range(limit):
            if c in forbidden:
                continue
            colour[v] = c
            if place(idx + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by branch-and-bound over k-colourability.

    The greedy clique on the fixed search order gives the lower bound; a
    greedy colouring gives the upper bound; the gap is closed by exhaustive
    k-colourability checks.  Deterministic for a given graph.
    """
    if g.n == 0:
        raise DomainError("chromatic number needs at least one vertex")
    if g.m == 0:
        return 1
    order = _search_order(g)
    lower = max(2, len(_greedy_clique(g, order)))
    colour: dict[int, int] = {}
    for v in order:
        used = {colour[w] for w in g.neighbours(v) if w in colour}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    upper = max(colour.values()) + 1
    for k in range(lower, upper):
        if _colourable(g, k, order):
            return k
    return upper
