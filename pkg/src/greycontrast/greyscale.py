"""Greyscale algebra: contrast and gradation vectors, lexicographic order,
complementary greyscales, tone-bucket colourings, incremental paths, and the
necessary-condition checks for maximality.

A greyscale maps every vertex into [0, 1] and must use both extreme tones 0
and 1 somewhere.  An edge's tone is the absolute difference of its endpoint
tones; the contrast vector is the ascending sort of all edge tones and is
compared lexicographically (bigger is better).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, GreyscaleError, ImproperColouringError
from .foundation import (
    ONE,
    ZERO,
    Edge,
    Graph,
    chromatic_number,
    format_rational,
    parse_tone,
)


@dataclass(frozen=True)
class Greyscale:
    """Total vertex-to-tone map; tones are exact rationals in [0, 1] and the
    image must contain both 0 and 1."""

    tones: tuple[Fraction, ...]

    def __post_init__(self):
        for v, t in enumerate(self.tones):
            if not ZERO <= t <= ONE:
                raise GreyscaleError(f"tone of vertex {v} outside [0, 1]: {t}")
        image = set(self.tones)
        if ZERO not in image or ONE not in image:
            raise GreyscaleError("image must contain both extreme tones 0 and 1")

    def __getitem__(self, v: int) -> Fraction:
        return self.tones[v]

    def __len__(self) -> int:
        return len(self.tones)

    def image(self) -> frozenset[Fraction]:
        return frozenset(self.tones)

    def edge_tone(self, e: Edge) -> Fraction:
        u, v = e
        return abs(self.tones[u] - self.tones[v])


@dataclass(frozen=True, order=False)
class ContrastVector:
    """Edge tones sorted ascending; ordered lexicographically."""

    tones: tuple[Fraction, ...]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.tones, self.tones[1:])):
            raise DomainError("contrast vector must be sorted ascending")

    def __len__(self) -> int:
        return len(self.tones)

    def __getitem__(self, i: int):
        return self.tones[i]

    def __iter__(self):
        return iter(self.tones)

    def reversed(self) -> "GradationVector":
        return GradationVector(tuple(reversed(self.tones)))


@dataclass(frozen=True)
class GradationVector:
    """Edge tones sorted descending (the companion minimization objective)."""

    tones: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.tones)

    def __iter__(self):
        return iter(self.tones)

    def reversed(self) -> ContrastVector:
        return ContrastVector(tuple(reversed(self.tones)))


@dataclass(frozen=True)
class IncrementalPath:
    """Path u_0..u_k whose i-th vertex has tone i/k, so every edge on it has
    tone exactly 1/k."""

    vertices: tuple[int, ...]
    step: Fraction


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the maximality precondition checks.

    These conditions are necessary but not sufficient: a passing report does
    not certify that the greyscale attains the maximum contrast vector.
    """

    passed: bool
    violations: tuple[tuple[str, object], ...]
    k: int

    NECESSARY_ONLY = "necessary conditions only; passing does not certify maximality"

    def __post_init__(self):
        if self.passed != (len(self.violations) == 0):
            raise DomainError("passed flag must match emptiness of violations")


def _check_total(g: Graph, f: Greyscale) -> None:
    if len(f) != g.n:
        raise GreyscaleError(
            f"greyscale covers {len(f)} vertices but graph has {g.n}"
        )


def edge_tones(g: Graph, f: Greyscale) -> list[Fraction]:
    _check_total(g, f)
    return [abs(f[u] - f[v]) for u, v in g.edges]


def contrast_vector(g: Graph, f: Greyscale) -> ContrastVector:
    """Ascending sort of the multiset {|f(u) - f(v)| : {u,v} in E}."""
    return ContrastVector(tuple(sorted(edge_tones(g, f))))


def gradation_vector(g: Graph, f: Greyscale) -> GradationVector:
    """Descending sort of the edge tones (reverse of the contrast vector)."""
    return GradationVector(tuple(sorted(edge_tones(g, f), reverse=True)))


def lex_compare(a: ContrastVector, b: ContrastVector) -> int:
    """Lexicographic comparison; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise DomainError(f"vector length mismatch: {len(a)} vs {len(b)}")
    if a.tones < b.tones:
        return -1
    if a.tones > b.tones:
        return 1
    return 0


def complementary(f: Greyscale) -> Greyscale:
    """The greyscale 1 - f; it induces the same edge tones as f."""
    return Greyscale(tuple(ONE - t for t in f.tones))


def lightest_tone(g: Graph) -> Fraction:
    """First component of the maximum contrast vector: 1/(chi(G) - 1)."""
    if g.m == 0:
        raise DomainError("lightest tone is undefined on an edgeless graph")
    return Fraction(1, chromatic_number(g) - 1)


def colouring_from_greyscale(g: Graph, f: Greyscale, k: int) -> tuple[int, ...]:
    """Bucket tones into the k+1 classes [i/k, (i+1)/k) (tone 1 -> class k)
    and verify the result is a proper colouring.

    An improper result signals that f is not a maximum contrast greyscale
    for this k; the raised error carries the violating edge.
    """
    _check_total(g, f)
    if k < 1:
        raise DomainError("k must be at least 1")
    classes = tuple(
        k if f[v] == ONE else (f[v] * k).numerator // (f[v] * k).denominator
        for v in range(g.n)
    )
    for e in g.edges:
        u, v = e
        if classes[u] == classes[v]:
            raise ImproperColouringError(
                f"vertices {u} and {v} share class {classes[u]}", edge=e
            )
    return classes


def find_incremental_paths(
    g: Graph, f: Greyscale, e: Edge
) -> list[IncrementalPath]:
    """All incremental paths of length k = 1/lightest_tone through edge e.

    Requires the edge to carry the lightest tone.  The list may be empty for
    a non-optimal greyscale; it is nonempty whenever f attains the maximum
    contrast vector.
    """
    _check_total(g, f)
    lt = lightest_tone(g)
    if f.edge_tone(e) != lt:
        raise DomainError(
            f"edge {e} has tone {f.edge_tone(e)}, not the lightest tone {lt}"
        )
    k = lt.denominator
    step = Fraction(1, k)
    x, y = e
    if f[x] > f[y]:
        x, y = y, x
    # the path exists only when the endpoint tones sit exactly on the ladder
    lower = f[x] / step
    if lower.denominator != 1:
        return []
    i = int(lower)

    def extend(start: int, direction: int) -> list[list[int]]:
        # all monotone tone-ladder walks from `start` down to 0 or up to 1
        target = ZERO if direction < 0 else ONE
        results: list[list[int]] = []

        def walk(path: list[int]) -> None:
            v = path[-1]
            if f[v] == target:
                results.append(list(path))
                return
            want = f[v] + direction * step
            for w in g.neighbours(v):
                if f[w] == want:
                    path.append(w)
                    walk(path)
                    path.pop()

        walk([start])
        return results

    paths = []
    for left in extend(x, -1):
        for right in extend(y, +1):
            # tones on the two sides are disjoint, so vertices cannot repeat
            paths.append(IncrementalPath(tuple(reversed(left)) + tuple(right), step))
    paths.sort(key=lambda p: p.vertices)
    return paths


def verify_max_conditions(g: Graph, f: Greyscale) -> VerificationReport:
    """Check every necessary condition for f to attain the maximum contrast
    vector, with a witness for each failure.

    Conditions, for k = chi(G) - 1: no zero-tone edge; every vertex with an
    interior tone has a closest-neighbour pair straddling it at its minimum
    incident edge tone; every edge of tone 1/k lies on an incremental path;
    {i/k} is contained in the image; and at least k edges carry tone 1/k.
    """
    _check_total(g, f)
    lt = lightest_tone(g)
    k = lt.denominator
    violations: list[tuple[str, object]] = []

    tones = {e: f.edge_tone(e) for e in g.edges}
    for e, t in tones.items():
        if t == ZERO:
            violations.append(("zero_component", e))

    for v in range(g.n):
        if f[v] == ZERO or f[v] == ONE:
            continue
        incident = [abs(f[w] - f[v]) for w in g.neighbours(v)]
        a = min(incident)
        has_left = any(f[w] == f[v] - a for w in g.neighbours(v))
        has_right = any(f[w] == f[v] + a for w in g.neighbours(v))
        if not (has_left and has_right):
            violations.append(("closest_pair", v))

    for e, t in tones.items():
        if t == lt and not find_incremental_paths(g, f, e):
            violations.append(("incremental_path", e))

    image = f.image()
    for i in range(k + 1):
        tone = Fraction(i, k)
        if tone not in image:
            violations.append(("image_superset", tone))

    lightest_count = sum(1 for t in tones.values() if t == lt)
    if lightest_count < k:
        violations.append(("lightest_count", lightest_count))

    return VerificationReport(not violations, tuple(violations), k)


# ---------------------------------------------------------------------------
# greyscale file format: one line per vertex, "v p/q"

def parse_greyscale(text: str, n: int) -> Greyscale:
    tones: dict[int, Fraction] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GreyscaleError(f"greyscale line must be 'v p/q', got {line!r}")
        try:
            v = int(parts[0])
        except ValueError:
            raise GreyscaleError(f"non-integer vertex in {line!r}") from None
        if not 0 <= v < n:
            raise GreyscaleError(f"vertex {v} out of range for n={n}")
        if v in tones:
            raise GreyscaleError(f"vertex {v} listed twice")
        tones[v] = parse_tone(parts[1])
    missing = [v for v in range(n) if v not in tones]
    if missing:
        raise GreyscaleError(f"missing tones for vertices {missing}")
    return Greyscale(tuple(tones[v] for v in range(n)))


def write_greyscale(f: Greyscale) -> str:
    return "".join(
        f"{v} {format_rational(t)}\n" for v, t in enumerate(f.tones)
    )
