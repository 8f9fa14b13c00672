"""Random-permutation coloring experiments on recovering-set structure.

The graph has one vertex per coordinate and a color-l edge from i to every
member of the l-th recovering set of i. Under a uniformly random ranking of
the vertices, a vertex takes the smallest color whose whole set ranks below
it; the colored fraction lower-bounds the redundancy argument behind the rate
bound, and walks that follow a vertex's own color strictly descend the
ranking, hence never cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial, sqrt
from typing import Sequence

import numpy as np

from .errors import DimensionTooLarge, InvalidParams
from .verifier import RecoveringFamily

__all__ = [
    "EXHAUSTIVE_VERTEX_CAP",
    "RecoveryGraph",
    "ColoringOutcome",
    "MonteCarloStats",
    "build_graph",
    "color_vertices",
    "structural_check",
    "monte_carlo_colored_fraction",
    "exhaustive_expected_fraction",
    "trial_permutation",
]

# Exhaustive expectation walks n! permutations; refuse beyond this.
EXHAUSTIVE_VERTEX_CAP = 8


@dataclass(frozen=True)
class RecoveryGraph:
    """Directed colored multigraph; an edge (i, m, l) says m belongs to the
    l-th recovering set of i. Vertices and colors are 1-based."""

    n: int
    t: int
    edges: frozenset[tuple[int, int, int]]


@dataclass(frozen=True)
class ColoringOutcome:
    """Vertex colors under one permutation; ``permutation[v - 1]`` is the
    rank of vertex v, ``colors[v - 1]`` is its color or None."""

    permutation: tuple[int, ...]
    colors: tuple[int | None, ...]
    colored: frozenset[int]


@dataclass(frozen=True)
class MonteCarloStats:
    """Sample mean and standard error of the colored fraction, plus the
    number of trials whose monochromatic colored walks contained a cycle
    (always 0 unless the coloring rule is broken)."""

    mean: float
    stderr: float
    trials: int
    walk_failures: int


def build_graph(family: RecoveringFamily) -> RecoveryGraph:
    edges = set()
    t = 0
    for i, sets in enumerate(family.sets_by_coordinate, start=1):
        t = max(t, len(sets))
        for l, s in enumerate(sets, start=1):
            for m in s:
                edges.add((i, m, l))
    if t == 0:
        raise InvalidParams("family has no recovering sets at all")
    return RecoveryGraph(n=family.n, t=t, edges=frozenset(edges))


def _members0(family: RecoveringFamily) -> list[list[tuple[int, ...]]]:
    """Per vertex (0-based), per color, the 0-based members of the set."""
    return [
        [tuple(sorted(e - 1 for e in s)) for s in sets]
        for sets in family.sets_by_coordinate
    ]


def _validate_permutation(permutation: Sequence[int], n: int) -> tuple[int, ...]:
    tau = tuple(int(v) for v in permutation)
    if len(tau) != n or sorted(tau) != list(range(1, n + 1)):
        raise InvalidParams("permutation must be a bijection on 1..n")
    return tau


def color_vertices(
    graph: RecoveryGraph, family: RecoveringFamily, permutation: Sequence[int]
) -> ColoringOutcome:
    """Color v with the smallest l whose entire l-th set ranks strictly below
    v under the permutation; leave v uncolored when no set does."""
    if graph.n != family.n:
        raise InvalidParams("graph and family disagree on n")
    tau = _validate_permutation(permutation, graph.n)
    colors: list[int | None] = []
    for v0, by_color in enumerate(_members0(family)):
        rank_v = tau[v0]
        color: int | None = None
        for l, members in enumerate(by_color, start=1):
            if all(rank_v > tau[m0] for m0 in members):
                color = l
                break
        colors.append(color)
    colored = frozenset(v0 + 1 for v0, c in enumerate(colors) if c is not None)
    return ColoringOutcome(permutation=tau, colors=tuple(colors), colored=colored)


def structural_check(
    graph: RecoveryGraph,
    family: RecoveringFamily,
    outcome: ColoringOutcome,
    subset: frozenset[int] | set[int],
) -> bool:
    """True iff some vertex of the subset is missing, among its outgoing
    edges staying inside the subset, at least one of the t colors."""
    sub = frozenset(subset)
    if not sub <= outcome.colored:
        raise InvalidParams("subset must consist of colored vertices")
    for v in sub:
        sets = family.sets_by_coordinate[v - 1]
        present = sum(1 for s in sets if s & sub)
        if present < graph.t:
            return True
    return False


def _mono_walks_acyclic(
    members0: list[list[tuple[int, ...]]],
    colors: Sequence[int | None],
) -> bool:
    """DFS cycle check of the colored subgraph that keeps, for each colored
    vertex, only the edges of its own color into colored vertices."""
    n = len(colors)
    adj: list[list[int]] = [[] for _ in range(n)]
    for v0, c in enumerate(colors):
        if c is None:
            continue
        adj[v0] = [m0 for m0 in members0[v0][c - 1] if colors[m0] is not None]
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for root in range(n):
        if state[root] or colors[root] is None:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        state[root] = 1
        while stack:
            v0, ptr = stack[-1]
            if ptr < len(adj[v0]):
                stack[-1] = (v0, ptr + 1)
                w0 = adj[v0][ptr]
                if state[w0] == 1:
                    return False
                if state[w0] == 0:
                    state[w0] = 1
                    stack.append((w0, 0))
            else:
                state[v0] = 2
                stack.pop()
    return True


def trial_permutation(seed: int, trial: int, n: int) -> np.ndarray:
    """The documented per-trial permutation: ranks 1..n from a PCG64 stream
    seeded with the pair (seed, trial). Independent of the trial order."""
    return np.random.default_rng((seed, trial)).permutation(n) + 1


def monte_carlo_colored_fraction(
    graph: RecoveryGraph,
    family: RecoveringFamily,
    trials: int,
    seed: int,
) -> MonteCarloStats:
    """Sample the colored fraction over seeded random permutations.

    Every trial also verifies that monochromatic colored walks are acyclic.
    Results depend only on (seed, trials), never on scheduling.
    """
    if graph.n != family.n:
        raise InvalidParams("graph and family disagree on n")
    if trials < 2:
        raise InvalidParams("need at least two trials for a standard error")
    members0 = _members0(family)
    n = graph.n
    counts = np.empty(trials, dtype=np.int64)
    walk_failures = 0
    for k in range(trials):
        tau = trial_permutation(seed, k, n).tolist()
        colors: list[int | None] = []
        colored_count = 0
        for v0 in range(n):
            rank_v = tau[v0]
            color: int | None = None
            for l, members in enumerate(members0[v0], start=1):
                ok = True
                for m0 in members:
                    if tau[m0] >= rank_v:
                        ok = False
                        break
                if ok:
                    color = l
                    break
            colors.append(color)
            if color is not None:
                colored_count += 1
        counts[k] = colored_count
        if not _mono_walks_acyclic(members0, colors):
            walk_failures += 1
    # Single division keeps the mean exact when every trial colors the same
    # number of vertices, so equality with a rational threshold survives.
    mean = int(counts.sum()) / (trials * n)
    stderr = float(counts.std(ddof=1) / (n * sqrt(trials)))
    return MonteCarloStats(
        mean=mean, stderr=stderr, trials=trials, walk_failures=walk_failures
    )


def exhaustive_expected_fraction(
    graph: RecoveryGraph, family: RecoveringFamily
) -> Fraction:
    """Exact expected colored fraction over all n! permutations."""
    if graph.n != family.n:
        raise InvalidParams("graph and family disagree on n")
    n = graph.n
    if n > EXHAUSTIVE_VERTEX_CAP:
        raise DimensionTooLarge(
            f"exhaustive expectation needs n <= {EXHAUSTIVE_VERTEX_CAP}, got {n}"
        )
    members0 = _members0(family)
    total_colored = 0
    for tau in permutations(range(1, n + 1)):
        for v0 in range(n):
            rank_v = tau[v0]
            for members in members0[v0]:
                ok = True
                for m0 in members:
                    if tau[m0] >= rank_v:
                        ok = False
                        break
                if ok:
                    total_colored += 1
                    break
    return Fraction(total_colored, factorial(n) * n)
