"""
Degrees of T-invariant curves and distances between Schubert varieties.

Two routes compute the minimal degree of a curve joining the opposite Schubert
variety ``X^u`` to the Schubert variety ``X_v`` in ``X = G/P``:

* :func:`dist` assembles it from scalar shortest paths in the curve graphs of
  the maximal-parabolic quotients ``G/P_beta``, one per ``beta`` outside the
  parabolic subset;
* :func:`pareto_min_degrees` runs a multi-objective label-setting search with
  vector weights directly in the curve graph of ``X`` and returns the whole
  Pareto frontier of chain degrees.

When both are right the frontier is the single degree returned by :func:`dist`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .rootsys import Root, in_parabolic_span
from .weyl import WeylElement, WeylGroup, parabolic_subset

__all__ = [
    "Degree", "CurveGraph", "curve_class", "build_curve_graph",
    "fixed_points_opposite", "fixed_points_schubert", "dist_beta", "dist",
    "pareto_min_degrees", "connected_by_degree", "complement",
]


@dataclass(frozen=True)
class Degree:
    """An effective class in H_2(G/P), one nonnegative entry per simple root outside P.

    ``<=`` is the componentwise partial order; it is not total, so do not sort
    degrees with it.
    """
    indices: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != len(self.values):
            raise ValueError("indices and values must have equal length")
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError(f"degree indices must be strictly increasing: {self.indices}")
        if any(x < 0 for x in self.values):
            raise ValueError(f"ineffective degree {self.values}")

    @classmethod
    def zero(cls, indices: Iterable[int]) -> Degree:
        indices = tuple(sorted(indices))
        return cls(indices, (0,) * len(indices))

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> Degree:
        keys = tuple(sorted(m))
        return cls(keys, tuple(m[k] for k in keys))

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.indices, self.values))

    def __getitem__(self, beta: int) -> int:
        return self.values[self.indices.index(beta)]

    def _same_space(self, other: Degree):
        if self.indices != other.indices:
            raise ValueError(f"degrees over different bases {self.indices} and {other.indices}")

    def __le__(self, other: Degree) -> bool:
        self._same_space(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def __ge__(self, other: Degree) -> bool:
        return other <= self

    def __lt__(self, other: Degree) -> bool:
        return self <= other and self != other

    def __gt__(self, other: Degree) -> bool:
        return other < self

    def __add__(self, other: Degree) -> Degree:
        self._same_space(other)
        return Degree(self.indices, tuple(a + b for a, b in zip(self.values, other.values)))

    def is_zero(self) -> bool:
        return not any(self.values)

    def total(self) -> int:
        return sum(self.values)

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


def complement(group: WeylGroup, parabolic: Iterable[int]) -> tuple[int, ...]:
    """The simple roots outside the parabolic subset, i.e. the indices of H_2(G/P)."""
    p = parabolic_subset(parabolic, group.rank)
    return tuple(i for i in range(1, group.rank + 1) if i not in p)


def curve_class(group: WeylGroup, alpha: Root, parabolic: Iterable[int]) -> Degree:
    """Degree of the T-invariant curve ``X(alpha)`` joining ``1.P`` and ``s_alpha.P``.

    This is the image of ``alpha^vee`` in the coroot lattice modulo the coroots
    of P: the coroot coefficients at the simple roots outside P.
    """
    p = parabolic_subset(parabolic, group.rank)
    alpha = tuple(alpha)
    if in_parabolic_span(alpha, p):
        raise ValueError(f"root {alpha} lies in the span of the parabolic subset {sorted(p)}")
    cor = group.rs.coroot(alpha)
    idx = complement(group, p)
    return Degree(idx, tuple(abs(cor[i - 1]) for i in idx))


@dataclass(frozen=True)
class CurveGraph:
    """T-fixed points of G/P joined by irreducible T-invariant curves.

    ``adjacency[c]`` holds ``(c2, degree)`` pairs; the graph is undirected and
    parallel edges with different degrees are kept.
    """
    group: WeylGroup
    parabolic: frozenset[int]
    vertices: tuple[WeylElement, ...]
    adjacency: Mapping[WeylElement, frozenset[tuple[WeylElement, Degree]]]

    @property
    def edges(self) -> frozenset[tuple[WeylElement, WeylElement, Degree]]:
        order = {w: k for k, w in enumerate(self.vertices)}
        out = set()
        for a, nbrs in self.adjacency.items():
            for b, d in nbrs:
                if order[a] <= order[b]:
                    out.add((a, b, d))
        return frozenset(out)


def build_curve_graph(group: WeylGroup, parabolic: Iterable[int]) -> CurveGraph:
    return _curve_graph(group, parabolic_subset(parabolic, group.rank))


@lru_cache(maxsize=None)
def _curve_graph(group: WeylGroup, p: frozenset[int]) -> CurveGraph:
    vertices = group.enumerate_WP(p)
    roots = [a for a in group.rs.positive_roots if not in_parabolic_span(a, p)]
    reflections = [(group.reflection(a), curve_class(group, a, p)) for a in roots]
    adj: dict[WeylElement, set] = {c: set() for c in vertices}
    for w in group.elements:
        c = group.min_rep(w, p)
        for s_alpha, deg in reflections:
            c2 = group.min_rep(w * s_alpha, p)
            if c2 != c:
                adj[c].add((c2, deg))
                adj[c2].add((c, deg))
    return CurveGraph(group, p, vertices,
                      {c: frozenset(nbrs) for c, nbrs in adj.items()})


def _require_min_rep(group: WeylGroup, w: WeylElement, p: frozenset[int]):
    if not group.is_min_rep(w, p):
        raise ValueError(f"{w} is not a minimal coset representative for parabolic {sorted(p)}")


def fixed_points_opposite(group: WeylGroup, u: WeylElement, parabolic) -> frozenset[WeylElement]:
    """T-fixed points of ``X^u``: ``{w in W^P : w >= u}``."""
    p = parabolic_subset(parabolic, group.rank)
    _require_min_rep(group, u, p)
    return frozenset(w for w in group.enumerate_WP(p) if group.bruhat_leq(u, w))


def fixed_points_schubert(group: WeylGroup, v: WeylElement, parabolic) -> frozenset[WeylElement]:
    """T-fixed points of ``X_v``: ``{w in W^P : w <= v}``."""
    p = parabolic_subset(parabolic, group.rank)
    _require_min_rep(group, v, p)
    return frozenset(w for w in group.enumerate_WP(p) if group.bruhat_leq(w, v))


def dist_beta(group: WeylGroup, u: WeylElement, v: WeylElement, beta: int) -> int:
    """Smallest degree of a curve in ``G/P_beta`` joining its Schubert varieties for u and v.

    ``u`` and ``v`` may be arbitrary Weyl group elements; they are projected to
    minimal representatives for the maximal parabolic omitting ``beta``.
    """
    p = frozenset(range(1, group.rank + 1)) - {beta}
    if beta in p or not 1 <= beta <= group.rank:
        raise ValueError(f"simple root index {beta} outside 1..{group.rank}")
    return _dist_beta(group, group.min_rep(u, p), group.min_rep(v, p), beta)


@lru_cache(maxsize=None)
def _dist_beta(group: WeylGroup, u: WeylElement, v: WeylElement, beta: int) -> int:
    p = frozenset(range(1, group.rank + 1)) - {beta}
    graph = _curve_graph(group, p)
    targets = fixed_points_schubert(group, v, p)
    best: dict[WeylElement, int] = {}
    heap = []
    # the virtual source joins every fixed point of X^u with weight 0
    for c in fixed_points_opposite(group, u, p):
        best[c] = 0
        heap.append((0, group.sort_key(c), c))
    heapq.heapify(heap)
    done = set()
    while heap:
        d, _, c = heapq.heappop(heap)
        if c in done:
            continue
        if c in targets:
            return d
        done.add(c)
        for c2, deg in graph.adjacency[c]:
            nd = d + deg[beta]
            if nd < best.get(c2, nd + 1):
                best[c2] = nd
                heapq.heappush(heap, (nd, group.sort_key(c2), c2))
    raise RuntimeError("curve graph of G/P_beta is disconnected")


def dist(group: WeylGroup, u: WeylElement, v: WeylElement, parabolic) -> Degree:
    """The distance between ``X^u`` and ``X_v`` in G/P, assembled from rank-one projections."""
    return _dist(group, u, v, parabolic_subset(parabolic, group.rank))


@lru_cache(maxsize=None)
def _dist(group: WeylGroup, u: WeylElement, v: WeylElement, p: frozenset[int]) -> Degree:
    _require_min_rep(group, u, p)
    _require_min_rep(group, v, p)
    idx = complement(group, p)
    return Degree(idx, tuple(dist_beta(group, u, v, b) for b in idx))


def _pareto_insert(front: list[Degree], d: Degree) -> bool:
    """Add ``d`` to an antichain unless some member is <= d; drop members it dominates."""
    if any(f <= d for f in front):
        return False
    front[:] = [f for f in front if not d <= f]
    front.append(d)
    return True


def pareto_min_degrees(group: WeylGroup, u: WeylElement, v: WeylElement,
                       parabolic) -> frozenset[Degree]:
    """Pareto-minimal degrees of T-invariant chains from ``X^u`` to ``X_v``.

    Label setting in order of total degree: a popped label is permanent unless
    a permanent label at the same vertex is componentwise <= it.  Each edge has
    positive total degree, so a label only survives if it beats every label
    with smaller total, and the permanent labels at a vertex form an antichain
    in N^k, which is finite.
    """
    p = parabolic_subset(parabolic, group.rank)
    _require_min_rep(group, u, p)
    _require_min_rep(group, v, p)
    graph = _curve_graph(group, p)
    zero = Degree.zero(complement(group, p))
    targets = fixed_points_schubert(group, v, p)

    labels: dict[WeylElement, list[Degree]] = {c: [] for c in graph.vertices}
    heap = [(0, zero.values, group.sort_key(c), c) for c in fixed_points_opposite(group, u, p)]
    heapq.heapify(heap)
    frontier: list[Degree] = []
    while heap:
        total, values, _, c = heapq.heappop(heap)
        d = Degree(zero.indices, values)
        if not _pareto_insert(labels[c], d):
            continue
        if c in targets:
            _pareto_insert(frontier, d)
        for c2, deg in graph.adjacency[c]:
            nd = d + deg
            if any(f <= nd for f in labels[c2]) or any(f <= nd for f in frontier):
                continue
            heapq.heappush(heap, (total + deg.total(), nd.values, group.sort_key(c2), c2))
    return frozenset(frontier)


def connected_by_degree(group: WeylGroup, u: WeylElement, v: WeylElement,
                        parabolic, d: Degree) -> bool:
    """Whether a curve of degree ``d`` joins ``X^u`` and ``X_v``: ``d >= dist(u, v)``."""
    return d >= dist(group, u, v, parabolic)
