"""Ordered deformations d: V(G') -> V(G) between dual trees.

A deformation collapses connected pieces of the more degenerate tree G'
onto single vertices of G, sending every remaining edge of G' onto an edge
of G.  Everything downstream only needs the list of these maps and, for
each one, which edges of G' survive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .trees import Tree, automorphism_group, canonical_encode, compose, _edge

__all__ = [
    "OrderedDeformation",
    "EdgeCorrespondence",
    "ordered_deformations",
    "quotient_by_target",
    "quotient_by_source",
    "edge_correspondence",
    "is_deformation_reachable",
    "contract",
    "check_conditions",
]


@dataclass(frozen=True)
class OrderedDeformation:
    source: Tree  # G', the more degenerate tree
    target: Tree  # G
    vertex_map: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def fiber(self, a: int) -> tuple[int, ...]:
        return tuple(v for v, image in enumerate(self.vertex_map) if image == a)


@dataclass(frozen=True)
class EdgeCorrespondence:
    # target edge (A, B) -> (P, Q) with d(P) = A, d(Q) = B
    surviving: dict
    contracted: tuple[tuple[int, int], ...]

    def oriented(self, a: int, b: int) -> tuple[int, int]:
        """The surviving G'-edge over (a, b), as (endpoint over a, endpoint over b)."""
        if (a, b) in self.surviving:
            return self.surviving[(a, b)]
        p, q = self.surviving[(b, a)]
        return q, p


def _bfs_order(t: Tree):
    order, parent = [0], {0: None}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in t.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


def ordered_deformations(target: Tree, source: Tree) -> list[OrderedDeformation]:
    """All of def_o(target, source), sorted by vertex map.

    Vertices of the source are placed in BFS order.  A child either joins
    its parent's fibre or opens the fibre of a fresh neighbour of the
    parent's image; any other choice breaks fibre connectedness or edge
    compatibility immediately, so no completed map needs rechecking.
    """
    if source.n_edges < target.n_edges:
        return []
    order, parent = _bfs_order(source)
    n = source.n_vertices
    image = [-1] * n
    used = [False] * target.n_vertices
    out = []

    def place(k, n_used):
        if n - k < target.n_vertices - n_used:
            return
        if k == n:
            if n_used == target.n_vertices:
                out.append(tuple(image))
            return
        v = order[k]
        p = parent[v]
        if p is None:
            choices = range(target.n_vertices)
        else:
            choices = (image[p],) + tuple(b for b in target.neighbors(image[p]) if not used[b])
        for a in choices:
            fresh = not used[a]
            image[v] = a
            used[a] = True
            place(k + 1, n_used + fresh)
            if fresh:
                used[a] = False
            image[v] = -1

    place(0, 0)
    out.sort()
    return [OrderedDeformation(source, target, m) for m in out]


def check_conditions(target: Tree, source: Tree, vertex_map: Sequence[int]) -> bool:
    """Direct check of surjectivity, connected fibres and edge compatibility."""
    if set(vertex_map) != set(target.vertices):
        return False
    for p in source.vertices:
        for q in source.vertices:
            if p < q and vertex_map[p] == vertex_map[q]:
                if any(vertex_map[r] != vertex_map[p] for r in source.path(p, q)):
                    return False
    target_edges = set(target.edges)
    for p, q in source.edges:
        a, b = vertex_map[p], vertex_map[q]
        if a != b and _edge(a, b) not in target_edges:
            return False
    return True


def _orbits(defs, moves):
    index = {d.vertex_map: i for i, d in enumerate(defs)}
    seen = set()
    classes = []
    for d in defs:
        if d.vertex_map in seen:
            continue
        orbit = []
        for m in moves(d.vertex_map):
            if m not in seen:
                seen.add(m)
                orbit.append(m)
        classes.append(sorted((defs[index[m]] for m in orbit), key=lambda x: x.vertex_map))
    return classes


def quotient_by_target(defs: list[OrderedDeformation], aut=None) -> list[list[OrderedDeformation]]:
    """Orbits of d -> g.d for g in Aut(target)."""
    if not defs:
        return []
    aut = aut if aut is not None else automorphism_group(defs[0].target)
    return _orbits(defs, lambda m: {compose(g, m) for g in aut})


def quotient_by_source(defs: list[OrderedDeformation], aut=None) -> list[list[OrderedDeformation]]:
    """Orbits of d -> d.g' for g' in Aut(source)."""
    if not defs:
        return []
    aut = aut if aut is not None else automorphism_group(defs[0].source)
    return _orbits(defs, lambda m: {compose(m, g) for g in aut})


def edge_correspondence(d: OrderedDeformation) -> EdgeCorrespondence:
    surviving = {}
    contracted = []
    for p, q in d.source.edges:
        a, b = d(p), d(q)
        if a == b:
            contracted.append((p, q))
            continue
        key = (a, b) if a < b else (b, a)
        assert key not in surviving, "two source edges over one target edge"
        surviving[key] = (p, q) if a < b else (q, p)
    assert len(surviving) == d.target.n_edges
    return EdgeCorrespondence(surviving, tuple(contracted))


def contract(t: Tree, edges) -> Tree:
    """Collapse the given edges; vertices renumbered by smallest member."""
    parent = list(t.vertices)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        parent[max(ru, rv)] = min(ru, rv)
    roots = sorted({find(v) for v in t.vertices})
    label = {r: i for i, r in enumerate(roots)}
    kept = {_edge(label[find(u)], label[find(v)]) for u, v in t.edges if find(u) != find(v)}
    return Tree(len(roots), tuple(sorted(kept)))


def is_deformation_reachable(target: Tree, source: Tree) -> bool:
    return bool(ordered_deformations(target, source))


def contraction_matches(d: OrderedDeformation) -> bool:
    collapsed = contract(d.source, edge_correspondence(d).contracted)
    return canonical_encode(collapsed) == canonical_encode(d.target)
