"""Dual trees of rational nodal curves.

A :class:`Tree` has integer vertices ``0..n-1`` and an optional
coordinatization: for each 2-valent vertex, which incident edge is its
infinity node.  Leaves always carry the infinity node on their unique edge,
and 3-valent vertices need no choice.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

__all__ = [
    "Tree",
    "MultiplicityData",
    "MultiplicityTooHigh",
    "TreeParseError",
    "enumerate_trees",
    "canonical_encode",
    "automorphism_group",
    "default_coordinatization",
    "multiplicity_data",
    "parse_tree",
    "named_tree",
    "NAMED_TREES",
    "STRATUM_NAMES",
    "ZERODIV_TREE",
    "edge_image",
    "preserves_infinity",
    "compose",
    "inverse",
]


class MultiplicityTooHigh(ValueError):
    pass


class TreeParseError(ValueError):
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"tree parse error at position {position}: expected {expected} in {text!r}")


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    infinity: tuple[tuple[int, int], ...] = ()
    _adj: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.n_vertices
        if n < 1:
            raise ValueError("a tree has at least one vertex")
        edges = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            edges.append(_edge(u, v))
        if len(set(edges)) != len(edges):
            raise ValueError("multi-edges are not allowed")
        if len(edges) != n - 1:
            raise ValueError(f"{n} vertices need {n - 1} edges, got {len(edges)}")
        edges = tuple(sorted(edges))
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        adj = tuple(tuple(sorted(a)) for a in adj)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != n:
            raise ValueError("tree is not connected")
        inf = dict(self.infinity)
        for v, w in inf.items():
            if len(adj[v]) != 2:
                raise ValueError(f"infinity label on vertex {v} of multiplicity {len(adj[v])}")
            if w not in adj[v]:
                raise ValueError(f"({v},{w}) is not an edge")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "infinity", tuple(sorted(inf.items())))
        object.__setattr__(self, "_adj", adj)

    # -- structure ------------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def multiplicity(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def max_multiplicity(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def incident_edges(self, v: int) -> tuple[tuple[int, int], ...]:
        return tuple(_edge(v, w) for w in self._adj[v])

    def path(self, a: int, b: int) -> list[int]:
        """Vertices on the unique path from a to b, endpoints included."""
        parent = {a: None}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                break
            for w in self._adj[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        out = [b]
        while out[-1] != a:
            out.append(parent[out[-1]])
        return out[::-1]

    def centers(self) -> list[int]:
        degree = [len(a) for a in self._adj]
        remaining = self.n_vertices
        layer = [v for v in self.vertices if degree[v] <= 1]
        removed = set()
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for v in layer:
                removed.add(v)
                for w in self._adj[v]:
                    if w not in removed:
                        degree[w] -= 1
                        if degree[w] == 1:
                            nxt.append(w)
            layer = nxt
        return sorted(v for v in self.vertices if v not in removed)

    # -- coordinatization ------------------------------------------------
    def infinity_edge(self, v: int) -> tuple[int, int] | None:
        """The edge carrying the infinity node of component ``v``."""
        m = self.multiplicity(v)
        if m == 1:
            return _edge(v, self._adj[v][0])
        if m == 2:
            w = dict(self.infinity).get(v)
            if w is None:
                raise ValueError(f"vertex {v} is not coordinatized")
            return _edge(v, w)
        return None

    def zero_edge(self, v: int) -> tuple[int, int] | None:
        if self.multiplicity(v) != 2:
            return None
        inf = self.infinity_edge(v)
        (other,) = [e for e in self.incident_edges(v) if e != inf]
        return other

    def is_coordinatized(self) -> bool:
        inf = dict(self.infinity)
        return all(v in inf for v in self.vertices if self.multiplicity(v) == 2)

    def coordinatized(self) -> "Tree":
        if self.is_coordinatized():
            return self
        inf = dict(default_coordinatization(self))
        inf.update(dict(self.infinity))
        return Tree(self.n_vertices, self.edges, tuple(inf.items()))

    def with_infinity(self, v: int, w: int) -> "Tree":
        inf = dict(self.infinity)
        inf[v] = w
        return Tree(self.n_vertices, self.edges, tuple(inf.items()))

    def flipped(self, v: int) -> "Tree":
        """Swap the 0 and infinity labels of the 2-valent vertex v."""
        inf = self.infinity_edge(v)
        zero = self.zero_edge(v)
        (w,) = [x for x in zero if x != v]
        assert inf != zero
        return self.with_infinity(v, w)

    def relabel(self, perm: Iterable[int]) -> "Tree":
        """Tree with vertex v renamed perm[v]."""
        perm = tuple(perm)
        edges = tuple(_edge(perm[u], perm[v]) for u, v in self.edges)
        inf = tuple((perm[v], perm[w]) for v, w in self.infinity)
        return Tree(self.n_vertices, edges, inf)

    def to_text(self) -> str:
        edges = ",".join(f"{u}-{v}" for u, v in self.edges)
        text = f"edges={edges}"
        if self.infinity:
            text += ";inf=" + ",".join(f"{v}:{w}" for v, w in self.infinity)
        return text

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class MultiplicityData:
    e: tuple[int, ...]
    delta_sets: dict
    delta_counts: dict
    max_multiplicity: int


def multiplicity_data(t: Tree) -> MultiplicityData:
    e = tuple(t.multiplicity(v) for v in t.vertices)
    sets: dict[int, tuple[int, ...]] = {}
    for v, m in enumerate(e):
        sets.setdefault(m, ())
        sets[m] = sets[m] + (v,)
    counts = {m: len(s) for m, s in sets.items()}
    return MultiplicityData(e, sets, counts, max(e))


# -- canonical encoding and enumeration --------------------------------

def _rooted_code(t: Tree, root: int, parent: int | None = None) -> str:
    children = sorted(_rooted_code(t, w, root) for w in t.neighbors(root) if w != parent)
    return "(" + "".join(children) + ")"


def canonical_encode(t: Tree) -> str:
    """AHU encoding rooted at the center(s); equal iff trees are isomorphic."""
    return min(_rooted_code(t, c) for c in t.centers())


def _tree_from_code(code: str) -> Tree:
    edges = []
    stack = []
    count = 0
    for ch in code:
        if ch == "(":
            v = count
            count += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        else:
            stack.pop()
    return Tree(count, tuple(edges))


def enumerate_trees(max_edges: int, max_multiplicity: int | None = None) -> list[Tree]:
    """One representative per isomorphism class, grown leaf by leaf.

    Ordered by edge count, then by canonical encoding.  Representatives are
    labelled in preorder of their canonical encoding.
    """
    if max_edges < 0:
        raise ValueError("max_edges must be nonnegative")
    cap = max_multiplicity if max_multiplicity is not None else max_edges + 1
    layer = {canonical_encode(Tree(1, ())): Tree(1, ())}
    out = []
    for n_edges in range(max_edges + 1):
        out.extend(_tree_from_code(code) for code in sorted(layer))
        if n_edges == max_edges:
            break
        nxt = {}
        for t in layer.values():
            for v in t.vertices:
                if t.multiplicity(v) >= cap:
                    continue
                grown = Tree(t.n_vertices + 1, t.edges + ((v, t.n_vertices),))
                nxt.setdefault(canonical_encode(grown), grown)
        layer = nxt
    return out


# -- automorphisms ------------------------------------------------------

def automorphism_group(t: Tree) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the edge set (identity first).

    Backtracking over degree-preserving assignments, checking adjacency to
    already-placed vertices as we go.
    """
    n = t.n_vertices
    edge_set = set(t.edges)
    order = []
    seen = set()
    for start in [0]:
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in t.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    image = [-1] * n
    used = [False] * n
    found = []

    def extend(k):
        if k == n:
            found.append(tuple(image))
            return
        v = order[k]
        for cand in range(n):
            if used[cand] or t.multiplicity(cand) != t.multiplicity(v):
                continue
            ok = True
            for w in t.neighbors(v):
                if image[w] >= 0 and _edge(cand, image[w]) not in edge_set:
                    ok = False
                    break
            if not ok:
                continue
            image[v] = cand
            used[cand] = True
            extend(k + 1)
            image[v] = -1
            used[cand] = False

    extend(0)
    found.sort()
    ident = tuple(range(n))
    found.remove(ident)
    return [ident] + found


def compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    """(g o h)(v) = g(h(v))."""
    return tuple(g[h[v]] for v in range(len(h)))


def inverse(g: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(g)
    for v, gv in enumerate(g):
        out[gv] = v
    return tuple(out)


def edge_image(g: tuple[int, ...], e: tuple[int, int]) -> tuple[int, int]:
    return _edge(g[e[0]], g[e[1]])


def preserves_infinity(t: Tree, g: tuple[int, ...], v: int) -> bool:
    """For 2-valent v: does g send v's infinity edge to g(v)'s infinity edge?"""
    return edge_image(g, t.infinity_edge(v)) == t.infinity_edge(g[v])


# -- coordinatization ---------------------------------------------------

def default_coordinatization(t: Tree) -> tuple[tuple[int, int], ...]:
    """Infinity edges pointing toward the center of the tree.

    A 2-valent vertex that is itself the (unique) center points to its
    larger-labelled neighbour.  On the 3-chain 0-1-2 this gives ``1:2``; on
    the 4-chain 0-1-2-3 both middles point along the central edge.
    """
    if t.max_multiplicity > 3:
        raise MultiplicityTooHigh(f"maximal multiplicity {t.max_multiplicity} > 3")
    centers = t.centers()
    out = []
    for v in t.vertices:
        if t.multiplicity(v) != 2:
            continue
        if v in centers and len(centers) == 1:
            out.append((v, max(t.neighbors(v))))
            continue
        target = min(centers, key=lambda c: (len(t.path(v, c)), c))
        if target == v:
            (other,) = [c for c in centers if c != v]
            out.append((v, other))
        else:
            out.append((v, t.path(v, target)[1]))
    return tuple(out)


# -- text format and names ----------------------------------------------

_TREE_RE = re.compile(r"edges=(?P<edges>[0-9,\- ]*)(;inf=(?P<inf>[0-9:, ]*))?$")

NAMED_TREES: dict[str, Tree] = {
    "pt": Tree(1, ()),
    "chain2": Tree(2, ((0, 1),)),
    "chain3": Tree(3, ((0, 1), (1, 2)), ((1, 2),)),
    "star3": Tree(4, ((0, 3), (1, 3), (2, 3))),
    "chain4": Tree(4, ((0, 1), (1, 2), (2, 3)), ((1, 2), (2, 1))),
}
STRATUM_NAMES = ("pt", "chain2", "chain3", "star3", "chain4")

# two adjacent trivalent components, each carrying two leaves
ZERODIV_TREE = Tree(6, ((0, 4), (1, 4), (4, 5), (2, 5), (3, 5)))


def named_tree(name: str) -> Tree:
    return NAMED_TREES[name]


def parse_tree(text: str) -> Tree:
    """Parse ``edges=0-1,1-2;inf=1:2`` or one of the named aliases."""
    text = text.strip()
    if text in NAMED_TREES:
        return NAMED_TREES[text]
    if text == "zerodiv":
        return ZERODIV_TREE
    if not text.startswith("edges="):
        raise TreeParseError(text, 0, "'edges=' or a named tree (" + ", ".join(STRATUM_NAMES) + ")")
    body, _, inf_part = text[len("edges="):].partition(";")
    pos = len("edges=")
    edges = []
    if body.strip():
        for chunk in body.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*-\s*(\d+)\s*", chunk)
            if not m:
                raise TreeParseError(text, pos, "edge 'u-v'")
            edges.append((int(m.group(1)), int(m.group(2))))
            pos += len(chunk) + 1
    inf = []
    if inf_part:
        pos = len("edges=") + len(body) + 1
        if not inf_part.startswith("inf="):
            raise TreeParseError(text, pos, "'inf='")
        pos += 4
        for chunk in inf_part[4:].split(","):
            if not chunk.strip():
                continue
            m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", chunk)
            if not m:
                raise TreeParseError(text, pos, "label 'v:w'")
            inf.append((int(m.group(1)), int(m.group(2))))
            pos += len(chunk) + 1
    n = 1 + max((max(e) for e in edges), default=0)
    try:
        return Tree(n, tuple(edges), tuple(inf))
    except ValueError as exc:
        raise TreeParseError(text, 0, f"a valid tree ({exc})") from exc
