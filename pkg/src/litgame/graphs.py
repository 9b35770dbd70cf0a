"""Graph model, text I/O, tree machinery, and matched-tree enumeration.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored as
(u, v) tuples with u < v.  Everything here is immutable after construction
and safe to share between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import GraphFormatError

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with vertex set {0, ..., n-1}."""

    n: int
    edges: tuple[Edge, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, validating vertex ranges and rejecting loops/duplicates."""
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return Graph(n, tuple(sorted(seen)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor list per vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbors per vertex (bit t set iff t is adjacent)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, s: int) -> int:
        return len(self.adjacency[s])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edge_set

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def path_graph(n: int) -> Graph:
    """The path 0-1-...-(n-1)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """A star with center 0 and the given number of leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------
#
# Optional '#' comment lines; first non-comment line is the vertex count n;
# each later non-comment line is "u v" with 0 <= u, v < n and u != v.

def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format, reporting errors with line numbers."""
    n: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            raise GraphFormatError(f"line {lineno}: empty line")
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 1, got {n}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if n is None:
        raise GraphFormatError("line 1: missing vertex count")
    return Graph(n, tuple(sorted(edges)))


def serialize_graph(g: Graph) -> str:
    """Emit the text format; edges in sorted order.  Round-trips through parse_graph."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Basic structure
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(s) <= 2 for s in range(g.n))


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges of a host graph on n vertices."""

    n: int
    pairs: tuple[Edge, ...]

    @staticmethod
    def from_pairs(g: Graph, pairs: Iterable[tuple[int, int]]) -> "Matching":
        used: set[int] = set()
        norm: list[Edge] = []
        for u, v in pairs:
            e = _normalize_edge(u, v)
            if e not in g.edge_set:
                raise ValueError(f"edge {e} not in graph")
            if e[0] in used or e[1] in used:
                raise ValueError(f"vertex reused by edge {e}")
            used.update(e)
            norm.append(e)
        return Matching(g.n, tuple(sorted(norm)))

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == self.n

    @cached_property
    def partner_map(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for u, v in self.pairs:
            m[u] = v
            m[v] = u
        return m

    @cached_property
    def pair_set(self) -> frozenset[Edge]:
        return frozenset(self.pairs)

    def partner(self, s: int) -> int | None:
        return self.partner_map.get(s)

    def __contains__(self, edge: tuple[int, int]) -> bool:
        return _normalize_edge(*edge) in self.pair_set


def tree_perfect_matching(g: Graph) -> Matching | None:
    """The unique perfect matching of a tree, or None if there is none.

    Leaf peeling: a leaf is forced to match its only neighbor; remove both
    and repeat.  Fails iff some vertex is stranded.
    """
    if not is_tree(g):
        raise ValueError("tree_perfect_matching requires a tree")
    if g.n % 2 == 1:
        return None
    deg = [g.degree(s) for s in range(g.n)]
    alive = [True] * g.n
    leaves = deque(s for s in range(g.n) if deg[s] == 1)
    pairs: list[Edge] = []
    matched = 0
    while leaves:
        s = leaves.popleft()
        if not alive[s]:
            continue
        t = next((v for v in g.adjacency[s] if alive[v]), None)
        if t is None:
            return None  # stranded leaf
        pairs.append(_normalize_edge(s, t))
        alive[s] = alive[t] = False
        matched += 2
        for w in g.adjacency[t]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    if matched != g.n:
        return None
    return Matching(g.n, tuple(sorted(pairs)))


def perfect_matchings(g: Graph) -> Iterator[Matching]:
    """All perfect matchings of any graph, by backtracking on the lowest uncovered vertex."""
    if g.n % 2 == 1:
        return
    chosen: list[Edge] = []
    covered = 0  # bitmask

    def rec(lo: int) -> Iterator[Matching]:
        nonlocal covered
        while lo < g.n and (covered >> lo) & 1:
            lo += 1
        if lo == g.n:
            yield Matching(g.n, tuple(sorted(chosen)))
            return
        for v in g.adjacency[lo]:
            if not (covered >> v) & 1:
                chosen.append(_normalize_edge(lo, v))
                covered |= (1 << lo) | (1 << v)
                yield from rec(lo + 1)
                covered &= ~((1 << lo) | (1 << v))
                chosen.pop()

    yield from rec(0)


def find_perfect_matching(g: Graph) -> Matching | None:
    """First perfect matching in backtracking order, or None."""
    return next(perfect_matchings(g), None)


# ---------------------------------------------------------------------------
# Alternating paths and edge types
# ---------------------------------------------------------------------------

def alternating_set(g: Graph, m: Matching, s: int) -> frozenset[int]:
    """Endpoints of matched-alternating paths out of s.

    A vertex t != s belongs iff the (unique) path from s to t alternates
    matched, unmatched, matched, ... starting with the matched edge at s and
    ending on a matched edge.  The matched partner of s itself qualifies
    (a path of a single matched edge).
    """
    if not is_tree(g):
        raise ValueError("alternating_set requires a tree")
    if not m.is_perfect:
        raise ValueError("alternating_set requires a perfect matching")
    result: set[int] = set()
    start = m.partner(s)
    if start is None:
        raise ValueError(f"vertex {s} is unmatched")
    # Stack holds vertices just reached via a matched edge; continue via
    # unmatched edges, then each next hop is forced through a matched edge.
    stack = [(s, start)]
    while stack:
        prev, t = stack.pop()
        result.add(t)
        for u in g.adjacency[t]:
            if u == prev or (t, u) in m:
                continue
            w = m.partner(u)
            if w is None or w == t:
                continue
            stack.append((u, w))
    return frozenset(result)


def alternating_count(g: Graph, m: Matching, s: int) -> int:
    return len(alternating_set(g, m, s))


class EdgeType(Enum):
    ODD = "odd"
    EVEN = "even"


def edge_type(g: Graph, m: Matching, e: tuple[int, int]) -> EdgeType:
    """Parity class of an edge: odd iff the endpoint path counts sum to an odd number."""
    u, v = _normalize_edge(*e)
    if (u, v) not in g.edge_set:
        raise ValueError(f"edge ({u}, {v}) not in graph")
    total = alternating_count(g, m, u) + alternating_count(g, m, v)
    return EdgeType.ODD if total % 2 == 1 else EdgeType.EVEN


# ---------------------------------------------------------------------------
# Subdivision
# ---------------------------------------------------------------------------

def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Insert a new vertex in the middle of edge e.  The new vertex gets id n."""
    x, y = _normalize_edge(*e)
    if (x, y) not in g.edge_set:
        raise ValueError(f"edge ({x}, {y}) not in graph")
    z = g.n
    edges = [d for d in g.edges if d != (x, y)]
    edges.extend([(x, z), (y, z)])
    return Graph(g.n + 1, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# Isomorphism-free tree enumeration
# ---------------------------------------------------------------------------

def _tree_centroids(n: int, adjacency: tuple[tuple[int, ...], ...]) -> list[int]:
    """Centroid vertices of a tree: those whose removal leaves components of size <= n/2."""
    if n == 1:
        return [0]
    parent = [-1] * n
    order: list[int] = []
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adjacency[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    centroids = []
    for v in range(n):
        heaviest = n - size[v]
        for u in adjacency[v]:
            if parent[u] == v:
                heaviest = max(heaviest, size[u])
        if heaviest <= n // 2:
            centroids.append(v)
    return centroids


def _rooted_encoding(adjacency: tuple[tuple[int, ...], ...], root: int) -> str:
    """Canonical parenthesis string of the tree rooted at root (children sorted)."""

    def enc(v: int, parent: int) -> str:
        kids = sorted(enc(u, v) for u in adjacency[v] if u != parent)
        return "(" + "".join(kids) + ")"

    return enc(root, -1)


def tree_canonical_key(g: Graph) -> str:
    """Isomorphism-invariant key for a tree: minimal centroid-rooted encoding."""
    if not is_tree(g):
        raise ValueError("tree_canonical_key requires a tree")
    return min(_rooted_encoding(g.adjacency, c) for c in _tree_centroids(g.n, g.adjacency))


@lru_cache(maxsize=None)
def _tree_reps(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices.

    Built by attaching a new leaf to every vertex of every (n-1)-vertex
    representative and deduplicating by canonical key.  Complete because
    deleting a leaf of any n-vertex tree leaves an (n-1)-vertex tree.
    """
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, ()),)
    by_key: dict[str, Graph] = {}
    for smaller in _tree_reps(n - 1):
        for v in range(n - 1):
            g = Graph(n, tuple(sorted(smaller.edges + ((v, n - 1),))))
            key = tree_canonical_key(g)
            if key not in by_key:
                by_key[key] = g
    return tuple(g for _, g in sorted(by_key.items()))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All trees on n vertices, one per isomorphism class, in a deterministic order."""
    yield from _tree_reps(n)


def enumerate_matched_trees(n: int) -> Iterator[Graph]:
    """Trees on n vertices that admit a perfect matching, one per isomorphism class.

    Odd (or nonpositive) n yields nothing: a perfect matching needs an even
    vertex count.
    """
    if n < 2 or n % 2 == 1:
        return
    for g in _tree_reps(n):
        if tree_perfect_matching(g) is not None:
            yield g
