"""Simple undirected graphs, DIMACS I/O, generators and the universal-vertex join.

Vertices are dense 0-based integer ids. The adjacency is held as a read-only
boolean numpy matrix, which keeps the cubic-time ceiling computations
vectorizable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class DimacsError(ValueError):
    """Malformed DIMACS edge-format input."""


class Graph:
    """Immutable simple undirected loop-free graph on vertices ``0..n-1``."""

    __slots__ = ("_adj", "_degrees", "_m")

    def __init__(self, adjacency: np.ndarray):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if adj.diagonal().any():
            loop = int(np.flatnonzero(adj.diagonal())[0])
            raise ValueError(f"self-loop at vertex {loop}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")
        adj.setflags(write=False)
        self._adj = adj
        self._degrees = adj.sum(axis=1).astype(np.int64)
        self._degrees.setflags(write=False)
        self._m = int(self._degrees.sum()) // 2

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def min_degree(self) -> int:
        return int(self._degrees.min()) if self.n else 0

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self._adj[x, y])

    def neighbors(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return frozenset(np.flatnonzero(self._adj[x]).tolist())

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted lexicographically."""
        rows, cols = np.nonzero(np.triu(self._adj, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} out of range for graph with n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class JoinedInstance:
    """The graph ``G ∨ u``: the primary graph plus a universal vertex.

    ``universal_vertex`` is always ``primary_order`` (the highest id).
    """

    graph: Graph
    universal_vertex: int
    primary_order: int

    def primary(self) -> Graph:
        """Delete the universal vertex, recovering the original graph."""
        n = self.primary_order
        return Graph(self.graph.adjacency[:n, :n])


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex-id pairs; duplicates and reversed pairs collapse."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = np.zeros((n, n), dtype=bool)
    for pair in edges:
        i, j = (int(v) for v in pair)
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) has a vertex id outside 0..{n - 1}")
        if i == j:
            raise ValueError(f"edge ({i}, {j}) is a self-loop")
        adj[i, j] = adj[j, i] = True
    return Graph(adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex ids")
    adj = np.zeros_like(g.adjacency)
    adj[np.ix_(perm, perm)] = g.adjacency
    return Graph(adj)


def parse_dimacs(text: str | Iterable[str]) -> Graph:
    """Parse DIMACS edge format (``p edge n m`` then ``e i j`` lines, 1-based)."""
    lines = text.splitlines() if isinstance(text, str) else text
    n = declared_m = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(f"line {lineno}: expected 'p edge n m', got {raw.strip()!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size in problem line") from None
            if n < 0 or declared_m < 0:
                raise DimacsError(f"line {lineno}: negative size in problem line")
        elif tag == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge line before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: expected 'e i j', got {raw.strip()!r}")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer vertex id") from None
            for v in (i, j):
                if not 1 <= v <= n:
                    raise DimacsError(f"line {lineno}: vertex id {v} out of range 1..{n}")
            if i == j:
                raise DimacsError(f"line {lineno}: self-loop on vertex {i}")
            key = (min(i, j) - 1, max(i, j) - 1)
            if key in seen:
                raise DimacsError(f"line {lineno}: duplicate edge {i} {j}")
            seen.add(key)
        else:
            raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise DimacsError("missing problem line 'p edge n m'")
    if len(seen) != declared_m:
        raise DimacsError(f"problem line declares {declared_m} edges but {len(seen)} were given")
    return from_edges(n, seen)


def write_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}\n"]
    out.extend(f"e {i + 1} {j + 1}\n" for i, j in g.edges())
    return "".join(out)


def join_universal(g: Graph) -> JoinedInstance:
    """Add a new vertex ``u = n`` adjacent to every vertex of ``g``."""
    n = g.n
    adj = np.ones((n + 1, n + 1), dtype=bool)
    adj[:n, :n] = g.adjacency
    np.fill_diagonal(adj, False)
    return JoinedInstance(Graph(adj), universal_vertex=n, primary_order=n)


def closed_neighborhood(g: Graph, x: int) -> frozenset[int]:
    return g.neighbors(x) | {x}


def induced_degree(g: Graph, z: int, a: Iterable[int]) -> int:
    """Number of neighbours of ``z`` inside the vertex set ``a``."""
    a = set(a)
    if z not in a:
        raise ValueError(f"vertex {z} is not in the given set")
    return len(g.neighbors(z) & a)


# -- generators --------------------------------------------------------------

def gen_complete(n: int) -> Graph:
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph(adj)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    adj = np.zeros((a + b, a + b), dtype=bool)
    adj[:a, a:] = True
    adj[a:, :a] = True
    return Graph(adj)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); identical output for identical seeds."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph(upper | upper.T)


def gen_split(r: int, p: int, dmin: int, dmax: int, total: int, seed: int) -> Graph:
    """Split graph: clique on ``0..r-1`` plus an independent set ``r..r+p-1``.

    Each independent vertex gets between ``dmin`` and ``dmax`` clique
    neighbours, and the independent degrees sum to ``total``.
    """
    if r < 0 or p < 0 or dmin < 0:
        raise ValueError("r, p and dmin must be nonnegative")
    if dmin > dmax:
        raise ValueError(f"dmin={dmin} exceeds dmax={dmax}")
    if dmax > r and p > 0:
        raise ValueError(f"dmax={dmax} exceeds the clique size r={r}")
    if not p * dmin <= total <= p * dmax:
        raise ValueError(
            f"total={total} not reachable with {p} vertices of degree {dmin}..{dmax}"
        )
    rng = np.random.default_rng(seed)
    degs = np.full(p, dmin, dtype=np.int64)
    spare = total - p * dmin
    for i in range(p):
        add = min(spare, dmax - dmin)
        degs[i] += add
        spare -= add
    rng.shuffle(degs)

    n = r + p
    adj = np.zeros((n, n), dtype=bool)
    adj[:r, :r] = True
    np.fill_diagonal(adj, False)
    for i, d in enumerate(degs.tolist()):
        targets = rng.choice(r, size=d, replace=False)
        adj[r + i, targets] = True
        adj[targets, r + i] = True
    return Graph(adj)
