"""Clique ceiling numbers and the ACCN upper bound on the clique number.

The ACCN runs on ``G ∨ u`` (the input plus a universal vertex ``u``):

1. build the join;
2. for every vertex ``y``, ``c(y:u) = 1 + h`` where ``h`` is the h-index of
   the degrees induced inside the closed neighbourhood ``C(y)``;
3. revise: ``c*(y:u)`` is the largest ``p`` such that ``p`` vertices of
   ``C(y)``, ``y`` and ``u`` among them, all carry ``c >= p``; then
   ``c*(u:u)`` is taken over the whole vertex set using the revised values.

``c*(u:u)`` bounds ``ω(G ∨ u)`` from above, so ``c*(u:u) - 1 >= ω(G)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Graph, JoinedInstance, join_universal

log = logging.getLogger(__name__)


def h_threshold(values: Iterable[int]) -> int:
    """Largest ``k >= 0`` such that at least ``k`` of ``values`` are ``>= k``."""
    ordered = sorted(values, reverse=True)
    k = 0
    while k < len(ordered) and ordered[k] >= k + 1:
        k += 1
    return k


def _column_h(values: np.ndarray) -> np.ndarray:
    """h-index of every column; entries below 1 never count."""
    if values.shape[0] == 0:
        return np.zeros(values.shape[1], dtype=np.int64)
    desc = -np.sort(-values, axis=0)
    ranks = np.arange(1, values.shape[0] + 1)[:, None]
    # desc[i] >= i+1 is monotone in i for a descending column
    return (desc >= ranks).sum(axis=0).astype(np.int64)


def _closed(adj: np.ndarray) -> np.ndarray:
    cl = adj.copy()
    np.fill_diagonal(cl, True)
    return cl


def _require_no_isolated(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if g.min_degree < 1:
        iso = int(np.flatnonzero(g.degrees == 0)[0])
        raise ValueError(
            f"vertex {iso} is isolated; clique ceilings need minimum degree >= 1"
        )


def _require_in_closed(g: Graph, x: int, y: int) -> None:
    g._check_vertex(x)
    g._check_vertex(y)
    if x != y and not g.has_edge(x, y):
        raise ValueError(f"vertex {y} is not in the closed neighbourhood of {x}")


# -- general definitions, any base vertex x ----------------------------------

def clique_ceiling(g: Graph, x: int, y: int) -> int:
    """``c(y:x)``, evaluated directly from neighbourhood sets."""
    _require_no_isolated(g)
    _require_in_closed(g, x, y)
    a = (g.neighbors(x) | {x}) & (g.neighbors(y) | {y})
    return 1 + h_threshold(len(g.neighbors(z) & a) for z in a)


def ceilings_under(g: Graph, x: int) -> dict[int, int]:
    """``c(z:x)`` for every ``z`` in ``C(x)``, computed in one matrix pass."""
    _require_no_isolated(g)
    g._check_vertex(x)
    adj = g.adjacency
    cl = _closed(adj)
    in_cx = cl[x]
    # deg[w, z] = |N(w) ∩ C(z) ∩ C(x)|
    deg = (adj & in_cx[None, :]).astype(np.float64) @ cl.astype(np.float64)
    member = cl & in_cx[:, None]
    h = _column_h(np.where(member, deg, -1.0))
    return {int(z): int(h[z]) + 1 for z in np.flatnonzero(in_cx)}


def revised_ceilings_under(g: Graph, x: int) -> dict[int, int]:
    """``c*(y:x)`` for every ``y`` in ``C(x)``."""
    c = ceilings_under(g, x)
    cx = c[x]
    out = {}
    for y, cy in c.items():
        common = (g.neighbors(y) | {y}) & c.keys()
        out[y] = min(cx, cy, h_threshold(c[z] for z in common))
    return out


def revised_clique_ceiling(g: Graph, x: int, y: int) -> int:
    """``c*(y:x)``: largest ``r`` with ``r`` vertices of ``C(x) ∩ C(y)``, ``x`` and
    ``y`` included, all having ``c(·:x) >= r``."""
    _require_no_isolated(g)
    _require_in_closed(g, x, y)
    return revised_ceilings_under(g, x)[y]


def ceiling_of_graph(g: Graph) -> int:
    """``c*(G) = max_x c*(x:x)``."""
    _require_no_isolated(g)
    return max(revised_ceilings_under(g, x)[x] for x in range(g.n))


# -- the ACCN on G ∨ u -------------------------------------------------------

@dataclass(frozen=True)
class CeilingTable:
    """Per-vertex ``c(y:u)`` and ``c*(y:u)``, indexed by vertex id of the join."""

    instance: JoinedInstance
    ceiling: np.ndarray
    revised: np.ndarray


@dataclass(frozen=True)
class AccnResult:
    table: CeilingTable
    c_star_join: int

    @property
    def bound_join(self) -> int:
        """Upper bound on ω(G ∨ u)."""
        return self.c_star_join

    @property
    def bound_primary(self) -> int:
        """Upper bound on ω(G)."""
        return self.c_star_join - 1


def phase2(inst: JoinedInstance) -> np.ndarray:
    """``c(y:u)`` for every vertex ``y`` of the join (``C(y) ∩ C(u) = C(y)``)."""
    adj = inst.graph.adjacency
    cl = _closed(adj)
    # deg[z, y] = |N(z) ∩ C(y)|, meaningful where z ∈ C(y)
    deg = adj.astype(np.float64) @ cl.astype(np.float64)
    return _column_h(np.where(cl, deg, -1.0)) + 1


def phase3(inst: JoinedInstance, c: np.ndarray, inplace: bool = False) -> CeilingTable:
    """Revise the phase-2 ceilings.

    By default every ``c*(y:u)`` is computed from the frozen phase-2 values,
    which makes the result independent of vertex order. ``inplace=True`` is
    the literal sequential reading where later vertices see already-revised
    values; it exists only for comparison.
    """
    u = inst.universal_vertex
    cl = _closed(inst.graph.adjacency)
    c = np.asarray(c, dtype=np.int64)
    if inplace:
        revised = c.copy()
        for y in range(len(c)):
            if y == u:
                continue
            nbhd = revised[cl[y]]
            revised[y] = min(revised[y], revised[u], h_threshold(nbhd.tolist()))
    else:
        h = _column_h(np.where(cl, c[:, None], 0))
        revised = np.minimum(np.minimum(c, c[u]), h)
        revised[u] = c[u]
    revised[u] = min(int(c[u]), h_threshold(revised.tolist()))
    c = c.copy()
    c.setflags(write=False)
    revised.setflags(write=False)
    return CeilingTable(inst, c, revised)


def accn(g: Graph, check_inplace: bool = False) -> AccnResult:
    """Upper bound on the clique number of ``g`` via its join with ``u``.

    With ``check_inplace`` the literal in-place phase-3 variant is run too and
    any disagreement is logged as a warning.
    """
    inst = join_universal(g)
    c = phase2(inst)
    table = phase3(inst, c)
    if check_inplace:
        literal = phase3(inst, c, inplace=True)
        if not np.array_equal(literal.revised, table.revised):
            diff = np.flatnonzero(literal.revised != table.revised).tolist()
            log.warning(
                "in-place phase-3 variant disagrees at vertices %s "
                "(c*(G∨u): snapshot %d, in-place %d)",
                diff, table.revised[inst.universal_vertex],
                literal.revised[inst.universal_vertex],
            )
    return AccnResult(table, int(table.revised[inst.universal_vertex]))


# -- traces ------------------------------------------------------------------

@dataclass(frozen=True)
class TraceRow:
    y: int
    a: tuple[int, ...]
    counts: tuple[int, ...]  # |N(z) ∩ A| for z in a, same order
    c: int
    c_star: int


@dataclass(frozen=True)
class AccnTrace:
    rows: tuple[TraceRow, ...]
    universal_vertex: int
    c_star_join: int

    @property
    def bound_primary(self) -> int:
        return self.c_star_join - 1

    def label(self, v: int) -> str:
        """Vertex label in DIMACS numbering, with ``u`` for the universal vertex."""
        return "u" if v == self.universal_vertex else str(v + 1)

    def _ordered(self) -> list[TraceRow]:
        # u first, as in a hand-worked table
        return sorted(self.rows, key=lambda r: (r.y != self.universal_vertex, r.y))

    def to_text(self) -> str:
        lines = ["y | A(y,u) | |N(z) ∩ A| | c(y:u) | c*(y:u)"]
        for row in self._ordered():
            a = ",".join(self.label(z) for z in self._label_order(row.a))
            counts = " ".join(
                f"{self.label(z)}:{k}"
                for z, k in sorted(zip(row.a, row.counts), key=lambda t: self._key(t[0]))
            )
            lines.append(f"{self.label(row.y)} | {{{a}}} | {counts} | {row.c} | {row.c_star}")
        lines.append(f"c*(G∨u)={self.c_star_join}  ω(G)≤{self.bound_primary}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        records = []
        for row in self._ordered():
            records.append({
                "y": self.label(row.y),
                "A": [self.label(z) for z in self._label_order(row.a)],
                "counts": {self.label(z): k for z, k in zip(row.a, row.counts)},
                "c": row.c,
                "c_star": row.c_star,
            })
        return {
            "vertices": records,
            "footer": {"c_star_join": self.c_star_join, "bound_primary": self.bound_primary},
        }

    def _key(self, v: int) -> tuple[bool, int]:
        return (v != self.universal_vertex, v)

    def _label_order(self, vs: Iterable[int]) -> list[int]:
        return sorted(vs, key=self._key)


def accn_trace(g: Graph) -> AccnTrace:
    result = accn(g)
    inst = result.table.instance
    adj = inst.graph.adjacency
    rows = []
    for y in range(inst.graph.n):
        a = np.flatnonzero(adj[y]).tolist() + [y]
        a.sort()
        counts = adj[np.ix_(a, a)].sum(axis=1).tolist()
        rows.append(TraceRow(
            y=y,
            a=tuple(a),
            counts=tuple(int(k) for k in counts),
            c=int(result.table.ceiling[y]),
            c_star=int(result.table.revised[y]),
        ))
    return AccnTrace(tuple(rows), inst.universal_vertex, result.c_star_join)
