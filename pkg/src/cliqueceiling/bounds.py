"""Closed-form clique bounds, split-graph recognition and an exact clique oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .ceilings import accn
from .graph import Graph, join_universal

ORACLE_MAX_VERTICES = 40


class GuardError(ValueError):
    """The exact oracle was asked for a graph above its size guard."""


def ub1(n: int, m: int) -> float:
    """``1 + sqrt(2m)``."""
    _check_nm(n, m)
    return 1.0 + math.sqrt(2 * m)


def ub2(n: int, m: int) -> float:
    """``1 + sqrt(2m(n-1)/n)``."""
    _check_nm(n, m)
    return 1.0 + math.sqrt(2 * m * (n - 1) / n)


def ub3(n: int, m: int) -> float:
    """``1 + sqrt(2m - n + 1)``."""
    _check_nm(n, m)
    radicand = 2 * m - n + 1
    if radicand < 0:
        raise ValueError(f"ub3 undefined: 2m - n + 1 = {radicand} < 0 (n={n}, m={m})")
    return 1.0 + math.sqrt(radicand)


def _check_nm(n: int, m: int) -> None:
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")


@dataclass(frozen=True)
class SplitCheck:
    is_split: bool
    r: int
    lhs: int
    rhs: int


def hammer_simeone(g: Graph) -> SplitCheck:
    """Split-graph test on the degree sequence.

    With ``d_1 >= ... >= d_n`` and ``r = max{i : d_i >= i - 1}``, the graph is
    split iff ``sum(d_1..d_r) == r(r-1) + sum(d_{r+1}..d_n)``; then ``ω = r``.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    d = np.sort(g.degrees)[::-1]
    idx = np.arange(1, g.n + 1)
    r = int(idx[d >= idx - 1].max())
    lhs = int(d[:r].sum())
    rhs = r * (r - 1) + int(d[r:].sum())
    return SplitCheck(lhs == rhs, r, lhs, rhs)


def brute_force_omega(g: Graph) -> int:
    """Exact clique number by exhaustive branch and bound over bitsets."""
    if g.n == 0:
        raise ValueError("clique number needs at least one vertex")
    if g.n > ORACLE_MAX_VERTICES:
        raise GuardError(
            f"exact oracle limited to {ORACLE_MAX_VERTICES} vertices, graph has {g.n}; "
            "use the ACCN bound instead"
        )
    nbr = [sum(1 << j for j in np.flatnonzero(row).tolist()) for row in g.adjacency]
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & nbr[v])
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


@dataclass(frozen=True)
class BoundReport:
    """ACCN bound next to the closed-form bounds; ``n``/``m`` are the join's."""

    n: int
    m: int
    accn_bound: int
    ub1: float
    ub2: float
    ub3: float
    exact_omega_join: Optional[int] = None
    split: Optional[SplitCheck] = None

    @property
    def bound_primary(self) -> int:
        return self.accn_bound - 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "accn_bound": self.accn_bound,
            "ub1": self.ub1,
            "ub2": self.ub2,
            "ub3": self.ub3,
            "exact_omega_join": self.exact_omega_join,
            "split.is_split": None if self.split is None else self.split.is_split,
            "split.r": None if self.split is None else self.split.r,
        }

    def to_text(self) -> str:
        out = []
        for key, value in self.to_dict().items():
            if isinstance(value, float):
                value = f"{value:.2f}"
            elif value is None:
                value = "-"
            elif isinstance(value, bool):
                value = str(value).lower()
            out.append(f"{key}={value}")
        return "\n".join(out) + "\n"


def bound_report(g: Graph, with_oracle: bool = False) -> BoundReport:
    """Assemble the comparison report; the oracle is skipped above its guard."""
    join = join_universal(g).graph
    exact = None
    if with_oracle and join.n <= ORACLE_MAX_VERTICES:
        exact = brute_force_omega(join)
    return BoundReport(
        n=join.n,
        m=join.m,
        accn_bound=accn(g).bound_join,
        ub1=ub1(join.n, join.m),
        ub2=ub2(join.n, join.m),
        ub3=ub3(join.n, join.m),
        exact_omega_join=exact,
        split=hammer_simeone(g) if g.n else None,
    )
