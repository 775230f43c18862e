# src/services/reduction_service/decompose.py
# coding: utf-8
"""
Разложение редуцированного представления: аффинный ранг (число свободных
переменных) и остаточные факторы — компоненты связности графа, в котором
переменные соединены, если встречаются в одной образующей.

Каждый фактор — идеал в компактном кольце своих переменных (порядок
переменных наследуется от исходного кольца).
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing, occurring_variables, rename_into
from src.services.reduction_service.heuristic import ReducedPresentation

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class Decomposition:
    affine_rank: int
    factors: Tuple[Ideal, ...]

    @property
    def supports(self) -> List[List[str]]:
        return [list(f.ring.variables) for f in self.factors]

    def to_json(self) -> Dict[str, Any]:
        return {
            "affine_rank": self.affine_rank,
            "factors": [f.generator_strings() for f in self.factors],
            "factor_variables": self.supports,
        }


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # корень — переменная с меньшим номером
            lo, hi = min(ra, rb), max(ra, rb)
            self.parent[hi] = lo


def decompose(R: ReducedPresentation) -> Decomposition:
    """Аффинный ранг и остаточные факторы с попарно непересекающимися носителями."""
    ring = R.ring
    if any(not any(m) for g in R.residual for m in g.keys() if len(g) == 1):
        # единичный идеал: пустая схема
        empty = PolyRing(ring.field, (), ring.order)
        return Decomposition(affine_rank=len(R.free), factors=(Ideal(empty, (empty.one,)),))
    variables = occurring_variables(R.residual)
    uf = _UnionFind(variables)
    supports = []
    for g in R.residual:
        support = occurring_variables([g])
        supports.append(support)
        for v in support[1:]:
            uf.union(support[0], v)

    members: Dict[int, List[int]] = {}
    for v in variables:
        members.setdefault(uf.find(v), []).append(v)

    factors: List[Ideal] = []
    for root in sorted(members):
        names = tuple(ring.variables[i] for i in sorted(members[root]))
        factor_ring = PolyRing(ring.field, names, ring.order)
        gens = tuple(
            rename_into(g, factor_ring)
            for g, support in zip(R.residual, supports)
            if uf.find(support[0]) == root
        )
        factors.append(Ideal(factor_ring, gens))
    LOG.debug("Разложение: ранг %d, факторы %s", len(R.free), [list(f.ring.variables) for f in factors])
    return Decomposition(affine_rank=len(R.free), factors=tuple(factors))


def is_affine_space(R: ReducedPresentation) -> Optional[int]:
    """Ранг аффинного пространства, если остаток пуст."""
    return None if R.residual else len(R.free)
