"""Rank partition of a default set and ranks of arbitrary formulas.

``E_0`` is the whole set.  A formula that is consistent with the material
counterparts of ``E_i`` but not of any earlier ``E_j`` has rank ``i``.
``E_{i+1}`` keeps the defaults of ``E_i`` whose antecedent is inconsistent
with ``E_i``.  The chain stops at its first fixpoint, which is the set of
defaults without rank.

Ranks are ints; :data:`NO_RANK` (``math.inf``) compares above all of them.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Union

from .formula import Formula
from .kb import Default, KnowledgeBase
from .sat import is_satisfiable

NO_RANK = math.inf
Rank = Union[int, float]


def is_finite(rank: Rank) -> bool:
    return rank != NO_RANK


def rank_label(rank: Rank) -> int | str:
    """JSON-friendly rank: the int itself, or ``"none"``."""
    return int(rank) if is_finite(rank) else "none"


@dataclass(frozen=True)
class RankPartition:
    kb: KnowledgeBase
    blocks: tuple[frozenset[Default], ...]  # D_0 .. D_{k-1}
    infinite: frozenset[Default]  # D_inf
    chain: tuple[frozenset[Default], ...]  # E_0 .. E_k, E_k == D_inf

    @property
    def order(self) -> int:
        return len(self.blocks)

    def rank_of_default(self, d: Default) -> Rank:
        for i, block in enumerate(self.blocks):
            if d in block:
                return i
        if d in self.infinite:
            return NO_RANK
        raise KeyError(f"default ({d}) is not in the knowledge base")

    def levels(self) -> list[frozenset[Default]]:
        """Blocks from highest precedence down: D_inf, D_{k-1}, ..., D_0."""
        return [self.infinite, *reversed(self.blocks)]

    def to_json(self) -> dict:
        idx = self.kb.index
        return {
            "order": self.order,
            "blocks": [sorted(idx(d) for d in b) for b in self.blocks],
            "d_infinity": sorted(idx(d) for d in self.infinite),
            "chain": [sorted(idx(d) for d in e) for e in self.chain],
            "defaults": [str(d) for d in self.kb.defaults],
        }


def _materials(ds) -> list[Formula]:
    return [d.material for d in ds]


@functools.lru_cache(maxsize=256)
def compute_rank_partition(kb: KnowledgeBase) -> RankPartition:
    current = frozenset(kb.defaults)
    chain = [current]
    blocks = []
    while True:
        mats = _materials(current)
        nxt = frozenset(d for d in current if not is_satisfiable([d.antecedent, *mats]))
        if nxt == current:
            break
        blocks.append(current - nxt)
        chain.append(nxt)
        current = nxt
    return RankPartition(kb=kb, blocks=tuple(blocks), infinite=current, chain=tuple(chain))


def rank_of_formula(a: Formula, part: RankPartition) -> Rank:
    for i, e in enumerate(part.chain):
        if is_satisfiable([a, *_materials(e)]):
            return i
    return NO_RANK
