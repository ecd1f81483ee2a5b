"""Rational closure, by rank comparison and by the coarse ranked model.

The coarse model ranks each world by the highest-precedence rank it
violates: nothing violated is most normal, then violations whose highest
rank is 0, then 1, and so on, with any violation of a rank-less default
last.  For antecedents of finite rank both routes coincide.
"""

from __future__ import annotations

from .formula import And, Formula, Not
from .kb import KnowledgeBase
from .models import minimal_worlds
from .ranking import NO_RANK, RankPartition, compute_rank_partition, rank_of_formula


class PreconditionError(ValueError):
    pass


def rational_entails(kb: KnowledgeBase, a: Formula, b: Formula) -> bool:
    part = compute_rank_partition(kb)
    ra = rank_of_formula(a, part)
    if ra == NO_RANK:
        return True
    return rank_of_formula(And(a, Not(b)), part) > ra


def coarse_key(violated: frozenset, part: RankPartition) -> int:
    """Sort key of a violation set under the coarse ordering (lower is more normal).

    -1 for an empty set, the highest violated finite rank otherwise, and
    ``order`` when some rank-less default is violated.
    """
    if violated & part.infinite:
        return part.order
    for i in range(part.order - 1, -1, -1):
        if violated & part.blocks[i]:
            return i
    return -1


def rational_entails_ll_model(kb: KnowledgeBase, a: Formula, b: Formula) -> bool:
    part = compute_rank_partition(kb)
    if rank_of_formula(a, part) == NO_RANK:
        raise PreconditionError(
            "the ranked-model route is only defined for antecedents of finite rank"
        )
    return minimal_worlds(kb, a, (b,), coarse_key).satisfy(b)
