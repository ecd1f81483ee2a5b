"""Lexicographic closure of a set of normal defaults.

Violation sets are compared by their seriousness tuple
``<n_0, n_1, ..., n_k>``: ``n_0`` counts rank-less defaults, ``n_i`` the
defaults of rank ``k - i``.  Tuples compare lexicographically, so a single
violation at a higher rank outweighs any number at lower ranks.

Entailment is decided two ways that must agree: by the ranked model over
all worlds, and by bases (the seriousness-maximal subsets of defaults
consistent with the antecedent).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .formula import Formula, to_str
from .kb import Default, KnowledgeBase
from .models import minimal_worlds, ordered_levels, world_table
from .ranking import NO_RANK, RankPartition, compute_rank_partition, rank_label, rank_of_formula
from .sat import CapExceededError, entails, is_satisfiable

BASES_MAX_DEFAULTS = 20
BASES_MAX_COUNT = 10_000

METHODS = ("model", "bases", "both")


class InvariantError(AssertionError):
    """Two routes that must agree did not."""


def seriousness(X: Iterable[Default], part: RankPartition) -> tuple[int, ...]:
    X = frozenset(X)
    foreign = X - frozenset(part.kb.defaults)
    if foreign:
        raise ValueError(f"default ({next(iter(foreign))}) is not in the knowledge base")
    return tuple(len(X & level) for level in part.levels())


def compare_seriousness(t1: tuple[int, ...], t2: tuple[int, ...]) -> int:
    """-1, 0 or 1 as ``t1`` is less, equally or more serious than ``t2``."""
    if len(t1) != len(t2):
        raise ValueError(f"tuple lengths differ: {len(t1)} != {len(t2)}")
    return (t1 > t2) - (t1 < t2)


def lex_key(violated: frozenset, part: RankPartition) -> tuple[int, ...]:
    return tuple(len(violated & level) for level in part.levels())


def world_levels(kb: KnowledgeBase) -> list[tuple[tuple[int, ...], list[dict[str, bool]]]]:
    """Every level of the lexicographic model, empty ones included.

    Levels run over all tuples bounded by the block sizes, least serious
    first; each carries the KB worlds on it.
    """
    part = compute_rank_partition(kb)
    names, table = world_table(kb)
    present = dict(ordered_levels(kb, lex_key))
    bounds = [range(len(level) + 1) for level in part.levels()]
    return [
        (t, [dict(zip(names, table[j][0])) for j in present.get(t, [])])
        for t in itertools.product(*bounds)
    ]


def lex_entails_model(kb: KnowledgeBase, a: Formula, b: Formula) -> bool:
    return minimal_worlds(kb, a, (b,), lex_key).satisfy(b)


@dataclass(frozen=True)
class Base:
    defaults: frozenset[Default]
    counts: tuple[int, ...]  # seriousness tuple of the base itself

    def indices(self, kb: KnowledgeBase) -> list[int]:
        return sorted(kb.index(d) for d in self.defaults)


def compute_bases(kb: KnowledgeBase, a: Formula) -> list[Base]:
    """All seriousness-maximal subsets of ``kb`` consistent with ``a``.

    Blocks are filled from the highest precedence down.  At each block the
    largest selection size that some optimal prefix can extend consistently
    is found, and every prefix/selection pair reaching it is kept.  Since
    tuples compare lexicographically this yields exactly the maximal sets.
    """
    if len(kb) > BASES_MAX_DEFAULTS:
        raise CapExceededError("bases search default count", BASES_MAX_DEFAULTS, len(kb))
    if not is_satisfiable([a]):
        return []
    part = compute_rank_partition(kb)
    frontier: list[frozenset[Default]] = [frozenset()]
    for level in part.levels():
        block = sorted(level, key=kb.index)
        extended: list[frozenset[Default]] = []
        for size in range(len(block), -1, -1):
            for chosen in frontier:
                prefix = [a, *(d.material for d in chosen)]
                for combo in itertools.combinations(block, size):
                    if is_satisfiable([*prefix, *(d.material for d in combo)]):
                        extended.append(chosen | frozenset(combo))
                        if len(extended) > BASES_MAX_COUNT:
                            raise CapExceededError("bases count", BASES_MAX_COUNT, len(extended))
            if extended:
                break
        frontier = extended
    bases = [Base(b, seriousness(b, part)) for b in frontier]
    return sorted(bases, key=lambda base: base.indices(kb))


def lex_entails_bases(kb: KnowledgeBase, a: Formula, b: Formula) -> bool:
    return all(entails([a, *(d.material for d in base.defaults)], b) for base in compute_bases(kb, a))


@dataclass
class QueryResult:
    query: str
    closure: str
    verdict: bool
    rank_of_antecedent: float | int
    method: str
    explanation: dict = field(default_factory=dict)
    sub_verdicts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "query": self.query,
            "closure": self.closure,
            "verdict": self.verdict,
            "rank_of_antecedent": rank_label(self.rank_of_antecedent),
            "method": self.method,
            "sub_verdicts": self.sub_verdicts,
            "explanation": self.explanation,
        }


def query_text(a: Formula, b: Formula) -> str:
    return f"{to_str(a)} |~ {to_str(b)}"


def lex_entails(kb: KnowledgeBase, a: Formula, b: Formula, method: str = "both") -> QueryResult:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    part = compute_rank_partition(kb)
    explanation: dict = {"minimal_worlds": None, "bases": None, "tuple": None}
    sub: dict[str, bool] = {}
    if method in ("model", "both"):
        mw = minimal_worlds(kb, a, (b,), lex_key)
        sub["model"] = mw.satisfy(b)
        explanation["minimal_worlds"] = mw.as_dicts()
        explanation["tuple"] = list(mw.level) if mw.level is not None else None
    if method in ("bases", "both"):
        bases = compute_bases(kb, a)
        sub["bases"] = all(entails([a, *(d.material for d in bs.defaults)], b) for bs in bases)
        explanation["bases"] = [bs.indices(kb) for bs in bases]
        if explanation["tuple"] is None and bases:
            # the violated-count tuple of the minimal worlds
            explanation["tuple"] = [
                len(level) - n for level, n in zip(part.levels(), bases[0].counts)
            ]
    if method == "both" and sub["model"] != sub["bases"]:
        raise InvariantError(
            f"model and bases methods disagree on {query_text(a, b)}: {sub}"
        )
    return QueryResult(
        query=query_text(a, b),
        closure="lex",
        verdict=next(iter(sub.values())),
        rank_of_antecedent=rank_of_formula(a, part),
        method=method,
        explanation=explanation,
        sub_verdicts=sub,
    )


def variant_entails(kb: KnowledgeBase, a: Formula, b: Formula, method: str = "model") -> bool:
    """Lexicographic entailment, except that rank-less antecedents entail everything."""
    if rank_of_formula(a, compute_rank_partition(kb)) == NO_RANK:
        return True
    return lex_entails(kb, a, b, method).verdict
