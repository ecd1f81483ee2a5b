"""Ranked (modular) models over the worlds of a knowledge base.

A ranked model is given by a key on violation sets; a world's level is the
key of the set of defaults it violates.  ``a |~ b`` holds in the model iff
every key-minimal world satisfying ``a`` satisfies ``b``.  Query variables
outside the KB are enumerated too but never change a violation set.

Sets of worlds are ints used as bitsets.  World ``i`` over ``names`` gives
``names[k]`` the value of bit ``len(names) - 1 - k`` of ``i``, which is the
``itertools.product`` order: first name most significant, false first.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from .formula import (
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    UnassignedVariableError,
    Var,
    compile_formula,
    variables_of,
)
from .kb import Default, KnowledgeBase
from .ranking import RankPartition, compute_rank_partition
from .sat import ENUMERATION_CAP, CapExceededError

Key = Callable[[frozenset, RankPartition], Hashable]


def _check_cap(n: int) -> None:
    if n > ENUMERATION_CAP:
        raise CapExceededError("world enumeration variable count", ENUMERATION_CAP, n)


@functools.lru_cache(maxsize=64)
def var_masks(n: int) -> tuple[int, ...]:
    """Bitset of the worlds making each of ``n`` ordered variables true."""
    size = 1 << n
    masks = []
    for k in range(n):
        run = 1 << (n - 1 - k)
        pattern, width = ((1 << run) - 1) << run, 2 * run
        while width < size:
            pattern |= pattern << width
            width *= 2
        masks.append(pattern)
    return tuple(masks)


@functools.lru_cache(maxsize=32768)
def truth_table(f: Formula, names: tuple[str, ...]) -> int:
    """Bitset of the worlds over ``names`` that satisfy ``f``."""
    _check_cap(len(names))
    index = {v: i for i, v in enumerate(names)}
    masks = var_masks(len(names))
    full = (1 << (1 << len(names))) - 1

    def table(g: Formula) -> int:
        if isinstance(g, Var):
            if g.name not in index:
                raise UnassignedVariableError(g.name)
            return masks[index[g.name]]
        if isinstance(g, Const):
            return full if g.value else 0
        if isinstance(g, Not):
            return full ^ table(g.child)
        x, y = table(g.left), table(g.right)
        if isinstance(g, And):
            return x & y
        if isinstance(g, Or):
            return x | y
        if isinstance(g, Implies):
            return (full ^ x) | y
        if isinstance(g, Iff):
            return full ^ (x ^ y)
        raise TypeError(f"not a formula: {g!r}")

    return table(f)


@functools.lru_cache(maxsize=64)
def world_table(kb: KnowledgeBase) -> tuple[tuple[str, ...], list[tuple[tuple[bool, ...], frozenset[Default]]]]:
    """Every world over the KB variables with the set of defaults it violates."""
    names = tuple(sorted(kb.variables))
    _check_cap(len(names))
    checks = [
        (d, compile_formula(d.antecedent, names), compile_formula(d.consequent, names))
        for d in kb.defaults
    ]
    table = []
    for w in itertools.product((False, True), repeat=len(names)):
        table.append((w, frozenset(d for d, ante, cons in checks if ante(w) and not cons(w))))
    return names, table


@functools.lru_cache(maxsize=256)
def ordered_levels(kb: KnowledgeBase, key: Key) -> list[tuple[Hashable, list[int]]]:
    """Non-empty levels of the model, most normal first, as KB world indices."""
    part = compute_rank_partition(kb)
    _, table = world_table(kb)
    groups: dict = {}
    for i, (_, violated) in enumerate(table):
        groups.setdefault(key(violated, part), []).append(i)
    return sorted(groups.items(), key=lambda kv: kv[0])


@functools.lru_cache(maxsize=1024)
def level_masks(kb: KnowledgeBase, key: Key, n_extra: int) -> list[tuple[Hashable, int]]:
    """Levels as bitsets over the KB variables followed by ``n_extra`` more."""
    block = (1 << (1 << n_extra)) - 1
    return [
        (level, sum(block << (j << n_extra) for j in members))
        for level, members in ordered_levels(kb, key)
    ]


@dataclass(frozen=True)
class MinimalWorlds:
    """The most normal worlds satisfying an antecedent."""

    kb: KnowledgeBase
    names: tuple[str, ...]
    mask: int
    level: Hashable

    def satisfy(self, b: Formula) -> bool:
        return self.mask & ~truth_table(b, self.names) == 0

    def indices(self) -> list[int]:
        out, m, i = [], self.mask, 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return out

    def as_dicts(self) -> list[dict[str, bool]]:
        n = len(self.names)
        return [
            {v: bool(i >> (n - 1 - k) & 1) for k, v in enumerate(self.names)}
            for i in self.indices()
        ]

    def violated(self) -> list[frozenset[Default]]:
        _, table = world_table(self.kb)
        shift = len(self.names) - len(self.kb.variables)
        return [table[i >> shift][1] for i in self.indices()]


def minimal_worlds(
    kb: KnowledgeBase, a: Formula, others: Iterable[Formula], key: Key
) -> MinimalWorlds:
    """Key-minimal ``a``-worlds over the KB, ``a`` and ``others`` variables.

    Empty (``mask == 0``, ``level is None``) when ``a`` is unsatisfiable.
    """
    kb_names, _ = world_table(kb)
    extra = tuple(sorted(variables_of([a, *others]) - kb.variables))
    names = kb_names + extra
    a_mask = truth_table(a, names)
    for level, mask in level_masks(kb, key, len(extra)):
        if mask & a_mask:
            return MinimalWorlds(kb, names, mask & a_mask, level)
    return MinimalWorlds(kb, names, 0, None)
