import itertools
import random

import pytest

from lexclosure.formula import TRUE, Var, parse_formula
from lexclosure.harness import random_corpus, random_formula, random_kb
from lexclosure.kb import Default, KnowledgeBase
from lexclosure.ranking import NO_RANK, compute_rank_partition, rank_label, rank_of_formula
from lexclosure.sat import entails, is_satisfiable

from golden import F, KB

import oracles


def D(a, c):
    return Default(F(a) if a else TRUE, F(c))


def test_penguins_partition(penguins):
    part = compute_rank_partition(penguins)
    assert part.blocks == (frozenset({D("p", "q")}), frozenset({D("r", "p"), D("r", "!q")}))
    assert part.infinite == frozenset()
    assert part.order == 2


def test_exceptions_partition():
    part = compute_rank_partition(KB("exceptions"))
    assert part.blocks == (frozenset({D("", "p"), D("", "q")}), frozenset({D("!p", "!q")}))
    assert part.order == 2


def test_self_defeating_partition():
    kb = KB("self_defeating")
    part = compute_rank_partition(kb)
    assert part.order == 0
    assert part.infinite == frozenset(kb.defaults)
    assert part.levels() == [frozenset(kb.defaults)]


def test_empty_kb():
    part = compute_rank_partition(KnowledgeBase())
    assert part.order == 0 and part.infinite == frozenset() and part.blocks == ()
    assert rank_of_formula(F("p"), part) == 0


@pytest.mark.parametrize(
    "kb, a, expected",
    [("penguins", "true", 0), ("penguins", "r", 1), ("penguins", "r & q", 2),
     ("exceptions_again", "!p & q", 2), ("penguins", "p & !p", NO_RANK)],
)
def test_rank_of_formula(kb, a, expected):
    assert rank_of_formula(F(a), compute_rank_partition(KB(kb))) == expected


def test_rank_label():
    assert rank_label(2) == 2 and rank_label(NO_RANK) == "none"


def test_partition_json(penguins):
    js = compute_rank_partition(penguins).to_json()
    assert js["blocks"] == [[0], [1, 2]] and js["order"] == 2 and js["d_infinity"] == []


# --------------------------------------------------------------------------
# Properties over random KBs

CORPUS = random_corpus(80, seed=7)


@pytest.mark.parametrize("i", range(len(CORPUS)))
def test_partition_matches_oracle(i):
    kb = CORPUS[i]
    part = compute_rank_partition(kb)
    ranks, chain = oracles.partition(kb)
    assert [frozenset(e) for e in chain] == list(part.chain)
    for d in kb:
        assert part.rank_of_default(d) == ranks[d]
        # self-consistency: a default's rank is its antecedent's rank
        assert rank_of_formula(d.antecedent, part) == ranks[d]
    # disjoint cover and minimal order
    blocks = [*part.blocks, part.infinite]
    assert sum(len(b) for b in blocks) == len(kb)
    assert frozenset().union(*blocks) == frozenset(kb.defaults)
    assert all(part.blocks)
    for e, f in zip(part.chain, part.chain[1:]):
        assert f <= e


@pytest.mark.parametrize("i", range(0, len(CORPUS), 4))
def test_specificity_never_lowers_rank(i):
    kb = CORPUS[i]
    part = compute_rank_partition(kb)
    rng = random.Random(i)
    names = sorted(kb.variables)
    pool = [random_formula(rng, names, 2) for _ in range(12)]
    for a, a2 in itertools.product(pool, repeat=2):
        if entails([a], a2):
            assert rank_of_formula(a, part) >= rank_of_formula(a2, part)
    for a in pool:
        assert rank_of_formula(a, part) == oracles.rank(kb, a)


@pytest.mark.parametrize("seed", range(15))
def test_fresh_variables_have_rank_zero(seed):
    kb = random_kb(seed, 5, 3, 2)
    part = compute_rank_partition(kb)
    fresh = random_formula(random.Random(seed), ["x", "y"], 2)
    if is_satisfiable([fresh]):
        if is_satisfiable([d.material for d in kb]):
            assert rank_of_formula(fresh, part) == 0
        # otherwise a fresh formula sits wherever the chain first becomes consistent
        assert rank_of_formula(fresh, part) == oracles.rank(kb, fresh)


def test_fresh_formula_has_no_rank_when_materials_clash():
    part = compute_rank_partition(KnowledgeBase.of([("", "p"), ("", "!p")]))
    assert part.order == 0 and len(part.infinite) == 2
    assert rank_of_formula(Var("x"), part) == NO_RANK
