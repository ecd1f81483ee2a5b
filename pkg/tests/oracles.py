"""Brute-force reference implementations used as test oracles.

Everything here goes through ``formula.evaluate`` and plain itertools; none of
it touches the DPLL solver, the bitset models or the greedy bases search.
"""

import itertools
import math

from lexclosure.formula import evaluate, variables_of


def worlds(names):
    names = sorted(names)
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def sat(fs):
    fs = list(fs)
    return any(all(evaluate(f, w) for f in fs) for w in worlds(variables_of(fs)))


def violates(w, d):
    return evaluate(d.antecedent, w) and not evaluate(d.consequent, w)


def partition(kb):
    """(ranks by default, chain) straight from the definition."""
    chain = [list(kb.defaults)]
    while True:
        e = chain[-1]
        mats = [d.material for d in e]
        nxt = [d for d in e if not sat([d.antecedent, *mats])]
        if nxt == e:
            break
        chain.append(nxt)
    ranks = {d: math.inf for d in chain[-1]}
    for i in range(len(chain) - 1):
        for d in chain[i]:
            if d not in chain[i + 1]:
                ranks[d] = i
    return ranks, chain


def rank(kb, a):
    _, chain = partition(kb)
    for i, e in enumerate(chain):
        if sat([a, *(d.material for d in e)]):
            return i
    return math.inf


def tuple_of(X, kb, part=None):
    ranks, chain = part or partition(kb)
    k = len(chain) - 1
    t = [sum(1 for d in X if ranks[d] == math.inf)]
    t += [sum(1 for d in X if ranks[d] == k - i) for i in range(1, k + 1)]
    return tuple(t)


def lex(kb, a, b):
    names = kb.variables | variables_of([a, b])
    a_worlds = [w for w in worlds(names) if evaluate(a, w)]
    if not a_worlds:
        return True
    part = partition(kb)
    keyed = [(tuple_of([d for d in kb.defaults if violates(w, d)], kb, part), w) for w in a_worlds]
    best = min(t for t, _ in keyed)
    return all(evaluate(b, w) for t, w in keyed if t == best)


def bases(kb, a):
    """All tuple-maximal consistent subsets, by enumerating every subset."""
    cands = [
        frozenset(S)
        for r in range(len(kb) + 1)
        for S in itertools.combinations(kb.defaults, r)
        if sat([a, *(d.material for d in S)])
    ]
    if not cands:
        return set()
    part = partition(kb)
    best = max(tuple_of(S, kb, part) for S in cands)
    return {S for S in cands if tuple_of(S, kb, part) == best}


def maxbases(kb, a):
    """Maximum-cardinality consistent subsets (the equal-rank case)."""
    cands = [
        frozenset(S)
        for r in range(len(kb) + 1)
        for S in itertools.combinations(kb.defaults, r)
        if sat([a, *(d.material for d in S)])
    ]
    if not cands:
        return set()
    top = max(len(S) for S in cands)
    return {S for S in cands if len(S) == top}


def count_model(kb, a, b):
    """Worlds levelled by how many defaults they violate."""
    names = kb.variables | variables_of([a, b])
    a_worlds = [w for w in worlds(names) if evaluate(a, w)]
    if not a_worlds:
        return True
    level = {id(w): sum(violates(w, d) for d in kb.defaults) for w in a_worlds}
    best = min(level.values())
    return all(evaluate(b, w) for w in a_worlds if level[id(w)] == best)


def inclusion_maximal(kb, a):
    cands = [
        frozenset(S)
        for r in range(len(kb) + 1)
        for S in itertools.combinations(kb.defaults, r)
        if sat([a, *(d.material for d in S)])
    ]
    return {S for S in cands if not any(S < T for T in cands)}
