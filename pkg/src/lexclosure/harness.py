"""Comparison semantics, random knowledge bases and the property checker."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .formula import (
    FALSE,
    TRUE,
    And,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    compile_formula,
    to_str,
    variables_of,
)
from .kb import Default, KnowledgeBase
from .lex import BASES_MAX_DEFAULTS, lex_entails_model
from .models import world_table
from .sat import CapExceededError, entails, is_satisfiable

Relation = Callable[[KnowledgeBase, Formula, Formula], bool]

VAR_NAMES = "pqrstuvw"
MAX_RANDOM_VARS = len(VAR_NAMES)
MAX_RANDOM_DEFAULTS = 6


# --------------------------------------------------------------------------
# Poole systems: inclusion-maximal consistent subsets, ranks ignored


def maximal_consistent_subsets(kb: KnowledgeBase, a: Formula) -> list[frozenset[Default]]:
    if len(kb) > BASES_MAX_DEFAULTS:
        raise CapExceededError("bases search default count", BASES_MAX_DEFAULTS, len(kb))
    if not is_satisfiable([a]):
        return []
    ds = kb.defaults
    found: list[frozenset[Default]] = []

    def extend(i: int, chosen: list[Default]) -> None:
        if i == len(ds):
            base = [a, *(d.material for d in chosen)]
            rest = [d for d in ds if d not in chosen]
            if not any(is_satisfiable([*base, d.material]) for d in rest):
                found.append(frozenset(chosen))
            return
        if is_satisfiable([a, *(d.material for d in chosen), ds[i].material]):
            extend(i + 1, [*chosen, ds[i]])
        extend(i + 1, chosen)

    extend(0, [])
    return found


def poole_entails(kb: KnowledgeBase, a: Formula, b: Formula) -> bool:
    return all(
        entails([a, *(d.material for d in F)], b) for F in maximal_consistent_subsets(kb, a)
    )


def poole_entails_model(kb: KnowledgeBase, a: Formula, b: Formula) -> bool:
    """Same relation, read off the worlds: keep the ``a``-worlds whose set of
    satisfied defaults is inclusion-maximal and check ``b`` on them."""
    kb_names, table = world_table(kb)
    extra = sorted(variables_of([a, b]) - set(kb_names))
    names = kb_names + tuple(extra)
    check_a, check_b = compile_formula(a, names), compile_formula(b, names)
    everything = frozenset(kb.defaults)
    a_worlds = [
        (w + ext, everything - violated)
        for w, violated in table
        for ext in itertools.product((False, True), repeat=len(extra))
        if check_a(w + ext)
    ]
    satisfied_sets = {s for _, s in a_worlds}
    maximal = {s for s in satisfied_sets if not any(s < t for t in satisfied_sets)}
    return all(check_b(w) for w, s in a_worlds if s in maximal)


# --------------------------------------------------------------------------
# Random knowledge bases


def random_formula(rng: random.Random, names: Sequence[str], depth: int) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        return Var(rng.choice(names))
    op = rng.choice((Not, And, Or, Implies, Iff, And, Or))
    if op is Not:
        return Not(random_formula(rng, names, depth - 1))
    return op(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def random_kb(seed: int, n_defaults: int, n_vars: int, max_depth: int) -> KnowledgeBase:
    """Deterministic random KB over the first ``n_vars`` of ``pqrstuvw``.

    About a quarter of the antecedents are ``true``; unsatisfiable
    antecedents are rejected nine times out of ten.
    """
    if not 1 <= n_vars <= MAX_RANDOM_VARS:
        raise ValueError(f"n_vars must be in 1..{MAX_RANDOM_VARS}, got {n_vars}")
    if not 0 <= n_defaults <= MAX_RANDOM_DEFAULTS:
        raise ValueError(f"n_defaults must be in 0..{MAX_RANDOM_DEFAULTS}, got {n_defaults}")
    if max_depth < 0:
        raise ValueError(f"max_depth must be non-negative, got {max_depth}")
    rng = random.Random(seed)
    names = VAR_NAMES[:n_vars]
    defaults: list[Default] = []
    while len(defaults) < n_defaults:
        if rng.random() < 0.25:
            ante: Formula = TRUE
        else:
            ante = random_formula(rng, names, max_depth)
            if not is_satisfiable([ante]) and rng.random() < 0.9:
                continue
        d = Default(ante, random_formula(rng, names, max_depth))
        if d not in defaults:
            defaults.append(d)
    return KnowledgeBase(tuple(defaults))


def random_corpus(n_kbs: int, seed: int = 0) -> list[KnowledgeBase]:
    """KBs with 1..5 defaults over 1..5 variables, depth at most 2."""
    rng = random.Random(seed)
    return [
        random_kb(rng.randrange(2**32), rng.randint(1, 5), rng.randint(1, 5), 2)
        for _ in range(n_kbs)
    ]


def query_pool(kb: KnowledgeBase, seed: int, n_pairs: int = 24) -> list[tuple[Formula, Formula]]:
    """Antecedent/consequent pairs relevant to ``kb``.

    Antecedents mix ``true``, KB antecedents, literals, random formulas and an
    occasional contradiction; consequents mix literals, KB consequents,
    ``false`` and random formulas.
    """
    rng = random.Random(seed)
    names = sorted(kb.variables) or ["p"]
    lits = [Var(v) for v in names] + [Not(Var(v)) for v in names]
    antes = [TRUE, *(d.antecedent for d in kb), *lits]
    antes += [random_formula(rng, names, 2) for _ in range(4)]
    antes.append(And(Var(names[0]), Not(Var(names[0]))))
    conses = [FALSE, *(d.consequent for d in kb), *lits]
    conses += [random_formula(rng, names, 2) for _ in range(4)]
    pairs = []
    for _ in range(n_pairs):
        a = rng.choice(antes)
        if rng.random() < 0.3:
            a = And(a, rng.choice(lits))
        pairs.append((a, rng.choice(conses)))
    return pairs


# --------------------------------------------------------------------------
# Property checking


def subformulas(f: Formula) -> list[Formula]:
    out = [f]
    if isinstance(f, Not):
        out += subformulas(f.child)
    elif isinstance(f, (And, Or, Implies, Iff)):
        out += subformulas(f.left) + subformulas(f.right)
    return out


class FormulaPool:
    """KB subformulas and their negations, closed under ``&``/``|`` to depth 2.

    The closure is sampled lazily rather than materialised.  Formulas passed
    as ``extra`` join the base and are drawn at the leaves with probability
    ``focus``.
    """

    def __init__(self, kb: KnowledgeBase, extra: Iterable[Formula] = (), focus: float = 0.3):
        self.extra = list(extra)
        self.focus = focus if self.extra else 0.0
        seeds: list[Formula] = []
        for f in [*(g for d in kb for g in (d.antecedent, d.consequent)), *self.extra]:
            for g in subformulas(f):
                if g not in seeds:
                    seeds.append(g)
        if not seeds:
            seeds = [TRUE]
        base = list(seeds)
        for g in seeds:
            neg = g.child if isinstance(g, Not) else Not(g)
            if neg not in base:
                base.append(neg)
        self.base = base

    def leaf(self, rng: random.Random) -> Formula:
        if self.focus and rng.random() < self.focus:
            return rng.choice(self.extra)
        return rng.choice(self.base)

    def sample(self, rng: random.Random, depth: int = 2) -> Formula:
        if depth == 0 or rng.random() < 0.4:
            return self.leaf(rng)
        op = And if rng.random() < 0.5 else Or
        return op(self.sample(rng, depth - 1), self.sample(rng, depth - 1))


RULES = ("reflexivity", "lle", "rw", "and", "or", "cm", "rm")


@dataclass
class PropertyReport:
    kb: KnowledgeBase
    n_samples: int
    seed: int
    relation: str
    checked: dict[str, int] = field(default_factory=lambda: dict.fromkeys(RULES, 0))
    violations: dict[str, list[dict]] = field(default_factory=lambda: {r: [] for r in RULES})

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    @property
    def status(self) -> str:
        return "ok" if self.ok else "violations"

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "status": self.status,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "checked": self.checked,
            "violations": self.violations,
        }

    def to_text(self) -> str:
        lines = [f"relation {self.relation}: {self.n_samples} samples, seed {self.seed}"]
        for rule in RULES:
            v = self.violations[rule]
            lines.append(
                f"  {rule:<12} {self.checked[rule]:>5} applicable  "
                + ("ok" if not v else f"{len(v)} VIOLATION(S)")
            )
            for inst in v[:3]:
                lines.append("      " + json.dumps(inst))
        lines.append(f"status: {self.status}")
        return "\n".join(lines)


def check_properties(
    kb: KnowledgeBase,
    n_samples: int = 500,
    seed: int = 0,
    relation: Relation | None = None,
    extra_formulas: Iterable[Formula] = (),
    name: str | None = None,
) -> PropertyReport:
    """Check KLM rules and rational monotonicity on sampled triples.

    ``relation`` defaults to lexicographic entailment.  Each sample draws
    ``a, b, c`` from the pool and tests every rule whose premises hold.
    Rational monotonicity is tried with the sampled ``c`` and with every
    base formula in its place.
    """
    if relation is None:
        relation, name = lex_entails_model, name or "lex"
    report = PropertyReport(kb, n_samples, seed, name or getattr(relation, "__name__", "relation"))
    pool = FormulaPool(kb, extra_formulas)
    rng = random.Random(seed)
    memo: dict[tuple[Formula, Formula], bool] = {}

    def rel(x: Formula, y: Formula) -> bool:
        if (x, y) not in memo:
            memo[(x, y)] = relation(kb, x, y)
        return memo[(x, y)]

    def fail(rule: str, **fs: Formula) -> None:
        report.violations[rule].append({k: to_str(v) for k, v in fs.items()})

    def check(rule: str, ok: bool, **fs: Formula) -> None:
        report.checked[rule] += 1
        if not ok:
            fail(rule, **fs)

    for _ in range(n_samples):
        a, b, c = pool.sample(rng), pool.sample(rng), pool.sample(rng)
        check("reflexivity", rel(a, a), a=a)
        ab, ac = rel(a, b), rel(a, c)
        if ab:
            a_equiv = Or(And(a, c), And(a, Not(c)))
            check("lle", rel(a_equiv, b), a=a, equivalent=a_equiv, b=b)
            check("rw", rel(a, Or(b, c)), a=a, b=b, weaker=Or(b, c))
        if ab and ac:
            check("and", rel(a, And(b, c)), a=a, b=b, c=c)
            check("cm", rel(And(a, b), c), a=a, b=b, c=c)
        if ac and rel(b, c):
            check("or", rel(Or(a, b), c), a=a, b=b, c=c)
        if ab:
            for c2 in [c, *pool.base]:
                if not rel(a, Not(c2)):
                    check("rm", rel(And(a, c2), b), a=a, b=b, c=c2)
    return report
