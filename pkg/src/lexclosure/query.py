"""One entry point for queries under every closure.

Each closure has a semantic route (``model``) and a syntactic one
(``bases``); ``both`` runs the two and insists they agree.  For rational
closure the syntactic route is the rank comparison.
"""

from __future__ import annotations

from .formula import And, Formula, Not, parse_formula
from .harness import maximal_consistent_subsets, poole_entails, poole_entails_model
from .kb import KnowledgeBase
from .lex import METHODS, InvariantError, QueryResult, lex_entails, query_text
from .models import minimal_worlds
from .ranking import NO_RANK, compute_rank_partition, rank_label, rank_of_formula
from .rational import coarse_key, rational_entails, rational_entails_ll_model

CLOSURES = ("lex", "rational", "variant", "poole")


class QuerySyntaxError(ValueError):
    pass


def parse_query(text: str) -> tuple[Formula, Formula]:
    """Split ``"a |~ b"`` and parse both sides."""
    if text.count("|~") != 1:
        raise QuerySyntaxError(f"expected exactly one '|~' in query {text!r}")
    left, right = text.split("|~")
    return parse_formula(left), parse_formula(right)


def _agree(sub: dict[str, bool], a: Formula, b: Formula) -> bool:
    if len(set(sub.values())) > 1:
        raise InvariantError(f"routes disagree on {query_text(a, b)}: {sub}")
    return next(iter(sub.values()))


def answer(kb: KnowledgeBase, a: Formula, b: Formula, closure: str = "lex", method: str = "both") -> QueryResult:
    if closure not in CLOSURES:
        raise ValueError(f"unknown closure {closure!r}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    part = compute_rank_partition(kb)
    ra = rank_of_formula(a, part)

    if closure == "lex":
        return lex_entails(kb, a, b, method)

    if closure == "variant":
        if ra == NO_RANK:
            return QueryResult(
                query_text(a, b), "variant", True, ra, method,
                {"minimal_worlds": None, "bases": None, "tuple": None,
                 "note": "antecedent has no rank"},
            )
        res = lex_entails(kb, a, b, method)
        res.closure = "variant"
        return res

    explanation: dict = {"minimal_worlds": None, "bases": None, "tuple": None}
    sub: dict[str, bool] = {}
    if closure == "rational":
        explanation["rank_of_counterexample"] = rank_label(rank_of_formula(And(a, Not(b)), part))
        if method in ("bases", "both"):
            sub["rank"] = rational_entails(kb, a, b)
        if method in ("model", "both") and ra != NO_RANK:
            sub["model"] = rational_entails_ll_model(kb, a, b)
            explanation["minimal_worlds"] = minimal_worlds(kb, a, (b,), coarse_key).as_dicts()
        elif method == "model":
            # raises: the ranked-model route needs a finite rank
            rational_entails_ll_model(kb, a, b)
    else:
        if method in ("bases", "both"):
            sub["bases"] = poole_entails(kb, a, b)
            explanation["bases"] = [
                sorted(kb.index(d) for d in F) for F in maximal_consistent_subsets(kb, a)
            ]
        if method in ("model", "both"):
            sub["model"] = poole_entails_model(kb, a, b)
    return QueryResult(query_text(a, b), closure, _agree(sub, a, b), ra, method, explanation, sub)
