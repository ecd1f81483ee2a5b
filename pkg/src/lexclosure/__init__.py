"""Lexicographic and rational closure of propositional normal defaults."""

from .formula import Formula, evaluate, parse_formula, to_str, variables
from .kb import Default, KnowledgeBase, load_kb, material_counterpart, parse_kb, violated_defaults
from .lex import (
    QueryResult,
    compare_seriousness,
    compute_bases,
    lex_entails,
    lex_entails_bases,
    lex_entails_model,
    seriousness,
    variant_entails,
    world_levels,
)
from .ranking import NO_RANK, compute_rank_partition, rank_of_formula
from .rational import rational_entails, rational_entails_ll_model
from .sat import entails, enumerate_worlds, is_satisfiable

__all__ = [
    "Default",
    "Formula",
    "KnowledgeBase",
    "NO_RANK",
    "QueryResult",
    "compare_seriousness",
    "compute_bases",
    "compute_rank_partition",
    "entails",
    "enumerate_worlds",
    "evaluate",
    "is_satisfiable",
    "lex_entails",
    "lex_entails_bases",
    "lex_entails_model",
    "load_kb",
    "material_counterpart",
    "parse_formula",
    "parse_kb",
    "rank_of_formula",
    "rational_entails",
    "rational_entails_ll_model",
    "seriousness",
    "to_str",
    "variables",
    "variant_entails",
    "violated_defaults",
    "world_levels",
]
