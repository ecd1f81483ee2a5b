#!/usr/bin/env python3
"""Cross-check the independent decision routes over a seeded random corpus.

For every KB and query pair this compares the lexicographic model and bases
routes, the rational rank comparison and its ranked-model route, and checks
the rational-within-lex, rational-within-variant, consistency and
block-containment properties.  Prints a JSON summary; exits 1 on any
disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass

from lexclosure.formula import FALSE
from lexclosure.harness import query_pool, random_corpus
from lexclosure.lex import compute_bases, lex_entails_bases, lex_entails_model, variant_entails
from lexclosure.ranking import NO_RANK, compute_rank_partition, rank_of_formula
from lexclosure.rational import rational_entails, rational_entails_ll_model
from lexclosure.sat import is_satisfiable


@dataclass(frozen=True)
class Config:
    n_kbs: int = 200
    seed: int = 2024
    pairs_per_kb: int = 24


def run(cfg: Config) -> dict:
    counts: Counter = Counter()
    start = time.perf_counter()
    for i, kb in enumerate(random_corpus(cfg.n_kbs, cfg.seed)):
        part = compute_rank_partition(kb)
        counts["kbs"] += 1
        counts["kbs_with_rankless_defaults"] += bool(part.infinite)
        counts[f"kbs_of_order_{part.order}"] += 1
        for a, b in query_pool(kb, seed=i, n_pairs=cfg.pairs_per_kb):
            counts["queries"] += 1
            finite = rank_of_formula(a, part) != NO_RANK
            lex = lex_entails_model(kb, a, b)
            rat = rational_entails(kb, a, b)
            counts["lex_true"] += lex
            counts["rational_true"] += rat
            counts["model_vs_bases_disagree"] += lex != lex_entails_bases(kb, a, b)
            counts["consistency_failures"] += lex_entails_model(kb, a, FALSE) == is_satisfiable([a])
            counts["rational_not_in_variant"] += rat and not variant_entails(kb, a, b)
            if not finite:
                counts["rankless_antecedents"] += 1
                continue
            counts["rank_vs_ranked_model_disagree"] += rat != rational_entails_ll_model(kb, a, b)
            counts["rational_not_in_lex"] += rat and not lex
            required = part.infinite.union(*part.blocks[rank_of_formula(a, part):])
            counts["bases_missing_blocks"] += sum(
                not required <= base.defaults for base in compute_bases(kb, a)
            )
    return {"config": asdict(cfg), "seconds": round(time.perf_counter() - start, 2), "counts": dict(counts)}


FAILURE_KEYS = (
    "model_vs_bases_disagree",
    "rank_vs_ranked_model_disagree",
    "rational_not_in_lex",
    "rational_not_in_variant",
    "consistency_failures",
    "bases_missing_blocks",
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-kbs", type=int, default=Config.n_kbs)
    parser.add_argument("--seed", type=int, default=Config.seed)
    parser.add_argument("--pairs", type=int, default=Config.pairs_per_kb)
    args = parser.parse_args()
    result = run(Config(args.n_kbs, args.seed, args.pairs))
    print(json.dumps(result, indent=2, sort_keys=True))
    return 1 if any(result["counts"].get(k, 0) for k in FAILURE_KEYS) else 0


if __name__ == "__main__":
    sys.exit(main())
