#!/usr/bin/env python3
"""Print the levels of the lexicographic model of a KB, most normal first.

Each level is labelled by its seriousness tuple; empty levels are shown so
the listing can be compared line by line with a hand-written one.
"""

from __future__ import annotations

import argparse

from lexclosure.kb import load_kb, violated_defaults
from lexclosure.lex import world_levels
from lexclosure.ranking import compute_rank_partition, rank_label


def fmt_world(w: dict[str, bool]) -> str:
    return " ".join(v if val else "!" + v for v, val in w.items())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("kb", help="KB file")
    parser.add_argument("--violations", action="store_true", help="list the defaults each world violates")
    args = parser.parse_args()

    kb = load_kb(args.kb)
    part = compute_rank_partition(kb)
    for d in kb:
        print(f"rank {rank_label(part.rank_of_default(d))}: ({d})")
    print(f"order {part.order}")
    for i, (t, worlds) in enumerate(world_levels(kb)):
        print(f"level {i} {t}:" + ("" if worlds else " empty"))
        for w in worlds:
            extra = ""
            if args.violations and violated_defaults(w, kb):
                extra = "   violates " + ", ".join(f"({d})" for d in kb if d in violated_defaults(w, kb))
            print(f"    {fmt_world(w)}{extra}")


if __name__ == "__main__":
    main()
