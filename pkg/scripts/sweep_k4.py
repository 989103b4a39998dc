#!/usr/bin/env python3
"""Exhaustive K4-subdivision sweep: dichotomy label vs exact recognizer.

Enumerates every subdivision of K4 up to a total-vertex bound (all six
path lengths, order matters, so isomorphic instances repeat) and checks
that classify_k4_subdivision and recognize give the same answer on each.
"""

import argparse
import itertools
import sys
import time
from dataclasses import dataclass

from burling.generators import gen_k4_subdivision
from burling.recognition import BURLING, classify_k4_subdivision, recognize


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = 10
    budget: int = 12


def length_tuples(cfg: SweepConfig):
    # total vertices = 4 branch vertices + sum(l - 1) inner ones
    top = cfg.max_vertices + 2
    for lengths in itertools.product(range(1, top - 4), repeat=6):
        if sum(lengths) <= top:
            yield lengths


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=10)
    parser.add_argument("--budget", type=int, default=12)
    args = parser.parse_args(argv)
    cfg = SweepConfig(args.max_vertices, args.budget)

    start = time.perf_counter()
    total = positive = 0
    disagreements = []
    for lengths in length_tuples(cfg):
        g = gen_k4_subdivision(lengths)
        label = classify_k4_subdivision(g)
        exact = recognize(g, budget=cfg.budget).is_burling
        total += 1
        positive += label == BURLING
        if (label == BURLING) != exact:
            disagreements.append(lengths)

    elapsed = time.perf_counter() - start
    print(f"instances: {total}  burling: {positive}  ({elapsed:.1f}s)")
    for lengths in disagreements:
        print("DISAGREEMENT at lengths", lengths)
    if disagreements:
        return 1
    print("dichotomy label matches the exact recognizer on every instance")
    return 0


if __name__ == "__main__":
    sys.exit(main())
