#!/usr/bin/env python3
"""Empirical support for the luxury-chandelier branch of the filter.

The decomposition filter only accepts an undecomposable piece (no full
star cutset, larger than a 4-vertex path) when it is a luxury
chandelier.  This sweep builds every chandelier whose in-tree has at
most a configurable number of vertices (one per in-tree isomorphism
class) and checks the two facts that branch rests on:

  * every chandelier is recognized as Burling, so the filter must never
    reject one outright;
  * every chandelier without a full star cutset is luxury.

Non-luxury chandeliers are still Burling (K_{2,3} is the smallest); the
point is that each of them decomposes further.  Exits 1 on any
violation.
"""

import argparse
import sys
import time
from dataclasses import dataclass

from burling.catalog import in_forests
from burling.graphs import Graph
from burling.recognition import recognize
from burling.structure import (
    full_star_cutsets,
    in_tree_leaves,
    is_in_tree,
    is_luxury_chandelier,
)


@dataclass(frozen=True)
class SweepConfig:
    max_tree_vertices: int = 9
    budget: int = 12


def chandeliers(cfg: SweepConfig):
    """Underlying graphs of all oriented chandeliers with a tree part of
    at most cfg.max_tree_vertices vertices."""
    for t in in_forests(cfg.max_tree_vertices):
        if not is_in_tree(t):
            continue
        leaves = in_tree_leaves(t)
        if len(leaves) < 2:
            continue
        # "p" cannot collide: in_forests labels its vertices v0, v1, ...
        yield Graph(
            sorted(t.vertices) + ["p"],
            sorted(t.arcs) + [(leaf, "p") for leaf in sorted(leaves)],
        )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-tree-vertices", type=int, default=9)
    parser.add_argument("--budget", type=int, default=12)
    args = parser.parse_args(argv)
    cfg = SweepConfig(args.max_tree_vertices, args.budget)

    start = time.perf_counter()
    total = luxury = uncut = 0
    violations = []
    for g in chandeliers(cfg):
        total += 1
        lux = is_luxury_chandelier(g) is not None
        cut = bool(full_star_cutsets(g))
        luxury += lux
        uncut += not cut
        if not recognize(g, budget=cfg.budget).is_burling:
            violations.append(("rejected chandelier", sorted(g.edges)))
        if not cut and not lux:
            violations.append(("undecomposable but not luxury", sorted(g.edges)))

    elapsed = time.perf_counter() - start
    print(f"chandeliers checked: {total} ({elapsed:.1f}s)")
    print(f"luxury: {luxury}  without full star cutset: {uncut}")
    for label, edges in violations:
        print("VIOLATION", label, edges)
    if violations:
        return 1
    print("all chandeliers recognized; every uncut chandelier is luxury")
    return 0


if __name__ == "__main__":
    sys.exit(main())
