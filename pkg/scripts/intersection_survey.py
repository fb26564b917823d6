#!/usr/bin/env python3
"""Do all longest directed cycles pairwise intersect?

Scans a corpus of small digraphs and records, per instance, whether every
pair of maximum-length directed cycles shares a vertex.  The chained gadget
is the known negative example (it is not vertex transitive); the open
question is whether a vertex-transitive counterexample exists at all, so
the transitive column matters.

Usage: python scripts/intersection_survey.py [--max-order 16]
"""

import argparse
import sys

from vtcycles.automorphisms import is_vertex_transitive
from vtcycles.gadgets import (cycle_digraph, directed_cycle_product,
                              four_cycle_chain, toroidal_gadget)
from vtcycles.oracles import longest_cycles_pairwise_intersect
from vtcycles.reports import write_csv


def corpus(max_order):
    for n in range(3, 9):
        yield f"C{n}", cycle_digraph(n)
    for a in range(2, 5):
        for b in range(a, max_order // a + 1):
            if a * b <= max_order:
                yield f"C{a}xC{b}", directed_cycle_product(a, b)
    for k in (1, 2, 3):
        if 4 * k <= max_order:
            yield f"chain({k})", four_cycle_chain(k)
    if 12 <= max_order:
        yield "toroidal(1)", toroidal_gadget(1)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-order", type=int, default=16)
    args = parser.parse_args()

    rows = []
    for name, D in corpus(args.max_order):
        verdict = longest_cycles_pairwise_intersect(D)
        transitive = is_vertex_transitive(D)
        rows.append({
            "instance": name,
            "n": D.n,
            "vertex_transitive": transitive,
            "longest_cycles_intersect": verdict,
        })
    sys.stdout.write(write_csv(
        rows, ("instance", "n", "vertex_transitive",
               "longest_cycles_intersect")))
    negatives = [r for r in rows
                 if r["longest_cycles_intersect"] is False
                 and r["vertex_transitive"] is True]
    sys.stdout.write(
        f"# transitive instances with disjoint longest cycles: {len(negatives)}\n")


if __name__ == "__main__":
    main()
