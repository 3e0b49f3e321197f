#!/usr/bin/env python3
"""Regenerate the b-file fixtures used by the OEIS cross-check tests.

A054514 terms are transcribed literally. A054515 terms come from a plane-tree
recurrence (internal nodes of degree 2 or at least 4). A348479 terms come from
a brute-force interval-set census over S_n written independently of the C++
library. Drop official b-files into tests/fixtures/ to replace them.
"""
import argparse
import itertools
import pathlib
from functools import lru_cache

A054514_TERMS = [1, 1, 1, 5, 10, 16, 45, 109, 222, 540]


def interval_set(p):
    n = len(p)
    out = set()
    for i in range(n):
        for j in range(i, n):
            window = set(p[i:j + 1])
            lo, hi = min(window), max(window)
            if window == set(range(lo, hi + 1)):
                out.add((lo, hi))
    return frozenset(out)


def count_interval_posets(n):
    return len({interval_set(p) for p in itertools.permutations(range(1, n + 1))})


@lru_cache(maxsize=None)
def plane_trees(leaves):
    if leaves == 1:
        return 1
    return sum(forests(k, leaves) for k in range(2, leaves + 1) if k != 3)


@lru_cache(maxsize=None)
def forests(k, leaves):
    if k == 0:
        return 1 if leaves == 0 else 0
    return sum(plane_trees(first) * forests(k - 1, leaves - first)
               for first in range(1, leaves - k + 2))


def write(path, header, pairs):
    with open(path, "w") as f:
        for line in header:
            f.write(f"# {line}\n")
        for k, v in pairs:
            f.write(f"{k} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    ap.add_argument("--max-all", type=int, default=8)
    ap.add_argument("--max-tree", type=int, default=12)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    write(out / "b054514.txt",
          ["A054514: non-crossing dissections of the convex (k+4)-gon with no triangles or quadrilaterals",
           "terms 1..10 transcribed literally"],
          list(enumerate(A054514_TERMS, start=1)))
    # index k is the (k+2)-gon, i.e. k leaves + 1
    write(out / "b054515.txt",
          ["A054515: non-crossing dissections of the convex (k+2)-gon with no quadrilaterals",
           "computed by gen_fixtures.py (plane-tree recurrence)"],
          [(leaves - 1, plane_trees(leaves)) for leaves in range(1, args.max_tree + 1)])
    write(out / "b348479.txt",
          ["A348479: interval posets with k minimal elements",
           "computed by gen_fixtures.py (brute force over S_k)"],
          [(n, count_interval_posets(n)) for n in range(1, args.max_all + 1)])


if __name__ == "__main__":
    main()
