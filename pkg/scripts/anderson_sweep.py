"""Compare MV-polytope weight multiplicities with Freudenthal over all
dominant coweights up to a height bound.

    python3 scripts/anderson_sweep.py --type A3 --max-height 6
"""

import argparse
import itertools
import time

from foldmv.characters import CharacterSystem, mv_weight_multiplicity, weyl_character
from foldmv.root_datum import parse_type, weights_of


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--type", default="A2")
    parser.add_argument("--max-height", type=int, default=8)
    args = parser.parse_args()
    root = parse_type(args.type)
    system = CharacterSystem.of_group(root)
    mismatches = 0
    for lam in itertools.product(range(args.max_height + 1), repeat=root.rank):
        if sum(lam) > args.max_height or not root.is_dominant(lam):
            continue
        start = time.perf_counter()
        freud = weyl_character(system, lam)
        bad = [mu for mu in weights_of(root, lam) if mv_weight_multiplicity(root, lam, mu) != freud[mu]]
        mismatches += len(bad)
        print(f"lambda={lam} dim={freud.dimension} mismatches={len(bad)} ({time.perf_counter() - start:.2f}s)")
    print(f"total mismatches: {mismatches}")


if __name__ == "__main__":
    main()
