"""Print twining-character tables for a range of foldings and highest weights.

    python3 scripts/twining_tables.py [--max-height 6]
"""

import argparse
import itertools

from foldmv.characters import verify_twining
from foldmv.folding import build_folding, parse_sigma
from foldmv.root_datum import parse_type

FOLDINGS = [("A2", "flip"), ("A3", "flip"), ("A4", "flip"), ("D4", "flip"), ("D4", "triality")]


def invariant_dominant(folding, max_height):
    root = folding.root
    for lam in itertools.product(range(max_height + 1), repeat=root.rank):
        if 0 < sum(lam) <= max_height and root.is_dominant(lam) and folding.is_invariant(lam):
            yield lam


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-height", type=int, default=6)
    args = parser.parse_args()
    for name, sigma in FOLDINGS:
        root = parse_type(name)
        f = build_folding(root, parse_sigma(root, sigma))
        for lam in invariant_dominant(f, args.max_height):
            report = verify_twining(f, lam)
            nonzero = sum(1 for r in report.rows if r.twining)
            print(f"{name} {sigma:8s} -> {f.folded.name}  lambda={lam}  weights={len(report.rows)}"
                  f"  nonzero={nonzero}  equal={report.equal}")


if __name__ == "__main__":
    main()
