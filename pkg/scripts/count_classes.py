"""Histogram of subset labels over zero-inflated random tuples.

    python scripts/count_classes.py --samples 100000 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from tleib.classify import all_labels, subset
from tleib.families import TLeib5Params, TLeib6Params
from tleib.scalar import Scalar
from tleib.transform import random_gaussian_rational


def draw(rng, dim, zero_prob):
    cls = TLeib5Params if dim == 5 else TLeib6Params
    n = 4 if dim == 5 else 6
    return cls(*(Scalar(0) if rng.random() < zero_prob else random_gaussian_rational(rng) for _ in range(n)))


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--zero-prob", type=float, default=0.5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for dim in (5, 6):
        start = time.perf_counter()
        counts = Counter(subset(draw(rng, dim, args.zero_prob)) for _ in range(args.samples))
        elapsed = time.perf_counter() - start
        missing = set(all_labels(dim)) - set(counts)
        print(f"dim {dim}: {len(counts)} labels in {elapsed:.1f} s" + (f", missing {sorted(map(str, missing))}" if missing else ""))
        for label in sorted(counts):
            print(f"  {label!s:6} {counts[label]:7d}")


if __name__ == "__main__":
    main()
