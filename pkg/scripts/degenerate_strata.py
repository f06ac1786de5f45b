"""What lives on the two strata that the classifier only flags.

U6_1 with 2*b11 = b01*b23: the quantity
    J = Delta**3 * b23**2 * b12**6 / b11**8
is unchanged by every adapted map (checked exactly on random members), and
it takes every value, so this stratum holds infinitely many orbits that the
L(l1,0,1,l2,0,1) family never reaches.

U6_2 with b01 = b23*b00: A0, B1 and A0 + A1*b23 rescale b01, b12 and b23
independently, so the stratum splits into just two orbits, b12 = 0 and
b12 != 0.  The script sends random members to L(1,1,0,1,0,1) or
L(1,1,0,0,0,1) with explicit maps.
"""

import argparse
import random

from tleib.classify import _b3_clearing_b13, classify, delta
from tleib.families import TLeib6Params
from tleib.scalar import Scalar, nth_root
from tleib.transform import (
    AdaptedTransform,
    random_adapted,
    random_gaussian_rational,
    residual,
    transform_params_oracle,
)


def nonzero(rng):
    while True:
        s = random_gaussian_rational(rng)
        if s:
            return s


def j_value(p):
    return delta(p) ** 3 * p.b23**2 * p.b12**6 / p.b11**8


def u61_stratum(rng, trials):
    values = set()
    for _ in range(trials):
        b00, b12, b13 = (random_gaussian_rational(rng) for _ in range(3))
        b11, b23 = nonzero(rng), nonzero(rng)
        p = TLeib6Params(b00, 2 * b11 / b23, b11, b12, b13, b23)
        assert classify(p).degenerate
        for _ in range(3):
            q = transform_params_oracle(p, random_adapted(6, p, rng))
            assert j_value(q) == j_value(p)
        values.add(j_value(p))
    print(f"U6_1 stratum: J constant under {3 * trials} random maps, {len(values)} distinct values seen")
    # members of the normal form L(b00, 2, 1, 1, 0, 1) realize J = 64*(b00 - 1)**3
    for b00 in (Scalar(2), Scalar(3)):
        print(f"  L({b00}, 2, 1, 1, 0, 1): J = {j_value(TLeib6Params(b00, 2, 1, 1, 0, 1))}")


def u62_normal_form(p):
    """Map a degenerate U6_2 member to L(1,1,0,1,0,1) or L(1,1,0,0,0,1)."""
    b01, b12, b23 = p.b01, p.b12, p.b23
    if b12:
        A0 = nth_root(b01 * b12 / b23, 4)
        D = A0 * A0 * b23 / b12
    else:
        A0, D = Scalar(1), b01
    A1 = (D - A0) / b23
    B1 = D / b23
    B3 = _b3_clearing_b13(p, A0, A1, B1)
    return AdaptedTransform.from_generators(6, A0, A1, B1, 0, B3)


def u62_stratum(rng, trials):
    worst = 0.0
    for k in range(trials):
        b00, b23 = nonzero(rng), nonzero(rng)
        b12 = nonzero(rng) if k % 2 else Scalar(0)
        p = TLeib6Params(b00, b23 * b00, 0, b12, random_gaussian_rational(rng), b23)
        assert classify(p).degenerate
        target = TLeib6Params(1, 1, 0, 1 if b12 else 0, 0, 1)
        worst = max(worst, residual(transform_params_oracle(p, u62_normal_form(p)), target))
    print(f"U6_2 stratum: {trials} members reach L(1,1,0,1,0,1) or L(1,1,0,0,0,1), worst residual {worst:.1e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    u61_stratum(rng, args.trials)
    u62_stratum(rng, args.trials)


if __name__ == "__main__":
    main()
