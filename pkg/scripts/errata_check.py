"""Re-derive the normalizations that needed correcting, with the oracle.

* U5_1: the base change A0 = b11/b12, A1 = -b01/(2*b12), B1 = b11**2/b12**3
  lands on L(I1/4, 0, 1, 1), not L(I1, 0, 1, 1).
* U5_8: A0 = 1, B1 = A0**2 leaves b12 untouched; B1 = 1/b12 reaches
  L(0,0,0,1).
* Representative families: the invariants evaluate to fixed multiples of the
  family parameters (4*l for U5_1 and U6_11, 8*l2**3 for U6_1, and so on).
"""

import random

from tleib.classify import invariants
from tleib.families import TLeib5Params, TLeib6Params
from tleib.transform import AdaptedTransform, random_gaussian_rational, transform_params_oracle


def main():
    rng = random.Random(0)
    p = TLeib5Params(*(random_gaussian_rational(rng) for _ in range(3)), random_gaussian_rational(rng) or 1)
    b00, b01, b11, b12 = p.as_tuple()
    q = transform_params_oracle(p, AdaptedTransform.from_generators(5, b11 / b12, -b01 / (2 * b12), b11**2 / b12**3))
    i1 = invariants(p)["I1"]
    print(f"U5_1 member {p}\n  I1 = {i1}\n  recipe image {q}\n  image b00 * 4 == I1: {q.b00 * 4 == i1}")

    p = TLeib5Params(0, 0, 0, 3)
    stated = transform_params_oracle(p, AdaptedTransform.from_generators(5, 1, 0, 1))
    fixed = transform_params_oracle(p, AdaptedTransform.from_generators(5, 1, 0, 1 / p.b12))
    print(f"U5_8 member {p}\n  B1 = A0**2 gives {stated}\n  B1 = 1/b12 gives {fixed}")

    l1, l2 = random_gaussian_rational(rng), random_gaussian_rational(rng)
    print(f"representative families at l1 = {l1}, l2 = {l2}:")
    rows = [
        ("U5_1", TLeib5Params(l1, 0, 1, 1), "4*l1"),
        ("U6_1", TLeib6Params(l1, 0, 1, l2, 0, 1), "l1, 8*l2^3"),
        ("U6_2", TLeib6Params(0, 1, 0, l1, 0, 1), "l1^3"),
        ("U6_7", TLeib6Params(l1, l2, 1, 1, 0, 0), "4*l1, l2^2"),
        ("U6_8", TLeib6Params(l1, 1, 0, 1, 0, 0), "8*l1^3"),
        ("U6_11", TLeib6Params(l1, 0, 1, 0, 1, 0), "4*l1"),
    ]
    for name, rep, form in rows:
        vals = ", ".join(str(v) for v in invariants(rep).values())
        print(f"  {name:6} invariants ({form}) = {vals}")


if __name__ == "__main__":
    main()
