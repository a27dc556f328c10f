"""Slash homology of small H_q-modules.

A graded operator with d^p = 0 splits into Jordan strings.  Strings of full
length p are free and vanish in the stable category; the rest are the
balanced modules V_i.  This walks through a few examples, including the
rank-one twisted polynomial modules that the link invariants are built from.
"""

from __future__ import annotations

import numpy as np

from plink.algebra import Twist
from plink.pcomplex import (
    HqModule,
    slash_homology,
    slash_of_twisted_free,
    tensor_decomposition,
    twisted_free_closed_form,
)


def string(p: int, length: int, start: int = 0) -> HqModule:
    dims = {start + 2 * j: 1 for j in range(length)}
    blocks = {start + 2 * j: np.ones((1, 1), dtype=np.int64) for j in range(length - 1)}
    return HqModule(p, dims, blocks)


def main() -> None:
    p = 5
    print("single strings at p = 5")
    for length in range(1, p + 1):
        print(f"  length {length}: {slash_homology(string(p, length))}")

    print("\ntwisted polynomial modules k[x] with d(1) = a x")
    for a in range(1, p + 1):
        t = Twist((a,), p)
        print(f"  a = {a}: {slash_of_twisted_free(t)}")

    print("\ntwo variables: direct computation against the product formula")
    for reps in [(1, 2), (2, 2), (3, 4), (5, 5)]:
        t = Twist(reps, p)
        print(f"  a = {reps}: {slash_of_twisted_free(t)}  vs  {twisted_free_closed_form(t)}")

    v1 = slash_homology(string(p, 2, -2))
    print(f"\nV_1 tensor V_1 at p = 5: {tensor_decomposition(v1, v1)}")


if __name__ == "__main__":
    main()
