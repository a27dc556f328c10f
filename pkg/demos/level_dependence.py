"""How the Hopf link invariant depends on the level k at p = 5.

The Euler characteristic only sees the parity of k, but the module itself
changes: at k = 1 new balanced summands appear.  Markov moves leave the
result unchanged, which is checked on a stabilized braid.
"""

from __future__ import annotations

from plink.algebra import PrimeParams
from plink.invariants import compute_pH
from plink.rouquier import parse_braid


def main() -> None:
    p = 5
    hopf = parse_braid("2; 1 1")
    results = {}
    for k in (0, 1, 2):
        r = compute_pH(hopf, PrimeParams(p, k))
        results[k] = r
        print(f"k = {k} (N = {k * p + 2}): {r.v_decomposition}")
        print(f"        Euler characteristic {r.euler_char}")
    print(f"\nk = 0 and k = 2 share the Euler characteristic: {results[0].euler_char == results[2].euler_char}")
    print(f"k = 0 and k = 1 modules differ: {results[0].v_decomposition != results[1].v_decomposition}")

    params = PrimeParams(3, 0)
    a = compute_pH(parse_braid("2; 1 1"), params)
    b = compute_pH(parse_braid("3; 1 1 -2"), params)
    print(f"\nat p = 3, k = 0 the Hopf link and its stabilization agree: {a.v_decomposition == b.v_decomposition}")


if __name__ == "__main__":
    main()
