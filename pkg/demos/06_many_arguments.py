"""The pair construction in n variables: invariance survives, mean-ness dies.

The tuple K_i = C_i^t * M / M(C_1^t, ..., C_n^t) still satisfies
M(K_1, ..., K_n) = M for any n.  But for n >= 3 the components can leave
the min/max envelope: with M = C_1 = arithmetic and geometric remaining
components, K_1(1, x, ..., x)/x climbs to n - 1.  For n = 2 that limit
is 1, which is why the two-variable theory works.
"""

import numpy as np

import invmeans as im


def main():
    print("invariance holds for any n (here t = 0.5, 1000 random vectors):")
    for n in (3, 5):
        nA = im.nary_arithmetic(n)
        nG = im.nary_geometric(n)
        tup = im.nary_invariant_tuple(nA, (nA,) + (nG,) * (n - 1), 0.5)
        rng = np.random.default_rng(42)
        xs = np.exp(rng.uniform(np.log(1e-6), np.log(1e6), (n, 1000)))
        kv = np.stack([K.fn(xs) for K in tup])
        rel = np.max(np.abs(nA.fn(kv) - nA.fn(xs)) / nA.fn(xs))
        print(f"  n = {n}: max relative residual {rel:.3g}")
    print()

    print("but the first component escapes the envelope:")
    print(f"{'x':>8} {'ratio n=3':>12} {'ratio n=4':>12} {'ratio n=5':>12}")
    for x in (1.0, 1e2, 1e4, 1e8, 1e13, 1e20, 1e30):
        row = [im.counterexample_ratio(n, 0.5, x) for n in (3, 4, 5)]
        print(f"{x:>8.0e} " + " ".join(f"{r:>12.6f}" for r in row))
    print("  K_1(1, x, ..., x) / x exceeds 1, approaching n - 1: "
          "K_1 is larger than every argument, so it is not a mean")
    print()

    print("the scan finds the escape directly (n = 3, t = 0.5):")
    nA = im.nary_arithmetic(3)
    nG = im.nary_geometric(3)
    K1 = im.nary_invariant_tuple(nA, (nA, nG, nG), 0.5)[0]
    report = im.check_nary_meanness(K1)
    print(f"  passed={report.passed}, worst violation "
          f"{report.worst_violation:.3g}")
    args = report.witness[:-1]
    print(f"  witness: K({', '.join(f'{a:.3g}' for a in args)}) = "
          f"{report.witness[-1]:.6g} > max of the arguments")
    print()

    print("the honest n-ary atoms pass the same scan:")
    for F in (nA, nG, im.nary_arithmetic(5)):
        rep = im.check_nary_meanness(F)
        print(f"  {F!r}: passed={rep.passed}")


if __name__ == "__main__":
    main()
