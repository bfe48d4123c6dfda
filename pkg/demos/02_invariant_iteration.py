"""Iterating a mean pair to its invariant limit.

Composing (x, y) -> (A(x, y), H(x, y)) and repeating squeezes any
starting pair onto the diagonal.  Because G(A, H) = G exactly, the
common limit is the geometric mean of the start, and convergence is
quadratic: each step roughly squares the gap.
"""

import invmeans as im

A = im.classical("arithmetic")
G = im.classical("geometric")
H = im.classical("harmonic")


def show(trace, label):
    print(label)
    print(f"{'n':>3} {'x':>22} {'y':>22} {'gap':>12}")
    for n, (x, y) in enumerate(trace.iterates):
        print(f"{n:>3} {x:>22.17g} {y:>22.17g} {trace.gaps[n]:>12.3e}")
    print(f"  converged={trace.converged} iterations={trace.iterations} "
          f"limit={trace.limit!r}")
    order = trace.order_estimate()
    if order is not None:
        print(f"  empirical convergence order ~ {order:.3f}")
    print()


def main():
    pair = im.MeanPair(A, H, target=G)
    trace = im.iterate_pair(pair, 1.0, 4.0)
    show(trace, "arithmetic-harmonic iteration from (1, 4):")
    print(f"  limit equals G(1, 4) = {G(1, 4)!r}")
    print()

    report = im.invariant_value_along_trajectory(pair, trace)
    print(f"  G is constant along the whole trajectory: {report.passed}")
    print()

    agm = im.iterate_pair(im.MeanPair(A, G, target=G), 1.0, 2.0)
    show(agm, "arithmetic-geometric iteration from (1, 2):")
    print("  (this limit is the classical AGM; no catalog mean equals it)")
    print()

    stuck = im.MeanPair(im.classical("proj1"), im.classical("proj2"),
                        target=A)
    frozen = im.iterate_pair(stuck, 1.0, 4.0, max_iter=25)
    print("the coordinate selections fix every pair, so nothing moves:")
    print(f"  converged={frozen.converged} after {frozen.iterations} "
          f"iterations, final gap {frozen.final_gap!r}")


if __name__ == "__main__":
    main()
