"""Selection means: pick x on a chosen set, y elsewhere.

A selection set A turns into the mean P_A(x, y) = x if (x, y) is in A
else y.  Its structure shows up directly in the mean's properties:
P_A is a symmetric function exactly when A holds one of (x, y), (y, x)
for every off-diagonal pair, and homogeneous exactly when A is closed
under scaling.  Swapping arguments always lands on the complement:
P_A(y, x) = P_A'(x, y).
"""

import numpy as np

import invmeans as im


def main():
    print("the five built-in selection sets")
    print(f"{'name':>8} {'P(0.5, 1)':>10} {'P(3, 5)':>8} "
          f"{'symmetric':>10} {'homogeneous':>12}")
    for name in im.BUILTIN_CONE_NAMES:
        P = im.projective_mean(im.builtin_cone(name))
        print(f"{name:>8} {P(0.5, 1.0):>10g} {P(3.0, 5.0):>8g} "
              f"{str(P.symmetric):>10} {str(P.homogeneous):>12}")
    print()

    print("'lower' selects the smaller argument, so it IS min; "
          "'upper' is max:")
    x = np.array([2.0, 7.0, 1.0])
    y = np.array([5.0, 3.0, 9.0])
    P_lower = im.projective_mean(im.builtin_cone("lower"))
    print(f"  elementwise on x = {x.tolist()}, y = {y.tolist()}: "
          f"{P_lower.fn(x, y).tolist()}")
    print()

    print("exchange property: P_A(y, x) == P_A'(x, y), exactly, "
          "for every set:")
    for name in im.BUILTIN_CONE_NAMES:
        rep = im.check_exchange_property(im.builtin_cone(name))
        print(f"  {name:>8}: worst deviation {rep.worst_violation!r} "
              f"over {rep.samples_checked} samples")
    print()

    print("'mixed' (x < y below the line x + y = 2, x > y above) is "
          "symmetric but not homogeneous:")
    P = im.projective_mean(im.builtin_cone("mixed"))
    print(f"  P(0.5, 1.0) = {P(0.5, 1.0)}   but   "
          f"10 * P(0.5, 1.0) != P(5, 10) = {P(5.0, 10.0)}")
    report = im.check_flags(P)
    print(f"  declared flags survive a full scan: passed={report.passed}")
    print()

    print("a user-defined set: points with x^2 > y")
    parabola = im.ConeSet(lambda x, y: x * x > y,
                          declared_asymmetric=False, declared_cone=False,
                          name="parabola")
    rep = im.check_exchange_property(parabola)
    print(f"  exchange holds: passed={rep.passed}, "
          f"worst={rep.worst_violation!r}")


if __name__ == "__main__":
    main()
