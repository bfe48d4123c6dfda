"""Means on all of R: trade homogeneity for translativity through exp/log.

Conjugating a homogeneous mean M by exp gives N(x, y) = log M(e^x, e^y),
which shifts with its arguments: N(x + c, y + c) = N(x, y) + c.  The
whole pair construction transports along: K = t*x + N - N(t*x, t*y) and
its mirror are complementary around N.  For the arithmetic mean the
family is exactly the weighted averages with weights (1 +- t)/2.
"""

import numpy as np

import invmeans as im

G = im.classical("geometric")


def main():
    print("conjugates of catalog means:")
    NG = im.translative_conjugate(G)
    NA = im.translative_conjugate(im.classical("arithmetic"))
    print(f"  conj(geometric)(3, 5)        = {NG(3.0, 5.0)!r}  "
          "(the midpoint: log G(e^x, e^y) = (x + y)/2)")
    print(f"  conj(arithmetic)(0, log 3)   = {NA(0.0, float(np.log(3.0)))!r}  "
          f"(log((1 + 3)/2) = {float(np.log(2.0))!r})")
    print()

    print("translativity, checked at a few shifts:")
    rng = np.random.default_rng(42)
    x = rng.uniform(-400, 400, 1000)
    y = rng.uniform(-400, 400, 1000)
    for tau in (-100.0, 37.5, 250.0):
        res = np.max(np.abs(NG.fn(x + tau, y + tau) - (NG.fn(x, y) + tau)))
        print(f"  shift {tau:>7}: max |N(x+c, y+c) - (N(x,y) + c)| "
              f"= {res:.3g}")
    print()

    print("the weighted-average family around the arithmetic mean on R:")
    AR = im.ARITHMETIC_ON_REALS
    for t in (-0.5, 0.0, 0.5):
        p = im.translative_pair(AR, t)
        print(f"  t = {t:>4}: K has weights "
              f"({float(p.K.fn(1.0, 0.0))!r}, {float(p.K.fn(0.0, 1.0))!r})"
              f"  (exactly ((1+t)/2, (1-t)/2))")
    p = im.translative_pair(AR, 0.5)
    print(f"  worked pair at t = 0.5: K(0, 4) = {float(p.K.fn(0.0, 4.0))!r}, "
          f"L(0, 4) = {float(p.L.fn(0.0, 4.0))!r}, midpoint of both = "
          f"{float(AR.fn(p.K.fn(0.0, 4.0), p.L.fn(0.0, 4.0)))!r} = A(0, 4)")
    print()

    print("invariance residuals sit at the floating-point floor, "
          "about one spacing of the result:")
    for t in (-0.5, 0.25, 0.5):
        p = im.translative_pair(AR, t)
        res = np.max(np.abs(AR.fn(p.K.fn(x, y), p.L.fn(x, y))
                            - AR.fn(x, y)))
        ulp = np.spacing(1000.0)
        print(f"  t = {t:>5}: max residual {res:.3g} "
              f"(one spacing at 1e3 is {ulp:.3g})")
    print()

    print("arguments are capped so exp cannot overflow:")
    try:
        NG(701.0, 0.0)
    except OverflowError as exc:
        print(f"  OverflowError: {exc}")


if __name__ == "__main__":
    main()
