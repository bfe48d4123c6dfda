"""When is the construction kernel itself a mean?

The kernel N = (M / M(C^t, D^t))^(1/(1-t)) drives the pair construction,
and the pair components are always means.  N itself is not: with
M = C = arithmetic and D = harmonic it escapes the min/max envelope,
growing like 2^(t/(1-t)) * x at large ratios.  With M = logarithmic or
M = geometric the same shape stays inside the envelope.
"""

import invmeans as im

A = im.classical("arithmetic")
G = im.classical("geometric")
H = im.classical("harmonic")
L = im.classical("logarithmic")


def verdict(report):
    return "mean" if report.passed else (
        f"NOT a mean (violation {report.worst_violation:.3g} at "
        f"x/y ratio {max(report.witness[0] / report.witness[1], report.witness[1] / report.witness[0]):.3g})")


def main():
    print("failing kernel: M = C = arithmetic, D = harmonic")
    for t in (0.25, 0.5, 0.75):
        N = im.general_base(A, A, H, t)
        print(f"  t = {t}: {verdict(im.check_meanness(N))}")
    print()

    print("how it escapes: n(x)/x for the t = 0.5 kernel trace")
    N = im.general_base(A, A, H, 0.5)
    tr = im.trace_of(N)
    for x in (1e1, 1e2, 1e4, 1e6, 1e8):
        print(f"  x = {x:8.0e}: n(x)/x = {tr(x) / x:.6f}")
    print("  the ratio approaches 2^(0.5/0.5) = 2, so N(x, 1) > x "
          "eventually: not a mean")
    print()

    print("passing kernels of the same shape:")
    print(f"  M = logarithmic, C = A, D = H, t = 0.5: "
          f"{verdict(im.check_meanness(im.general_base(L, A, H, 0.5)))}")
    for t in (0.1, 0.25, 0.4):
        N = im.general_base(G, im.classical("min"), im.classical("max"), t)
        print(f"  M = geometric, C = min, D = max, t = {t}: "
              f"{verdict(im.check_meanness(N))}")
    print()

    print("a sharp threshold: M = geometric, C = D = min")
    print("  (the kernel is x^(1/(2(1-t))) * y^((1-2t)/(2(1-t))) for "
          "x >= y, a mean iff t <= 1/2)")
    for t in (0.4, 0.5, 0.6):
        N = im.general_base(G, im.classical("min"), im.classical("min"), t)
        print(f"  t = {t}: {verdict(im.check_meanness(N))}")
    print()

    print("A * H = G^2 makes the harmonic/arithmetic kernel of G collapse "
          "to G itself:")
    N = im.general_base(G, A, H, 0.5)
    dev = abs(N(2, 8) - G(2, 8)) / G(2, 8)
    print(f"  |N(2, 8) - G(2, 8)| / G(2, 8) = {dev:.3g}")


if __name__ == "__main__":
    main()
