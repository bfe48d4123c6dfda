"""Tour of the built-in means: values, envelope, and special identities.

Every mean in the catalog maps a pair of positive reals to a value
between their min and max.  The Stolarsky family ties the catalog
together: particular exponent pairs reproduce the arithmetic, geometric,
and Heronian means exactly.
"""

import numpy as np

import invmeans as im


def main():
    pairs = [(1.0, 3.0), (2.0, 8.0), (1.0, 4.0), (0.1, 1000.0)]
    names = im.CLASSICAL_NAMES

    print("catalog values")
    print(f"{'pair':>14} " + " ".join(f"{n:>12}" for n in names))
    for x, y in pairs:
        row = [im.classical(n)(x, y) for n in names]
        print(f"{f'({x:g}, {y:g})':>14} " + " ".join(f"{v:12.6g}" for v in row))

    print()
    print("the envelope: min <= M(x, y) <= max for every catalog mean")
    rng = np.random.default_rng(42)
    x = np.exp(rng.uniform(np.log(1e-6), np.log(1e6), 10_000))
    y = np.exp(rng.uniform(np.log(1e-6), np.log(1e6), 10_000))
    for n in names:
        v = im.classical(n).fn(x, y)
        inside = np.all((np.minimum(x, y) <= v) & (v <= np.maximum(x, y)))
        print(f"  {n:>12}: all 10000 samples inside the envelope: {inside}")

    print()
    print("Stolarsky exponents that collapse to familiar means")
    print(f"  stolarsky:2:1   at (1, 3) = {im.stolarsky(2, 1)(1, 3):.15f}"
          f"   (arithmetic: {im.classical('arithmetic')(1, 3):.15f})")
    print(f"  stolarsky:1:-1  at (2, 8) = {im.stolarsky(1, -1)(2, 8):.15f}"
          f"   (geometric:  {im.classical('geometric')(2, 8):.15f})")
    heronian = im.stolarsky(1.5, 0.5)(1, 4)
    print(f"  stolarsky:1.5:0.5 at (1, 4) = {heronian:.15f}"
          f"   (Heronian (x + sqrt(xy) + y)/3 = {7 / 3:.15f})")

    print()
    print("near the diagonal the logarithmic mean stays fully accurate:")
    for gap in (1e-6, 1e-9, 1e-12, 0.0):
        x0 = 1.0
        y0 = 1.0 + gap
        print(f"  L(1, 1 + {gap:g}) = {im.classical('logarithmic')(x0, y0)!r}")


if __name__ == "__main__":
    main()
