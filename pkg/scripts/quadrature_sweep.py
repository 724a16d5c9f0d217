#!/usr/bin/env python3
"""Show the circle quadrature snapping to exactness past the Nyquist-style cut.

For the k=2 window the integrand (prime sum)^3 e(-N alpha) carries
frequencies up to 3*f_max. A uniform full-circle grid with M points
resolves the count exactly once M exceeds that; below the cut aliasing
can fold an attained triple sum onto N and corrupt the value (whether it
does depends on which sums are attained, so some smaller grids get lucky).
This sweep prints the relative error at N = N* for a ladder of grid sizes
crossing the threshold.
"""

import argparse
import warnings

from tanprimes import count_ternary_mitm, sieve_segment, value_table, window_from_index
from tanprimes.circle import circle_integral


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--c", type=float, default=1.05)
    ap.add_argument("--theta", type=float, default=2.0)
    args = ap.parse_args()

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        w = window_from_index(args.k, args.c, args.theta)
    blk = sieve_segment(w.delta1, w.delta2)
    vt = value_table(blk.primes, args.c, args.theta)
    rep = count_ternary_mitm(vt, blk.logs, w.n_star, w=w)
    fxmax = int(vt.f.max())
    cut = 3 * fxmax + 1
    print(f"N* = {w.n_star}, Gamma = {rep.weighted:.6f}, 3*f_max+1 = {cut}")
    print(f"{'M':>8}  {'rel error':>12}  exact?")
    for M in (cut // 8, cut // 4, cut // 2, cut - 2, cut, cut + 1, 2 * cut):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            z = circle_integral(vt, blk.logs, w.n_star, grid_size=M)
        rel = abs(z.real - rep.weighted) / max(1.0, abs(rep.weighted))
        print(f"{M:>8}  {rel:>12.3e}  {'yes' if rel < 1e-9 else 'no'}")


if __name__ == "__main__":
    main()
