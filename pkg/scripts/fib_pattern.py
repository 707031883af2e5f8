"""Prints the parity windows of C(3i + 1, i) beside the self-similar series."""

import argparse

from rptc.fib import check_pattern, parity_window, series_prefix


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show", type=int, default=6, help="print windows up to this l")
    ap.add_argument("--depth", type=int, default=24, help="check windows up to this l")
    args = ap.parse_args()
    for ell in range(2, args.show + 1):
        w = parity_window(ell)
        print(f"l={ell:2d} {w}")
        print(f"      {series_prefix(len(w) // 2)}{'0' * (len(w) // 2)}")
    rep = check_pattern(args.depth)
    print("pattern holds up to l =", args.depth if rep.ok else f"{rep.first_failure - 1} (fails at {rep.first_failure})")


if __name__ == "__main__":
    main()
