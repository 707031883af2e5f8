"""How many even m each closed form covers, and the residual with no closed form."""

import argparse
from collections import Counter

from rptc.binexp import to_cbe
from rptc.closedform import Case, check_against_schedule, classify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=2**16)
    ap.add_argument("--show", type=int, default=15, help="residual examples to print")
    args = ap.parse_args()

    counts, residual_blocks, bad = Counter(), Counter(), []
    residual = []
    for m in range(2, args.m_max + 1, 2):
        cf = classify(m)
        counts[cf.case.value] += 1
        if cf.case is Case.NONE:
            residual.append(m)
            residual_blocks[cf.cbe.omega] += 1
        elif not check_against_schedule(m)[0]:
            bad.append(m)
    for case, n in sorted(counts.items(), key=lambda kv: -kv[1]):
        print(f"{case:>12}: {n}")
    print(f"mismatches against the schedule: {bad or 'none'}")
    print("residual by number of one-blocks:", dict(sorted(residual_blocks.items())))
    two_block = [m for m in residual if to_cbe(m).omega == 2]
    print(f"two-block residual ({len(two_block)}), first few:")
    for m in two_block[: args.show]:
        print(f"  m={m} cbe={to_cbe(m).blocks}")


if __name__ == "__main__":
    main()
