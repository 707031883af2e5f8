"""Fixtures against the conjectured delta bounds for m = 3 * 2^a, as a table or JSON."""

import argparse
import json

from rptc.bounds import conjecture_reports


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a-max", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    recs = conjecture_reports(range(1, args.a_max + 1))
    if args.json:
        print(json.dumps([r.to_dict() for r in recs], indent=2))
        return
    for r in recs:
        bound = ", ".join(f"d{j}<={v}" for j, v in r.conjectured.items())
        gaps = ", ".join(f"G{j}={v}" for j, v in r.gaps.items())
        print(f"a={r.a} m={r.m} r={r.r}: {bound}")
        print(f"    computed {gaps}; fixture delta_2 in {r.fixture}; {r.status}")
        for n in r.notes:
            print(f"    {n}")


if __name__ == "__main__":
    main()
