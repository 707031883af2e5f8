"""Command-line interface.

Exit codes: 0 success, 1 bad arguments, 2 a theorem violation or internal
inconsistency was found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

from . import __version__
from .binexp import alpha, e_of, mu, nu, to_cbe
from .bounds import chain_report, conjecture_reports, tc_bounds
from .errors import ConsistencyError, PowerOfTwoSuccessor
from .fib import check_pattern
from .rfun import r_defined, r_of, r_schedule
from .sweep import SweepConfig, run_sweep
from .verify import verify_certificates, verify_closed_forms, verify_knapsack, verify_oracle, verify_theorems
from .zcl import gap_table, stabilization, zcl_s

log = logging.getLogger("rptc")


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _s_value(text: str) -> int:
    v = _positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError("s must be >= 2")
    return v


def _emit(rows: list[dict], fmt: str, out) -> None:
    if not rows:
        return
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        cols = list(rows[0])
        cells = [[str(r[c]) for c in cols] for r in rows]
        width = [max(len(c), *(len(x[i]) for x in cells)) for i, c in enumerate(cols)]
        out.write("  ".join(c.rjust(w) for c, w in zip(cols, width)) + "\n")
        for x in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(x, width)) + "\n")


def cmd_cbe(args, out):
    c = to_cbe(args.m)
    out.write(f"cbe({args.m}) = {c.blocks}\n")
    out.write(f"binary {args.m:b}, e = {e_of(args.m)}, alpha = {alpha(args.m)}, mu = {mu(args.m)}, nu = {nu(args.m)}\n")
    return 0


def cmd_r(args, out):
    sched = r_schedule(args.m)
    if args.schedule:
        out.write(f"m = {args.m}, e = {sched.e}, k = {sched.k}, d0 = {sched.d0}, t = {sched.t}\n")
        entries = sched.entries() if args.all_entries else sched.nonzero
        rows = [{"l": x.ell, "d": x.d, "parity": x.parity_odd, "numerator": x.numerator, "r": x.r} for x in entries]
        _emit(rows, args.format, out)
    out.write(f"r({args.m}) = {sched.r}\n")
    return 0


def _row_dict(row) -> dict:
    return {"m": row.m, "s": row.s, "zcl": row.zcl, "gap": row.gap,
            "witness": " ".join(map(str, row.witness.exponents)) if row.witness else ""}


def cmd_zcl(args, out):
    row = zcl_s(args.m, args.s)
    if args.format == "table":
        out.write(f"zcl_{row.s}(RP^{row.m}) = {row.zcl}, G_{row.s}({row.m}) = {row.gap}\n")
        out.write(f"witness exponents: {row.witness.exponents}\n")
    else:
        _emit([_row_dict(row)], args.format, out)
    return 0


def cmd_gap_table(args, out):
    s_max = args.s_max
    if s_max is None:
        s_max = r_of(args.m) if r_defined(args.m) else 2
    rows = gap_table(args.m, s_max, witness=args.witness)
    dicts = [_row_dict(r) for r in rows]
    if not args.witness:
        for d in dicts:
            del d["witness"]
    _emit(dicts, args.format, out)
    return 0


def cmd_stab(args, out):
    st = stabilization(args.m)
    rep = chain_report(args.m) if args.chain else None
    if args.format == "table":
        out.write(f"m = {st.m}: G-limit = {st.G_limit}, s({st.m}) = {st.s_of_m}, ")
        out.write(f"r({st.m}) = {st.r_of_m if st.r_of_m is not None else 'undefined'}\n")
        out.write(f"gaps G_2..G_{st.s_of_m}: {list(st.gap_sequence)}\n")
        if st.r_of_m is not None:
            out.write("s(m) = r(m)\n" if st.s_equals_r else "s(m) < r(m)\n")
        if rep is not None:
            out.write(f"l(m) = {rep.ell_of_m}; {rep.lambda_note}\n")
    else:
        d = {"m": st.m, "G_limit": st.G_limit, "s": st.s_of_m, "r": st.r_of_m,
             "gaps": " ".join(map(str, st.gap_sequence))}
        _emit([d], args.format, out)
    return 0


def cmd_bounds(args, out):
    b = tc_bounds(args.m, args.s)
    lo, hi = b.delta_interval
    d = {"m": b.m, "s": b.s, "tc_lower": b.lower, "tc_upper": b.upper, "exact": b.exact,
         "delta_lower": lo, "delta_upper": hi,
         "provenance": " ".join(f"{k}={v}" for k, v in b.provenance)}
    if args.format == "table":
        val = f"= {b.lower}" if b.exact else f"in [{b.lower}, {b.upper}]"
        out.write(f"TC_{b.s}(RP^{b.m}) {val}; delta_{b.s}({b.m}) in [{lo}, {hi}]\n")
        out.write(f"sources: {d['provenance']}\n")
    else:
        _emit([d], args.format, out)
    return 0


def cmd_conjectures(args, out):
    recs = conjecture_reports(range(args.a_min, args.a_max + 1))
    if args.format == "table":
        for r in recs:
            fx = f"[{r.fixture[0]}, {r.fixture[1]}]" if r.fixture else "-"
            out.write(f"a={r.a} m={r.m} r={r.r} bound delta_2<={r.conjectured[2]} fixture {fx} -> {r.status}")
            if r.imm_lower is not None:
                out.write(f"; conjectured Imm >= {r.imm_lower}")
            out.write("\n")
            for n in r.notes:
                out.write(f"    {n}\n")
    elif args.format == "jsonl":
        for r in recs:
            out.write(json.dumps(r.to_dict()) + "\n")
    else:
        _emit([{"a": r.a, "m": r.m, "r": r.r, "delta2_bound": r.conjectured[2], "imm_lower": r.imm_lower,
                "fixture": f"{r.fixture[0]}-{r.fixture[1]}" if r.fixture else "",
                "status": r.status, "notes": "; ".join(r.notes)} for r in recs], "csv", out)
    return 0


def cmd_verify(args, out):
    what = args.what
    if what == "closed-forms":
        rows = verify_closed_forms(args.m_max)
        buf = out if args.output is None else io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "case", "r_predicted", "r_actual", "match"])
        for r in rows:
            w.writerow([r.m, r.case, r.r_predicted, r.r_actual, int(r.match)])
        if args.output is not None:
            with open(args.output, "w") as fh:
                fh.write(buf.getvalue())
        bad = [r for r in rows if not r.match]
        log.info("closed forms: %d classified, %d mismatches", len(rows), len(bad))
        return 2 if bad else 0
    if what == "oracle":
        rep = verify_oracle(samples=args.samples, seed=args.seed)
        out.write(f"oracle: {rep.checked} vectors, {rep.nonzero} non-zero, {len(rep.mismatches)} mismatches\n")
        rows = verify_knapsack()
        bad = [r for r in rows if r[2] != r[3]]
        out.write(f"knapsack vs exhaustive: {len(rows)} (m, s) pairs, {len(bad)} mismatches\n")
        return 0 if rep.ok and not bad else 2
    if what == "fib":
        rep = check_pattern(args.depth)
        if rep.ok:
            out.write(f"parity pattern holds for l = 2..{args.depth}\n")
            return 0
        out.write(f"parity pattern fails at l = {rep.first_failure}\n")
        return 2
    if what == "theorems":
        rows = verify_theorems(args.m_max)
        n_cert = verify_certificates(args.m_max)
        with_r = [r for r in rows if r.r_of_m is not None]
        eq = sum(r.s_equals_r for r in with_r)
        out.write(f"m = 1..{args.m_max}: stable gap 2^e(m) - 1 reached and never undershot\n")
        out.write(f"s(m) <= r(m) for all {len(with_r)} m with r defined; {n_cert} certificates valid\n")
        out.write(f"s(m) = r(m) for {eq} of {len(with_r)}\n")
        if args.report:
            _emit([{"m": r.m, "e": r.e, "s": r.s_of_m, "r": r.r_of_m, "s_eq_r": int(r.s_equals_r)}
                   for r in with_r if not r.s_equals_r or args.report == "all"], "csv", out)
        return 0
    raise _ArgError(f"unknown verify target {what}")


def cmd_sweep(args, out):
    s_max = args.s_max if args.s_max == "r" else int(args.s_max)
    cfg = SweepConfig(args.m_from, args.m_to, s_max, args.format, args.output, args.jobs, args.cache)
    text = run_sweep(cfg)
    if args.output is None:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rptc", description="Zero-divisor cup-length, gaps and r(m) for real projective spaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def fmt(sp, default="table", choices=("table", "csv", "jsonl")):
        sp.add_argument("--format", choices=choices, default=default)

    sp = sub.add_parser("cbe", help="codified binary expansion")
    sp.add_argument("m", type=_positive)
    sp.set_defaults(func=cmd_cbe)

    sp = sub.add_parser("r", help="r(m) and its schedule")
    sp.add_argument("m", type=_positive)
    sp.add_argument("--schedule", action="store_true")
    sp.add_argument("--all-entries", action="store_true", help="include l with r_l = 0")
    fmt(sp)
    sp.set_defaults(func=cmd_r)

    sp = sub.add_parser("zcl", help="zcl_s(RP^m) with a witness")
    sp.add_argument("m", type=_positive)
    sp.add_argument("s", type=_s_value)
    fmt(sp)
    sp.set_defaults(func=cmd_zcl)

    sp = sub.add_parser("gap-table", help="G_s(m) for s = 2..s_max")
    sp.add_argument("m", type=_positive)
    sp.add_argument("--s-max", type=_s_value, default=None, help="default r(m)")
    sp.add_argument("--witness", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_gap_table)

    sp = sub.add_parser("stab", help="stabilisation index s(m)")
    sp.add_argument("m", type=_positive)
    sp.add_argument("--chain", action="store_true", help="also report l(m)")
    fmt(sp)
    sp.set_defaults(func=cmd_stab)

    sp = sub.add_parser("bounds", help="interval for TC_s(RP^m)")
    sp.add_argument("m", type=_positive)
    sp.add_argument("s", type=_s_value)
    fmt(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("conjectures", help="fixtures vs conjectured delta bounds for m = 3*2^a")
    sp.add_argument("--a-min", type=_positive, default=1)
    sp.add_argument("--a-max", type=_positive, default=5)
    fmt(sp)
    sp.set_defaults(func=cmd_conjectures)

    sp = sub.add_parser("verify", help="verification sweeps")
    sp.add_argument("what", choices=("closed-forms", "oracle", "fib", "theorems"))
    sp.add_argument("--m-max", type=_positive, default=None)
    sp.add_argument("--depth", type=_positive, default=20, help="fib: largest window l")
    sp.add_argument("--samples", type=_positive, default=10_000, help="oracle: random vectors per (m, s)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", default=None)
    sp.add_argument("--report", choices=("all", "unequal"), default=None, help="theorems: per-m s(m) vs r(m) CSV")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="batch G_s(m) rows")
    sp.add_argument("--m-from", type=_positive, required=True)
    sp.add_argument("--m-to", type=_positive, required=True)
    sp.add_argument("--s-max", default="r", help="integer >= 2, or 'r' for s = 2..r(m)")
    sp.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sp.add_argument("--output", default=None)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--cache", default=None, help="JSONL cache file (default: $RPTC_CACHE_DIR/sweep-cache.jsonl)")
    sp.set_defaults(func=cmd_sweep)
    return p


_DEFAULT_M_MAX = {"closed-forms": 1 << 16, "theorems": 512}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd == "verify" and args.m_max is None:
            args.m_max = _DEFAULT_M_MAX.get(args.what)
        if args.cmd == "sweep" and args.s_max != "r":
            try:
                if int(args.s_max) < 2:
                    raise ValueError
            except ValueError:
                raise _ArgError(f"rptc sweep: error: --s-max must be an integer >= 2 or 'r', got {args.s_max!r}")
        if args.cmd == "sweep" and args.m_from > args.m_to:
            raise _ArgError("rptc sweep: error: --m-from exceeds --m-to")
    except _ArgError as exc:
        print(exc, file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args, out)
    except PowerOfTwoSuccessor as exc:
        print(f"rptc: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"rptc: INCONSISTENCY: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"rptc: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
