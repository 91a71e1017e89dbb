"""Command-line interface.

Words over the two generators are typed as strings of 0 (the involution
f0) and 1 (the non-invertible generator f1), e.g. ``10110`` = f1 f0 f1 f1
f0.  Numeric reports come out as CSV or JSON lines, one object per row,
ordered by n; big integers are always printed in full decimal.

Set ``MG_THREADS`` to parallelize independent oracle rows.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import mealy, rewrite, series, tables
from .errors import AutomatonFormatError, CapacityError

ORACLE_CAP = 12


def _thread_count() -> int:
    raw = os.environ.get("MG_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit_rows(rows: list[dict], fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        for row in rows:
            print(json.dumps(row), file=out)
    else:
        if rows:
            keys = list(rows[0])
            print(",".join(keys), file=out)
            for row in rows:
                print(",".join(str(row[k]) for k in keys), file=out)


def _map_ordered(fn, items):
    """Apply fn over items, possibly threaded; results in input order."""
    workers = _thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# --- growth ----------------------------------------------------------------

def cmd_growth(args) -> int:
    N = args.N
    delta = series.word_growth_coeffs(N)
    gamma = series.automaton_growth_coeffs(N)
    ball = series.ball_growth_coeffs(N)
    q = series.odd_distinct_partitions(N)

    oracle: dict[int, tuple[int, int]] = {}
    if args.oracle:
        ns = list(range(1, min(N, ORACLE_CAP) + 1))
        pairs = _map_ordered(lambda n: tables._stabilized(mealy.I2, n), ns)
        oracle = dict(zip(ns, pairs))

    rows = []
    for n in range(1, N + 1):
        asy = series.growth_asymptotes(n, q_n=q[n]) if q[n] else None
        row = {
            "n": n,
            "delta": delta[n],
            "gamma": gamma[n],
            "gamma_ball": ball[n],
            "q": q[n],
            "delta_ratio": round(delta[n] / asy.word_qform, 6) if asy else "",
            "gamma_ratio": round(gamma[n] / asy.automaton_qform, 6) if asy else "",
            "ball_ratio": round(ball[n] / asy.ball_qform, 6) if asy else "",
        }
        if args.oracle:
            if n in oracle:
                row["oracle_gamma"], row["oracle_ball"] = oracle[n]
            else:
                row["oracle_gamma"] = row["oracle_ball"] = ""
        rows.append(row)
    _emit_rows(rows, args.format)
    if args.oracle:
        bad = [n for n in oracle if oracle[n] != (gamma[n], ball[n])]
        if bad:
            print(f"oracle mismatch at n={bad}", file=sys.stderr)
            return 1
    return 0


# --- word problem ------------------------------------------------------------

def cmd_reduce(args) -> int:
    nf, steps = rewrite.reduce_detailed(rewrite.parse_word(args.word))
    print(rewrite.format_word(rewrite.nf_to_word(nf)))
    if args.verbose:
        print(f"normal form: {nf.describe()}  relation applications: {steps}",
              file=sys.stderr)
    return 0


def cmd_equal(args) -> int:
    if args.n is not None:
        same = rewrite.words_equal_quotient(
            rewrite.parse_word(args.word1), rewrite.parse_word(args.word2), args.n
        )
    else:
        same = rewrite.words_equal(
            rewrite.parse_word(args.word1), rewrite.parse_word(args.word2)
        )
    print("true" if same else "false")
    return 0


def cmd_quotient(args) -> int:
    n = args.n
    order = tables.quotient_order(mealy.I2, n, max_elements=args.max_elements)
    formula = tables.i2_quotient_order_formula(n)
    term = math.log(order) / ((2**n - 1) * math.log(4))
    row = {
        "n": n,
        "order": order,
        "formula": formula,
        "match": order == formula,
        "hausdorff_term": round(term, 6),
    }
    _emit_rows([row], args.format)
    if args.depth is not None:
        gens = [tables.table_of(mealy.I2, q, n) for q in range(2)]
        layers = tables.enumerate_monoid(
            gens, max_depth=args.depth, max_elements=args.max_elements
        )
        detail = [
            {
                "level": n,
                "depth": d,
                "ball": layers.cumulative[d],
                "sphere": layers.sphere_sizes[d],
                "new": layers.layer_sizes[d],
            }
            for d in range(len(layers.cumulative))
        ]
        _emit_rows(detail, args.format)
    return 0 if order == formula else 1


# --- verification suites -----------------------------------------------------

def _suite_relations(args):
    for p in range(args.pmax + 1):
        yield f"relation r_{p} at level {args.level}", rewrite.verify_relation(p, args.level)
    for n in range(1, args.nmax + 1):
        holds, fails = rewrite.verify_left_zero(n)
        yield f"left zero at level {n}", holds and fails


def _suite_series(args):
    N = args.N
    yield "psi product form = sum form", (
        series.odd_distinct_partitions(N) == series.psi_sum_form(N)
    )
    delta = series.word_growth_coeffs(N)
    gamma = series.automaton_growth_coeffs(N)
    ball = series.ball_growth_coeffs(N)
    yield "gamma = delta / (1 - X^2)", gamma == series.divide_one_minus_xk(list(delta), 2)
    yield "ball = delta / (1 - X)", ball == series.divide_one_minus_xk(list(delta), 1)
    yield "delta = (1 - X) ball", list(delta) == series.multiply_one_minus_xk(list(ball), 1)


def _suite_oracle(args):
    nmax = min(args.nmax, ORACLE_CAP)
    gamma = series.automaton_growth_coeffs(nmax)
    ball = series.ball_growth_coeffs(nmax)
    ns = list(range(1, nmax + 1))
    pairs = _map_ordered(lambda n: tables._stabilized(mealy.I2, n), ns)
    for n, (g, b) in zip(ns, pairs):
        yield f"oracle agreement at n={n}", (g, b) == (gamma[n], ball[n])


def _suite_width(args):
    import random

    rng = random.Random(args.seed)
    for i in range(args.count):
        word = [rng.randint(0, 1) for _ in range(rng.randint(1, 30))]
        p = rng.randint(0, 3)
        lhs, rhs = rewrite.relation_sides(p)
        pos = rng.randrange(len(word) + 1)
        w1 = tuple(word[:pos]) + lhs + tuple(word[pos:])
        w2 = tuple(word[:pos]) + rhs + tuple(word[pos:])
        if rewrite.width(w1) != rewrite.width(w2):
            yield f"width differs across r_{p} (trial {i})", False
            return
    yield f"width invariant over {args.count} random rewrites", True


_SUITES = {
    "relations": _suite_relations,
    "series": _suite_series,
    "oracle": _suite_oracle,
    "width": _suite_width,
}


def cmd_verify(args) -> int:
    failures = 0
    for name, ok in _SUITES[args.suite](args):
        print(json.dumps({"check": name, "pass": bool(ok)}))
        if not ok:
            failures += 1
    print(f"{args.suite}: {'pass' if failures == 0 else f'{failures} failure(s)'}",
          file=sys.stderr)
    return 0 if failures == 0 else 1


# --- automaton file actions ----------------------------------------------------

def cmd_automaton(args) -> int:
    a = mealy.load_automaton(args.file)
    if args.action == "invertible":
        print("true" if mealy.is_invertible(a) else "false")
    elif args.action == "minimize":
        sys.stdout.write(mealy.format_automaton(mealy.minimize(a)))
    elif args.action == "growth":
        counts = mealy.automaton_growth(a, args.N, max_states=args.max_states)
        print(",".join(str(c) for c in counts))
    elif args.action == "product":
        if args.with_file is None:
            raise SystemExit("product action requires --with FILE")
        b = mealy.load_automaton(args.with_file)
        sys.stdout.write(mealy.format_automaton(mealy.product(a, b)))
    return 0


# --- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mealygrowth",
        description="Growth of the smallest intermediate-growth Mealy automaton.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("growth", help="growth table: delta, gamma, ball, q, ratios")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help=f"add BFS oracle columns for n <= {ORACLE_CAP}")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("reduce", help="normal form of a generator word")
    p.add_argument("word")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("equal", help="decide equality of two generator words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--n", type=int, default=None,
                   help="compare in the level-n quotient instead")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("quotient", help="order and Hausdorff term of a level quotient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, default=None,
                   help="also print level,depth,ball,sphere,new rows")
    p.add_argument("--max-elements", type=int, default=2_000_000)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--pmax", type=int, default=6)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--level", type=int, default=12)
    p.add_argument("--N", type=int, default=2000)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("automaton", help="operate on an automaton file")
    p.add_argument("file")
    p.add_argument("action", choices=("growth", "minimize", "invertible", "product"))
    p.add_argument("--N", type=int, default=5)
    p.add_argument("--with", dest="with_file", default=None, metavar="FILE")
    p.add_argument("--max-states", type=int, default=mealy.DEFAULT_STATE_CAP)
    p.set_defaults(func=cmd_automaton)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AutomatonFormatError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
