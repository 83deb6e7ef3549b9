"""Command-line front end: build, tables and simulate."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .ambient import cyclotomic_orbit
from .analysis import analyze, bivariate_alternatives, format_csv, reproduce_table
from .config import ConfigError, load_config
from .evalcode import affine_variety_code
from .locality import locality_pair, simulate_recovery
from .tables import PRESETS, get_preset

logger = logging.getLogger("avlrc")


def _build_code(cfg):
    tower = cfg.tower()
    grid = cfg.grid(tower)
    for a in cfg.delta_reps:
        if not grid.contains(a):
            raise ConfigError(f"delta_reps: {a} lies outside H_J (T={grid.T})")
        rep = cyclotomic_orbit(grid, a).representative
        if rep != a:
            logger.warning("%s is not a representative; using the closure I_%s", a, rep)
    return affine_variety_code(grid, tower, cfg.delta_reps)


def cmd_build(args) -> int:
    cfg = load_config(args.config)
    avc = _build_code(cfg)
    res = analyze(avc, cfg.distance_budget, seed=cfg.seed)
    rep = res.report
    print(f"q={avc.q} Q={avc.tower.Q} N={list(avc.grid.N)} reps={[list(a) for a in avc.delta.reps]}")
    print(f"n={avc.n} k={avc.k} d={res.d} ({res.d.mode}, {res.d.method})")
    if res.d_dual is not None:
        print(f"d_dual={res.d_dual} ({res.d_dual.mode}, {res.d_dual.method})")
    print(f"locality r={rep.r_bound} (r,delta)={rep.r_delta}")
    if rep.rt_bounds:
        print("r_t bounds: " + " ".join(f"r_{t}<={v}" for t, v in rep.rt_bounds.items()))
    if rep.defects:
        print(f"defects: D1={rep.defects['D1']} D_(delta-1)={rep.defects['Ddelta']}")
    print(f"sharp={rep.sharp}")
    row = res.row()
    pair = f"({row['r']},{row['delta']})"
    print(f"row: {row['q']}, [{row['n']},{row['k']},{row['d']}], {row['d_dual']}, {pair}, {row['defect']}")
    return 0


def cmd_tables(args) -> int:
    get_preset(args.id)
    results = reproduce_table(args.id, exact_max_k=args.exact_max_k, seed=args.seed)
    text = format_csv([r.row() for r in results])
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {len(results)} rows to {args.out}")
    if args.bivariate_search:
        if args.id != 10:
            raise ConfigError("--bivariate-search applies to table 10 only")
        for r in (2, 3, 4):
            for row in bivariate_alternatives(r, seed=args.seed):
                print(f"bivariate r={r}: k={row['k']} d={row['d']} ({row['d_mode']}) reps={row['reps']}")
    return 0


def cmd_simulate(args) -> int:
    cfg = load_config(args.config)
    avc = _build_code(cfg)
    r, delta = locality_pair(avc.grid, avc.delta)
    if args.erasures > delta - 1:
        print(f"refused: {args.erasures} erasures exceed delta-1={delta - 1}; an orbit recovery set "
              f"only guarantees d(C[R]) >= delta={delta}", file=sys.stderr)
        return 3
    trials = args.trials if args.trials is not None else cfg.trials
    seed = args.seed if args.seed is not None else cfg.seed
    out = simulate_recovery(avc, trials, args.erasures, seed)
    print(f"code [{avc.n},{avc.k}] over F_{avc.q}, (r,delta)=({r},{delta})")
    print(f"trials={out.trials} erasures={out.erasures} recovered={out.successes}/{out.trials} "
          f"mean_read={out.mean_read:.2f}")
    return 0 if out.successes == out.trials else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="avlrc", description="Locally recoverable codes from J-affine variety codes.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a code and report its parameters")
    b.add_argument("--config", required=True)
    b.set_defaults(func=cmd_build)

    t = sub.add_parser("tables", help="reproduce a parameter table as CSV")
    t.add_argument("--id", type=int, required=True, choices=sorted(PRESETS))
    t.add_argument("--out", required=True, help="output path, or - for stdout")
    t.add_argument("--exact-max-k", type=int, default=None,
                   help="search for an upper bound instead of enumerating when k exceeds this")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--bivariate-search", action="store_true",
                   help="(table 10, slow) also search bivariate F_32 codes of the same length")
    t.set_defaults(func=cmd_tables)

    s = sub.add_parser("simulate", help="run seeded multi-erasure recovery trials")
    s.add_argument("--config", required=True)
    s.add_argument("--trials", type=int, default=None)
    s.add_argument("--erasures", type=int, required=True)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
