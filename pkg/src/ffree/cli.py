"""Batch command line front end.

One subcommand per experiment; every run embeds its resolved configuration
and seed in the output, and identical config + seed gives byte-identical
output.  Exit codes: 0 success, 1 assertion failure (e.g. chain violation or
a failed refutation), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import alteration, density, exact_tiny, thresholds
from .graphs import PatternParseError, parse_pattern
from .sampling import Seed, sample_gnp
from .subiso import contains_copy

SCHEMA = "ffree/1"


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict):
    payload = {"schema": SCHEMA, **payload}
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _emit_csv(args, header: list[str], rows: list[list]):
    lines = [",".join(header)]
    lines += [",".join(str(x) for x in row) for row in rows]
    _emit(args, "\n".join(lines) + "\n")


def _pattern(args):
    return parse_pattern(args.pattern)


def _seed(args) -> Seed:
    return Seed.parse(args.seed)


def cmd_density(args) -> int:
    report = density.density_gap_check(_pattern(args))
    _emit_json(args, {"command": "density", "pattern": args.pattern,
                      **report.to_dict()})
    return 0


def cmd_sample(args) -> int:
    g = sample_gnp(args.n, args.p, _seed(args))
    _emit_json(args, {
        "command": "sample", "n": args.n, "p": args.p, "seed": args.seed,
        "edge_count": g.edge_count,
        "edges": [[u, v] for u, v in g.edges()],
    })
    return 0


def cmd_alter(args) -> int:
    f = _pattern(args)
    result = alteration.alteration_graph(args.n, args.p, f, _seed(args))
    j = density.minimal_m2_subgraph(f)
    _emit_json(args, {
        "command": "alter", "pattern": args.pattern, "n": args.n, "p": args.p,
        "seed": args.seed, "j": j.to_text(), "in_regime": result.in_regime,
        "sampled_edges": result.source.edge_count,
        "packed_copies": len(result.copies),
        "altered_edges": result.altered.edge_count,
        "f_free": not contains_copy(result.altered, f),
        "altered": [[u, v] for u, v in result.altered.edges()],
    })
    return 0


def cmd_mu_sweep(args) -> int:
    f = _pattern(args)
    grid = [float(x) for x in args.p_grid.split(",")]
    rows = []
    for p in grid:
        est = thresholds.estimate_mu(args.n, p, f, args.trials, _seed(args))
        rows.append([args.pattern, args.n, repr(p), repr(est.mu_hat),
                     repr(est.ci_lo), repr(est.ci_hi), args.trials, args.seed])
    header = ["pattern", "n", "p", "mu_hat", "ci_lo", "ci_hi", "trials", "seed"]
    if args.format == "json":
        _emit_json(args, {"command": "mu-sweep",
                          "rows": [dict(zip(header, r)) for r in rows]})
    else:
        _emit_csv(args, header, rows)
    return 0


def cmd_pc(args) -> int:
    est = thresholds.estimate_pc(args.n, _pattern(args), args.trials, args.tol,
                                 _seed(args))
    _emit_json(args, {"command": "pc", "pattern": args.pattern, **est.to_dict()})
    return 0


def cmd_scaling(args) -> int:
    n_list = [int(x) for x in args.n_list.split(",")]
    fit = thresholds.scaling_fit(_pattern(args), n_list, args.trials, args.tol,
                                 _seed(args))
    _emit_json(args, {"command": "scaling", "seed": args.seed,
                      "trials": args.trials, "tolerance": args.tol,
                      **fit.to_dict()})
    return 0


def _generated_family(args, f, n, p) -> alteration.WeightedFamily:
    consts = alteration.lemma_constants(f, n)
    if args.family_edges is not None:
        edges = args.family_edges
    else:
        edges = alteration.min_family_edges(args.family_size, p, consts.delta)
    if edges > n * (n - 1) // 2:
        raise ValueError(
            f"family needs {edges} edges per member but only {n*(n-1)//2} pairs "
            f"exist; raise --p or pass --family-edges with --family-weight"
        )
    weights = None
    if args.family_weight is not None:
        weights = (args.family_weight,) * args.family_size
    return alteration.random_family(n, args.family_size, edges, _seed(args),
                                    weights=weights)


def cmd_lemma2(args) -> int:
    f = _pattern(args)
    family = _generated_family(args, f, args.n, args.p)
    consts = alteration.lemma_constants(f, args.n)
    if not alteration.check_family_condition(family, args.p, consts.delta):
        raise alteration.InapplicableFamilyError(
            "generated family violates the weight condition")
    records = [alteration.lemma2_trial(args.n, args.p, f, family, _seed(args),
                                       trial_index=i)
               for i in range(args.trials)]
    _emit_json(args, {
        "command": "lemma2", "pattern": args.pattern, "n": args.n, "p": args.p,
        "seed": args.seed, "trials": args.trials,
        "family_size": args.family_size,
        "family_edge_counts": [g.edge_count for g in family.members],
        "family_weights": list(family.weights),
        "delta": consts.delta,
        "hit_all_count": sum(1 for r in records if r.hit_all),
        "records": [r.to_dict() for r in records],
    })
    return 0


def cmd_refute(args) -> int:
    f = _pattern(args)
    n, p = args.n, args.p
    consts = alteration.lemma_constants(f, n)
    # certificate members are complements of random graphs with enough edges
    edges = (args.family_edges if args.family_edges is not None
             else alteration.min_family_edges(args.family_size, p, consts.delta))
    if edges > n * (n - 1) // 2:
        raise ValueError(
            f"certificate complements need {edges} edges but only "
            f"{n*(n-1)//2} pairs exist at n={n}; raise --p"
        )
    comps = alteration.random_family(n, args.family_size, edges, _seed(args))
    gfam = alteration.WeightedFamily.unit(tuple(g.complement()
                                                for g in comps.members))
    result = alteration.refute_certificate(gfam, f, n, p, args.budget, _seed(args))
    _emit_json(args, {
        "command": "refute", "pattern": args.pattern, "n": n, "p": p,
        "seed": args.seed, "members": args.family_size, "budget": args.budget,
        "complement_edges": edges,
        "success": result.success,
        "trials_used": len(result.trials),
        "escaping_edges": (None if result.graph is None
                           else [[u, v] for u, v in result.graph.edges()]),
    })
    return 0 if result.success else 1


def cmd_exact_q(args) -> int:
    val = exact_tiny.q_exact(args.n, _pattern(args), args.tol)
    _emit_json(args, {"command": "exact-q", "pattern": args.pattern, "n": args.n,
                      "value": val.value, "degenerate": val.degenerate,
                      "tolerance": val.tolerance})
    return 0


def cmd_exact_qf(args) -> int:
    val = exact_tiny.qf_exact(args.n, _pattern(args), args.tol)
    _emit_json(args, {"command": "exact-qf", "pattern": args.pattern, "n": args.n,
                      "value": val.value, "degenerate": val.degenerate,
                      "tolerance": val.tolerance})
    return 0


def cmd_gap(args) -> int:
    report = exact_tiny.gap_report(args.n, _pattern(args), args.tol)
    _emit_json(args, {"command": "gap", "pattern": args.pattern,
                      **report.to_dict()})
    return 0 if report.chain_holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffree",
        description="Thresholds of F-free graph down-sets: densities, "
                    "alteration construction, Monte Carlo thresholds, and "
                    "exact tiny-n expectation thresholds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, pattern=True, seed=False, out=True):
        if pattern:
            sp.add_argument("--pattern", required=True,
                            help="preset name or edge grammar, e.g. '0-1 1-2 0-2'")
        if seed:
            sp.add_argument("--seed", default="0", help="decimal or 0x-hex master seed")
        if out:
            sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("density", help="exact m, m2, witnesses, gap check")
    common(sp)
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("sample", help="one seeded G(n,p) sample")
    common(sp, pattern=False, seed=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("alter", help="alteration construction G_{n,p}(J)")
    common(sp, seed=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.set_defaults(func=cmd_alter)

    sp = sub.add_parser("mu-sweep", help="estimate mu_p over a p grid")
    common(sp, seed=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p-grid", required=True, help="comma-separated p values")
    sp.add_argument("--trials", type=int, default=400)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    sp.set_defaults(func=cmd_mu_sweep)

    sp = sub.add_parser("pc", help="bisection estimate of the threshold p_c")
    common(sp, seed=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=400)
    sp.add_argument("--tol", type=float, default=0.05)
    sp.set_defaults(func=cmd_pc)

    sp = sub.add_parser("scaling", help="log-log scaling fit of p_c against n")
    common(sp, seed=True)
    sp.add_argument("--n-list", required=True, help="comma-separated increasing n")
    sp.add_argument("--trials", type=int, default=400)
    sp.add_argument("--tol", type=float, default=0.05)
    sp.set_defaults(func=cmd_scaling)

    for name, func in [("lemma2", cmd_lemma2), ("refute", cmd_refute)]:
        sp = sub.add_parser(name, help=f"{name} trials against a generated family")
        common(sp, seed=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--p", type=float, required=True)
        sp.add_argument("--family-size", type=int, default=3)
        sp.add_argument("--family-edges", type=int, default=None,
                        help="edges per member (default: smallest meeting the condition)")
        if name == "lemma2":
            sp.add_argument("--family-weight", type=float, default=None)
            sp.add_argument("--trials", type=int, default=10)
        else:
            sp.add_argument("--budget", type=int, default=50)
        sp.set_defaults(func=func)

    for name, func in [("exact-q", cmd_exact_q), ("exact-qf", cmd_exact_qf),
                       ("gap", cmd_gap)]:
        sp = sub.add_parser(name, help=f"exact tiny-n {name}")
        common(sp)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--tol", type=float, default=exact_tiny.DEFAULT_P_TOL)
        sp.set_defaults(func=func)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (PatternParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, alteration.InapplicableFamilyError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
