"""Command line front end.

Every command prints one JSON document (to stdout or ``--out``).  Exit status
is 0 when a verification has no failing records, 1 when it has, and 2 for
usage and precondition errors.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .errors import ArgumentError, DihedraError
from .reports import Report, _plain

TARGETS = ("perm", "hyper", "dn", "crossed", "bar", "trace", "monad")


def _monoids(args):
    from .perm_core import PointedMonoid
    if not args.monoid:
        return None
    return [PointedMonoid.from_file(p) for p in args.monoid]


def _one_monoid(args):
    ms = _monoids(args)
    if not ms:
        raise ArgumentError("--monoid FILE is required")
    return ms[0]


def run_target(target, opts):
    """Run one suite; ``opts`` is a plain dict so it can cross process boundaries."""
    seed = opts.get("seed", 0)
    if target == "perm":
        from .perm_core import verify_perm_suite
        return verify_perm_suite(k_max=opts.get("kmax") or 5, seed=seed)
    if target == "hyper":
        from .perm_core import verify_hyper_suite
        return verify_hyper_suite(k_max=opts.get("kmax") or 3, seed=seed)
    if target == "dn":
        from .dn_words import CommutationContext, verify_dn_suite
        ctx = None
        if opts.get("context"):
            with open(opts["context"], encoding="utf-8") as fh:
                ctx = CommutationContext.parse(fh.read())
        return verify_dn_suite(ctx=ctx, samples=opts.get("samples") or 1000, seed=seed)
    if target == "crossed":
        from .crossed_simplicial import verify_crossed_suite
        return verify_crossed_suite(r_max=opts.get("r") or 3, n_max=opts.get("n") or 5,
                                    samples=opts.get("samples") or 300, seed=seed)
    if target == "bar":
        from .bar_thh import verify_bar_suite
        return verify_bar_suite(monoids=opts.get("monoids"), q_max=opts.get("q") or 3,
                                r_max=opts.get("r") or 2, seed=seed)
    if target == "trace":
        from .matrix_trace import verify_trace_suite
        return verify_trace_suite(n_max=opts.get("n") or 2, q_max=opts.get("q") or 2,
                                  monoids=opts.get("monoids"), seed=seed,
                                  samples=opts.get("samples") or 200)
    if target == "monad":
        from .free_monad import verify_monad_suite
        return verify_monad_suite(samples=opts.get("samples") or 500, seed=seed,
                                  monoids=opts.get("monoids"))
    raise ArgumentError(f"unknown target {target!r}")


def _run_pair(item):
    return run_target(*item)


def cmd_verify(args):
    opts = {"seed": args.seed, "kmax": args.kmax, "n": args.n, "q": args.q, "r": args.r,
            "samples": args.samples, "context": args.context, "monoids": _monoids(args)}
    targets = TARGETS if args.target == "all" else (args.target,)
    if len(targets) == 1:
        return run_target(targets[0], opts)
    jobs = max(1, args.jobs)
    if jobs == 1:
        parts = [run_target(t, opts) for t in targets]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_pair, [(t, opts) for t in targets]))
    report = Report("all", {k: v for k, v in opts.items() if k != "monoids"}, args.seed)
    for part in parts:
        report.extend(part)
    return report


def cmd_enumerate(args):
    from .crossed_simplicial import census_counts, components_and_euler, enumerate_G
    table = enumerate_G(args.flavor, args.r or 1, args.degrees)
    comps, euler = components_and_euler(table)
    return {"command": "enumerate", "flavor": args.flavor, "r": args.r or 1,
            "degrees": args.degrees, "counts": list(census_counts(table)),
            "components": comps, "euler": euler,
            "nondegenerate": [[repr(g) for g in row["nondegenerate"]] for row in table]}


def cmd_homology(args):
    from .bar_thh import build_bar, homology_table
    M = _one_monoid(args)
    X = build_bar(M, args.degrees + 1)
    rows = homology_table(X, args.degrees, augmented=args.augmented)
    return {"command": "homology", "monoid": M.to_plain(), "augmented": args.augmented,
            "homology": [{"degree": n, "rank": free, "torsion": tors}
                         for n, (free, tors) in enumerate(rows)]}


def cmd_census(args):
    from .free_monad import builtin_operads, filtration_census
    ops = {P.name: P for P in builtin_operads()}
    if args.operad not in ops:
        raise ArgumentError(f"unknown operad {args.operad!r}; choose from {sorted(ops)}")
    value = filtration_census(ops[args.operad], args.letters + 2, args.j)
    return {"command": "census", "operad": args.operad, "letters": args.letters,
            "j": args.j, "census": value}


def cmd_trace(args):
    import random
    from .matrix_trace import MatrixElem, enumerate_matrices, trace_q
    from .perm_core import PointedMonoid
    M = _monoids(args)
    letters = range(1, M[0].size) if M else range(1, 3)
    if args.matrices:
        raw = json.loads(args.matrices)
        tuples = [[MatrixElem(args.n, [tuple(e) for e in m]) for m in raw]]
    else:
        rng = random.Random(args.seed)
        pool = enumerate_matrices(args.n, letters)
        tuples = [[rng.choice(pool) for _ in range(args.q + 1)] for _ in range(args.samples or 5)]
    out = []
    for ms in tuples:
        out.append({"matrices": [m.to_plain() for m in ms], "trace": trace_q(ms).to_plain()})
    return {"command": "trace", "n": args.n, "seed": args.seed, "results": out}


def build_parser():
    p = argparse.ArgumentParser(prog="python -m dihedra", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify all")
    common.add_argument("--monoid", action="append", metavar="FILE",
                        help="monoid table file (repeatable)")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("target", choices=TARGETS + ("all",))
    v.add_argument("--kmax", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--context", metavar="FILE", help="D-word context file")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", parents=[common], help="nondegenerate cells of G_.")
    e.add_argument("--flavor", required=True, help="dT, dC or dD")
    e.add_argument("--r", type=int, default=1)
    e.add_argument("--degrees", type=int, default=3)
    e.set_defaults(func=cmd_enumerate)

    h = sub.add_parser("homology", parents=[common], help="homology of the cyclic bar")
    h.add_argument("--degrees", type=int, default=3)
    h.add_argument("--augmented", action="store_true", help="reduced homology")
    h.set_defaults(func=cmd_homology)

    c = sub.add_parser("census", parents=[common], help="size of the arity filtration")
    c.add_argument("--operad", default="M", help="M, N, H or D")
    c.add_argument("--letters", type=int, default=1)
    c.add_argument("--j", type=int, default=3)
    c.set_defaults(func=cmd_census)

    t = sub.add_parser("trace", parents=[common], help="evaluate the matrix trace")
    t.add_argument("--n", type=int, default=2)
    t.add_argument("--q", type=int, default=1)
    t.add_argument("--samples", type=int)
    t.add_argument("--matrices", help="JSON list of matrices, each a list of [row, col, x]")
    t.set_defaults(func=cmd_trace)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except DihedraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, Report):
        text = result.to_json()
        status = 0 if result.ok else 1
    else:
        text = json.dumps(_plain(result), indent=2, sort_keys=True, ensure_ascii=False)
        status = 0
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status
