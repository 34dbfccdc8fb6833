"""Command-line front end.

Subcommands: gen, cover, verify, exact, frs, staircase, bollobas,
bollobas-verify, bench.  Exit codes: 0 success/valid certificate,
1 invalid certificate, 2 precondition failure (e.g. a claw witness),
3 search budget exhausted, 4 I/O or malformed input.

Seeds come from --seed, falling back to the LCC_SEED environment
variable, falling back to 0; all outputs are canonical JSON/CSV, so a
fixed command, seed and input reproduce byte-identical files.  Cover
commands re-verify their output before writing and report stats
(valency, max degree, the relevant bound) alongside.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

from . import generators, intervals
from .clawfree import clawfree_cover
from .errors import (
    BudgetExhaustedError,
    ClawError,
    InfeasibleBudgetError,
    LccError,
    MalformedInputError,
    PreconditionError,
)
from .exact import SearchBudget, exact_lcc
from .graphs import (
    CliqueCovering,
    Graph,
    IntersectionRepresentation,
    verify_covering,
)
from .jsonio import canonical_dumps, read_json, sha256_file, write_json
from .rectcover import (
    RectCovering,
    f_closed,
    lrb_upper,
    rect_to_clique_cover,
    staircase_cover,
    verify_rect_cover,
)
from .setfam import SetPairFamily, covering_to_family, verify_family

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("LCC_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise MalformedInputError(f"LCC_SEED={env!r} is not an integer") from exc
    return 0


def _report(args, *, outputs, stats, seed=None, started=None):
    rep = {
        "command": " ".join(sys.argv[1:]),
        "input_sha256": sha256_file(args.infile) if getattr(args, "infile", None) else "",
        "outputs": outputs,
        "stats": stats,
        "seed": seed,
        "wall_time_s": round(time.perf_counter() - started, 6) if started else 0.0,
    }
    sys.stdout.write(canonical_dumps(rep))


def cmd_gen(args) -> int:
    seed = _seed(args)
    fam = args.family
    if fam == "knabla":
        obj = generators.gen_k_nabla(args.n).to_json_obj()
    elif fam == "staircase-bipartite":
        obj = generators.gen_staircase_bipartite(args.n).to_json_obj()
    elif fam == "multipartite":
        sizes = [int(x) for x in args.parts.split(",") if x]
        obj = generators.gen_complete_multipartite(sizes).to_json_obj()
    elif fam == "kneser":
        obj = generators.gen_kneser(args.n, args.k).to_json_obj()
    elif fam == "linegraph":
        hyper = read_json(args.infile)
        obj = generators.gen_line_graph(hyper["edges"]).to_json_obj()
    elif fam == "cobipartite":
        obj = generators.gen_random_cobipartite(args.n, args.p, seed).to_json_obj()
    elif fam == "interval":
        model = generators.gen_random_linear_interval(args.points, args.intervals, seed)
        obj = model.to_json_obj()
    elif fam == "knabla-interval":
        obj = generators.knabla_interval_model(args.n).to_json_obj()
    elif fam == "complement":
        g = Graph.from_json_obj(read_json(args.infile))
        obj = generators.complement(g).to_json_obj()
    else:  # pragma: no cover - argparse restricts choices
        raise MalformedInputError(f"unknown family {fam}")
    write_json(args.out, obj)
    if args.dot:
        if "edges" not in obj:
            raise MalformedInputError("--dot applies to graph families only")
        g = Graph.from_json_obj(obj)
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(g.to_dot())
    return EXIT_OK


def _knabla_order(g: Graph) -> int:
    if g.n % 2 or g.n == 0:
        raise PreconditionError("staircase method expects a staircase-join graph")
    n = g.n // 2
    if g != generators.gen_k_nabla(n):
        raise PreconditionError("staircase method expects exactly gen_k_nabla(n)")
    return n


def cmd_cover(args) -> int:
    started = time.perf_counter()
    seed = _seed(args)
    budget = SearchBudget(max_nodes=args.budget) if args.budget else SearchBudget()
    stats: dict = {}
    if args.method == "interval":
        model = intervals.IntervalModel.from_json_obj(read_json(args.infile))
        cov = intervals.interval_cover(model)
        g = cov.host
    else:
        g = Graph.from_json_obj(read_json(args.infile))
        if args.method == "exact":
            res = exact_lcc(g, budget)
            if not res.proved:
                raise BudgetExhaustedError(
                    f"budget exhausted; best unproven upper bound {res.value}",
                    best=res.value,
                )
            cov = res.covering
            stats["lcc"] = res.value
            stats["proved"] = res.proved
        elif args.method == "clawfree":
            cov = clawfree_cover(g, seed)
        elif args.method == "staircase":
            n = _knabla_order(g)
            cov = rect_to_clique_cover(n, staircase_cover(n, (lrb_upper(n), lrb_upper(n))))
        else:  # pragma: no cover
            raise MalformedInputError(f"unknown method {args.method}")
    rep = verify_covering(g, cov)
    if not rep.valid:
        sys.stdout.write(canonical_dumps({"valid": False, "report": _cov_report(rep)}))
        return EXIT_INVALID
    delta = g.max_degree()
    stats.update({"delta": delta, "valency": rep.max_valency})
    if args.method == "clawfree":
        stats["ratio"] = round(rep.max_valency * math.log2(delta + 2) / delta, 6) if delta else 0.0
    if args.method == "interval":
        stats["bound"] = "log2(D)+0.5*log2log2(D)+4"
    write_json(args.out, cov.to_json_obj())
    _report(args, outputs=[args.out], stats=stats, seed=seed, started=started)
    return EXIT_OK


def _cov_report(rep) -> dict:
    return {
        "valid": rep.valid,
        "max_valency": rep.max_valency,
        "uncovered_edges": [list(e) for e in rep.uncovered_edges],
        "non_clique_indices": list(rep.non_clique_indices),
    }


def cmd_verify(args) -> int:
    kind = args.kind
    if kind == "covering":
        g = Graph.from_json_obj(read_json(args.graph))
        cov = CliqueCovering.from_json_obj(g, read_json(args.infile))
        rep = verify_covering(g, cov)
        sys.stdout.write(canonical_dumps(_cov_report(rep)))
        return EXIT_OK if rep.valid else EXIT_INVALID
    if kind == "rectcover":
        cov = RectCovering.from_json_obj(read_json(args.infile))
        rep = verify_rect_cover(cov)
        obj = {
            "valid": rep.valid,
            "max_row_valency": rep.max_row_valency,
            "max_col_valency": rep.max_col_valency,
            "uncovered": [list(c) for c in rep.uncovered],
            "illegal_rects": list(rep.illegal_rects),
        }
        sys.stdout.write(canonical_dumps(obj))
        return EXIT_OK if rep.valid else EXIT_INVALID
    if kind == "family":
        fam = SetPairFamily.from_json_obj(read_json(args.infile))
        rep = verify_family(fam)
        obj = {
            "valid": rep.valid,
            "size_violations": list(rep.size_violations),
            "skew_violations": [list(p) for p in rep.skew_violations],
            "over_capacity": rep.over_capacity,
        }
        sys.stdout.write(canonical_dumps(obj))
        return EXIT_OK if rep.valid else EXIT_INVALID
    if kind == "representation":
        g = Graph.from_json_obj(read_json(args.graph))
        rp = IntersectionRepresentation.from_json_obj(read_json(args.infile))
        offender = rp.check_against(g)
        obj = {"valid": offender is None, "offending_pair": list(offender) if offender else None}
        sys.stdout.write(canonical_dumps(obj))
        return EXIT_OK if offender is None else EXIT_INVALID
    raise MalformedInputError(f"unknown kind {kind}")  # pragma: no cover


def cmd_exact(args) -> int:
    started = time.perf_counter()
    g = Graph.from_json_obj(read_json(args.infile))
    budget = SearchBudget(max_nodes=args.budget) if args.budget else SearchBudget()
    res = exact_lcc(g, budget)
    obj = {
        "lcc": res.value,
        "covering": res.covering.to_json_obj(),
        "proved": res.proved,
        "nodes": res.nodes,
        "wall_time_s": round(time.perf_counter() - started, 6),
    }
    sys.stdout.write(canonical_dumps(obj))
    return EXIT_OK if res.proved else EXIT_BUDGET


def cmd_frs(args) -> int:
    lines = ["r,s,f"]
    for r in range(1, args.max + 1):
        for s in range(1, args.max + 1):
            lines.append(f"{r},{s},{f_closed(r, s)}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_staircase(args) -> int:
    n = args.n
    r = args.r if args.r else lrb_upper(n)
    s = args.s if args.s else r
    cov = staircase_cover(n, (r, s))
    write_json(args.out, cov.to_json_obj())
    return EXIT_OK


def cmd_bollobas(args) -> int:
    size = f_closed(args.r, args.s)
    cov = staircase_cover(size, (args.r, args.s))
    fam = covering_to_family(cov, (args.r, args.s))
    write_json(args.out, fam.to_json_obj())
    return EXIT_OK


def cmd_bollobas_verify(args) -> int:
    fam = SetPairFamily.from_json_obj(read_json(args.infile))
    rep = verify_family(fam)
    obj = {
        "valid": rep.valid,
        "size": len(fam),
        "capacity": f_closed(fam.r, fam.s),
        "size_violations": list(rep.size_violations),
        "skew_violations": [list(p) for p in rep.skew_violations],
    }
    sys.stdout.write(canonical_dumps(obj))
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_bench(args) -> int:
    seed = _seed(args)
    rows = []
    if args.family == "frs":
        lines = ["r,s,f"]
        for r in range(1, args.max + 1):
            for s in range(1, args.max + 1):
                lines.append(f"{r},{s},{f_closed(r, s)}")
        _write_text(args.out, "\n".join(lines) + "\n")
        return EXIT_OK
    ns = [int(x) for x in args.ns.split(",") if x] if args.ns else []
    header = "family,n,delta,method,valency,bound,seconds"
    for n in ns:
        t0 = time.perf_counter()
        if args.family == "knabla":
            g = generators.gen_k_nabla(n)
            cov = rect_to_clique_cover(n, staircase_cover(n, (lrb_upper(n), lrb_upper(n))))
            method, bound = "staircase", lrb_upper(n) + 1
        elif args.family == "cobipartite":
            g = generators.gen_random_cobipartite(n, 0.5, seed + n)
            cov = clawfree_cover(g, seed + n)
            d = g.max_degree()
            method, bound = "clawfree", round(8 * d / math.log2(d + 2), 3) if d else 0
        elif args.family == "linegraph":
            hyper = generators.gen_random_multigraph(max(3, n // 3), n, seed + n)
            g = generators.gen_line_graph(hyper)
            cov = clawfree_cover(g, seed + n)
            d = g.max_degree()
            method, bound = "clawfree", round(8 * d / math.log2(d + 2), 3) if d else 0
        elif args.family == "interval":
            model = generators.gen_random_linear_interval(n, max(2, n // 4), seed + n)
            cov = intervals.interval_cover(model)
            g = cov.host
            d = g.max_degree()
            bound = round(math.log2(d) + 0.5 * math.log2(math.log2(d)) + 4, 3) if d >= 2 else 1
            method = "interval"
        else:  # pragma: no cover
            raise MalformedInputError(f"unknown family {args.family}")
        rep = verify_covering(g, cov)
        if not rep.valid:
            raise PreconditionError(f"bench produced an invalid covering at n={n}")
        secs = round(time.perf_counter() - t0, 6)
        rows.append(
            f"{args.family},{n},{g.max_degree()},{method},{rep.max_valency},{bound},{secs}"
        )
    _write_text(args.out, "\n".join([header] + rows) + "\n")
    return EXIT_OK


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcc", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a graph or interval model")
    g.add_argument(
        "family",
        choices=[
            "knabla",
            "staircase-bipartite",
            "multipartite",
            "kneser",
            "linegraph",
            "cobipartite",
            "interval",
            "knabla-interval",
            "complement",
        ],
    )
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--k", type=int, default=0)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--parts", type=str, default="")
    g.add_argument("--points", type=int, default=0)
    g.add_argument("--intervals", type=int, default=0)
    g.add_argument("--in", dest="infile", type=str, default=None)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--out", type=str, default="-")
    g.add_argument("--dot", type=str, default=None)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("cover", help="compute a verified clique covering")
    c.add_argument("--method", choices=["exact", "clawfree", "interval", "staircase"], required=True)
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--out", type=str, default="-")
    c.set_defaults(func=cmd_cover)

    v = sub.add_parser("verify", help="verify a certificate file")
    v.add_argument("--kind", choices=["covering", "rectcover", "family", "representation"], required=True)
    v.add_argument("--graph", type=str, default=None)
    v.add_argument("--in", dest="infile", required=True)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="exact minimum covering valency")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--budget", type=int, default=None)
    e.set_defaults(func=cmd_exact)

    f = sub.add_parser("frs", help="emit the f(r,s) table as CSV")
    f.add_argument("--max", type=int, default=25)
    f.add_argument("--out", type=str, default="-")
    f.set_defaults(func=cmd_frs)

    s = sub.add_parser("staircase", help="staircase rectangle covering of T_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=None)
    s.add_argument("--s", type=int, default=None)
    s.add_argument("--out", type=str, default="-")
    s.set_defaults(func=cmd_staircase)

    b = sub.add_parser("bollobas", help="emit the extremal skew family at (r,s)")
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--out", type=str, default="-")
    b.set_defaults(func=cmd_bollobas)

    bv = sub.add_parser("bollobas-verify", help="verify a skew family file")
    bv.add_argument("--in", dest="infile", required=True)
    bv.set_defaults(func=cmd_bollobas_verify)

    be = sub.add_parser("bench", help="benchmark sweeps as CSV")
    be.add_argument("--family", choices=["frs", "knabla", "cobipartite", "linegraph", "interval"], required=True)
    be.add_argument("--ns", type=str, default="")
    be.add_argument("--max", type=int, default=25)
    be.add_argument("--seed", type=int, default=None)
    be.add_argument("--out", type=str, default="-")
    be.set_defaults(func=cmd_bench)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhaustedError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ClawError, PreconditionError, InfeasibleBudgetError) as exc:
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(f"precondition failed: {exc} (witness: {witness})", file=sys.stderr)
        else:
            print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except LccError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
