"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import asymptotics, measures, orbits
from .digraph import cayley_digraph, girth_bfs, girth_formula_cyclic, girth_formula_literal, vertex_set
from .errors import InvalidArgumentError, ResourceLimitError
from .extended import ext_to_json
from .groups import GeneratingSet, Group, make_cyclic, orbit_count, parse_generators, parse_group
from .parallel import default_threads
from .spread import Finite, run

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"1-6"`` or ``"1,3,5"`` (pieces may mix)."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        lo, sep, hi = piece.partition("-")
        try:
            if sep:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(piece))
        except ValueError:
            raise InvalidArgumentError(f"bad range {text!r}") from None
    return out


def _load(args) -> tuple[Group, GeneratingSet]:
    group = parse_group(args.group)
    gens = parse_generators(group, args.gens)
    if gens.has_identity and not args.allow_identity:
        raise InvalidArgumentError("identity generator given; pass --allow-identity to permit loops")
    return group, gens


def _cell(value) -> str:
    # Flat lists join with spaces, lists of lists (traces) with semicolons.
    if isinstance(value, list):
        sep = ";" if any(isinstance(v, list) for v in value) else " "
        return sep.join(_cell(v) for v in value)
    return "" if value is None else str(value)


def render_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(record))
        writer.writerow([_cell(v) for v in record.values()])
        return buf.getvalue().rstrip("\n")
    lines = ["| key | value |", "|---|---|"]
    lines += [f"| {k} | {_cell(v)} |" for k, v in record.items()]
    return "\n".join(lines)


def cmd_spread(args) -> str:
    group, gens = _load(args)
    d = cayley_digraph(group, gens)
    seed = vertex_set(group.index(tok) for tok in args.active.split(",") if tok.strip())
    result, trace = run(d, seed, args.t)
    record = {
        "group": group.name,
        "generators": gens.labels(group),
        "t": args.t,
        "active": d.labels_of(seed),
        "d": result.steps if isinstance(result, Finite) else "inf",
        "stuck": None if isinstance(result, Finite) else d.labels_of(result.active),
    }
    if args.trace:
        record["trace"] = json.loads(trace.to_json(d))
    return render_record(record, args.format)


def cmd_measures(args) -> str:
    group, gens = _load(args)
    d = cayley_digraph(group, gens)
    s_range = parse_range(args.s) if args.s else None
    t_range = parse_range(args.t) if args.t else None
    table = measures.measure_table(d, s_range, t_range, max_n=args.max_n)
    if args.format == "json":
        return table.to_json()
    if args.format == "csv":
        return table.to_csv().rstrip("\n")
    return table.to_markdown().rstrip("\n")


def cmd_table1(args) -> str:
    hs = parse_range(args.h) if args.h else None
    reports = measures.table1(
        args.n, hs, include_identity=args.allow_identity, max_n=args.max_n, threads=args.threads
    )
    if args.format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2)
    if args.format == "csv":
        return measures.table1_csv(reports).rstrip("\n")
    return measures.table1_markdown(reports).rstrip("\n")


def _formula_exponents(group: Group, gens: GeneratingSet) -> tuple[int, list[int]]:
    n = group.order
    prime = n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))
    if not (group.cyclic and prime and 1 in gens.elements and not gens.has_identity):
        raise InvalidArgumentError("girth formula needs C_p with p prime, a in H and no identity")
    return n, [k for k in gens.elements if k != 1]


def cmd_girth(args) -> str:
    group, gens = _load(args)
    record: dict = {"group": group.name, "generators": gens.labels(group)}
    if args.method in ("formula", "both"):
        p, ks = _formula_exponents(group, gens)
        record["formula"] = girth_formula_cyclic(p, ks)
        literal = girth_formula_literal(p, ks)
        record["formula_literal"] = literal
        record["literal_agrees"] = literal == record["formula"]
    if args.method in ("bfs", "both"):
        record["bfs"] = ext_to_json(girth_bfs(cayley_digraph(group, gens)))
    if args.method == "both":
        record["match"] = "MATCH" if record["bfs"] == record["formula"] else "MISMATCH"
    return render_record(record, args.format)


def cmd_orbits(args) -> str:
    if not 0 <= args.k <= args.n:
        raise InvalidArgumentError(f"k must lie in 0..{args.n}")
    reps = orbits.enumerate_path_reps(args.n, args.k, dedup=args.dedup)
    count = orbit_count(make_cyclic(args.n), args.k) if args.n >= 1 else 1
    lines = [str(r) for r in reps]
    if args.format == "text":
        if len(reps) != count:
            print(f"note: {len(reps)} paths for {count} orbits (gcd(n, k) > 1); use --dedup",
                  file=sys.stderr)
        return "\n".join(lines)
    record = {
        "n": args.n,
        "k": args.k,
        "representatives": lines,
        "path_count": len(reps),
        "orbit_count": count,
        "overcount": len(reps) != count,
    }
    if args.format == "csv":
        return "\n".join(["representative"] + lines)
    return render_record(record, args.format)


def cmd_asymptotics(args) -> str:
    if args.model == "cayley" and args.h is None:
        raise InvalidArgumentError("cayley model needs --h")
    if args.model == "random" and args.p is None:
        raise InvalidArgumentError("random model needs --p")
    cfg = asymptotics.TrialConfig(
        model=args.model,
        n=args.n,
        s=args.s,
        t=args.t,
        trials=args.trials,
        seed=args.seed,
        h=args.h if args.model == "cayley" else None,
        p=args.p if args.model == "random" else None,
        max_subsets=args.max_subsets,
        max_n=args.max_n,
    )
    if cfg.model == "cayley":
        report = asymptotics.sample_cayley(cfg, threads=args.threads)
    else:
        report = asymptotics.sample_random_digraph(cfg, threads=args.threads)
    return render_record(report.to_dict(), args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleysync", description="Synchrony measures of threshold activation on Cayley digraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("json", "csv", "markdown"), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--threads", type=int, default=default_threads())

    def group_args(p: argparse.ArgumentParser):
        p.add_argument("group", help='"C<n>" or a Cayley-table file')
        p.add_argument("gens", help='comma-separated labels, e.g. "a,a2,a3"')
        p.add_argument("--allow-identity", action="store_true")

    p = sub.add_parser("spread", help="run the activation process from one seed set")
    group_args(p)
    p.add_argument("--active", required=True, help="comma-separated element labels")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    common(p)
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("measures", help="exact p_st, v_st, d_st table")
    group_args(p)
    p.add_argument("--s")
    p.add_argument("--t")
    p.add_argument("--max-n", type=int, default=measures.DEFAULT_MAX_N)
    common(p)
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("table1", help="smallest d_st over generating sets of C_n")
    p.add_argument("n", type=int)
    p.add_argument("--h")
    p.add_argument("--allow-identity", action="store_true")
    p.add_argument("--max-n", type=int, default=measures.DEFAULT_MAX_N)
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("girth", help="girth by BFS and/or the cyclic closed form")
    group_args(p)
    p.add_argument("--method", choices=("bfs", "formula", "both"), default="bfs")
    common(p)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("orbits", help="path representatives of k-subset rotation orbits")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--dedup", action="store_true")
    common(p, formats=("text", "json", "csv", "markdown"), default="text")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("asymptotics", help="Monte Carlo d_st <= 2 experiments")
    p.add_argument("model", choices=asymptotics.MODELS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-subsets", type=int, default=asymptotics.DEFAULT_MAX_SUBSETS)
    p.add_argument("--max-n", type=int, default=asymptotics.DEFAULT_MAX_N)
    common(p)
    p.set_defaults(func=cmd_asymptotics)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidArgumentError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
