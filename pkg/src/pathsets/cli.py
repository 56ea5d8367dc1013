"""Command-line interface: ``pathsets <subcommand> ...``.

Graph inputs are ``.pg`` files (``-`` or omitted reads stdin).  A file without
a ``start`` line is read in sofic mode: it stands for the one-sided sofic shift
of the graph, presented as a path set by the subset construction from the full
vertex set.

Exit codes: 0 success / yes, 1 a "no" answer (eq, subset, invariant, member),
2 usage, parse, or contract errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import canonical as C
from . import constructions as K
from . import corpus
from . import entropy as E
from .errors import PathSetError
from .graph_core import PointedGraph, prune
from .pgformat import PgFile, format_pg, format_pointed, parse_pg, to_dot


class CliError(Exception):
    pass


def _read(path: str, strict: bool) -> PgFile:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path, encoding="latin-1") as fh:
            text = fh.read()
    pg = parse_pg(text, dedup=not strict)
    if pg.duplicates:
        print(f"warning: collapsed {pg.duplicates} duplicate edge(s)", file=sys.stderr)
    return pg


def _pathset(pg: PgFile) -> PointedGraph:
    if pg.start is None:
        return K.determinize_sofic(pg.graph)
    return PointedGraph(pg.graph, pg.start)


def _load(args, attr: str = "file") -> PointedGraph:
    return _pathset(_read(getattr(args, attr), args.strict))


def _graph_json(p: PointedGraph) -> dict:
    g = p.graph
    return {
        "alphabet": list(g.alphabet.symbols),
        "vertices": list(g.vertex_names),
        "start": None if p.start is None else g.vertex_names[p.start],
        "empty": p.empty,
        "states": g.vertex_count,
        "edges": len(g.edges),
        "edge_list": [[g.vertex_names[s], g.vertex_names[d], lab] for s, d, lab in g.edges],
    }


def _emit_graph(args, p: PointedGraph, comment: str | None = None, sofic: bool = False) -> None:
    start = None if sofic else p.start
    if args.format == "json":
        d = _graph_json(p)
        if sofic:
            d["start"] = None
        print(json.dumps(d, indent=2))
    elif args.format == "dot":
        sys.stdout.write(to_dot(p.graph, start))
    elif sofic:
        sys.stdout.write(format_pg(p.graph, None, comment))
    else:
        sys.stdout.write(format_pointed(p, comment))


def _emit(args, text: str, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _symbols(spec: str, alphabet) -> tuple[str, ...]:
    """Parse a word given as comma/space-separated tokens, or packed single-char symbols."""
    spec = spec.strip()
    if not spec:
        return ()
    if "," in spec or " " in spec:
        return tuple(t for t in spec.replace(",", " ").split() if t)
    if spec in alphabet:
        return (spec,)
    if all(len(s) == 1 for s in alphabet.symbols):
        return tuple(spec)
    return (spec,)


# -- subcommands -------------------------------------------------------------


def cmd_validate(args):
    pg = _read(args.file, args.strict)
    g = pg.graph
    mode = "sofic mode (no start)" if pg.start is None else f"start {g.vertex_names[pg.start]}"
    text = (
        f"ok: {g.vertex_count} vertices, {len(g.edges)} edges, "
        f"{g.alphabet.size} symbols, {mode}; {pg.duplicates} duplicate edge(s) collapsed"
    )
    _emit(args, text, {"ok": True, "states": g.vertex_count, "edges": len(g.edges),
                       "duplicates": pg.duplicates, "sofic": pg.start is None})
    return 0


def cmd_prune(args):
    pg = _read(args.file, args.strict)
    if pg.start is None:
        core = K.sofic_core(pg.graph)
        if core is None:
            _emit_graph(args, PointedGraph.empty_over(pg.graph.alphabet))
        else:
            _emit_graph(args, PointedGraph(core, 0), sofic=True)
        return 0
    _emit_graph(args, prune(PointedGraph(pg.graph, pg.start)))
    return 0


def cmd_determinize(args):
    _emit_graph(args, K.determinize(_load(args)))
    return 0


def cmd_canon(args):
    c = C.canonicalize(_load(args))
    print(f"states: {c.state_count}" + (" (empty path set)" if c.empty else ""), file=sys.stderr)
    if args.format == "json":
        print(json.dumps(c.as_dict(), indent=2))
    else:
        _emit_graph(args, c.inner)
    return 0


def _binary(args):
    return _load(args, "file1"), _load(args, "file2")


def cmd_eq(args):
    ok = C.equals(*_binary(args))
    _emit(args, "equal" if ok else "not-equal", {"equal": ok})
    return 0 if ok else 1


def cmd_subset(args):
    ok = C.is_subset(*_binary(args))
    _emit(args, "subset" if ok else "not-subset", {"subset": ok})
    return 0 if ok else 1


def cmd_product(args):
    _emit_graph(args, K.label_product(*_binary(args)))
    return 0


def cmd_union(args):
    _emit_graph(args, K.union(*_binary(args)))
    return 0


def cmd_shift(args):
    if args.count < 0:
        raise CliError("--count must be non-negative")
    _emit_graph(args, K.shift(_load(args), args.count))
    return 0


def cmd_closure(args):
    _emit_graph(args, K.shift_closure(_load(args)))
    return 0


def cmd_decimate(args):
    if args.j < 0 or args.m < 1:
        raise CliError("need -j >= 0 and -m >= 1")
    _emit_graph(args, K.decimate(_load(args), args.j, args.m))
    return 0


def cmd_invariant(args):
    p = _load(args)
    ok = C.is_shift_invariant(p)
    empty = C.canonicalize(p).empty
    text = "sofic" if ok else "not-shift-invariant"
    if empty:
        text += " (empty path set)"
    _emit(args, text, {"shift_invariant": ok, "empty": empty})
    return 0 if ok else 1


def cmd_member(args):
    p = _load(args)
    per = _symbols(args.per, p.alphabet)
    if not per:
        raise CliError("--per must be a non-empty word")
    w = C.EventuallyPeriodicWord(_symbols(args.pre, p.alphabet), per)
    ok = C.is_member(p, w)
    _emit(args, "member" if ok else "not-member", {"member": ok, "word": str(w)})
    return 0 if ok else 1


def cmd_witness(args):
    w = C.find_eventually_periodic(_load(args))
    _emit(args, str(w), {"preperiod": list(w.preperiod), "period": list(w.period)})
    return 0


def cmd_follower(args):
    p = _load(args)
    _emit_graph(args, C.follower_of_word(p, _symbols(args.word, p.alphabet)))
    return 0


def cmd_embed(args):
    g = K.follower_embedding(_load(args), args.loop, args.new)
    _emit_graph(args, PointedGraph(g, 0), sofic=True)
    return 0


def cmd_closure_sets(args):
    fam = C.closure_sets(_load(args))
    counts = [m.state_count for m in fam.members]
    text = f"family size: {len(fam)}\nmember states: {' '.join(map(str, counts))}"
    data = {
        "size": len(fam),
        "states": counts,
        "members": [m.as_dict() for m in fam.members],
        "shift": {str(i): t for i, t in fam.shift_images.items()},
        "transitions": [[i, j, t] for (i, j), t in sorted(fam.transitions.items())],
    }
    _emit(args, text, data)
    return 0


def cmd_kernel(args):
    if args.m < 2 or args.budget < 1:
        raise CliError("need -m >= 2 and --budget >= 1")
    rep = C.kernel(_load(args), args.m, args.budget)
    verdict = rep.verdict.replace("_", "-")
    lines = [f"members: {len(rep.members)}", f"verdict: {verdict}"]
    for c, tr in zip(rep.members, rep.generator_trace):
        lines.append(f"  {c.state_count:4d} states  via {' '.join(tr) or 'identity'}")
    data = {
        "members": len(rep.members),
        "verdict": verdict,
        "states": [c.state_count for c in rep.members],
        "traces": [list(t) for t in rep.generator_trace],
    }
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_entropy(args):
    p = _load(args)
    if C.canonicalize(p).empty:
        _emit(args, "empty path set\nh_path: -inf", {"empty": True, "lambda": 0.0, "h_path": None})
        return 0
    rep = E.entropy_report(p, args.depth, args.tol)
    lines = [
        f"lambda: {rep.lam:.10f}",
        f"h_path: {rep.h_path:.10f}  (natural log)",
        f"irreducible: {'yes' if rep.irreducible else 'no'}",
        f"canonical states: {rep.states}",
    ]
    lines += [f"slope n={n}: ln N^I_n / n = {s:.10f}" for n, s in rep.finite_slopes]
    lines.append(f"radius k: {rep.series.radius}")
    lines.append(f"sandwich N^I_n <= N_n <= N^I_(n+k): {'ok' if rep.series.sandwich_ok else 'VIOLATED'}")
    lines.append(
        f"sandwich N^I_n <= N_n <= (k+1) N^I_(n+k): {'ok' if rep.series.weak_sandwich_ok else 'VIOLATED'}"
    )
    data = rep.as_dict()
    data["empty"] = False
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_blocks(args):
    if args.n < 1:
        raise CliError("-n must be positive")
    p = _load(args)
    if C.canonicalize(p).empty:
        _emit(args, "empty path set: all counts 0", {"empty": True, "counts": {}})
        return 0
    s = E.block_count_series(p, args.n)
    lines = [f"radius k: {s.radius}", f"{'n':>4} {'N^I_n':>20} {'N_n':>20}"]
    for n, (a, b) in enumerate(zip(s.initial_counts, s.anywhere_counts), 1):
        lines.append(f"{n:>4} {a:>20} {b:>20}")
    data = {
        "radius": s.radius,
        "counts": {"initial": list(s.initial_counts), "anywhere": list(s.anywhere_counts)},
        "sandwich_ok": s.sandwich_ok,
    }
    _emit(args, "\n".join(lines), data)
    return 0


GEN_USAGE = "gen {prefix G J | cycle | golden | fig4 | blowup N | random SEED STATES G DENSITY}"


def cmd_gen(args):
    kind, rest = args.kind, args.params
    try:
        if kind == "prefix" and len(rest) == 2:
            p = corpus.gen_prefix_example(int(rest[0]), int(rest[1]))
        elif kind == "cycle" and not rest:
            p = PointedGraph(corpus.gen_cycle(), 0)
        elif kind == "golden" and not rest:
            p = corpus.gen_golden()
        elif kind == "fig4" and not rest:
            _emit_graph(args, PointedGraph(corpus.gen_fig4(), 0), sofic=True)
            return 0
        elif kind == "blowup" and len(rest) == 1:
            _emit_graph(args, PointedGraph(corpus.gen_blowup(int(rest[0])), 0), sofic=True)
            return 0
        elif kind == "random" and len(rest) == 4:
            p = corpus.gen_random(int(rest[0]), int(rest[1]), int(rest[2]), float(rest[3]))
        else:
            raise CliError(f"usage: {GEN_USAGE}")
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit_graph(args, p)
    return 0


def cmd_export_dot(args):
    pg = _read(args.file, args.strict)
    sys.stdout.write(to_dot(pg.graph, pg.start))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--strict", action="store_true", help="reject duplicate edges instead of collapsing them")

    ap = argparse.ArgumentParser(
        prog="pathsets",
        description="Algebra of path sets: closure operations, canonical forms, entropy. "
        "Entropies use the natural logarithm.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, files=1):
        sp = sub.add_parser(name, parents=[common], help=help)
        if files == 1:
            sp.add_argument("file", nargs="?", default="-")
        elif files == 2:
            sp.add_argument("file1")
            sp.add_argument("file2")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a .pg file")
    add("prune", cmd_prune, "prune to reachable, non-stranded vertices")
    add("determinize", cmd_determinize, "subset construction (sofic mode without start)")
    add("canon", cmd_canon, "canonical minimal right-resolving presentation")
    add("eq", cmd_eq, "path-set equality (exit 0 equal, 1 not)", files=2)
    add("subset", cmd_subset, "containment FILE1 <= FILE2 (exit 0/1)", files=2)
    add("product", cmd_product, "intersection via label product", files=2)
    add("union", cmd_union, "union", files=2)
    add("shift", cmd_shift, "shift image").add_argument("--count", type=int, default=1)
    add("closure", cmd_closure, "shift closure")
    sp = add("decimate", cmd_decimate, "decimation a_j a_(j+m) ...")
    sp.add_argument("-j", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    add("invariant", cmd_invariant, "shift-invariance test (exit 0 sofic, 1 not)")
    sp = add("member", cmd_member, "membership of PRE (PER)^inf")
    sp.add_argument("--pre", default="")
    sp.add_argument("--per", required=True)
    add("witness", cmd_witness, "an eventually periodic member")
    add("follower", cmd_follower, "follower set of a finite word").add_argument("--word", required=True)
    sp = add("embed", cmd_embed, "enlarged-alphabet follower embedding")
    sp.add_argument("--loop", required=True)
    sp.add_argument("--new", required=True)
    add("closure-sets", cmd_closure_sets, "family closed under shift and prefix-set meets")
    sp = add("kernel", cmd_kernel, "bounded m-kernel exploration")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--budget", type=int, default=64)
    sp = add("entropy", cmd_entropy, "spectral radius, path entropy, block-count checks")
    sp.add_argument("--depth", type=int, default=60)
    sp.add_argument("--tol", type=float, default=1e-6)
    add("blocks", cmd_blocks, "table of N^I_n and N_n").add_argument("-n", type=int, required=True)
    sp = add("gen", cmd_gen, GEN_USAGE, files=0)
    sp.add_argument("kind", choices=("prefix", "cycle", "golden", "fig4", "blowup", "random"))
    sp.add_argument("params", nargs="*")
    add("export-dot", cmd_export_dot, "DOT digraph, start double-circled")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PathSetError, CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
