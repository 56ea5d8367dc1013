"""Reading and writing the line-oriented ``.pg`` graph format, plus DOT export.

::

    # golden mean shift
    alphabet 0 1
    vertex v0 v1
    edge v0 v0 0
    edge v0 v1 1
    edge v1 v0 0
    start v0

A file without a ``start`` line describes a bare labeled graph ("sofic mode").
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, PathSetError
from .graph_core import TOKEN_RE, Alphabet, LabeledGraph, PointedGraph, build_graph


@dataclass(frozen=True)
class PgFile:
    graph: LabeledGraph
    start: int | None
    duplicates: int = 0

    @property
    def pointed(self) -> PointedGraph | None:
        return None if self.start is None else PointedGraph(self.graph, self.start)


def parse_pg(text: str, dedup: bool = True) -> PgFile:
    alphabet = None
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    start = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        for tok in args:
            if not TOKEN_RE.match(tok):
                raise ParseError(f"bad token {tok!r}", lineno)
        if alphabet is None and head != "alphabet":
            raise ParseError("first directive must be 'alphabet'", lineno)
        if head == "alphabet":
            if alphabet is not None:
                raise ParseError("more than one 'alphabet' line", lineno)
            if not args:
                raise ParseError("alphabet needs at least one symbol", lineno)
            try:
                alphabet = Alphabet(tuple(args))
            except (ValueError, PathSetError) as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "vertex":
            if not args:
                raise ParseError("'vertex' needs at least one name", lineno)
            vertices.extend(args)
        elif head == "edge":
            if len(args) != 3:
                raise ParseError("'edge' takes exactly <from> <to> <sym>", lineno)
            edges.append((args[0], args[1], args[2]))
        elif head == "start":
            if start is not None:
                raise ParseError("more than one 'start' line", lineno)
            if len(args) != 1:
                raise ParseError("'start' takes exactly one vertex", lineno)
            start = args[0]
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if alphabet is None:
        raise ParseError("missing 'alphabet' line")
    if not vertices:
        raise ParseError("no vertices declared")
    try:
        graph, dups = build_graph(alphabet, vertices, edges, dedup=dedup)
    except PathSetError as exc:
        raise ParseError(str(exc)) from None
    if start is not None:
        if start not in graph.name_index:
            raise ParseError(f"start vertex {start!r} is not declared")
        start_idx = graph.name_index[start]
    else:
        start_idx = None
    return PgFile(graph, start_idx, dups)


def format_pg(graph: LabeledGraph, start: int | None = None, comment: str | None = None) -> str:
    """Serialize; edges are emitted sorted by (source, symbol order, target)."""
    idx = graph.alphabet.index
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("alphabet " + " ".join(graph.alphabet.symbols))
    lines.append("vertex " + " ".join(graph.vertex_names))
    names = graph.vertex_names
    for s, d, lab in sorted(graph.edges, key=lambda e: (e[0], idx[e[2]], e[1])):
        lines.append(f"edge {names[s]} {names[d]} {lab}")
    if start is not None:
        lines.append(f"start {names[start]}")
    return "\n".join(lines) + "\n"


def format_pointed(p: PointedGraph, comment: str | None = None) -> str:
    if p.empty:
        note = "empty path set"
        comment = f"{comment}\n{note}" if comment else note
    return format_pg(p.graph, p.start, comment)


def to_dot(graph: LabeledGraph, start: int | None = None, name: str = "G") -> str:
    def q(s):
        return '"' + s.replace('"', '\\"') + '"'

    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for i, v in enumerate(graph.vertex_names):
        shape = "doublecircle" if i == start else "circle"
        lines.append(f"  {q(v)} [shape={shape}];")
    idx = graph.alphabet.index
    for s, d, lab in sorted(graph.edges, key=lambda e: (e[0], idx[e[2]], e[1])):
        lines.append(f"  {q(graph.vertex_names[s])} -> {q(graph.vertex_names[d])} [label={q(lab)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
