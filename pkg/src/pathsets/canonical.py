"""Canonical forms and decision procedures for path sets.

Two pruned presentations present the same path set exactly when they have the
same prefix language: every finite walk extends forever and branching is
finite, so by König's lemma the path set is the set of sequences all of whose
prefixes label walks from the start.  The prefix language is prefix-closed and
regular, so its minimal deterministic automaton (all states accepting, missing
transitions rejecting) is unique up to renaming.  Renumbering states in BFS
order under the alphabet order removes the renaming, which makes structural
equality of ``CanonicalPresentation`` values a decision procedure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .constructions import (
    decimate,
    determinize,
    label_product,
    prefix_graph,
    shift,
    shift_closure,
    union_of_vertices,
)
from .errors import AlphabetMismatch, EmptyPathSet, UnknownLabel
from .graph_core import Alphabet, LabeledGraph, PointedGraph, prune

MISSING = -1


@dataclass(frozen=True)
class CanonicalPresentation:
    """Minimal right-resolving presentation, states renumbered in BFS order.

    ``table[q][k]`` is the successor of state ``q`` on the ``k``-th alphabet
    symbol, or ``MISSING``.  The start state is always 0.
    """

    alphabet: Alphabet
    table: tuple[tuple[int, ...], ...]
    empty: bool = False
    inner: PointedGraph = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.inner is None:
            object.__setattr__(self, "inner", self._build_inner())

    def _build_inner(self) -> PointedGraph:
        if self.empty:
            return PointedGraph.empty_over(self.alphabet)
        syms = self.alphabet.symbols
        edges = tuple(
            (q, t, syms[k]) for q, row in enumerate(self.table) for k, t in enumerate(row) if t != MISSING
        )
        names = tuple(f"q{i}" for i in range(len(self.table)))
        return PointedGraph(LabeledGraph(self.alphabet, names, edges), 0)

    @classmethod
    def empty_over(cls, alphabet: Alphabet) -> "CanonicalPresentation":
        return cls(alphabet, (), True)

    @property
    def state_count(self) -> int:
        return len(self.table)

    @property
    def edge_count(self) -> int:
        return sum(t != MISSING for row in self.table for t in row)

    def step(self, q: int, sym: str) -> int:
        return self.table[q][self.alphabet.index[sym]]

    def run(self, word: Sequence[str], q: int = 0) -> int:
        """State reached after reading ``word`` from ``q``; ``MISSING`` if it falls off."""
        if self.empty:
            return MISSING
        for sym in word:
            q = self.step(q, sym)
            if q == MISSING:
                return MISSING
        return q

    def from_state(self, q: int) -> "CanonicalPresentation":
        """Canonical form of the path set generated from state ``q``."""
        return minimize_table(self.alphabet, self.table, q)

    def as_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet.symbols),
            "empty": self.empty,
            "states": self.state_count,
            "edges": self.edge_count,
            "table": [list(row) for row in self.table],
        }


def _check_word(alphabet: Alphabet, word: Sequence[str]) -> tuple[str, ...]:
    word = tuple(str(s) for s in word)
    for s in word:
        if s not in alphabet:
            raise UnknownLabel(f"symbol {s!r} not in alphabet {alphabet.symbols}")
    return word


def minimize_table(
    alphabet: Alphabet, table: Sequence[Sequence[int]], start: int
) -> CanonicalPresentation:
    """Moore refinement + BFS renumbering of a deterministic table.

    Every state of ``table`` is assumed to have at least one exit (pruned).
    """
    # restrict to states reachable from start
    order = [start]
    seen = {start}
    for q in order:
        for t in table[q]:
            if t != MISSING and t not in seen:
                seen.add(t)
                order.append(t)
    cls = {q: 0 for q in order}
    n_classes = 1
    while True:
        sigs = {}
        new = {}
        for q in order:
            sig = (cls[q],) + tuple(MISSING if t == MISSING else cls[t] for t in table[q])
            new[q] = sigs.setdefault(sig, len(sigs))
        cls = new
        if len(sigs) == n_classes:
            break
        n_classes = len(sigs)
    # quotient, then BFS renumber from the start class in symbol order
    qtable = {}
    for q in order:
        qtable.setdefault(cls[q], tuple(MISSING if t == MISSING else cls[t] for t in table[q]))
    renum = {cls[start]: 0}
    bfs = [cls[start]]
    for c in bfs:
        for t in qtable[c]:
            if t != MISSING and t not in renum:
                renum[t] = len(bfs)
                bfs.append(t)
    out = tuple(tuple(MISSING if t == MISSING else renum[t] for t in qtable[c]) for c in bfs)
    return CanonicalPresentation(alphabet, out)


def _det_table(p: PointedGraph) -> tuple[tuple[int, ...], ...]:
    g = p.graph
    idx = g.alphabet.index
    table = [[MISSING] * g.alphabet.size for _ in range(g.vertex_count)]
    for s, d, lab in g.edges:
        table[s][idx[lab]] = d
    return tuple(tuple(r) for r in table)


def canonicalize(p: PointedGraph | CanonicalPresentation) -> CanonicalPresentation:
    if isinstance(p, CanonicalPresentation):
        return p
    d = determinize(p)
    if d.empty:
        return CanonicalPresentation.empty_over(p.alphabet)
    return minimize_table(d.graph.alphabet, _det_table(d), d.start)


def _pair(p1, p2) -> tuple[CanonicalPresentation, CanonicalPresentation]:
    if p1.alphabet != p2.alphabet:
        raise AlphabetMismatch(f"{p1.alphabet.symbols} vs {p2.alphabet.symbols}")
    return canonicalize(p1), canonicalize(p2)


def equals(p1, p2) -> bool:
    c1, c2 = _pair(p1, p2)
    return c1 == c2


def is_subset(p1, p2) -> bool:
    """Containment by synchronized walk over reachable state pairs."""
    c1, c2 = _pair(p1, p2)
    if c1.empty:
        return True
    if c2.empty:
        return False
    seen = {(0, 0)}
    queue = deque(seen)
    while queue:
        q1, q2 = queue.popleft()
        for t1, t2 in zip(c1.table[q1], c2.table[q2]):
            if t1 == MISSING:
                continue
            if t2 == MISSING:
                return False
            if (t1, t2) not in seen:
                seen.add((t1, t2))
                queue.append((t1, t2))
    return True


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    preperiod: tuple[str, ...]
    period: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be non-empty")

    def prefix(self, n: int) -> tuple[str, ...]:
        out = list(self.preperiod[:n])
        while len(out) < n:
            out.extend(self.period[: n - len(out)])
        return tuple(out)

    def __str__(self):
        return f"{' '.join(self.preperiod)}({' '.join(self.period)})^inf".lstrip()


def is_member(p, w: EventuallyPeriodicWord) -> bool:
    _check_word(p.alphabet, w.preperiod + w.period)
    c = canonicalize(p)
    q = c.run(w.preperiod)
    seen = set()
    while q != MISSING:
        if q in seen:
            return True
        seen.add(q)
        q = c.run(w.period, q)
    return False


def find_eventually_periodic(p: PointedGraph) -> EventuallyPeriodicWord:
    """Greedy walk taking the least available symbol until a vertex repeats."""
    q = prune(p)
    if q.empty:
        raise EmptyPathSet("the empty path set has no members")
    g = q.graph
    first_visit = {}
    labels = []
    v = q.start
    while v not in first_visit:
        first_visit[v] = len(labels)
        lab, v = g.out[v][0]
        labels.append(lab)
    i = first_visit[v]
    return EventuallyPeriodicWord(tuple(labels[:i]), tuple(labels[i:]))


def is_shift_invariant(p) -> bool:
    c = canonicalize(p)
    if c.empty:
        return True
    return c == canonicalize(shift_closure(c.inner))


def follower_of_word(p, w: Sequence[str]) -> PointedGraph:
    w = _check_word(p.alphabet, w)
    c = canonicalize(p)
    q = c.run(w)
    if q == MISSING:
        return PointedGraph.empty_over(p.alphabet)
    return prune(c.inner.repoint(q))


# -- structure theorem -------------------------------------------------------


def _shift_c(c: CanonicalPresentation) -> CanonicalPresentation:
    return canonicalize(shift(c.inner))


def _meet_prefix_c(c: CanonicalPresentation, sym: str) -> CanonicalPresentation:
    return canonicalize(label_product(c.inner, prefix_graph(c.alphabet, sym)))


@dataclass
class ClosureFamily:
    """Smallest family containing a path set, closed under shift and prefix-set meets.

    ``shift_images[i]`` indexes the shift of member ``i``; ``meets[(i, j)]``
    indexes member ``i`` intersected with the prefix set of symbol ``j``;
    ``transitions[(i, j)]`` indexes the shift of that meet, and is absent when
    the meet is empty.  Member 0 is the input.
    """

    members: list[CanonicalPresentation]
    transitions: dict[tuple[int, str], int]
    shift_images: dict[int, int]
    meets: dict[tuple[int, str], int]

    def __len__(self):
        return len(self.members)

    def presentation(self) -> PointedGraph:
        """Right-resolving graph on the members, pointed at the input set."""
        alphabet = self.members[0].alphabet
        names = tuple(f"S{i}" for i in range(len(self.members)))
        edges = tuple((i, t, j) for (i, j), t in sorted(self.transitions.items()))
        return prune(PointedGraph(LabeledGraph(alphabet, names, edges), 0))


def closure_sets(p) -> ClosureFamily:
    c0 = canonicalize(p)
    syms = c0.alphabet.symbols
    members = [c0]
    index = {c0: 0}

    def intern(c):
        if c not in index:
            index[c] = len(members)
            members.append(c)
        return index[c]

    shift_images, meets = {}, {}
    i = 0
    while i < len(members):
        c = members[i]
        shift_images[i] = intern(_shift_c(c))
        for j in syms:
            meets[(i, j)] = intern(_meet_prefix_c(c, j))
        i += 1
    transitions = {}
    for (i, j), k in meets.items():
        if not members[k].empty:
            transitions[(i, j)] = shift_images[k]
    return ClosureFamily(members, transitions, shift_images, meets)


def vertex_union_family(p, max_states: int = 12) -> set[CanonicalPresentation]:
    """The explicit finite family of all unions of state path sets and their prefix-set meets.

    Built from the canonical presentation; it contains the input and is closed
    under shift and prefix-set meets.  Exponential in the state count.
    """
    c = canonicalize(p)
    if c.empty:
        return {c}
    n = c.state_count
    if n > max_states:
        raise ValueError(f"{n} states exceeds max_states={max_states}")
    g = c.inner.graph
    family = {CanonicalPresentation.empty_over(c.alphabet)}
    for k in range(1, n + 1):
        for J in combinations(range(n), k):
            u = canonicalize(union_of_vertices(g, J))
            family.add(u)
            for j in c.alphabet.symbols:
                family.add(_meet_prefix_c(u, j))
    return family


# -- m-kernel ----------------------------------------------------------------

SHIFT_OP = "shift"
DECIMATE_OP = "decimate"


@dataclass
class KernelReport:
    members: list[CanonicalPresentation]
    verdict: str  # "finite" or "budget_exhausted"
    generator_trace: list[tuple[str, ...]]
    m: int

    @property
    def finite(self) -> bool:
        return self.verdict == "finite"


def replay_trace(p, trace: Sequence[str], m: int) -> PointedGraph:
    """Apply a generator trace (innermost first) to ``p``."""
    q = canonicalize(p).inner
    for op in trace:
        if op == SHIFT_OP:
            q = shift(q)
        elif op == DECIMATE_OP:
            q = decimate(q, 0, m)
        else:
            raise ValueError(f"unknown generator {op!r}")
    return q


def kernel(p, m: int, budget: int = 64) -> KernelReport:
    """Bounded exploration of the m-kernel under shift and 0-offset m-decimation."""
    if m < 2:
        raise ValueError("kernel needs m >= 2")
    if budget < 1:
        raise ValueError("budget must be positive")
    c0 = canonicalize(p)
    members = [c0]
    traces: list[tuple[str, ...]] = [()]
    index = {c0: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        c = members[i]
        for op, image in ((SHIFT_OP, _shift_c(c)), (DECIMATE_OP, canonicalize(decimate(c.inner, 0, m)))):
            if image in index:
                continue
            index[image] = len(members)
            members.append(image)
            traces.append(traces[i] + (op,))
            if len(members) > budget:
                return KernelReport(members, "budget_exhausted", traces, m)
            queue.append(index[image])
    return KernelReport(members, "finite", traces, m)
