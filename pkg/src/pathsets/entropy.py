"""Block counts and topological entropy of path sets.

Counts are exact Python integers.  Floating point only enters at the spectral
radius and the final logarithm.  Logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .canonical import MISSING, CanonicalPresentation, canonicalize
from .constructions import determinize_sofic
from .errors import EmptyPathSet, NonSquare
from .graph_core import LabeledGraph, PointedGraph, is_strongly_connected, prune, reachability_radius


@dataclass(frozen=True)
class AdjacencyMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if any(len(r) != len(rows) for r in rows):
            raise NonSquare(f"adjacency matrix must be square, got {len(rows)} rows")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("adjacency entries must be non-negative")

    @property
    def order(self) -> int:
        return len(self.entries)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.order, self.order)


def adjacency(g: LabeledGraph) -> AdjacencyMatrix:
    n = g.vertex_count
    a = [[0] * n for _ in range(n)]
    for s, d, _ in g.edges:
        a[s][d] += 1
    return AdjacencyMatrix(tuple(tuple(r) for r in a))


def spectral_radius(a, tol: float = 1e-6, min_squarings: int = 60, max_squarings: int = 200) -> float:
    """Spectral radius of a non-negative matrix via normalized repeated squaring.

    Tracks A^(2^k) = M_k * exp(L_k) with max|M_k| = 1, so ||A^(2^k)||^(1/2^k)
    = exp(L_k / 2^k) never overflows.  Works for reducible and periodic
    matrices where power iteration oscillates.
    """
    if isinstance(a, AdjacencyMatrix):
        m = a.array()
    else:
        m = np.asarray(a, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NonSquare(f"expected a square matrix, got shape {m.shape}")
    if m.size == 0:
        return 0.0
    if (m < 0).any():
        raise ValueError("matrix must be non-negative")
    s = m.max()
    if s == 0:
        return 0.0
    m = m / s
    log_scale = math.log(s)
    est = s
    for k in range(1, max_squarings + 1):
        m = m @ m
        s = m.max()
        if s == 0:
            return 0.0  # nilpotent
        m /= s
        log_scale = 2 * log_scale + math.log(s)
        new = math.exp(log_scale / 2.0**k)
        done = k >= min_squarings and abs(new - est) <= tol
        est = new
        if done:
            break
    return est


def _counts_from(c: CanonicalPresentation, depth: int) -> list[int]:
    """Number of length-n walks from the start, n = 1..depth."""
    if c.empty:
        return [0] * depth
    vec = [0] * c.state_count
    vec[0] = 1
    out = []
    for _ in range(depth):
        nxt = [0] * c.state_count
        for q, x in enumerate(vec):
            if x:
                for t in c.table[q]:
                    if t != MISSING:
                        nxt[t] += x
        vec = nxt
        out.append(sum(vec))
    return out


def initial_block_counts(p, depth: int) -> list[int]:
    """[N^I_1, ..., N^I_depth]: distinct initial blocks, counted as walks on the canonical form."""
    if depth < 1:
        raise ValueError("depth must be positive")
    return _counts_from(canonicalize(p), depth)


def initial_block_count(p, n: int) -> int:
    return initial_block_counts(p, n)[-1]


def _closure_presentation(p) -> PointedGraph:
    q = prune(p.inner if isinstance(p, CanonicalPresentation) else p)
    if q.empty:
        return q
    return determinize_sofic(q.graph)


def anywhere_block_counts(p, depth: int) -> list[int]:
    """[N_1, ..., N_depth]: blocks occurring anywhere = initial blocks of the shift closure."""
    return initial_block_counts(_closure_presentation(p), depth)


def anywhere_block_count(p, n: int) -> int:
    return anywhere_block_counts(p, n)[-1]


@dataclass(frozen=True)
class BlockCountSeries:
    depth: int
    initial_counts: tuple[int, ...]
    anywhere_counts: tuple[int, ...]
    radius: int

    def violations(self) -> list[str]:
        """Failures of N^I_n <= N_n <= N^I_{n+k} for every n with n + k <= depth."""
        bad = []
        for n in range(1, self.depth + 1):
            ni, na = self.initial_counts[n - 1], self.anywhere_counts[n - 1]
            if ni > na:
                bad.append(f"N^I_{n}={ni} > N_{n}={na}")
            if n + self.radius <= self.depth and na > self.initial_counts[n + self.radius - 1]:
                bad.append(f"N_{n}={na} > N^I_{n + self.radius}={self.initial_counts[n + self.radius - 1]}")
        return bad

    @property
    def sandwich_ok(self) -> bool:
        return not self.violations()

    def weak_violations(self) -> list[str]:
        """Failures of N^I_n <= N_n <= (k+1) N^I_{n+k}.

        A length-n block of the closure sits at offset r <= k inside some
        initial block of length n+k, which gives the factor k+1.  The bound
        without that factor fails already on a single periodic orbit.
        """
        bad = []
        k = self.radius
        for n in range(1, self.depth + 1 - k):
            ni, na = self.initial_counts[n - 1], self.anywhere_counts[n - 1]
            if ni > na or na > (k + 1) * self.initial_counts[n + k - 1]:
                bad.append(f"n={n}")
        return bad

    @property
    def weak_sandwich_ok(self) -> bool:
        return not self.weak_violations()


def block_count_series(p, depth: int) -> BlockCountSeries:
    """Exact counts plus the reachability radius of the canonical presentation."""
    c = canonicalize(p)
    if c.empty:
        raise EmptyPathSet("block counts of the empty path set are all zero")
    return BlockCountSeries(
        depth,
        tuple(_counts_from(c, depth)),
        tuple(anywhere_block_counts(c, depth)),
        reachability_radius(c.inner),
    )


@dataclass(frozen=True)
class EntropyReport:
    lam: float
    h_path: float
    finite_slopes: tuple[tuple[int, float], ...]
    irreducible: bool
    states: int
    series: BlockCountSeries = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "states": self.states,
            "lambda": self.lam,
            "h_path": self.h_path,
            "irreducible": self.irreducible,
            "slopes": [[n, s] for n, s in self.finite_slopes],
            "counts": {
                "initial": list(self.series.initial_counts),
                "anywhere": list(self.series.anywhere_counts),
                "radius": self.series.radius,
            },
            "sandwich_ok": self.series.sandwich_ok,
            "weak_sandwich_ok": self.series.weak_sandwich_ok,
        }


def entropy_report(p, depth: int = 60, tol: float = 1e-6) -> EntropyReport:
    c = canonicalize(p)
    if c.empty:
        raise EmptyPathSet("entropy of the empty path set is -inf")
    if depth < 2:
        raise ValueError("depth must be at least 2")
    g = c.inner.graph
    lam = spectral_radius(adjacency(g), tol)
    series = block_count_series(c, depth)
    slopes = tuple(
        (n, math.log(series.initial_counts[n - 1]) / n) for n in sorted({depth // 2, depth})
    )
    return EntropyReport(lam, math.log(lam), slopes, is_strongly_connected(g), c.state_count, series)


def path_entropy(p, tol: float = 1e-6) -> float:
    """ln of the spectral radius of the canonical presentation; -inf for the empty set."""
    c = canonicalize(p)
    if c.empty:
        return float("-inf")
    return math.log(spectral_radius(adjacency(c.inner.graph), tol))
