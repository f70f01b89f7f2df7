"""Frustration index and the trace-based unbalance level."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .core import SignedGraph, SwitchingVector, balance_check, spanning_forest, switch
from .errors import TooLarge
from .linalg import adjacency, power_traces, unsigned_adjacency
from .token import token_graph

FRUSTRATION_MAX_N = 24
BOUNDS_MAX_TOKEN_VERTICES = 16
_CHUNK = 1 << 15


@dataclass(frozen=True)
class FrustrationResult:
    index: int
    witness: SwitchingVector
    removed_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class UnbalanceResult:
    ell_n_minus_1: Fraction
    ell_n: Fraction
    ell: Fraction
    signed_traces: tuple[int, ...]
    unsigned_traces: tuple[int, ...]


def frustration_index(g: SignedGraph, max_n: int = FRUSTRATION_MAX_N) -> FrustrationResult:
    """Exact minimum number of negative edges over all switchings.

    Each component's lowest vertex is pinned to +1, leaving 2^(n-c) switchings.
    Ties go to the lexicographically smallest vector with +1 ordered before -1.
    """
    if g.n > max_n:
        raise TooLarge(f"{g.n} vertices exceeds the enumeration guard {max_n}")
    _, root, _ = spanning_forest(g)
    free = [v for v in range(1, g.n + 1) if root[v] != v]
    nf = len(free)
    # bit (nf-1-j) of the enumeration counter flips free[j]: counting order == lexicographic order
    pos = {v: nf - 1 - j for j, v in enumerate(free)}
    if g.m == 0:
        return FrustrationResult(0, SwitchingVector.identity(g.n), ())
    us = np.array([pos.get(u, -1) for u, _, _ in g.edges])
    vs = np.array([pos.get(v, -1) for _, v, _ in g.edges])
    neg = np.array([s == -1 for _, _, s in g.edges], dtype=np.uint8)
    best, best_x = g.m + 1, 0
    total = 1 << nf
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        bu = np.where(us >= 0, (x[:, None] >> np.maximum(us, 0)[None, :]) & 1, 0).astype(np.uint8)
        bv = np.where(vs >= 0, (x[:, None] >> np.maximum(vs, 0)[None, :]) & 1, 0).astype(np.uint8)
        counts = (bu ^ bv ^ neg[None, :]).sum(axis=1)
        i = int(np.argmin(counts))
        if counts[i] < best:
            best, best_x = int(counts[i]), int(x[i])
    vals = [1] * g.n
    for v in free:
        if best_x >> pos[v] & 1:
            vals[v - 1] = -1
    s = SwitchingVector(tuple(vals))
    switched = switch(g, s)
    removed = tuple((u, v) for u, v, sg in switched.edges if sg == -1)
    assert len(removed) == best
    return FrustrationResult(best, s, removed)


def _traces(g: SignedGraph, m: int) -> tuple[list[int], list[int]]:
    return power_traces(adjacency(g), m), power_traces(unsigned_adjacency(g), m)


def _ell_from_traces(signed, unsigned, m) -> Fraction:
    num = sum(unsigned[r] - signed[r] for r in range(m + 1))
    den = sum(unsigned[r] + abs(signed[r]) for r in range(m + 1))
    return Fraction(num, den) if den else Fraction(0)


def unbalance_level_m(g: SignedGraph, m: int) -> Fraction:
    if m < 0:
        raise ValueError("m must be non-negative")
    t, tp = _traces(g, m)
    return _ell_from_traces(t, tp, m)


def unbalance_level(g: SignedGraph) -> UnbalanceResult:
    n = g.n
    t, tp = _traces(g, n)
    lo = _ell_from_traces(t, tp, max(n - 1, 0))
    hi = _ell_from_traces(t, tp, n)
    return UnbalanceResult(lo, hi, max(lo, hi), tuple(t), tuple(tp))


def ell(g: SignedGraph) -> Fraction:
    return unbalance_level(g).ell


@dataclass(frozen=True)
class BoundsReport:
    k: int
    frustration: int
    token_frustration: int
    upper: int
    lower_ok: bool
    upper_ok: bool

    @property
    def holds(self) -> bool:
        return self.lower_ok and self.upper_ok


def check_frustration_bounds(g: SignedGraph, k: int,
                             max_token_vertices: int = BOUNDS_MAX_TOKEN_VERTICES) -> BoundsReport:
    """l(g) <= l(F_k(g)) <= C(n-2, k-1) l(g), all three computed exactly."""
    if comb(g.n, k) > max_token_vertices:
        raise TooLarge(f"C({g.n},{k}) exceeds the token-frustration guard {max_token_vertices}")
    l0 = frustration_index(g).index
    lk = frustration_index(token_graph(g, k).graph, max_n=max_token_vertices).index
    upper = comb(g.n - 2, k - 1) * l0
    return BoundsReport(k, l0, lk, upper, l0 <= lk, lk <= upper)


# ---------------------------------------------------------------- random sampling

def random_signed_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    """Erdos-Renyi G(n, p) with independent fair-coin signs."""
    edges = [(u, v, rng.choice((1, -1)))
             for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return SignedGraph(n, tuple(edges))


def random_resign(rng: random.Random, g: SignedGraph) -> SignedGraph:
    return g.with_signs(rng.choice((1, -1)) for _ in range(g.m))


def random_balanced_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    """All-positive G(n, p) switched at a random vertex set."""
    g = random_signed_graph(rng, n, p).underlying()
    return switch(g, SwitchingVector(tuple(rng.choice((1, -1)) for _ in range(n))))


# ---------------------------------------------------------------- monotonicity explorer

@dataclass
class MonotonicityTrial:
    trial: int
    graph: SignedGraph
    other: SignedGraph
    ell: Fraction
    ell_token: Fraction
    frustration: int
    frustration_other: int
    token_frustration: int
    token_frustration_other: int
    ell_token_other: Fraction

    @property
    def statement1(self) -> bool:
        return self.ell <= self.ell_token

    @property
    def statement2(self) -> bool:
        return not (self.frustration <= self.frustration_other) or \
            self.token_frustration <= self.token_frustration_other

    @property
    def statement3(self) -> bool:
        return not (self.frustration <= self.frustration_other) or \
            self.ell_token <= self.ell_token_other


@dataclass
class MonotonicityReport:
    trials: int
    seed: int
    k: int
    n_max: int
    counterexamples: dict[int, list[MonotonicityTrial]] = field(default_factory=lambda: {1: [], 2: [], 3: []})
    max_ell: Fraction = Fraction(0)
    evaluated: int = 0

    @property
    def counts(self) -> dict[int, int]:
        return {i: len(v) for i, v in self.counterexamples.items()}


def evaluate_monotonicity(g: SignedGraph, other: SignedGraph, k: int, trial: int = 0) -> MonotonicityTrial:
    tg, to = token_graph(g, k).graph, token_graph(other, k).graph
    return MonotonicityTrial(
        trial=trial, graph=g, other=other,
        ell=ell(g), ell_token=ell(tg),
        frustration=frustration_index(g).index,
        frustration_other=frustration_index(other).index,
        token_frustration=frustration_index(tg).index,
        token_frustration_other=frustration_index(to).index,
        ell_token_other=ell(to),
    )


def explore_monotonicity(trials: int, n_max: int, k: int, seed: int = 0,
                        balanced_only: bool = False, n_min: int | None = None) -> MonotonicityReport:
    """Sample pairs of signatures on one random underlying graph and test the
    three monotonicity statements. Reports counterexamples; proves nothing."""
    rng = random.Random(seed)
    report = MonotonicityReport(trials, seed, k, n_max)
    lo = max(k + 1, 3) if n_min is None else n_min
    for t in range(trials):
        n = rng.randint(lo, n_max)
        if balanced_only:
            g = random_balanced_graph(rng, n)
            other = random_resign(rng, g)
        else:
            g = random_signed_graph(rng, n)
            other = random_resign(rng, g)
        res = evaluate_monotonicity(g, other, k, trial=t)
        report.evaluated += 1
        report.max_ell = max(report.max_ell, res.ell, res.ell_token)
        for i, ok in ((1, res.statement1), (2, res.statement2), (3, res.statement3)):
            if not ok:
                report.counterexamples[i].append(res)
    return report


explore_problem_4_5 = explore_monotonicity  # name used by the command-line contract
