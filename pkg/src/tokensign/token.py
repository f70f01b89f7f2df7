"""k-token signed graphs, the even-intersection switching lift, binomial matrices.

Token vertex ``r`` (1-based) is the ``r``-th k-subset of ``1..n`` in
lexicographic order, so for n=4, k=2 the order is 12, 13, 14, 23, 24, 34.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

import numpy as np

from .core import SignedGraph, SwitchingVector, balancing_switching
from .errors import KOutOfRange, SizeCapExceeded, SizeMismatch
from .linalg import ExactMatrix

DEFAULT_SIZE_CAP = 200_000

Subset = tuple[int, ...]


def subset_rank(subset: Subset, n: int) -> int:
    """0-based lexicographic rank of a sorted k-subset of 1..n."""
    k = len(subset)
    r = 0
    prev = 0
    for i, x in enumerate(subset):
        for y in range(prev + 1, x):
            r += comb(n - y, k - i - 1)
        prev = x
    return r


def subset_unrank(r: int, n: int, k: int) -> Subset:
    if not 0 <= r < comb(n, k):
        raise KOutOfRange(f"rank {r} outside 0..C({n},{k})-1")
    out = []
    x = 1
    for i in range(k):
        while True:
            c = comb(n - x, k - i - 1)
            if r < c:
                break
            r -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def subsets(n: int, k: int) -> list[Subset]:
    return list(combinations(range(1, n + 1), k))


@dataclass(frozen=True)
class TokenSignedGraph:
    base: SignedGraph
    k: int
    graph: SignedGraph
    subsets: tuple[Subset, ...]

    @cached_property
    def index(self) -> dict[Subset, int]:
        """k-subset -> 1-based token vertex."""
        return {A: i for i, A in enumerate(self.subsets, 1)}

    def vertex(self, A) -> int:
        return self.index[tuple(sorted(A))]

    def comments(self) -> list[str]:
        return [f"{i} = {{{','.join(map(str, A))}}}" for i, A in enumerate(self.subsets, 1)]


def _check_k(n, k):
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k={k} outside 1..{n - 1}")


def token_graph(g: SignedGraph, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> TokenSignedGraph:
    n = g.n
    _check_k(n, k)
    N = comb(n, k)
    if N > size_cap:
        raise SizeCapExceeded(f"C({n},{k}) = {N} exceeds the cap {size_cap}")
    subs = subsets(n, k)
    index = {A: i for i, A in enumerate(subs, 1)}
    edges = []
    for i, A in enumerate(subs, 1):
        inA = set(A)
        for u, v, s in g.edges:
            # each token edge is produced once, from the side holding the smaller endpoint
            if u in inA and v not in inA:
                B = tuple(sorted((inA - {u}) | {v}))
                j = index[B]
                edges.append((min(i, j), max(i, j), s))
    return TokenSignedGraph(g, k, SignedGraph(N, tuple(sorted(edges))), tuple(subs))


def lift_switching(u: SwitchingVector, k: int) -> SwitchingVector:
    """+1 on the k-subsets meeting U = {v : u(v) = +1} in an even number of vertices."""
    n = u.n
    _check_k(n, k)
    U = u.U
    return SwitchingVector(tuple(1 if len(U.intersection(A)) % 2 == 0 else -1 for A in subsets(n, k)))


@dataclass(frozen=True)
class BinomialMatrix:
    n: int
    k1: int
    k2: int
    matrix: np.ndarray  # rows: k2-subsets, cols: k1-subsets, lexicographic
    signed: bool = False

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.matrix]

    def as_exact(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.tolist())


def binomial_matrix(n: int, k1: int, k2: int) -> BinomialMatrix:
    if not 1 <= k1 < k2 < n:
        raise KOutOfRange(f"need 1 <= k1 < k2 < n, got k1={k1} k2={k2} n={n}")
    rows, cols = subsets(n, k2), subsets(n, k1)
    col_index = {X: j for j, X in enumerate(cols)}
    B = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, A in enumerate(rows):
        for X in combinations(A, k1):
            B[i, col_index[X]] = 1
    return BinomialMatrix(n, k1, k2, B)


def signed_binomial_matrix(g: SignedGraph, k1: int, k2: int) -> BinomialMatrix:
    """S_{k2} B+ S_{k1}, with both switchings lifted from the balancing switching of g."""
    Bp = binomial_matrix(g.n, k1, k2)
    s = balancing_switching(g)
    left = np.array(lift_switching(s, k2).values, dtype=np.int64)
    right = np.array(s.values if k1 == 1 else lift_switching(s, k1).values, dtype=np.int64)
    return BinomialMatrix(g.n, k1, k2, left[:, None] * Bp.matrix * right[None, :], signed=True)


def token_switching_pair(g: SignedGraph, u: SwitchingVector, k: int):
    """Both sides of F_k(g^U) = F_k(g)^{U_k}, as signed graphs."""
    from .core import switch

    if u.n != g.n:
        raise SizeMismatch("switching vector does not match the graph")
    left = token_graph(switch(g, u), k).graph
    right = switch(token_graph(g, k).graph, lift_switching(u, k))
    return left, right


def complement_subset(A: Subset, n: int) -> Subset:
    return tuple(v for v in range(1, n + 1) if v not in A)
