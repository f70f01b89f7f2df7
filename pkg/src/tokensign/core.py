"""Signed graphs: data model, named families, switching, balance, I/O.

Vertices are 1-based everywhere in the public API. Edges are stored as
``(u, v, sign)`` triples with ``u < v``, sorted lexicographically.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import (
    BadSignToken,
    DuplicateEdge,
    HeaderMismatch,
    LoopEdge,
    NotBalanced,
    NTooSmall,
    ParseError,
    SizeMismatch,
    UnknownFamily,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class SignedGraph:
    """A simple graph on vertices ``1..n`` with a +1/-1 sign on every edge."""

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        seen = set()
        for u, v, s in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise VertexOutOfRange(f"edge {u} {v} outside 1..{self.n} or unordered")
            if s not in (1, -1):
                raise BadSignToken(f"sign {s!r} on edge {u} {v}")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge {u} {v} listed twice")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> SignedGraph:
        """Build from ``(u, v, s)`` triples in any endpoint order."""
        out = {}
        for u, v, s in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in out:
                raise DuplicateEdge(f"edge {key[0]} {key[1]} listed twice")
            out[key] = int(s)
        return cls(n, tuple((u, v, s) for (u, v), s in sorted(out.items())))

    @classmethod
    def from_sign_map(cls, n: int, sign: Mapping[Edge, int]) -> SignedGraph:
        return cls.from_edges(n, ((u, v, s) for (u, v), s in sign.items()))

    @cached_property
    def sign(self) -> dict[Edge, int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def neighbors(self) -> dict[int, list[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj.values():
            lst.sort()
        return adj

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def m_pos(self) -> int:
        return sum(1 for e in self.edges if e[2] == 1)

    @property
    def m_neg(self) -> int:
        return sum(1 for e in self.edges if e[2] == -1)

    @property
    def edge_pairs(self) -> list[Edge]:
        return [(u, v) for u, v, _ in self.edges]

    def sign_of(self, u: int, v: int) -> int:
        """Sign of edge uv, or 0 when u and v are not adjacent."""
        return self.sign.get((min(u, v), max(u, v)), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.sign

    def same_underlying(self, other: SignedGraph) -> bool:
        return self.n == other.n and self.edge_pairs == other.edge_pairs

    def underlying(self) -> SignedGraph:
        """The all-positive graph on the same edges."""
        return SignedGraph(self.n, tuple((u, v, 1) for u, v, _ in self.edges))

    def with_signs(self, signs: Iterable[int]) -> SignedGraph:
        """Same edges (in sorted order) carrying the given signs."""
        signs = list(signs)
        if len(signs) != self.m:
            raise SizeMismatch(f"{len(signs)} signs for {self.m} edges")
        return SignedGraph(self.n, tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs)))

    def relabel(self, perm: Mapping[int, int] | Iterable[int]) -> SignedGraph:
        """Apply the vertex bijection ``v -> perm[v]``.

        A sequence is read as ``perm[i-1]`` being the image of vertex ``i``.
        """
        if not isinstance(perm, Mapping):
            perm = {i + 1: p for i, p in enumerate(perm)}
        if sorted(perm) != list(range(1, self.n + 1)) or sorted(perm.values()) != list(range(1, self.n + 1)):
            raise SizeMismatch("relabeling is not a permutation of the vertices")
        return SignedGraph.from_edges(self.n, ((perm[u], perm[v], s) for u, v, s in self.edges))

    def components(self) -> list[list[int]]:
        roots = spanning_forest(self)[1]
        comps: dict[int, list[int]] = {}
        for v, r in roots.items():
            comps.setdefault(r, []).append(v)
        return [sorted(c) for _, c in sorted(comps.items())]

    def __str__(self):
        return f"SignedGraph(n={self.n}, m={self.m}, m+={self.m_pos}, m-={self.m_neg})"


@dataclass(frozen=True)
class SwitchingVector:
    """A +1/-1 value per vertex. ``U`` is the set of vertices carrying +1."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (1, -1) for x in self.values):
            raise ValueError("switching vector entries must be +1 or -1")

    @classmethod
    def from_set(cls, n: int, U: Iterable[int]) -> SwitchingVector:
        U = set(U)
        return cls(tuple(1 if v in U else -1 for v in range(1, n + 1)))

    @classmethod
    def identity(cls, n: int) -> SwitchingVector:
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def U(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values, 1) if x == 1)

    def __getitem__(self, v: int) -> int:
        # 1-based vertex access
        return self.values[v - 1]

    def __mul__(self, other: SwitchingVector) -> SwitchingVector:
        if self.n != other.n:
            raise SizeMismatch("switching vectors of different length")
        return SwitchingVector(tuple(a * b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> SwitchingVector:
        return SwitchingVector(tuple(-a for a in self.values))


@dataclass(frozen=True)
class BalanceCertificate:
    """Either a balancing switching or a negative cycle, never both."""

    switching: SwitchingVector | None = None
    cycle: tuple[int, ...] | None = None

    @property
    def balanced(self) -> bool:
        return self.switching is not None


# ---------------------------------------------------------------- text I/O

_SIGN_TOKENS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


def parse_graph(text: str) -> SignedGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty document")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise HeaderMismatch(f"header declares {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"edge line must be 'u v s', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}") from None
        if parts[2] not in _SIGN_TOKENS:
            raise BadSignToken(f"bad sign token {parts[2]!r}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"edge {u} {v} outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key[0]} {key[1]} listed twice")
        seen.add(key)
        edges.append((*key, _SIGN_TOKENS[parts[2]]))
    return SignedGraph(n, tuple(sorted(edges)))


def format_graph(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v} {'+1' if s == 1 else '-1'}" for u, v, s in g.edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- families

def _cycle(n, signs):
    pairs = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return SignedGraph.from_edges(n, ((u, v, signs(u, v)) for u, v in pairs))


def _complete(n, signs):
    return SignedGraph(n, tuple((u, v, signs(u, v)) for u, v in combinations(range(1, n + 1), 2)))


def _first_edge(u, v):
    return (u, v) == (1, 2)


def petersen_edges() -> list[Edge]:
    """Outer 5-cycle 1..5, inner pentagram 6..10, spokes i-(i+5)."""
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    return sorted(tuple(sorted(e)) for e in outer + inner + spokes)


FAMILIES = {
    "Cn_minus": (3, lambda n: _cycle(n, lambda u, v: -1 if _first_edge(u, v) else 1)),
    "all_neg_Cn": (3, lambda n: _cycle(n, lambda u, v: -1)),
    "Kn_minus": (2, lambda n: _complete(n, lambda u, v: -1 if _first_edge(u, v) else 1)),
    "all_neg_Kn": (2, lambda n: _complete(n, lambda u, v: -1)),
    "neg_Kn_plus": (2, lambda n: _complete(n, lambda u, v: 1 if _first_edge(u, v) else -1)),
}

# Small named graphs, recovered by exhaustive search against their known
# unbalance levels and spectra (see scripts/recover_named_graphs.py).
NAMED_GRAPHS = {
    "k5_three_negative": (5, [(1, 2, -1), (1, 3, -1), (1, 4, 1), (1, 5, 1), (2, 3, 1),
                    (2, 4, -1), (2, 5, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1)]),
    "k23_negative_chord": (5, [(1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 3, 1), (2, 4, 1), (2, 5, 1), (3, 5, -1)]),
    "paw_balanced": (4, [(1, 2, 1), (2, 3, -1), (2, 4, -1), (3, 4, 1)]),
    "paw_unbalanced": (4, [(1, 2, 1), (2, 3, -1), (2, 4, 1), (3, 4, 1)]),
    "bird": (8, [(1, 2, 1), (1, 5, 1), (1, 8, 1), (2, 5, 1), (2, 8, -1), (3, 4, 1),
                 (3, 5, 1), (4, 5, -1), (6, 7, 1), (6, 8, 1), (7, 8, 1)]),
}


def family(name: str, n: int | None = None) -> SignedGraph:
    """Named graph families and small fixed instances.

    ``Cn_minus`` and ``Kn_minus`` carry their single negative edge on {1,2};
    ``neg_Kn_plus`` carries its single positive edge there.
    """
    if name == "petersen":
        if n not in (None, 10):
            raise SizeMismatch("the Petersen graph has 10 vertices")
        return SignedGraph(10, tuple((u, v, 1) for u, v in petersen_edges()))
    if name in NAMED_GRAPHS:
        order, edges = NAMED_GRAPHS[name]
        if n not in (None, order):
            raise SizeMismatch(f"{name} has {order} vertices")
        return SignedGraph.from_edges(order, edges)
    if name not in FAMILIES:
        raise UnknownFamily(name)
    nmin, build = FAMILIES[name]
    if n is None or n < nmin:
        raise NTooSmall(f"{name} needs n >= {nmin}, got {n}")
    return build(n)


def apply_mask(g: SignedGraph, mask: int) -> SignedGraph:
    """Make edge i (in sorted order) negative iff bit i of ``mask`` is set."""
    if mask < 0 or mask >> g.m:
        raise SizeMismatch(f"mask needs at most {g.m} bits")
    return g.with_signs(-1 if mask >> i & 1 else 1 for i in range(g.m))


# ---------------------------------------------------------------- operations

def switch(g: SignedGraph, s: SwitchingVector) -> SignedGraph:
    if s.n != g.n:
        raise SizeMismatch(f"switching vector of length {s.n} for {g.n} vertices")
    vals = s.values
    return SignedGraph(g.n, tuple((u, v, vals[u - 1] * sg * vals[v - 1]) for u, v, sg in g.edges))


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def spanning_forest(g: SignedGraph) -> tuple[dict[int, int | None], dict[int, int], list[int]]:
    """Depth-first spanning forest, roots and neighbours taken lowest id first.

    Returns ``(parent, root, order)``; ``order`` is the DFS discovery order.
    """
    parent: dict[int, int | None] = {}
    root: dict[int, int] = {}
    order: list[int] = []
    nbrs = g.neighbors
    for r in range(1, g.n + 1):
        if r in parent:
            continue
        parent[r] = None
        root[r] = r
        order.append(r)
        stack = [(r, iter(nbrs[r]))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if w not in parent:
                    parent[w] = u
                    root[w] = r
                    order.append(w)
                    stack.append((w, iter(nbrs[w])))
                    break
            else:
                stack.pop()
    return parent, root, order


def forest_switching(g: SignedGraph) -> tuple[SwitchingVector, dict[int, int | None]]:
    """Switching that makes every spanning-forest edge positive (+1 at roots)."""
    parent, _, order = spanning_forest(g)
    s = {}
    for v in order:
        p = parent[v]
        s[v] = 1 if p is None else s[p] * g.sign_of(p, v)
    return SwitchingVector(tuple(s[v] for v in range(1, g.n + 1))), parent


def _tree_path(parent, v):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def _normalize_cycle(cyc):
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


def balance_check(g: SignedGraph) -> BalanceCertificate:
    s, parent = forest_switching(g)
    for u, v, sg in g.edges:
        if parent.get(v) == u or parent.get(u) == v:
            continue
        if s[u] * sg * s[v] == -1:
            pu, pv = _tree_path(parent, u), _tree_path(parent, v)
            common = set(pu) & set(pv)
            up = [x for x in pu if x not in common]
            vp = [x for x in pv if x not in common]
            lca = next(x for x in pu if x in common)
            return BalanceCertificate(cycle=_normalize_cycle(up + [lca] + vp[::-1]))
    return BalanceCertificate(switching=s)


def is_balanced(g: SignedGraph) -> bool:
    return balance_check(g).balanced


def cycle_sign(g: SignedGraph, cycle: Iterable[int]) -> int:
    cycle = list(cycle)
    prod = 1
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        s = g.sign_of(a, b)
        if s == 0:
            raise ValueError(f"{a}-{b} is not an edge")
        prod *= s
    return prod


def balancing_switching(g: SignedGraph) -> SwitchingVector:
    cert = balance_check(g)
    if not cert.balanced:
        raise NotBalanced(f"negative cycle {cert.cycle}")
    return cert.switching


def signed_complement(g: SignedGraph) -> SignedGraph:
    """Complement of the underlying graph, signed by s(u)s(v) for the balancing switching s."""
    s = balancing_switching(g)
    edges = [(u, v, s[u] * s[v]) for u, v in combinations(range(1, g.n + 1), 2) if not g.has_edge(u, v)]
    return SignedGraph(g.n, tuple(edges))


def enumerate_cycles(g: SignedGraph) -> list[tuple[int, ...]]:
    """Every cycle once, as a vertex tuple starting at its minimum vertex.

    Direction is fixed by requiring the second vertex to be smaller than the last.
    """
    out = []
    nbrs = g.neighbors

    def extend(path, on_path):
        start, last = path[0], path[-1]
        for w in nbrs[last]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif w > start and w not in on_path:
                on_path.add(w)
                path.append(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

    for v in range(1, g.n + 1):
        extend([v], {v})
    return out
