"""Switching equivalence, switching isomorphism and class enumeration.

A switching class on a fixed labelled graph is represented by its co-tree
signature: switch so every edge of the DFS spanning forest is positive and
read off the remaining signs. Switching isomorphism is decided by a
canonical form that minimises this signature over every labelling reached by
an individualisation-refinement search of the underlying graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import (
    SignedGraph,
    SwitchingVector,
    family,
    forest_switching,
    negate,
    spanning_forest,
    switch,
)
from .errors import TooLarge, UnderlyingMismatch

CANONICAL_MAX_N = 64
CLASS_MAX_CYCLOMATIC = 20


@dataclass(frozen=True)
class CotreeSignature:
    forest: tuple[tuple[int, int], ...]
    cotree_edges: tuple[tuple[int, int], ...]
    cotree_signs: tuple[int, ...]


def cotree_signature(g: SignedGraph) -> CotreeSignature:
    s, parent = forest_switching(g)
    forest = tuple(sorted((min(v, p), max(v, p)) for v, p in parent.items() if p is not None))
    fset = set(forest)
    co = [(u, v, s[u] * sg * s[v]) for u, v, sg in g.edges if (u, v) not in fset]
    return CotreeSignature(forest, tuple((u, v) for u, v, _ in co), tuple(x for _, _, x in co))


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> SwitchingVector | None:
    """A switching taking g1 to g2, or None when they are not equivalent."""
    if not g1.same_underlying(g2):
        raise UnderlyingMismatch("switching equivalence needs identical underlying graphs")
    if cotree_signature(g1).cotree_signs != cotree_signature(g2).cotree_signs:
        return None
    s1, _ = forest_switching(g1)
    s2, _ = forest_switching(g2)
    s = s1 * s2
    assert switch(g1, s) == g2
    return s


# ---------------------------------------------------------------- canonical labelling

def _refine(cells: list[list[int]], nbrs: dict[int, set[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; new cells ordered by neighbour count."""
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            W = set(cells[w])
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(len(nbrs[v] & W), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[c] for c in sorted(groups))
                    changed = True
            cells = out
            if changed:
                break
    return cells


def _leaves(n: int, nbrs: dict[int, set[int]]):
    """Yield every discrete ordering reached by individualise-and-refine."""
    start = _refine([list(range(1, n + 1))], nbrs) if n else []
    stack = [start]
    while stack:
        cells = stack.pop()
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            yield [c[0] for c in cells]
            continue
        cell = cells[target]
        for v in reversed(cell):
            rest = [x for x in cell if x != v]
            stack.append(_refine(cells[:target] + [[v], rest] + cells[target + 1:], nbrs))


def _pairs_code(g: SignedGraph, label: dict[int, int]) -> tuple:
    return tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v, _ in g.edges))


@lru_cache(maxsize=256)
def _canonical_underlying(n: int, pairs: tuple[tuple[int, int], ...]):
    """Minimal relabelled edge list and every labelling attaining it."""
    g = SignedGraph(n, tuple((u, v, 1) for u, v in pairs))
    nbrs = {v: set(nb) for v, nb in g.neighbors.items()}
    best, perms = None, []
    for order in _leaves(n, nbrs):
        label = {v: i for i, v in enumerate(order, 1)}
        code = _pairs_code(g, label)
        if best is None or code < best:
            best, perms = code, [label]
        elif code == best:
            perms.append(label)
    return best, tuple(perms)


def _canonical(g: SignedGraph, max_n: int):
    if g.n > max_n:
        raise TooLarge(f"{g.n} vertices exceeds the canonical-form guard {max_n}")
    best_pairs, perms = _canonical_underlying(g.n, tuple(g.edge_pairs))
    best, best_label = None, None
    for label in perms:
        code = cotree_signature(g.relabel(label)).cotree_signs
        if best is None or code < best:
            best, best_label = code, label
    return best_pairs, best, best_label


def canonical_signature(g: SignedGraph, max_n: int = CANONICAL_MAX_N) -> bytes:
    """Equal outputs iff the two signed graphs are switching isomorphic."""
    pairs, signs, _ = _canonical(g, max_n)
    body = ";".join(f"{u},{v}" for u, v in pairs)
    sig = "".join("-" if s == -1 else "+" for s in signs)
    return f"{g.n}|{body}|{sig}".encode()


@dataclass(frozen=True)
class SwitchingIsomorphism:
    """``switch(g1.relabel(perm), switching) == g2``."""

    perm: dict[int, int]
    switching: SwitchingVector


def switching_isomorphism(g1: SignedGraph, g2: SignedGraph,
                          max_n: int = CANONICAL_MAX_N) -> SwitchingIsomorphism | None:
    if g1.n != g2.n or g1.m != g2.m:
        return None
    p1, s1, l1 = _canonical(g1, max_n)
    p2, s2, l2 = _canonical(g2, max_n)
    if (p1, s1) != (p2, s2):
        return None
    inv2 = {c: v for v, c in l2.items()}
    perm = {v: inv2[l1[v]] for v in range(1, g1.n + 1)}
    s = switching_equivalent(g1.relabel(perm), g2)
    assert s is not None
    return SwitchingIsomorphism(perm, s)


def is_sign_symmetric(g: SignedGraph, max_n: int = CANONICAL_MAX_N):
    """``(True, certificate)`` when g is switching isomorphic to its negation."""
    cert = switching_isomorphism(g, negate(g), max_n)
    return cert is not None, cert


# ---------------------------------------------------------------- class enumeration

PETERSEN_LABELS = {
    (0, Fraction(0)): "+P ~ -P_{3,3}",
    (1, Fraction(752, 2069)): "P_1 ~ -P_{2,3}",
    (2, Fraction(5536, 8569)): "P_{2,2} ~ -P_{2,2}",
    (2, Fraction(6904, 10345)): "P_{2,3} ~ -P_1",
    (3, Fraction(168, 235)): "P_{3,2} ~ -P_{3,2}",
    (3, Fraction(1944, 2821)): "P_{3,3} ~ -P",
}


@dataclass(frozen=True)
class ClassReport:
    representative: SignedGraph
    class_size: int
    frustration: int
    unbalance: Fraction
    label: str
    canonical: bytes


def _is_petersen(g: SignedGraph) -> bool:
    if g.n != 10 or g.m != 15:
        return False
    pet = family("petersen")
    return _canonical_underlying(10, tuple(g.edge_pairs))[0] == _canonical_underlying(10, tuple(pet.edge_pairs))[0]


def enumerate_switching_iso_classes(underlying: SignedGraph,
                                    max_cyclomatic: int = CLASS_MAX_CYCLOMATIC) -> list[ClassReport]:
    """All switching-isomorphism classes of signatures on one underlying graph."""
    from .measures import frustration_index, unbalance_level

    base = underlying.underlying()
    parent, _, _ = spanning_forest(base)
    forest = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
    co_idx = [i for i, (u, v) in enumerate(base.edge_pairs) if (u, v) not in forest]
    if len(co_idx) > max_cyclomatic:
        raise TooLarge(f"2^{len(co_idx)} switching classes exceeds the guard 2^{max_cyclomatic}")
    groups: dict[bytes, list[SignedGraph]] = {}
    for mask in range(1 << len(co_idx)):
        signs = [1] * base.m
        for j, i in enumerate(co_idx):
            if mask >> j & 1:
                signs[i] = -1
        g = base.with_signs(signs)
        groups.setdefault(canonical_signature(g), []).append(g)
    petersen = _is_petersen(base)
    reports = []
    for key, members in groups.items():
        rep = members[0]
        fr = frustration_index(rep).index
        ub = unbalance_level(rep).ell
        label = PETERSEN_LABELS.get((fr, ub), "") if petersen else ""
        reports.append(ClassReport(rep, len(members), fr, ub, label, key))
    reports.sort(key=lambda r: (r.frustration, r.unbalance, r.canonical))
    for i, r in enumerate(reports, 1):
        if not r.label:
            object.__setattr__(r, "label", f"class {i}")
    return reports
