"""Recover the small named graphs by exhaustive search on their invariants.

Only unbalance levels and spectra of these graphs are known, so the edge
lists stored in ``tokensign.core.NAMED_GRAPHS`` were found by searching:

* k5_three_negative: K_5 signatures with three negative edges and ell = 124/149.
* k23_negative_chord: connected signed graphs on 5 vertices with ell_m = 152/261 for
  some m; the hit with ell(F_2) = 249552/321191 is kept.
* bird: checked (not searched) against its base spectrum and ell(F_2).

Run: python3 scripts/recover_named_graphs.py
"""
from fractions import Fraction
from itertools import combinations

import numpy as np

from tokensign import SignedGraph, ell, family, token_graph
from tokensign.core import forest_switching, is_balanced
from tokensign.linalg import adjacency
from tokensign.measures import unbalance_level_m


def search_k5(target=Fraction(124, 149)):
    pairs = list(combinations(range(1, 6), 2))
    hits = []
    for negs in combinations(pairs, 3):
        g = SignedGraph.from_edges(5, [(u, v, -1 if (u, v) in negs else 1) for u, v in pairs])
        if ell(g) == target:
            hits.append(g)
    return hits


def search_five_vertex(target=Fraction(152, 261), token_target=Fraction(249552, 321191)):
    pairs = list(combinations(range(1, 6), 2))
    hits = []
    for bits in range(1, 1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if bits >> i & 1]
        base = SignedGraph.from_edges(5, [(u, v, 1) for u, v in chosen])
        if len({v for p in chosen for v in p}) < 5:
            continue
        _, parent = forest_switching(base)
        if sum(p is None for p in parent.values()) != 1:
            continue  # disconnected
        forest = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
        co = [i for i, p in enumerate(base.edge_pairs) if p not in forest]
        for mask in range(1 << len(co)):
            signs = [1] * base.m
            for j, i in enumerate(co):
                if mask >> j & 1:
                    signs[i] = -1
            g = base.with_signs(signs)
            if is_balanced(g):
                continue
            if any(unbalance_level_m(g, m) == target for m in range(7)):
                if ell(token_graph(g, 2).graph) == token_target:
                    hits.append(g)
    return hits


def check_bird():
    g = family("bird")
    ev = np.linalg.eigvalsh(adjacency(g).to_float())
    r5 = 5 ** 0.5
    expected = np.sort([0, 0, 1, -1, r5, r5, -r5, -r5])
    return bool(np.allclose(ev, expected, atol=1e-9)), ell(token_graph(g, 2).graph)


if __name__ == "__main__":
    k5 = search_k5()
    print(f"K_5 signatures with ell = 124/149: {len(k5)}")
    for g in k5[:3]:
        print("  negative edges:", [(u, v) for u, v, s in g.edges if s < 0],
              " ell(F_2) =", ell(token_graph(g, 2).graph))
    five = search_five_vertex()
    print(f"5-vertex graphs matching both levels: {len(five)}")
    for g in five[:3]:
        print("  ", g.edges)
    ok, lt = check_bird()
    print(f"bird spectrum matches: {ok}; ell(F_2) = {lt}")
