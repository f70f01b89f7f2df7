"""Executable checks of the structural results on token signed graphs.

Every checker returns a :class:`VerificationReport` whose certificate holds
enough data to recheck the claim independently.
"""
from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .core import (
    SignedGraph,
    SwitchingVector,
    balancing_switching,
    cycle_sign,
    enumerate_cycles,
    format_graph,
    is_balanced,
    signed_complement,
)
from .errors import TooLarge
from .linalg import (
    ExactPolynomial,
    adjacency,
    char_poly,
    commute,
    eigenvalues_symmetric,
    laplacian,
    poly_divides,
)
from .measures import random_balanced_graph, random_signed_graph
from .token import lift_switching, signed_binomial_matrix, token_graph, token_switching_pair

EIG_TOL = 1e-9


@dataclass
class VerificationReport:
    claim_id: str
    instance_description: str
    passed: bool
    certificate: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"claim_id": self.claim_id, "instance": self.instance_description,
                "passed": self.passed, "certificate": self.certificate}


def describe(g: SignedGraph) -> str:
    return format_graph(g).strip().replace("\n", " / ")


# ---------------------------------------------------------------- edge counts

def verify_edge_counts(g: SignedGraph, k: int) -> VerificationReport:
    F = token_graph(g, k).graph
    mult = comb(g.n - 2, k - 1)
    cert = {"k": k, "multiplier": mult, "base": [g.m_pos, g.m_neg], "token": [F.m_pos, F.m_neg]}
    ok = F.m_pos == mult * g.m_pos and F.m_neg == mult * g.m_neg
    return VerificationReport("edge-counts", describe(g), ok, cert)


# ---------------------------------------------------------------- cycle lifting

def admissible_k_primes(n: int, k: int, p: int) -> list[int]:
    return list(range(max(1, k + p - n), min(k, p - 1) + 1))


def rotation_walk(cycle: tuple[int, ...], on: tuple[int, ...], off: tuple[int, ...]) -> list[frozenset]:
    """Token configurations visited by one full rotation around ``cycle``.

    ``on`` holds the occupied cycle positions. They are read cyclically
    as i_1, ..., i_k' starting from a token whose predecessor is empty. The
    top token slides forward to i_1 - 1, every other token then slides
    forward onto the position its successor left, and finally the top token
    steps onto i_1. Every cycle edge is used exactly once, so the walk has
    p moves.
    """
    p = len(cycle)
    occupied = set(on)
    start = next(j for j, i in enumerate(on) if (i - 1) % p not in occupied)
    on = tuple(on[start:]) + tuple(on[:start])
    pos = list(on)
    fixed = frozenset(off)

    def config():
        return fixed | frozenset(cycle[i] for i in pos)

    walk = [config()]

    def slide(t, dest):
        while pos[t] != dest:
            pos[t] = (pos[t] + 1) % p
            walk.append(config())

    kk = len(on)
    slide(kk - 1, (on[0] - 1) % p)
    for j in range(kk - 2, -1, -1):
        slide(j, on[j + 1])
    slide(kk - 1, on[0])
    return walk


def verify_cycle_lift(g: SignedGraph, k: int, max_n: int = 7, max_k: int = 3) -> VerificationReport:
    if g.n > max_n or k > max_k:
        raise TooLarge(f"cycle lifting is checked only for n <= {max_n}, k <= {max_k}")
    T = token_graph(g, k)
    F = T.graph
    n = g.n
    failures = []
    checked = 0
    for cyc in enumerate_cycles(g):
        p = len(cyc)
        sgn = cycle_sign(g, cyc)
        rest = [v for v in range(1, n + 1) if v not in cyc]
        for kp in admissible_k_primes(n, k, p):
            for on in combinations(range(p), kp):
                lifted = set()
                for off in combinations(rest, k - kp):
                    walk = rotation_walk(cyc, on, off)
                    verts = [T.vertex(A) for A in walk]
                    closed = len(walk) == p + 1 and walk[0] == walk[-1]
                    distinct = len(set(verts[:-1])) == p
                    signs = [F.sign_of(a, b) for a, b in zip(verts, verts[1:])]
                    prod = int(np.prod(signs)) if signs else 0
                    ok = closed and distinct and all(signs) and prod == sgn
                    checked += 1
                    if not ok:
                        failures.append({"cycle": list(cyc), "k_prime": kp, "on": list(on),
                                         "off": list(off), "walk": verts})
                    lifted.add(frozenset(frozenset(e) for e in zip(verts, verts[1:])))
                if len(lifted) != comb(n - p, k - kp):
                    failures.append({"cycle": list(cyc), "k_prime": kp, "on": list(on),
                                     "distinct_cycles": len(lifted), "expected": comb(n - p, k - kp)})
    cert = {"k": k, "walks_checked": checked, "failures": failures[:10]}
    return VerificationReport("cycle-lift", describe(g), not failures, cert)


# ---------------------------------------------------------------- switching lift

def verify_token_switch(g: SignedGraph, u: SwitchingVector, k: int) -> VerificationReport:
    left, right = token_switching_pair(g, u, k)
    cert = {"k": k, "U": sorted(u.U), "U_k": sorted(lift_switching(u, k).U),
            "differing_edges": [(a, b) for (a, b, s), (_, _, t) in zip(left.edges, right.edges) if s != t]}
    ok = left == right
    return VerificationReport("token-switch", describe(g), ok, cert)


# ---------------------------------------------------------------- Laplacian results

def _token_laplacian(g, k):
    return laplacian(g if k == 1 else token_graph(g, k).graph)


def verify_intertwining(g: SignedGraph, k1: int, k2: int) -> VerificationReport:
    B = signed_binomial_matrix(g, k1, k2).as_exact()
    diff = B @ _token_laplacian(g, k1) - _token_laplacian(g, k2) @ B
    cert = {"k1": k1, "k2": k2, "B": B.tolist(), "max_abs_diff": max((abs(x) for x in diff.a.flat), default=0)}
    return VerificationReport("intertwine", describe(g), diff.is_zero(), cert)


def verify_spectrum_containment(g: SignedGraph, k: int) -> VerificationReport:
    balancing_switching(g)
    p = char_poly(laplacian(g))
    q = char_poly(_token_laplacian(g, k))
    ok, quo = poly_divides(p, q)
    cert = {"k": k, "p": p.to_json(), "q": q.to_json(), "quotient": quo.to_json() if quo else None}
    return VerificationReport("containment", describe(g), ok, cert)


def verify_complement(g: SignedGraph, tol: float = EIG_TOL) -> VerificationReport:
    n = g.n
    gc = signed_complement(g)
    L, Lc = laplacian(g), laplacian(gc)
    part1 = is_balanced(gc)
    target = ExactPolynomial((0, 1)) * ExactPolynomial((-n, 1)) ** (n - 1)
    part2 = char_poly(L + Lc) == target
    part3 = commute(L, Lc)
    lam = eigenvalues_symmetric(L).eigenvalues
    lamc = eigenvalues_symmetric(Lc).eigenvalues
    sums = [lam[i] + lamc[n - i] for i in range(1, n)]
    part4 = all(abs(x - n) <= tol for x in sums)
    cert = {"complement": describe(gc), "balanced": part1, "sum_is_Kn": part2, "commute": part3,
            "pair_sums": sums}
    return VerificationReport("complement", describe(g), part1 and part2 and part3 and part4, cert)


def johnson_laplacian_spectrum(n: int, k: int) -> list[int]:
    k = min(k, n - k)
    out = []
    for j in range(k + 1):
        out += [j * (n + 1 - j)] * (comb(n, j) - (comb(n, j - 1) if j else 0))
    return sorted(out)


def verify_token_complement(g: SignedGraph, k: int, tol: float = EIG_TOL) -> VerificationReport:
    gc = signed_complement(g)
    Lk, Lck = _token_laplacian(g, k), _token_laplacian(gc, k)
    comm = commute(Lk, Lck)
    spec = eigenvalues_symmetric(Lk + Lck)
    expected = johnson_laplacian_spectrum(g.n, k)
    match = spec.matches(expected, tol)
    cert = {"k": k, "commute": comm, "sum_spectrum": list(spec.eigenvalues), "johnson": expected}
    return VerificationReport("token-complement", describe(g), comm and match, cert)


# ---------------------------------------------------------------- sweep

CLAIMS = ("edge-counts", "cycle-lift", "token-switch", "intertwine",
          "containment", "complement", "token-complement")


def _rng(seed: int, claim: str, trial: int) -> random.Random:
    return random.Random(zlib.crc32(f"{seed}:{claim}:{trial}".encode()))


def run_claim(claim: str, trial: int, seed: int = 0, n_max: int = 7, k_max: int = 3,
              tol: float = EIG_TOL) -> VerificationReport:
    """One seeded random instance of one claim."""
    rng = _rng(seed, claim, trial)
    n = rng.randint(3, n_max)
    k = rng.randint(1, min(k_max, n - 1))
    if claim == "edge-counts":
        rep = verify_edge_counts(random_signed_graph(rng, n), k)
    elif claim == "cycle-lift":
        rep = verify_cycle_lift(random_signed_graph(rng, n), k)
    elif claim == "token-switch":
        u = SwitchingVector(tuple(rng.choice((1, -1)) for _ in range(n)))
        rep = verify_token_switch(random_signed_graph(rng, n), u, k)
    elif claim == "intertwine":
        hi = min(k_max, n - 1)
        k1 = rng.randint(1, hi - 1)
        k2 = rng.randint(k1 + 1, hi)
        rep = verify_intertwining(random_balanced_graph(rng, n), k1, k2)
    elif claim == "containment":
        rep = verify_spectrum_containment(random_balanced_graph(rng, n), k)
    elif claim == "complement":
        rep = verify_complement(random_balanced_graph(rng, n), tol)
    elif claim == "token-complement":
        rep = verify_token_complement(random_balanced_graph(rng, n), k, tol)
    else:
        raise ValueError(f"unknown claim {claim!r}")
    rep.certificate["trial"] = trial
    return rep


def sweep(trials: int = 100, seed: int = 0, claims=CLAIMS, n_max: int = 7, k_max: int = 3,
          tol: float = EIG_TOL):
    """Run each claim on ``trials`` seeded instances; returns (reports, summary)."""
    reports = []
    summary = {}
    for claim in claims:
        passed = 0
        for t in range(trials):
            rep = run_claim(claim, t, seed, n_max, k_max, tol)
            reports.append(rep)
            passed += rep.passed
        summary[claim] = {"trials": trials, "passed": passed, "failed": trials - passed}
    return reports, summary
