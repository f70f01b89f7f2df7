"""Closed-form trace oracles, independent of any matrix arithmetic."""
from fractions import Fraction
from math import comb


def ell_from_traces(signed, unsigned, n):
    def level(m):
        num = sum(unsigned[r] - signed[r] for r in range(m + 1))
        den = sum(unsigned[r] + abs(signed[r]) for r in range(m + 1))
        return Fraction(num, den) if den else Fraction(0)
    return max(level(n - 1), level(n))


def cycle_traces(n, sign, r_max):
    """tr A^r for a cycle of sign ``sign``: closed walks winding w times."""
    out = []
    for r in range(r_max + 1):
        t = 0
        for w in range(-r, r + 1):
            if (r + w * n) % 2 == 0 and abs(w * n) <= r:
                t += comb(r, (r + w * n) // 2) * sign ** abs(w)
        out.append(t)
    return out


def complete_traces(n, r_max):
    return [(n - 1) ** r + (n - 1) * (-1) ** r for r in range(r_max + 1)]


def one_negative_complete_traces(n, r_max):
    """Spectrum 1, -1^(n-3) and the two roots of x^2 - (n-4)x - (3n-7)."""
    p = [2, n - 4]
    for _ in range(2, r_max + 1):
        p.append((n - 4) * p[-1] + (3 * n - 7) * p[-2])
    if n == 2:
        return [1 + (-1) ** r for r in range(r_max + 1)]
    return [1 + (n - 3) * (-1) ** r + p[r] for r in range(r_max + 1)]


def all_negative_complete_traces(n, r_max):
    return [(-(n - 1)) ** r + (n - 1) for r in range(r_max + 1)]


def ell_cycle(n, sign):
    return ell_from_traces(cycle_traces(n, sign, n), cycle_traces(n, 1, n), n)


def ell_complete(n, kind):
    unsigned = complete_traces(n, n)
    if kind == "Kn_minus":
        signed = one_negative_complete_traces(n, n)
    elif kind == "neg_Kn_plus":
        signed = [(-1) ** r * t for r, t in enumerate(one_negative_complete_traces(n, n))]
    else:
        signed = all_negative_complete_traces(n, n)
    return ell_from_traces(signed, unsigned, n)
