from fractions import Fraction

import numpy as np
import pytest
import sympy
from conftest import signed_graphs
from hypothesis import given
from hypothesis import strategies as st

from tokensign import ExactMatrix, ExactPolynomial, adjacency, char_poly, eigenvalues_symmetric, family, laplacian
from tokensign.errors import DivisionByZeroPolynomial, NoConvergence, NotSymmetric, SizeMismatch
from tokensign.linalg import commute, jacobi_eigh, poly_divides, power_traces, rational_rank, unsigned_adjacency

int_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


def symmetric(rows):
    a = np.array(rows, dtype=np.int64)
    return (a + a.T).tolist()


def polys(max_deg=6):
    return st.lists(st.integers(-20, 20), min_size=1, max_size=max_deg + 1).map(lambda c: ExactPolynomial(tuple(c)))


# ---------------------------------------------------------------- exact matrices

def test_graph_matrices():
    g = family("paw_balanced")
    assert adjacency(g).tolist() == [[0, 1, 0, 0], [1, 0, -1, -1], [0, -1, 0, 1], [0, -1, 1, 0]]
    assert laplacian(g).tolist() == [[1, -1, 0, 0], [-1, 3, 1, 1], [0, 1, 2, -1], [0, 1, -1, 2]]
    assert unsigned_adjacency(g) == adjacency(g).abs()


@given(int_matrices)
def test_char_poly_matches_sympy(rows):
    ours = char_poly(ExactMatrix.from_rows(rows))
    x = sympy.symbols("x")
    ref = sympy.Matrix(rows).charpoly(x).all_coeffs()[::-1]
    assert list(ours.coeffs) == [int(c) for c in ref]


def test_char_poly_of_large_entries_stays_exact():
    M = ExactMatrix.from_rows([[10**12, 1], [1, -10**12]])
    assert char_poly(M).coeffs == (-(10**24) - 1, 0, 1)


@given(signed_graphs(min_n=1, max_n=6))
def test_power_traces_against_numpy(g):
    A = adjacency(g)
    ours = power_traces(A, 6)
    a = A.to_float()
    ref = [int(round(np.trace(np.linalg.matrix_power(a, r)))) for r in range(7)]
    assert ours == ref


def test_power_traces_beyond_int64():
    t = power_traces(adjacency(family("all_neg_Kn", 15)), 30)
    assert t[30] == 14**30 + 14


@given(int_matrices)
def test_rational_rank_matches_numpy(rows):
    assert rational_rank(ExactMatrix.from_rows(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


def test_exact_matrix_json_round_trip_and_errors():
    M = ExactMatrix.from_rows([[2**70, -1], [3, 0]])
    assert ExactMatrix.from_json(M.to_json()) == M
    with pytest.raises(SizeMismatch):
        M @ ExactMatrix.identity(3)
    with pytest.raises(SizeMismatch):
        commute(M, ExactMatrix.identity(3))


def test_commute():
    L = laplacian(family("paw_balanced"))
    assert commute(L, L) and not commute(L, adjacency(family("Cn_minus", 4)))


# ---------------------------------------------------------------- polynomials

@given(polys(), polys(4))
def test_divmod_reconstructs(p, d):
    if d.is_zero():
        return
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.is_zero() or r.degree < d.degree


def test_division_by_zero_polynomial():
    with pytest.raises(DivisionByZeroPolynomial):
        ExactPolynomial((1, 1)).divmod(ExactPolynomial(()))


def test_poly_divides():
    p = ExactPolynomial.from_roots([0, 1, 3])
    q = ExactPolynomial.from_roots([0, 1, 3, 3, 5])
    ok, quo = poly_divides(p, q)
    assert ok and quo == ExactPolynomial.from_roots([3, 5])
    assert poly_divides(ExactPolynomial.from_roots([2]), q) == (False, None)


def test_rational_quotient():
    q, r = ExactPolynomial((1, 0, 1)).divmod(ExactPolynomial((0, 2)))
    assert q.coeffs == (0, Fraction(1, 2)) and r.coeffs == (1,)


def test_polynomial_json_and_str():
    p = ExactPolynomial((5, 0, -6, 0, 1))
    assert ExactPolynomial.from_json(p.to_json()) == p
    assert str(p) == "x^4 - 6*x^2 + 5"


def test_polynomial_evaluation():
    p = ExactPolynomial.from_roots([1, -2])
    assert p(1) == 0 and p(-2) == 0 and p(0) == -2


# ---------------------------------------------------------------- Jacobi

@given(int_matrices)
def test_jacobi_matches_numpy_and_reconstructs(rows):
    M = np.array(symmetric(rows), dtype=float)
    w, V = jacobi_eigh(M)
    assert np.allclose(w, np.linalg.eigvalsh(M), atol=1e-9)
    scale = max(np.linalg.norm(M), 1.0)
    assert np.linalg.norm(V @ np.diag(w) @ V.T - M) <= 1e-8 * scale
    assert np.allclose(V.T @ V, np.eye(len(w)), atol=1e-10)


@given(signed_graphs(min_n=2, max_n=10))
def test_graph_spectra_match_numpy(g):
    ours = eigenvalues_symmetric(adjacency(g)).eigenvalues
    assert np.allclose(ours, np.linalg.eigvalsh(adjacency(g).to_float()), atol=1e-9)


def test_jacobi_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        jacobi_eigh(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_jacobi_reports_non_convergence():
    with pytest.raises(NoConvergence):
        jacobi_eigh(np.array([[1.0, 2.0], [2.0, 1.0]]), max_sweeps=0)


def test_spectrum_helpers():
    sp = eigenvalues_symmetric(adjacency(family("Kn_minus", 4)))
    r5 = 5 ** 0.5
    assert sp.matches([-r5, -1, 1, r5]) and sp.is_origin_symmetric()
    assert not sp.matches([-r5, -1, 1])


def test_empty_matrix():
    assert eigenvalues_symmetric(np.zeros((0, 0))).eigenvalues == ()
    assert char_poly(ExactMatrix.zeros(0)).coeffs == (1,)
