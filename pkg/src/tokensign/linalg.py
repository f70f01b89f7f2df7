"""Exact integer linear algebra plus a cyclic Jacobi eigensolver.

Exact matrices hold Python ints in numpy object arrays, so products never
overflow. Floating work is confined to :func:`eigenvalues_symmetric`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import DivisionByZeroPolynomial, NoConvergence, NotSymmetric, SizeMismatch

if TYPE_CHECKING:
    from .core import SignedGraph


class ExactMatrix:
    """Square matrix of arbitrary-precision integers."""

    __slots__ = ("a",)

    def __init__(self, a: np.ndarray):
        a = np.asarray(a, dtype=object)
        if a.ndim != 2:
            raise SizeMismatch("matrix must be two-dimensional")
        self.a = a

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ExactMatrix:
        a = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                a[i, j] = int(x)
        return cls(a)

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> ExactMatrix:
        a = np.empty((n, n if m is None else m), dtype=object)
        a.fill(0)
        return cls(a)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        M = cls.zeros(n)
        for i in range(n):
            M.a[i, i] = 1
        return M

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> ExactMatrix:
        M = cls.zeros(len(values))
        for i, x in enumerate(values):
            M.a[i, i] = int(x)
        return M

    @property
    def order(self) -> int:
        return self.a.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __getitem__(self, ij):
        return self.a[ij]

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape[1] != other.shape[0]:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return ExactMatrix(self.a.dot(other.a))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise SizeMismatch(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.a + other.a)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise SizeMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return ExactMatrix(self.a - other.a)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(-self.a)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.a == other.a))

    __hash__ = None

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.a.T.copy())

    def trace(self) -> int:
        return int(sum(self.a[i, i] for i in range(min(self.shape))))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.a.flat)

    def is_symmetric(self) -> bool:
        return self.shape[0] == self.shape[1] and bool(np.all(self.a == self.a.T))

    def abs(self) -> ExactMatrix:
        return ExactMatrix(np.vectorize(abs, otypes=[object])(self.a))

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.a]

    def to_float(self) -> np.ndarray:
        return self.a.astype(float)

    def to_json(self) -> list[list[str]]:
        return [[str(int(x)) for x in row] for row in self.a]

    @classmethod
    def from_json(cls, rows: list[list[str]]) -> ExactMatrix:
        return cls.from_rows([[int(x) for x in row] for row in rows])

    def __repr__(self):
        return f"ExactMatrix({self.tolist()})"


@dataclass(frozen=True)
class ExactPolynomial:
    """Polynomial with exact coefficients, lowest degree first.

    Coefficients are ints; quotients over the rationals may carry Fractions.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        c = [int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> ExactPolynomial:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ExactPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def __mul__(self, other: ExactPolynomial) -> ExactPolynomial:
        if not self.coeffs or not other.coeffs:
            return ExactPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPolynomial(tuple(out))

    def __pow__(self, e: int) -> ExactPolynomial:
        out = ExactPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, divisor: ExactPolynomial) -> tuple[ExactPolynomial, ExactPolynomial]:
        """Long division over the rationals."""
        if divisor.is_zero():
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = divisor.coeffs
        dl = Fraction(d[-1])
        q = [Fraction(0)] * max(len(rem) - len(d) + 1, 0)
        for i in range(len(rem) - len(d), -1, -1):
            f = rem[i + len(d) - 1] / dl
            q[i] = f
            if f:
                for j, c in enumerate(d):
                    rem[i + j] -= f * c
        return ExactPolynomial(tuple(q)), ExactPolynomial(tuple(rem))

    def roots_float(self) -> np.ndarray:
        if self.degree < 1:
            return np.array([])
        return np.roots([float(c) for c in reversed(self.coeffs)])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: list[str]) -> ExactPolynomial:
        return cls(tuple(Fraction(c) if "/" in c else int(c) for c in coeffs))

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}{'*' + mono if mono else ''}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float = 1e-9

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def matches(self, expected: Sequence[float], tol: float | None = None) -> bool:
        tol = self.tolerance if tol is None else tol
        exp = sorted(expected)
        return len(exp) == len(self) and all(abs(a - b) <= tol for a, b in zip(self.eigenvalues, exp))

    def is_origin_symmetric(self, tol: float | None = None) -> bool:
        tol = self.tolerance if tol is None else tol
        ev = self.eigenvalues
        return all(abs(a + b) <= tol for a, b in zip(ev, reversed(ev)))


# ---------------------------------------------------------------- graph matrices

def adjacency(g: SignedGraph) -> ExactMatrix:
    A = ExactMatrix.zeros(g.n)
    for u, v, s in g.edges:
        A.a[u - 1, v - 1] = s
        A.a[v - 1, u - 1] = s
    return A


def unsigned_adjacency(g: SignedGraph) -> ExactMatrix:
    return adjacency(g.underlying())


def laplacian(g: SignedGraph) -> ExactMatrix:
    L = -adjacency(g)
    for v, nb in g.neighbors.items():
        L.a[v - 1, v - 1] = len(nb)
    return L


def power_traces(M: ExactMatrix, m: int) -> list[int]:
    """``[tr M^0, tr M^1, ..., tr M^m]`` by repeated exact multiplication."""
    if m < 0:
        raise ValueError("m must be non-negative")
    out = [M.order]
    P = M
    for r in range(1, m + 1):
        if r > 1:
            P = P @ M
        out.append(P.trace())
    return out


def char_poly(M: ExactMatrix) -> ExactPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence over the integers."""
    n = M.order
    c = [0] * (n + 1)
    c[n] = 1
    Mk = ExactMatrix.zeros(n)
    I = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk
        if c[n - k + 1]:
            Mk = Mk + ExactMatrix(I.a * c[n - k + 1])
        t = (M @ Mk).trace()
        q, r = divmod(-t, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c[n - k] = q
    return ExactPolynomial(tuple(c))


def poly_divides(p: ExactPolynomial, q: ExactPolynomial) -> tuple[bool, ExactPolynomial | None]:
    """Whether p divides q over the rationals, with the quotient when it does."""
    quo, rem = q.divmod(p)
    if rem.is_zero():
        return True, quo
    return False, None


def commute(M1: ExactMatrix, M2: ExactMatrix) -> bool:
    if M1.shape != M2.shape:
        raise SizeMismatch(f"orders {M1.shape} and {M2.shape} differ")
    return (M1 @ M2) == (M2 @ M1)


def rational_rank(M: ExactMatrix | np.ndarray) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    a = M.a if isinstance(M, ExactMatrix) else np.asarray(M, dtype=object)
    rows = [[Fraction(int(x)) for x in row] for row in a]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rank += 1
    return rank


# ---------------------------------------------------------------- Jacobi

def jacobi_eigh(M, tol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations on a symmetric matrix.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors
    (columns). Stops once the off-diagonal Frobenius norm falls below
    ``tol`` times the Frobenius norm of the input.
    """
    a = M.to_float() if isinstance(M, ExactMatrix) else np.array(M, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.array_equal(a, a.T):
        raise NotSymmetric("matrix is not symmetric")
    V = np.eye(n)
    if n == 0:
        return np.zeros(0), V
    target = tol * math.sqrt(float(np.sum(a * a)))

    def off_norm():
        off = a - np.diag(np.diag(a))
        return math.sqrt(float(np.sum(off * off)))

    for _ in range(max_sweeps):
        if off_norm() <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    else:
        if off_norm() > target:
            raise NoConvergence(f"off-diagonal norm {off_norm():.3e} after {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def eigenvalues_symmetric(M, tol: float = 1e-12, max_sweeps: int = 100) -> Spectrum:
    w, _ = jacobi_eigh(M, tol=tol, max_sweeps=max_sweeps)
    return Spectrum(tuple(float(x) for x in w))
