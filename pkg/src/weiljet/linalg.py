"""Exact Gaussian elimination over the rationals.

Right-hand sides handed to ``Preimage.solve`` may be any ring elements that
support ``+`` and multiplication by a rational (named polynomials included),
since row operations only ever scale by matrix entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import Inconsistent


def _frac_matrix(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in mat]


def rref(mat: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = _frac_matrix(mat)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r]
        inv = 1 / piv[c]
        # the matrices here are sparse: only touch the pivot row's support
        nz = [j for j in range(c, cols) if piv[j] != 0]
        for j in nz:
            piv[j] *= inv
        for i in range(rows):
            row = a[i]
            if i != r and row[c] != 0:
                f = row[c]
                for j in nz:
                    row[j] -= f * piv[j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(mat: Sequence[Sequence]) -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(mat)[1])


def nullspace(mat: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : mat x = 0}``."""
    if not mat:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    r, pivots = rref(mat)
    n = len(mat[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def mat_vec(mat: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for row in mat:
        acc = 0
        for a, x in zip(row, v):
            if a != 0 and x != 0:
                acc = acc + a * x
        out.append(acc)
    return out


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    cols = len(b[0]) if b else 0
    return [[sum((row[k] * b[k][j] for k in range(len(b))), 0) for j in range(cols)] for row in a]


class Preimage:
    """Solver for ``M x = b`` with ``M`` rational and injective.

    Elimination runs once on ``[M | I]``; each ``solve`` applies the recorded
    row operations to ``b`` and checks that the zero rows stay zero.
    """

    def __init__(self, mat: Sequence[Sequence]):
        self.rows = len(mat)
        self.cols = len(mat[0]) if self.rows else 0
        aug = [list(row) + [int(i == j) for j in range(self.rows)] for i, row in enumerate(mat)]
        red, pivots = rref(aug) if self.rows else ([], [])
        self.pivots = [p for p in pivots if p < self.cols]
        self.rank = len(self.pivots)
        self.injective = self.rank == self.cols
        self._ops = [
            {j: x for j, x in enumerate(row[self.cols:]) if x != 0} for row in red
        ]

    def _combine(self, k: int, b: Sequence):
        acc = 0
        for j, x in self._ops[k].items():
            if b[j] != 0:
                acc = acc + x * b[j]
        return acc

    def solve(self, b: Sequence) -> list:
        if not self.injective:
            raise Inconsistent("matrix is not injective; the preimage is not unique")
        if len(b) != self.rows:
            raise ValueError(f"right-hand side has {len(b)} entries, expected {self.rows}")
        for k in range(self.rank, self.rows):
            residue = self._combine(k, b)
            if residue != 0:
                raise Inconsistent(f"no preimage: combination {k} leaves {residue}", row=k)
        x: list = [0] * self.cols
        for k, p in enumerate(self.pivots):
            x[p] = self._combine(k, b)
        return x
