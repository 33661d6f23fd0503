"""Exact integer and rational linear algebra for the cone and semigroup
machinery: a triangular integer lattice basis maintained by extended-gcd
row reduction, integer rank via the same reduction, and a rational
phase-1 simplex feasibility test.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Edge = tuple[int, int]


def rho_vector(d: int, e: Edge) -> tuple[int, ...]:
    """0/1 exponent vector of an edge: ones at both endpoints."""
    i, j = e
    if not (1 <= i < j <= d):
        raise ValueError(f"edge {e} outside 1..{d}")
    v = [0] * d
    v[i - 1] = 1
    v[j - 1] = 1
    return tuple(v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class IntegerLattice:
    """Integer span of added vectors, kept as a triangular basis.

    Rows are sorted by pivot column and each pivot entry is positive.
    Membership reduces against the basis; it succeeds iff every pivot
    divides the running entry and the remainder reaches zero.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[int]] = []

    @staticmethod
    def _pivot(row: Sequence[int]) -> int | None:
        for idx, val in enumerate(row):
            if val:
                return idx
        return None

    def _row_at_pivot(self, j: int) -> int | None:
        for pos, row in enumerate(self.rows):
            p = self._pivot(row)
            if p == j:
                return pos
            if p is not None and p > j:
                return None
        return None

    def add(self, vec: Sequence[int]) -> None:
        if len(vec) != self.dim:
            raise ValueError("dimension mismatch")
        v = list(vec)
        while True:
            j = self._pivot(v)
            if j is None:
                return
            pos = self._row_at_pivot(j)
            if pos is None:
                if v[j] < 0:
                    v = [-t for t in v]
                self.rows.append(v)
                self.rows.sort(key=lambda r: self._pivot(r))
                return
            row = self.rows[pos]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                v = [t - q * s for t, s in zip(v, row)]
            else:
                g, x, y = xgcd(a, b)
                new_row = [x * s + y * t for s, t in zip(row, v)]
                v = [(a // g) * t - (b // g) * s for s, t in zip(row, v)]
                self.rows[pos] = new_row

    def contains(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.dim:
            raise ValueError("dimension mismatch")
        v = list(vec)
        while True:
            j = self._pivot(v)
            if j is None:
                return True
            pos = self._row_at_pivot(j)
            if pos is None:
                return False
            row = self.rows[pos]
            if v[j] % row[j] != 0:
                return False
            q = v[j] // row[j]
            v = [t - q * s for t, s in zip(v, row)]

    @property
    def rank(self) -> int:
        return len(self.rows)


def integer_rank(rows: Sequence[Sequence[int]], dim: int | None = None) -> int:
    """Rank over Q of integer row vectors, by exact integer reduction."""
    rows = list(rows)
    if dim is None:
        if not rows:
            raise ValueError("cannot infer dimension of an empty row list")
        dim = len(rows[0])
    lat = IntegerLattice(dim)
    for row in rows:
        lat.add(row)
    return lat.rank


def in_rational_cone(generators: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Exact feasibility of target = sum lambda_g * g with rational
    lambda >= 0, decided by a phase-1 simplex over Fractions.

    Bland's rule on both the entering and leaving choice guarantees
    termination.  Feasible iff the artificial objective reaches zero.
    """
    n = len(generators)
    if n == 0:
        return all(t == 0 for t in target)
    m = len(target)
    for gvec in generators:
        if len(gvec) != m:
            raise ValueError("generator dimension mismatch")

    # rows: A lambda = b with b >= 0 after sign normalization
    tab: list[list[Fraction]] = []
    for i in range(m):
        sign = -1 if target[i] < 0 else 1
        row = [Fraction(sign * gvec[i]) for gvec in generators]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(Fraction(sign * target[i]))
        tab.append(row)
    ncols = n + m
    basis = [n + i for i in range(m)]

    # minimize w = sum of artificials; reduced costs with artificial basis
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(ncols):
        cj = Fraction(1) if j >= n else Fraction(0)
        obj[j] = cj - sum(tab[i][j] for i in range(m))
    obj[ncols] = -sum(tab[i][ncols] for i in range(m))

    while True:
        enter = None
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded phase-1 objective cannot happen (w >= 0); defensive
            raise ArithmeticError("phase-1 simplex detected unbounded direction")
        piv = tab[leave][enter]
        tab[leave] = [t / piv for t in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [t - f * s for t, s in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [t - f * s for t, s in zip(obj, tab[leave])]
        basis[leave] = enter

    return obj[ncols] == 0
