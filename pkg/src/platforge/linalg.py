"""Exact integer linear algebra: Bareiss determinants and Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix, zeros last.

    The list has min(rows, cols) entries.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    done = False
            if not done:
                # move the smallest nonzero entry of row/column t to the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(cands)
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            # divisibility repair: pivot must divide the rest of the block
            p = a[t][t]
            for i in range(t + 1, rows):
                if any(a[i][j] % p for j in range(t + 1, cols)):
                    for j in range(t, cols):
                        a[t][j] += a[i][j]
                    done = False
                    break
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


@dataclass
class AbelianGroupPresentation:
    """Finitely generated abelian group: generators = columns of ``relations``.

    ``snf_diagonal`` has one entry per generator; a 0 entry is a Z summand.
    """

    relations: list[list[int]]
    snf_diagonal: list[int] = field(default_factory=list)
    generators: int = 0

    @classmethod
    def from_relations(cls, relations: Sequence[Sequence[int]], generators: int | None = None):
        rel = [list(map(int, r)) for r in relations]
        ngen = generators if generators is not None else (len(rel[0]) if rel else 0)
        diag = smith_diagonal(rel) if rel and ngen else []
        diag = diag + [0] * (ngen - len(diag))
        return cls(rel, diag, ngen)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.snf_diagonal if d == 0)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.snf_diagonal if d > 1]

    def is_trivial(self) -> bool:
        return all(d == 1 for d in self.snf_diagonal)

    def order(self) -> int:
        """Order of the group, 0 when infinite."""
        if self.rank:
            return 0
        out = 1
        for d in self.snf_diagonal:
            out *= d
        return out

    def invariant_factors(self) -> list[int]:
        """Nontrivial factors: torsion d_i > 1 then one 0 per Z summand."""
        return self.torsion + [0] * self.rank

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"

    @classmethod
    def direct_sum(cls, groups: Sequence[AbelianGroupPresentation], free_rank: int = 0):
        total = sum(g.generators for g in groups) + free_rank
        rel = []
        offset = 0
        for g in groups:
            for row in g.relations:
                rel.append([0] * offset + list(row) + [0] * (total - offset - g.generators))
            offset += g.generators
        return cls.from_relations(rel, total)


def rational_solve_interpolation(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (low to high) of the polynomial through the points."""
    n = len(xs)
    # Newton divided differences
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        new = [Fraction(0)] * n
        for i, c in enumerate(poly):
            if c:
                if i + 1 < n:
                    new[i + 1] += c
                new[i] -= c * xs[k]
        new[0] += coef[k]
        poly = new
    return poly
