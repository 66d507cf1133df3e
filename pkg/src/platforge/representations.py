"""
Homological images of braids: the reduced Burau representation, Dehn-twist
words for the chain curves on a closed genus-g surface, the symplectic action
on H_1 of that surface, and the homology of the resulting mapping tori.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, format_letters, parse_letters
from .errors import DomainError
from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly
from .linalg import AbelianGroupPresentation

_T = LaurentPoly({1: 1})
_NEG_T = LaurentPoly({1: -1})
_T_INV = LaurentPoly({-1: 1})
_NEG_T_INV = LaurentPoly({-1: -1})


# --- twist words -------------------------------------------------------------


@dataclass(frozen=True)
class TwistWord:
    """Dehn twists about the chain curves c_1..c_{2g+1}, applied left to right."""

    genus: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus < 1:
            raise DomainError(f"genus must be >= 1, got {self.genus}")
        for x in self.letters:
            if x == 0 or abs(x) > 2 * self.genus + 1:
                raise DomainError(f"twist index {abs(x)} outside [1, {2 * self.genus + 1}]")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters, "t")

    @classmethod
    def parse(cls, text: str, genus: int) -> TwistWord:
        return cls(genus, tuple(parse_letters(text, prefix="t")))


def genus_of(b: BraidWord) -> int:
    if b.n % 2 or b.n < 4:
        raise DomainError(f"need an even strand count 2g+2 with g >= 1, got {b.n}")
    return (b.n - 2) // 2


def twist_word(b: BraidWord) -> TwistWord:
    """sigma_i^e -> t_i^e, letter by letter."""
    return TwistWord(genus_of(b), b.letters)


# --- reduced Burau -----------------------------------------------------------

# 3x3 blocks on rows/columns i-2, i-1, i (0-based) for sigma_i, clipped at the edges.
_BLOCK = ((ONE, _T, ZERO), (ZERO, _NEG_T, ZERO), (ZERO, ONE, ONE))
_BLOCK_INV = ((ONE, ONE, ZERO), (ZERO, _NEG_T_INV, ZERO), (ZERO, _T_INV, ONE))
_BLOCK_INT = {  # the same blocks at t = -1
    1: ((1, -1, 0), (0, 1, 0), (0, 1, 1)),
    -1: ((1, 1, 0), (0, 1, 0), (0, -1, 1)),
}


def _block_span(i: int, m: int) -> list[tuple[int, int]]:
    """(matrix index, block index) pairs of sigma_i's block inside an m x m matrix."""
    return [(i - 2 + k, k) for k in range(3) if 0 <= i - 2 + k < m]


def burau_generator(n: int, x: int) -> LaurentMatrix:
    m = n - 1
    out = LaurentMatrix.identity(m)
    block = _BLOCK if x > 0 else _BLOCK_INV
    span = _block_span(abs(x), m)
    for r, br in span:
        for c, bc in span:
            out.rows[r][c] = block[br][bc]
    return out


def _right_multiply(rows, x: int, m: int, block, zero):
    """rows <- rows * G(x), touching only the block's columns."""
    span = _block_span(abs(x), m)
    for row in rows:
        old = [row[c] for c, _ in span]
        for c, bc in span:
            acc = zero
            for (_, br), v in zip(span, old):
                coef = block[br][bc]
                if coef == 1:
                    acc = acc + v
                elif coef != 0:
                    acc = acc + v * coef
            row[c] = acc


def burau_reduced(b: BraidWord) -> LaurentMatrix:
    """Reduced Burau matrix of b, the product of generator matrices in word order."""
    m = b.n - 1
    rows = LaurentMatrix.identity(m).rows
    for x in b.letters:
        _right_multiply(rows, x, m, _BLOCK if x > 0 else _BLOCK_INV, ZERO)
    return LaurentMatrix(rows)


def burau_at_minus_one(b: BraidWord) -> list[list[int]]:
    """Integer matrix burau_reduced(b) evaluated at t = -1, built directly."""
    m = b.n - 1
    rows = [[int(i == j) for j in range(m)] for i in range(m)]
    for x in b.letters:
        _right_multiply(rows, x, m, _BLOCK_INT[1 if x > 0 else -1], 0)
    return rows


# --- symplectic action -------------------------------------------------------


def symplectic_form(g: int) -> list[list[int]]:
    """J = [[0, I], [-I, 0]] in the basis a_1..a_g, b_1..b_g."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for k in range(g):
        J[k][g + k] = 1
        J[g + k][k] = -1
    return J


def chain_class(g: int, i: int) -> list[int]:
    """Homology class of the chain curve c_i in the Darboux basis.

    c_1 = a_1, c_{2k} = b_k, c_{2k+1} = a_{k+1} - a_k and c_{2g+1} = -a_g, so
    consecutive curves meet once and the odd classes sum to zero.
    """
    v = [0] * (2 * g)
    if i == 1:
        v[0] = 1
    elif i % 2 == 0:
        v[g + i // 2 - 1] = 1
    elif i == 2 * g + 1:
        v[g - 1] = -1
    else:
        k = (i - 1) // 2
        v[k] = 1
        v[k - 1] = -1
    return v


def _pairing(u, v, g: int) -> int:
    # <u, v> = u^T J v
    return sum(u[k] * v[g + k] - u[g + k] * v[k] for k in range(g))


def symplectic_action(b: BraidWord) -> list[list[int]]:
    """Matrix of the chain-twist image of b on H_1(surface of genus g).

    Each twist acts as the transvection x -> x + e<x, c>c; the matrix is the
    product of the twist matrices in word order, applied as column operations.
    """
    g = genus_of(b)
    size = 2 * g
    M = [[int(i == j) for j in range(size)] for i in range(size)]
    classes = {i: chain_class(g, i) for i in range(1, 2 * g + 2)}
    for x in b.letters:
        c = classes[abs(x)]
        e = 1 if x > 0 else -1
        # T_{j,k} = delta_jk + e <basis_k, c> c_j, hence (M T)_{r,k} = M_rk + e <basis_k, c> (M_r . c)
        w = [c[g + k] for k in range(g)] + [-c[k] for k in range(g)]
        for row in M:
            s = e * sum(row[k] * c[k] for k in range(size) if c[k])
            if s:
                for k in range(size):
                    if w[k]:
                        row[k] += s * w[k]
    return M


def twist_matrix(g: int, i: int, e: int = 1, c: list[int] | None = None) -> list[list[int]]:
    """Matrix of T_{c_i}^e: column y maps to y + e <y, c_i> c_i."""
    if c is None:
        c = chain_class(g, i)
    size = 2 * g
    out = []
    for r in range(size):
        row = []
        for col in range(size):
            basis = [int(k == col) for k in range(size)]
            row.append(int(r == col) + e * _pairing(basis, c, g) * c[r])
        out.append(row)
    return out


def _matmul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mapping_torus_homology(b: BraidWord) -> AbelianGroupPresentation:
    """H_1 of the mapping torus: Z plus the cokernel of A - I."""
    A = symplectic_action(b)
    size = len(A)
    rel = [[A[i][j] - int(i == j) for j in range(size)] for i in range(size)]
    base = AbelianGroupPresentation.from_relations(rel, size)
    return AbelianGroupPresentation.direct_sum([base], free_rank=1)
