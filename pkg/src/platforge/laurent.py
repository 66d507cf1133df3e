"""Integer Laurent polynomials in one variable and square matrices over them."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Finite sum of c_k t^k with integer c_k; zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_degree(self) -> int:
        return min(self.coeffs)

    def max_degree(self) -> int:
        return max(self.coeffs)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials can be inverted")
            ((k, c),) = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({k * e: c ** abs(e)})
        out = LaurentPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, t):
        """Evaluate at an integer, Fraction or float value of the variable."""
        total = 0
        for k, c in self.coeffs.items():
            total += c * (Fraction(t) ** k if k < 0 and isinstance(t, int) else t ** k)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def substitute_inverse(self) -> LaurentPoly:
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def normalized(self) -> LaurentPoly:
        """Representative of the class mod units +-t^k: lowest degree 0, leading coefficient positive."""
        if not self.coeffs:
            return self
        p = self.shift(-self.min_degree())
        if p.coeffs[p.max_degree()] < 0:
            p = -p
        return p

    def __repr__(self):
        return f"LaurentPoly({self.coeffs})"

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                mono = str(a)
            else:
                power = var if k == 1 else f"{var}^{k}"
                mono = power if a == 1 else f"{a}*{power}"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text

    __str__ = format


T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


class LaurentMatrix:
    """Square matrix of LaurentPoly entries."""

    def __init__(self, rows: list[list[LaurentPoly]]):
        self.rows = rows
        self.size = len(rows)

    @classmethod
    def identity(cls, m: int) -> LaurentMatrix:
        return cls([[ONE if i == j else ZERO for j in range(m)] for i in range(m)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        m = self.size
        if other.size != m:
            raise ValueError("size mismatch")
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = ZERO
                for k in range(m):
                    a = self.rows[i][k]
                    if a.coeffs:
                        b = other.rows[k][j]
                        if b.coeffs:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def evaluate(self, t) -> list[list]:
        return [[e(t) for e in row] for row in self.rows]

    def __repr__(self):
        return "LaurentMatrix([" + ", ".join(
            "[" + ", ".join(e.format() for e in row) + "]" for row in self.rows
        ) + "])"
