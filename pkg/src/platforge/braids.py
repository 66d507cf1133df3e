"""
Braid words in the Artin generators and the skew involution.

A word is a tuple of signed generator indices: ``3`` is sigma_3 and ``-3`` is
its inverse. Letters are read left to right, which stacks the braid diagrams
from bottom to top. Words are freely reduced when a ``BraidWord`` is built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidParseError, DimensionError, DomainError, MalformedInputError

_TOKEN = re.compile(r"^([sS])(.*)$")


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent ``x x^-1`` pairs until none remain."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """An element of B_n written as a freely reduced word."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"strand count must be a positive integer, got {self.n!r}")
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise MalformedInputError(
                    f"generator index {abs(x)} out of range [1, {self.n - 1}] for B_{self.n}"
                )
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise DimensionError(f"cannot multiply words in B_{self.n} and B_{other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __str__(self) -> str:
        return format_letters(self.letters, "s")

    def to_json(self) -> dict:
        return {"n": self.n, "word": str(self)}

    @classmethod
    def from_json(cls, payload: dict) -> BraidWord:
        return parse_braid(payload.get("word", ""), payload["n"])

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)


def format_letters(letters: Sequence[int], prefix: str) -> str:
    """Render signed indices as ``s3 S2`` style text (capital means inverse)."""
    return " ".join(f"{prefix}{x}" if x > 0 else f"{prefix.upper()}{-x}" for x in letters)


def parse_letters(text: str, prefix: str = "s") -> list[int]:
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok) if prefix == "s" else re.match(r"^([tT])(.*)$", tok)
        if m is None or not m.group(2).isdigit():
            raise BraidParseError(f"cannot parse token {tok!r}")
        k = int(m.group(2))
        letters.append(k if m.group(1).islower() else -k)
    return letters


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse ``"s3 s4 S2"`` into a word over ``n`` strands."""
    letters = parse_letters(text)
    for tok, x in zip(text.split(), letters):
        if x == 0 or abs(x) > n - 1:
            raise MalformedInputError(
                f"token {tok!r}: index {abs(x)} out of range [1, {n - 1}] for B_{n}"
            )
    return BraidWord(n, tuple(letters))


def skew(b: BraidWord) -> BraidWord:
    """Reverse the word and send sigma_i^e to sigma_{n-i}^e."""
    n = b.n
    return BraidWord(n, tuple((n - abs(x)) * (1 if x > 0 else -1) for x in reversed(b.letters)))


def tilde(b: BraidWord) -> BraidWord:
    """The skew-palindromic double ``skew(b) * b``."""
    return skew(b) * b


def family_b(g: int) -> BraidWord:
    """sigma_3 sigma_4 ... sigma_{2g+1} in B_{2g+2}."""
    if not isinstance(g, int) or g < 1:
        raise DomainError(f"family_b needs g >= 1, got {g!r}")
    return BraidWord(2 * g + 2, tuple(range(3, 2 * g + 2)))


# --- free group action -------------------------------------------------------


def _act(images: list[tuple[int, ...]], x: int) -> None:
    # images[j] holds phi_w(x_{j+1}); update in place to phi_{w x}.
    i = abs(x) - 1
    a, b = images[i], images[i + 1]
    inv_a = tuple(-y for y in reversed(a))
    inv_b = tuple(-y for y in reversed(b))
    if x > 0:
        images[i] = free_reduce(a + b + inv_a)
        images[i + 1] = a
    else:
        images[i] = b
        images[i + 1] = free_reduce(inv_b + a + b)


def artin_action(b: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of the free generators x_1..x_n under the Artin automorphism of ``b``."""
    images = [(j,) for j in range(1, b.n + 1)]
    for x in b.letters:
        _act(images, x)
    return tuple(images)


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    """Decide a == b in B_n through the faithful Artin action on F_n."""
    if a.n != b.n:
        raise DimensionError(f"strand counts differ: B_{a.n} vs B_{b.n}")
    if a.letters == b.letters:
        return True
    if sum(1 if x > 0 else -1 for x in a.letters) != sum(1 if x > 0 else -1 for x in b.letters):
        return False
    if underlying_permutation(a) != underlying_permutation(b):
        return False
    # a == b iff a b^-1 acts trivially; this keeps one image list instead of two.
    return artin_action(a * b.inverse()) == tuple((j,) for j in range(1, a.n + 1))


def is_skew_palindromic(b: BraidWord) -> bool:
    s = skew(b)
    if s.letters == b.letters:
        return True
    return braid_equal(s, b)


# --- permutations ------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise MalformedInputError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(tuple(im))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``self o other`` (apply ``other`` first)."""
        if other.n != self.n:
            raise DimensionError("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(self.n)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def underlying_permutation(b: BraidWord) -> Permutation:
    """Product of the transpositions (i i+1) over the letters, leftmost applied last."""
    p = Permutation.identity(b.n)
    for x in b.letters:
        p = p * Permutation.transposition(b.n, abs(x), abs(x) + 1)
    return p
