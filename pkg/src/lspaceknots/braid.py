"""
Braid words, closure bookkeeping, positive-braid genus, and the reduced
Burau route to the Alexander polynomial of a braid closure.

Burau convention used here, fixed once: in B_n the generator sigma_i acts on
the basis e_1, ..., e_{n-1} as the identity except on e_{i-1}, e_i, e_{i+1},
where its matrix block is

        [ 1   t   0 ]
        [ 0  -t   0 ]      (rows/columns i-1, i, i+1; truncated at the ends)
        [ 0   1   1 ]

so that in B_2 the generator is the 1x1 matrix [-t].  Right-multiplying a
matrix by sigma_i^{+1} rewrites column i only:

    col_i <- t*(col_{i-1} - col_i) + col_{i+1}

and by sigma_i^{-1} (exact inverse block, entries are Laurent polynomials):

    col_i <- col_{i-1} + t^{-1}*(col_{i+1} - col_i)

Any published convention differing by transpose, inverse, or units gives the
same Alexander polynomial after unit normalization, which is all the closure
invariant is defined up to.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import LaurentPoly, NotDivisibleError

__all__ = [
    "BraidWord",
    "NotAKnotError",
    "NonPositiveWordError",
    "closure_permutation",
    "is_knot_closure",
    "positive_braid_genus",
    "reduced_burau",
    "burau_matrix_det",
    "alexander_of_closure",
    "parse_braid",
]


class NotAKnotError(ValueError):
    """The braid closure has more than one component."""


class NonPositiveWordError(ValueError):
    """An operation restricted to positive braid words met an inverse letter."""


@dataclass(frozen=True)
class BraidWord:
    """
    A word in the braid group B_strands: letter i means sigma_i, -i means
    sigma_i^{-1}, with 1 <= i <= strands - 1.  The empty word is allowed.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} is out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Whitespace- or comma-separated signed generator indices."""
    fields = [f for f in re.split(r"[\s,]+", text.strip()) if f]
    try:
        letters = tuple(int(f) for f in fields)
    except ValueError:
        raise ValueError(f"bad braid word {text!r}") from None
    return BraidWord(strands, letters)


def closure_permutation(b: BraidWord) -> tuple[int, ...]:
    """
    The underlying permutation of the braid: entry j-1 is where the strand
    entering at position j exits (1-based positions), composing the
    transpositions (i, i+1) in word order.
    """
    pos = list(range(b.strands + 1))  # pos[p] = strand currently at position p
    for x in b.letters:
        i = abs(x)
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    out = [0] * b.strands
    for p in range(1, b.strands + 1):
        out[pos[p] - 1] = p
    return tuple(out)


def is_knot_closure(b: BraidWord) -> bool:
    """True iff the closure is a knot, i.e. the permutation is one full cycle."""
    perm = closure_permutation(b)
    seen = 1
    j = perm[0]
    while j != 1:
        j = perm[j - 1]
        seen += 1
    return seen == b.strands


def positive_braid_genus(b: BraidWord) -> int:
    """
    Seifert genus of the closure of a positive braid word, from the Euler
    characteristic of the fiber surface: g = (letters - strands + 1) / 2.
    """
    if not b.is_positive():
        raise NonPositiveWordError("genus formula requires a positive word")
    if not is_knot_closure(b):
        raise NotAKnotError("closure is not a knot")
    return (len(b.letters) - b.strands + 1) // 2


_T = LaurentPoly({1: 1})
_ZERO = LaurentPoly()


def reduced_burau(b: BraidWord) -> list[list[LaurentPoly]]:
    """
    The (strands-1) x (strands-1) reduced Burau matrix of the word, in the
    convention of the module docstring.  Inverse letters use the exact
    inverse generator matrices.
    """
    m = b.strands - 1
    rows = [[LaurentPoly.one() if r == c else _ZERO for c in range(m)] for r in range(m)]
    for x in b.letters:
        ci = abs(x) - 1
        for row in rows:
            left = row[ci - 1] if ci > 0 else _ZERO
            right = row[ci + 1] if ci + 1 < m else _ZERO
            if x > 0:
                row[ci] = (left - row[ci]).shift(1) + right
            else:
                row[ci] = left + (right - row[ci]).shift(-1)
    return rows


def burau_matrix_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """
    Determinant of a small matrix over the Laurent polynomial ring, by
    Laplace expansion with memoized minors (the matrices here are at most
    5x5, so clarity beats asymptotics).
    """
    m = len(rows)
    memo: dict[tuple[int, ...], LaurentPoly] = {(): LaurentPoly.one()}

    def minor(cols: tuple[int, ...]) -> LaurentPoly:
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = m - len(cols)
        acc = LaurentPoly()
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if entry:
                term = entry * minor(cols[:k] + cols[k + 1 :])
                acc = acc + term if k % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(tuple(range(m)))


def alexander_of_closure(b: BraidWord) -> LaurentPoly:
    """
    Alexander polynomial of the knot obtained by closing the braid,
    normalized to minimum exponent 0 and positive constant term:

        det(burau(b) - I) * (t - 1) / (t^strands - 1)

    computed with exact division.  A division failure would signal a Burau
    convention bug, so it is raised, never truncated.
    """
    if not is_knot_closure(b):
        raise NotAKnotError("closure is not a knot; Alexander route needs one component")
    rows = reduced_burau(b)
    for i in range(len(rows)):
        rows[i][i] = rows[i][i] - 1
    d = burau_matrix_det(rows)
    num = d * LaurentPoly({1: 1, 0: -1})
    den = LaurentPoly({b.strands: 1, 0: -1})
    try:
        quo = num.divide_exact(den)
    except NotDivisibleError as exc:  # pragma: no cover - convention guard
        raise NotDivisibleError(f"Burau determinant not divisible by t^{b.strands}-1") from exc
    return quo.normalize_units()
