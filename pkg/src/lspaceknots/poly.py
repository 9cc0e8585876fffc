"""
Exact Laurent polynomial arithmetic over the integers.

A Laurent polynomial is stored densely as a minimum exponent together with a
coefficient tuple running from that exponent upward, trimmed so that the
first and last coefficients are nonzero.  The zero polynomial is the empty
tuple.  Coefficients are plain Python ints, so there is no overflow at any
degree; rationals produced by evaluation are ``fractions.Fraction``.

Two polynomials are equal iff their nonzero terms agree, which the trimmed
dense form makes structural.  All values are immutable after construction.

Multiplication of large operands is done by Kronecker substitution: pack the
coefficients into one big integer with a digit width that provably exceeds
every coefficient of the product, multiply the integers, and unpack.  This
is exact, and turns the inner loop into CPython's native bigint multiply.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class ZeroPolynomialError(ValueError):
    """Operation undefined for the zero polynomial."""


class PolynomialSizeError(RuntimeError):
    """A result would exceed the configured term guard."""


_max_terms = 1_000_000


def set_max_terms(limit: int) -> None:
    """Abort any polynomial construction whose dense span exceeds ``limit``."""
    global _max_terms
    if limit < 1:
        raise ValueError("term guard must be positive")
    _max_terms = limit


def max_terms() -> int:
    return _max_terms


# Schoolbook multiplication below this la*lb product size; Kronecker above.
_KRONECKER_CUTOFF = 4096


def _kronecker_mul(a: list[int], b: list[int]) -> list[int]:
    # Every product coefficient is a sum of a_i*b_j along one anti-diagonal,
    # so |c_k| <= min(sum|a| * max|b|, sum|b| * max|a|).  Two extra bits give
    # room for the sign offset used while unpacking.
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    asum = sum(map(abs, a))
    bsum = sum(map(abs, b))
    bound = min(asum * bmax, bsum * amax)
    bw = (bound.bit_length() + 2 + 7) // 8
    digit_bits = 8 * bw
    half = 1 << (digit_bits - 1)

    def encode(coeffs: list[int]) -> int:
        pos = b"".join((c if c > 0 else 0).to_bytes(bw, "little") for c in coeffs)
        neg = b"".join((-c if c < 0 else 0).to_bytes(bw, "little") for c in coeffs)
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    n_out = len(a) + len(b) - 1
    product = encode(a) * encode(b)
    # Shift every balanced digit into [0, 2^digit_bits) so that byte slicing
    # recovers them without borrows.
    offset = int.from_bytes(half.to_bytes(bw, "little") * n_out, "little")
    raw = (product + offset).to_bytes(n_out * bw, "little")
    return [
        int.from_bytes(raw[i * bw : (i + 1) * bw], "little") - half
        for i in range(n_out)
    ]


def _schoolbook_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


class LaurentPoly:
    """
    A Laurent polynomial in one variable t with integer coefficients.

    Build one from an exponent -> coefficient mapping, or from a coefficient
    list via :meth:`from_coeffs`:

    >>> LaurentPoly({0: 1, 1: -1}) * LaurentPoly.from_coeffs([1, 1, 1, 1, 1, 1])
    LaurentPoly('1 - t^6')
    >>> LaurentPoly({-2: 3, 0: 1}).degree
    0
    """

    __slots__ = ("_min", "_coeffs")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if not terms:
            self._min = 0
            self._coeffs: tuple[int, ...] = ()
            return
        exps = [e for e, c in terms.items() if c]
        if not exps:
            self._min = 0
            self._coeffs = ()
            return
        lo, hi = min(exps), max(exps)
        _check_span(hi - lo + 1)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            if c:
                coeffs[e - lo] = c
        self._min = lo
        self._coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, min_exp: int, coeffs: list[int]) -> "LaurentPoly":
        """Trim and wrap a dense coefficient list starting at ``min_exp``."""
        lo, hi = 0, len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        p = object.__new__(cls)
        if lo == hi:
            p._min = 0
            p._coeffs = ()
        else:
            _check_span(hi - lo)
            p._min = min_exp + lo
            p._coeffs = tuple(coeffs[lo:hi])
        return p

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], min_exp: int = 0) -> "LaurentPoly":
        """Coefficients listed from ``min_exp`` upward."""
        return cls._raw(min_exp, list(coeffs))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no minimum exponent")
        return self._min

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return self._min + len(self._coeffs) - 1

    @property
    def terms(self) -> dict[int, int]:
        return {self._min + i: c for i, c in enumerate(self._coeffs) if c}

    def coeff(self, exp: int) -> int:
        i = exp - self._min
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._min == other._min and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._min, self._coeffs))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for i, c in enumerate(self._coeffs):
            if c:
                yield self._min + i, c

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not self._coeffs:
            return other
        if not other._coeffs:
            return self
        lo = min(self._min, other._min)
        hi = max(self._min + len(self._coeffs), other._min + len(other._coeffs))
        out = [0] * (hi - lo)
        out[self._min - lo : self._min - lo + len(self._coeffs)] = self._coeffs
        base = other._min - lo
        for j, c in enumerate(other._coeffs):
            if c:
                out[base + j] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        p = object.__new__(LaurentPoly)
        p._min = self._min
        p._coeffs = tuple(-c for c in self._coeffs)
        return p

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            p = object.__new__(LaurentPoly)
            p._min = self._min
            p._coeffs = tuple(c * other for c in self._coeffs)
            return p
        if not self._coeffs or not other._coeffs:
            return LaurentPoly()
        a, b = list(self._coeffs), list(other._coeffs)
        if len(a) * len(b) <= _KRONECKER_CUTOFF:
            out = _schoolbook_mul(a, b)
        else:
            out = _kronecker_mul(a, b)
        return LaurentPoly._raw(self._min + other._min, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k (free: only the minimum exponent moves)."""
        if not self._coeffs:
            return self
        p = object.__new__(LaurentPoly)
        p._min = self._min + k
        p._coeffs = self._coeffs
        return p

    # -- the operations the rest of the library is built on -----------------

    def divide_exact(self, den: "LaurentPoly") -> "LaurentPoly":
        """
        Return q with q * den == self, by long division from the lowest
        exponent.  A nonzero remainder raises :class:`NotDivisibleError`:
        it signals a wrong input polynomial or a convention error, never
        something to truncate silently.

        >>> num = LaurentPoly({0: 1, 6: -1})
        >>> num.divide_exact(LaurentPoly({0: 1, 1: -1}))
        LaurentPoly('1 + t + t^2 + t^3 + t^4 + t^5')
        """
        if not den._coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._coeffs:
            return LaurentPoly()
        a = list(self._coeffs)
        b = den._coeffs
        if len(a) < len(b):
            raise NotDivisibleError(f"{self!r} is not divisible by {den!r}")
        b0 = b[0]
        qlen = len(a) - len(b) + 1
        q = [0] * qlen
        for i in range(qlen):
            r = a[i]
            if r == 0:
                continue
            c, rem = divmod(r, b0)
            if rem:
                raise NotDivisibleError(f"{self!r} is not divisible by {den!r}")
            q[i] = c
            for j in range(1, len(b)):
                a[i + j] -= c * b[j]
        if any(a[qlen:]):
            raise NotDivisibleError(f"{self!r} is not divisible by {den!r}")
        return LaurentPoly._raw(self._min - den._min, q)

    def normalize_units(self) -> "LaurentPoly":
        """
        The canonical representative of this polynomial up to units +-t^k:
        minimum exponent 0 and positive constant term.

        >>> LaurentPoly({-2: -1, 0: 2}).normalize_units()
        LaurentPoly('1 - 2t^2')
        """
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no unit normalization")
        coeffs = self._coeffs if self._coeffs[0] > 0 else tuple(-c for c in self._coeffs)
        p = object.__new__(LaurentPoly)
        p._min = 0
        p._coeffs = coeffs
        return p

    def evaluate(self, x: int) -> Fraction:
        """Exact value at an integer point; x = 0 needs no negative exponents."""
        if not self._coeffs:
            return Fraction(0)
        if x == 0:
            if self._min < 0:
                raise ZeroDivisionError("zero base with negative exponents")
            return Fraction(self.coeff(0))
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return Fraction(acc) * Fraction(x) ** self._min

    def __call__(self, x: int) -> Fraction:
        return self.evaluate(x)

    def series_quotient_coeffs(self, n: int) -> list[int]:
        """
        Coefficients c_0..c_n of the power series self / (1 - t); c_j is the
        partial sum of this polynomial's coefficients up to degree j.

        >>> LaurentPoly.from_coeffs([1, -1, 1, -1, 1, -1, 1]).series_quotient_coeffs(7)
        [1, 0, 1, 0, 1, 0, 1, 1]
        """
        if self._coeffs and self._min < 0:
            raise ValueError("series expansion needs minimum exponent >= 0")
        out = []
        acc = 0
        for j in range(n + 1):
            acc += self.coeff(j)
            out.append(acc)
        return out

    def is_palindromic(self) -> bool:
        """Whether t^(min+deg) * p(1/t) == p(t), the symmetry of knot polynomials."""
        if not self._coeffs:
            return True
        return self._coeffs == self._coeffs[::-1]

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _check_span(span: int) -> None:
    if span > _max_terms:
        raise PolynomialSizeError(
            f"polynomial span {span} exceeds the term guard {_max_terms}"
        )


class MultiPoly3:
    """
    A Laurent polynomial in three variables x, y, z, stored sparsely as a
    map from exponent triples to nonzero integer coefficients.  Only the
    operations needed to specialize multivariable link polynomials to one
    variable are provided.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        self._terms: dict[tuple[int, int, int], int] = {
            e: c for e, c in (terms or {}).items() if c
        }

    @classmethod
    def monomial(cls, ex: int, ey: int, ez: int, coeff: int = 1) -> "MultiPoly3":
        return cls({(ex, ey, ez): coeff})

    @property
    def terms(self) -> dict[tuple[int, int, int], int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly3):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "MultiPoly3") -> "MultiPoly3":
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly3(out)

    def __neg__(self) -> "MultiPoly3":
        return MultiPoly3({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly3") -> "MultiPoly3":
        return self + (-other)

    def __mul__(self, other: "MultiPoly3") -> "MultiPoly3":
        out: dict[tuple[int, int, int], int] = {}
        for (ax, ay, az), ac in self._terms.items():
            for (bx, by, bz), bc in other._terms.items():
                e = (ax + bx, ay + by, az + bz)
                s = out.get(e, 0) + ac * bc
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly3(out)

    def substitute_monomials(self, a: int, b: int, c: int) -> LaurentPoly:
        """
        Specialize x -> t^a, y -> t^b, z -> t^c.  Coefficients of colliding
        exponents are summed and zero terms dropped.

        >>> MultiPoly3({(1, 0, 0): 1, (0, 1, 0): 1}).substitute_monomials(1, 1, 0)
        LaurentPoly('2t')
        """
        out: dict[int, int] = {}
        for (ex, ey, ez), coeff in self._terms.items():
            e = a * ex + b * ey + c * ez
            out[e] = out.get(e, 0) + coeff
        return LaurentPoly(out)

    def __repr__(self) -> str:
        if not self._terms:
            return "MultiPoly3('0')"
        bits = []
        for (ex, ey, ez), c in sorted(self._terms.items()):
            mono = "".join(
                f"{v}^{e}" if e not in (0, 1) else (v if e == 1 else "")
                for v, e in (("x", ex), ("y", ey), ("z", ez))
            )
            bits.append(f"{c:+d}{mono}")
        return f"MultiPoly3('{' '.join(bits)}')"


# -- text format used by the CLI and the tests ------------------------------


def format_poly(p: LaurentPoly) -> str:
    """Human form in ascending exponents, e.g. ``1 - t + t^2``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exp, c in p:
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            var = "t" if exp == 1 else f"t^{exp}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def parse_poly(text: str) -> LaurentPoly:
    """
    Parse the CLI polynomial format: comma-separated ``exponent:coefficient``
    pairs, or a plain coefficient list from degree 0 upward.

    >>> parse_poly("1,-1,1,-1,1,-1,1") == parse_poly("0:1, 1:-1, 2:1, 3:-1, 4:1, 5:-1, 6:1")
    True
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    fields = [f.strip() for f in text.split(",") if f.strip()]
    if any(":" in f for f in fields):
        terms: dict[int, int] = {}
        for f in fields:
            e_s, _, c_s = f.partition(":")
            try:
                e, c = int(e_s), int(c_s)
            except ValueError:
                raise ValueError(f"bad exponent:coefficient pair {f!r}") from None
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)
    try:
        coeffs = [int(f) for f in fields]
    except ValueError:
        raise ValueError(f"bad coefficient list {text!r}") from None
    return LaurentPoly.from_coeffs(coeffs)
